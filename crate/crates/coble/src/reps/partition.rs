//! Partitions and Murnaghan-Nakayama character values of symmetric groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use super::RepError;

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order: (n), (n-1,1), ...
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parses `3,1,1`, `(3,1,1)`, `R(3,1,1)` or exponent forms such as `3,1^3`.
    pub fn parse(s: &str) -> Result<Partition, RepError> {
        let t = s.trim().trim_start_matches('R').trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for item in t.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| RepError::BadPartition(s.into()))?),
                None => (item, 1),
            };
            let b: usize = base.parse().map_err(|_| RepError::BadPartition(s.into()))?;
            parts.extend(std::iter::repeat_n(b, exp));
        }
        let p = Partition::new(parts);
        if p.0.is_empty() {
            return Err(RepError::BadPartition(s.into()));
        }
        Ok(p)
    }

    /// Label in the compact form `R(3,1^3)`.
    pub fn label(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let run = j - i;
            if run > 1 && (self.0[i] == 1 || run > 2) {
                out.push(format!("{}^{}", self.0[i], run));
            } else {
                out.extend(std::iter::repeat_n(self.0[i].to_string(), run));
            }
            i = j;
        }
        format!("R({})", out.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "R({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Character value via border-strip removal on beta-sets: removing a strip
/// of length `r` moves a bead from `b` to `b - r`, with sign `(-1)^height`,
/// the height being the number of beads strictly between.
fn mn_beta(beta: &mut Vec<usize>, mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for k in 0..beta.len() {
        let b = beta[k];
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        beta[k] = b - r;
        let v = mn_beta(beta, rest);
        beta[k] = b;
        total += if height % 2 == 0 { v } else { -v };
    }
    total
}

/// `chi_lambda(mu)`, where `mu` is a cycle type of the same weight.
pub fn mn_character(lambda: &Partition, mu: &[usize]) -> Result<i64, RepError> {
    let w: usize = mu.iter().sum();
    if w != lambda.weight() {
        return Err(RepError::WeightMismatch(lambda.weight(), w));
    }
    type Cache = HashMap<(Partition, Vec<usize>), i64>;
    static CACHE: Mutex<Option<Cache>> = Mutex::new(None);
    let mut mu_sorted = mu.to_vec();
    mu_sorted.sort_unstable_by(|a, b| b.cmp(a));
    let key = (lambda.clone(), mu_sorted.clone());
    if let Some(v) = CACHE.lock().unwrap().get_or_insert_with(HashMap::new).get(&key) {
        return Ok(*v);
    }
    let len = lambda.0.len();
    let mut beta: Vec<usize> = lambda.0.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let v = mn_beta(&mut beta, &mu_sorted);
    CACHE.lock().unwrap().get_or_insert_with(HashMap::new).insert(key, v);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let p = |s: &str| Partition::parse(s).unwrap();
        assert_eq!(mn_character(&p("3,2,1"), &[1; 6]).unwrap(), 16);
        assert_eq!(mn_character(&p("3,1,1"), &[1; 5]).unwrap(), 6);
        assert_eq!(mn_character(&p("6"), &[3, 2, 1]).unwrap(), 1);
        assert_eq!(mn_character(&p("1^6"), &[2, 1, 1, 1, 1]).unwrap(), -1);
        assert_eq!(mn_character(&p("5,1"), &[2, 1, 1, 1, 1]).unwrap(), 3);
        assert!(mn_character(&p("5,1"), &[2, 1]).is_err());
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::all(6).len(), 11);
        assert_eq!(Partition::all(5).len(), 7);
        let l = Partition::parse("3,1^3").unwrap();
        assert_eq!(l.parts(), &[3, 1, 1, 1]);
        assert_eq!(l.transpose(), Partition::parse("4,1,1").unwrap());
        assert_eq!(l.label(), "R(3,1^3)");
        assert_eq!(Partition::parse("2,2,2").unwrap().label(), "R(2^3)");
        assert_eq!(Partition::parse("3,3").unwrap().label(), "R(3,3)");
    }
}
