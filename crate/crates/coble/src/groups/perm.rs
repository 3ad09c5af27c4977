//! Permutations of {1,...,6}, stored 0-based, with a precomputed
//! multiplication table over the 720 elements of the symmetric group.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::GroupError;

pub const N: usize = 6;
pub const ORDER: usize = 720;

/// The eleven cycle types of 6, in the order used for censuses.
pub const CYCLE_TYPES: [&[usize]; 11] = [
    &[1, 1, 1, 1, 1, 1],
    &[2, 1, 1, 1, 1],
    &[2, 2, 1, 1],
    &[2, 2, 2],
    &[3, 1, 1, 1],
    &[3, 2, 1],
    &[3, 3],
    &[4, 1, 1],
    &[4, 2],
    &[5, 1],
    &[6],
];

/// A bijection of {0..5}; `self.0[i]` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub [u8; N]);

impl Perm {
    pub const fn identity() -> Self {
        Perm([0, 1, 2, 3, 4, 5])
    }

    /// From 1-based images `[g(1), ..., g(6)]`.
    pub fn from_images(images: &[usize]) -> Result<Self, GroupError> {
        if images.len() != N {
            return Err(GroupError::NotAPermutation(format!("{images:?}")));
        }
        let mut out = [0u8; N];
        let mut seen = [false; N];
        for (i, &x) in images.iter().enumerate() {
            if !(1..=N).contains(&x) || seen[x - 1] {
                return Err(GroupError::NotAPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
            out[i] = (x - 1) as u8;
        }
        Ok(Perm(out))
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut out = Perm::identity().0;
        let mut used = [false; N];
        for c in cycles {
            for &x in c.iter() {
                if !(1..=N).contains(&x) || used[x - 1] {
                    return Err(GroupError::NotAPermutation(format!("{cycles:?}")));
                }
                used[x - 1] = true;
            }
            for k in 0..c.len() {
                out[c[k] - 1] = (c[(k + 1) % c.len()] - 1) as u8;
            }
        }
        Ok(Perm(out))
    }

    /// Parses cycle notation; panics on malformed literals. For trusted constants.
    pub fn c(s: &str) -> Self {
        s.parse().unwrap_or_else(|e| panic!("bad permutation literal {s}: {e}"))
    }

    /// Image of the 0-based point `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self * o` applies `o` first.
    pub fn compose(&self, o: &Perm) -> Perm {
        let mut out = [0u8; N];
        for (i, x) in out.iter_mut().enumerate() {
            *x = self.0[o.0[i] as usize];
        }
        Perm(out)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = [0u8; N];
        for i in 0..N {
            out[self.0[i] as usize] = i as u8;
        }
        Perm(out)
    }

    pub fn pow(&self, k: u32) -> Perm {
        (0..k).fold(Perm::identity(), |acc, _| acc.compose(self))
    }

    /// `self * g * self^-1`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        self.compose(g).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm::identity()
    }

    /// Disjoint cycles of length > 1, each starting at its least point, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; N];
        let mut out = Vec::new();
        for s in 0..N {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut x = self.at(s);
            while x != s {
                seen[x] = true;
                cyc.push(x);
                x = self.at(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, decreasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = t.iter().sum();
        t.extend(std::iter::repeat_n(1, N - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Position of the cycle type in [`CYCLE_TYPES`].
    pub fn cycle_type_index(&self) -> usize {
        let t = self.cycle_type();
        CYCLE_TYPES.iter().position(|c| *c == t.as_slice()).expect("every cycle type is listed")
    }

    pub fn order(&self) -> u32 {
        self.cycles().iter().fold(1u32, |acc, c| num_integer::lcm(acc, c.len() as u32))
    }

    /// +1 for even, -1 for odd permutations.
    pub fn sign(&self) -> i32 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1;
        if odd {
            -1
        } else {
            1
        }
    }

    /// Lexicographic rank in 0..720.
    pub fn index(&self) -> usize {
        let mut rank = 0;
        let mut used = [false; N];
        for i in 0..N {
            let v = self.0[i] as usize;
            let smaller = (0..v).filter(|&k| !used[k]).count();
            rank = rank * (N - i) + smaller;
            used[v] = true;
        }
        rank
    }

    pub fn from_index(mut idx: usize) -> Perm {
        let mut digits = [0usize; N];
        for i in (0..N).rev() {
            digits[i] = idx % (N - i);
            idx /= N - i;
        }
        let mut avail: Vec<u8> = (0..N as u8).collect();
        let mut out = [0u8; N];
        for i in 0..N {
            out[i] = avail.remove(digits[i]);
        }
        Perm(out)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = GroupError;

    /// Accepts `()`, `(1 2)(3 4 5)` and comma-separated cycles `(1,2)`.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::NotAPermutation(s.to_string());
        let t = s.trim();
        if t.is_empty() || t == "()" || t == "e" {
            return Ok(Perm::identity());
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for chunk in t.split(')') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let body = chunk.strip_prefix('(').ok_or_else(bad)?;
            let pts = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(&refs)
    }
}

/// All 720 permutations, in index order.
pub fn all_perms() -> &'static [Perm] {
    static ALL: OnceLock<Vec<Perm>> = OnceLock::new();
    ALL.get_or_init(|| (0..ORDER).map(Perm::from_index).collect())
}

/// Multiplication table: `mul(a, b)` is the index of `perm(a) * perm(b)`.
pub struct Table {
    mul: Vec<u16>,
    inv: Vec<u16>,
    sign: Vec<i8>,
    ctype: Vec<u8>,
}

impl Table {
    pub fn get() -> &'static Table {
        static T: OnceLock<Table> = OnceLock::new();
        T.get_or_init(|| {
            let all = all_perms();
            let mut mul = vec![0u16; ORDER * ORDER];
            for (a, pa) in all.iter().enumerate() {
                for (b, pb) in all.iter().enumerate() {
                    mul[a * ORDER + b] = pa.compose(pb).index() as u16;
                }
            }
            let inv = all.iter().map(|p| p.inverse().index() as u16).collect();
            let sign = all.iter().map(|p| p.sign() as i8).collect();
            let ctype = all.iter().map(|p| p.cycle_type_index() as u8).collect();
            Table { mul, inv, sign, ctype }
        })
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * ORDER + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn conj(&self, c: usize, g: usize) -> usize {
        self.mul(self.mul(c, g), self.inv(c))
    }

    #[inline]
    pub fn sign(&self, a: usize) -> i32 {
        self.sign[a] as i32
    }

    #[inline]
    pub fn cycle_type(&self, a: usize) -> usize {
        self.ctype[a] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip() {
        for i in 0..ORDER {
            assert_eq!(Perm::from_index(i).index(), i);
        }
        assert_eq!(Perm::identity().index(), 0);
    }

    #[test]
    fn cycle_notation() {
        let p = Perm::c("(1 2)(3 4 5)");
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(p.sign(), -1);
        assert_eq!(p.order(), 6);
        assert!("(1 1)".parse::<Perm>().is_err());
    }

    #[test]
    fn composition_applies_right_first() {
        let a = Perm::c("(1 2)");
        let b = Perm::c("(2 3)");
        // 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(a.compose(&b), Perm::c("(1 2 3)"));
    }
}
