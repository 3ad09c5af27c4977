//! Subgroups of the symmetric group on six letters as explicit element sets.

use std::collections::VecDeque;
use std::fmt;

use super::perm::{Perm, Table, CYCLE_TYPES, ORDER};

const WORDS: usize = ORDER.div_ceil(64);

/// A set of elements of the symmetric group, as a 720-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub const fn empty() -> Self {
        ElemSet([0; WORDS])
    }

    pub fn full() -> Self {
        let mut s = Self::empty();
        for i in 0..ORDER {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let had = self.contains(i);
        self.0[i / 64] |= 1 << (i % 64);
        !had
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, o: &ElemSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, o: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&o.0) {
            *a &= b;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..ORDER).filter(move |&i| self.contains(i))
    }

    /// `c * self * c^-1`.
    pub fn conjugate_by(&self, c: usize) -> ElemSet {
        let t = Table::get();
        let mut out = ElemSet::empty();
        for g in self.iter() {
            out.insert(t.conj(c, g));
        }
        out
    }
}

/// A subgroup, stored by element set with the generators it was built from.
#[derive(Clone)]
pub struct Subgroup {
    set: ElemSet,
    elems: Vec<usize>,
    gens: Vec<Perm>,
}

impl PartialEq for Subgroup {
    fn eq(&self, o: &Self) -> bool {
        self.set == o.set
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> of order {}", self.order())
    }
}

/// Closure of a set of generator indices.
fn closure(gens: &[usize], start: ElemSet) -> ElemSet {
    let t = Table::get();
    let mut set = start;
    set.insert(0);
    let mut queue: VecDeque<usize> = set.iter().collect();
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = t.mul(x, g);
            if set.insert(y) {
                queue.push_back(y);
            }
        }
    }
    set
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generate(gens: &[Perm]) -> Subgroup {
        let idx: Vec<usize> = gens.iter().map(|g| g.index()).collect();
        let set = closure(&idx, ElemSet::empty());
        Subgroup::from_parts(set, gens.to_vec())
    }

    /// Parses a comma-free list of generators such as `["(1 2)", "(1 2 3 4 5 6)"]`.
    pub fn from_cycles(gens: &[&str]) -> Subgroup {
        Subgroup::generate(&gens.iter().map(|s| Perm::c(s)).collect::<Vec<_>>())
    }

    pub(crate) fn from_parts(set: ElemSet, gens: Vec<Perm>) -> Subgroup {
        let elems: Vec<usize> = set.iter().collect();
        debug_assert!(ORDER.is_multiple_of(elems.len()));
        Subgroup { set, elems, gens }
    }

    /// Builds a subgroup from an element set known to be closed.
    pub fn from_set(set: ElemSet) -> Subgroup {
        let gens = small_generating_set(&set);
        Subgroup::from_parts(set, gens)
    }

    pub fn symmetric() -> Subgroup {
        Subgroup::from_cycles(&["(1 2)", "(1 2 3 4 5 6)"])
    }

    pub fn alternating() -> Subgroup {
        Subgroup::from_cycles(&["(1 2 3)", "(2 3 4 5 6)"])
    }

    pub fn trivial() -> Subgroup {
        Subgroup::generate(&[])
    }

    /// Adjoins one more element.
    pub fn extend(&self, g: &Perm) -> Subgroup {
        if self.contains(g) {
            return self.clone();
        }
        let mut gens = self.gens.clone();
        gens.push(*g);
        let idx: Vec<usize> = gens.iter().map(|p| p.index()).collect();
        Subgroup::from_parts(closure(&idx, self.set), gens)
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn indices(&self) -> &[usize] {
        &self.elems
    }

    pub fn elements(&self) -> Vec<Perm> {
        self.elems.iter().map(|&i| Perm::from_index(i)).collect()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.set.contains(g.index())
    }

    pub fn is_subgroup_of(&self, o: &Subgroup) -> bool {
        self.set.is_subset(&o.set)
    }

    pub fn conjugate(&self, c: &Perm) -> Subgroup {
        let ci = c.index();
        let set = self.set.conjugate_by(ci);
        let gens = self.gens.iter().map(|g| c.conjugate(g)).collect();
        Subgroup::from_parts(set, gens)
    }

    pub fn intersection(&self, o: &Subgroup) -> Subgroup {
        Subgroup::from_set(self.set.intersection(&o.set))
    }

    /// Number of elements of each cycle type, indexed as [`CYCLE_TYPES`].
    pub fn census(&self) -> [u16; 11] {
        let t = Table::get();
        let mut c = [0u16; 11];
        for &g in &self.elems {
            c[t.cycle_type(g)] += 1;
        }
        c
    }

    /// Census as text, e.g. `1:1 2:3 3:2` (fixed points omitted from the labels).
    pub fn census_label(&self) -> String {
        let c = self.census();
        let mut parts = Vec::new();
        for (k, ct) in CYCLE_TYPES.iter().enumerate() {
            if c[k] == 0 {
                continue;
            }
            let moved: Vec<String> = ct.iter().filter(|&&x| x > 1).map(|x| x.to_string()).collect();
            let label = if moved.is_empty() { "1".to_string() } else { moved.join(",") };
            parts.push(format!("[{label}]x{}", c[k]));
        }
        parts.join(" ")
    }

    pub fn is_abelian(&self) -> bool {
        let t = Table::get();
        self.gens.iter().all(|a| {
            let ai = a.index();
            self.gens.iter().all(|b| {
                let bi = b.index();
                t.mul(ai, bi) == t.mul(bi, ai)
            })
        })
    }

    pub fn in_alternating(&self) -> bool {
        let t = Table::get();
        self.elems.iter().all(|&g| t.sign(g) == 1)
    }

    /// Orbits on {0..5}, each sorted, ordered by least element.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 6];
        let mut out = Vec::new();
        for s in 0..6 {
            if seen[s] {
                continue;
            }
            let mut orb: Vec<usize> = Vec::new();
            for g in self.elements() {
                let x = g.at(s);
                if !seen[x] {
                    seen[x] = true;
                    orb.push(x);
                }
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.point_orbits().len() == 1
    }

    /// Whether `self` and `o` are conjugate in the full symmetric group.
    pub fn is_conjugate_to(&self, o: &Subgroup) -> bool {
        if self.order() != o.order() || self.census() != o.census() {
            return false;
        }
        (0..ORDER).any(|c| self.set.conjugate_by(c) == o.set)
    }

    /// Checks closure under products and inverses; used as a self-test.
    pub fn is_closed(&self) -> bool {
        let t = Table::get();
        self.set.contains(0)
            && self.elems.iter().all(|&a| self.set.contains(t.inv(a)))
            && self.elems.iter().all(|&a| self.elems.iter().all(|&b| self.set.contains(t.mul(a, b))))
    }

    /// The normalizer in the full symmetric group.
    pub fn normalizer(&self) -> Subgroup {
        let mut set = ElemSet::empty();
        for c in 0..ORDER {
            if self.set.conjugate_by(c) == self.set {
                set.insert(c);
            }
        }
        Subgroup::from_set(set)
    }

    /// Conjugacy classes of the subgroup itself, each sorted by index.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let t = Table::get();
        let mut seen = ElemSet::empty();
        let mut out = Vec::new();
        for &g in &self.elems {
            if seen.contains(g) {
                continue;
            }
            let mut class = ElemSet::empty();
            for &h in &self.elems {
                class.insert(t.conj(h, g));
            }
            for x in class.iter() {
                seen.insert(x);
            }
            out.push(class.iter().collect());
        }
        out
    }
}

/// Greedy generating set: repeatedly adjoin the least element not yet generated.
fn small_generating_set(set: &ElemSet) -> Vec<Perm> {
    let mut gens: Vec<usize> = Vec::new();
    let mut cur = closure(&[], ElemSet::empty());
    // prefer elements of large order so that few generators are needed
    let mut cands: Vec<usize> = set.iter().collect();
    cands.sort_by_key(|&g| (std::cmp::Reverse(Perm::from_index(g).order()), g));
    for g in cands {
        if cur == *set {
            break;
        }
        if !cur.contains(g) {
            gens.push(g);
            cur = closure(&gens, cur);
        }
    }
    gens.into_iter().map(Perm::from_index).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_generators() {
        assert_eq!(Subgroup::symmetric().order(), 720);
        assert_eq!(Subgroup::alternating().order(), 360);
        assert_eq!(Subgroup::trivial().order(), 1);
        let v4 = Subgroup::from_cycles(&["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian() && v4.in_alternating() && v4.is_closed());
    }

    #[test]
    fn from_set_regenerates() {
        let s5 = Subgroup::from_cycles(&["(1 2)", "(1 2 3 4 5)"]);
        let again = Subgroup::from_set(*s5.set());
        assert_eq!(Subgroup::generate(again.generators()), s5);
        assert!(again.generators().len() <= 3);
    }
}
