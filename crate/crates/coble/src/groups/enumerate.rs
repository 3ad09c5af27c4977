//! Conjugacy classes of subgroups of the symmetric group on six letters.
//!
//! Classes are grown from the trivial group: every class representative is
//! extended by each element outside it, and a new subgroup is kept when none
//! of its conjugates has been seen. Every subgroup arises from a chain of
//! one-element extensions, so this reaches all classes.

use std::collections::HashSet;
use std::sync::OnceLock;

use super::perm::{Perm, ORDER};
use super::subgroup::{ElemSet, Subgroup};

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// The conjugate with the lexicographically least element list.
    pub rep: Subgroup,
    /// Number of subgroups in the class.
    pub size: usize,
}

fn conjugates(set: &ElemSet) -> Vec<ElemSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c in 0..ORDER {
        let k = set.conjugate_by(c);
        if seen.insert(k) {
            out.push(k);
        }
    }
    out
}

fn canonical(conj: &[ElemSet]) -> ElemSet {
    *conj
        .iter()
        .min_by(|a, b| a.iter().cmp(b.iter()))
        .expect("nonempty class")
}

fn compute_classes() -> Vec<SubgroupClass> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut classes: Vec<(ElemSet, usize)> = Vec::new();
    let trivial = Subgroup::trivial();
    seen.insert(*trivial.set());
    classes.push((*trivial.set(), 1));
    let mut next = 0;
    while next < classes.len() {
        let h = Subgroup::from_set(classes[next].0);
        next += 1;
        for g in 0..ORDER {
            if h.set().contains(g) {
                continue;
            }
            let k = h.extend(&Perm::from_index(g));
            if seen.contains(k.set()) {
                continue;
            }
            let conj = conjugates(k.set());
            seen.extend(conj.iter().copied());
            classes.push((canonical(&conj), conj.len()));
        }
    }
    let mut out: Vec<SubgroupClass> =
        classes.into_iter().map(|(set, size)| SubgroupClass { rep: Subgroup::from_set(set), size }).collect();
    out.sort_by(|a, b| {
        (a.rep.order(), a.rep.census())
            .cmp(&(b.rep.order(), b.rep.census()))
            .then_with(|| a.rep.indices().cmp(b.rep.indices()))
    });
    out
}

/// Representatives of all conjugacy classes of subgroups, ordered by
/// (order, census, element list). Computed once.
pub fn subgroup_classes() -> &'static [SubgroupClass] {
    static CLASSES: OnceLock<Vec<SubgroupClass>> = OnceLock::new();
    CLASSES.get_or_init(compute_classes)
}

/// Index of the class containing `h`.
pub fn class_of(h: &Subgroup) -> usize {
    let classes = subgroup_classes();
    let conj = conjugates(h.set());
    let canon = canonical(&conj);
    classes.iter().position(|c| *c.rep.set() == canon).expect("every subgroup lies in a class")
}

/// Independent count for small orders: collects every subgroup of order at
/// most `max_order` (no conjugacy reduction during the search), then groups
/// them into conjugacy classes. Returns `(subgroups, classes)` per order.
pub fn brute_force_counts(max_order: usize) -> Vec<(usize, usize, usize)> {
    let mut all: HashSet<ElemSet> = HashSet::new();
    let mut frontier = vec![*Subgroup::trivial().set()];
    all.insert(frontier[0]);
    while let Some(s) = frontier.pop() {
        let h = Subgroup::from_set(s);
        for g in 0..ORDER {
            if s.contains(g) {
                continue;
            }
            let k = h.extend(&Perm::from_index(g));
            if k.order() <= max_order && all.insert(*k.set()) {
                frontier.push(*k.set());
            }
        }
    }
    let mut by_order: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    let mut assigned: HashSet<ElemSet> = HashSet::new();
    let mut sorted: Vec<ElemSet> = all.into_iter().collect();
    sorted.sort_by(|a, b| a.iter().cmp(b.iter()));
    for s in &sorted {
        let e = by_order.entry(s.len()).or_default();
        e.0 += 1;
        if assigned.contains(s) {
            continue;
        }
        e.1 += 1;
        for c in 0..ORDER {
            assigned.insert(s.conjugate_by(c));
        }
    }
    by_order.into_iter().map(|(o, (n, c))| (o, n, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifty_six_classes() {
        let classes = subgroup_classes();
        assert_eq!(classes.len(), 56);
        let total: usize = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, 1455);
        assert_eq!(classes.iter().filter(|c| c.rep.order() == 720).count(), 1);
        assert_eq!(classes.iter().filter(|c| c.rep.order() == 120).count(), 2);
    }
}
