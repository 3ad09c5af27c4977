//! Duads, synthemes, synthematic totals, and the outer automorphism of the
//! symmetric group on six letters obtained from its action on the six totals.

use std::sync::OnceLock;

use super::perm::{Perm, Table, ORDER};
use super::subgroup::{ElemSet, Subgroup};
use super::GroupError;

/// A 2-subset of {0..5}, stored sorted.
pub type Duad = [usize; 2];
/// A split of {0..5} into three duads, stored as sorted duad indices.
pub type Syntheme = [usize; 3];

/// The 15 duads in lexicographic order.
pub fn duads() -> &'static [Duad] {
    static D: OnceLock<Vec<Duad>> = OnceLock::new();
    D.get_or_init(|| {
        let mut out = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                out.push([i, j]);
            }
        }
        out
    })
}

pub fn duad_index(mut d: Duad) -> usize {
    d.sort_unstable();
    duads().iter().position(|x| *x == d).expect("valid duad")
}

/// The 15 synthemes, ordered by their sorted duad-index triples.
pub fn synthemes() -> &'static [Syntheme] {
    static S: OnceLock<Vec<Syntheme>> = OnceLock::new();
    S.get_or_init(|| {
        let d = duads();
        let mut out = Vec::new();
        for a in 0..15 {
            for b in a + 1..15 {
                for c in b + 1..15 {
                    let mut pts: Vec<usize> = [d[a], d[b], d[c]].concat();
                    pts.sort_unstable();
                    pts.dedup();
                    if pts.len() == 6 {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    })
}

pub fn syntheme_index(mut s: Syntheme) -> usize {
    s.sort_unstable();
    synthemes().iter().position(|x| *x == s).expect("valid syntheme")
}

/// The six synthematic totals: five synthemes that together use every duad
/// once, ordered by their sorted syntheme-index lists.
pub fn totals() -> &'static [[usize; 5]] {
    static T: OnceLock<Vec<[usize; 5]>> = OnceLock::new();
    T.get_or_init(|| {
        let s = synthemes();
        let disjoint = |a: usize, b: usize| s[a].iter().all(|x| !s[b].contains(x));
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(start: usize, cur: &mut Vec<usize>, out: &mut Vec<[usize; 5]>, ok: &dyn Fn(usize, usize) -> bool) {
            if cur.len() == 5 {
                out.push([cur[0], cur[1], cur[2], cur[3], cur[4]]);
                return;
            }
            for k in start..15 {
                if cur.iter().all(|&c| ok(c, k)) {
                    cur.push(k);
                    go(k + 1, cur, out, ok);
                    cur.pop();
                }
            }
        }
        go(0, &mut cur, &mut out, &disjoint);
        out
    })
}

pub fn act_on_duad(g: &Perm, d: Duad) -> usize {
    duad_index([g.at(d[0]), g.at(d[1])])
}

pub fn act_on_syntheme(g: &Perm, s: Syntheme) -> usize {
    let d = duads();
    syntheme_index([act_on_duad(g, d[s[0]]), act_on_duad(g, d[s[1]]), act_on_duad(g, d[s[2]])])
}

/// The transposition swapping the two points of a duad.
pub fn duad_perm(d: Duad) -> Perm {
    let mut img = Perm::identity().0;
    img.swap(d[0], d[1]);
    Perm(img)
}

/// The product of the three transpositions of a syntheme.
pub fn syntheme_perm(s: Syntheme) -> Perm {
    let d = duads();
    s.iter().fold(Perm::identity(), |acc, &k| acc.compose(&duad_perm(d[k])))
}

/// An automorphism of the symmetric group given on all 720 elements.
#[derive(Clone)]
pub struct OuterAut {
    map: Vec<u16>,
}

impl OuterAut {
    fn from_totals() -> OuterAut {
        let tot = totals();
        let syn = synthemes();
        let map = (0..ORDER)
            .map(|gi| {
                let g = Perm::from_index(gi);
                let mut img = [0u8; 6];
                for (k, t) in tot.iter().enumerate() {
                    let mut moved: Vec<usize> = t.iter().map(|&s| act_on_syntheme(&g, syn[s])).collect();
                    moved.sort_unstable();
                    img[k] = tot.iter().position(|x| x[..] == moved[..]).expect("totals are permuted") as u8;
                }
                Perm(img).index() as u16
            })
            .collect();
        OuterAut { map }
    }

    pub fn apply(&self, g: &Perm) -> Perm {
        Perm::from_index(self.map[g.index()] as usize)
    }

    pub fn apply_index(&self, g: usize) -> usize {
        self.map[g] as usize
    }

    pub fn apply_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut set = ElemSet::empty();
        for &g in h.indices() {
            set.insert(self.apply_index(g));
        }
        Subgroup::from_set(set)
    }

    /// Verifies bijectivity, the homomorphism property on all pairs, and that
    /// transpositions go to triple transpositions (so the map is not inner).
    pub fn verify(&self) -> Result<(), GroupError> {
        let t = Table::get();
        let mut hit = ElemSet::empty();
        for &m in &self.map {
            hit.insert(m as usize);
        }
        if hit.len() != ORDER {
            return Err(GroupError::Defect("outer map is not bijective".into()));
        }
        for a in 0..ORDER {
            for b in 0..ORDER {
                if self.apply_index(t.mul(a, b)) != t.mul(self.apply_index(a), self.apply_index(b)) {
                    return Err(GroupError::Defect(format!(
                        "outer map fails on {} * {}",
                        Perm::from_index(a),
                        Perm::from_index(b)
                    )));
                }
            }
        }
        for d in duads() {
            if self.apply(&duad_perm(*d)).cycle_type() != [2, 2, 2] {
                return Err(GroupError::Defect("transposition not sent to [2,2,2]".into()));
            }
        }
        Ok(())
    }

    /// Syntheme whose triple transposition is the image of the duad's transposition.
    pub fn duad_to_syntheme(&self, d: usize) -> usize {
        let img = self.apply(&duad_perm(duads()[d]));
        synthemes()
            .iter()
            .position(|s| syntheme_perm(*s) == img)
            .expect("transpositions go to triple transpositions")
    }

    /// Duad whose transposition is the image of the syntheme's triple transposition.
    pub fn syntheme_to_duad(&self, s: usize) -> usize {
        let img = self.apply(&syntheme_perm(synthemes()[s]));
        duads().iter().position(|d| duad_perm(*d) == img).expect("triple transpositions go to transpositions")
    }

    /// A permutation `c` with `self(self(g)) = c g c^-1` for all `g`, if any.
    pub fn square_conjugator(&self) -> Option<Perm> {
        let t = Table::get();
        let gens = [Perm::c("(1 2)").index(), Perm::c("(1 2 3 4 5 6)").index()];
        (0..ORDER)
            .find(|&c| gens.iter().all(|&g| self.apply_index(self.apply_index(g)) == t.conj(c, g)))
            .map(Perm::from_index)
    }

    /// Whether some inner automorphism agrees with `self` on generators.
    pub fn is_inner(&self) -> bool {
        let t = Table::get();
        let gens = [Perm::c("(1 2)").index(), Perm::c("(1 2 3 4 5 6)").index()];
        (0..ORDER).any(|c| gens.iter().all(|&g| self.apply_index(g) == t.conj(c, g)))
    }
}

/// The outer automorphism from the action on synthematic totals, verified
/// once on first use.
pub fn outer_automorphism() -> &'static OuterAut {
    static A: OnceLock<OuterAut> = OnceLock::new();
    A.get_or_init(|| {
        let a = OuterAut::from_totals();
        a.verify().expect("outer automorphism construction is consistent");
        a
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(duads().len(), 15);
        assert_eq!(synthemes().len(), 15);
        assert_eq!(totals().len(), 6);
    }

    #[test]
    fn outer_is_outer() {
        let a = outer_automorphism();
        assert_eq!(a.apply(&Perm::c("(1 2)")).cycle_type(), vec![2, 2, 2]);
        assert!(!a.is_inner());
        assert!(a.square_conjugator().is_some());
        assert_eq!(a.apply(&Perm::c("(1 2 3)")).cycle_type(), vec![3, 3]);
        assert_eq!(a.apply(&Perm::c("(1 2 3 4 5 6)")).cycle_type(), vec![3, 2, 1]);
    }
}
