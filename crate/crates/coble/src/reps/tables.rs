//! Character tables used throughout: S6 and S5 from Murnaghan-Nakayama, the
//! A5 table over Q(sqrt 5), the Picard character of the quintic del Pezzo
//! surface, and the class-group characters of the quartics in the pencil.

use std::sync::OnceLock;

use serde::Serialize;

use super::character::ClassFunction;
use super::partition::Partition;
use super::RepError;
use crate::algebra::{Scalar, ScalarMatrix};
use crate::groups::{subgroup_classes, Perm, Subgroup};

pub fn s6() -> &'static Subgroup {
    static G: OnceLock<Subgroup> = OnceLock::new();
    G.get_or_init(Subgroup::symmetric)
}

/// The standard S_n on the points 1..n.
pub fn standard_symmetric(n: usize) -> Subgroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::c("(1 2)"));
        let cyc: Vec<usize> = (1..=n).collect();
        gens.push(Perm::from_cycles(&[&cyc]).expect("cycle"));
    }
    Subgroup::generate(&gens)
}

/// The standard A5 on the points 1..5.
pub fn a5() -> &'static Subgroup {
    static G: OnceLock<Subgroup> = OnceLock::new();
    G.get_or_init(|| Subgroup::from_cycles(&["(1 2 3)", "(1 2 3 4 5)"]))
}

/// Irreducible characters of the standard S_n, labelled `R(..)`.
pub fn sn_irreps(n: usize) -> Vec<(String, ClassFunction)> {
    let g = if n == 6 { s6().clone() } else { standard_symmetric(n) };
    Partition::all(n)
        .into_iter()
        .map(|l| {
            let chi = ClassFunction::symmetric(&g, &l).expect("weights agree");
            (l.to_string(), chi)
        })
        .collect()
}

pub fn s6_irrep(l: &Partition) -> ClassFunction {
    ClassFunction::symmetric(s6(), l).expect("partition of 6")
}

/// The A5 table: R1, R3', R3'', R4, R5. R3' takes the value (1+sqrt5)/2 on
/// the class of (1 2 3 4 5).
pub fn a5_irreps() -> Vec<(String, ClassFunction)> {
    let g = a5();
    let classes = g.conjugacy_classes();
    let c5 = Perm::c("(1 2 3 4 5)").index();
    let class_a: &Vec<usize> = classes.iter().find(|c| c.contains(&c5)).expect("class of a 5-cycle");
    let golden = (Scalar::one() + Scalar::sqrt_of(5)) / Scalar::int(2);
    let golden_conj = golden.conj();
    let value = |row: usize, p: &Perm| -> Scalar {
        let ct = p.cycle_type();
        let k = match ct.as_slice() {
            [1, 1, 1, 1, 1, 1] => 0,
            [2, 2, 1, 1] => 1,
            [3, 1, 1, 1] => 2,
            [5, 1] if class_a.contains(&p.index()) => 3,
            _ => 4,
        };
        let table: [[Scalar; 5]; 5] = [
            [1, 1, 1, 1, 1].map(Scalar::int),
            [Scalar::int(3), Scalar::int(-1), Scalar::zero(), golden.clone(), golden_conj.clone()],
            [Scalar::int(3), Scalar::int(-1), Scalar::zero(), golden_conj.clone(), golden.clone()],
            [4, 0, 1, -1, -1].map(Scalar::int),
            [5, 1, -1, 0, 0].map(Scalar::int),
        ];
        table[row][k].clone()
    };
    ["R1", "R3'", "R3''", "R4", "R5"]
        .iter()
        .enumerate()
        .map(|(row, name)| (name.to_string(), ClassFunction::from_fn(g, |p| value(row, p))))
        .collect()
}

/// Character of the standard S5 on Pic(S) of the blow-up of P^2 in four
/// points, basis H, E1..E4. The ten lines are labelled by duads of {1..5} so
/// that two lines meet iff their duads are disjoint: `{i,5}` is E_i and
/// `{i,j}` is H - E_k - E_l for `{k,l}` the complement of `{i,j}` in {1..4}.
/// Permutations act by relabelling lines.
pub fn pic_character() -> ClassFunction {
    let line = |i: usize, j: usize| -> Vec<i64> {
        let (i, j) = (i.min(j), i.max(j));
        let mut v = vec![0i64; 5];
        if j == 4 {
            v[1 + i] = 1;
        } else {
            v[0] = 1;
            for k in (0..4).filter(|&k| k != i && k != j) {
                v[1 + k] = -1;
            }
        }
        v
    };
    ClassFunction::from_fn(&standard_symmetric(5), |g| {
        let mut cols: Vec<Vec<i64>> = Vec::new();
        // H = L_{34} + L_{15} + L_{25}
        let img = |a: usize, b: usize| line(g.at(a), g.at(b));
        let h: Vec<i64> = (0..5).map(|k| img(2, 3)[k] + img(0, 4)[k] + img(1, 4)[k]).collect();
        cols.push(h);
        for i in 0..4 {
            cols.push(img(i, 4));
        }
        let rows: Vec<Vec<Scalar>> = (0..5).map(|r| (0..5).map(|c| Scalar::int(cols[c][r])).collect()).collect();
        let m = ScalarMatrix::from_rows(rows);
        (0..5).fold(Scalar::zero(), |acc, k| &acc + m.get(k, k))
    })
}

/// Varieties whose class groups carry an S6-action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variety {
    /// The Coble fourfold.
    Coble,
    /// The threefold at tau = infinity.
    XInfinity,
    /// A quartic of the pencil outside the discriminant set.
    Generic,
    Half,
    Sixth,
    SevenTenths,
}

impl Variety {
    pub const ALL: [Variety; 6] =
        [Variety::Coble, Variety::XInfinity, Variety::Generic, Variety::Half, Variety::Sixth, Variety::SevenTenths];

    pub fn id(self) -> &'static str {
        match self {
            Variety::Coble => "Y",
            Variety::XInfinity => "X_inf",
            Variety::Generic => "X_t",
            Variety::Half => "X_1/2",
            Variety::Sixth => "X_1/6",
            Variety::SevenTenths => "X_7/10",
        }
    }

    pub fn parse(s: &str) -> Result<Variety, RepError> {
        let t = s.trim();
        Variety::ALL
            .into_iter()
            .find(|v| v.id().eq_ignore_ascii_case(t))
            .or(match t {
                "generic" | "Xt" => Some(Variety::Generic),
                "coble" => Some(Variety::Coble),
                "X_infinity" | "Xinf" => Some(Variety::XInfinity),
                "1/2" => Some(Variety::Half),
                "1/6" => Some(Variety::Sixth),
                "7/10" => Some(Variety::SevenTenths),
                _ => None,
            })
            .ok_or_else(|| RepError::UnknownVariety(s.into()))
    }

    /// Whether the Galois involution acts (so a twisted action exists).
    pub fn has_galois(self) -> bool {
        matches!(self, Variety::Coble | Variety::XInfinity)
    }

    /// Irreducible summands with their Galois parity (`true` = the involution acts by -1).
    pub fn summands(self) -> Vec<(Partition, bool)> {
        let p = |s: &str| Partition::parse(s).expect("literal");
        let mut out = vec![(p("6"), false), (p("3,3"), true)];
        match self {
            Variety::Half => out.push((p("3,1,1,1"), false)),
            Variety::Sixth => out.push((p("2,2,2"), false)),
            Variety::SevenTenths => out.push((p("1,1,1,1,1,1"), false)),
            _ => {}
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Action {
    Natural,
    Twisted,
}

impl Action {
    pub fn parse(s: &str) -> Result<Action, RepError> {
        match s {
            "natural" => Ok(Action::Natural),
            "twisted" => Ok(Action::Twisted),
            _ => Err(RepError::UnknownAction(s.into())),
        }
    }
}

/// Summands as seen by S6 through `g -> (g, 0)` (natural) or `g -> (g, sgn g)` (twisted).
pub fn class_group_summands(v: Variety, action: Action) -> Result<Vec<Partition>, RepError> {
    if action == Action::Twisted && !v.has_galois() {
        return Err(RepError::UnknownAction(format!("twisted action on {}", v.id())));
    }
    Ok(v.summands()
        .into_iter()
        .map(|(l, odd)| if odd && action == Action::Twisted { l.transpose() } else { l })
        .collect())
}

pub fn class_group_character(v: Variety, action: Action) -> Result<ClassFunction, RepError> {
    let parts = class_group_summands(v, action)?;
    let mut chi = s6_irrep(&parts[0]);
    for l in &parts[1..] {
        chi = chi.add(&s6_irrep(l))?;
    }
    Ok(chi)
}

/// Rank of the invariants of `H x mu2`, where mu2 is generated by the Galois involution.
pub fn invariant_rank_with_galois(v: Variety, h: &Subgroup) -> Result<u32, RepError> {
    let mut total = 0;
    for (l, odd) in v.summands() {
        if !odd {
            total += s6_irrep(&l).restrict(h)?.invariant_rank()?;
        }
    }
    Ok(total)
}

/// Classes of subgroups (indices into `subgroup_classes()`) with invariant rank `rank`.
pub fn classes_with_rank(v: Variety, action: Action, rank: u32) -> Result<Vec<usize>, RepError> {
    let chi = class_group_character(v, action)?;
    let mut out = Vec::new();
    for (k, c) in subgroup_classes().iter().enumerate() {
        if chi.restrict(&c.rep)?.invariant_rank()? == rank {
            out.push(k);
        }
    }
    Ok(out)
}

/// `(tau row label, inducing subgroup, character label)` for the relative
/// class groups of the conic bundles over the quintic del Pezzo surface.
pub fn relative_class_group_inductions() -> Vec<(&'static str, Subgroup, &'static str)> {
    vec![
        ("0", Subgroup::from_cycles(&["(1 2 3)", "(1 2)(4 5)"]), "1"),
        ("+-1", Subgroup::from_cycles(&["(1 2 3)", "(1 2)(4 5)"]), "-1"),
        ("+-1/sqrt(-3)", Subgroup::from_cycles(&["(1 2 3)", "(2 3 4)"]), "1"),
    ]
}

/// One-dimensional character of `A_{3,2}`: the sign of the restriction to {1,2,3}.
pub fn a32_sign(h: &Subgroup) -> ClassFunction {
    ClassFunction::from_fn(h, |g| {
        let mut img = [0u8, 1, 2, 3, 4, 5];
        img[..3].copy_from_slice(&g.0[..3]);
        let restricted = Perm(img);
        Scalar::int(restricted.sign() as i64)
    })
}

