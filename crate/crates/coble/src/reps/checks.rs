//! Checks and table rows built from the character machinery: orthogonality,
//! the outer-automorphism and restriction tables, symmetric-power
//! invariants, relative class-group inductions, and the class-group
//! characters derived from restrictions to `S5` and `A5`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::character::{format_decomposition, ClassFunction};
use super::partition::Partition;
use super::tables::{
    a32_sign, a5, a5_irreps, class_group_character, pic_character, s6, s6_irrep, sn_irreps, standard_symmetric,
    Action, Variety,
};
use super::RepError;
use crate::algebra::Scalar;
use crate::groups::{all_perms, subgroup_classes, Perm, Subgroup, CYCLE_TYPES};
use crate::report::CheckReport;

fn p(s: &str) -> Partition {
    Partition::parse(s).expect("literal partition")
}

fn decomposition(chi: &ClassFunction, table: &[(String, ClassFunction)]) -> Result<String, RepError> {
    Ok(format_decomposition(&chi.decompose(table)?))
}

/// Row and column orthogonality of the character tables of S_n, n <= 6.
pub fn orthogonality_check() -> CheckReport {
    let mut r = CheckReport::new("sn_character_orthogonality");
    for n in 1..=6 {
        let irr = sn_irreps(n);
        for (i, (li, a)) in irr.iter().enumerate() {
            for (j, (lj, b)) in irr.iter().enumerate() {
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                match a.inner(b) {
                    Ok(v) => r.require(v == want, || format!("<{li}, {lj}> = {v}")),
                    Err(e) => r.require(false, || e.to_string()),
                };
            }
        }
    }
    // columns of the S6 table, one representative per cycle type
    let irr = sn_irreps(6);
    let reps: Vec<&Perm> = (0..CYCLE_TYPES.len())
        .map(|k| all_perms().iter().find(|g| g.cycle_type_index() == k).expect("every cycle type occurs"))
        .collect();
    for (a, g) in reps.iter().enumerate() {
        let class_size = all_perms().iter().filter(|x| x.cycle_type_index() == a).count();
        for (b, h) in reps.iter().enumerate() {
            let sum = irr.iter().fold(Scalar::zero(), |acc, (_, chi)| {
                &acc + &(chi.at(g.index()).expect("in S6") * chi.at(h.index()).expect("in S6"))
            });
            let want = if a == b { Scalar::int((720 / class_size) as i64) } else { Scalar::zero() };
            r.require(sum == want, || format!("columns {g} and {h}: {sum}"));
        }
    }
    r.detail("irreducibles", irr.iter().map(|(l, c)| (l.clone(), c.dim().to_string())).collect::<Vec<_>>());
    r
}

/// Row and column orthogonality of the hardcoded A5 table over Q(sqrt 5).
pub fn a5_table_check() -> CheckReport {
    let mut r = CheckReport::new("a5_character_table");
    let irr = a5_irreps();
    for (i, (li, a)) in irr.iter().enumerate() {
        for (j, (lj, b)) in irr.iter().enumerate() {
            let want = if i == j { Scalar::one() } else { Scalar::zero() };
            match a.inner(b) {
                Ok(v) => r.require(v == want, || format!("<{li}, {lj}> = {v}")),
                Err(e) => r.require(false, || e.to_string()),
            };
        }
    }
    let g = a5();
    for cls in g.conjugacy_classes() {
        for other in g.conjugacy_classes() {
            let (x, y) = (cls[0], other[0]);
            let sum = irr.iter().fold(Scalar::zero(), |acc, (_, chi)| {
                &acc + &(chi.at(x).expect("in A5") * chi.at(y).expect("in A5"))
            });
            let want = if cls == other { Scalar::int((60 / cls.len()) as i64) } else { Scalar::zero() };
            r.require(sum == want, || format!("columns {} and {}: {sum}", Perm::from_index(x), Perm::from_index(y)));
        }
    }
    r
}

/// One irreducible of S6 with its outer image and both restrictions to the
/// standard S5.
#[derive(Clone, Debug, Serialize)]
pub struct OuterRow {
    pub irrep: String,
    pub dim: String,
    pub outer: String,
    pub restriction: String,
    pub outer_restriction: String,
}

pub fn outer_restriction_rows() -> Result<Vec<OuterRow>, RepError> {
    let irr6 = sn_irreps(6);
    let irr5 = sn_irreps(5);
    let s5 = standard_symmetric(5);
    let mut rows = Vec::new();
    for (label, chi) in &irr6 {
        let bar = chi.outer_twist()?;
        rows.push(OuterRow {
            irrep: label.clone(),
            dim: chi.dim().to_string(),
            outer: decomposition(&bar, &irr6)?,
            restriction: decomposition(&chi.restrict(&s5)?, &irr5)?,
            outer_restriction: decomposition(&bar.restrict(&s5)?, &irr5)?,
        });
    }
    Ok(rows)
}

/// The outer twist is an involution fixing exactly five irreducibles.
pub fn outer_twist_check() -> CheckReport {
    let mut r = CheckReport::new("outer_twist_on_irreducibles");
    let rows = match outer_restriction_rows() {
        Ok(x) => x,
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    let fixed: Vec<&str> = rows.iter().filter(|x| x.outer == x.irrep).map(|x| x.irrep.as_str()).collect();
    let want = ["R(6)", "R(4,2)", "R(3,2,1)", "R(2,2,1,1)", "R(1,1,1,1,1,1)"];
    let mut fixed_sorted = fixed.clone();
    fixed_sorted.sort();
    let mut want_sorted = want.to_vec();
    want_sorted.sort();
    r.require(fixed_sorted == want_sorted, || format!("fixed irreducibles {fixed:?}"));
    for x in &rows {
        let back = rows.iter().find(|y| y.irrep == x.outer);
        r.require(back.is_some_and(|y| y.outer == x.irrep), || format!("{} is not paired", x.irrep));
    }
    let swaps = [("R(5,1)", "R(2,2,2)"), ("R(2,1,1,1,1)", "R(3,3)"), ("R(4,1,1)", "R(3,1,1,1)")];
    for (a, b) in swaps {
        r.require(rows.iter().any(|x| x.irrep == a && x.outer == b), || format!("{a} does not go to {b}"));
    }
    r.detail("rows", &rows);
    r
}

/// Restrictions of the S5 irreducibles to A5.
pub fn a5_restriction_rows() -> Result<Vec<(String, String)>, RepError> {
    let a5t = a5_irreps();
    sn_irreps(5).iter().map(|(l, chi)| Ok((l.clone(), decomposition(&chi.restrict(a5())?, &a5t)?))).collect()
}

pub fn a5_restriction_check() -> CheckReport {
    let mut r = CheckReport::new("s5_restrictions_to_a5");
    let rows = match a5_restriction_rows() {
        Ok(x) => x,
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    let want = [
        ("R(5)", "R1"),
        ("R(1,1,1,1,1)", "R1"),
        ("R(4,1)", "R4"),
        ("R(2,1,1,1)", "R4"),
        ("R(3,2)", "R5"),
        ("R(2,2,1)", "R5"),
        ("R(3,1,1)", "R3' + R3''"),
    ];
    for (l, d) in want {
        let got = rows.iter().find(|(x, _)| x == l).map(|(_, y)| y.as_str());
        r.require(got == Some(d), || format!("{l} restricts to {got:?}"));
    }
    match ClassFunction::trivial(a5()).induce(&standard_symmetric(5)).and_then(|c| decomposition(&c, &sn_irreps(5))) {
        Ok(d) => r.require(d == "R(5) + R(1,1,1,1,1)", || format!("trivial of A5 induces to {d}")),
        Err(e) => r.require(false, || e.to_string()),
    };
    r.detail("rows", rows);
    r
}

/// Pic of the quintic del Pezzo surface is R(5) + R(4,1), and both
/// five-dimensional irreducibles of S5 have a unique cubic invariant.
pub fn pic_and_cubic_invariant_check() -> CheckReport {
    let mut r = CheckReport::new("pic_and_unique_cubic_invariant");
    let s5 = standard_symmetric(5);
    match decomposition(&pic_character(), &sn_irreps(5)) {
        Ok(d) => {
            r.require(d == "R(5) + R(4,1)", || format!("Pic decomposes as {d}"));
            r.detail("pic", d);
        }
        Err(e) => r.fail(e.to_string()),
    }
    let mut counts = Vec::new();
    for l in ["3,2", "2,2,1"] {
        let w = ClassFunction::symmetric(&s5, &p(l)).expect("partition of 5");
        match w.sym_power(3).invariant_rank() {
            Ok(k) => {
                r.require(k == 1, || format!("Sym^3 of {} has {k} invariants", p(l)));
                counts.push((p(l).to_string(), k));
            }
            Err(e) => r.fail(e.to_string()),
        }
        r.require(w.sym_power(1).values() == w.values(), || "Sym^1 differs".into());
        r.require(w.sym_power(2).dim() == &Scalar::int(15), || "dim Sym^2 is not 15".into());
    }
    r.detail("cubic_invariants", counts);
    r
}

/// One row of the relative class-group table: `Ind_G^{A5}(upsilon)`.
#[derive(Clone, Debug, Serialize)]
pub struct InductionRow {
    pub tau: &'static str,
    pub subgroup: &'static str,
    pub character: &'static str,
    pub decomposition: String,
}

pub fn induction_rows() -> Result<Vec<InductionRow>, RepError> {
    let a5t = a5_irreps();
    let a32 = Subgroup::from_cycles(&["(1 2 3)", "(1 2)(4 5)"]);
    let a4 = Subgroup::from_cycles(&["(1 2 3)", "(2 3 4)"]);
    let cases: [(&str, &str, &str, ClassFunction); 4] = [
        ("0", "A_{3,2}", "1", ClassFunction::trivial(&a32)),
        ("+-1", "A_{3,2}", "-1", a32_sign(&a32)),
        ("+-1/sqrt(-3)", "A4", "1", ClassFunction::trivial(&a4)),
        ("+-3/sqrt(5)", "A5", "1", ClassFunction::trivial(a5())),
    ];
    cases
        .into_iter()
        .map(|(tau, subgroup, character, chi)| {
            Ok(InductionRow { tau, subgroup, character, decomposition: decomposition(&chi.induce(a5())?, &a5t)? })
        })
        .collect()
}

/// The inductions at `tau = +-1, +-1/sqrt(-3), +-3/sqrt(5)`; the `tau = 0`
/// row is computed and recorded only.
pub fn induction_check() -> CheckReport {
    let mut r = CheckReport::new("relative_class_group_inductions");
    let rows = match induction_rows() {
        Ok(x) => x,
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    let want = [("+-1", "R3' + R3'' + R4"), ("+-1/sqrt(-3)", "R1 + R4"), ("+-3/sqrt(5)", "R1")];
    for (tau, d) in want {
        let got = rows.iter().find(|x| x.tau == tau).map(|x| x.decomposition.as_str());
        r.require(got == Some(d), || format!("tau = {tau}: {got:?}"));
    }
    r.detail("rows", &rows);
    r
}

/// Class-group dimensions: 6 for the Coble fourfold, `X_inf` and generic
/// `X_t`, 16, 11, 7 for `t = 1/2, 1/6, 7/10`.
pub fn class_group_dimension_check() -> CheckReport {
    let mut r = CheckReport::new("class_group_dimensions");
    let want = [
        (Variety::Coble, 6),
        (Variety::XInfinity, 6),
        (Variety::Generic, 6),
        (Variety::Half, 16),
        (Variety::Sixth, 11),
        (Variety::SevenTenths, 7),
    ];
    let mut dims = Vec::new();
    for (v, d) in want {
        let mut actions = vec![Action::Natural];
        if v.has_galois() {
            actions.push(Action::Twisted);
        }
        for a in actions {
            match class_group_character(v, a) {
                Ok(chi) => {
                    r.require(chi.dim() == &Scalar::int(d), || format!("{} {a:?}: dim {}", v.id(), chi.dim()));
                    dims.push((format!("{} {a:?}", v.id()), chi.dim().to_string()));
                }
                Err(e) => r.fail(e.to_string()),
            }
        }
    }
    r.detail("dimensions", dims);
    r
}

/// All genuine characters of S6 of dimension `d` (multisets of
/// irreducibles), as `(label, multiplicity)` lists.
fn characters_of_dim(d: u32) -> Vec<Vec<(usize, u32)>> {
    let irr = sn_irreps(6);
    let dims: Vec<u32> =
        irr.iter().map(|(_, c)| c.dim().to_i64().expect("integer dimension") as u32).collect();
    let mut out = Vec::new();
    fn go(i: usize, left: u32, dims: &[u32], cur: &mut Vec<(usize, u32)>, out: &mut Vec<Vec<(usize, u32)>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if i == dims.len() {
            return;
        }
        let mut m = 0;
        while m * dims[i] <= left {
            if m > 0 {
                cur.push((i, m));
            }
            go(i + 1, left - m * dims[i], dims, cur, out);
            if m > 0 {
                cur.pop();
            }
            m += 1;
        }
    }
    go(0, d, &dims, &mut Vec::new(), &mut out);
    out
}

fn sum_of(parts: &[(usize, u32)]) -> Result<ClassFunction, RepError> {
    let irr = sn_irreps(6);
    let mut chi = irr[parts[0].0].1.scale(&Scalar::int(parts[0].1 as i64));
    for &(i, m) in &parts[1..] {
        chi = chi.add(&irr[i].1.scale(&Scalar::int(m as i64)))?;
    }
    Ok(chi)
}

fn label_of(parts: &[(usize, u32)]) -> String {
    let irr = sn_irreps(6);
    format_decomposition(&parts.iter().map(|&(i, m)| (irr[i].0.clone(), m)).collect::<Vec<_>>())
}

/// S6-characters of dimension `d` whose restriction along the outer
/// automorphism to `sub` (a subgroup of the standard S5) decomposes as
/// `target` in `table`, subject to `extra`.
fn search(
    d: u32,
    sub: &Subgroup,
    table: &[(String, ClassFunction)],
    target: &str,
    extra: impl Fn(&ClassFunction) -> Result<bool, RepError>,
) -> Result<Vec<String>, RepError> {
    let mut found = Vec::new();
    for parts in characters_of_dim(d) {
        let chi = sum_of(&parts)?;
        let bar = chi.outer_twist()?.restrict(sub)?;
        if decomposition(&bar, table)? == target && extra(&chi)? {
            found.push(label_of(&parts));
        }
    }
    Ok(found)
}

/// Derivation of the class-group characters from the geometric inputs.
#[derive(Clone, Debug, Serialize)]
pub struct DerivedClassGroup {
    pub variety: &'static str,
    pub constraint: &'static str,
    pub candidates: Vec<String>,
}

/// Twisted action on the Coble fourfold: the restriction to a non-standard
/// S5 is `R(5) + Pic`. Excess parts for the special quartics: restriction
/// to a non-standard A5 is the induction from the relative class group,
/// there are no invariants of a standard S4, and for `t = 1/6` one
/// invariant of a non-standard S5.
pub fn derived_class_groups() -> Result<Vec<DerivedClassGroup>, RepError> {
    let s5 = standard_symmetric(5);
    let s4 = standard_symmetric(4);
    let irr5 = sn_irreps(5);
    let a5t = a5_irreps();
    let pic = ClassFunction::trivial(&s5).add(&pic_character())?;
    let target = decomposition(&pic, &irr5)?;
    let coble = search(6, &s5, &irr5, &target, |chi| Ok(chi.inner(&s6_irrep(&p("6")))? == Scalar::one()))?;
    let no_s4 = |chi: &ClassFunction| Ok(chi.restrict(&s4)?.invariant_rank()? == 0);
    let rows = induction_rows()?;
    let ind = |tau: &str| rows.iter().find(|x| x.tau == tau).map(|x| x.decomposition.clone()).expect("row");
    let half = search(10, a5(), &a5t, &ind("+-1"), no_s4)?;
    let sixth = search(5, a5(), &a5t, &ind("+-1/sqrt(-3)"), |chi| {
        Ok(no_s4(chi)? && chi.outer_twist()?.restrict(&s5)?.invariant_rank()? == 1)
    })?;
    let seven = search(1, a5(), &a5t, &ind("+-3/sqrt(5)"), no_s4)?;
    Ok(vec![
        DerivedClassGroup { variety: "Y twisted", constraint: "non-standard S5: R(5) + Pic", candidates: coble },
        DerivedClassGroup { variety: "X_1/2 excess", constraint: "non-standard A5: Ind(-1 on A_{3,2})", candidates: half },
        DerivedClassGroup { variety: "X_1/6 excess", constraint: "non-standard A5: Ind(1 on A4)", candidates: sixth },
        DerivedClassGroup { variety: "X_7/10 excess", constraint: "non-standard A5: trivial", candidates: seven },
    ])
}

/// Each derivation has exactly one solution, agreeing with the class-group
/// characters used elsewhere.
pub fn derived_class_group_check() -> CheckReport {
    let mut r = CheckReport::new("class_groups_from_restrictions");
    let rows = match derived_class_groups() {
        Ok(x) => x,
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    let want = ["R(6) + R(2,2,2)", "R(3,1,1,1)", "R(2,2,2)", "R(1,1,1,1,1,1)"];
    for (row, w) in rows.iter().zip(want) {
        r.require(row.candidates == [w], || format!("{}: candidates {:?}", row.variety, row.candidates));
    }
    let irr = sn_irreps(6);
    let twisted = class_group_character(Variety::Coble, Action::Twisted).and_then(|c| decomposition(&c, &irr));
    r.require(twisted.as_deref() == Ok(want[0]), || format!("twisted character table gives {twisted:?}"));
    r.detail("derivations", &rows);
    r
}

/// Frobenius reciprocity on random triples `(H, phi, chi)`: `H` a subgroup
/// class representative, `phi` a class function on `H` built from fixed
/// points of powers and the sign, `chi` an irreducible of S6.
pub fn frobenius_check(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("frobenius_reciprocity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let classes = subgroup_classes();
    let irr = sn_irreps(6);
    let mut triples = Vec::new();
    for _ in 0..20 {
        let h = &classes[rng.gen_range(0..classes.len())].rep;
        let k: u32 = rng.gen_range(1..4);
        let twist = rng.gen_bool(0.5);
        let phi = ClassFunction::from_fn(h, |g| {
            let fixed = (0..6).filter(|&i| g.pow(k).at(i) == i).count() as i64;
            Scalar::int(if twist { fixed * g.sign() as i64 } else { fixed })
        });
        let (label, chi) = &irr[rng.gen_range(0..irr.len())];
        let lhs = phi.induce(s6()).and_then(|x| x.inner(chi));
        let rhs = chi.restrict(h).and_then(|x| phi.inner(&x));
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => {
                r.require(a == b, || format!("order {} subgroup, {label}: {a} vs {b}", h.order()));
                triples.push((h.order(), k, twist, label.clone(), a.to_string()));
            }
            (Err(e), _) | (_, Err(e)) => r.fail(e.to_string()),
        }
    }
    r.detail("seed", seed);
    r.detail("triples", triples);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_pass() {
        for r in [
            orthogonality_check(),
            a5_table_check(),
            outer_twist_check(),
            a5_restriction_check(),
            pic_and_cubic_invariant_check(),
            induction_check(),
            class_group_dimension_check(),
            derived_class_group_check(),
            frobenius_check(7),
        ] {
            assert!(r.passed, "{}: {:?} {:?}", r.name, r.witness, r.details);
        }
    }

    #[test]
    fn dimension_enumeration() {
        // 1 = R(6) or R(1^6)
        assert_eq!(characters_of_dim(1).len(), 2);
        assert!(characters_of_dim(5).iter().all(|c| sum_of(c).unwrap().dim() == &Scalar::int(5)));
    }

    #[test]
    fn outer_rows_for_five_one() {
        let rows = outer_restriction_rows().unwrap();
        let row = rows.iter().find(|x| x.irrep == "R(5,1)").unwrap();
        assert_eq!(row.outer, "R(2,2,2)");
        assert_eq!(row.restriction, "R(5) + R(4,1)");
        assert_eq!(row.outer_restriction, "R(2,2,1)");
    }
}
