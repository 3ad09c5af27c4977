use coble::algebra::Scalar;
use coble::groups::{resolve, subgroup_classes, Subgroup};
use coble::reps::*;

fn p(s: &str) -> Partition {
    Partition::parse(s).unwrap()
}

fn decomposition(chi: &ClassFunction, table: &[(String, ClassFunction)]) -> String {
    format_decomposition(&chi.decompose(table).unwrap())
}

#[test]
fn s6_table_is_orthonormal() {
    let irr = sn_irreps(6);
    for (i, (_, a)) in irr.iter().enumerate() {
        for (j, (_, b)) in irr.iter().enumerate() {
            let expect = if i == j { Scalar::one() } else { Scalar::zero() };
            assert_eq!(a.inner(b).unwrap(), expect);
        }
    }
}

#[test]
fn invariant_rank_counts() {
    let cases = [
        (Variety::Generic, Action::Natural, 25, 22),
        (Variety::Coble, Action::Twisted, 16, 22),
        (Variety::Half, Action::Natural, 14, 19),
        (Variety::Sixth, Action::Natural, 11, 13),
        (Variety::SevenTenths, Action::Natural, 20, 17),
    ];
    for (v, a, r1, r2) in cases {
        assert_eq!(classes_with_rank(v, a, 1).unwrap().len(), r1, "{v:?} {a:?} rank 1");
        assert_eq!(classes_with_rank(v, a, 2).unwrap().len(), r2, "{v:?} {a:?} rank 2");
    }
}

#[test]
fn restriction_to_a5_and_inductions() {
    let a5t = a5_irreps();
    let s5 = standard_symmetric(5);
    let r311 = ClassFunction::symmetric(&s5, &p("3,1,1")).unwrap();
    assert_eq!(decomposition(&r311.restrict(a5()).unwrap(), &a5t), "R3' + R3''");
    let a32 = Subgroup::from_cycles(&["(1 2 3)", "(1 2)(4 5)"]);
    let ind = a32_sign(&a32).induce(a5()).unwrap();
    assert_eq!(decomposition(&ind, &a5t), "R3' + R3'' + R4");
    let a4 = Subgroup::from_cycles(&["(1 2 3)", "(2 3 4)"]);
    let ind = ClassFunction::trivial(&a4).induce(a5()).unwrap();
    assert_eq!(decomposition(&ind, &a5t), "R1 + R4");
    let ind = ClassFunction::trivial(a5()).induce(&s5).unwrap();
    assert_eq!(decomposition(&ind, &sn_irreps(5)), "R(5) + R(1,1,1,1,1)");
}

#[test]
fn pic_and_sym_cube() {
    let s5t = sn_irreps(5);
    assert_eq!(decomposition(&pic_character(), &s5t), "R(5) + R(4,1)");
    let s5 = standard_symmetric(5);
    for l in ["2,2,1", "3,2"] {
        let w = ClassFunction::symmetric(&s5, &p(l)).unwrap();
        assert_eq!(w.sym_power(3).invariant_rank().unwrap(), 1, "{l}");
        assert_eq!(w.sym_power(2).dim(), &Scalar::int(15));
    }
}

#[test]
fn outer_twist_swaps() {
    let irr = sn_irreps(6);
    let tw = s6_irrep(&p("5,1")).outer_twist().unwrap();
    assert_eq!(decomposition(&tw, &irr), "R(2,2,2)");
    let _ = subgroup_classes();
    assert!(resolve("S5").is_some());
}
