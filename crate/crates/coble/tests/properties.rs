//! Randomized invariants: field arithmetic, text round trips, the outer
//! automorphism, subgroup classes, characters, the tau maps, the quartic
//! pencil and the Verra conic bundle.

use coble::algebra::{format_poly, parse_poly, parse_scalar, rat, Ctx, Mono, Poly, Scalar};
use coble::cli::parse_point;
use coble::groups::{all_perms, class_of, outer_automorphism, subgroup_classes};
use coble::reps::{sn_irreps, ClassFunction};
use coble::varieties::{conic_fiber, four_point_sign, orbit_singularities, s4_generators, s_of_tau, t_of_tau, Value};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn quadratic() -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..8, -20i64..20, 1i64..8, prop::sample::select(vec![-15i64, -3, -1, 2, 5]))
        .prop_map(|(a, b, c, e, d)| Scalar::quadratic(rat(a, b), rat(c, e), d).expect("squarefree d"))
}

fn poly3() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -9i64..9, 0i64..3), 0..6).prop_map(|terms| {
        let ctx = Ctx::new(&["x", "y", "z"]);
        let terms = terms
            .into_iter()
            .map(|((a, b, c), k, s)| (Mono(vec![a, b, c]), Scalar::int(k) + Scalar::int(s) * Scalar::sqrt_of(5)))
            .collect();
        Poly::from_terms(&ctx, terms)
    })
}

fn perm() -> impl Strategy<Value = usize> {
    0usize..720
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_operations_invert(x in quadratic(), y in quadratic()) {
        let (x, y) = if x.field() == y.field() || x.is_rational() || y.is_rational() { (x, y) } else { (x.clone(), x) };
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    }

    #[test]
    fn scalar_text_round_trip(x in quadratic()) {
        prop_assert_eq!(parse_scalar(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn point_text_round_trip(p in prop::collection::vec(quadratic(), 3)) {
        let text: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        prop_assert_eq!(parse_point(&text.join(":")).unwrap(), p);
    }

    #[test]
    fn poly_text_round_trip_and_evaluation(p in poly3(), q in poly3(), pt in prop::collection::vec(rational(), 3)) {
        let ctx = p.ctx().clone();
        prop_assert_eq!(parse_poly(&ctx, &format_poly(&p)).unwrap(), p.clone());
        let prod = &p * &q;
        prop_assert_eq!(prod.eval(&pt).unwrap(), &p.eval(&pt).unwrap() * &q.eval(&pt).unwrap());
    }

    #[test]
    fn outer_automorphism_is_a_homomorphism(g in perm(), h in perm()) {
        let a = outer_automorphism();
        let (g, h) = (&all_perms()[g], &all_perms()[h]);
        prop_assert_eq!(a.apply(&g.compose(h)), a.apply(g).compose(&a.apply(h)));
        // the image cycle type depends only on the cycle type
        let c = &all_perms()[(g.index() * 7 + 11) % 720];
        prop_assert_eq!(a.apply(&c.conjugate(g)).cycle_type(), a.apply(g).cycle_type());
    }

    #[test]
    fn subgroup_class_is_conjugation_invariant(k in 0usize..56, c in perm()) {
        let rep = &subgroup_classes()[k].rep;
        prop_assert_eq!(class_of(&rep.conjugate(&all_perms()[c])), k);
    }

    #[test]
    fn outer_twist_is_an_involution_on_characters(coeffs in prop::collection::vec(0i64..3, 11)) {
        let irr = sn_irreps(6);
        let mut chi: Option<ClassFunction> = None;
        for (m, (_, x)) in coeffs.iter().zip(&irr) {
            let term = x.scale(&Scalar::int(*m));
            chi = Some(match chi { Some(acc) => acc.add(&term).unwrap(), None => term });
        }
        let chi = chi.unwrap();
        let twice = chi.outer_twist().unwrap().outer_twist().unwrap();
        prop_assert_eq!(twice.values(), chi.values());
        prop_assert_eq!(chi.outer_twist().unwrap().dim().clone(), chi.dim().clone());
    }

    #[test]
    fn tau_maps_respect_the_sign(tau in quadratic()) {
        let plus = Value::Finite(tau.clone());
        let minus = Value::Finite(-tau);
        prop_assert_eq!(t_of_tau(&plus), t_of_tau(&minus));
        match (s_of_tau(&plus), s_of_tau(&minus)) {
            (Value::Finite(a), Value::Finite(b)) => prop_assert_eq!(a, -b),
            (a, b) => prop_assert!(a == Value::Infinity && b == Value::Infinity),
        }
    }

    #[test]
    fn verra_fiber_rank_follows_the_four_point_sign(
        u in prop::collection::vec(rational(), 3),
        tau in rational(),
        which in 0usize..3,
    ) {
        prop_assume!(u.iter().any(|x| !x.is_zero()));
        let h = &s4_generators()[which];
        let sign = four_point_sign(h).expect("h permutes the four points");
        let hu = h.apply(&u);
        let signed_tau = if sign < 0 { -tau.clone() } else { tau.clone() };
        prop_assert_eq!(conic_fiber(&tau, &hu).unwrap().rank, conic_fiber(&signed_tau, &u).unwrap().rank);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Away from 1/4, 1/2, 1/6, 7/10 only Sigma30 is singular among the
    /// catalog orbits, and all its points are nodes.
    #[test]
    fn generic_members_are_singular_only_along_sigma30(t in rational()) {
        let special = [Scalar::ratio(1, 4), Scalar::ratio(1, 2), Scalar::ratio(1, 6), Scalar::ratio(7, 10)];
        prop_assume!(!special.contains(&t));
        for s in orbit_singularities(&t).unwrap() {
            if s.orbit == "Sigma30" {
                prop_assert_eq!((s.singular, s.nodes), (30, 30));
            } else {
                prop_assert_eq!(s.singular, 0, "{} at t = {}", s.orbit, t);
            }
        }
    }
}
