//! Identity checks for the catalog maps. Equality of maps up to a scalar
//! is always certified by 2x2 minors of the component matrix.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{elementary, gens, Poly, PolyMatrix, Scalar};
use crate::report::CheckReport;
use crate::varieties::{
    build, igusa_quartic, perazzo_branch_quartic, perazzo_cubic, q_infinity, uv_ctx, verra_matrices, VarietyDef,
    VarietyId,
};

use super::catalog::{
    perazzo_involution, perazzo_swap, perazzo_to_hyperplane, plane_pair_involution, rho, rho_with_sign,
    segre_to_perazzo, RationalMap,
};
use super::MapError;

/// Every defining equation of `target` pulls back to zero along `m`.
pub fn verify_lands_in(name: &str, m: &RationalMap, target: &VarietyDef) -> CheckReport {
    let mut r = CheckReport::new(name);
    if m.target != target.ctx {
        r.fail(format!("{} does not map into the ambient space of {}", m.name, target.id.name()));
        return r;
    }
    for (i, eq) in target.equations.iter().enumerate() {
        match eq.substitute(&m.components) {
            Ok(p) if p.is_zero() => {}
            Ok(p) => {
                r.fail(format!("equation {i} pulls back to {p}"));
            }
            Err(e) => r.fail(e.to_string()),
        }
    }
    r.detail("map", m.name);
    r.detail("target", target.id.name());
    r
}

/// All 2x2 minors `a_i b_j - a_j b_i` over the index range.
fn minors(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut out = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            out.push(&(&a[i] * &b[j]) - &(&a[j] * &b[i]));
        }
    }
    out
}

/// Whether `p` lies in the principal ideal of `modulus` (zero modulus:
/// whether `p` is zero).
fn divisible(p: &Poly, modulus: &Poly) -> bool {
    if p.is_zero() {
        return true;
    }
    !modulus.is_zero() && p.exact_divide(modulus).is_ok()
}

/// Composes `m` with itself and checks that, block by block, the composite
/// is proportional to the identity modulo `modulus`.
pub fn verify_involution(name: &str, m: &RationalMap, modulus: &Poly) -> CheckReport {
    let mut r = CheckReport::new(name);
    if m.source != m.target {
        r.fail(format!("{} is not a self-map", m.name));
        return r;
    }
    let comp = match m.after(m) {
        Ok(c) => c,
        Err(e) => return CheckReport::from_error(name, e),
    };
    let id = gens(&m.source);
    for b in &m.blocks {
        let cs = &comp.components[b.clone()];
        if cs.iter().all(|c| divisible(c, modulus)) {
            r.fail(format!("composite block {b:?} vanishes on the hypersurface"));
            continue;
        }
        for (k, mi) in minors(cs, &id[b.clone()]).iter().enumerate() {
            if !divisible(mi, modulus) {
                r.fail(format!("minor {k} of block {b:?} is not divisible: {} terms", mi.nterms()));
                break;
            }
        }
    }
    r.detail("map", m.name);
    r.detail("composite_terms", comp.components.iter().map(Poly::nterms).collect::<Vec<_>>());
    r.detail("exact", modulus.is_zero());
    r
}

/// The covering involution squares to the identity on the Perazzo cubic.
pub fn perazzo_involution_check() -> CheckReport {
    verify_involution("perazzo_involution_squares_to_identity", &perazzo_involution(), &perazzo_cubic())
}

/// The lifted involution of P2 x P2 squares to the identity. The cubic
/// pulls back to zero along the Segre-type map, so the modulus is zero and
/// the check is exact.
pub fn plane_pair_involution_check() -> CheckReport {
    let m = plane_pair_involution();
    let modulus = perazzo_cubic().substitute(&segre_to_perazzo().components).expect("arity");
    let mut r = verify_involution("plane_pair_involution_squares_to_identity", &m, &modulus);
    r.detail("modulus_is_zero", modulus.is_zero());
    r
}

pub fn perazzo_swap_check() -> CheckReport {
    verify_involution("perazzo_swap_is_involution", &perazzo_swap(), &Poly::zero(&perazzo_swap().source))
}

/// The Segre-type map lands in the Perazzo cubic.
pub fn segre_lands_in_perazzo() -> CheckReport {
    verify_lands_in("segre_lands_in_perazzo", &segre_to_perazzo(), &build(VarietyId::Perazzo, None).expect("fixed"))
}

/// Both sign choices of `x0` map P2 x P2 into the Coble fourfold.
pub fn rho_lands_in_coble() -> CheckReport {
    let target = build(VarietyId::Coble, None).expect("fixed");
    let mut r = verify_lands_in("rho_lands_in_coble", &rho(), &target);
    let flipped = verify_lands_in("rho_sigma", &rho_with_sign(-1), &target);
    r.require(flipped.passed, || format!("sign-flipped map: {}", flipped.witness.clone().unwrap_or_default()));
    r.detail("sign_flipped_passes", flipped.passed);
    r
}

/// Substituting the linear change of variables into the Igusa quartic
/// gives the branch quartic of the Perazzo projection, with scalar 1, and
/// the six linear forms sum to zero. A random point is checked too.
pub fn verify_igusa_substitution(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("igusa_pulls_back_to_branch_quartic");
    let m = perazzo_to_hyperplane();
    let pulled = match igusa_quartic().substitute(&m.components) {
        Ok(p) => p,
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    let branch = perazzo_branch_quartic();
    match pulled.ratio_to(&branch) {
        Some(c) => r.detail("scalar", c.to_string()),
        None => r.fail("pullback is not a multiple of the branch quartic"),
    }
    let total = m.components.iter().fold(Poly::zero(&m.source), |a, p| &a + p);
    r.require(total.is_zero(), || format!("sum of the linear forms is {total}"));
    r.detail("form", "unrestricted");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pt: Vec<Scalar> = (0..6).map(|_| Scalar::ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9))).collect();
    let image: Vec<Scalar> = m.components.iter().map(|p| p.eval(&pt).expect("arity")).collect();
    let lhs = igusa_quartic().eval(&image).expect("arity");
    let rhs = branch.eval(&pt).expect("arity");
    r.require(lhs == rhs, || format!("random point {pt:?}: {lhs} vs {rhs}"));
    r.detail("random_point", pt.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    r
}

/// `det [[u1 v1, u2 v2, u3 v3], [u1, u2, u3], [v1, v2, v3]]` on P2 x P2.
pub fn determinant_form() -> Poly {
    let c = uv_ctx();
    let g = gens(c);
    let (u, v) = (&g[0..3], &g[3..6]);
    let row0: Vec<Poly> = (0..3).map(|i| &u[i] * &v[i]).collect();
    PolyMatrix::from_rows(c, vec![row0, u.to_vec(), v.to_vec()]).det().expect("square")
}

fn swap_uv(p: &Poly) -> Poly {
    let g = gens(p.ctx());
    let images = vec![g[3].clone(), g[4].clone(), g[5].clone(), g[0].clone(), g[1].clone(), g[2].clone()];
    p.substitute(&images).expect("arity")
}

/// The two ways round the square agree: the Segre-type map after the lifted
/// involution, and the covering involution after the Segre-type map. Also
/// checks the ramification form: `x0` of `rho`, the determinant form and
/// `s2(y) - s2(z)` agree up to scalars, and `u <-> v` negates the
/// determinant form.
pub fn double_cover_involution_compatibility() -> CheckReport {
    let mut r = CheckReport::new("double_cover_involution_compatibility");
    let seg = segre_to_perazzo();
    let a = match seg.after(&plane_pair_involution()) {
        Ok(x) => x,
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    let b = match perazzo_involution().after(&seg) {
        Ok(x) => x,
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    r.require(b.components.iter().any(|p| !p.is_zero()), || "covering involution degenerates on the image".into());
    if let Some((k, _)) = minors(&a.components, &b.components).iter().enumerate().find(|(_, m)| !m.is_zero()) {
        r.fail(format!("minor {k} does not vanish"));
    }

    let det = determinant_form();
    let c = uv_ctx();
    let (y, z) = (&seg.components[0..3], &seg.components[3..6]);
    let d2 = &elementary(c, y, 2) - &elementary(c, z, 2);
    match d2.ratio_to(&det) {
        Some(k) => r.detail("s2_difference_over_det", k.to_string()),
        None => r.fail("s2(y) - s2(z) is not a multiple of the determinant form"),
    }
    match rho().components[0].ratio_to(&det) {
        Some(k) => r.detail("x0_over_det", k.to_string()),
        None => r.fail("x0 is not a multiple of the determinant form"),
    }
    r.require(swap_uv(&det) == -&det, || "u <-> v does not negate the determinant form".into());
    r
}

/// Triples whose hyperplane pulls back to a product of two linear forms,
/// with that product.
fn split_triples() -> Vec<([usize; 3], Poly)> {
    let c = uv_ctx();
    let g = gens(c);
    let (u, v) = (&g[0..3], &g[3..6]);
    vec![
        ([1, 2, 4], &(&u[0] - &u[2]) * &v[1]),
        ([1, 2, 5], &u[0] * &(&v[1] - &v[2])),
        ([1, 3, 4], &u[2] * &(&v[0] - &v[1])),
        ([1, 3, 6], &(&u[1] - &u[2]) * &v[0]),
        ([2, 3, 5], &(&u[0] - &u[1]) * &v[2]),
        ([2, 3, 6], &u[1] * &(&v[0] - &v[2])),
    ]
}

/// Triples whose hyperplane pulls back to an irreducible form, with the
/// point of P2 x P2 where it is singular.
fn singular_triples() -> Vec<([usize; 3], [i64; 3])> {
    vec![([1, 2, 3], [1, 1, 1]), ([1, 5, 6], [1, 0, 0]), ([2, 4, 6], [0, 1, 0]), ([3, 4, 5], [0, 0, 1])]
}

/// Pullback of `sum_{i in I} x_i` along `rho`.
pub fn hyperplane_pullback(triple: [usize; 3]) -> Poly {
    let m = rho();
    triple.iter().fold(Poly::zero(&m.source), |a, &i| &a + &m.components[i])
}

/// The 3x3 coefficient matrix of a form of bidegree (1, 1).
fn bilinear_matrix(p: &Poly) -> Option<crate::algebra::ScalarMatrix> {
    let mut m = crate::algebra::ScalarMatrix::zeros(3, 3);
    for (mono, x) in p.terms() {
        let e = &mono.0;
        let i = (0..3).find(|&i| e[i] == 1)?;
        let j = (3..6).find(|&j| e[j] == 1)? - 3;
        if e.iter().sum::<u32>() != 2 {
            return None;
        }
        m.set(i, j, x.clone());
    }
    Some(m)
}

/// All ten hyperplanes `sum_{i in I} x_i = 0` pulled back along `rho`: six
/// split into two linear factors, four are irreducible and singular at
/// `(P, P)` for `P` the four base points of P2.
pub fn verify_hyperplane_pullbacks() -> CheckReport {
    let mut r = CheckReport::new("hyperplane_pullbacks");
    let mut seen = Vec::new();
    for (t, want) in split_triples() {
        let p = hyperplane_pullback(t);
        match p.ratio_to(&want) {
            Some(k) => seen.push(format!("{t:?}: {k} * ({want})")),
            None => r.fail(format!("H{t:?} pulls back to {p}")),
        }
    }
    for (t, pt) in singular_triples() {
        let p = hyperplane_pullback(t);
        let point: Vec<Scalar> = pt.iter().chain(pt.iter()).map(|&x| Scalar::int(x)).collect();
        let smooth = p.gradient().iter().any(|g| !g.eval(&point).expect("arity").is_zero());
        r.require(!smooth, || format!("H{t:?} is smooth at {pt:?} x {pt:?}"));
        match bilinear_matrix(&p) {
            Some(m) => {
                r.require(m.rank() >= 2, || format!("H{t:?} pullback is reducible"));
            }
            None => r.fail(format!("H{t:?} pullback is not of bidegree (1, 1)")),
        }
        seen.push(format!("{t:?}: irreducible, singular at {pt:?}"));
    }
    r.detail("pullbacks", seen);
    r
}

/// `q0(u)` and `q_inf(u)` evaluated at `v` give `x0` and `1/2 sum x_i^2`
/// of `rho`.
pub fn verra_pullback_check() -> CheckReport {
    let mut r = CheckReport::new("verra_forms_pull_back_from_coble");
    let c = uv_ctx();
    let v = gens(c)[3..6].to_vec();
    let (q0, qi) = verra_matrices();
    let m = rho();
    let x0 = &m.components[0];
    let half_q = q_infinity().substitute(&m.components[1..7]).expect("arity").scale(&Scalar::ratio(1, 2));
    r.require(&q0.quadratic_form(&v) == x0, || "q0(u)(v) differs from x0".into());
    r.require(qi.quadratic_form(&v) == half_q, || "q_inf(u)(v) differs from sum x_i^2 / 2".into());
    r
}

/// `(q0 + q_inf)(u)(v1, v2, 0) = 2/3 L conj(L)` over `Q(sqrt(-3))`, with
/// `L = u1 v2 + w u2 v1 + w^2 u3 v1 + w u3 v2`.
pub fn verify_burkhardt_factorization() -> CheckReport {
    let mut r = CheckReport::new("burkhardt_factorization");
    let c = uv_ctx();
    let g = gens(c);
    let (u, v) = (&g[0..3], &g[3..6]);
    let (q0, qi) = verra_matrices();
    let vv = vec![v[0].clone(), v[1].clone(), Poly::zero(c)];
    let lhs = &q0.quadratic_form(&vv) + &qi.quadratic_form(&vv);
    let w = crate::varieties::omega();
    let w2 = &w * &w;
    let l1 = &(&(&u[0] * &v[1]) + &(&u[1] * &v[0]).scale(&w)) + &(&(&u[2] * &v[0]).scale(&w2) + &(&u[2] * &v[1]).scale(&w));
    let l2 =
        &(&(&u[0] * &v[1]) + &(&u[1] * &v[0]).scale(&w2)) + &(&(&u[2] * &v[0]).scale(&w) + &(&u[2] * &v[1]).scale(&w2));
    let rhs = (&l1 * &l2).scale(&Scalar::ratio(2, 3));
    r.require(lhs == rhs, || format!("difference {}", &lhs - &rhs));
    r.require(l1.conj() == l2, || "factors are not conjugate".into());
    let ones = |x: &Poly| x.specialize(&[(0, Scalar::one()), (1, Scalar::one()), (2, Scalar::one())]);
    r.require(ones(&lhs) == ones(&rhs), || "mismatch at u = (1:1:1)".into());
    r.detail("field", "Q(sqrt(-3))");
    r
}

/// Checks every map in the catalog is homogeneous per block with no common
/// factor.
pub fn catalog_content_check() -> CheckReport {
    let mut r = CheckReport::new("map_catalog_well_formed");
    for m in super::catalog::map_catalog() {
        r.require(m.block_degrees().is_some(), || format!("{} is not homogeneous", m.name));
        match super::catalog::has_no_common_factor(&m) {
            Ok(true) => {}
            Ok(false) => r.fail(format!("{} has a common factor", m.name)),
            Err(e) => r.fail(e.to_string()),
        }
    }
    r.detail("maps", super::catalog::map_catalog().iter().map(|m| m.summary()).collect::<Vec<_>>());
    r
}

impl From<crate::algebra::AlgebraError> for MapError {
    fn from(e: crate::algebra::AlgebraError) -> Self {
        MapError::Algebra(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(r: CheckReport) {
        assert!(r.passed, "{}: {:?} {:?}", r.name, r.witness, r.details);
    }

    #[test]
    fn lands_in() {
        ok(segre_lands_in_perazzo());
        ok(rho_lands_in_coble());
    }

    #[test]
    fn igusa_substitution() {
        let r = verify_igusa_substitution(7);
        assert_eq!(r.details["scalar"], "1");
        ok(r);
    }

    #[test]
    fn involutions() {
        ok(perazzo_involution_check());
        ok(perazzo_swap_check());
    }

    #[test]
    fn plane_pair_involution_is_exact() {
        ok(plane_pair_involution_check());
    }

    #[test]
    fn compatibility() {
        ok(double_cover_involution_compatibility());
    }

    #[test]
    fn hyperplanes() {
        ok(verify_hyperplane_pullbacks());
    }

    #[test]
    fn verra_and_burkhardt() {
        ok(verra_pullback_check());
        ok(verify_burkhardt_factorization());
    }

    #[test]
    fn non_involution_fails() {
        // the Segre-type map composed with a swap of y-coordinates is not an involution
        let m = perazzo_to_hyperplane();
        let mut bad = perazzo_swap();
        bad.components.swap(0, 1);
        bad.components[0] = &bad.components[0] + &m.components[0];
        assert!(!verify_involution("bad", &bad, &Poly::zero(&bad.source)).passed);
    }

    #[test]
    fn wrong_target_fails() {
        let r = verify_lands_in("x", &rho(), &build(VarietyId::Perazzo, None).unwrap());
        assert!(!r.passed);
    }
}
