//! The symmetric matrices `q0(u)`, `q_inf(u)` whose pencil defines the Verra
//! threefolds as conic bundles over the `u`-plane, and the identity
//! expressing their discriminant in the Wiman-Edge pencil.

use crate::algebra::{gens, CtxRef, Poly, PolyMatrix, Scalar};
use crate::report::CheckReport;

use super::catalog::{uv_ctx, uv_tau_ctx, wiman_edge_p0, wiman_edge_pinf, wtau_ctx};

/// `(q0, q_inf)` with `u1, u2, u3` taken as the first three variables of `ctx`.
pub fn verra_matrices_in(ctx: &CtxRef) -> (PolyMatrix, PolyMatrix) {
    let g = gens(ctx);
    let (u1, u2, u3) = (&g[0], &g[1], &g[2]);
    let zero = Poly::zero(ctx);
    let half = Scalar::ratio(1, 2);
    let a = (u3 * &(u2 - u1)).scale(&half);
    let b = (u2 * &(u1 - u3)).scale(&half);
    let c = (u1 * &(u3 - u2)).scale(&half);
    let q0 = PolyMatrix::from_rows(
        ctx,
        vec![
            vec![zero.clone(), a.clone(), b.clone()],
            vec![a, zero.clone(), c.clone()],
            vec![b, c, zero],
        ],
    );
    let sixth = Scalar::ratio(1, 6);
    let four = Scalar::int(4);
    let two = Scalar::int(2);
    let diag = |p: &Poly, q: &Poly| (&(&(p * p) - &(p * q)) + &(q * q)).scale(&four).scale(&sixth);
    let off = |p: &Poly, q: &Poly, r: &Poly| {
        // r (p + q) - 2 p q - 2 r^2
        (&(&(r * &(p + q)) - &(p * q).scale(&two)) - &(r * r).scale(&two)).scale(&sixth)
    };
    let m12 = off(u1, u2, u3);
    let m13 = off(u1, u3, u2);
    let m23 = off(u2, u3, u1);
    let qi = PolyMatrix::from_rows(
        ctx,
        vec![
            vec![diag(u2, u3), m12.clone(), m13.clone()],
            vec![m12, diag(u1, u3), m23.clone()],
            vec![m13, m23, diag(u1, u2)],
        ],
    );
    (q0, qi)
}

/// `(q0, q_inf)` over the coordinates `u, v` of P2 x P2.
pub fn verra_matrices() -> (PolyMatrix, PolyMatrix) {
    verra_matrices_in(uv_ctx())
}

/// Checks `12 det(q0 + tau q_inf) = (5 tau^2 + 3) P0 + (tau^3 - tau) P_inf`
/// after `u1 = w2 + w3, u2 = w1 + w3, u3 = w1 + w2`.
pub fn discriminant_identity_check() -> CheckReport {
    let mut r = CheckReport::new("verra_discriminant_identity");
    let c = uv_tau_ctx();
    let (q0, qi) = verra_matrices_in(c);
    let tau = Poly::var(c, 6);
    let pencil = q0.add(&qi.scale(&tau));
    let wt = wtau_ctx();
    let w = gens(wt);
    let zero = Poly::zero(wt);
    let images = vec![&w[1] + &w[2], &w[0] + &w[2], &w[0] + &w[1], zero.clone(), zero.clone(), zero, w[3].clone()];
    let det = match pencil.substitute(&images).and_then(|m| m.bareiss_det()) {
        Ok(d) => d.scale(&Scalar::int(12)),
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    let t = &w[3];
    let five_t2_3 = &(t * t).scale(&Scalar::int(5)) + &Poly::int(wt, 3);
    let t3_t = &t.pow(3) - t;
    let rhs = &(&five_t2_3 * &wiman_edge_p0(wt)) + &(&t3_t * &wiman_edge_pinf(wt));
    let diff = &det - &rhs;
    r.require(diff.is_zero(), || format!("difference {diff}"));
    r.detail("degree_in_w", det.specialize(&[(3, Scalar::int(2))]).degree());
    let at_zero = det.specialize(&[(3, Scalar::zero())]);
    let p0 = wiman_edge_p0(wt).scale(&Scalar::int(3));
    r.require(at_zero == p0, || "12 det q0 != 3 P0".into());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_are_symmetric_quadratic() {
        let (q0, qi) = verra_matrices();
        assert!(q0.is_symmetric() && qi.is_symmetric());
        for m in [&q0, &qi] {
            for i in 0..3 {
                for j in 0..3 {
                    let e = m.get(i, j);
                    assert!(e.is_zero() || (e.is_homogeneous() && e.degree() == Some(2)));
                }
            }
        }
        let trace = &(q0.get(0, 0) + q0.get(1, 1)) + q0.get(2, 2);
        assert!(trace.is_zero());
    }

    #[test]
    fn discriminant_identity_holds() {
        let r = discriminant_identity_check();
        assert!(r.passed, "{:?}", r.witness);
    }
}
