//! Singularity and node certification for quartics in the hyperplane
//! `sum x_i = 0`.
//!
//! A point `p` of the hyperplane is singular on `F = 0` when `F(p) = 0` and
//! `grad F(p)` is proportional to `(1,..,1)`, tested through differences of
//! gradient entries so that no division is involved. It is a node when the
//! Hessian restricted to the hyperplane has rank 4: at a singular point `p`
//! itself spans the radical (Euler), so rank 4 means the tangent cone is a
//! smooth quadric cone.

use crate::algebra::{ScalarMatrix, Scalar, UPoly};
use crate::groups::Point;

use super::catalog::{pencil_quartic, pencil_quartic_symbolic, x_ctx, VarietyDef};
use super::orbits::orbit_catalog;
use super::VarietyError;

pub fn on_hyperplane(p: &Point) -> bool {
    p.dim() == 6 && p.coords().iter().fold(Scalar::zero(), |a, c| &a + c).is_zero()
}

/// The quartic of a variety living in the hyperplane of P5, with all
/// parameters fixed.
fn hyperplane_quartic(x: &VarietyDef) -> Result<&crate::algebra::Poly, VarietyError> {
    if x.ctx.names() != x_ctx().names() || x.equations.len() != 2 {
        return Err(VarietyError::Parameter(format!("{} is not a fixed quartic in the hyperplane", x.id.name())));
    }
    Ok(x.main_equation())
}

fn check_point(p: &Point) -> Result<(), VarietyError> {
    if !on_hyperplane(p) {
        return Err(VarietyError::NotOnHyperplane(p.to_string()));
    }
    Ok(())
}

fn singular_for(f: &crate::algebra::Poly, p: &Point) -> Result<bool, VarietyError> {
    if !f.eval(p.coords())?.is_zero() {
        return Ok(false);
    }
    let grad: Vec<Scalar> = f.gradient().iter().map(|g| g.eval(p.coords())).collect::<Result<_, _>>()?;
    Ok(grad.windows(2).all(|w| (&w[0] - &w[1]).is_zero()))
}

pub fn is_singular_at(x: &VarietyDef, p: &Point) -> Result<bool, VarietyError> {
    check_point(p)?;
    singular_for(hyperplane_quartic(x)?, p)
}

/// Rank of the Hessian of `f` at `p`, restricted to the hyperplane through
/// the basis `e_i - e_6`.
pub fn hyperplane_hessian_rank(f: &crate::algebra::Poly, p: &Point) -> Result<usize, VarietyError> {
    let grad = f.gradient();
    let mut h = ScalarMatrix::zeros(6, 6);
    for i in 0..6 {
        for j in i..6 {
            let v = grad[i].partial(j).eval(p.coords())?;
            h.set(i, j, v.clone());
            h.set(j, i, v);
        }
    }
    let mut b = ScalarMatrix::zeros(6, 5);
    for i in 0..5 {
        b.set(i, i, Scalar::one());
        b.set(5, i, Scalar::int(-1));
    }
    Ok(b.transpose().mul(&h).mul(&b).rank())
}

/// Whether a singular point is a node. Errors if `p` is not singular.
pub fn is_node_at(x: &VarietyDef, p: &Point) -> Result<bool, VarietyError> {
    check_point(p)?;
    let f = hyperplane_quartic(x)?;
    if !singular_for(f, p)? {
        return Err(VarietyError::NotSingular(p.to_string()));
    }
    Ok(hyperplane_hessian_rank(f, p)? == 4)
}

/// Singularity summary of one catalog orbit on `X_t`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OrbitStatus {
    pub orbit: &'static str,
    pub size: usize,
    pub singular: usize,
    pub nodes: usize,
}

/// Checks every point of every catalog orbit on `X_t`; nodes are counted
/// among the singular points.
pub fn orbit_singularities(t: &Scalar) -> Result<Vec<OrbitStatus>, VarietyError> {
    let f = pencil_quartic(t);
    let mut out = Vec::new();
    for o in &orbit_catalog().orbits {
        let (mut singular, mut nodes) = (0, 0);
        for p in &o.points {
            check_point(p)?;
            if singular_for(&f, p)? {
                singular += 1;
                if hyperplane_hessian_rank(&f, p)? == 4 {
                    nodes += 1;
                }
            }
        }
        out.push(OrbitStatus { orbit: o.name, size: o.points.len(), singular, nodes });
    }
    Ok(out)
}

/// The values of `t` for which `p` is singular on `X_t`, as the monic gcd
/// of the (linear in `t`) singularity conditions. The zero polynomial means
/// `p` is singular for every `t`; a constant means for none.
pub fn singular_parameter(p: &Point) -> Result<UPoly, VarietyError> {
    check_point(p)?;
    let f = pencil_quartic_symbolic();
    let at_p = |g: &crate::algebra::Poly| -> Result<UPoly, VarietyError> {
        let vals: Vec<(usize, Scalar)> = p.coords().iter().cloned().enumerate().collect();
        Ok(UPoly::from_poly(&g.specialize(&vals), 6)?)
    };
    let grad: Vec<UPoly> = (0..6).map(|i| at_p(&f.partial(i))).collect::<Result<_, _>>()?;
    let mut conditions = vec![at_p(&f)?];
    conditions.extend(grad.windows(2).map(|w| w[0].sub(&w[1])));
    Ok(conditions.iter().fold(UPoly::zero(), |g, c| g.gcd(c)))
}

#[cfg(test)]
mod tests {
    use super::super::catalog::{build, VarietyId};
    use super::*;

    fn pencil(t: Scalar) -> VarietyDef {
        build(VarietyId::Pencil, Some(&t)).unwrap()
    }

    #[test]
    fn sigma15_singular_only_at_one_half() {
        let p = Point::from_ints(&[1, -1, 0, 0, 0, 0]);
        assert!(is_singular_at(&pencil(Scalar::ratio(1, 2)), &p).unwrap());
        assert!(!is_singular_at(&pencil(Scalar::ratio(1, 6)), &p).unwrap());
        assert!(is_node_at(&pencil(Scalar::ratio(1, 2)), &p).unwrap());
    }

    #[test]
    fn rejects_points_off_the_hyperplane() {
        let p = Point::from_ints(&[1, 0, 0, 0, 0, 0]);
        assert!(matches!(is_singular_at(&pencil(Scalar::one()), &p), Err(VarietyError::NotOnHyperplane(_))));
    }

    #[test]
    fn node_needs_a_singular_point() {
        let p = Point::from_ints(&[1, -1, 0, 0, 0, 0]);
        assert!(matches!(is_node_at(&pencil(Scalar::one()), &p), Err(VarietyError::NotSingular(_))));
    }
}
