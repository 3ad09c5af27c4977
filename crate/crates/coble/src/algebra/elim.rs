//! Resultants: Sylvester determinants for symbolic elimination, and
//! evaluation/interpolation when only one parameter remains.

use super::matrix::PolyMatrix;
use super::poly::Poly;
use super::univariate::{interpolate, node, UPoly};
use super::{AlgebraError, Scalar};

/// Sylvester matrix of `p` and `q` with respect to `var`.
pub fn sylvester(p: &Poly, q: &Poly, var: usize) -> Result<PolyMatrix, AlgebraError> {
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let a = p.coeffs_in(var);
    let b = q.coeffs_in(var);
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let ctx = p.ctx();
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![Poly::zero(ctx); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![Poly::zero(ctx); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(PolyMatrix::from_rows(ctx, rows))
}

/// `Res_var(p, q)` as the Sylvester determinant.
pub fn resultant(p: &Poly, q: &Poly, var: usize) -> Result<Poly, AlgebraError> {
    let m = p.degree_in(var).unwrap_or(0);
    let n = q.degree_in(var).unwrap_or(0);
    if m == 0 && n == 0 {
        return Ok(Poly::one(p.ctx()));
    }
    let s = sylvester(p, q, var)?;
    if s.rows() == 0 {
        return Ok(Poly::one(p.ctx()));
    }
    s.bareiss_det()
}

/// Discriminant-style resultant `Res_var(p, dp/dvar)`, without normalisation.
pub fn derivative_resultant(p: &Poly, var: usize) -> Result<Poly, AlgebraError> {
    resultant(p, &p.partial(var), var)
}

/// `Res_var(p, q)` for polynomials involving only `var` and `param`,
/// returned as a univariate polynomial in `param`.
///
/// The resultant is sampled at integer values of `param` where neither
/// leading coefficient vanishes and interpolated from
/// `deg_param p * deg_var q + deg_param q * deg_var p + 1` samples.
pub fn resultant_by_interpolation(p: &Poly, q: &Poly, var: usize, param: usize) -> Result<UPoly, AlgebraError> {
    for f in [p, q] {
        if f.support_vars().iter().any(|&v| v != var && v != param) {
            return Err(AlgebraError::Degenerate(format!("{f} involves more than two variables")));
        }
    }
    let dx_p = p.degree_in(var).unwrap_or(0) as usize;
    let dx_q = q.degree_in(var).unwrap_or(0) as usize;
    let ds_p = p.degree_in(param).unwrap_or(0) as usize;
    let ds_q = q.degree_in(param).unwrap_or(0) as usize;
    let bound = ds_p * dx_q + ds_q * dx_p;
    let lc_p = p.coeffs_in(var).pop().ok_or(AlgebraError::ZeroPolynomial)?;
    let lc_q = q.coeffs_in(var).pop().ok_or(AlgebraError::ZeroPolynomial)?;
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    let mut k = 0;
    while xs.len() <= bound {
        let s0 = node(k);
        k += 1;
        if lc_p.specialize(&[(param, s0.clone())]).is_zero() || lc_q.specialize(&[(param, s0.clone())]).is_zero() {
            continue;
        }
        let a = UPoly::from_poly(&p.specialize(&[(param, s0.clone())]), var)?;
        let b = UPoly::from_poly(&q.specialize(&[(param, s0.clone())]), var)?;
        ys.push(a.resultant(&b));
        xs.push(s0);
    }
    Ok(interpolate(&xs, &ys))
}

/// Scalar `Res(a, b)` of univariate polynomials, exposed for symmetry with
/// the symbolic version.
pub fn univariate_resultant(a: &UPoly, b: &UPoly) -> Scalar {
    a.resultant(b)
}

#[cfg(test)]
mod tests {
    use super::super::poly::Ctx;
    use super::*;

    #[test]
    fn sylvester_matches_euclid() {
        let ctx = Ctx::new(&["x", "t"]);
        let p = Poly::parse(&ctx, "x^3 + t*x - 2").unwrap();
        let q = Poly::parse(&ctx, "x^2 - t^2*x + 1").unwrap();
        let sym = resultant(&p, &q, 0).unwrap();
        let interp = resultant_by_interpolation(&p, &q, 0, 1).unwrap();
        assert_eq!(interp.to_poly(&ctx, 1), sym);
    }

    #[test]
    fn common_root_gives_zero() {
        let ctx = Ctx::new(&["x", "y"]);
        let p = Poly::parse(&ctx, "x^2 - y^2").unwrap();
        let q = Poly::parse(&ctx, "x - y").unwrap();
        assert!(resultant(&p, &q, 0).unwrap().is_zero());
    }
}
