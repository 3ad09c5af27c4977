//! Fibers of the Verra conic bundle: the conic `v^T (q0 + tau q_inf)(u) v = 0`
//! over a point `u`, its rank, and for rank 2 its two lines.

use serde::Serialize;

use crate::algebra::{Scalar, ScalarMatrix};
use crate::report::CheckReport;

use super::verra::verra_matrices;
use super::VarietyError;

/// A rank-2 conic written as `scalar * l1(v) * l2(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinePair {
    /// `d` of the field Q(sqrt(d)) holding the lines; 0 for Q.
    pub field: i64,
    pub scalar: Scalar,
    pub lines: [Vec<Scalar>; 2],
    /// The common point of the two lines (the kernel of the matrix).
    pub point: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicFiber {
    pub matrix: ScalarMatrix,
    pub rank: usize,
    /// Present when the rank is 2 and the square root needed for the
    /// splitting is available.
    pub factors: Option<LinePair>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentAction {
    Fixes,
    Swaps,
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Whether two vectors are proportional, by vanishing 2x2 minors.
pub fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| (&(&a[i] * &b[j]) - &(&a[j] * &b[i])).is_zero()))
}

/// The evaluated matrix `q0(u) + tau q_inf(u)`.
pub fn fiber_matrix(tau: &Scalar, u: &[Scalar]) -> Result<ScalarMatrix, VarietyError> {
    if u.len() != 3 || u.iter().all(Scalar::is_zero) {
        return Err(VarietyError::Parameter("u must be a nonzero point of P2".into()));
    }
    let (q0, qi) = verra_matrices();
    let mut pt = u.to_vec();
    pt.extend([Scalar::zero(), Scalar::zero(), Scalar::zero()]);
    let a = q0.eval(&pt)?;
    let b = qi.eval(&pt)?;
    let mut m = ScalarMatrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            m.set(i, j, a.get(i, j).try_add(&b.get(i, j).try_mul(tau)?)?);
        }
    }
    Ok(m)
}

fn quadratic_value(m: &ScalarMatrix, v: &[Scalar]) -> Scalar {
    dot(v, &m.apply(v))
}

/// Splits a rank-2 symmetric form into two lines.
///
/// With `a = Q(e) != 0` and `L = (Me).v`, the form `a Q - L^2` has rank 1,
/// given by `N = (Me)(Me)^T - a M`; hence `a Q = (L - r n.v)(L + r n.v)` with
/// `n` a nonzero row of `N` and `r^2 = 1/N_jj`.
pub fn split_rank_two(m: &ScalarMatrix) -> Option<LinePair> {
    let mut probes: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..3 {
        let mut e = vec![Scalar::zero(); 3];
        e[i] = Scalar::one();
        probes.push(e);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let mut e = vec![Scalar::zero(); 3];
            e[i] = Scalar::one();
            e[j] = Scalar::one();
            probes.push(e);
        }
    }
    let e = probes.into_iter().find(|e| !quadratic_value(m, e).is_zero())?;
    let a = quadratic_value(m, &e);
    let me = m.apply(&e);
    let mut n = ScalarMatrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            n.set(i, j, &(&me[i] * &me[j]) - &(&a * m.get(i, j)));
        }
    }
    let j = (0..3).find(|&j| !n.get(j, j).is_zero())?;
    let njj = n.get(j, j).clone();
    let inv = njj.inv().ok()?;
    let r = match inv.as_rational() {
        Some(q) => Scalar::sqrt_rational(q),
        None => inv.sqrt_in_field()?,
    };
    let field = r.field();
    let row = n.row(j);
    let l1: Vec<Scalar> = (0..3).map(|k| me[k].try_sub(&row[k].try_mul(&r).ok()?).ok()).collect::<Option<_>>()?;
    let l2: Vec<Scalar> = (0..3).map(|k| me[k].try_add(&row[k].try_mul(&r).ok()?).ok()).collect::<Option<_>>()?;
    let scalar = a.inv().ok()?;
    // Certify: M = scalar * sym(l1 l2^T).
    let half = Scalar::ratio(1, 2);
    for i in 0..3 {
        for k in 0..3 {
            let sym = (&l1[i] * &l2[k]).try_add(&(&l1[k] * &l2[i])).ok()?;
            if (&(&sym * &half) * &scalar).try_sub(m.get(i, k)).ok()?.is_zero() {
                continue;
            }
            return None;
        }
    }
    let point = m.kernel().into_iter().next()?;
    Some(LinePair { field, scalar, lines: [l1, l2], point })
}

/// The conic over `u` in the Verra threefold with parameter `tau`.
pub fn conic_fiber(tau: &Scalar, u: &[Scalar]) -> Result<ConicFiber, VarietyError> {
    let matrix = fiber_matrix(tau, u)?;
    let rank = matrix.rank();
    let factors = if rank == 2 { split_rank_two(&matrix) } else { None };
    Ok(ConicFiber { matrix, rank, factors })
}

/// How `v -> g v` acts on the two lines of a rank-2 fiber. Errors if `g`
/// does not preserve the conic up to a scalar.
pub fn component_action(g: &ScalarMatrix, f: &ConicFiber) -> Result<ComponentAction, VarietyError> {
    let pair = f.factors.as_ref().ok_or_else(|| VarietyError::Parameter("fiber is not a split line pair".into()))?;
    let pulled = g.transpose().mul(&f.matrix).mul(g);
    let flat = |m: &ScalarMatrix| (0..3).flat_map(|i| m.row(i)).collect::<Vec<_>>();
    if !proportional(&flat(&pulled), &flat(&f.matrix)) || pulled.rank() != f.matrix.rank() {
        return Err(VarietyError::NotPreserved);
    }
    let pull = |l: &[Scalar]| -> Vec<Scalar> { (0..3).map(|k| (0..3).fold(Scalar::zero(), |a, i| &a + &(&l[i] * g.get(i, k)))).collect() };
    let [l1, l2] = &pair.lines;
    let p1 = pull(l1);
    if proportional(&p1, l1) {
        Ok(ComponentAction::Fixes)
    } else if proportional(&p1, l2) {
        Ok(ComponentAction::Swaps)
    } else {
        Err(VarietyError::NotPreserved)
    }
}

/// The involution exchanging the components over `(0:1:1)` at `tau = 1`:
/// `v -> (v1, v1 - v3, v1 - v2)`.
pub fn fiber_involution() -> ScalarMatrix {
    ScalarMatrix::from_ints(&[&[1, 0, 0], &[1, 0, -1], &[1, -1, 0]])
}

fn point_011() -> Vec<Scalar> {
    vec![Scalar::zero(), Scalar::one(), Scalar::one()]
}

/// The fibers over `(0:1:1)` at `tau = 0` and `tau = 1` have rank 2 and the
/// expected matrices `1/2 [[0,1,-1],[1,0,0],[-1,0,0]]` and
/// `1/3 [[2,1,-2],[1,2,-1],[-2,-1,2]]`; both split into line pairs.
pub fn special_fiber_check() -> CheckReport {
    let mut r = CheckReport::new("conic_fibers_corank_one");
    let expected = [
        (Scalar::zero(), ScalarMatrix::from_ints(&[&[0, 1, -1], &[1, 0, 0], &[-1, 0, 0]]).scale(&Scalar::ratio(1, 2))),
        (Scalar::one(), ScalarMatrix::from_ints(&[&[2, 1, -2], &[1, 2, -1], &[-2, -1, 2]]).scale(&Scalar::ratio(1, 3))),
    ];
    let mut rows = Vec::new();
    for (tau, m) in expected {
        match conic_fiber(&tau, &point_011()) {
            Ok(f) => {
                r.require(f.matrix == m, || format!("tau = {tau}: matrix {:?}", f.matrix));
                r.require(f.rank == 2, || format!("tau = {tau}: rank {}", f.rank));
                r.require(f.factors.is_some(), || format!("tau = {tau}: no line pair"));
                let vertex = f.factors.as_ref().map(|x| x.point.iter().map(|c| c.to_string()).collect::<Vec<_>>());
                rows.push((tau.to_string(), f.rank, vertex));
            }
            Err(e) => r.fail(e.to_string()),
        }
    }
    r.detail("fibers", rows);
    r
}

/// The involution `g` fixes the two lines over `(0:1:1)` at `tau = 0` and
/// swaps them at `tau = 1`.
pub fn component_action_check() -> CheckReport {
    let mut r = CheckReport::new("conic_component_action");
    let g = fiber_involution();
    r.require(g.mul(&g) == ScalarMatrix::identity(3), || "g is not an involution".into());
    let mut out = Vec::new();
    for (tau, want) in [(Scalar::zero(), ComponentAction::Fixes), (Scalar::one(), ComponentAction::Swaps)] {
        match conic_fiber(&tau, &point_011()).and_then(|f| component_action(&g, &f)) {
            Ok(a) => {
                r.require(a == want, || format!("tau = {tau}: {a:?}"));
                out.push((tau.to_string(), a));
            }
            Err(e) => r.fail(format!("tau = {tau}: {e}")),
        }
    }
    r.detail("actions", out);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u011() -> Vec<Scalar> {
        vec![Scalar::zero(), Scalar::one(), Scalar::one()]
    }

    #[test]
    fn special_fibers() {
        let f0 = conic_fiber(&Scalar::zero(), &u011()).unwrap();
        assert_eq!(f0.rank, 2);
        let half = Scalar::ratio(1, 2);
        let expect0 = ScalarMatrix::from_ints(&[&[0, 1, -1], &[1, 0, 0], &[-1, 0, 0]]).scale(&half);
        assert_eq!(f0.matrix, expect0);
        let f1 = conic_fiber(&Scalar::one(), &u011()).unwrap();
        let expect1 = ScalarMatrix::from_ints(&[&[2, 1, -2], &[1, 2, -1], &[-2, -1, 2]]).scale(&Scalar::ratio(1, 3));
        assert_eq!(f1.matrix, expect1);
        assert_eq!(f1.rank, 2);
        assert!(proportional(&f1.factors.as_ref().unwrap().point, &[Scalar::one(), Scalar::zero(), Scalar::one()]));
    }

    #[test]
    fn involution_fixes_then_swaps() {
        let g = fiber_involution();
        let f0 = conic_fiber(&Scalar::zero(), &u011()).unwrap();
        let f1 = conic_fiber(&Scalar::one(), &u011()).unwrap();
        assert_eq!(component_action(&g, &f0).unwrap(), ComponentAction::Fixes);
        assert_eq!(component_action(&g, &f1).unwrap(), ComponentAction::Swaps);
        assert_eq!(component_action(&ScalarMatrix::identity(3), &f1).unwrap(), ComponentAction::Fixes);
    }

    #[test]
    fn checks_pass() {
        assert!(special_fiber_check().passed);
        assert!(component_action_check().passed);
    }

    #[test]
    fn generic_fiber_is_smooth() {
        let u = vec![Scalar::int(1), Scalar::int(2), Scalar::int(5)];
        assert_eq!(conic_fiber(&Scalar::int(2), &u).unwrap().rank, 3);
    }
}
