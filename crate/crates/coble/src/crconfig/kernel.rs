//! Quartics in the hyperplane coordinates `x1..x5` (with
//! `x6 = -(x1 + ... + x5)`) singular along the lines of the configuration.

use crate::algebra::{Ctx, CtxRef, Mono, Poly, Scalar, ScalarMatrix};
use crate::groups::synthemes;
use crate::report::CheckReport;
use crate::varieties::igusa_quartic;

use super::realization::duad_point;

/// The 70 exponent vectors of quartic monomials in five variables.
pub fn quartic_monomials() -> Vec<[u32; 5]> {
    let mut out = Vec::new();
    for a in 0..=4u32 {
        for b in 0..=4 - a {
            for c in 0..=4 - a - b {
                for d in 0..=4 - a - b - c {
                    out.push([a, b, c, d, 4 - a - b - c - d]);
                }
            }
        }
    }
    out
}

fn hyperplane_ctx() -> CtxRef {
    Ctx::indexed("x", 1..=5)
}

/// Derivative of the monomial `e` in variable `k` at `p`.
fn partial_at(e: &[u32; 5], k: usize, p: &[Scalar]) -> Scalar {
    if e[k] == 0 {
        return Scalar::zero();
    }
    let mut v = Scalar::int(e[k] as i64);
    for (i, &x) in e.iter().enumerate() {
        let n = if i == k { x - 1 } else { x };
        v = &v * &p[i].pow(n);
    }
    v
}

/// The linear conditions that all five partials vanish at parameters
/// `0, 1, 2, 3` on each chosen line; four samples determine a cubic on a
/// line, so these are exactly the conditions of vanishing along the line.
pub fn condition_matrix(lines: &[usize]) -> ScalarMatrix {
    let mons = quartic_monomials();
    let mut rows = Vec::new();
    for &s in lines {
        let [d0, d1] = [synthemes()[s][0], synthemes()[s][1]];
        let (a, b) = (duad_point(d0), duad_point(d1));
        for t in 0..4 {
            let t = Scalar::int(t);
            let p: Vec<Scalar> = (0..5).map(|i| &a[i] + &(&t * &b[i])).collect();
            for k in 0..5 {
                rows.push(mons.iter().map(|e| partial_at(e, k, &p)).collect());
            }
        }
    }
    ScalarMatrix::from_rows(rows)
}

/// The Igusa quartic in the coordinates `x1..x5`.
pub fn igusa_on_hyperplane() -> Poly {
    let c = hyperplane_ctx();
    let g: Vec<Poly> = (0..5).map(|i| Poly::var(&c, i)).collect();
    let x6 = -g.iter().fold(Poly::zero(&c), |a, x| &a + x);
    let mut images = g;
    images.push(x6);
    igusa_quartic().substitute(&images).expect("arity")
}

/// Kernel dimension of the conditions for the given lines, with the
/// kernel generator as a quartic when the dimension is 1.
pub fn quartic_kernel(lines: &[usize]) -> (usize, Option<Poly>) {
    let k = condition_matrix(lines).kernel();
    let gen = (k.len() == 1).then(|| {
        let c = hyperplane_ctx();
        let terms = quartic_monomials().iter().zip(&k[0]).map(|(e, x)| (Mono(e.to_vec()), x.clone())).collect();
        Poly::from_terms(&c, terms)
    });
    (k.len(), gen)
}

/// All 15 lines: the kernel is one-dimensional and spanned by the Igusa
/// quartic. Dropping one or two lines leaves it one-dimensional; dropping
/// the first three enlarges it, so the conditions are not vacuous.
pub fn igusa_uniqueness_kernel() -> CheckReport {
    let mut r = CheckReport::new("cr_igusa_unique_quartic");
    let all: Vec<usize> = (0..15).collect();
    let m = condition_matrix(&all);
    r.detail("system", [m.rows(), m.cols()]);
    let (dim, gen) = quartic_kernel(&all);
    r.require(dim == 1, || format!("kernel dimension {dim}"));
    if let Some(g) = gen {
        let ok = g.ratio_to(&igusa_on_hyperplane()).is_some();
        r.require(ok, || "kernel generator is not the Igusa quartic".into());
    }
    let dropped: Vec<usize> = (1..=3).map(|k| quartic_kernel(&all[k..]).0).collect();
    r.require(dropped[0] == 1 && dropped[1] == 1, || format!("dimensions after dropping 1, 2 lines: {dropped:?}"));
    r.require(dropped[2] > 1, || format!("dropping 3 lines leaves dimension {}", dropped[2]));
    r.detail("kernel_dimension", dim);
    r.detail("kernel_dimension_dropping_1_2_3_lines", dropped);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventy_monomials() {
        assert_eq!(quartic_monomials().len(), 70);
    }

    #[test]
    fn igusa_is_in_the_kernel() {
        let m = condition_matrix(&(0..15).collect::<Vec<_>>());
        let f = igusa_on_hyperplane();
        let v: Vec<Scalar> = quartic_monomials()
            .iter()
            .map(|e| {
                f.terms().iter().find(|(m, _)| m.0 == e.to_vec()).map(|(_, x)| x.clone()).unwrap_or_else(Scalar::zero)
            })
            .collect();
        assert!(m.apply(&v).iter().all(Scalar::is_zero));
    }

    #[test]
    fn check_passes() {
        let r = igusa_uniqueness_kernel();
        assert!(r.passed, "{:?} {:?}", r.witness, r.details);
    }
}
