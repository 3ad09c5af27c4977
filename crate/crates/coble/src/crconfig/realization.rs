//! The 15 points `P_I` (the orbit of `(2:2:-1:-1:-1:-1)`) and the 15 lines
//! `x_i = x_j` for each pair of a syntheme, inside the hyperplane
//! `sum x_i = 0`.

use serde::Serialize;

use crate::algebra::{Scalar, ScalarMatrix};
use crate::groups::{duads, synthemes, Point};
use crate::report::CheckReport;
use crate::varieties::orbit_catalog;

use super::combinatorics::{incidence, incidence_matrix};

/// Coordinates of `P_I`: 2 on `I`, -1 elsewhere.
pub fn duad_point(d: usize) -> Vec<Scalar> {
    let pair = duads()[d];
    (0..6).map(|i| Scalar::int(if pair.contains(&i) { 2 } else { -1 })).collect()
}

/// A realization: each line is spanned by the points of its two duads of
/// smallest index.
#[derive(Clone, Debug)]
pub struct CrRealization {
    pub points: Vec<Vec<Scalar>>,
    pub lines: Vec<[Vec<Scalar>; 2]>,
}

pub fn realize() -> CrRealization {
    let points: Vec<Vec<Scalar>> = (0..15).map(duad_point).collect();
    let lines = synthemes().iter().map(|s| [points[s[0]].clone(), points[s[1]].clone()]).collect();
    CrRealization { points, lines }
}

fn rank(rows: &[&[Scalar]]) -> usize {
    ScalarMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).rank()
}

/// Whether `p` lies on the line spanned by `a` and `b`.
pub fn on_line(p: &[Scalar], line: &[Vec<Scalar>; 2]) -> bool {
    rank(&[&line[0], &line[1], p]) == 2
}

/// Whether `p` satisfies the equations `x_i = x_j` of syntheme `s`.
pub fn satisfies_line_equations(p: &[Scalar], s: usize) -> bool {
    synthemes()[s].iter().all(|&d| {
        let [i, j] = duads()[d];
        p[i] == p[j]
    })
}

/// The intersection point of two lines, if they meet in exactly one point.
pub fn intersection(a: &[Vec<Scalar>; 2], b: &[Vec<Scalar>; 2]) -> Option<Vec<Scalar>> {
    if rank(&[&a[0], &a[1], &b[0], &b[1]]) != 3 {
        return None;
    }
    // solve x a0 + y a1 = z b0 + w b1
    let cols: Vec<Vec<Scalar>> = (0..6)
        .map(|i| vec![a[0][i].clone(), a[1][i].clone(), -&b[0][i], -&b[1][i]])
        .collect();
    let k = ScalarMatrix::from_rows(cols).kernel();
    let v = k.first()?;
    Some((0..6).map(|i| &(&v[0] * &a[0][i]) + &(&v[1] * &a[1][i])).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationSummary {
    pub intersection_points: usize,
    pub in_upsilon15: usize,
}

/// Geometric incidence matches the combinatorial one and the line
/// equations; all points lie on `sum x_i = 0`; the lines meet pairwise in
/// exactly 15 points, all in `Upsilon15`.
pub fn realization_check() -> CheckReport {
    let mut r = CheckReport::new("cr_realization");
    let cr = realize();
    for (d, p) in cr.points.iter().enumerate() {
        let sum = p.iter().fold(Scalar::zero(), |a, x| &a + x);
        r.require(sum.is_zero(), || format!("point {d} is off the hyperplane"));
        for s in 0..15 {
            let geo = on_line(p, &cr.lines[s]);
            r.require(geo == incidence(d, s), || format!("point {d}, line {s}: geometric {geo}"));
            r.require(satisfies_line_equations(p, s) == geo, || format!("line {s} equations disagree at point {d}"));
        }
    }
    let mut meets: Vec<Point> = Vec::new();
    for a in 0..15 {
        for b in a + 1..15 {
            if let Some(p) = intersection(&cr.lines[a], &cr.lines[b]) {
                if let Ok(pt) = Point::new(p) {
                    if !meets.contains(&pt) {
                        meets.push(pt);
                    }
                }
            }
        }
    }
    let upsilon = &orbit_catalog().get("Upsilon15").expect("catalog orbit").points;
    let inside = meets.iter().filter(|p| upsilon.contains(p)).count();
    r.require(meets.len() == 15, || format!("{} intersection points", meets.len()));
    r.require(inside == meets.len(), || format!("{} intersection points outside Upsilon15", meets.len() - inside));
    r.detail("summary", RealizationSummary { intersection_points: meets.len(), in_upsilon15: inside });
    r.detail("incidence", incidence_matrix());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{duad_index, syntheme_index};

    #[test]
    fn p12_on_its_line() {
        let cr = realize();
        let s = syntheme_index([duad_index([0, 1]), duad_index([2, 3]), duad_index([4, 5])]);
        assert!(on_line(&cr.points[duad_index([0, 1])], &cr.lines[s]));
        assert_eq!(cr.points[0], [2, 2, -1, -1, -1, -1].map(Scalar::int).to_vec());
    }

    #[test]
    fn check_passes() {
        let r = realization_check();
        assert!(r.passed, "{:?}", r.witness);
    }
}
