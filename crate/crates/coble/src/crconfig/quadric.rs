//! How the quadric `Q_inf = {sum x_i^2 = 0}` meets the configuration.

use serde::Serialize;

use crate::algebra::Scalar;
use crate::groups::{synthemes, Point};
use crate::report::CheckReport;
use crate::varieties::orbit_catalog;

use super::realization::duad_point;

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// The points where `Q_inf` meets line `s`, as roots of the restriction to
/// the line through its first two points.
pub fn quadric_on_line(s: usize) -> Vec<Point> {
    let a = duad_point(synthemes()[s][0]);
    let b = duad_point(synthemes()[s][1]);
    // sum (a + t b)^2 = aa + 2 ab t + bb t^2, with bb > 0
    let (aa, ab, bb) = (dot(&a, &a), dot(&a, &b), dot(&b, &b));
    let disc = &(&ab * &ab) - &(&aa * &bb);
    if disc.is_zero() {
        let t = -&ab / bb;
        return Point::new((0..6).map(|i| &a[i] + &(&t * &b[i])).collect()).into_iter().collect();
    }
    let root = Scalar::sqrt_rational(disc.as_rational().expect("rational coordinates"));
    [root.clone(), -root]
        .iter()
        .filter_map(|r| {
            let t = &(&(-&ab) + r) / &bb;
            Point::new((0..6).map(|i| &a[i] + &(&t * &b[i])).collect()).ok()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadricLineRow {
    pub line: usize,
    pub points: usize,
    pub in_sigma30: usize,
}

/// `Q_inf` misses the 15 points and meets each line in two points of
/// `Sigma30`.
pub fn quadric_meets_lines_check() -> CheckReport {
    let mut r = CheckReport::new("q_infinity_meets_cr_lines");
    for d in 0..15 {
        let p = duad_point(d);
        r.require(!dot(&p, &p).is_zero(), || format!("Q_inf contains point {d}"));
    }
    let sigma30 = &orbit_catalog().get("Sigma30").expect("catalog orbit").points;
    let mut rows = Vec::new();
    let mut all = Vec::new();
    for s in 0..15 {
        let pts = quadric_on_line(s);
        let inside = pts.iter().filter(|p| sigma30.contains(p)).count();
        r.require(pts.len() == 2 && inside == 2, || format!("line {s}: {} points, {inside} in Sigma30", pts.len()));
        all.extend(pts.clone());
        rows.push(QuadricLineRow { line: s, points: pts.len(), in_sigma30: inside });
    }
    all.sort();
    all.dedup();
    r.detail("distinct_points", all.len());
    r.detail("lines", rows);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_passes() {
        let r = quadric_meets_lines_check();
        assert!(r.passed, "{:?}", r.witness);
        assert_eq!(r.details["distinct_points"], 30);
    }
}
