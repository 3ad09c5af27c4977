//! The projective transformation carrying a normalized realization
//! (bipartite points at the coordinate points, jail in
//! `x1 - x2 + x3 - x4 + x5 = 0`) onto the standard one.

use serde::Serialize;

use crate::algebra::{Scalar, ScalarMatrix};
use crate::groups::{duad_index, duads, synthemes};
use crate::report::CheckReport;
use crate::varieties::proportional;

use super::jail::jail_decompositions;
use super::realization::duad_point;

/// The 6 x 5 matrix from `P4` to the hyperplane `sum x_i = 0` in `P5`.
pub fn transform_matrix() -> ScalarMatrix {
    ScalarMatrix::from_ints(&[
        &[1, 1, -2, 1, -2],
        &[-2, 1, 1, 1, -2],
        &[-2, 1, -2, 1, 1],
        &[1, -2, 1, 1, 1],
        &[1, -2, 1, -2, 1],
        &[1, 1, 1, -2, 1],
    ])
}

/// The 15 normalized points with their labels: `P1..P5`, the six `P_ij`,
/// `P1234`, `P1245`, `P2345` and `P0`.
pub fn normalized_points() -> Vec<(&'static str, [i64; 5])> {
    vec![
        ("P1", [1, 0, 0, 0, 0]),
        ("P2", [0, 1, 0, 0, 0]),
        ("P3", [0, 0, 1, 0, 0]),
        ("P4", [0, 0, 0, 1, 0]),
        ("P5", [0, 0, 0, 0, 1]),
        ("P12", [1, 1, 0, 0, 0]),
        ("P32", [0, 1, 1, 0, 0]),
        ("P52", [0, 1, 0, 0, 1]),
        ("P14", [1, 0, 0, 1, 0]),
        ("P34", [0, 0, 1, 1, 0]),
        ("P54", [0, 0, 0, 1, 1]),
        ("P1234", [1, 1, 1, 1, 0]),
        ("P1245", [1, 1, 0, 1, 1]),
        ("P2345", [0, 1, 1, 1, 1]),
        ("P0", [1, 1, 1, 1, 1]),
    ]
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::int(x)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PointImage {
    pub label: &'static str,
    /// 1-based duad.
    pub duad: [usize; 2],
}

/// Image duad of each normalized point, if all images are points `P_I`.
pub fn point_images() -> Vec<Option<usize>> {
    let m = transform_matrix();
    let targets: Vec<Vec<Scalar>> = (0..15).map(duad_point).collect();
    normalized_points()
        .iter()
        .map(|(_, p)| {
            let img = m.apply(&ints(p));
            targets.iter().position(|t| proportional(t, &img))
        })
        .collect()
}

/// Triples of normalized points that are collinear.
fn collinear_triples() -> Vec<[usize; 3]> {
    let pts: Vec<Vec<Scalar>> = normalized_points().iter().map(|(_, p)| ints(p)).collect();
    let mut out = Vec::new();
    for a in 0..15 {
        for b in a + 1..15 {
            for c in b + 1..15 {
                if ScalarMatrix::from_rows(vec![pts[a].clone(), pts[b].clone(), pts[c].clone()]).rank() == 2 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Every normalized point maps to a distinct `P_I`, with `P5 -> P_{1,2}`;
/// the 15 collinear triples map to the 15 lines; the normalized jail
/// hyperplane maps to one of the ten jail hyperplanes.
pub fn uniqueness_transform_check() -> CheckReport {
    let mut r = CheckReport::new("cr_uniqueness_transform");
    let imgs = point_images();
    let labels = normalized_points();
    let mut hit: Vec<usize> = imgs.iter().flatten().copied().collect();
    hit.sort_unstable();
    hit.dedup();
    r.require(hit.len() == 15 && imgs.iter().all(Option::is_some), || format!("images {imgs:?}"));
    r.require(imgs[4] == Some(duad_index([0, 1])), || format!("P5 goes to {:?}", imgs[4]));
    let triples = collinear_triples();
    r.require(triples.len() == 15, || format!("{} collinear triples", triples.len()));
    if imgs.iter().all(Option::is_some) {
        for t in &triples {
            let mut ds = t.map(|i| imgs[i].expect("checked"));
            ds.sort_unstable();
            r.require(synthemes().contains(&ds), || format!("triple {t:?} does not map to a line"));
        }
    }
    // the form sum_{K0} x_k pulled back along the matrix
    let m = transform_matrix();
    let target = ints(&[1, -1, 1, -1, 1]);
    let jail = jail_decompositions().into_iter().find(|d| {
        let row: Vec<Scalar> =
            (0..5).map(|j| d.k0.iter().fold(Scalar::zero(), |a, &i| &a + m.get(i, j))).collect();
        proportional(&row, &target)
    });
    match &jail {
        Some(d) => r.detail("jail_hyperplane", format!("sum x_k over {:?}", d.k0.map(|x| x + 1))),
        None => r.fail("normalized jail hyperplane does not map to a jail hyperplane"),
    }
    let images: Vec<PointImage> = labels
        .iter()
        .zip(&imgs)
        .filter_map(|((l, _), d)| d.map(|d| PointImage { label: l, duad: duads()[d].map(|x| x + 1) }))
        .collect();
    r.detail("images", images);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p5_goes_to_p12() {
        assert_eq!(point_images()[4], Some(0));
    }

    #[test]
    fn check_passes() {
        let r = uniqueness_transform_check();
        assert!(r.passed, "{:?}", r.witness);
    }
}
