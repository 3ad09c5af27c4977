//! Jail and bipartite decompositions, one per split of `{1..6}` into two
//! triples `K0 | K1`.

use serde::Serialize;

use crate::algebra::{Scalar, ScalarMatrix};
use crate::groups::{duad_index, duads, synthemes, syntheme_index, Perm};
use crate::report::CheckReport;

use super::combinatorics::incidence;
use super::realization::{duad_point, intersection, realize};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Decomposition {
    /// `K0`, 0-based, containing 0.
    pub k0: [usize; 3],
    pub k1: [usize; 3],
    /// Syntheme indices `Gamma(g)` for the six bijections `K0 -> K1`.
    pub jail_lines: Vec<usize>,
    /// Duads `{k0, k1}`.
    pub jail_points: Vec<usize>,
    /// Synthemes `(k0 k1 | K0 - k0 | K1 - k1)`.
    pub bipartite_lines: Vec<usize>,
    /// Duads inside `K0` or inside `K1`.
    pub bipartite_points: Vec<usize>,
}

const S3: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

fn rest(k: &[usize; 3], x: usize) -> [usize; 2] {
    let v: Vec<usize> = k.iter().copied().filter(|&y| y != x).collect();
    [v[0], v[1]]
}

pub fn decomposition(k0: [usize; 3]) -> Decomposition {
    let k1: Vec<usize> = (0..6).filter(|x| !k0.contains(x)).collect();
    let k1 = [k1[0], k1[1], k1[2]];
    let jail_lines = S3
        .iter()
        .map(|g| syntheme_index([0, 1, 2].map(|i| duad_index([k0[i], k1[g[i]]]))))
        .collect();
    let mut jail_points = Vec::new();
    let mut bipartite_lines = Vec::new();
    for &a in &k0 {
        for &b in &k1 {
            jail_points.push(duad_index([a, b]));
            bipartite_lines.push(syntheme_index([duad_index([a, b]), duad_index(rest(&k0, a)), duad_index(rest(&k1, b))]));
        }
    }
    let bipartite_points = (0..15)
        .filter(|&d| {
            let [i, j] = duads()[d];
            (k0.contains(&i) && k0.contains(&j)) || (k1.contains(&i) && k1.contains(&j))
        })
        .collect();
    Decomposition { k0, k1, jail_lines, jail_points, bipartite_lines, bipartite_points }
}

/// The 10 decompositions.
pub fn jail_decompositions() -> Vec<Decomposition> {
    let mut out = Vec::new();
    for a in 1..6 {
        for b in a + 1..6 {
            out.push(decomposition([0, a, b]));
        }
    }
    out
}

/// Rank of the span of the points on the given lines.
fn span_rank(lines: &[usize]) -> usize {
    let rows: Vec<Vec<Scalar>> = lines.iter().flat_map(|&s| synthemes()[s].iter().map(|&d| duad_point(d))).collect();
    ScalarMatrix::from_rows(rows).rank()
}

fn indicator(k: &[usize; 3]) -> Vec<Scalar> {
    (0..6).map(|i| Scalar::int(k.contains(&i) as i64)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionRow {
    pub k0: String,
    pub jail_rank: usize,
    pub bipartite_rank: usize,
}

/// Ten decompositions with jail span rank 4 in the hyperplane
/// `sum_{K0} x_k = 0` and bipartite span rank 5; every bipartite line meets
/// the jail in one jail point; the jail points are the 3 x 3 grid of
/// pairwise intersections of the jail lines; the ten jail hyperplanes are
/// permuted by `S6`.
pub fn jail_check() -> CheckReport {
    let mut r = CheckReport::new("cr_jail_decompositions");
    let all = jail_decompositions();
    r.require(all.len() == 10, || format!("{} decompositions", all.len()));
    let cr = realize();
    let mut rows = Vec::new();
    for dec in &all {
        let label = format!("{:?}|{:?}", dec.k0.map(|x| x + 1), dec.k1.map(|x| x + 1));
        let mut lines = dec.jail_lines.clone();
        lines.extend(&dec.bipartite_lines);
        lines.sort_unstable();
        lines.dedup();
        r.require(lines.len() == 15, || format!("{label}: lines are not a partition"));
        let (jr, br) = (span_rank(&dec.jail_lines), span_rank(&dec.bipartite_lines));
        r.require(jr == 4 && br == 5, || format!("{label}: span ranks {jr}/{br}"));
        // linear forms vanishing on the jail: sum x_i and the K0 indicator
        let rows_j: Vec<Vec<Scalar>> = dec.jail_points.iter().map(|&d| duad_point(d)).collect();
        let annihilator = ScalarMatrix::from_rows(rows_j).kernel();
        let mut forms = annihilator.clone();
        forms.push(vec![Scalar::one(); 6]);
        forms.push(indicator(&dec.k0));
        r.require(annihilator.len() == 2 && ScalarMatrix::from_rows(forms).rank() == 2, || {
            format!("{label}: jail hyperplane is not sum over K0")
        });
        for &s in &dec.bipartite_lines {
            let n = dec.jail_points.iter().filter(|&&d| incidence(d, s)).count();
            r.require(n == 1, || format!("{label}: bipartite line {s} meets {n} jail points"));
        }
        let mut grid = Vec::new();
        for (i, &a) in dec.jail_lines.iter().enumerate() {
            for &b in &dec.jail_lines[i + 1..] {
                if let Some(p) = intersection(&cr.lines[a], &cr.lines[b]) {
                    grid.push(cr.points.iter().position(|q| crate::varieties::proportional(q, &p)));
                }
            }
        }
        let mut got: Vec<Option<usize>> = grid.clone();
        got.sort_unstable();
        let mut want: Vec<Option<usize>> = dec.jail_points.iter().map(|&d| Some(d)).collect();
        want.sort_unstable();
        r.require(got == want, || format!("{label}: jail lines meet in {grid:?}"));
        rows.push(DecompositionRow { k0: label, jail_rank: jr, bipartite_rank: br });
    }
    let splits: Vec<[usize; 3]> = all.iter().map(|d| d.k0).collect();
    for g in [Perm::c("(1 2)"), Perm::c("(1 2 3 4 5 6)")] {
        for k in &splits {
            let mut img = k.map(|x| g.at(x));
            img.sort_unstable();
            let comp: Vec<usize> = (0..6).filter(|x| !img.contains(x)).collect();
            let hit = splits.iter().any(|s| *s == img || s.as_slice() == comp.as_slice());
            r.require(hit, || format!("{g} moves {k:?} outside the ten splits"));
        }
    }
    r.detail("decompositions", rows);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_jail_in_x123() {
        let d = decomposition([0, 1, 2]);
        for &p in &d.jail_points {
            let v = duad_point(p);
            assert!((&(&v[0] + &v[1]) + &v[2]).is_zero());
        }
    }

    #[test]
    fn check_passes() {
        let r = jail_check();
        assert!(r.passed, "{:?}", r.witness);
    }
}
