//! The named rational maps, each given by homogeneous polynomial
//! components.

use serde::Serialize;

use crate::algebra::{elementary, gens, CtxRef, Poly, Scalar, UPoly};
use crate::varieties::{coble_ctx, uv_ctx, x_ctx, yz_ctx};

use super::MapError;

#[derive(Clone, Debug)]
pub struct RationalMap {
    pub name: &'static str,
    pub source: CtxRef,
    pub target: CtxRef,
    pub components: Vec<Poly>,
    /// Target coordinates split into independently scaled blocks
    /// (one block for a map to P^n, two for P2 x P2).
    pub blocks: Vec<std::ops::Range<usize>>,
    /// Weights of the target coordinates; component `i` has degree
    /// `weights[i]` times the block degree.
    pub weights: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MapSummary {
    pub name: &'static str,
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub degrees: Vec<u32>,
}

impl RationalMap {
    pub fn new(name: &'static str, source: &CtxRef, target: &CtxRef, components: Vec<Poly>) -> Result<Self, MapError> {
        if components.len() != target.len() {
            return Err(MapError::Arity { expected: target.len(), got: components.len() });
        }
        if components.iter().all(Poly::is_zero) {
            return Err(MapError::Degenerate(format!("{name}: all components vanish")));
        }
        if components.iter().any(|c| c.ctx() != source) {
            return Err(MapError::Degenerate(format!("{name}: component outside the source ring")));
        }
        let n = components.len();
        Ok(RationalMap {
            name,
            source: source.clone(),
            target: target.clone(),
            components,
            blocks: vec![0..n],
            weights: vec![1; n],
        })
    }

    fn with_blocks(mut self, blocks: Vec<std::ops::Range<usize>>) -> Self {
        self.blocks = blocks;
        self
    }

    fn with_weights(mut self, weights: Vec<u32>) -> Self {
        self.weights = weights;
        self
    }

    /// Degree of each block, if every component is homogeneous of degree
    /// its weight times one common block degree.
    pub fn block_degrees(&self) -> Option<Vec<u32>> {
        self.blocks
            .iter()
            .map(|b| {
                let mut deg = None;
                for i in b.clone() {
                    let c = &self.components[i];
                    if c.is_zero() {
                        continue;
                    }
                    let (d, w) = (c.degree()?, self.weights[i]);
                    if !c.is_homogeneous() || d % w != 0 {
                        return None;
                    }
                    match deg {
                        None => deg = Some(d / w),
                        Some(a) if a == d / w => {}
                        _ => return None,
                    }
                }
                deg
            })
            .collect()
    }

    /// `self` after `inner`: substitutes the components of `inner` into
    /// those of `self`.
    pub fn after(&self, inner: &RationalMap) -> Result<RationalMap, MapError> {
        if inner.target != self.source {
            return Err(MapError::Degenerate(format!("{} cannot follow {}", self.name, inner.name)));
        }
        let comps = self.components.iter().map(|c| c.substitute(&inner.components)).collect::<Result<Vec<_>, _>>()?;
        Ok(RationalMap::new("composite", &inner.source, &self.target, comps)?
            .with_blocks(self.blocks.clone())
            .with_weights(self.weights.clone()))
    }

    /// Rescales every component by `c`.
    pub fn rescale(&self, c: &Scalar) -> RationalMap {
        let mut m = self.clone();
        m.components = m.components.iter().map(|p| p.scale(c)).collect();
        m
    }

    pub fn summary(&self) -> MapSummary {
        MapSummary {
            name: self.name,
            source: self.source.names().to_vec(),
            target: self.target.names().to_vec(),
            degrees: self.block_degrees().unwrap_or_default(),
        }
    }
}

/// Restriction of `p` to the line `a + t b`, as a polynomial in `t`.
fn restrict_to_line(p: &Poly, a: &[i64], b: &[i64]) -> Result<UPoly, MapError> {
    let ctx = crate::algebra::Ctx::new(&["t"]);
    let t = Poly::var(&ctx, 0);
    let images: Vec<Poly> = a.iter().zip(b).map(|(&x, &y)| &Poly::int(&ctx, x) + &t.scale(&Scalar::int(y))).collect();
    Ok(UPoly::from_poly(&p.substitute(&images)?, 0)?)
}

/// Checks that no block has a common factor, through the gcd of the
/// restrictions to two fixed lines: a common factor `h` of the block
/// restricts to a common factor of degree `deg h` on any line whose
/// direction `b` has `h(b) != 0`, so a constant gcd on either line rules
/// out every `h` not vanishing at that direction.
pub fn has_no_common_factor(m: &RationalMap) -> Result<bool, MapError> {
    const LINES: [([i64; 8], [i64; 8]); 2] = [
        ([3, -7, 11, 2, -5, 13, 1, -4], [1, 4, -2, 9, -6, 5, 8, 3]),
        ([-2, 5, 1, -9, 6, 4, -3, 7], [7, -1, 3, 2, -8, 1, 5, -6]),
    ];
    let n = m.source.len();
    if n > 8 {
        return Err(MapError::Degenerate(format!("{}: too many source variables", m.name)));
    }
    let lines: Vec<(&[i64], &[i64])> = LINES.iter().map(|(a, b)| (&a[..n], &b[..n])).collect();
    for b in &m.blocks {
        let mut any = false;
        for &(a, d) in &lines {
            let mut g = UPoly::zero();
            for c in &m.components[b.clone()] {
                g = g.gcd(&restrict_to_line(c, a, d)?);
            }
            if g.degree() == Some(0) {
                any = true;
                break;
            }
        }
        if !any {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(u, v) -> (u2 v3 : u3 v1 : u1 v2 : u3 v2 : u1 v3 : u2 v1) = (y : z)`.
pub fn segre_to_perazzo() -> RationalMap {
    let c = uv_ctx();
    let g = gens(c);
    let m = |i: usize, j: usize| &g[i] * &g[3 + j];
    let comps = vec![m(1, 2), m(2, 0), m(0, 1), m(2, 1), m(0, 2), m(1, 0)];
    RationalMap::new("segre_to_perazzo", c, yz_ctx(), comps).expect("valid map")
}

/// The linear change of variables carrying `(y, z)` to the hyperplane
/// coordinates: `x_i = y_i - 2/3 s1(y) + 1/3 s1(z)`,
/// `x_{3+i} = z_i + 1/3 s1(y) - 2/3 s1(z)`.
pub fn perazzo_to_hyperplane() -> RationalMap {
    let c = yz_ctx();
    let g = gens(c);
    let s1y = &(&g[0] + &g[1]) + &g[2];
    let s1z = &(&g[3] + &g[4]) + &g[5];
    let (third, two_thirds) = (Scalar::ratio(1, 3), Scalar::ratio(2, 3));
    let mut comps = Vec::new();
    for i in 0..3 {
        comps.push(&(&g[i] - &s1y.scale(&two_thirds)) + &s1z.scale(&third));
    }
    for i in 0..3 {
        comps.push(&(&g[3 + i] + &s1y.scale(&third)) - &s1z.scale(&two_thirds));
    }
    RationalMap::new("perazzo_to_hyperplane", c, x_ctx(), comps).expect("valid map")
}

/// The covering involution of the Perazzo cubic:
/// `(y_i : z_i) -> ((s1(y) - s1(z)) y_i - (s2(y) - s2(z)) : (s1(y) - s1(z)) z_i - (s2(y) - s2(z)))`.
pub fn perazzo_involution() -> RationalMap {
    let c = yz_ctx();
    let g = gens(c);
    let (y, z) = (&g[0..3], &g[3..6]);
    let d1 = &elementary(c, y, 1) - &elementary(c, z, 1);
    let d2 = &elementary(c, y, 2) - &elementary(c, z, 2);
    let comps = g.iter().map(|w| &(&d1 * w) - &d2).collect();
    RationalMap::new("perazzo_involution", c, c, comps).expect("valid map")
}

/// The swap `y <-> z`, an exact involution.
pub fn perazzo_swap() -> RationalMap {
    let c = yz_ctx();
    let g = gens(c);
    let comps = vec![g[3].clone(), g[4].clone(), g[5].clone(), g[0].clone(), g[1].clone(), g[2].clone()];
    RationalMap::new("perazzo_swap", c, c, comps).expect("valid map")
}

/// The birational involution of P2 x P2 lifting the covering involution:
/// with `D1 = u2 v3 - u3 v2`, `D2 = u3 v1 - u1 v3`, `D3 = u1 v2 - u2 v1`,
/// `u'_i = (v_j - v_k)/D_i` and `v'_i = (u_j - u_k)/D_i` for cyclic
/// `(i, j, k)`, cleared by `D1 D2 D3`.
pub fn plane_pair_involution() -> RationalMap {
    let c = uv_ctx();
    let g = gens(c);
    let (u, v) = (&g[0..3], &g[3..6]);
    let det = |i: usize, j: usize| &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
    let d = [det(1, 2), det(2, 0), det(0, 1)];
    let others = |i: usize| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        &d[j] * &d[k]
    };
    let mut comps = Vec::new();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        comps.push(&(&v[j] - &v[k]) * &others(i));
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        comps.push(&(&u[j] - &u[k]) * &others(i));
    }
    RationalMap::new("plane_pair_involution", c, c, comps).expect("valid map").with_blocks(vec![0..3, 3..6])
}

/// The map from P2 x P2 to the Coble fourfold: `x0` is the quartic
/// `-u1u3v1v2 - u1u2v2v3 - u2u3v1v3 + u1u2v1v3 + u2u3v1v2 + u1u3v2v3`
/// and `x1..x6` are the linear forms in `(y, z)` of the Segre-type map.
pub fn rho() -> RationalMap {
    rho_with_sign(1)
}

/// As [`rho`] with `x0` multiplied by `sign`.
pub fn rho_with_sign(sign: i64) -> RationalMap {
    let c = uv_ctx();
    let g = gens(c);
    let uv = |i: usize, j: usize, k: usize, l: usize| &(&g[i] * &g[j]) * &(&g[3 + k] * &g[3 + l]);
    let pos = [uv(0, 1, 0, 2), uv(1, 2, 0, 1), uv(0, 2, 1, 2)];
    let neg = [uv(0, 2, 0, 1), uv(0, 1, 1, 2), uv(1, 2, 0, 2)];
    let x0 = pos.iter().fold(Poly::zero(c), |a, p| &a + p) - neg.iter().fold(Poly::zero(c), |a, p| &a + p);
    let s = segre_to_perazzo().components;
    let third = Scalar::ratio(1, 3);
    let lin = |coef: [i64; 6]| {
        coef.iter().zip(&s).fold(Poly::zero(c), |a, (&k, p)| &a + &p.scale(&Scalar::int(k))).scale(&third)
    };
    let mut comps = vec![x0.scale(&Scalar::int(sign))];
    for coef in [
        [1, -2, -2, 1, 1, 1],
        [-2, 1, -2, 1, 1, 1],
        [-2, -2, 1, 1, 1, 1],
        [1, 1, 1, 1, -2, -2],
        [1, 1, 1, -2, 1, -2],
        [1, 1, 1, -2, -2, 1],
    ] {
        comps.push(lin(coef));
    }
    let name = if sign == 1 { "rho" } else { "rho_sigma" };
    RationalMap::new(name, c, coble_ctx(), comps).expect("valid map").with_weights(vec![2, 1, 1, 1, 1, 1, 1])
}

/// Every named map.
pub fn map_catalog() -> Vec<RationalMap> {
    vec![
        segre_to_perazzo(),
        perazzo_to_hyperplane(),
        perazzo_involution(),
        perazzo_swap(),
        plane_pair_involution(),
        rho(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_maps_are_homogeneous_without_common_factor() {
        for m in map_catalog() {
            assert!(m.block_degrees().is_some(), "{}", m.name);
            assert!(has_no_common_factor(&m).unwrap(), "{}", m.name);
        }
        assert_eq!(plane_pair_involution().block_degrees().unwrap(), vec![5, 5]);
        assert_eq!(rho().block_degrees().unwrap(), vec![2]);
    }

    #[test]
    fn common_factor_is_detected() {
        let m = segre_to_perazzo();
        let u1 = Poly::var(&m.source, 0);
        let mut bad = m.clone();
        bad.components = m.components.iter().map(|p| p * &u1).collect();
        assert!(!has_no_common_factor(&bad).unwrap());
    }
}
