//! The embedding of `S4 x S2` into `S6` induced by `rho`.
//!
//! `S4` acts diagonally on P2 x P2 through the 3x3 matrices permuting the
//! four base points, and `S2` swaps the factors. For each element `h` there
//! is a permutation `pi` of `1..6`, a scalar `c` and a sign `e` with
//! `x_i o rho o h = c x_pi(i) o rho` and `x0 o rho o h = e c^2 x0 o rho`.
//! Since `pi` composes contravariantly, the embedding sends `h` to `pi^-1`.

use serde::Serialize;

use crate::algebra::{Poly, Scalar, ScalarMatrix};
use crate::groups::Perm;
use crate::report::CheckReport;
use crate::varieties::{four_point_sign, proportional, s4_generators};

use super::catalog::rho;
use super::MapError;

/// An element of `S4 x S2` as a projective matrix and a factor-swap flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePairElement {
    pub matrix: ScalarMatrix,
    pub swap: bool,
}

impl PlanePairElement {
    pub fn identity() -> Self {
        PlanePairElement { matrix: ScalarMatrix::identity(3), swap: false }
    }

    pub fn factor_swap() -> Self {
        PlanePairElement { matrix: ScalarMatrix::identity(3), swap: true }
    }

    pub fn diagonal(m: ScalarMatrix) -> Self {
        PlanePairElement { matrix: normalize(&m), swap: false }
    }

    /// `self` after `o`.
    pub fn compose(&self, o: &Self) -> Self {
        PlanePairElement { matrix: normalize(&self.matrix.mul(&o.matrix)), swap: self.swap ^ o.swap }
    }

    /// Substitution images for `(u, v)` realising the action on P2 x P2.
    fn images(&self, ctx: &crate::algebra::CtxRef) -> Vec<Poly> {
        let g = crate::algebra::gens(ctx);
        let apply = |block: &[Poly]| -> Vec<Poly> {
            (0..3)
                .map(|i| (0..3).fold(Poly::zero(ctx), |a, j| &a + &block[j].scale(self.matrix.get(i, j))))
                .collect()
        };
        let (mut u, mut v) = (apply(&g[0..3]), apply(&g[3..6]));
        if self.swap {
            std::mem::swap(&mut u, &mut v);
        }
        u.extend(v);
        u
    }
}

/// Scales so the first nonzero entry is 1.
fn normalize(m: &ScalarMatrix) -> ScalarMatrix {
    let flat: Vec<Scalar> = (0..3).flat_map(|i| m.row(i)).collect();
    match flat.iter().find(|x| !x.is_zero()) {
        Some(lead) => m.scale(&lead.inv().expect("nonzero")),
        None => m.clone(),
    }
}

/// The signed permutation induced on `(x0, ..., x6)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Intertwiner {
    /// `pi` with `x_i o rho o h = c x_pi(i) o rho`.
    pub pi: Perm,
    pub scale: Scalar,
    /// `e` with `x0 o rho o h = e c^2 x0 o rho`.
    pub x0_sign: i32,
}

impl Intertwiner {
    /// The image in `S6`.
    pub fn image(&self) -> Perm {
        self.pi.inverse()
    }
}

/// Solves for the intertwiner of `h`.
pub fn intertwiner(h: &PlanePairElement) -> Result<Intertwiner, MapError> {
    let m = rho();
    let images = h.images(&m.source);
    let moved: Vec<Poly> = m.components.iter().map(|p| p.substitute(&images)).collect::<Result<_, _>>()?;
    let mut targets = Vec::new();
    let mut scale: Option<Scalar> = None;
    for i in 1..7 {
        let hit = (1..7).find_map(|j| moved[i].ratio_to(&m.components[j]).map(|c| (j, c)));
        let (j, c) = hit.ok_or_else(|| MapError::NoIntertwiner(format!("x{i} has no proportional image")))?;
        if scale.as_ref().is_some_and(|s| *s != c) {
            return Err(MapError::NoIntertwiner(format!("x{i} scales by {c}")));
        }
        scale = Some(c);
        targets.push(j);
    }
    let c = scale.expect("six coordinates");
    let pi = Perm::from_images(&targets).map_err(|e| MapError::NoIntertwiner(e.to_string()))?;
    let e = moved[0]
        .ratio_to(&m.components[0].scale(&(&c * &c)))
        .ok_or_else(|| MapError::NoIntertwiner("x0 is not preserved".into()))?;
    let x0_sign = match e.to_i64() {
        Some(1) => 1,
        Some(-1) => -1,
        _ => return Err(MapError::NoIntertwiner(format!("x0 scales by {e}"))),
    };
    Ok(Intertwiner { pi, scale: c, x0_sign })
}

/// The 48 elements of `S4 x S2` generated by the three `S4` generators and
/// the factor swap.
pub fn plane_pair_group() -> Vec<PlanePairElement> {
    let mut gens: Vec<PlanePairElement> = s4_generators().into_iter().map(PlanePairElement::diagonal).collect();
    gens.push(PlanePairElement::factor_swap());
    let mut elems = vec![PlanePairElement::identity()];
    let mut i = 0;
    while i < elems.len() {
        for g in &gens {
            let n = g.compose(&elems[i]);
            if !elems.contains(&n) {
                elems.push(n);
            }
        }
        i += 1;
    }
    elems
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddedGenerator {
    pub label: &'static str,
    pub image: String,
    pub cycle_type: Vec<usize>,
    pub x0_sign: i32,
}

/// The embedding on the whole group with its generator images.
#[derive(Clone, Debug)]
pub struct InducedEmbedding {
    pub elements: Vec<(PlanePairElement, Intertwiner)>,
    pub generators: Vec<EmbeddedGenerator>,
}

pub fn induced_embedding() -> Result<InducedEmbedding, MapError> {
    let elements = plane_pair_group()
        .into_iter()
        .map(|h| intertwiner(&h).map(|i| (h, i)))
        .collect::<Result<Vec<_>, _>>()?;
    let labels = ["(12) on u and v", "(123) on u and v", "fiber involution g", "factor swap"];
    let mut gens: Vec<PlanePairElement> = s4_generators().into_iter().map(PlanePairElement::diagonal).collect();
    gens.push(PlanePairElement::factor_swap());
    let generators = labels
        .iter()
        .zip(&gens)
        .map(|(label, h)| {
            let it = intertwiner(h)?;
            let img = it.image();
            Ok(EmbeddedGenerator { label, image: img.to_string(), cycle_type: img.cycle_type(), x0_sign: it.x0_sign })
        })
        .collect::<Result<Vec<_>, MapError>>()?;
    Ok(InducedEmbedding { elements, generators })
}

fn find<'a>(emb: &'a InducedEmbedding, h: &PlanePairElement) -> Option<&'a Intertwiner> {
    emb.elements.iter().find(|(g, _)| g == h).map(|(_, i)| i)
}

/// Every element has an intertwiner; the assignment is an injective
/// homomorphism; the `x0` sign is the sign of the image, and equals the
/// four-point sign on `S4`; transpositions of `S4` land on `[2, 2, 2]`.
pub fn induced_embedding_check() -> CheckReport {
    let mut r = CheckReport::new("induced_embedding_nonstandard");
    let emb = match induced_embedding() {
        Ok(e) => e,
        Err(e) => return CheckReport::from_error(&r.name, e),
    };
    r.require(emb.elements.len() == 48, || format!("group has {} elements", emb.elements.len()));
    let mut images: Vec<Perm> = emb.elements.iter().map(|(_, i)| i.image()).collect();
    images.sort();
    images.dedup();
    r.require(images.len() == emb.elements.len(), || "embedding is not injective".into());
    for (h1, i1) in &emb.elements {
        for (h2, i2) in &emb.elements {
            let Some(i12) = find(&emb, &h1.compose(h2)) else {
                r.fail("group is not closed");
                return r;
            };
            if i12.image() != i1.image().compose(&i2.image()) {
                r.fail(format!("not a homomorphism at {} and {}", i1.image(), i2.image()));
                return r;
            }
        }
    }
    for (h, it) in &emb.elements {
        let img = it.image();
        r.require(it.x0_sign == img.sign(), || format!("{img}: x0 sign {} vs parity", it.x0_sign));
        if !h.swap {
            let s4 = four_point_sign(&h.matrix);
            r.require(s4 == Some(it.x0_sign), || format!("{img}: four-point sign {s4:?}"));
            if s4 == Some(-1) && is_transposition(&h.matrix) {
                r.require(img.cycle_type() == vec![2, 2, 2], || format!("transposition goes to {img}"));
            }
        }
    }
    if let Some((_, id)) = emb.elements.iter().find(|(h, _)| *h == PlanePairElement::identity()) {
        r.require(id.image().is_identity() && id.x0_sign == 1, || "identity is not fixed".into());
    }
    r.detail("generators", &emb.generators);
    r
}

/// Whether `m` permutes the four base points as a transposition.
fn is_transposition(m: &ScalarMatrix) -> bool {
    let pts: Vec<Vec<Scalar>> = [[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
        .iter()
        .map(|p| p.iter().map(|&x| Scalar::int(x)).collect())
        .collect();
    let fixed = pts.iter().filter(|p| proportional(p, &m.apply(p))).count();
    fixed == 2 && m.mul(m) == ScalarMatrix::identity(3).scale(m.mul(m).get(0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_holds() {
        let r = induced_embedding_check();
        assert!(r.passed, "{:?} {:?}", r.witness, r.details);
    }

    #[test]
    fn diagonal_transposition_image() {
        let h = PlanePairElement::diagonal(ScalarMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]));
        let it = intertwiner(&h).unwrap();
        assert_eq!(it.x0_sign, -1);
        assert_eq!(it.image().cycle_type(), vec![2, 2, 2]);
    }

    #[test]
    fn identity_is_trivial() {
        let it = intertwiner(&PlanePairElement::identity()).unwrap();
        assert!(it.image().is_identity());
        assert_eq!(it.scale, Scalar::one());
    }
}
