//! Defining equations of the catalog varieties, built over shared
//! variable contexts.

use std::sync::OnceLock;

use crate::algebra::{elementary, gens, product, sum, Ctx, CtxRef, Poly, Scalar};

use super::VarietyError;

macro_rules! ctx_fn {
    ($(#[$m:meta])* $name:ident, $names:expr) => {
        $(#[$m])*
        pub fn $name() -> &'static CtxRef {
            static C: OnceLock<CtxRef> = OnceLock::new();
            C.get_or_init(|| Ctx::new(&$names))
        }
    };
}

ctx_fn!(/// `x1..x6`.
    x_ctx, ["x1", "x2", "x3", "x4", "x5", "x6"]);
ctx_fn!(/// `x1..x6, t`.
    xt_ctx, ["x1", "x2", "x3", "x4", "x5", "x6", "t"]);
ctx_fn!(/// `x0..x6`, with `x0` of weight 2.
    coble_ctx, ["x0", "x1", "x2", "x3", "x4", "x5", "x6"]);
ctx_fn!(/// `x0..x6, tau`.
    coble_tau_ctx, ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "tau"]);
ctx_fn!(/// Bihomogeneous coordinates on P2 x P2.
    uv_ctx, ["u1", "u2", "u3", "v1", "v2", "v3"]);
ctx_fn!(/// `u, v, tau`.
    uv_tau_ctx, ["u1", "u2", "u3", "v1", "v2", "v3", "tau"]);
ctx_fn!(/// Coordinates of the Perazzo cubic's ambient P5.
    yz_ctx, ["y1", "y2", "y3", "z1", "z2", "z3"]);
ctx_fn!(/// Plane coordinates for the Wiman-Edge pencil.
    w_ctx, ["w1", "w2", "w3"]);
ctx_fn!(/// `w1..w3, s`.
    ws_ctx, ["w1", "w2", "w3", "s"]);
ctx_fn!(/// `w1..w3, tau`.
    wtau_ctx, ["w1", "w2", "w3", "tau"]);

/// Catalog identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarietyId {
    /// `X_t`: `sum x^4 - t (sum x^2)^2` in the hyperplane.
    Pencil,
    Igusa,
    Burkhardt,
    /// Double cover of P4 branched along the Igusa quartic.
    Coble,
    /// `X_tau`: the Coble fourfold cut by `x0 + tau/2 sum x^2 = 0`.
    CobleSection,
    /// The quadric `sum x^2 = 0` in the hyperplane.
    QInfinity,
    Perazzo,
    /// `q0(u)(v) + tau q_inf(u)(v) = 0` in P2 x P2.
    Verra,
    /// `P0 + s P_inf = 0` in P2.
    WimanEdge,
}

impl VarietyId {
    pub const ALL: [VarietyId; 9] = [
        VarietyId::Pencil,
        VarietyId::Igusa,
        VarietyId::Burkhardt,
        VarietyId::Coble,
        VarietyId::CobleSection,
        VarietyId::QInfinity,
        VarietyId::Perazzo,
        VarietyId::Verra,
        VarietyId::WimanEdge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VarietyId::Pencil => "X_t",
            VarietyId::Igusa => "igusa",
            VarietyId::Burkhardt => "burkhardt",
            VarietyId::Coble => "coble",
            VarietyId::CobleSection => "X_tau",
            VarietyId::QInfinity => "Q_inf",
            VarietyId::Perazzo => "perazzo",
            VarietyId::Verra => "verra",
            VarietyId::WimanEdge => "wiman-edge",
        }
    }

    /// Name of the parameter, if the variety belongs to a family.
    pub fn parameter(self) -> Option<&'static str> {
        match self {
            VarietyId::Pencil => Some("t"),
            VarietyId::CobleSection | VarietyId::Verra => Some("tau"),
            VarietyId::WimanEdge => Some("s"),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<VarietyId, VarietyError> {
        let key = s.to_ascii_lowercase().replace(['_', '-'], "");
        let id = match key.as_str() {
            "xt" | "pencil" => VarietyId::Pencil,
            "igusa" => VarietyId::Igusa,
            "burkhardt" => VarietyId::Burkhardt,
            "coble" => VarietyId::Coble,
            "xtau" => VarietyId::CobleSection,
            "qinf" | "qinfinity" => VarietyId::QInfinity,
            "perazzo" => VarietyId::Perazzo,
            "verra" => VarietyId::Verra,
            "wimanedge" => VarietyId::WimanEdge,
            _ => return Err(VarietyError::UnknownId(s.to_string())),
        };
        Ok(id)
    }
}

/// A variety given by explicit equations. Parameters left unset become an
/// extra variable of weight 0 at the end of the context.
#[derive(Clone, Debug)]
pub struct VarietyDef {
    pub id: VarietyId,
    pub ctx: CtxRef,
    /// Grading of the context variables.
    pub weights: Vec<u32>,
    pub equations: Vec<Poly>,
    /// `(name, Some(value))` for a fixed parameter, `(name, None)` when symbolic.
    pub parameters: Vec<(String, Option<Scalar>)>,
}

impl VarietyDef {
    /// Whether every equation is homogeneous for the ambient grading.
    pub fn is_homogeneous(&self) -> bool {
        self.equations.iter().all(|f| f.weighted_degree_if_homogeneous(&self.weights).is_some())
    }

    /// The last equation: the quartic for varieties in the hyperplane.
    pub fn main_equation(&self) -> &Poly {
        self.equations.last().expect("varieties have equations")
    }

    /// Number of ambient (non-parameter) coordinates.
    pub fn ambient_dim(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0).count()
    }
}

fn power_sum(xs: &[Poly], k: u32) -> Poly {
    let ctx = xs[0].ctx().clone();
    let powers: Vec<Poly> = xs.iter().map(|x| x.pow(k)).collect();
    sum(&ctx, &powers)
}

/// `sum x_i` over the six coordinates `x1..x6` of `ctx`, starting at `first`.
fn hyperplane_in(ctx: &CtxRef, first: usize) -> Poly {
    let g = gens(ctx);
    sum(ctx, &g[first..first + 6])
}

/// `sum x_i^4 - t (sum x_i^2)^2` on the variables `first..first+6` of `ctx`.
fn quartic_in(ctx: &CtxRef, first: usize, t: &Poly) -> Poly {
    let g = gens(ctx);
    let xs = &g[first..first + 6];
    let p2 = power_sum(xs, 2);
    &power_sum(xs, 4) - &(t * &p2.pow(2))
}

pub fn hyperplane() -> Poly {
    hyperplane_in(x_ctx(), 0)
}

pub fn pencil_quartic(t: &Scalar) -> Poly {
    quartic_in(x_ctx(), 0, &Poly::constant(x_ctx(), t.clone()))
}

/// The pencil with `t` as the last variable of [`xt_ctx`].
pub fn pencil_quartic_symbolic() -> Poly {
    quartic_in(xt_ctx(), 0, &Poly::var(xt_ctx(), 6))
}

pub fn igusa_quartic() -> Poly {
    pencil_quartic(&Scalar::ratio(1, 4))
}

/// `sum x_i^2` on `x1..x6`.
pub fn q_infinity() -> Poly {
    power_sum(&gens(x_ctx()), 2)
}

/// `x0^2 - igusa(x)` in [`coble_ctx`].
pub fn coble_equation() -> Poly {
    let c = coble_ctx();
    let x0 = Poly::var(c, 0);
    &x0.pow(2) - &quartic_in(c, 1, &Poly::constant(c, Scalar::ratio(1, 4)))
}

/// `x0 + tau/2 sum x_i^2` in [`coble_tau_ctx`].
pub fn section_equation_symbolic() -> Poly {
    let c = coble_tau_ctx();
    let g = gens(c);
    let half_tau = g[7].scale(&Scalar::ratio(1, 2));
    &g[0] + &(&half_tau * &power_sum(&g[1..7], 2))
}

/// `y1 y2 y3 - z1 z2 z3`.
pub fn perazzo_cubic() -> Poly {
    let c = yz_ctx();
    let g = gens(c);
    &product(c, &g[0..3]) - &product(c, &g[3..6])
}

/// The quartic `(s2(y) - s2(z))^2 - 4 (s1(y) - s1(z))(s3(y) - s3(z))` on
/// which the Igusa quartic pulls back along the linear change of variables.
pub fn perazzo_branch_quartic() -> Poly {
    let c = yz_ctx();
    let g = gens(c);
    let (y, z) = (&g[0..3], &g[3..6]);
    let d = |k| &elementary(c, y, k) - &elementary(c, z, k);
    &d(2).pow(2) - &(&d(1) * &d(3)).scale(&Scalar::int(4))
}

/// `(w2^2 - w3^2)(w3^2 - w1^2)(w1^2 - w2^2)`.
pub fn wiman_edge_p0(ctx: &CtxRef) -> Poly {
    let w: Vec<Poly> = gens(ctx).into_iter().take(3).map(|x| x.pow(2)).collect();
    let f = [&w[1] - &w[2], &w[2] - &w[0], &w[0] - &w[1]];
    product(ctx, &f)
}

/// `w1^6 + w2^6 + w3^6 + (w1^2 + w2^2 + w3^2)(w1^4 + w2^4 + w3^4) - 12 w1^2 w2^2 w3^2`.
pub fn wiman_edge_pinf(ctx: &CtxRef) -> Poly {
    let w: Vec<Poly> = gens(ctx).into_iter().take(3).collect();
    let p6 = power_sum(&w, 6);
    let mixed = &power_sum(&w, 2) * &power_sum(&w, 4);
    let sq: Vec<Poly> = w.iter().map(|x| x.pow(2)).collect();
    &(&p6 + &mixed) - &product(ctx, &sq).scale(&Scalar::int(12))
}

fn param_poly(ctx: &CtxRef, value: Option<&Scalar>) -> Poly {
    match value {
        Some(v) => Poly::constant(ctx, v.clone()),
        None => Poly::var(ctx, ctx.len() - 1),
    }
}

/// Builds a catalog variety. `param` fixes the family parameter; `None`
/// keeps it symbolic. Supplying a parameter to a fixed variety is an error.
pub fn build(id: VarietyId, param: Option<&Scalar>) -> Result<VarietyDef, VarietyError> {
    if param.is_some() && id.parameter().is_none() {
        return Err(VarietyError::Parameter(format!("{} takes no parameter", id.name())));
    }
    let symbolic = param.is_none() && id.parameter().is_some();
    let pick = |fixed: &'static CtxRef, with_param: &'static CtxRef| if symbolic { with_param } else { fixed };
    let (ctx, weights, equations): (CtxRef, Vec<u32>, Vec<Poly>) = match id {
        VarietyId::Pencil | VarietyId::Igusa | VarietyId::Burkhardt => {
            let c = pick(x_ctx(), xt_ctx());
            let t = match id {
                VarietyId::Igusa => Poly::constant(c, Scalar::ratio(1, 4)),
                VarietyId::Burkhardt => Poly::constant(c, Scalar::ratio(1, 2)),
                _ => param_poly(c, param),
            };
            (c.clone(), vec![1; 6], vec![hyperplane_in(c, 0), quartic_in(c, 0, &t)])
        }
        VarietyId::QInfinity => (x_ctx().clone(), vec![1; 6], vec![hyperplane(), q_infinity()]),
        VarietyId::Coble => {
            let c = coble_ctx();
            let mut w = vec![2];
            w.extend([1; 6]);
            (c.clone(), w, vec![hyperplane_in(c, 1), coble_equation()])
        }
        VarietyId::CobleSection => {
            let c = pick(coble_ctx(), coble_tau_ctx());
            let g = gens(c);
            let tau = param_poly(c, param);
            let section = &g[0] + &(&tau.scale(&Scalar::ratio(1, 2)) * &power_sum(&g[1..7], 2));
            let coble = coble_equation().embed(c, &[0, 1, 2, 3, 4, 5, 6]);
            let mut w = vec![2];
            w.extend([1; 6]);
            (c.clone(), w, vec![hyperplane_in(c, 1), coble, section])
        }
        VarietyId::Perazzo => (yz_ctx().clone(), vec![1; 6], vec![perazzo_cubic()]),
        VarietyId::Verra => {
            let c = pick(uv_ctx(), uv_tau_ctx());
            let (q0, qi) = super::verra::verra_matrices_in(c);
            let v: Vec<Poly> = gens(c)[3..6].to_vec();
            let tau = param_poly(c, param);
            let f = &q0.quadratic_form(&v) + &(&tau * &qi.quadratic_form(&v));
            (c.clone(), vec![1; 6], vec![f])
        }
        VarietyId::WimanEdge => {
            let c = pick(w_ctx(), ws_ctx());
            let s = param_poly(c, param);
            let f = &wiman_edge_p0(c) + &(&s * &wiman_edge_pinf(c));
            (c.clone(), vec![1; 3], vec![f])
        }
    };
    let mut weights = weights;
    weights.resize(ctx.len(), 0);
    let parameters = id.parameter().map(|n| vec![(n.to_string(), param.cloned())]).unwrap_or_default();
    Ok(VarietyDef { id, ctx, weights, equations, parameters })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pencil_at_quarter_is_igusa() {
        let a = build(VarietyId::Pencil, Some(&Scalar::ratio(1, 4))).unwrap();
        let b = build(VarietyId::Igusa, None).unwrap();
        assert_eq!(a.equations, b.equations);
    }

    #[test]
    fn section_at_zero_is_x0() {
        let x = build(VarietyId::CobleSection, Some(&Scalar::zero())).unwrap();
        assert_eq!(x.main_equation(), &Poly::var(coble_ctx(), 0));
    }

    #[test]
    fn all_catalog_entries_are_homogeneous() {
        for id in VarietyId::ALL {
            let v = build(id, None).unwrap();
            assert!(v.is_homogeneous(), "{}", id.name());
            assert_eq!(VarietyId::parse(id.name()).unwrap(), id);
        }
        assert!(VarietyId::parse("nope").is_err());
    }
}
