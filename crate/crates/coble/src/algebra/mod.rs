//! Exact arithmetic: rational and quadratic scalars, sparse multivariate
//! polynomials in grevlex order, matrices and resultants.

mod elim;
mod matrix;
mod poly;
mod scalar;
mod text;
mod univariate;

pub use elim::{derivative_resultant, resultant, resultant_by_interpolation, sylvester, univariate_resultant};
pub use matrix::{PolyMatrix, ScalarMatrix};
pub use poly::{elementary, gens, product, sum, Ctx, CtxRef, Mono, Poly};
pub use scalar::{rat, rational_sqrt, squarefree_split, Scalar};
pub use text::{format_poly, parse_poly, parse_scalar};
pub use univariate::{interpolate, node, UPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot mix Q(sqrt({0})) with Q(sqrt({1}))")]
    FieldMismatch(i64, i64),
    #[error("sqrt({0}) does not define a quadratic field")]
    BadField(i64),
    #[error("polynomial rings differ: [{0}] vs [{1}]")]
    ContextMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("expected {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
}
