//! Exact arithmetic: integer polynomials, real and complex algebraic numbers,
//! cyclotomic fields, and a small generic matrix layer.

pub mod complex;
pub mod cyclotomic;
pub mod matrix;
pub mod numeric;
pub mod poly;
pub mod real;

pub use complex::ComplexAlgebraic;
pub use cyclotomic::{CyclotomicElement, RootOfUnity};
pub use matrix::{Matrix, Scalar};
pub use poly::{IntPoly, Rat};
pub use real::AlgebraicReal;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("zero polynomial has no isolated root")]
    ZeroPolynomial,
    #[error("isolating interval is empty")]
    EmptyInterval,
    #[error("no root in the given interval")]
    NoRootInInterval,
    #[error("{0} roots in the given interval, expected exactly one")]
    MultipleRootsInInterval(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    NegativeSqrt,
    #[error("element is not real")]
    NotReal,
    #[error("conductor must be positive")]
    BadConductor,
    #[error("could not isolate a root from its floating approximation")]
    IsolationFailed,
}
