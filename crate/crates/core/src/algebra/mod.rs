//! Exact univariate polynomials and rational functions over rational or
//! Gaussian-rational coefficients.

mod coef;
mod poly;
mod ratfunc;
mod render;

use num_complex::Complex64;
use thiserror::Error;

pub use coef::{Coef, GaussianRational};
pub use poly::{GaussPoly, Poly, RatPoly};
pub use ratfunc::{BinomialPower, GaussRatFn, RatFn, RationalFunction, Substitution};
pub use render::{poly_latex, poly_text, rf_latex, rf_text, RationalFunctionJson};

pub(crate) use coef::rational_to_f64;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum AlgebraError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(char, char),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at z = {0}")]
    Pole(Complex64),
    #[error("substitution requires Gaussian coefficients")]
    RequiresGaussian,
    #[error("{0}")]
    Parse(String),
}
