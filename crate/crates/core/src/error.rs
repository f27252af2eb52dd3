use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::jet::JetError;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),
    #[error("too close to a singularity at x = {0}")]
    Singularity(f64),
    #[error("imaginary residue {im:e} exceeds tolerance for real part {re:e}")]
    ImaginaryResidue { re: f64, im: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
