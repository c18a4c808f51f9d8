use std::fmt;

use num_complex::Complex64;

/// Errors produced by the solver engines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Gamma evaluated at (or within [`crate::specfun::POLE_EPS`] of) a
    /// nonpositive integer.
    GammaPole(Complex64),
    /// A non-finite value reached a module boundary.
    NonFinite(&'static str),
    /// A precondition on parameters or configuration is violated; the
    /// message names the constraint.
    InvalidInput(String),
    /// Renormalization failed to keep an integration finite.
    Overflow(&'static str),
    /// Sweep results do not form the complete rectangular grid a report
    /// requires.
    IncompleteGrid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GammaPole(z) => write!(f, "Gamma pole at z = {z}"),
            Self::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Self::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Self::Overflow(what) => write!(f, "overflow in {what}"),
            Self::IncompleteGrid(msg) => write!(f, "incomplete grid: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
