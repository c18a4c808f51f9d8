//! Shared domain types: potential parameters and eigenvalue records.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Records closer than this (in the complex-E plane) are considered the
/// same eigenvalue: far below eigenvalue spacing, far above solver noise.
pub const DEDUP_RADIUS: f64 = 1e-6;

/// Exponent pair (a, b) of the potential V(x) = (ix)^a |x|^b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    pub a: f64,
    pub b: f64,
}

impl PotentialParams {
    /// Validated constructor. Requires |a| < 2 (so cos(aπ/4) > 0 and a
    /// decaying real-axis solution exists) and a + b > 0 (|V| → ∞, the
    /// potential confines).
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let p = Self { a, b };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.a.is_finite() || !self.b.is_finite() {
            return Err(Error::NonFinite("potential parameters"));
        }
        if self.a >= 2.0 || self.a <= -2.0 {
            return Err(Error::InvalidInput(format!(
                "a = {} violates -2 < a < 2 (no decaying real-axis solution otherwise)",
                self.a
            )));
        }
        if self.a + self.b <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "a + b = {} violates a + b > 0 (potential must confine)",
                self.a + self.b
            )));
        }
        Ok(())
    }

    /// The ix|x| case solved exactly by the `exact` engine.
    pub fn ix_abs_x() -> Self {
        Self { a: 1.0, b: 1.0 }
    }
}

/// How an eigenvalue was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "exact-secular")]
    ExactSecular,
    #[serde(rename = "shooting")]
    Shooting,
    #[serde(rename = "wkb-estimate")]
    WkbEstimate,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ExactSecular => "exact-secular",
            Self::Shooting => "shooting",
            Self::WkbEstimate => "wkb-estimate",
        })
    }
}

/// One computed eigenvalue.
///
/// `residual` is the secular-function magnitude at the root and never
/// exceeds the tolerance `tol` recorded with it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueRecord {
    pub value: Complex64,
    pub index: usize,
    pub method: Method,
    pub residual: f64,
    pub tol: f64,
    pub params: PotentialParams,
}

/// Sort records by (Re, Im), drop duplicates closer than `radius`
/// (keeping the smaller residual), and re-assign ordinals.
pub fn sort_dedup(records: &mut Vec<EigenvalueRecord>, radius: f64) {
    records.sort_by(|p, q| {
        (p.value.re, p.value.im)
            .partial_cmp(&(q.value.re, q.value.im))
            .expect("finite eigenvalues")
    });
    let mut kept: Vec<EigenvalueRecord> = Vec::with_capacity(records.len());
    for rec in records.drain(..) {
        match kept
            .iter_mut()
            .find(|k| (k.value - rec.value).norm() <= radius)
        {
            Some(dup) => {
                if rec.residual < dup.residual {
                    *dup = rec;
                }
            }
            None => kept.push(rec),
        }
    }
    for (i, rec) in kept.iter_mut().enumerate() {
        rec.index = i;
    }
    *records = kept;
}
