//! Exact engine for H = p² + ix|x|.
//!
//! Matching the decaying parabolic-cylinder solutions of the two half-lines
//! at the origin reduces the eigenvalue condition to a secular function
//! built from two Gamma ratios that are complex conjugates of each other
//! for real E (the PT-symmetric form of reality):
//!
//!   F(E) = e^{iπ/8} Γ(¾ − ¼Ee^{−iπ/4}) / Γ(¼ − ¼Ee^{−iπ/4})
//!        + e^{−iπ/8} Γ(¾ − ¼Ee^{+iπ/4}) / Γ(¼ − ¼Ee^{+iπ/4}).
//!
//! Eigenvalues are the zeros of F: one real root near 1.258092 and
//! complex-conjugate pairs elsewhere.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootfind::{bisect, newton_complex, sign_change_brackets};
use crate::specfun::gamma_ratio;
use crate::types::{sort_dedup, EigenvalueRecord, Method, PotentialParams, DEDUP_RADIUS};

mod contour;

pub use contour::ContourGrid;

/// Default real-axis scan window and sample count for [`real_roots_exact`];
/// comfortably covers the zero-curve figure's range.
pub const DEFAULT_REAL_WINDOW: (f64, f64) = (0.0, 30.0);
pub const DEFAULT_REAL_SCAN: usize = 3000;

/// Default complex-E window (re_min, re_max, im_min, im_max) for
/// [`complex_roots_exact`] and [`contour_grid`].
pub const DEFAULT_COMPLEX_WINDOW: (f64, f64, f64, f64) = (0.0, 20.0, -15.0, 15.0);

/// Relative step for the Newton finite-difference derivative, scaled by
/// max(1, |E|) to stay conditioned for large energies.
const NEWTON_FD_SCALE: f64 = 1e-6;

/// One secular-function sample: the energy and F(E) there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SecularSample {
    pub energy: Complex64,
    pub value: Complex64,
}

/// Seed bookkeeping from a complex root search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SeedStats {
    /// Grid cells whose corners showed a sign change in both Re F and Im F.
    pub seeds: usize,
    /// Newton runs that converged to |F| ≤ tol inside the window.
    pub converged: usize,
    /// Seeds silently dropped (non-convergence, pole hits, escape).
    pub dropped: usize,
}

/// The secular function F(E).
///
/// F is real on the real-E axis (its two terms are conjugates there) and
/// satisfies F(conj E) = conj F(E). Gamma poles can only be hit at complex
/// E on the rays arg E = ±π/4.
pub fn secular_exact(energy: Complex64) -> Result<Complex64> {
    if !energy.re.is_finite() || !energy.im.is_finite() {
        return Err(Error::NonFinite("secular_exact energy"));
    }
    let w_minus = 0.25 * energy * Complex64::from_polar(1.0, -FRAC_PI_4);
    let w_plus = 0.25 * energy * Complex64::from_polar(1.0, FRAC_PI_4);
    let phase = Complex64::from_polar(1.0, FRAC_PI_8);
    let quarter = Complex64::new(0.25, 0.0);
    let three_quarter = Complex64::new(0.75, 0.0);
    let term_minus = phase * gamma_ratio(three_quarter - w_minus, quarter - w_minus)?;
    let term_plus = phase.conj() * gamma_ratio(three_quarter - w_plus, quarter - w_plus)?;
    Ok(term_minus + term_plus)
}

/// F(E) for real E, evaluated as a real number.
fn secular_real(e: f64) -> f64 {
    secular_exact(Complex64::new(e, 0.0))
        .expect("no Gamma poles on the real axis")
        .re
}

/// Real eigenvalues: scan F on a uniform grid over [e_min, e_max], bracket
/// sign changes, refine by bisection to |F| ≤ tol.
pub fn real_roots_exact(
    e_min: f64,
    e_max: f64,
    n_scan: usize,
    tol: f64,
) -> Result<Vec<EigenvalueRecord>> {
    if !e_min.is_finite() || !e_max.is_finite() || e_min >= e_max {
        return Err(Error::InvalidInput(format!(
            "scan window [{e_min}, {e_max}] violates e_min < e_max"
        )));
    }
    if n_scan < 2 {
        return Err(Error::InvalidInput(format!("n_scan = {n_scan} violates n_scan >= 2")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tol = {tol} violates tol > 0")));
    }

    let samples: Vec<(f64, f64)> = (0..n_scan)
        .into_par_iter()
        .map(|i| {
            let e = e_min + (e_max - e_min) * i as f64 / (n_scan - 1) as f64;
            (e, secular_real(e))
        })
        .collect();

    let mut records: Vec<EigenvalueRecord> = sign_change_brackets(&samples)
        .into_par_iter()
        .filter_map(|(lo, hi)| {
            let mut refined = bisect(lo, hi, f64::EPSILON * e_max.abs().max(1.0), |e| {
                secular_real(e)
            });
            // the bisection limit is in E; keep halving-independent |F| check
            let mut residual = secular_real(refined).abs();
            if residual > tol {
                // retry once from the bracket midpoint with a tighter x-limit
                refined = bisect(lo, hi, 0.0, |e| secular_real(e));
                residual = secular_real(refined).abs();
            }
            (residual <= tol).then(|| EigenvalueRecord {
                value: Complex64::new(refined, 0.0),
                index: 0,
                method: Method::ExactSecular,
                residual,
                tol,
                params: PotentialParams::ix_abs_x(),
            })
        })
        .collect();

    sort_dedup(&mut records, DEDUP_RADIUS);
    Ok(records)
}

/// Complex eigenvalues in a rectangular window, with their conjugate
/// partners. See [`complex_roots_exact_with_stats`] for seed diagnostics.
pub fn complex_roots_exact(
    window: (f64, f64, f64, f64),
    n_re: usize,
    n_im: usize,
    tol: f64,
) -> Result<Vec<EigenvalueRecord>> {
    complex_roots_exact_with_stats(window, n_re, n_im, tol).map(|(records, _)| records)
}

/// Grid-seeded complex Newton search: every cell where both Re F and Im F
/// change sign among the corners seeds an iteration; non-convergent seeds
/// are dropped and counted, converged roots are deduplicated and returned
/// together with their conjugate partners.
pub fn complex_roots_exact_with_stats(
    window: (f64, f64, f64, f64),
    n_re: usize,
    n_im: usize,
    tol: f64,
) -> Result<(Vec<EigenvalueRecord>, SeedStats)> {
    let (re_min, re_max, im_min, im_max) = window;
    validate_window(window)?;
    if n_re < 8 || n_im < 8 {
        return Err(Error::InvalidInput(format!(
            "grid {n_re}x{n_im} violates n_re >= 8 and n_im >= 8"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tol = {tol} violates tol > 0")));
    }

    let values = fill_grid(window, n_re, n_im);
    let at = |i: usize, j: usize| values[i * n_im + j];

    let mut seeds = Vec::new();
    for i in 0..n_re - 1 {
        for j in 0..n_im - 1 {
            let corners = [at(i, j), at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)];
            let Some(corners) = corners.into_iter().collect::<Option<Vec<Complex64>>>() else {
                continue;
            };
            let re_change = mixed_signs(corners.iter().map(|f| f.re));
            let im_change = mixed_signs(corners.iter().map(|f| f.im));
            if re_change && im_change {
                let e_re = re_min + (re_max - re_min) * (i as f64 + 0.5) / (n_re - 1) as f64;
                let e_im = im_min + (im_max - im_min) * (j as f64 + 0.5) / (n_im - 1) as f64;
                seeds.push(Complex64::new(e_re, e_im));
            }
        }
    }

    let diag = Complex64::new(re_max - re_min, im_max - im_min).norm();
    let polished: Vec<Option<(Complex64, f64)>> = seeds
        .par_iter()
        .map(|&seed| {
            newton_complex(
                |z| secular_exact(z).ok(),
                seed,
                tol,
                NEWTON_FD_SCALE,
                60,
                2.0 * diag,
            )
        })
        .collect();

    let mut stats = SeedStats {
        seeds: seeds.len(),
        ..SeedStats::default()
    };
    let slack = 1e-9 * diag.max(1.0);
    let mut records = Vec::new();
    for polish in polished {
        let in_window = polish.map_or(false, |(root, _)| {
            root.re >= re_min - slack
                && root.re <= re_max + slack
                && root.im >= im_min - slack
                && root.im <= im_max + slack
        });
        match polish {
            Some((root, residual)) if in_window => {
                stats.converged += 1;
                records.push(EigenvalueRecord {
                    value: root,
                    index: 0,
                    method: Method::ExactSecular,
                    residual,
                    tol,
                    params: PotentialParams::ix_abs_x(),
                });
            }
            _ => stats.dropped += 1,
        }
    }

    sort_dedup(&mut records, DEDUP_RADIUS);
    // PT symmetry: supply the conjugate partner of every strictly complex root
    let conjugates: Vec<EigenvalueRecord> = records
        .iter()
        .filter(|r| r.value.im.abs() > DEDUP_RADIUS)
        .map(|r| EigenvalueRecord {
            value: r.value.conj(),
            ..r.clone()
        })
        .collect();
    records.extend(conjugates);
    sort_dedup(&mut records, DEDUP_RADIUS);
    Ok((records, stats))
}

/// Fill `ContourGrid` data for the window and extract the zero polylines of
/// Re F and Im F by marching squares.
pub fn contour_grid(window: (f64, f64, f64, f64), n_re: usize, n_im: usize) -> Result<ContourGrid> {
    validate_window(window)?;
    if n_re < 2 || n_im < 2 {
        return Err(Error::InvalidInput(format!(
            "grid {n_re}x{n_im} violates n_re >= 2 and n_im >= 2"
        )));
    }
    let values = fill_grid(window, n_re, n_im);
    Ok(ContourGrid::from_samples(window, n_re, n_im, &values))
}

fn validate_window(window: (f64, f64, f64, f64)) -> Result<()> {
    let (re_min, re_max, im_min, im_max) = window;
    let finite = [re_min, re_max, im_min, im_max]
        .iter()
        .all(|v| v.is_finite());
    if !finite || re_min >= re_max || im_min >= im_max {
        return Err(Error::InvalidInput(format!(
            "window [{re_min}, {re_max}] x [{im_min}, {im_max}] must be finite with min < max"
        )));
    }
    Ok(())
}

/// Row-major (Re index outer) grid of F values; Gamma-pole hits become None.
fn fill_grid(window: (f64, f64, f64, f64), n_re: usize, n_im: usize) -> Vec<Option<Complex64>> {
    let (re_min, re_max, im_min, im_max) = window;
    (0..n_re)
        .into_par_iter()
        .flat_map_iter(|i| {
            let e_re = re_min + (re_max - re_min) * i as f64 / (n_re - 1) as f64;
            (0..n_im).map(move |j| {
                let e_im = im_min + (im_max - im_min) * j as f64 / (n_im - 1) as f64;
                secular_exact(Complex64::new(e_re, e_im)).ok()
            })
        })
        .collect()
}

/// True when the iterator holds both a negative value and a non-negative one.
fn mixed_signs<I: Iterator<Item = f64>>(vals: I) -> bool {
    let mut any_neg = false;
    let mut any_pos = false;
    for v in vals {
        if v < 0.0 {
            any_neg = true;
        } else {
            any_pos = true;
        }
    }
    any_neg && any_pos
}
