//! Scan-and-bisect root isolation on the real line and a complex Newton
//! polisher with a finite-difference derivative.

use num_complex::Complex64;

/// Sign-change brackets among consecutive samples `(x, f(x))`.
///
/// An exact zero sample becomes a degenerate bracket [x, x].
pub(crate) fn sign_change_brackets(samples: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut brackets = Vec::new();
    for w in samples.windows(2) {
        let (x0, f0) = w[0];
        let (x1, f1) = w[1];
        if f0 == 0.0 {
            brackets.push((x0, x0));
        } else if f0 * f1 < 0.0 {
            brackets.push((x0, x1));
        }
    }
    if let Some(&(x, f)) = samples.last() {
        if f == 0.0 {
            brackets.push((x, x));
        }
    }
    brackets
}

/// Bisection on [lo, hi] (f(lo), f(hi) of opposite sign) until the bracket
/// shrinks to `tol_x`; returns the midpoint.
pub(crate) fn bisect<F: FnMut(f64) -> f64>(mut lo: f64, mut hi: f64, tol_x: f64, mut f: F) -> f64 {
    if lo == hi {
        return lo;
    }
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        if hi - lo <= tol_x {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket at floating-point resolution
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Newton iteration in the complex plane; the derivative is a central
/// finite difference with step `fd_step_scale * max(1, |z|)`.
///
/// `f` returning `None` (e.g. a pole hit) aborts the seed. Returns the
/// root and |f(root)| once |f| ≤ `tol_f`, or `None` on non-convergence.
pub(crate) fn newton_complex<F>(
    f: F,
    seed: Complex64,
    tol_f: f64,
    fd_step_scale: f64,
    max_iter: usize,
    divergence_radius: f64,
) -> Option<(Complex64, f64)>
where
    F: Fn(Complex64) -> Option<Complex64>,
{
    let mut z = seed;
    for _ in 0..max_iter {
        let fz = f(z)?;
        let r = fz.norm();
        if !r.is_finite() {
            return None;
        }
        if r <= tol_f {
            return Some((z, r));
        }
        let h = fd_step_scale * z.norm().max(1.0);
        let df = (f(z + h)? - f(z - h)?) / (2.0 * h);
        if df.norm() == 0.0 {
            return None;
        }
        z -= fz / df;
        if !z.re.is_finite() || !z.im.is_finite() || (z - seed).norm() > divergence_radius {
            return None;
        }
    }
    None
}
