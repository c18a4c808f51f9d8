//! Zero-curve extraction on the complex-E grid by marching squares with
//! linear interpolation on cell edges.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Rectangular complex-E grid of Re F and Im F with the extracted zero
/// polylines of each field.
///
/// `re_values`/`im_values` are row-major with the Re-E index outermost
/// (`values[i * n_im + j]`); Gamma-pole hits are `None` and cells touching
/// them produce no contour segments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourGrid {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub n_re: usize,
    pub n_im: usize,
    pub re_values: Vec<Option<f64>>,
    pub im_values: Vec<Option<f64>>,
    pub re_zero_curves: Vec<Vec<Complex64>>,
    pub im_zero_curves: Vec<Vec<Complex64>>,
}

impl ContourGrid {
    pub(crate) fn from_samples(
        window: (f64, f64, f64, f64),
        n_re: usize,
        n_im: usize,
        samples: &[Option<Complex64>],
    ) -> Self {
        let re_values: Vec<Option<f64>> = samples.iter().map(|s| s.map(|f| f.re)).collect();
        let im_values: Vec<Option<f64>> = samples.iter().map(|s| s.map(|f| f.im)).collect();
        let re_zero_curves = march(window, n_re, n_im, &re_values);
        let im_zero_curves = march(window, n_re, n_im, &im_values);
        Self {
            re_min: window.0,
            re_max: window.1,
            im_min: window.2,
            im_max: window.3,
            n_re,
            n_im,
            re_values,
            im_values,
            re_zero_curves,
            im_zero_curves,
        }
    }

    /// Grid spacing (Δre, Δim).
    pub fn cell_size(&self) -> (f64, f64) {
        (
            (self.re_max - self.re_min) / (self.n_re - 1) as f64,
            (self.im_max - self.im_min) / (self.n_im - 1) as f64,
        )
    }
}

/// A marching-squares vertex lies on a unique grid edge; identifying
/// vertices by edge index (not by float coordinates) makes the segment
/// chaining exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum EdgeId {
    /// From node (i, j) towards (i+1, j).
    H(usize, usize),
    /// From node (i, j) towards (i, j+1).
    V(usize, usize),
}

struct Segment {
    a: EdgeId,
    b: EdgeId,
    pa: Complex64,
    pb: Complex64,
}

/// Extract the zero polylines of one scalar field.
fn march(
    window: (f64, f64, f64, f64),
    n_re: usize,
    n_im: usize,
    field: &[Option<f64>],
) -> Vec<Vec<Complex64>> {
    let (re_min, re_max, im_min, im_max) = window;
    let node_re = |i: usize| re_min + (re_max - re_min) * i as f64 / (n_re - 1) as f64;
    let node_im = |j: usize| im_min + (im_max - im_min) * j as f64 / (n_im - 1) as f64;
    let at = |i: usize, j: usize| field[i * n_im + j];

    let mut segments: Vec<Segment> = Vec::new();
    for i in 0..n_re - 1 {
        for j in 0..n_im - 1 {
            let (Some(bl), Some(br), Some(tl), Some(tr)) =
                (at(i, j), at(i + 1, j), at(i, j + 1), at(i + 1, j + 1))
            else {
                continue;
            };

            // crossing point on an edge, with its edge identity
            let cross = |edge: EdgeId, v0: f64, v1: f64| -> (EdgeId, Complex64) {
                let t = v0 / (v0 - v1);
                let p = match edge {
                    EdgeId::H(ei, ej) => Complex64::new(
                        node_re(ei) + t * (node_re(ei + 1) - node_re(ei)),
                        node_im(ej),
                    ),
                    EdgeId::V(ei, ej) => Complex64::new(
                        node_re(ei),
                        node_im(ej) + t * (node_im(ej + 1) - node_im(ej)),
                    ),
                };
                (edge, p)
            };
            let bottom = || cross(EdgeId::H(i, j), bl, br);
            let top = || cross(EdgeId::H(i, j + 1), tl, tr);
            let left = || cross(EdgeId::V(i, j), bl, tl);
            let right = || cross(EdgeId::V(i + 1, j), br, tr);

            let mut emit = |(a, pa): (EdgeId, Complex64), (b, pb): (EdgeId, Complex64)| {
                segments.push(Segment { a, b, pa, pb });
            };

            let inside = |v: f64| v >= 0.0;
            let case = inside(bl) as u8
                | (inside(br) as u8) << 1
                | (inside(tr) as u8) << 2
                | (inside(tl) as u8) << 3;
            match case {
                0 | 15 => {}
                1 | 14 => emit(left(), bottom()),
                2 | 13 => emit(bottom(), right()),
                3 | 12 => emit(left(), right()),
                4 | 11 => emit(right(), top()),
                6 | 9 => emit(bottom(), top()),
                7 | 8 => emit(left(), top()),
                5 | 10 => {
                    // saddle: disambiguate with the cell-center average
                    let center_inside = inside(0.25 * (bl + br + tl + tr));
                    let pairs_as_case5 = (case == 5) == center_inside;
                    if pairs_as_case5 {
                        emit(left(), top());
                        emit(bottom(), right());
                    } else {
                        emit(left(), bottom());
                        emit(right(), top());
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    chain_segments(&segments)
}

/// Join segments sharing grid edges into polylines. Open curves start at a
/// degree-1 endpoint; the rest are closed loops.
fn chain_segments(segments: &[Segment]) -> Vec<Vec<Complex64>> {
    let mut adjacency: HashMap<EdgeId, Vec<usize>> = HashMap::new();
    for (k, seg) in segments.iter().enumerate() {
        adjacency.entry(seg.a).or_default().push(k);
        adjacency.entry(seg.b).or_default().push(k);
    }

    let point_of = |edge: EdgeId, seg: &Segment| if edge == seg.a { seg.pa } else { seg.pb };
    let other_end = |edge: EdgeId, seg: &Segment| if edge == seg.a { seg.b } else { seg.a };

    let mut used = vec![false; segments.len()];
    let mut polylines = Vec::new();

    // two passes: open chains first (seeded at odd-degree edges), then loops
    for open_pass in [true, false] {
        for start in 0..segments.len() {
            if used[start] {
                continue;
            }
            let seg = &segments[start];
            let start_edge = if open_pass {
                let deg_a = adjacency[&seg.a].len();
                let deg_b = adjacency[&seg.b].len();
                match (deg_a == 1, deg_b == 1) {
                    (true, _) => seg.a,
                    (_, true) => seg.b,
                    _ => continue,
                }
            } else {
                seg.a
            };

            let mut line = vec![point_of(start_edge, seg)];
            let mut cursor = other_end(start_edge, seg);
            used[start] = true;
            line.push(point_of(cursor, seg));

            loop {
                let Some(next) = adjacency[&cursor].iter().copied().find(|&k| !used[k]) else {
                    break;
                };
                used[next] = true;
                cursor = other_end(cursor, &segments[next]);
                line.push(point_of(cursor, &segments[next]));
            }
            polylines.push(line);
        }
    }
    polylines
}
