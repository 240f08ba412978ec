//! Fit of `f(x) = A·exp(−(x−μ)²/w)` to a length histogram and the
//! coefficient of determination used to judge it.
//!
//! The width `w` is used as-is (not `2σ²`), so a printed curve such as
//! `33600·exp(−(x−9)²/16)` maps to `A = 33600, μ = 9, w = 16`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FitError {
    #[error("need at least 3 nonzero points, got {0}")]
    InsufficientData(usize),
    #[error("observations are constant; total sum of squares is zero")]
    Degenerate,
    #[error("length mismatch: {observed} observed vs {predicted} predicted")]
    LengthMismatch { observed: usize, predicted: usize },
    #[error("need at least 2 observations")]
    TooFew,
    #[error("fit did not produce finite parameters")]
    NonFinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianFit<T> {
    pub amplitude: T,
    pub center: T,
    pub width: T,
    pub r_squared: T,
}

impl<T: Scalar> GaussianFit<T> {
    /// A curve with the given parameters; `r_squared` is set to 1.
    pub fn from_params(amplitude: T, center: T, width: T) -> Self {
        Self {
            amplitude,
            center,
            width,
            r_squared: T::one(),
        }
    }

    pub fn eval(&self, x: T) -> T {
        gaussian(self.amplitude, self.center, self.width, x)
    }
}

fn gaussian<T: Scalar>(a: T, mu: T, w: T, x: T) -> T {
    let d = x - mu;
    a * (-(d * d) / w).exp()
}

pub fn eval_gaussian<T: Scalar>(fit: &GaussianFit<T>, x: T) -> T {
    fit.eval(x)
}

/// `1 − SSE/SST` with `SST = ΣY² − (ΣY)²/n`.
pub fn r_squared<T: Scalar>(observed: &[T], predicted: &[T]) -> Result<T, FitError> {
    if observed.len() != predicted.len() {
        return Err(FitError::LengthMismatch {
            observed: observed.len(),
            predicted: predicted.len(),
        });
    }
    let n = observed.len();
    if n < 2 {
        return Err(FitError::TooFew);
    }
    if observed.iter().all(|&y| y == observed[0]) {
        return Err(FitError::Degenerate);
    }
    let sum: T = observed.iter().copied().sum();
    let sum_sq: T = observed.iter().map(|&y| y * y).sum();
    let sst = sum_sq - sum * sum / T::from_usize_lossy(n);
    if sst <= T::zero() {
        return Err(FitError::Degenerate);
    }
    Ok(T::one() - sse(observed, predicted) / sst)
}

pub fn sse<T: Scalar>(observed: &[T], predicted: &[T]) -> T {
    observed
        .iter()
        .zip(predicted)
        .map(|(&y, &p)| (y - p) * (y - p))
        .sum()
}

fn solve3<T: Scalar>(mut m: [[T; 3]; 3], mut v: [T; 3]) -> Option<[T; 3]> {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&a, &b| {
            m[a][col]
                .abs()
                .partial_cmp(&m[b][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if m[pivot][col].abs() <= T::min_positive_value() {
            return None;
        }
        m.swap(col, pivot);
        v.swap(col, pivot);
        let top = m[col];
        for row in col + 1..3 {
            let f = m[row][col] / top[col];
            for (a, &p) in m[row][col..].iter_mut().zip(&top[col..]) {
                *a = *a - f * p;
            }
            v[row] = v[row] - f * v[col];
        }
    }
    let mut x = [T::zero(); 3];
    for row in (0..3).rev() {
        let mut acc = v[row];
        for k in row + 1..3 {
            acc = acc - m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    x.iter().all(|c| c.is_finite()).then_some(x)
}

/// Log-parabola estimate weighted by `y²`; falls back to moments when the
/// parabola opens upwards.
fn initial_guess<T: Scalar>(pts: &[(T, T)]) -> (T, T, T) {
    let mut m = [[T::zero(); 3]; 3];
    let mut v = [T::zero(); 3];
    for &(x, y) in pts.iter().filter(|p| p.1 > T::zero()) {
        let wt = y * y;
        let basis = [T::one(), x, x * x];
        let ly = y.ln();
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = m[i][j] + wt * basis[i] * basis[j];
            }
            v[i] = v[i] + wt * basis[i] * ly;
        }
    }
    if let Some([a, b, c]) = solve3(m, v) {
        if c < T::zero() {
            let w = -T::one() / c;
            let mu = -b / (T::lit(2.0) * c);
            let amp = (a + mu * mu / w).exp();
            if w.is_finite() && mu.is_finite() && amp.is_finite() && amp > T::zero() {
                return (amp, mu, w);
            }
        }
    }
    let total: T = pts.iter().map(|p| p.1.max(T::zero())).sum();
    let mean = pts.iter().map(|p| p.0 * p.1.max(T::zero())).sum::<T>() / total;
    let var = pts
        .iter()
        .map(|p| (p.0 - mean) * (p.0 - mean) * p.1.max(T::zero()))
        .sum::<T>()
        / total;
    let peak = pts.iter().map(|p| p.1).fold(T::zero(), T::max);
    (peak, mean, (T::lit(2.0) * var).max(T::lit(1e-3)))
}

fn sse_of<T: Scalar>(pts: &[(T, T)], p: (T, T, T)) -> T {
    pts.iter()
        .map(|&(x, y)| {
            let r = y - gaussian(p.0, p.1, p.2, x);
            r * r
        })
        .sum()
}

/// Least-squares fit of the fixed Gaussian form to `(x, y)` points.
pub fn fit_gaussian<T: Scalar>(points: &[(T, T)]) -> Result<GaussianFit<T>, FitError> {
    let nonzero = points.iter().filter(|p| p.1 != T::zero()).count();
    if nonzero < 3 {
        return Err(FitError::InsufficientData(nonzero));
    }
    let mut p = initial_guess(points);
    let mut cost = sse_of(points, p);
    let mut lambda = T::lit(1e-3);
    let mut stalls = 0;
    for _ in 0..2000 {
        if cost == T::zero() {
            break;
        }
        let (a, mu, w) = p;
        let mut jtj = [[T::zero(); 3]; 3];
        let mut jtr = [T::zero(); 3];
        for &(x, y) in points {
            let d = x - mu;
            let e = (-(d * d) / w).exp();
            let r = y - a * e;
            let g = [e, a * e * T::lit(2.0) * d / w, a * e * d * d / (w * w)];
            for i in 0..3 {
                for j in 0..3 {
                    jtj[i][j] = jtj[i][j] + g[i] * g[j];
                }
                jtr[i] = jtr[i] + g[i] * r;
            }
        }
        let mut improved = false;
        while lambda < T::lit(1e16) {
            let mut m = jtj;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = row[i] + lambda * jtj[i][i].max(T::min_positive_value());
            }
            if let Some(step) = solve3(m, jtr) {
                let cand = (a + step[0], mu + step[1], w + step[2]);
                if cand.0 > T::zero() && cand.2 > T::zero() {
                    let c = sse_of(points, cand);
                    if c.is_finite() && c <= cost {
                        let rel = (cost - c) / cost.max(T::min_positive_value());
                        p = cand;
                        cost = c;
                        lambda = (lambda * T::lit(0.3)).max(T::lit(1e-12));
                        improved = rel > T::epsilon() * T::lit(4.0);
                        break;
                    }
                }
            }
            lambda = lambda * T::lit(10.0);
        }
        if improved {
            stalls = 0;
        } else {
            stalls += 1;
            if stalls >= 3 || lambda >= T::lit(1e16) {
                break;
            }
            lambda = T::lit(1e-3);
        }
    }
    let (amplitude, center, width) = p;
    if ![amplitude, center, width].iter().all(|v| v.is_finite()) {
        return Err(FitError::NonFinite);
    }
    let observed: Vec<T> = points.iter().map(|p| p.1).collect();
    let predicted: Vec<T> = points
        .iter()
        .map(|&(x, _)| gaussian(amplitude, center, width, x))
        .collect();
    Ok(GaussianFit {
        amplitude,
        center,
        width,
        r_squared: r_squared(&observed, &predicted)?,
    })
}

/// Fits a `length → count` histogram.
pub fn fit_histogram<T: Scalar>(hist: &BTreeMap<usize, u64>) -> Result<GaussianFit<T>, FitError> {
    let pts: Vec<(T, T)> = hist
        .iter()
        .map(|(&x, &y)| {
            (
                T::from_usize_lossy(x),
                T::from_u64(y).expect("count representable"),
            )
        })
        .collect();
    fit_gaussian(&pts)
}
