//! Time/hardware trade-off of candidate realizations.

use serde::Serialize;

use crate::Scalar;

use super::CostError;

/// A candidate realization with execution time `T` and hardware cost `Q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RealizationPoint<T> {
    pub id: u32,
    pub time: T,
    pub hardware: T,
    pub time_unit: String,
    pub hardware_unit: String,
}

impl<T: Scalar> RealizationPoint<T> {
    /// A point in cycles and bits.
    pub fn new(id: u32, time: T, hardware: T) -> Result<Self, CostError> {
        Self::with_units(id, time, hardware, "cycles", "bits")
    }

    pub fn with_units(
        id: u32,
        time: T,
        hardware: T,
        time_unit: impl Into<String>,
        hardware_unit: impl Into<String>,
    ) -> Result<Self, CostError> {
        if !(time.is_finite() && hardware.is_finite() && time > T::zero() && hardware > T::zero()) {
            return Err(CostError::Invalid(format!(
                "point {id}: T and Q must be finite and positive"
            )));
        }
        Ok(Self {
            id,
            time,
            hardware,
            time_unit: time_unit.into(),
            hardware_unit: hardware_unit.into(),
        })
    }

    /// `self` is no worse in both coordinates and better in one.
    pub fn dominates(&self, other: &Self) -> bool {
        self.time <= other.time
            && self.hardware <= other.hardware
            && (self.time < other.time || self.hardware < other.hardware)
    }
}

/// Non-dominated points sorted by `T` ascending (hence `Q` descending).
/// Coincident points are represented by the one with the smallest id.
pub fn pareto_front<T: Scalar>(points: &[RealizationPoint<T>]) -> Vec<RealizationPoint<T>> {
    let mut sorted: Vec<&RealizationPoint<T>> = points.iter().collect();
    sorted.sort_by(|a, b| {
        a.time
            .partial_cmp(&b.time)
            .unwrap()
            .then(a.hardware.partial_cmp(&b.hardware).unwrap())
            .then(a.id.cmp(&b.id))
    });
    let mut front: Vec<RealizationPoint<T>> = Vec::new();
    for p in sorted {
        match front.last() {
            Some(last) if p.hardware >= last.hardware => {}
            _ => front.push(p.clone()),
        }
    }
    front
}

/// Per-point weights `c_r`, `b_r` and the reference point `(T_0, Q_0)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightVector<T> {
    pub c: Vec<T>,
    pub b: Vec<T>,
    pub t0: T,
    pub q0: T,
}

impl<T: Scalar> WeightVector<T> {
    /// `c_r = b_r = 1/m`.
    pub fn uniform(m: usize, t0: T, q0: T) -> Self {
        let w = T::one() / T::from_usize_lossy(m);
        Self {
            c: vec![w; m],
            b: vec![w; m],
            t0,
            q0,
        }
    }

    pub fn validate(&self, m: usize) -> Result<(), CostError> {
        if self.c.len() != m || self.b.len() != m {
            return Err(CostError::DimensionMismatch {
                points: m,
                c: self.c.len(),
                b: self.b.len(),
            });
        }
        if !(self.t0 > T::zero() && self.q0 > T::zero() && self.t0.is_finite() && self.q0.is_finite()) {
            return Err(CostError::NonPositiveReference);
        }
        if self.c.iter().chain(&self.b).any(|w| !(w.is_finite() && *w >= T::zero())) {
            return Err(CostError::Invalid("weights must be finite and ≥ 0".into()));
        }
        let tol = T::lit(1e-9);
        for (name, v) in [("c", &self.c), ("b", &self.b)] {
            let s: T = v.iter().copied().sum();
            if (s - T::one()).abs() > tol {
                return Err(CostError::Invalid(format!("Σ{name} = {s}, expected 1")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Selection<T> {
    pub id: u32,
    /// Minimum of the normalized functional.
    pub f: T,
    /// Functional value per point, `None` where both weights are zero.
    pub values: Vec<Option<T>>,
    /// `k_r = c_r·b_r` per point.
    pub k: Vec<T>,
    pub warnings: Vec<String>,
}

/// `(c_r Q_r + b_r T_r) / (c_r Q_0 + b_r T_0)` for one point.
pub fn functional<T: Scalar>(p: &RealizationPoint<T>, c: T, b: T, t0: T, q0: T) -> Option<T> {
    let den = c * q0 + b * t0;
    (den > T::zero()).then(|| (c * p.hardware + b * p.time) / den)
}

/// Point minimizing the normalized weighted functional. Ties go to the
/// smallest id.
pub fn select_realization<T: Scalar>(
    points: &[RealizationPoint<T>],
    weights: &WeightVector<T>,
) -> Result<Selection<T>, CostError> {
    if points.is_empty() {
        return Err(CostError::Invalid("no points".into()));
    }
    weights.validate(points.len())?;
    let first = &points[0];
    if let Some(p) = points
        .iter()
        .find(|p| p.time_unit != first.time_unit || p.hardware_unit != first.hardware_unit)
    {
        return Err(CostError::UnitMismatch(format!(
            "point {} uses ({}, {}) but point {} uses ({}, {})",
            p.id, p.time_unit, p.hardware_unit, first.id, first.time_unit, first.hardware_unit
        )));
    }
    let values: Vec<Option<T>> = points
        .iter()
        .zip(weights.c.iter().zip(&weights.b))
        .map(|(p, (&c, &b))| functional(p, c, b, weights.t0, weights.q0))
        .collect();
    let (best, f) = points
        .iter()
        .zip(&values)
        .filter_map(|(p, v)| v.map(|v| (p, v)))
        .min_by(|(pa, a), (pb, b)| a.partial_cmp(b).unwrap().then(pa.id.cmp(&pb.id)))
        .ok_or_else(|| CostError::Invalid("every point has zero weights".into()))?;
    let k: Vec<T> = weights.c.iter().zip(&weights.b).map(|(&c, &b)| c * b).collect();
    let mut warnings = Vec::new();
    let (kmin, kmax) = k
        .iter()
        .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    if kmax - kmin > T::lit(1e-12) * kmax.abs().max(T::one()) {
        warnings.push(format!("c_r·b_r is not constant (range {kmin}..{kmax})"));
    }
    Ok(Selection {
        id: best.id,
        f,
        values,
        k,
        warnings,
    })
}
