//! Description complexity of an algorithm as the total bit length of its
//! operator encodings, per hierarchy level and relative between levels.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::Scalar;

use super::CostError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorSpec {
    pub type_id: String,
    /// `|u_i|` in bits.
    pub code_width: u64,
    /// Occurrences `r_i`.
    pub count: u64,
    /// 0 is the micro-operation level.
    pub level: u32,
}

impl OperatorSpec {
    pub fn new(type_id: impl Into<String>, code_width: u64, count: u64, level: u32) -> Result<Self, CostError> {
        let type_id = type_id.into();
        if code_width == 0 {
            return Err(CostError::Invalid(format!("operator {type_id:?} has zero code width")));
        }
        Ok(Self {
            type_id,
            code_width,
            count,
            level,
        })
    }

    fn bits(&self) -> u128 {
        u128::from(self.count) * u128::from(self.code_width)
    }
}

/// `Σ r_i·|u_i|`.
pub fn description_complexity(ops: &[OperatorSpec]) -> u128 {
    ops.iter().map(OperatorSpec::bits).sum()
}

/// Operators grouped by hierarchy level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmDescription {
    levels: BTreeMap<u32, Vec<OperatorSpec>>,
}

impl AlgorithmDescription {
    /// Every level that appears must have at least one operator occurrence.
    pub fn new(ops: impl IntoIterator<Item = OperatorSpec>) -> Result<Self, CostError> {
        let mut levels: BTreeMap<u32, Vec<OperatorSpec>> = BTreeMap::new();
        for op in ops {
            levels.entry(op.level).or_default().push(op);
        }
        for (l, ops) in &levels {
            if ops.iter().all(|o| o.count == 0) {
                return Err(CostError::Invalid(format!("level {l} has no operator occurrences")));
            }
        }
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &BTreeMap<u32, Vec<OperatorSpec>> {
        &self.levels
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchicalComplexity {
    pub per_level: BTreeMap<u32, u128>,
    pub total: u128,
}

pub fn hierarchical_complexity(alg: &AlgorithmDescription) -> HierarchicalComplexity {
    let per_level: BTreeMap<u32, u128> = alg
        .levels
        .iter()
        .map(|(&l, ops)| (l, description_complexity(ops)))
        .collect();
    HierarchicalComplexity {
        total: per_level.values().sum(),
        per_level,
    }
}

/// `Q_l / Σ_{j<l} Q_j`, exact.
pub fn relative_complexity(alg: &AlgorithmDescription, level: u32) -> Result<Ratio<u128>, CostError> {
    let h = hierarchical_complexity(alg);
    let q = *h
        .per_level
        .get(&level)
        .ok_or(CostError::UnknownLevel(level))?;
    let below: u128 = h.per_level.range(..level).map(|(_, v)| v).sum();
    ratio(q, below)
}

/// `Q_A / Q_Λ` for two descriptions of the same task.
pub fn ratio(q_a: u128, q_lambda: u128) -> Result<Ratio<u128>, CostError> {
    if q_lambda == 0 {
        return Err(CostError::DegenerateHierarchy);
    }
    Ok(Ratio::new(q_a, q_lambda))
}

/// Result of replacing several operator occurrences by one composite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Merge {
    pub ops: Vec<OperatorSpec>,
    /// Total width of the occurrences that were removed.
    pub removed_width: u128,
}

/// Removes `take[k].1` occurrences of `ops[take[k].0]` and adds one
/// occurrence of `composite`.
pub fn merge_operators(
    ops: &[OperatorSpec],
    take: &[(usize, u64)],
    composite: OperatorSpec,
) -> Result<Merge, CostError> {
    let mut out = ops.to_vec();
    let mut removed_width = 0u128;
    for &(i, k) in take {
        let op = out
            .get_mut(i)
            .ok_or_else(|| CostError::Invalid(format!("no operator at index {i}")))?;
        op.count = op.count.checked_sub(k).ok_or_else(|| {
            CostError::Invalid(format!("operator {:?} has fewer than {k} occurrences", op.type_id))
        })?;
        removed_width += u128::from(k) * u128::from(op.code_width);
    }
    out.push(OperatorSpec {
        count: 1,
        ..composite
    });
    Ok(Merge {
        ops: out,
        removed_width,
    })
}

/// A micro-instruction as the absolute complexities of its micro-operations.
#[derive(Debug, Clone, PartialEq)]
pub struct MicroInstruction<T> {
    micro_ops: Vec<T>,
}

impl<T: Scalar> MicroInstruction<T> {
    pub fn new(micro_ops: Vec<T>) -> Result<Self, CostError> {
        if micro_ops.is_empty() {
            return Err(CostError::Invalid("micro-instruction without micro-operations".into()));
        }
        if micro_ops.iter().any(|z| !(z.is_finite() && *z >= T::zero())) {
            return Err(CostError::Invalid("micro-operation complexity must be finite and ≥ 0".into()));
        }
        Ok(Self { micro_ops })
    }

    pub fn micro_ops(&self) -> &[T] {
        &self.micro_ops
    }
}

/// `Q_l = Σ Z_i`.
pub fn micro_complexity<T: Scalar>(mi: &MicroInstruction<T>) -> T {
    mi.micro_ops.iter().copied().sum()
}
