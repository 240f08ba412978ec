use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::scheme::tuple_at;
use super::{Alphabet, CombinationScheme, GroupMode, LexiconEntry, LexiconError};

/// Smallest `b` with `2^b >= count`.
pub fn required_data_width(count: u64) -> Result<u32, LexiconError> {
    match count {
        0 => Err(LexiconError::ZeroCount),
        1 => Ok(0),
        n => Ok(64 - (n - 1).leading_zeros()),
    }
}

/// Number of entries per stem length (in letters). Entries without a stem
/// (ending-only words) are not counted.
pub fn stem_length_histogram(entries: &[LexiconEntry]) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    for e in entries {
        let n = e.stem().chars().count();
        if n > 0 {
            *hist.entry(n).or_insert(0) += 1;
        }
    }
    hist
}

pub fn mean_stem_length(entries: &[LexiconEntry]) -> Option<f64> {
    let (sum, n) = entries
        .iter()
        .map(|e| e.stem().chars().count())
        .filter(|&n| n > 0)
        .fold((0usize, 0usize), |(s, c), n| (s + n, c + 1));
    (n > 0).then(|| sum as f64 / n as f64)
}

/// Dense index of the zero-padded symbol tuples seen at one decoder chunk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinationTable {
    pub group: usize,
    pub start: u8,
    pub end: u8,
    pub mode: GroupMode,
    pub(crate) index: BTreeMap<Vec<u8>, u32>,
}

impl CombinationTable {
    pub(crate) fn build(group: usize, start: u8, end: u8, mode: GroupMode, stems: &[Vec<u8>]) -> Self {
        let tuples: BTreeSet<Vec<u8>> = stems.iter().map(|s| tuple_at(s, start, end)).collect();
        let index = tuples
            .into_iter()
            .enumerate()
            .map(|(i, t)| (t, i as u32))
            .collect();
        Self {
            group,
            start,
            end,
            mode,
            index,
        }
    }

    pub fn count(&self) -> usize {
        self.index.len()
    }

    pub fn data_width_bits(&self) -> u32 {
        required_data_width(self.count() as u64).unwrap_or(0)
    }

    pub fn lookup(&self, tuple: &[u8]) -> Option<u32> {
        self.index.get(tuple).copied()
    }

    /// Number of positions addressed by the table.
    pub fn positions(&self) -> u8 {
        self.end - self.start + 1
    }
}

pub(crate) fn encode_stems(
    entries: &[LexiconEntry],
    alphabet: &Alphabet,
) -> Result<Vec<Vec<u8>>, LexiconError> {
    let encoded: Result<Vec<Option<Vec<u8>>>, LexiconError> = entries
        .par_iter()
        .map(|e| {
            if e.stem().is_empty() {
                return Ok(None);
            }
            e.stem()
                .chars()
                .map(|c| {
                    alphabet.code(c).ok_or_else(|| LexiconError::UnknownLetter {
                        letter: c,
                        entry: e.surface().to_string(),
                    })
                })
                .collect::<Result<Vec<u8>, _>>()
                .map(Some)
        })
        .collect();
    let mut stems: Vec<Vec<u8>> = encoded?.into_iter().flatten().collect();
    stems.sort();
    stems.dedup();
    Ok(stems)
}

/// Builds one table per decoder chunk of `scheme` over all stems.
pub fn combination_counts(
    entries: &[LexiconEntry],
    scheme: &CombinationScheme,
    alphabet: &Alphabet,
) -> Result<Vec<CombinationTable>, LexiconError> {
    let stems = encode_stems(entries, alphabet)?;
    Ok(scheme
        .chunks()
        .into_iter()
        .map(|c| {
            let mode = scheme.groups()[c.group].mode;
            CombinationTable::build(c.group, c.start, c.end, mode, &stems)
        })
        .collect())
}

/// Distinct zero-padded tuples for an arbitrary position range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct RangeCount {
    pub start: u8,
    pub end: u8,
    pub count: usize,
}

/// Counts for arbitrary, possibly overlapping ranges (the layout of a
/// combination statistics table such as `C2`, `C2–C4`, `C5–C32`).
pub fn range_counts(
    entries: &[LexiconEntry],
    alphabet: &Alphabet,
    ranges: &[(u8, u8)],
) -> Result<Vec<RangeCount>, LexiconError> {
    if let Some(&(a, b)) = ranges.iter().find(|&&(a, b)| a == 0 || b < a) {
        return Err(LexiconError::Scheme(format!("bad position range {a}–{b}")));
    }
    let stems = encode_stems(entries, alphabet)?;
    Ok(ranges
        .par_iter()
        .map(|&(start, end)| {
            let set: BTreeSet<Vec<u8>> = stems.iter().map(|s| tuple_at(s, start, end)).collect();
            RangeCount {
                start,
                end,
                count: set.len(),
            }
        })
        .collect())
}
