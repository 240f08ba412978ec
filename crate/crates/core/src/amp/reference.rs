//! Lookups the simulator is checked and benchmarked against.

use std::collections::{BTreeMap, BTreeSet};

use crate::lexicon::{Alphabet, LexiconEntry};

use super::{MorphResult, Reading};

fn reading(e: &LexiconEntry) -> Reading {
    Reading {
        lemma: e.lemma().to_string(),
        tags: e.tags().to_vec(),
        stem_len: e.stem().chars().count(),
        ending_len: e.ending().chars().count(),
    }
}

/// Direct surface map lookup: every entry whose case-folded surface equals
/// the folded word. Repeated `(surface, lemma, tags)` entries count once, the
/// first one winning. Costs no cycles.
pub fn oracle_lookup(entries: &[LexiconEntry], alphabet: &Alphabet, word: &str) -> MorphResult {
    let Ok(target) = alphabet.fold_str(word) else {
        return MorphResult::from_readings(word, Vec::new(), 0);
    };
    let mut seen = BTreeSet::new();
    let readings = entries
        .iter()
        .filter(|e| alphabet.fold_str(e.surface()).is_ok_and(|s| s == target))
        .filter(|e| seen.insert((e.lemma(), e.tags())))
        .map(reading)
        .collect();
    MorphResult::from_readings(word, readings, 0)
}

/// [`oracle_lookup`] precomputed for every surface of a lexicon.
#[derive(Debug, Clone, Default)]
pub struct OracleMap {
    alphabet: Option<Alphabet>,
    map: BTreeMap<String, Vec<Reading>>,
}

impl OracleMap {
    pub fn build(entries: &[LexiconEntry], alphabet: &Alphabet) -> Self {
        let mut seen = BTreeSet::new();
        let mut map: BTreeMap<String, Vec<Reading>> = BTreeMap::new();
        for e in entries {
            let Ok(s) = alphabet.fold_str(e.surface()) else {
                continue;
            };
            if seen.insert((s.clone(), e.lemma(), e.tags())) {
                map.entry(s).or_default().push(reading(e));
            }
        }
        Self {
            alphabet: Some(alphabet.clone()),
            map,
        }
    }

    pub fn lookup(&self, word: &str) -> MorphResult {
        let readings = self
            .alphabet
            .as_ref()
            .and_then(|a| a.fold_str(word).ok())
            .and_then(|w| self.map.get(&w).cloned())
            .unwrap_or_default();
        MorphResult::from_readings(word, readings, 0)
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(String::as_str)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Stop at the first matching entry.
    FirstMatch,
    /// Examine every entry and collect all matches.
    FullScan,
}

/// Linear scan over the entries, counting surface comparisons.
pub fn naive_scan_baseline(
    entries: &[LexiconEntry],
    alphabet: &Alphabet,
    word: &str,
    mode: ScanMode,
) -> (MorphResult, u64) {
    let target = alphabet.fold_str(word).ok();
    let mut seen = BTreeSet::new();
    let mut readings = Vec::new();
    let mut comparisons = 0u64;
    for e in entries {
        comparisons += 1;
        let hit = target
            .as_deref()
            .is_some_and(|t| alphabet.fold_str(e.surface()).is_ok_and(|s| s == t));
        if hit && seen.insert((e.lemma(), e.tags())) {
            readings.push(reading(e));
            if mode == ScanMode::FirstMatch {
                break;
            }
        }
    }
    (MorphResult::from_readings(word, readings, 0), comparisons)
}
