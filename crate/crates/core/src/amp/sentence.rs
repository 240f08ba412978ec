use rayon::prelude::*;
use serde::Serialize;

use crate::lexicon::MemoryImage;
use crate::textmodel::{AccDictionary, GraphematicStructure, Sentence};

use super::word::check_geometry;
use super::{analyze_word, AmpConfig, AmpError, MorphResult, Reading, Status};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PositionedResult {
    /// Position of the word form within its sentence.
    pub position: usize,
    #[serde(flatten)]
    pub result: MorphResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SentenceAnalysis {
    pub sentence_index: usize,
    /// Word-class tokens in sentence order.
    pub per_word: Vec<PositionedResult>,
    pub sentence_cycles: u64,
    /// Product of per-word reading counts, saturating.
    pub readings_count_bound: u128,
}

/// Sum over waves of `K` analyzed words of the slowest block plus the merge
/// cost.
pub fn wave_cycles(block_cycles: &[u64], block_count: usize, merge: u64) -> u64 {
    block_cycles
        .chunks(block_count.max(1))
        .map(|w| w.iter().copied().max().unwrap_or(0) + merge)
        .sum()
}

pub fn analyze_sentence(
    image: &MemoryImage,
    sentence: &Sentence,
    acc: &AccDictionary,
    config: &AmpConfig,
) -> Result<SentenceAnalysis, AmpError> {
    check_geometry(image, config)?;
    let mut per_word = Vec::new();
    let mut computed = Vec::new();
    for w in sentence.wordforms.iter().filter(|w| w.token_class.is_word_like()) {
        let acc_record = acc.lookup(&w.surface);
        let result = match acc_record {
            Some(rec) => {
                MorphResult {
                    surface: w.surface.clone(),
                    readings: vec![Reading {
                        lemma: rec.lemma.clone(),
                        tags: rec.tags.clone(),
                        stem_len: w.surface.chars().count(),
                        ending_len: 0,
                    }],
                    status: Status::AccProvided,
                    cycles: 0,
                }
            }
            _ => {
                let r = analyze_word(image, &w.surface, config).map_err(|e| AmpError::AtWord {
                    position: w.position,
                    source: Box::new(e),
                })?;
                computed.push(r.cycles);
                r
            }
        };
        per_word.push(PositionedResult {
            position: w.position,
            result,
        });
    }
    let readings_count_bound = per_word
        .iter()
        .map(|p| p.result.readings.len() as u128)
        .fold(1u128, u128::saturating_mul);
    Ok(SentenceAnalysis {
        sentence_index: sentence.index,
        sentence_cycles: wave_cycles(&computed, config.block_count, config.cycles.fixed),
        per_word,
        readings_count_bound,
    })
}

/// Sentences are analyzed in parallel; results keep document order.
pub fn analyze_document(
    image: &MemoryImage,
    gs: &GraphematicStructure,
    acc: &AccDictionary,
    config: &AmpConfig,
) -> Result<Vec<SentenceAnalysis>, AmpError> {
    gs.sentences()
        .par_iter()
        .map(|s| analyze_sentence(image, s, acc, config))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expansion {
    /// One reading per word, in the order of the analysis.
    pub readings: Vec<Vec<Reading>>,
    /// True when the product had more combinations than the cap.
    pub overflow: bool,
}

/// Cartesian product of per-word readings in lexicographic order, truncated
/// at `cap`.
pub fn expand_readings(sa: &SentenceAnalysis, cap: usize) -> Result<Expansion, AmpError> {
    let missing: Vec<usize> = sa
        .per_word
        .iter()
        .filter(|p| p.result.readings.is_empty())
        .map(|p| p.position)
        .collect();
    if !missing.is_empty() {
        return Err(AmpError::CannotExpand(missing));
    }
    let lists: Vec<&[Reading]> = sa.per_word.iter().map(|p| p.result.readings.as_slice()).collect();
    let mut idx = vec![0usize; lists.len()];
    let mut out = Vec::new();
    loop {
        if out.len() == cap {
            return Ok(Expansion {
                readings: out,
                overflow: true,
            });
        }
        out.push(idx.iter().zip(&lists).map(|(&i, l)| l[i].clone()).collect());
        let mut k = lists.len();
        loop {
            if k == 0 {
                return Ok(Expansion {
                    readings: out,
                    overflow: false,
                });
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
