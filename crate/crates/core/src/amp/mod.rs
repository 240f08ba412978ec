//! Simulator of the hardware lookup datapath over a compiled memory image.
//!
//! A word enters symbol by symbol until the word-end code. Each suffix of
//! length `1..=E_max` is then probed in the ending memory, in increasing
//! length; a hit unmasks the remaining prefix, which is routed through the
//! decoders to a stem row and compared verbatim. The whole word is finally
//! tried as a stem with the empty ending. Every decomposition that survives
//! emits its result run. Cycle counts follow [`CycleParams`].

mod config;
mod reference;
mod sentence;
mod word;

use serde::Serialize;
use thiserror::Error;

pub use config::{parse_number, AmpConfig, CycleParams, CONFIG_KEYS};
pub use reference::{naive_scan_baseline, oracle_lookup, OracleMap, ScanMode};
pub use sentence::{
    analyze_document, analyze_sentence, expand_readings, wave_cycles, Expansion,
    PositionedResult, SentenceAnalysis,
};
pub use word::{analyze_word, analyze_word_traced, BlockTrace, TraceStep};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AmpError {
    #[error("unknown letter {letter:?} in word {word:?}")]
    UnknownLetter { letter: char, word: String },
    #[error("word {word:?} has {len} symbols, limit is {max}")]
    TooLong { word: String, len: usize, max: usize },
    #[error("empty word")]
    EmptyWord,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("configuration does not match the image: {0}")]
    Geometry(String),
    #[error("word at position {position}: {source}")]
    AtWord {
        position: usize,
        #[source]
        source: Box<AmpError>,
    },
    #[error("cannot expand: no readings at positions {0:?}")]
    CannotExpand(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Status {
    Found,
    NotFound,
    AccProvided,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Reading {
    pub lemma: String,
    pub tags: Vec<String>,
    pub stem_len: usize,
    pub ending_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MorphResult {
    pub surface: String,
    pub readings: Vec<Reading>,
    pub status: Status,
    pub cycles: u64,
}

impl MorphResult {
    pub(crate) fn from_readings(surface: &str, readings: Vec<Reading>, cycles: u64) -> Self {
        let status = if readings.is_empty() {
            Status::NotFound
        } else {
            Status::Found
        };
        Self {
            surface: surface.to_string(),
            readings,
            status,
            cycles,
        }
    }

    /// Readings in canonical order, for multiset comparison.
    pub fn sorted_readings(&self) -> Vec<Reading> {
        let mut r = self.readings.clone();
        r.sort();
        r
    }
}
