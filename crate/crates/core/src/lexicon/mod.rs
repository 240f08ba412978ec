//! Lexicon compilation and the corpus statistics that size the memory image.

mod alphabet;
mod codec;
mod entry;
mod gaussian;
mod image;
mod scheme;
mod stats;
pub mod synth;

use thiserror::Error;

pub use alphabet::{Alphabet, CODE_BITS};
pub use codec::{deserialize_image, serialize_image, IMAGE_MAGIC, IMAGE_VERSION};
pub use entry::{parse_lexicon, LexiconEntry};
pub use gaussian::{eval_gaussian, fit_gaussian, fit_histogram, r_squared, sse, FitError, GaussianFit};
pub use image::{
    compile_lexicon, CompileOptions, CompileReport, Compiled, EndingCell, MemoryImage, ReadingRef,
    Sentinels, StemAddress, StemCell, RESULT_SEGMENTS,
};
pub use scheme::{Chunk, CombinationGroup, CombinationScheme, GroupMode, MAX_TABLE_POSITIONS, OR_CHUNK};
pub use stats::{
    combination_counts, mean_stem_length, range_counts, required_data_width,
    stem_length_histogram, CombinationTable, RangeCount,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexiconError {
    #[error("unknown letter {letter:?} in entry {entry:?}")]
    UnknownLetter { letter: char, entry: String },
    #[error("invalid entry {entry:?}: {reason}")]
    InvalidEntry { entry: String, reason: String },
    #[error("line {line}: {reason}")]
    Format { line: usize, reason: String },
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("invalid combination scheme: {0}")]
    Scheme(String),
    #[error("invalid alphabet: {0}")]
    Alphabet(String),
    #[error("entry {entry:?}: {what} length {len} exceeds {max}")]
    TooLong {
        entry: String,
        what: &'static str,
        len: usize,
        max: usize,
    },
    #[error("invalid geometry: {0}")]
    Geometry(String),
    #[error("image decode error at byte {offset}: {reason}")]
    Decode { offset: usize, reason: String },
}
