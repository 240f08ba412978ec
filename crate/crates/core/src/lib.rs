//! Table-driven morphological analysis toolkit.
//!
//! The crate is organised around the path a text takes through a hardware
//! morphological processor:
//!
//! * [`textmodel`] segments raw text into indexed sentences and word forms and
//!   separates dictionary abbreviations from words that need analysis.
//! * [`lexicon`] gathers corpus statistics (stem lengths, symbol combination
//!   tables, a Gaussian fit of the length histogram) and compiles a lexicon
//!   into a [`MemoryImage`](lexicon::MemoryImage).
//! * [`amp`] simulates the lookup datapath over a memory image with a cycle
//!   model, together with the reference lookups it is checked against.
//! * [`costmodel`] holds the description-complexity calculus, memory sizing
//!   and Pareto selection of a realization.
//! * [`ontometrics`] computes ontograph complexity and concept union.
//!
//! Numeric code that does not need exact integers is generic over
//! [`Scalar`]; the `*64` aliases below fix it to `f64`.

pub mod amp;
pub mod costmodel;
pub mod lexicon;
pub mod ontometrics;
mod scalar;
pub mod textmodel;

pub use scalar::Scalar;

/// Gaussian fit over `f64`.
pub type GaussianFit64 = lexicon::GaussianFit<f64>;
/// Gaussian fit over `f32`.
pub type GaussianFit32 = lexicon::GaussianFit<f32>;
/// Realization point over `f64`.
pub type RealizationPoint64 = costmodel::RealizationPoint<f64>;
/// Pareto weight vector over `f64`.
pub type WeightVector64 = costmodel::WeightVector<f64>;
/// Micro-instruction over `f64` absolute complexities.
pub type MicroInstruction64 = costmodel::MicroInstruction<f64>;
/// Ontograph with `f64` weights.
pub type Ontograph64 = ontometrics::Ontograph<f64>;
/// Exact relative complexity.
pub type Ratio = num_rational::Ratio<u128>;
