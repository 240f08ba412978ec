pub mod analyze;
pub mod bench;
pub mod compile;
pub mod fit;
pub mod memcost;
pub mod ontometrics;
pub mod pareto;
pub mod stats;
pub mod tokenize;

use std::path::Path;

use morphoforge::lexicon::{deserialize_image, parse_lexicon, Alphabet, LexiconEntry, MemoryImage};
use morphoforge::textmodel::AccDictionary;

use crate::error::{CliError, Result};
use crate::io::{read_bytes, read_text};

pub(crate) fn load_alphabet(path: Option<&Path>) -> Result<Alphabet> {
    match path {
        Some(p) => Alphabet::parse(&read_text(p)?).map_err(|e| CliError::at(p, e)),
        None => Ok(Alphabet::ukrainian()),
    }
}

pub(crate) fn load_lexicon(path: &Path) -> Result<Vec<LexiconEntry>> {
    parse_lexicon(&read_text(path)?).map_err(|e| CliError::at(path, e))
}

pub(crate) fn load_image(path: &Path) -> Result<MemoryImage> {
    deserialize_image(&read_bytes(path)?).map_err(|e| CliError::at(path, e))
}

pub(crate) fn load_acc(path: Option<&Path>) -> Result<AccDictionary> {
    match path {
        Some(p) => AccDictionary::parse(&read_text(p)?).map_err(|e| CliError::at(p, e)),
        None => Ok(AccDictionary::new()),
    }
}

/// Document id: the file stem, or `doc` when there is none.
pub(crate) fn doc_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| "doc".into())
}
