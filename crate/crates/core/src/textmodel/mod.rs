//! Graphematic analysis: raw text to an indexed hierarchy of sentences and
//! word forms, with dictionary abbreviations split into their own stream.

mod acc;
mod segment;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use acc::{AccDictionary, MorphRecord};
pub use segment::{index_structure, segment, split_streams, SplitStreams};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextError {
    #[error("invalid UTF-8 at byte offset {offset}")]
    Decode { offset: usize },
    #[error("document id must not be empty")]
    EmptyId,
    #[error("malformed structure: {0}")]
    Structure(String),
    #[error("acc dictionary line {line}: {reason}")]
    AccFormat { line: usize, reason: String },
    #[error("duplicate acc entry {0:?}")]
    AccDuplicate(String),
    #[error("invalid dotted index {0:?}")]
    BadIndex(String),
}

/// A text of the corpus as received.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDocument {
    id: String,
    content: String,
}

impl RawDocument {
    pub fn new(id: impl Into<String>, content: impl Into<String>) -> Result<Self, TextError> {
        let id = id.into();
        if id.is_empty() {
            return Err(TextError::EmptyId);
        }
        Ok(Self {
            id,
            content: content.into(),
        })
    }

    /// Decodes `bytes` as UTF-8, reporting the offset of the first bad byte.
    pub fn from_utf8(id: impl Into<String>, bytes: &[u8]) -> Result<Self, TextError> {
        let content = std::str::from_utf8(bytes).map_err(|e| TextError::Decode {
            offset: e.valid_up_to(),
        })?;
        Self::new(id, content)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn content(&self) -> &str {
        &self.content
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum TokenClass {
    Word,
    AccEntry,
    Punctuation,
    Number,
}

impl TokenClass {
    /// Word-class tokens are the ones that carry morphology.
    pub fn is_word_like(self) -> bool {
        matches!(self, TokenClass::Word | TokenClass::AccEntry)
    }
}

/// Hierarchical `doc.sentence.word` index. Ordering is componentwise numeric.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DottedIndex(Vec<u32>);

impl DottedIndex {
    pub fn new(components: Vec<u32>) -> Self {
        Self(components)
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn child(&self, n: u32) -> Self {
        let mut c = self.0.clone();
        c.push(n);
        Self(c)
    }
}

impl fmt::Display for DottedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for DottedIndex {
    type Err = TextError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split('.')
            .map(|p| p.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
            .map_err(|_| TextError::BadIndex(s.to_string()))
    }
}

impl Serialize for DottedIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WordForm {
    /// 1-based position within the sentence.
    pub position: usize,
    pub surface: String,
    pub token_class: TokenClass,
    /// Byte offsets `[start, end)` into the source text.
    pub char_span: (usize, usize),
    /// Separator text between the previous token (or the start) and this one.
    pub gap_before: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dotted_index: Option<DottedIndex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Sentence {
    /// 1-based index within the document.
    pub index: usize,
    pub wordforms: Vec<WordForm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dotted_index: Option<DottedIndex>,
    /// False for a trailing sentence that ended with the input instead of a
    /// terminator.
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphematicStructure {
    doc_id: String,
    doc_number: u32,
    sentences: Vec<Sentence>,
    /// Separator text after the last token.
    tail: String,
}

impl GraphematicStructure {
    /// Builds a structure, checking ordering and contiguity invariants.
    pub fn new(
        doc_id: impl Into<String>,
        doc_number: u32,
        sentences: Vec<Sentence>,
        tail: impl Into<String>,
    ) -> Result<Self, TextError> {
        let doc_id = doc_id.into();
        if doc_id.is_empty() {
            return Err(TextError::EmptyId);
        }
        let mut last_index = 0;
        let mut last_end = 0;
        for s in &sentences {
            if s.index <= last_index {
                return Err(TextError::Structure(format!(
                    "sentence index {} follows {}",
                    s.index, last_index
                )));
            }
            last_index = s.index;
            if s.wordforms.is_empty() {
                return Err(TextError::Structure(format!(
                    "sentence {} has no word forms",
                    s.index
                )));
            }
            for (i, w) in s.wordforms.iter().enumerate() {
                if w.position != i + 1 {
                    return Err(TextError::Structure(format!(
                        "sentence {}: word form at slot {} has position {}",
                        s.index,
                        i + 1,
                        w.position
                    )));
                }
                if w.surface.is_empty() {
                    return Err(TextError::Structure(format!(
                        "sentence {}: empty surface at position {}",
                        s.index, w.position
                    )));
                }
                let (start, end) = w.char_span;
                if start < last_end || end < start || end - start != w.surface.len() {
                    return Err(TextError::Structure(format!(
                        "sentence {}: span {:?} of position {} overlaps or is out of order",
                        s.index, w.char_span, w.position
                    )));
                }
                last_end = end;
            }
        }
        Ok(Self {
            doc_id,
            doc_number,
            sentences,
            tail: tail.into(),
        })
    }

    pub fn doc_id(&self) -> &str {
        &self.doc_id
    }

    pub fn doc_number(&self) -> u32 {
        self.doc_number
    }

    pub fn sentences(&self) -> &[Sentence] {
        &self.sentences
    }

    pub fn tail(&self) -> &str {
        &self.tail
    }

    /// Reassembles the source text from separators and surfaces.
    pub fn join(&self) -> String {
        let mut out = String::new();
        for w in self.sentences.iter().flat_map(|s| &s.wordforms) {
            out.push_str(&w.gap_before);
            out.push_str(&w.surface);
        }
        out.push_str(&self.tail);
        out
    }

    pub fn is_indexed(&self) -> bool {
        self.sentences.iter().all(|s| {
            s.dotted_index.is_some() && s.wordforms.iter().all(|w| w.dotted_index.is_some())
        })
    }

    pub(crate) fn sentences_mut(&mut self) -> &mut [Sentence] {
        &mut self.sentences
    }
}
