use std::collections::BTreeMap;

use serde::Serialize;

use super::TextError;

/// Pre-supplied morphology: a lemma and its tag set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MorphRecord {
    pub lemma: String,
    pub tags: Vec<String>,
}

impl MorphRecord {
    pub fn new(lemma: impl Into<String>, tags: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self {
            lemma: lemma.into(),
            tags: tags.into_iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct AccEntry {
    surface: String,
    record: MorphRecord,
}

/// Abbreviations, contractions and special symbols whose morphology comes
/// from a table instead of the analyzer.
///
/// Entries match case-insensitively unless declared `exact`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AccDictionary {
    exact: BTreeMap<String, AccEntry>,
    folded: BTreeMap<String, AccEntry>,
    max_chars: usize,
}

impl AccDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(
        &mut self,
        surface: impl Into<String>,
        record: MorphRecord,
        case_sensitive: bool,
    ) -> Result<(), TextError> {
        let surface = surface.into();
        if surface.is_empty() {
            return Err(TextError::AccFormat {
                line: 0,
                reason: "empty surface".into(),
            });
        }
        let key = if case_sensitive {
            surface.clone()
        } else {
            surface.to_lowercase()
        };
        let map = if case_sensitive {
            &mut self.exact
        } else {
            &mut self.folded
        };
        if map.contains_key(&key) {
            return Err(TextError::AccDuplicate(surface));
        }
        self.max_chars = self.max_chars.max(surface.chars().count());
        map.insert(key, AccEntry { surface, record });
        Ok(())
    }

    /// Parses `surface<TAB>tag1,tag2,…[<TAB>exact]` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, TextError> {
        let mut dict = Self::new();
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() < 2 || cols.len() > 3 {
                return Err(TextError::AccFormat {
                    line: line_no,
                    reason: format!("expected 2 or 3 tab-separated columns, got {}", cols.len()),
                });
            }
            let tags: Vec<&str> = cols[1]
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .collect();
            if tags.is_empty() {
                return Err(TextError::AccFormat {
                    line: line_no,
                    reason: "no tags".into(),
                });
            }
            let case_sensitive = match cols.get(2).map(|s| s.trim()) {
                None | Some("") => false,
                Some("exact") => true,
                Some(other) => {
                    return Err(TextError::AccFormat {
                        line: line_no,
                        reason: format!("unknown flag {other:?}"),
                    })
                }
            };
            let surface = cols[0];
            dict.insert(surface, MorphRecord::new(surface, tags), case_sensitive)
                .map_err(|e| match e {
                    TextError::AccFormat { reason, .. } => TextError::AccFormat {
                        line: line_no,
                        reason,
                    },
                    other => other,
                })?;
        }
        Ok(dict)
    }

    pub fn lookup(&self, surface: &str) -> Option<&MorphRecord> {
        self.exact
            .get(surface)
            .or_else(|| self.folded.get(&surface.to_lowercase()))
            .map(|e| &e.record)
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.lookup(surface).is_some()
    }

    pub fn len(&self) -> usize {
        self.exact.len() + self.folded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Declared surface forms, case-sensitive ones first.
    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.exact
            .values()
            .chain(self.folded.values())
            .map(|e| e.surface.as_str())
    }

    pub(crate) fn max_chars(&self) -> usize {
        self.max_chars
    }
}
