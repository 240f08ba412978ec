use super::LexiconError;

/// One reading of a surface form with its explicit stem/ending split.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexiconEntry {
    surface: String,
    stem: String,
    ending: String,
    lemma: String,
    tags: Vec<String>,
    paradigm: String,
}

impl LexiconEntry {
    /// Tags are stored sorted and deduplicated.
    pub fn new(
        stem: impl Into<String>,
        ending: impl Into<String>,
        lemma: impl Into<String>,
        tags: impl IntoIterator<Item = impl Into<String>>,
        paradigm: impl Into<String>,
    ) -> Result<Self, LexiconError> {
        let stem = stem.into();
        let ending = ending.into();
        let surface = format!("{stem}{ending}");
        Self::with_surface(surface, stem, ending, lemma, tags, paradigm)
    }

    pub fn with_surface(
        surface: impl Into<String>,
        stem: impl Into<String>,
        ending: impl Into<String>,
        lemma: impl Into<String>,
        tags: impl IntoIterator<Item = impl Into<String>>,
        paradigm: impl Into<String>,
    ) -> Result<Self, LexiconError> {
        let surface = surface.into();
        let stem = stem.into();
        let ending = ending.into();
        let invalid = |reason: &str| LexiconError::InvalidEntry {
            entry: surface.clone(),
            reason: reason.to_string(),
        };
        if surface.is_empty() {
            return Err(invalid("empty surface"));
        }
        if format!("{stem}{ending}") != surface {
            return Err(invalid("stem + ending differs from surface"));
        }
        let mut tags: Vec<String> = tags
            .into_iter()
            .map(Into::into)
            .filter(|t: &String| !t.is_empty())
            .collect();
        tags.sort();
        tags.dedup();
        if tags.is_empty() {
            return Err(invalid("no tags"));
        }
        Ok(Self {
            surface,
            stem,
            ending,
            lemma: lemma.into(),
            tags,
            paradigm: paradigm.into(),
        })
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    pub fn stem(&self) -> &str {
        &self.stem
    }

    pub fn ending(&self) -> &str {
        &self.ending
    }

    pub fn lemma(&self) -> &str {
        &self.lemma
    }

    pub fn tags(&self) -> &[String] {
        &self.tags
    }

    pub fn paradigm(&self) -> &str {
        &self.paradigm
    }

    /// Tags joined with `,`; used for deterministic ordering.
    pub fn tag_string(&self) -> String {
        self.tags.join(",")
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.surface,
            self.stem,
            self.ending,
            self.lemma,
            self.tag_string(),
            self.paradigm
        )
    }
}

/// Parses `surface<TAB>stem<TAB>ending<TAB>lemma<TAB>tags<TAB>paradigm` lines.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_lexicon(text: &str) -> Result<Vec<LexiconEntry>, LexiconError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 6 {
            return Err(LexiconError::Format {
                line: n + 1,
                reason: format!("expected 6 tab-separated columns, got {}", cols.len()),
            });
        }
        let entry = LexiconEntry::with_surface(
            cols[0],
            cols[1],
            cols[2],
            cols[3],
            cols[4].split(',').map(str::trim),
            cols[5],
        )
        .map_err(|e| LexiconError::Format {
            line: n + 1,
            reason: e.to_string(),
        })?;
        out.push(entry);
    }
    Ok(out)
}
