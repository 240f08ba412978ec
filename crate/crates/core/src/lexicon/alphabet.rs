use std::collections::BTreeMap;

use super::LexiconError;

/// Width of a reduced letter code.
pub const CODE_BITS: u32 = 6;

const MAX_CODE: u8 = (1 << CODE_BITS) - 1;

/// Letters of a lexicon with their reduced codes and case folding.
///
/// Code 0 is reserved for zero padding, so at most 63 canonical letters fit.
/// Non-canonical letters (e.g. upper case) fold to a canonical letter and
/// share its code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
    codes: BTreeMap<char, u8>,
    fold: BTreeMap<char, char>,
}

impl Alphabet {
    /// Assigns codes `1..` in the given order and folds every single-char
    /// upper-case variant onto its letter.
    pub fn from_letters(letters: impl IntoIterator<Item = char>) -> Result<Self, LexiconError> {
        let mut pairs = Vec::new();
        for (i, c) in letters.into_iter().enumerate() {
            let code = u8::try_from(i + 1)
                .ok()
                .filter(|&c| c <= MAX_CODE)
                .ok_or_else(|| LexiconError::Alphabet("more than 63 letters".into()))?;
            pairs.push((c, code, c));
            let mut up = c.to_uppercase();
            if let (Some(u), None) = (up.next(), up.next()) {
                if u != c {
                    pairs.push((u, code, c));
                }
            }
        }
        Self::from_triples(pairs)
    }

    /// Lower-case Ukrainian letters plus apostrophe and hyphen; typographic
    /// apostrophes fold to `'`.
    pub fn ukrainian() -> Self {
        let mut a = Self::from_letters("абвгґдеєжзиіїйклмнопрстуфхцчшщьюя'-".chars())
            .expect("builtin alphabet");
        let apo = a.codes[&'\''];
        for c in ['’', 'ʼ'] {
            a.codes.insert(c, apo);
            a.fold.insert(c, '\'');
        }
        a
    }

    fn from_triples(triples: Vec<(char, u8, char)>) -> Result<Self, LexiconError> {
        let mut letters = Vec::new();
        let mut codes = BTreeMap::new();
        let mut fold = BTreeMap::new();
        let mut used = BTreeMap::new();
        for &(c, code, target) in triples.iter().filter(|t| t.0 == t.2) {
            if code == 0 || code > MAX_CODE {
                return Err(LexiconError::Alphabet(format!(
                    "code {code} of {c:?} outside 1..=63"
                )));
            }
            if let Some(prev) = used.insert(code, c) {
                return Err(LexiconError::Alphabet(format!(
                    "code {code} shared by {prev:?} and {c:?}"
                )));
            }
            if codes.insert(c, code).is_some() {
                return Err(LexiconError::Alphabet(format!("letter {c:?} listed twice")));
            }
            letters.push(target);
        }
        for &(c, code, target) in triples.iter().filter(|t| t.0 != t.2) {
            let Some(&tcode) = codes.get(&target).filter(|_| letters.contains(&target)) else {
                return Err(LexiconError::Alphabet(format!(
                    "{c:?} folds to {target:?}, which is not a canonical letter"
                )));
            };
            if code != tcode {
                return Err(LexiconError::Alphabet(format!(
                    "{c:?} has code {code} but folds to {target:?} with code {tcode}"
                )));
            }
            if codes.insert(c, code).is_some() {
                return Err(LexiconError::Alphabet(format!("letter {c:?} listed twice")));
            }
            fold.insert(c, target);
        }
        letters.sort_by_key(|c| codes[c]);
        Ok(Self {
            letters,
            codes,
            fold,
        })
    }

    /// Parses `letter<TAB>code<TAB>foldTarget` lines.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut triples = Vec::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: &str| LexiconError::Format {
                line: n + 1,
                reason: reason.to_string(),
            };
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(bad("expected letter<TAB>code<TAB>foldTarget"));
            }
            let single = |s: &str| {
                let mut cs = s.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) => Some(c),
                    _ => None,
                }
            };
            let letter = single(cols[0]).ok_or_else(|| bad("letter must be one character"))?;
            let target = single(cols[2]).ok_or_else(|| bad("fold target must be one character"))?;
            let code: u8 = cols[1].trim().parse().map_err(|_| bad("code is not a number"))?;
            triples.push((letter, code, target));
        }
        Self::from_triples(triples)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for (&c, &code) in &self.codes {
            let target = self.fold.get(&c).copied().unwrap_or(c);
            out.push_str(&format!("{c}\t{code}\t{target}\n"));
        }
        out
    }

    /// Canonical letters in code order.
    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, c: char) -> bool {
        self.codes.contains_key(&c)
    }

    pub fn fold(&self, c: char) -> Option<char> {
        if !self.codes.contains_key(&c) {
            return None;
        }
        Some(self.fold.get(&c).copied().unwrap_or(c))
    }

    pub fn code(&self, c: char) -> Option<u8> {
        self.codes.get(&c).copied()
    }

    pub fn letter(&self, code: u8) -> Option<char> {
        self.letters.get(usize::from(code).checked_sub(1)?).copied()
    }

    /// Case-folds a word, naming the first letter outside the alphabet.
    pub fn fold_str(&self, word: &str) -> Result<String, LexiconError> {
        word.chars()
            .map(|c| {
                self.fold(c).ok_or_else(|| LexiconError::UnknownLetter {
                    letter: c,
                    entry: word.to_string(),
                })
            })
            .collect()
    }

    pub fn encode(&self, word: &str) -> Result<Vec<u8>, LexiconError> {
        word.chars()
            .map(|c| {
                self.code(c).ok_or_else(|| LexiconError::UnknownLetter {
                    letter: c,
                    entry: word.to_string(),
                })
            })
            .collect()
    }

    /// All `(letter, fold target)` pairs for non-canonical letters.
    pub(crate) fn folds(&self) -> impl Iterator<Item = (char, char)> + '_ {
        self.fold.iter().map(|(&a, &b)| (a, b))
    }

    pub(crate) fn from_parts(
        letters: Vec<(char, u8)>,
        folds: Vec<(char, char)>,
    ) -> Result<Self, LexiconError> {
        let codes: BTreeMap<char, u8> = letters.iter().copied().collect();
        let mut triples: Vec<_> = letters.iter().map(|&(c, code)| (c, code, c)).collect();
        for (c, t) in folds {
            let code = *codes
                .get(&t)
                .ok_or_else(|| LexiconError::Alphabet(format!("fold target {t:?} unknown")))?;
            triples.push((c, code, t));
        }
        Self::from_triples(triples)
    }
}
