use super::{
    AccDictionary, DottedIndex, GraphematicStructure, MorphRecord, RawDocument, Sentence,
    TokenClass, WordForm,
};

const TERMINATORS: &[&str] = &[".", "!", "?", "…"];
const CLOSERS: &[char] = &['»', '"', '”', '’', ')', ']', '}'];
const CONNECTORS: &[char] = &['\'', '’', 'ʼ', '-', '\u{2011}'];

fn is_combining(c: char) -> bool {
    matches!(c, '\u{0300}'..='\u{036F}' | '\u{1AB0}'..='\u{1AFF}' | '\u{20D0}'..='\u{20FF}')
}

fn char_at(text: &str, i: usize) -> Option<char> {
    text.get(i..).and_then(|s| s.chars().next())
}

fn char_before(text: &str, i: usize) -> Option<char> {
    text[..i].chars().next_back()
}

fn is_terminator(surface: &str) -> bool {
    TERMINATORS.contains(&surface) || (surface.len() > 1 && surface.chars().all(|c| c == '.'))
}

fn is_closer(surface: &str) -> bool {
    let mut cs = surface.chars();
    matches!((cs.next(), cs.next()), (Some(c), None) if CLOSERS.contains(&c))
}

/// Whitespace followed by a capital, or nothing but whitespace until the end.
fn boundary_follows(text: &str, end: usize) -> bool {
    let rest = &text[end..];
    let trimmed = rest.trim_start();
    if trimmed.is_empty() {
        return true;
    }
    trimmed.len() < rest.len() && trimmed.chars().next().is_some_and(char::is_uppercase)
}

fn acc_match(text: &str, i: usize, acc: &AccDictionary) -> Option<usize> {
    if acc.is_empty() || char_before(text, i).is_some_and(char::is_alphanumeric) {
        return None;
    }
    let ends: Vec<usize> = text[i..]
        .char_indices()
        .take(acc.max_chars())
        .map(|(o, c)| i + o + c.len_utf8())
        .collect();
    ends.into_iter().rev().find(|&e| {
        acc.contains(&text[i..e]) && !char_at(text, e).is_some_and(char::is_alphanumeric)
    })
}

fn scan_token(text: &str, i: usize, acc: &AccDictionary) -> (TokenClass, usize) {
    if let Some(end) = acc_match(text, i, acc) {
        return (TokenClass::AccEntry, end);
    }
    let c = char_at(text, i).expect("scan within text");
    let mut j = i + c.len_utf8();
    if c.is_alphabetic() {
        while let Some(d) = char_at(text, j) {
            if d.is_alphabetic()
                || is_combining(d)
                || (CONNECTORS.contains(&d)
                    && char_at(text, j + d.len_utf8()).is_some_and(char::is_alphabetic))
            {
                j += d.len_utf8();
            } else {
                break;
            }
        }
        (TokenClass::Word, j)
    } else if c.is_numeric() {
        while let Some(d) = char_at(text, j) {
            if d.is_numeric() {
                j += d.len_utf8();
            } else if (d == '.' || d == ',')
                && char_at(text, j + 1).is_some_and(char::is_numeric)
            {
                j += 1;
            } else {
                break;
            }
        }
        (TokenClass::Number, j)
    } else {
        if c == '.' {
            while char_at(text, j) == Some('.') {
                j += 1;
            }
        }
        (TokenClass::Punctuation, j)
    }
}

/// Segments a document into sentences and word forms.
///
/// Acc dictionary matches are tried before any other rule, so an entry like
/// `т.д.` is one token and never ends a sentence. A sentence ends after a
/// terminator (optionally followed by closing quotes or brackets) when the
/// next token starts with a capital after whitespace, or at the end of the
/// text. A trailing sentence without a terminator is emitted with
/// `complete == false`.
pub fn segment(doc: &RawDocument, acc: &AccDictionary) -> GraphematicStructure {
    let text = doc.content();
    let mut sentences = Vec::new();
    let mut current: Vec<WordForm> = Vec::new();
    let mut gap_start = 0;
    let mut pending = false;
    let mut i = 0;

    while let Some(c) = char_at(text, i) {
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let (class, end) = scan_token(text, i, acc);
        let surface = &text[i..end];
        pending = match class {
            TokenClass::Punctuation if is_terminator(surface) => true,
            TokenClass::Punctuation if is_closer(surface) => pending,
            _ => false,
        };
        current.push(WordForm {
            position: current.len() + 1,
            surface: surface.to_string(),
            token_class: class,
            char_span: (i, end),
            gap_before: text[gap_start..i].to_string(),
            dotted_index: None,
        });
        gap_start = end;
        i = end;
        if pending && boundary_follows(text, end) {
            sentences.push(Sentence {
                index: sentences.len() + 1,
                wordforms: std::mem::take(&mut current),
                dotted_index: None,
                complete: true,
            });
            pending = false;
        }
    }
    if !current.is_empty() {
        sentences.push(Sentence {
            index: sentences.len() + 1,
            wordforms: current,
            dotted_index: None,
            complete: false,
        });
    }
    GraphematicStructure {
        doc_id: doc.id().to_string(),
        doc_number: 1,
        sentences,
        tail: text[gap_start..].to_string(),
    }
}

impl GraphematicStructure {
    /// Sets the document ordinal used as the first index component.
    pub fn with_doc_number(mut self, n: u32) -> Self {
        self.doc_number = n;
        self
    }
}

/// Assigns `doc.sentence` indices to sentences and `doc.sentence.word` indices
/// to word forms. Re-indexing yields the same structure.
pub fn index_structure(gs: &GraphematicStructure) -> GraphematicStructure {
    let mut out = gs.clone();
    let doc = DottedIndex::new(vec![out.doc_number()]);
    for s in out.sentences_mut() {
        let sidx = doc.child(s.index as u32);
        for w in &mut s.wordforms {
            w.dotted_index = Some(sidx.child(w.position as u32));
        }
        s.dotted_index = Some(sidx);
    }
    out
}

/// The two parallel sequences a sentence is split into.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitStreams {
    /// Word forms whose morphology must be computed.
    pub compute: Vec<WordForm>,
    /// Word forms with morphology copied from the acc dictionary.
    pub acc: Vec<(WordForm, MorphRecord)>,
}

/// Partitions the word-class tokens of a sentence by acc membership.
/// Punctuation and numbers belong to neither stream.
pub fn split_streams(s: &Sentence, acc: &AccDictionary) -> SplitStreams {
    let mut out = SplitStreams::default();
    for w in s.wordforms.iter().filter(|w| w.token_class.is_word_like()) {
        match acc.lookup(&w.surface) {
            Some(rec) => out.acc.push((w.clone(), rec.clone())),
            None => out.compute.push(w.clone()),
        }
    }
    out
}
