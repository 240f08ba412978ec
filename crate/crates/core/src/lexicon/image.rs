//! The compiled memory image and the compiler that produces it.
//!
//! Address path for a stem: the first letter selects a segment, each
//! combination decoder turns a zero-padded symbol tuple into a dense index,
//! and `(segment, indices)` addresses a row of stem cells. Every stem cell
//! holds its stem verbatim, so a row hit is only reported after an exact
//! comparison. Endings are looked up by their zero-padded suffix; absent
//! suffixes read as `NOP`.

use std::collections::{BTreeMap, BTreeSet};

use super::scheme::{tuple_at, MAX_TABLE_POSITIONS};
use super::stats::{required_data_width, CombinationTable};
use super::{Alphabet, CombinationScheme, LexiconEntry, LexiconError};

/// Segments reserved for result storage on top of one per letter.
pub const RESULT_SEGMENTS: usize = 2;

/// Reserved codes on the symbol and result paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sentinels {
    /// Terminates the symbol stream of a word. `0x09` by default.
    pub word_end: u32,
    /// Terminates a result run in the result store. `0x0D0A` by default.
    pub result_end: u32,
}

impl Default for Sentinels {
    fn default() -> Self {
        Self {
            word_end: 0x09,
            result_end: 0x0D0A,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompileOptions {
    pub scheme: CombinationScheme,
    pub sentinels: Sentinels,
    pub max_word_len: u8,
    pub max_ending_len: u8,
}

impl Default for CompileOptions {
    fn default() -> Self {
        Self {
            scheme: CombinationScheme::default(),
            sentinels: Sentinels::default(),
            max_word_len: 32,
            max_ending_len: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndingCell {
    /// The suffix is neither an ending nor a stemless word.
    Nop,
    Ending {
        ending_id: u16,
        consumed_len: u8,
        /// Paradigm classes with at least one stem taking this ending.
        paradigms: Vec<u16>,
        /// Result run when the suffix is also a word on its own.
        standalone: Option<u32>,
    },
    StandaloneWord {
        consumed_len: u8,
        record: u32,
    },
}

static NOP: EndingCell = EndingCell::Nop;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemCell {
    /// Case-folded stem, compared verbatim on lookup.
    pub stem: String,
    pub paradigm: u16,
    /// `(ending id, result address)`, sorted by ending id. Id 0 is the empty
    /// ending.
    pub links: Vec<(u16, u32)>,
}

impl StemCell {
    pub fn link(&self, ending_id: u16) -> Option<u32> {
        self.links
            .binary_search_by_key(&ending_id, |l| l.0)
            .ok()
            .map(|i| self.links[i].1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StemAddress {
    pub segment: u16,
    /// One field per scheme group.
    pub fields: Vec<u32>,
}

/// A decoded reading from the result store.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReadingRef<'a> {
    pub lemma: &'a str,
    pub tags: &'a [String],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemoryImage {
    pub(crate) alphabet: Alphabet,
    pub(crate) scheme: CombinationScheme,
    pub(crate) max_word_len: u8,
    pub(crate) max_ending_len: u8,
    pub(crate) segment_bits: u8,
    pub(crate) first_letter: BTreeMap<u8, u16>,
    pub(crate) tables: Vec<CombinationTable>,
    pub(crate) endings: Vec<String>,
    pub(crate) paradigms: Vec<String>,
    pub(crate) ending_memory: BTreeMap<Vec<u8>, EndingCell>,
    pub(crate) stem_memory: BTreeMap<StemAddress, Vec<StemCell>>,
    pub(crate) result_store: Vec<u32>,
    pub(crate) lemmas: Vec<String>,
    pub(crate) tagsets: Vec<Vec<String>>,
    pub(crate) sentinels: Sentinels,
}

impl MemoryImage {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn scheme(&self) -> &CombinationScheme {
        &self.scheme
    }

    pub fn max_word_len(&self) -> u8 {
        self.max_word_len
    }

    pub fn max_ending_len(&self) -> u8 {
        self.max_ending_len
    }

    pub fn sentinels(&self) -> Sentinels {
        self.sentinels
    }

    pub fn segment_bits(&self) -> u8 {
        self.segment_bits
    }

    pub fn segment_count(&self) -> usize {
        1 << self.segment_bits
    }

    pub fn tables(&self) -> &[CombinationTable] {
        &self.tables
    }

    pub fn endings(&self) -> &[String] {
        &self.endings
    }

    pub fn paradigms(&self) -> &[String] {
        &self.paradigms
    }

    pub fn first_letter_decoder(&self) -> &BTreeMap<u8, u16> {
        &self.first_letter
    }

    pub fn ending_cells(&self) -> impl Iterator<Item = (&[u8], &EndingCell)> {
        self.ending_memory.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn stem_rows(&self) -> impl Iterator<Item = (&StemAddress, &[StemCell])> {
        self.stem_memory.iter().map(|(k, v)| (k, v.as_slice()))
    }

    pub fn stem_cell_count(&self) -> usize {
        self.stem_memory.values().map(Vec::len).sum()
    }

    pub fn link_count(&self) -> usize {
        self.stem_memory
            .values()
            .flatten()
            .map(|c| c.links.len())
            .sum()
    }

    pub fn result_store(&self) -> &[u32] {
        &self.result_store
    }

    pub fn lemma_count(&self) -> usize {
        self.lemmas.len()
    }

    pub fn tagset_count(&self) -> usize {
        self.tagsets.len()
    }

    /// Zero-padded ending-memory key for a suffix.
    pub fn ending_key(&self, suffix: &[u8]) -> Vec<u8> {
        let n = usize::from(self.max_ending_len);
        let mut key = vec![0; n.saturating_sub(suffix.len())];
        key.extend_from_slice(&suffix[suffix.len().saturating_sub(n)..]);
        key
    }

    pub fn ending_cell(&self, suffix: &[u8]) -> &EndingCell {
        if suffix.is_empty() || suffix.len() > usize::from(self.max_ending_len) {
            return &NOP;
        }
        self.ending_memory.get(&self.ending_key(suffix)).unwrap_or(&NOP)
    }

    /// Decoder path for a stem; `None` when some tuple was never compiled in.
    pub fn stem_address(&self, stem_codes: &[u8]) -> Option<StemAddress> {
        let segment = *self.first_letter.get(stem_codes.first()?)?;
        let mut fields = vec![0u32; self.scheme.groups().len()];
        for t in &self.tables {
            fields[t.group] |= t.lookup(&tuple_at(stem_codes, t.start, t.end))?;
        }
        Some(StemAddress { segment, fields })
    }

    pub fn stem_row(&self, addr: &StemAddress) -> &[StemCell] {
        self.stem_memory.get(addr).map_or(&[], Vec::as_slice)
    }

    /// Payload words of the result run at `addr`, without the terminator.
    pub fn result_run(&self, addr: u32) -> &[u32] {
        let start = addr as usize;
        let tail = self.result_store.get(start..).unwrap_or(&[]);
        let len = tail
            .iter()
            .position(|&w| w == self.sentinels.result_end)
            .unwrap_or(tail.len());
        &tail[..len]
    }

    pub fn decode_reading(&self, lemma_word: u32, tags_word: u32) -> Option<ReadingRef<'_>> {
        let lemma = self.lemmas.get(decode_word(lemma_word, self.sentinels.result_end)? as usize)?;
        let tags = self.tagsets.get(decode_word(tags_word, self.sentinels.result_end)? as usize)?;
        Some(ReadingRef { lemma, tags })
    }
}

/// Result payload values skip the terminator code.
pub(crate) fn encode_word(v: u32, sentinel: u32) -> u32 {
    if v < sentinel {
        v
    } else {
        v + 1
    }
}

pub(crate) fn decode_word(w: u32, sentinel: u32) -> Option<u32> {
    match w.cmp(&sentinel) {
        std::cmp::Ordering::Less => Some(w),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(w - 1),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompileReport {
    /// Entries dropped because an earlier entry had the same surface, lemma
    /// and tags.
    pub duplicates: usize,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Compiled {
    pub image: MemoryImage,
    pub report: CompileReport,
}

struct Norm<'a> {
    surface: String,
    stem: String,
    ending: String,
    src: &'a LexiconEntry,
}

/// Width above which a decoder data path is reported as oversized.
const WIDTH_WARNING_BITS: u32 = 20;

/// Compiles entries into a memory image. Output is independent of the input
/// order except for which duplicate survives.
pub fn compile_lexicon(
    entries: &[LexiconEntry],
    alphabet: &Alphabet,
    options: &CompileOptions,
) -> Result<Compiled, LexiconError> {
    let CompileOptions {
        scheme,
        sentinels,
        max_word_len,
        max_ending_len,
    } = options;
    let (max_word_len, max_ending_len) = (*max_word_len, *max_ending_len);
    if !(1..=32).contains(&max_word_len) {
        return Err(LexiconError::Geometry(format!(
            "max word length {max_word_len} outside 1..=32"
        )));
    }
    let ending_cap = max_word_len.min(MAX_TABLE_POSITIONS);
    if max_ending_len == 0 || max_ending_len > ending_cap {
        return Err(LexiconError::Geometry(format!(
            "max ending length {max_ending_len} outside 1..={ending_cap}"
        )));
    }
    if char::from_u32(sentinels.word_end).is_some_and(|c| alphabet.contains(c)) {
        return Err(LexiconError::Geometry(format!(
            "word-end sentinel {:#x} is a letter of the alphabet",
            sentinels.word_end
        )));
    }
    let scheme = scheme.clipped(max_word_len);
    let mut report = CompileReport::default();

    let mut seen = BTreeSet::new();
    let mut norms = Vec::new();
    for e in entries {
        let surface = alphabet.fold_str(e.surface())?;
        let len = surface.chars().count();
        if len > usize::from(max_word_len) {
            return Err(LexiconError::TooLong {
                entry: e.surface().to_string(),
                what: "word",
                len,
                max: max_word_len.into(),
            });
        }
        let elen = e.ending().chars().count();
        if elen > usize::from(max_ending_len) {
            return Err(LexiconError::TooLong {
                entry: e.surface().to_string(),
                what: "ending",
                len: elen,
                max: max_ending_len.into(),
            });
        }
        if !seen.insert((surface.clone(), e.lemma().to_string(), e.tags().to_vec())) {
            report.duplicates += 1;
            continue;
        }
        let stem: String = surface.chars().take(len - elen).collect();
        let ending: String = surface.chars().skip(len - elen).collect();
        norms.push(Norm {
            surface,
            stem,
            ending,
            src: e,
        });
    }
    if report.duplicates > 0 {
        report
            .warnings
            .push(format!("{} duplicate entries dropped", report.duplicates));
    }

    let endings: Vec<String> = std::iter::once(String::new())
        .chain(
            norms
                .iter()
                .map(|n| n.ending.clone())
                .filter(|e| !e.is_empty())
                .collect::<BTreeSet<_>>(),
        )
        .collect();
    let ending_id = |e: &str| endings.binary_search_by(|x| x.as_str().cmp(e)).unwrap() as u16;
    let paradigms: Vec<String> = norms
        .iter()
        .map(|n| n.src.paradigm().to_string())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let paradigm_id =
        |p: &str| paradigms.binary_search_by(|x| x.as_str().cmp(p)).unwrap() as u16;
    let lemmas: Vec<String> = norms
        .iter()
        .map(|n| n.src.lemma().to_string())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let tagsets: Vec<Vec<String>> = norms
        .iter()
        .map(|n| n.src.tags().to_vec())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    // Readings grouped by what selects them.
    type Readings<'a> = Vec<&'a LexiconEntry>;
    let mut standalone: BTreeMap<u16, Readings> = BTreeMap::new();
    let mut stemmed: BTreeMap<(String, u16, u16), Readings> = BTreeMap::new();
    for n in &norms {
        if n.stem.is_empty() {
            standalone.entry(ending_id(&n.surface)).or_default().push(n.src);
        } else {
            stemmed
                .entry((n.stem.clone(), paradigm_id(n.src.paradigm()), ending_id(&n.ending)))
                .or_default()
                .push(n.src);
        }
    }

    let mut result_store = Vec::new();
    let mut emit_run = |readings: &mut Readings| -> u32 {
        readings.sort_by(|a, b| (a.lemma(), a.tag_string()).cmp(&(b.lemma(), b.tag_string())));
        let addr = result_store.len() as u32;
        for r in readings.iter() {
            let l = lemmas.binary_search_by(|x| x.as_str().cmp(r.lemma())).unwrap() as u32;
            let t = tagsets.binary_search_by(|x| x.as_slice().cmp(r.tags())).unwrap() as u32;
            result_store.push(encode_word(l, sentinels.result_end));
            result_store.push(encode_word(t, sentinels.result_end));
        }
        result_store.push(sentinels.result_end);
        addr
    };
    let standalone_addr: BTreeMap<u16, u32> = standalone
        .iter_mut()
        .map(|(&id, rs)| (id, emit_run(rs)))
        .collect();
    let mut cells: BTreeMap<(String, u16), Vec<(u16, u32)>> = BTreeMap::new();
    let mut ending_paradigms: BTreeMap<u16, BTreeSet<u16>> = BTreeMap::new();
    for ((stem, p, eid), rs) in stemmed.iter_mut() {
        let addr = emit_run(rs);
        cells.entry((stem.clone(), *p)).or_default().push((*eid, addr));
        if *eid != 0 {
            ending_paradigms.entry(*eid).or_default().insert(*p);
        }
    }

    let mut ending_memory = BTreeMap::new();
    for (id, e) in endings.iter().enumerate().skip(1) {
        let id = id as u16;
        let codes = alphabet.encode(e)?;
        let consumed_len = codes.len() as u8;
        let key = {
            let mut k = vec![0u8; usize::from(max_ending_len) - codes.len()];
            k.extend_from_slice(&codes);
            k
        };
        let sa = standalone_addr.get(&id).copied();
        let cell = match ending_paradigms.get(&id) {
            Some(ps) => EndingCell::Ending {
                ending_id: id,
                consumed_len,
                paradigms: ps.iter().copied().collect(),
                standalone: sa,
            },
            None => EndingCell::StandaloneWord {
                consumed_len,
                record: sa.expect("ending without stems comes from a stemless entry"),
            },
        };
        ending_memory.insert(key, cell);
    }

    let stem_codes: Vec<Vec<u8>> = {
        let mut v = cells
            .keys()
            .map(|(s, _)| alphabet.encode(s))
            .collect::<Result<Vec<_>, _>>()?;
        v.dedup();
        v
    };
    let tables: Vec<CombinationTable> = scheme
        .chunks()
        .into_iter()
        .map(|c| {
            let mode = scheme.groups()[c.group].mode;
            CombinationTable::build(c.group, c.start, c.end, mode, &stem_codes)
        })
        .collect();

    let segment_bits =
        required_data_width((alphabet.len() + RESULT_SEGMENTS) as u64).expect("nonzero") as u8;
    let first_letter: BTreeMap<u8, u16> = alphabet
        .letters()
        .iter()
        .enumerate()
        .map(|(i, &c)| (alphabet.code(c).expect("canonical letter"), i as u16))
        .collect();

    let mut image = MemoryImage {
        alphabet: alphabet.clone(),
        scheme,
        max_word_len,
        max_ending_len,
        segment_bits,
        first_letter,
        tables,
        endings,
        paradigms,
        ending_memory,
        stem_memory: BTreeMap::new(),
        result_store,
        lemmas,
        tagsets,
        sentinels: *sentinels,
    };
    let mut stem_memory: BTreeMap<StemAddress, Vec<StemCell>> = BTreeMap::new();
    for ((stem, paradigm), mut links) in cells {
        links.sort();
        let codes = alphabet.encode(&stem)?;
        let addr = image
            .stem_address(&codes)
            .expect("tables are built from the same stems");
        stem_memory.entry(addr).or_default().push(StemCell {
            stem,
            paradigm,
            links,
        });
    }
    image.stem_memory = stem_memory;

    for t in &image.tables {
        if t.data_width_bits() > WIDTH_WARNING_BITS {
            report.warnings.push(format!(
                "decoder C{}–C{} needs {} data bits (above {WIDTH_WARNING_BITS})",
                t.start,
                t.end,
                t.data_width_bits()
            ));
        }
    }
    if let Some(mean) = super::mean_stem_length(entries) {
        let cov = image.scheme.independent_coverage();
        if f64::from(cov) < mean {
            report.warnings.push(format!(
                "independent groups cover positions up to {cov}, below the mean stem length {mean:.2}"
            ));
        }
    }
    Ok(Compiled { image, report })
}
