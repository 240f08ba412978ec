use std::fmt;

use crate::lexicon::{EndingCell, MemoryImage};

use super::{AmpConfig, AmpError, MorphResult, Reading};

/// One step of the lookup state machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceStep {
    ReceiveSymbol(u8),
    WordEndDetected(u32),
    EndingProbe(usize),
    /// The probed suffix is not an ending; the decomposition is blocked.
    NopSkip(usize),
    StemCompare { ending_len: usize, hit: bool },
    EmitResultWord(u32),
    ResultEnd(u32),
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TraceStep::ReceiveSymbol(c) => write!(f, "recv {c:#04x}"),
            TraceStep::WordEndDetected(c) => write!(f, "word_end {c:#04x}"),
            TraceStep::EndingProbe(l) => write!(f, "probe {l}"),
            TraceStep::NopSkip(l) => write!(f, "nop {l}"),
            TraceStep::StemCompare { ending_len, hit } => {
                write!(f, "compare {ending_len} {}", if hit { "hit" } else { "miss" })
            }
            TraceStep::EmitResultWord(w) => write!(f, "emit {w:#06x}"),
            TraceStep::ResultEnd(w) => write!(f, "result_end {w:#06x}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BlockTrace {
    pub steps: Vec<TraceStep>,
}

impl fmt::Display for BlockTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl BlockTrace {
    /// Checks the step sequence against the state machine: symbols, the
    /// word end, then probes and compares, each emit run closed by a
    /// result end.
    pub fn is_valid_path(&self) -> bool {
        let mut it = self.steps.iter().peekable();
        let mut symbols = 0;
        while let Some(TraceStep::ReceiveSymbol(_)) = it.peek() {
            it.next();
            symbols += 1;
        }
        if symbols == 0 || !matches!(it.next(), Some(TraceStep::WordEndDetected(_))) {
            return false;
        }
        let mut in_run = false;
        let mut last_probe = None;
        for s in it {
            match s {
                TraceStep::EmitResultWord(_) => in_run = true,
                TraceStep::ResultEnd(_) => {
                    if !in_run {
                        return false;
                    }
                    in_run = false;
                }
                _ if in_run => return false,
                TraceStep::EndingProbe(l) => last_probe = Some(*l),
                TraceStep::NopSkip(l) if last_probe != Some(*l) => return false,
                TraceStep::StemCompare { ending_len, .. }
                    if *ending_len > 0 && last_probe != Some(*ending_len) =>
                {
                    return false
                }
                TraceStep::ReceiveSymbol(_) | TraceStep::WordEndDetected(_) => return false,
                _ => {}
            }
        }
        !in_run
    }
}

pub(crate) fn check_geometry(image: &MemoryImage, config: &AmpConfig) -> Result<(), AmpError> {
    config.validate()?;
    if config.max_ending_len != image.max_ending_len() {
        return Err(AmpError::Geometry(format!(
            "maxEndingLen {} but the image was compiled for {}",
            config.max_ending_len,
            image.max_ending_len()
        )));
    }
    if config.sentinels != image.sentinels() {
        return Err(AmpError::Geometry(format!(
            "sentinels {:?} but the image uses {:?}",
            config.sentinels,
            image.sentinels()
        )));
    }
    Ok(())
}

struct Machine<'a> {
    image: &'a MemoryImage,
    trace: Option<BlockTrace>,
    probes: u64,
    compares: u64,
    result_words: u64,
    readings: Vec<Reading>,
}

impl Machine<'_> {
    fn step(&mut self, s: TraceStep) {
        if let Some(t) = &mut self.trace {
            t.steps.push(s);
        }
    }

    fn emit_run(&mut self, addr: u32, stem_len: usize, ending_len: usize) {
        let image = self.image;
        let run = image.result_run(addr);
        for pair in run.chunks_exact(2) {
            self.step(TraceStep::EmitResultWord(pair[0]));
            self.step(TraceStep::EmitResultWord(pair[1]));
            let r = image
                .decode_reading(pair[0], pair[1])
                .expect("result store holds valid readings");
            self.readings.push(Reading {
                lemma: r.lemma.to_string(),
                tags: r.tags.to_vec(),
                stem_len,
                ending_len,
            });
        }
        self.result_words += run.len() as u64 + 1;
        self.step(TraceStep::ResultEnd(image.sentinels().result_end));
    }

    /// Stem path for `codes[..stem_len]` with the given ending id.
    fn compare(&mut self, codes: &[u8], folded: &[char], stem_len: usize, ending_id: u16, paradigms: Option<&[u16]>) {
        self.compares += 1;
        let ending_len = codes.len() - stem_len;
        let stem: String = folded[..stem_len].iter().collect();
        let hits: Vec<u32> = self
            .image
            .stem_address(&codes[..stem_len])
            .map(|a| {
                self.image
                    .stem_row(&a)
                    .iter()
                    .filter(|c| c.stem == stem)
                    .filter(|c| paradigms.is_none_or(|ps| ps.contains(&c.paradigm)))
                    .filter_map(|c| c.link(ending_id))
                    .collect()
            })
            .unwrap_or_default();
        self.step(TraceStep::StemCompare {
            ending_len,
            hit: !hits.is_empty(),
        });
        for addr in hits {
            self.emit_run(addr, stem_len, ending_len);
        }
    }
}

fn run(
    image: &MemoryImage,
    word: &str,
    config: &AmpConfig,
    traced: bool,
) -> Result<(MorphResult, Option<BlockTrace>), AmpError> {
    check_geometry(image, config)?;
    let alphabet = image.alphabet();
    let n = word.chars().count();
    if n == 0 {
        return Err(AmpError::EmptyWord);
    }
    let max = usize::from(config.max_word_len.min(image.max_word_len()));
    if n > max {
        return Err(AmpError::TooLong {
            word: word.to_string(),
            len: n,
            max,
        });
    }
    let mut codes = Vec::with_capacity(n);
    let mut folded = Vec::with_capacity(n);
    for c in word.chars() {
        match (alphabet.code(c), alphabet.fold(c)) {
            (Some(code), Some(f)) => {
                codes.push(code);
                folded.push(f);
            }
            _ => {
                return Err(AmpError::UnknownLetter {
                    letter: c,
                    word: word.to_string(),
                })
            }
        }
    }

    let mut m = Machine {
        image,
        trace: traced.then(BlockTrace::default),
        probes: 0,
        compares: 0,
        result_words: 0,
        readings: Vec::new(),
    };
    for &c in &codes {
        m.step(TraceStep::ReceiveSymbol(c));
    }
    m.step(TraceStep::WordEndDetected(config.sentinels.word_end));

    let e_max = usize::from(image.max_ending_len()).min(n);
    for l in 1..=e_max {
        m.probes += 1;
        m.step(TraceStep::EndingProbe(l));
        let stem_len = n - l;
        match image.ending_cell(&codes[stem_len..]) {
            EndingCell::Ending {
                ending_id,
                paradigms,
                standalone,
                ..
            } => {
                if stem_len == 0 {
                    if let Some(addr) = *standalone {
                        m.emit_run(addr, 0, l);
                    }
                } else {
                    let paradigms = paradigms.clone();
                    m.compare(&codes, &folded, stem_len, *ending_id, Some(&paradigms));
                }
            }
            EndingCell::StandaloneWord { record, .. } if stem_len == 0 => {
                m.emit_run(*record, 0, l);
            }
            _ => {
                if stem_len > 0 {
                    // The blocked slot still costs a compare cycle so that
                    // timing depends on the word length only.
                    m.compares += 1;
                    m.step(TraceStep::NopSkip(l));
                }
            }
        }
    }
    m.compare(&codes, &folded, n, 0, None);

    let p = &config.cycles;
    let cycles = p.fixed
        + p.per_symbol_in * n as u64
        + p.per_ending_probe * m.probes
        + p.per_stem_compare * m.compares
        + p.per_result_word * m.result_words;
    let result = MorphResult::from_readings(word, m.readings, cycles);
    Ok((result, m.trace))
}

pub fn analyze_word(image: &MemoryImage, word: &str, config: &AmpConfig) -> Result<MorphResult, AmpError> {
    run(image, word, config, false).map(|r| r.0)
}

pub fn analyze_word_traced(
    image: &MemoryImage,
    word: &str,
    config: &AmpConfig,
) -> Result<(MorphResult, BlockTrace), AmpError> {
    run(image, word, config, true).map(|(r, t)| (r, t.expect("traced run")))
}
