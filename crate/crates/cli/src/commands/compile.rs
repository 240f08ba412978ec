use std::path::PathBuf;

use morphoforge::lexicon::{compile_lexicon, serialize_image, CombinationScheme, CompileOptions, GroupMode};
use serde::Serialize;

use super::{load_alphabet, load_lexicon};
use crate::config::ConfigArgs;
use crate::error::{CliError, Result};
use crate::io::{emit, json, write_atomic};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Lexicon TSV: surface, stem, ending, lemma, tags, paradigm
    #[arg(long, value_name = "FILE")]
    pub lexicon: PathBuf,
    /// Alphabet file (letter<TAB>code<TAB>foldTarget); Ukrainian by default
    #[arg(long, value_name = "FILE")]
    pub alphabet: Option<PathBuf>,
    /// Decoder groups, e.g. 2-4:independent,5-7:independent,8-10:independent,11-32:or
    #[arg(long)]
    pub scheme: Option<String>,
    /// Image file to write
    #[arg(short, long, value_name = "FILE")]
    pub out: PathBuf,
    /// Compile report (JSON); standard output when absent
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
    #[command(flatten)]
    pub config: ConfigArgs,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableSummary {
    pub start: u8,
    pub end: u8,
    pub mode: &'static str,
    pub count: usize,
    pub data_width_bits: u32,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Summary {
    entries: usize,
    duplicates: usize,
    endings: usize,
    paradigms: usize,
    lemmas: usize,
    tagsets: usize,
    stem_cells: usize,
    links: usize,
    result_words: usize,
    segment_bits: u8,
    max_word_len: u8,
    max_ending_len: u8,
    scheme: String,
    tables: Vec<TableSummary>,
    image_bytes: usize,
    warnings: Vec<String>,
}

pub(crate) fn mode_name(m: GroupMode) -> &'static str {
    match m {
        GroupMode::Independent => "independent",
        GroupMode::OrCollected => "or",
    }
}

pub(crate) fn parse_scheme(s: Option<&str>) -> Result<CombinationScheme> {
    s.map_or(Ok(CombinationScheme::default()), |s| {
        CombinationScheme::parse(s).map_err(|e| CliError::Usage(e.to_string()))
    })
}

pub fn run(a: &Args) -> Result<()> {
    let cfg = a.config.resolve()?;
    let scheme = parse_scheme(a.scheme.as_deref())?;
    let alphabet = load_alphabet(a.alphabet.as_deref())?;
    let entries = load_lexicon(&a.lexicon)?;
    let opts = CompileOptions {
        scheme,
        sentinels: cfg.sentinels,
        max_word_len: cfg.max_word_len,
        max_ending_len: cfg.max_ending_len,
    };
    let compiled = compile_lexicon(&entries, &alphabet, &opts).map_err(|e| CliError::at(&a.lexicon, e))?;
    let image = &compiled.image;
    let bytes = serialize_image(image);
    write_atomic(&a.out, &bytes)?;
    for w in &compiled.report.warnings {
        eprintln!("warning: {w}");
    }
    let summary = Summary {
        entries: entries.len(),
        duplicates: compiled.report.duplicates,
        endings: image.endings().len(),
        paradigms: image.paradigms().len(),
        lemmas: image.lemma_count(),
        tagsets: image.tagset_count(),
        stem_cells: image.stem_cell_count(),
        links: image.link_count(),
        result_words: image.result_store().len(),
        segment_bits: image.segment_bits(),
        max_word_len: image.max_word_len(),
        max_ending_len: image.max_ending_len(),
        scheme: image.scheme().to_string(),
        tables: image
            .tables()
            .iter()
            .map(|t| TableSummary {
                start: t.start,
                end: t.end,
                mode: mode_name(t.mode),
                count: t.count(),
                data_width_bits: t.data_width_bits(),
            })
            .collect(),
        image_bytes: bytes.len(),
        warnings: compiled.report.warnings.clone(),
    };
    emit(a.report.as_deref(), &json(&summary)?)
}
