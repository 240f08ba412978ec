use std::path::PathBuf;

use morphoforge::amp::{analyze_word, naive_scan_baseline, ScanMode, Status};
use morphoforge::lexicon::{compile_lexicon, synth, CompileOptions, LexiconEntry};
use serde::Serialize;

use super::compile::parse_scheme;
use super::{load_alphabet, load_lexicon};
use crate::config::ConfigArgs;
use crate::error::{CliError, Result};
use crate::io::{csv_bytes, emit, json, read_text, write_atomic};
use crate::{svg, Emit, OutArgs};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Lexicon TSV to benchmark; repeatable
    #[arg(long = "lexicon", value_name = "FILE")]
    pub lexicons: Vec<PathBuf>,
    /// Sizes of generated lexicons, e.g. 100,1000,10000
    #[arg(long, value_delimiter = ',', value_name = "N")]
    pub synthetic: Vec<usize>,
    /// Seed for generated lexicons and probes
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Probe words, one per line
    #[arg(long, value_name = "FILE")]
    pub probes: Option<PathBuf>,
    /// Number of random probe words when no probe file is given
    #[arg(long, default_value_t = 200)]
    pub probe_count: usize,
    /// Alphabet file; Ukrainian by default
    #[arg(long, value_name = "FILE")]
    pub alphabet: Option<PathBuf>,
    /// Decoder groups used when compiling each lexicon
    #[arg(long)]
    pub scheme: Option<String>,
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, value_enum, default_value_t = Emit::Csv)]
    pub emit: Emit,
    /// Also write one row per lexicon and probe
    #[arg(long, value_name = "FILE")]
    pub per_probe: Option<PathBuf>,
    /// Also write the growth plot as SVG
    #[arg(long, value_name = "FILE")]
    pub plot: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Row {
    pub lexicon_size: usize,
    /// Lower median over the probes.
    pub amp_cycles: u64,
    /// Lower median over the probes.
    pub scan_comparisons: u64,
    pub probes: usize,
    pub found: usize,
    pub amp_cycles_max: u64,
    pub scan_comparisons_max: u64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
struct ProbeRow {
    lexicon_size: usize,
    probe: String,
    found: bool,
    amp_cycles: u64,
    scan_comparisons: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Report<'a> {
    scan_mode: &'static str,
    rows: &'a [Row],
}

fn lower_median(v: &mut [u64]) -> u64 {
    v.sort_unstable();
    v[(v.len() - 1) / 2]
}

pub fn run(a: &Args) -> Result<()> {
    let emit_as = a.emit.require(&[Emit::Csv, Emit::Json, Emit::Svg], "bench")?;
    let cfg = a.config.resolve()?;
    let scheme = parse_scheme(a.scheme.as_deref())?;
    let alphabet = load_alphabet(a.alphabet.as_deref())?;
    let mut lexicons: Vec<(String, Vec<LexiconEntry>)> = Vec::new();
    for p in &a.lexicons {
        lexicons.push((p.display().to_string(), load_lexicon(p)?));
    }
    for &n in &a.synthetic {
        lexicons.push((format!("synthetic {n}"), synth::generate(n, a.seed)));
    }
    if lexicons.is_empty() {
        return Err(CliError::Usage("give --lexicon or --synthetic".into()));
    }
    let probes: Vec<String> = match &a.probes {
        Some(p) => read_text(p)?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect(),
        None => synth::random_words(a.probe_count, a.seed ^ 0x9e37_79b9, 3, 12),
    };
    if probes.is_empty() {
        return Err(CliError::Data("the probe set is empty".into()));
    }
    let opts = CompileOptions {
        scheme,
        sentinels: cfg.sentinels,
        max_word_len: cfg.max_word_len,
        max_ending_len: cfg.max_ending_len,
    };
    let mut rows = Vec::new();
    let mut detail = Vec::new();
    for (name, entries) in &lexicons {
        if entries.is_empty() {
            return Err(CliError::Data(format!("{name}: empty lexicon, nothing to scan")));
        }
        let image = compile_lexicon(entries, &alphabet, &opts)
            .map_err(|e| CliError::Data(format!("{name}: {e}")))?
            .image;
        let (mut cycles, mut comparisons, mut found) = (Vec::new(), Vec::new(), 0);
        for p in &probes {
            let r = analyze_word(&image, p, &cfg).map_err(|e| CliError::Data(format!("probe {p:?}: {e}")))?;
            let (_, c) = naive_scan_baseline(entries, &alphabet, p, ScanMode::FirstMatch);
            let hit = r.status == Status::Found;
            found += usize::from(hit);
            detail.push(ProbeRow {
                lexicon_size: entries.len(),
                probe: p.clone(),
                found: hit,
                amp_cycles: r.cycles,
                scan_comparisons: c,
            });
            cycles.push(r.cycles);
            comparisons.push(c);
        }
        rows.push(Row {
            lexicon_size: entries.len(),
            amp_cycles: lower_median(&mut cycles),
            scan_comparisons: lower_median(&mut comparisons),
            probes: probes.len(),
            found,
            amp_cycles_max: *cycles.last().unwrap_or(&0),
            scan_comparisons_max: *comparisons.last().unwrap_or(&0),
        });
    }

    if let Some(p) = &a.per_probe {
        let bytes = csv_bytes(|w| {
            for d in &detail {
                w.serialize(d)?;
            }
            Ok(())
        })?;
        write_atomic(p, &bytes)?;
    }
    let plot = || {
        let pts = |f: fn(&Row) -> u64| rows.iter().map(|r| (r.lexicon_size as f64, f(r) as f64)).collect();
        svg::series(
            "AMP cycles vs linear scan",
            "lexicon size (entries)",
            &[
                ("median AMP cycles", "#2471a3", pts(|r| r.amp_cycles)),
                ("median scan comparisons", "#c0392b", pts(|r| r.scan_comparisons)),
            ],
        )
    };
    if let Some(p) = &a.plot {
        write_atomic(p, plot().as_bytes())?;
    }
    let bytes = match emit_as {
        Emit::Json => json(&Report {
            scan_mode: "firstMatch",
            rows: &rows,
        })?,
        Emit::Svg => plot().into_bytes(),
        Emit::Csv => csv_bytes(|w| {
            for r in &rows {
                w.serialize(r)?;
            }
            Ok(())
        })?,
    };
    emit(a.out.out.as_deref(), &bytes)
}
