use std::path::PathBuf;

use morphoforge::lexicon::{
    combination_counts, mean_stem_length, range_counts, stem_length_histogram,
};
use serde::Serialize;

use super::compile::{mode_name, parse_scheme, TableSummary};
use super::{load_alphabet, load_lexicon};
use crate::error::{CliError, Result};
use crate::io::{csv_bytes, emit, json};
use crate::{Emit, OutArgs};

/// The range layout of a published combination statistics table.
pub const TABLE_RANGES: &str = "2,3,4,5,6,7,8,9,10,11,32,\
    1-9,1-10,2-3,2-4,2-5,2-6,2-7,2-8,2-9,2-10,2-32,\
    3-32,4-5,4-32,5-6,5-7,5-8,5-9,5-10,5-11,5-16,5-32,\
    6-7,6-8,6-9,7-10,7-11,7-32,8-9,8-32,9-11,10-11,8-10,\
    11-12,11-13,11-16,11-32,13-14,14-16,14-32,15-16,17-18,17-19,17-32,\
    19-20,20-22,21-22,23-24,23-25,25-26,26-28,27-28,29-30,29-31,31-32";

const MATRIX_COLUMNS: usize = 11;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_name = "FILE")]
    pub lexicon: PathBuf,
    /// Alphabet file; Ukrainian by default
    #[arg(long, value_name = "FILE")]
    pub alphabet: Option<PathBuf>,
    /// Decoder groups for the per-table counts
    #[arg(long)]
    pub scheme: Option<String>,
    /// Position ranges to count, e.g. 2,2-4,5-32
    #[arg(long, default_value = TABLE_RANGES)]
    pub ranges: String,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Bin {
    length: usize,
    count: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Range {
    label: String,
    start: u8,
    end: u8,
    count: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Report {
    entries: usize,
    stemmed_entries: u64,
    mean_stem_length: Option<f64>,
    histogram: Vec<Bin>,
    tables: Vec<TableSummary>,
    ranges: Vec<Range>,
}

pub(crate) fn parse_ranges(s: &str) -> Result<Vec<(u8, u8)>> {
    s.split(',')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            let bad = || CliError::Usage(format!("bad range {r:?}"));
            let (a, b) = r.split_once('-').unwrap_or((r, r));
            let a: u8 = a.trim().trim_start_matches('C').parse().map_err(|_| bad())?;
            let b: u8 = b.trim().trim_start_matches('C').parse().map_err(|_| bad())?;
            if a == 0 || b < a {
                return Err(bad());
            }
            Ok((a, b))
        })
        .collect()
}

fn label(a: u8, b: u8) -> String {
    if a == b { format!("C{a}") } else { format!("C{a}-C{b}") }
}

pub fn run(a: &Args) -> Result<()> {
    let emit_as = a.emit.require(&[Emit::Json, Emit::Csv], "stats")?;
    let ranges = parse_ranges(&a.ranges)?;
    let scheme = parse_scheme(a.scheme.as_deref())?;
    let alphabet = load_alphabet(a.alphabet.as_deref())?;
    let entries = load_lexicon(&a.lexicon)?;
    let at = |e| CliError::at(&a.lexicon, e);
    let hist = stem_length_histogram(&entries);
    let counts = range_counts(&entries, &alphabet, &ranges).map_err(at)?;
    let tables = combination_counts(&entries, &scheme, &alphabet).map_err(at)?;
    let report = Report {
        entries: entries.len(),
        stemmed_entries: hist.values().sum(),
        mean_stem_length: mean_stem_length(&entries),
        histogram: hist.iter().map(|(&length, &count)| Bin { length, count }).collect(),
        tables: tables
            .iter()
            .map(|t| TableSummary {
                start: t.start,
                end: t.end,
                mode: mode_name(t.mode),
                count: t.count(),
                data_width_bits: t.data_width_bits(),
            })
            .collect(),
        ranges: counts
            .iter()
            .map(|c| Range {
                label: label(c.start, c.end),
                start: c.start,
                end: c.end,
                count: c.count,
            })
            .collect(),
    };
    let bytes = match emit_as {
        Emit::Json => json(&report)?,
        _ => csv_bytes(|w| {
            w.write_record([
                format!("stems {}", report.stemmed_entries),
                format!(
                    "mean {}",
                    report.mean_stem_length.map_or("-".into(), |m| format!("{m:.2}"))
                ),
            ])?;
            for row in report.ranges.chunks(MATRIX_COLUMNS) {
                w.write_record(row.iter().map(|r| r.label.clone()))?;
                w.write_record(row.iter().map(|r| r.count.to_string()))?;
            }
            Ok(())
        })?,
    };
    emit(a.out.out.as_deref(), &bytes)
}
