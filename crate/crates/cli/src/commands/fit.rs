use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use morphoforge::lexicon::{fit_histogram, stem_length_histogram, FitError};
use morphoforge::GaussianFit64;
use serde::Serialize;

use super::load_lexicon;
use crate::error::{CliError, Result};
use crate::io::{emit, json, read_text, write_atomic};
use crate::{svg, Emit, OutArgs};

#[derive(Debug, clap::Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct Source {
    /// Lexicon TSV whose stem-length histogram is fitted
    #[arg(long, value_name = "FILE")]
    pub lexicon: Option<PathBuf>,
    /// CSV with header length,count
    #[arg(long, value_name = "FILE")]
    pub histogram: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Also write the histogram with the fitted curve as SVG
    #[arg(long, value_name = "FILE")]
    pub plot: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Point {
    x: usize,
    observed: u64,
    fitted: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Report {
    amplitude: f64,
    center: f64,
    width: f64,
    r_squared: f64,
    sse: f64,
    formula: String,
    points: Vec<Point>,
}

fn read_histogram(path: &Path) -> Result<BTreeMap<usize, u64>> {
    let text = read_text(path)?;
    let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut out = BTreeMap::new();
    for (i, rec) in r.deserialize::<(usize, u64)>().enumerate() {
        let (len, count) = rec.map_err(|e| CliError::at(path, format!("row {}: {e}", i + 1)))?;
        if out.insert(len, count).is_some() {
            return Err(CliError::at(path, format!("length {len} listed twice")));
        }
    }
    Ok(out)
}

fn fit_error(path: &Path, e: FitError) -> CliError {
    CliError::at(path, format!("cannot fit: {e}"))
}

pub fn run(a: &Args) -> Result<()> {
    let emit_as = a.emit.require(&[Emit::Json, Emit::Svg], "fit")?;
    let (path, hist) = match (&a.source.lexicon, &a.source.histogram) {
        (Some(p), _) => (p, stem_length_histogram(&load_lexicon(p)?)),
        (None, Some(p)) => (p, read_histogram(p)?),
        (None, None) => return Err(CliError::Usage("give --lexicon or --histogram".into())),
    };
    let fit: GaussianFit64 = fit_histogram(&hist).map_err(|e| fit_error(path, e))?;
    let points: Vec<Point> = hist
        .iter()
        .map(|(&x, &observed)| Point {
            x,
            observed,
            fitted: fit.eval(x as f64),
        })
        .collect();
    let plot = || {
        let bars: Vec<(f64, f64)> = hist.iter().map(|(&x, &y)| (x as f64, y as f64)).collect();
        let curve = |x: f64| fit.eval(x);
        svg::histogram(&bars, Some(&curve), "Stem length distribution")
    };
    if let Some(p) = &a.plot {
        write_atomic(p, plot().as_bytes())?;
    }
    let bytes = match emit_as {
        Emit::Svg => plot().into_bytes(),
        _ => json(&Report {
            amplitude: fit.amplitude,
            center: fit.center,
            width: fit.width,
            r_squared: fit.r_squared,
            sse: points.iter().map(|p| (p.observed as f64 - p.fitted).powi(2)).sum(),
            formula: format!(
                "y = {:.6}·exp(−(x {} {:.6})² / {:.6})",
                fit.amplitude,
                if fit.center < 0.0 { '+' } else { '−' },
                fit.center.abs(),
                fit.width
            ),
            points,
        })?,
    };
    emit(a.out.out.as_deref(), &bytes)
}
