use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use morphoforge::costmodel::{pareto_front, select_realization, Selection};
use morphoforge::{RealizationPoint64, WeightVector64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::io::{csv_bytes, emit, json, read_text, write_atomic};
use crate::{svg, Emit, OutArgs};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// CSV with header id,T,Q and optional tUnit,qUnit columns
    #[arg(long, value_name = "FILE")]
    pub points: PathBuf,
    /// CSV with header id,c,b; uniform weights when absent
    #[arg(long, value_name = "FILE")]
    pub weights: Option<PathBuf>,
    /// Reference time T0; the smallest T when absent
    #[arg(long)]
    pub t0: Option<f64>,
    /// Reference hardware cost Q0; the smallest Q when absent
    #[arg(long)]
    pub q0: Option<f64>,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Also write the front as CSV
    #[arg(long, value_name = "FILE")]
    pub front: Option<PathBuf>,
    /// Also write the scatter plot as SVG
    #[arg(long, value_name = "FILE")]
    pub plot: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Deserialize)]
struct PointRow {
    id: u32,
    #[serde(rename = "T")]
    t: f64,
    #[serde(rename = "Q")]
    q: f64,
    #[serde(rename = "tUnit", default)]
    t_unit: Option<String>,
    #[serde(rename = "qUnit", default)]
    q_unit: Option<String>,
}

#[derive(Deserialize)]
struct WeightRow {
    id: u32,
    c: f64,
    b: f64,
}

#[derive(Serialize)]
struct FrontPoint {
    id: u32,
    #[serde(rename = "T")]
    t: f64,
    #[serde(rename = "Q")]
    q: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Reference {
    t0: f64,
    q0: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Units {
    time: String,
    hardware: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Report {
    reference: Reference,
    units: Units,
    front: Vec<FrontPoint>,
    selection: Selection<f64>,
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes())
}

fn read_points(path: &Path) -> Result<Vec<RealizationPoint64>> {
    let text = read_text(path)?;
    let mut out: Vec<RealizationPoint64> = Vec::new();
    for (i, row) in reader(&text).deserialize::<PointRow>().enumerate() {
        let at = |e: String| CliError::at(path, format!("row {}: {e}", i + 1));
        let r = row.map_err(|e| at(e.to_string()))?;
        if out.iter().any(|p| p.id == r.id) {
            return Err(at(format!("duplicate id {}", r.id)));
        }
        let p = RealizationPoint64::with_units(
            r.id,
            r.t,
            r.q,
            r.t_unit.filter(|u| !u.is_empty()).unwrap_or_else(|| "cycles".into()),
            r.q_unit.filter(|u| !u.is_empty()).unwrap_or_else(|| "bits".into()),
        )
        .map_err(|e| at(e.to_string()))?;
        out.push(p);
    }
    if out.is_empty() {
        return Err(CliError::at(path, "no points"));
    }
    Ok(out)
}

fn read_weights(path: &Path, points: &[RealizationPoint64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let text = read_text(path)?;
    let mut by_id = BTreeMap::new();
    for (i, row) in reader(&text).deserialize::<WeightRow>().enumerate() {
        let r = row.map_err(|e| CliError::at(path, format!("row {}: {e}", i + 1)))?;
        if by_id.insert(r.id, (r.c, r.b)).is_some() {
            return Err(CliError::at(path, format!("duplicate id {}", r.id)));
        }
    }
    if by_id.len() != points.len() {
        return Err(CliError::at(
            path,
            format!("{} weight rows for {} points", by_id.len(), points.len()),
        ));
    }
    points
        .iter()
        .map(|p| {
            by_id
                .get(&p.id)
                .copied()
                .ok_or_else(|| CliError::at(path, format!("no weights for point {}", p.id)))
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().unzip())
}

pub fn run(a: &Args) -> Result<()> {
    let emit_as = a.emit.require(&[Emit::Json, Emit::Csv, Emit::Svg], "pareto")?;
    let points = read_points(&a.points)?;
    let t0 = a.t0.unwrap_or_else(|| points.iter().map(|p| p.time).fold(f64::INFINITY, f64::min));
    let q0 = a.q0.unwrap_or_else(|| points.iter().map(|p| p.hardware).fold(f64::INFINITY, f64::min));
    let weights = match &a.weights {
        Some(p) => {
            let (c, b) = read_weights(p, &points)?;
            WeightVector64 { c, b, t0, q0 }
        }
        None => WeightVector64::uniform(points.len(), t0, q0),
    };
    let source = a.weights.as_deref().unwrap_or(&a.points);
    let selection = select_realization(&points, &weights).map_err(|e| CliError::at(source, e))?;
    for w in &selection.warnings {
        eprintln!("warning: {w}");
    }
    let front = pareto_front(&points);
    let front_csv = || {
        csv_bytes(|w| {
            for p in &front {
                w.serialize(FrontPoint {
                    id: p.id,
                    t: p.time,
                    q: p.hardware,
                })?;
            }
            Ok(())
        })
    };
    let selected = selection.id;
    let units = (points[0].time_unit.clone(), points[0].hardware_unit.clone());
    let plot = || {
        let all: Vec<(u32, f64, f64)> = points.iter().map(|p| (p.id, p.time, p.hardware)).collect();
        let ids: Vec<u32> = front.iter().map(|p| p.id).collect();
        svg::pareto(&all, &ids, Some(selected), (&units.0, &units.1))
    };
    if let Some(p) = &a.front {
        write_atomic(p, &front_csv()?)?;
    }
    if let Some(p) = &a.plot {
        write_atomic(p, plot().as_bytes())?;
    }
    let bytes = match emit_as {
        Emit::Csv => front_csv()?,
        Emit::Svg => plot().into_bytes(),
        Emit::Json => json(&Report {
            reference: Reference { t0, q0 },
            units: Units {
                time: units.0.clone(),
                hardware: units.1.clone(),
            },
            front: front
                .iter()
                .map(|p| FrontPoint {
                    id: p.id,
                    t: p.time,
                    q: p.hardware,
                })
                .collect(),
            selection,
        })?,
    };
    emit(a.out.out.as_deref(), &bytes)
}
