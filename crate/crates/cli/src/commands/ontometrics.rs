use std::path::PathBuf;

use morphoforge::ontometrics::{concept_union, vertex_complexity, weighted_complexity, OntoError, WeightedComplexity};
use morphoforge::Ontograph64;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::io::{csv_bytes, emit, json, read_text, write_atomic};
use crate::{Emit, OutArgs};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Ontograph files (V/E records)
    #[arg(long, num_args = 1.., required = true, value_name = "FILE")]
    pub files: Vec<PathBuf>,
    /// Report the concept union of all files
    #[arg(long)]
    pub union: bool,
    /// Report per-file metrics (the default when --union is not given)
    #[arg(long)]
    pub metrics: bool,
    /// Also write the union graph in ontograph format
    #[arg(long, value_name = "FILE")]
    pub union_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GraphMetrics {
    name: String,
    vertices: usize,
    edges: usize,
    roots: usize,
    vertex_complexity: u128,
    /// Absent when the graph carries no weights at all.
    weighted: Option<WeightedComplexity<f64>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Report {
    graphs: Vec<GraphMetrics>,
    union: Option<GraphMetrics>,
}

fn metrics(name: String, g: &Ontograph64) -> std::result::Result<GraphMetrics, OntoError> {
    let unweighted = g.vertices().all(|v| v.alpha.is_none()) && g.edges().all(|(_, b)| b.is_none());
    Ok(GraphMetrics {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        roots: g.roots().count(),
        vertex_complexity: vertex_complexity(g)?,
        weighted: if unweighted { None } else { Some(weighted_complexity(g)?) },
        name,
    })
}

pub fn run(a: &Args) -> Result<()> {
    let emit_as = a.emit.require(&[Emit::Json, Emit::Csv], "ontometrics")?;
    let mut graphs = Vec::new();
    for p in &a.files {
        let g = Ontograph64::parse(&read_text(p)?).map_err(|e| CliError::at(p, e))?;
        graphs.push((p, g));
    }
    let per_file = a.metrics || !a.union;
    let mut report = Report {
        graphs: Vec::new(),
        union: None,
    };
    if per_file {
        for (p, g) in &graphs {
            report
                .graphs
                .push(metrics(p.display().to_string(), g).map_err(|e| CliError::at(p, e))?);
        }
    }
    if a.union || a.union_out.is_some() {
        let all: Vec<Ontograph64> = graphs.iter().map(|(_, g)| g.clone()).collect();
        let u = concept_union(&all).map_err(|e| CliError::Data(format!("union: {e}")))?;
        if let Some(p) = &a.union_out {
            write_atomic(p, u.to_file_string().as_bytes())?;
        }
        if a.union {
            report.union = Some(metrics("union".into(), &u).map_err(|e| CliError::Data(format!("union: {e}")))?);
        }
    }
    let bytes = match emit_as {
        Emit::Json => json(&report)?,
        _ => csv_bytes(|w| {
            w.write_record(["name", "vertices", "edges", "roots", "vertexComplexity", "wWeighted", "omega"])?;
            for m in report.graphs.iter().chain(&report.union) {
                let (ww, om) = m
                    .weighted
                    .map_or((String::new(), String::new()), |x| (x.w_weighted.to_string(), x.omega.to_string()));
                w.write_record([
                    m.name.clone(),
                    m.vertices.to_string(),
                    m.edges.to_string(),
                    m.roots.to_string(),
                    m.vertex_complexity.to_string(),
                    ww,
                    om,
                ])?;
            }
            Ok(())
        })?,
    };
    emit(a.out.out.as_deref(), &bytes)
}
