use std::fmt::Write as _;
use std::path::PathBuf;

use morphoforge::amp::{analyze_document, analyze_word_traced, AmpConfig, SentenceAnalysis, Status};
use morphoforge::lexicon::MemoryImage;
use morphoforge::textmodel::{index_structure, segment, AccDictionary, GraphematicStructure, RawDocument};
use serde::Serialize;

use super::{doc_id, load_acc, load_image};
use crate::config::ConfigArgs;
use crate::error::{CliError, Result};
use crate::io::{csv_bytes, emit, json, read_bytes, write_atomic};
use crate::{Emit, OutArgs};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Memory image from lexicon-compile
    #[arg(long, value_name = "FILE")]
    pub image: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub acc: Option<PathBuf>,
    /// UTF-8 text file
    #[arg(long, value_name = "FILE")]
    pub input: PathBuf,
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Emit the state-machine trace, one step per line, instead of the report
    #[arg(long)]
    pub trace: bool,
    /// Write the trace to this file in addition to the report
    #[arg(long, value_name = "FILE")]
    pub trace_out: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Totals {
    words: usize,
    found: usize,
    not_found: usize,
    acc_provided: usize,
    cycles: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Report<'a> {
    doc_id: &'a str,
    block_count: usize,
    sentences: &'a [SentenceAnalysis],
    totals: Totals,
}

fn totals(analyses: &[SentenceAnalysis]) -> Totals {
    let words = analyses.iter().flat_map(|s| &s.per_word);
    let count = |st: Status| words.clone().filter(|p| p.result.status == st).count();
    Totals {
        words: words.clone().count(),
        found: count(Status::Found),
        not_found: count(Status::NotFound),
        acc_provided: count(Status::AccProvided),
        cycles: analyses.iter().map(|s| s.sentence_cycles).sum(),
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Found => "found",
        Status::NotFound => "notFound",
        Status::AccProvided => "accProvided",
    }
}

fn trace_text(image: &MemoryImage, gs: &GraphematicStructure, acc: &AccDictionary, cfg: &AmpConfig) -> Result<String> {
    let mut out = String::new();
    for s in gs.sentences() {
        for w in s.wordforms.iter().filter(|w| w.token_class.is_word_like()) {
            let idx = w.dotted_index.as_ref().map(ToString::to_string).unwrap_or_default();
            if acc.contains(&w.surface) {
                let _ = writeln!(out, "# {idx} {} acc", w.surface);
                continue;
            }
            let (r, t) = analyze_word_traced(image, &w.surface, cfg)
                .map_err(|e| CliError::Data(format!("word {idx} {:?}: {e}", w.surface)))?;
            let _ = writeln!(out, "# {idx} {} cycles {}", w.surface, r.cycles);
            out.push_str(&t.to_string());
        }
    }
    Ok(out)
}

pub fn run(a: &Args) -> Result<()> {
    let emit_as = a.emit.require(&[Emit::Json, Emit::Csv], "analyze")?;
    let cfg = a.config.resolve()?;
    let image = load_image(&a.image)?;
    let acc = load_acc(a.acc.as_deref())?;
    let doc = RawDocument::from_utf8(doc_id(&a.input), &read_bytes(&a.input)?)
        .map_err(|e| CliError::at(&a.input, e))?;
    let gs = index_structure(&segment(&doc, &acc));
    let analyses = analyze_document(&image, &gs, &acc, &cfg).map_err(|e| CliError::at(&a.input, e))?;

    if a.trace || a.trace_out.is_some() {
        let trace = trace_text(&image, &gs, &acc, &cfg)?;
        if let Some(p) = &a.trace_out {
            write_atomic(p, trace.as_bytes())?;
        }
        if a.trace {
            return emit(a.out.out.as_deref(), trace.as_bytes());
        }
    }

    let bytes = match emit_as {
        Emit::Json => json(&Report {
            doc_id: gs.doc_id(),
            block_count: cfg.block_count,
            sentences: &analyses,
            totals: totals(&analyses),
        })?,
        _ => csv_bytes(|w| {
            w.write_record([
                "sentence", "position", "surface", "status", "cycles", "lemma", "tags", "stemLen", "endingLen",
            ])?;
            for s in &analyses {
                for p in &s.per_word {
                    let r = &p.result;
                    let head = [
                        s.sentence_index.to_string(),
                        p.position.to_string(),
                        r.surface.clone(),
                        status_name(r.status).to_string(),
                        r.cycles.to_string(),
                    ];
                    if r.readings.is_empty() {
                        w.write_record(head.iter().cloned().chain(["".into(), "".into(), "".into(), "".into()]))?;
                    }
                    for rd in &r.readings {
                        w.write_record(head.iter().cloned().chain([
                            rd.lemma.clone(),
                            rd.tags.join(","),
                            rd.stem_len.to_string(),
                            rd.ending_len.to_string(),
                        ]))?;
                    }
                }
            }
            Ok(())
        })?,
    };
    emit(a.out.out.as_deref(), &bytes)
}
