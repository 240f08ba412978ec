use std::path::PathBuf;

use morphoforge::textmodel::{index_structure, segment, split_streams, RawDocument};
use serde::Serialize;

use super::{doc_id, load_acc};
use crate::error::{CliError, Result};
use crate::io::{csv_bytes, emit, json, read_bytes};
use crate::{Emit, OutArgs};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// UTF-8 text file
    #[arg(long, value_name = "FILE")]
    pub input: PathBuf,
    /// Acc dictionary (surface<TAB>tags[<TAB>exact])
    #[arg(long, value_name = "FILE")]
    pub acc: Option<PathBuf>,
    /// Document ordinal used as the first index component
    #[arg(long, default_value_t = 1)]
    pub doc_number: u32,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Report<'a> {
    #[serde(flatten)]
    structure: &'a morphoforge::textmodel::GraphematicStructure,
    /// Per sentence, positions of word forms answered by the acc dictionary.
    acc_positions: Vec<Vec<usize>>,
}

pub fn run(a: &Args) -> Result<()> {
    let emit_as = a.emit.require(&[Emit::Json, Emit::Csv], "tokenize")?;
    let acc = load_acc(a.acc.as_deref())?;
    let doc = RawDocument::from_utf8(doc_id(&a.input), &read_bytes(&a.input)?)
        .map_err(|e| CliError::at(&a.input, e))?;
    let gs = index_structure(&segment(&doc, &acc).with_doc_number(a.doc_number));
    debug_assert_eq!(gs.join(), doc.content());
    let bytes = match emit_as {
        Emit::Json => json(&Report {
            acc_positions: gs
                .sentences()
                .iter()
                .map(|s| split_streams(s, &acc).acc.iter().map(|(w, _)| w.position).collect())
                .collect(),
            structure: &gs,
        })?,
        _ => csv_bytes(|w| {
            w.write_record(["index", "surface", "tokenClass", "start", "end", "complete"])?;
            for s in gs.sentences() {
                for wf in &s.wordforms {
                    let class = serde_json::to_value(wf.token_class)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default();
                    let idx = wf.dotted_index.as_ref().map(ToString::to_string).unwrap_or_default();
                    w.write_record([
                        idx,
                        wf.surface.clone(),
                        class,
                        wf.char_span.0.to_string(),
                        wf.char_span.1.to_string(),
                        s.complete.to_string(),
                    ])?;
                }
            }
            Ok(())
        })?,
    };
    emit(a.out.out.as_deref(), &bytes)
}
