use std::path::PathBuf;

use morphoforge::costmodel::memory_cost;

use super::load_image;
use crate::error::Result;
use crate::io::{csv_bytes, emit, json};
use crate::{Emit, OutArgs};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Memory image from lexicon-compile
    #[arg(long, value_name = "FILE")]
    pub image: PathBuf,
    #[arg(long, value_enum, default_value_t = Emit::Csv)]
    pub emit: Emit,
    #[command(flatten)]
    pub out: OutArgs,
}

pub fn run(a: &Args) -> Result<()> {
    let emit_as = a.emit.require(&[Emit::Csv, Emit::Json], "memcost")?;
    let cost = memory_cost(&load_image(&a.image)?);
    let bytes = match emit_as {
        Emit::Json => json(&cost)?,
        _ => csv_bytes(|w| {
            w.write_record(["level", "name", "cells", "widthBits", "bits"])?;
            for l in &cost.levels {
                w.write_record([
                    l.level.to_string(),
                    l.name.clone(),
                    l.cells.to_string(),
                    l.width_bits.to_string(),
                    l.bits.to_string(),
                ])?;
            }
            w.write_record(["", "total", "", "", &cost.total_bits.to_string()])?;
            Ok(())
        })?,
    };
    emit(a.out.out.as_deref(), &bytes)
}
