//! Memory sizing of a compiled image, level by level.

use serde::Serialize;

use crate::lexicon::{required_data_width, MemoryImage, CODE_BITS};

/// Storage of one memory block: `cells × width` bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LevelCost {
    /// 1 first-letter decoder, 2 combination decoders, 3 ending memory,
    /// 4 stem memory and its link table, 5 result store.
    pub level: u8,
    pub name: String,
    pub cells: u128,
    pub width_bits: u32,
    pub bits: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MemoryCostBreakdown {
    pub levels: Vec<LevelCost>,
    pub total_bits: u128,
    /// `log2` of the bit count of a single flat table addressed by the whole
    /// word. Reported, never allocated.
    pub ideal_exponent: u32,
}

/// Address bits of a flat table over `max_word_len` byte-wide symbols.
pub fn ideal_exponent(max_word_len: u32) -> u32 {
    8 * max_word_len
}

/// Block-RAM primitives for a table that is `2^missing_addr_bits` times
/// deeper than one primitive and `data_bits` wide.
pub fn bram_count(missing_addr_bits: u32, data_bits: u64) -> u128 {
    (1u128 << missing_addr_bits) * u128::from(data_bits)
}

fn width(count: usize) -> u32 {
    required_data_width(count.max(1) as u64).expect("nonzero count")
}

fn level(level: u8, name: String, cells: u128, width_bits: u32) -> LevelCost {
    LevelCost {
        level,
        name,
        cells,
        width_bits,
        bits: cells * u128::from(width_bits),
    }
}

/// Decoders and the ending memory are full tables over their address
/// space; the stem memory, link table and result store count occupied
/// cells.
pub fn memory_cost(image: &MemoryImage) -> MemoryCostBreakdown {
    let code_bits = CODE_BITS;
    let result_len = image.result_store().len();
    let mut levels = vec![level(
        1,
        "first-letter decoder".into(),
        1u128 << code_bits,
        u32::from(image.segment_bits()),
    )];
    for t in image.tables() {
        levels.push(level(
            2,
            format!("combination decoder C{}–C{}", t.start, t.end),
            1u128 << (code_bits * u32::from(t.positions())),
            t.data_width_bits(),
        ));
    }
    let e_max = u32::from(image.max_ending_len());
    let ending_width = 2
        + width(image.endings().len())
        + width(usize::from(image.max_ending_len()) + 1)
        + image.paradigms().len() as u32
        + width(result_len + 1);
    levels.push(level(3, "ending memory".into(), 1u128 << (code_bits * e_max), ending_width));
    let links = image.link_count();
    let stem_width = code_bits * u32::from(image.max_word_len())
        + width(image.paradigms().len())
        + width(links + 1);
    levels.push(level(4, "stem memory".into(), image.stem_cell_count() as u128, stem_width));
    levels.push(level(
        4,
        "link table".into(),
        links as u128,
        width(image.endings().len()) + width(result_len + 1),
    ));
    let max_word = image.result_store().iter().copied().max().unwrap_or(0);
    levels.push(level(
        5,
        "result store".into(),
        result_len as u128,
        width(max_word as usize + 1),
    ));
    MemoryCostBreakdown {
        total_bits: levels.iter().map(|l| l.bits).sum(),
        levels,
        ideal_exponent: ideal_exponent(image.max_word_len().into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{compile_lexicon, Alphabet, CompileOptions, LexiconEntry};

    #[test]
    fn formulas() {
        assert_eq!(ideal_exponent(32), 256);
        assert_eq!(bram_count(3, 15), 120);
        assert_eq!(bram_count(0, 1), 1);
        assert_eq!(bram_count(2, 7), 28);
    }

    #[test]
    fn toy_image_tally() {
        let a = Alphabet::ukrainian();
        let opts = CompileOptions {
            max_word_len: 8,
            max_ending_len: 2,
            ..CompileOptions::default()
        };
        let e = [LexiconEntry::new("мам", "а", "мама", ["noun"], "nf").unwrap()];
        let img = compile_lexicon(&e, &a, &opts).unwrap().image;
        let c = memory_cost(&img);
        let bits: Vec<u128> = c.levels.iter().map(|l| l.bits).collect();
        // segments: 35 letters + 2 → 6 bits over 64 cells.
        assert_eq!(bits[0], 64 * 6);
        // Scheme clipped to 2–4, 5–7, 8–8; each table has one tuple.
        assert_eq!(&bits[1..4], [0, 0, 0]);
        // endings {"", "а"}: 2 + 1 + w(3)=2 + 1 paradigm + w(4)=2 → 8 bits × 2^12.
        assert_eq!(bits[4], 4096 * 8);
        // one stem cell: 6·8 + 0 + w(2)=1.
        assert_eq!(bits[5], 49);
        // one link: 1 + 2.
        assert_eq!(bits[6], 3);
        // three result words, max 0x0D0A → 12 bits.
        assert_eq!(bits[7], 3 * 12);
        assert_eq!(c.total_bits, bits.iter().sum::<u128>());
        assert_eq!(c.ideal_exponent, 64);
    }
}
