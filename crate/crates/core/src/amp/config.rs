use crate::lexicon::{Sentinels, MAX_TABLE_POSITIONS};

use super::AmpError;

/// Cost of each kind of step in the lookup state machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleParams {
    pub per_symbol_in: u64,
    pub per_ending_probe: u64,
    pub per_stem_compare: u64,
    pub per_result_word: u64,
    pub fixed: u64,
}

impl Default for CycleParams {
    fn default() -> Self {
        Self {
            per_symbol_in: 1,
            per_ending_probe: 1,
            per_stem_compare: 2,
            per_result_word: 1,
            fixed: 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmpConfig {
    /// Word blocks working in parallel on one sentence.
    pub block_count: usize,
    pub max_word_len: u8,
    pub max_ending_len: u8,
    pub sentinels: Sentinels,
    pub cycles: CycleParams,
}

impl Default for AmpConfig {
    fn default() -> Self {
        Self {
            block_count: 4,
            max_word_len: 32,
            max_ending_len: 4,
            sentinels: Sentinels::default(),
            cycles: CycleParams::default(),
        }
    }
}

/// Keys accepted by [`AmpConfig::set`].
pub const CONFIG_KEYS: [&str; 10] = [
    "blockCount",
    "maxWordLen",
    "maxEndingLen",
    "wordEnd",
    "resultEnd",
    "perSymbolIn",
    "perEndingProbe",
    "perStemCompare",
    "perResultWord",
    "fixed",
];

/// Parses decimal or `0x`-prefixed hexadecimal.
pub fn parse_number(v: &str) -> Option<u64> {
    let v = v.trim();
    match v.strip_prefix("0x").or_else(|| v.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).ok(),
        None => v.parse().ok(),
    }
}

impl AmpConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), AmpError> {
        let bad = || AmpError::Config(format!("{key}: cannot use value {value:?}"));
        let n = parse_number(value).ok_or_else(bad)?;
        let small = |max: u64| if n <= max { Ok(n) } else { Err(bad()) };
        match key {
            "blockCount" => self.block_count = small(u32::MAX.into())? as usize,
            "maxWordLen" => self.max_word_len = small(255)? as u8,
            "maxEndingLen" => self.max_ending_len = small(255)? as u8,
            "wordEnd" => self.sentinels.word_end = small(u32::MAX.into())? as u32,
            "resultEnd" => self.sentinels.result_end = small(u32::MAX.into())? as u32,
            "perSymbolIn" => self.cycles.per_symbol_in = n,
            "perEndingProbe" => self.cycles.per_ending_probe = n,
            "perStemCompare" => self.cycles.per_stem_compare = n,
            "perResultWord" => self.cycles.per_result_word = n,
            "fixed" => self.cycles.fixed = n,
            _ => return Err(AmpError::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), AmpError> {
        if self.block_count == 0 {
            return Err(AmpError::Config("blockCount must be at least 1".into()));
        }
        if !(1..=32).contains(&self.max_word_len) {
            return Err(AmpError::Config("maxWordLen must be in 1..=32".into()));
        }
        if self.max_ending_len == 0
            || self.max_ending_len > self.max_word_len.min(MAX_TABLE_POSITIONS)
        {
            return Err(AmpError::Config(format!(
                "maxEndingLen must be in 1..=min(maxWordLen, {MAX_TABLE_POSITIONS})"
            )));
        }
        Ok(())
    }

    /// Parses `key=value` lines on top of the defaults. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, AmpError> {
        let mut cfg = Self::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| AmpError::Config(format!("line {}: expected key=value", n + 1)))?;
            cfg.set(k.trim(), v)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}
