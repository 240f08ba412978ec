use super::LexiconError;

/// Positions handled by one OR-collected decoder chunk.
pub const OR_CHUNK: u8 = 3;
/// Widest fully decoded table, in symbol positions (72 address bits).
pub const MAX_TABLE_POSITIONS: u8 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupMode {
    /// The group's tuple gets its own address field.
    Independent,
    /// The group is split into 3-symbol chunks whose indices are OR-ed onto
    /// one shared address field. Collisions are resolved by the final stem
    /// comparison.
    OrCollected,
}

/// Inclusive range of 1-based symbol positions (position 1 is the first
/// letter, which has its own decoder).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CombinationGroup {
    pub start: u8,
    pub end: u8,
    pub mode: GroupMode,
}

impl CombinationGroup {
    pub fn independent(start: u8, end: u8) -> Self {
        Self {
            start,
            end,
            mode: GroupMode::Independent,
        }
    }

    pub fn or_collected(start: u8, end: u8) -> Self {
        Self {
            start,
            end,
            mode: GroupMode::OrCollected,
        }
    }

    pub fn width(&self) -> u8 {
        self.end - self.start + 1
    }
}

/// One decoder table: a contiguous run of positions belonging to a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chunk {
    pub group: usize,
    pub start: u8,
    pub end: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinationScheme {
    groups: Vec<CombinationGroup>,
}

impl Default for CombinationScheme {
    /// Independent groups 2–4, 5–7, 8–10 and one OR-collected group 11–32.
    fn default() -> Self {
        Self {
            groups: vec![
                CombinationGroup::independent(2, 4),
                CombinationGroup::independent(5, 7),
                CombinationGroup::independent(8, 10),
                CombinationGroup::or_collected(11, 32),
            ],
        }
    }
}

impl CombinationScheme {
    pub fn new(groups: Vec<CombinationGroup>) -> Result<Self, LexiconError> {
        let mut prev_end = 1;
        for g in &groups {
            if g.start < 2 {
                return Err(LexiconError::Scheme(format!(
                    "group {}–{} starts before position 2",
                    g.start, g.end
                )));
            }
            if g.end < g.start {
                return Err(LexiconError::Scheme(format!(
                    "group {}–{} is empty",
                    g.start, g.end
                )));
            }
            if g.mode == GroupMode::Independent && g.width() > MAX_TABLE_POSITIONS {
                return Err(LexiconError::Scheme(format!(
                    "independent group {}–{} is wider than {MAX_TABLE_POSITIONS} positions",
                    g.start, g.end
                )));
            }
            if g.start <= prev_end {
                return Err(LexiconError::Scheme(format!(
                    "group {}–{} overlaps or precedes the previous group",
                    g.start, g.end
                )));
            }
            prev_end = g.end;
        }
        Ok(Self { groups })
    }

    /// Scheme truncated to the given word length; groups past it are dropped.
    pub fn clipped(&self, max_word_len: u8) -> Self {
        Self {
            groups: self
                .groups
                .iter()
                .filter(|g| g.start <= max_word_len)
                .map(|g| CombinationGroup {
                    end: g.end.min(max_word_len),
                    ..*g
                })
                .collect(),
        }
    }

    pub fn groups(&self) -> &[CombinationGroup] {
        &self.groups
    }

    pub fn max_position(&self) -> u8 {
        self.groups.last().map_or(1, |g| g.end)
    }

    /// Decoder tables in address order.
    pub fn chunks(&self) -> Vec<Chunk> {
        let mut out = Vec::new();
        for (gi, g) in self.groups.iter().enumerate() {
            match g.mode {
                GroupMode::Independent => out.push(Chunk {
                    group: gi,
                    start: g.start,
                    end: g.end,
                }),
                GroupMode::OrCollected => {
                    let mut s = g.start;
                    loop {
                        let e = s.saturating_add(OR_CHUNK - 1).min(g.end);
                        out.push(Chunk {
                            group: gi,
                            start: s,
                            end: e,
                        });
                        if e == g.end {
                            break;
                        }
                        s = e + 1;
                    }
                }
            }
        }
        out
    }

    /// Last position `p` such that positions `2..=p` are all covered by
    /// independent groups (1 if position 2 is not).
    pub fn independent_coverage(&self) -> u8 {
        let mut p = 1;
        for g in &self.groups {
            if g.mode == GroupMode::Independent && g.start == p + 1 {
                p = g.end;
            } else {
                break;
            }
        }
        p
    }

    /// Parses `start-end:independent|or` items separated by commas, e.g.
    /// `2-4:independent,5-7:independent,11-32:or`.
    pub fn parse(s: &str) -> Result<Self, LexiconError> {
        let mut groups = Vec::new();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let bad = || LexiconError::Scheme(format!("cannot parse group {item:?}"));
            let (range, mode) = item.split_once(':').unwrap_or((item, "independent"));
            let (a, b) = range.split_once('-').unwrap_or((range, range));
            let start: u8 = a.trim().parse().map_err(|_| bad())?;
            let end: u8 = b.trim().parse().map_err(|_| bad())?;
            let mode = match mode.trim() {
                "independent" | "ind" => GroupMode::Independent,
                "or" | "orCollected" => GroupMode::OrCollected,
                _ => return Err(bad()),
            };
            groups.push(CombinationGroup { start, end, mode });
        }
        Self::new(groups)
    }
}

impl std::fmt::Display for CombinationScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, g) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let mode = match g.mode {
                GroupMode::Independent => "independent",
                GroupMode::OrCollected => "or",
            };
            write!(f, "{}-{}:{}", g.start, g.end, mode)?;
        }
        Ok(())
    }
}

/// Codes at 1-based positions `start..=end`, zero-padded past the end.
pub(crate) fn tuple_at(codes: &[u8], start: u8, end: u8) -> Vec<u8> {
    (start..=end)
        .map(|p| codes.get(usize::from(p) - 1).copied().unwrap_or(0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_layout() {
        let s = CombinationScheme::default();
        assert_eq!(s.independent_coverage(), 10);
        let chunks = s.chunks();
        assert_eq!(chunks.len(), 3 + 8);
        assert_eq!(chunks.last().unwrap().start, 32);
        assert_eq!(CombinationScheme::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn rejects_overlap_and_position_one() {
        assert!(CombinationScheme::parse("1-3").is_err());
        assert!(CombinationScheme::parse("2-4,4-6").is_err());
        assert!(CombinationScheme::parse("5-7,2-4").is_err());
        assert!(CombinationScheme::parse("3-2").is_err());
    }

    #[test]
    fn padding() {
        assert_eq!(tuple_at(&[1], 2, 4), vec![0, 0, 0]);
        assert_eq!(tuple_at(&[1, 2, 3], 2, 4), vec![2, 3, 0]);
    }

    #[test]
    fn clipping() {
        let s = CombinationScheme::default().clipped(8);
        assert_eq!(s.max_position(), 8);
        assert_eq!(s.groups().len(), 3);
    }
}
