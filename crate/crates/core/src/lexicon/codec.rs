//! Binary layout of a [`MemoryImage`].
//!
//! All integers are little-endian. The file starts with the magic `AMP1` and
//! a `u16` version, followed by seven sections in fixed order, each prefixed
//! by its `u32` byte length: alphabet, scheme, decoders, ending memory, stem
//! memory, result store, sentinels. `docs/image-format.md` lists the fields.

use std::collections::BTreeMap;

use super::image::{EndingCell, MemoryImage, Sentinels, StemAddress, StemCell};
use super::stats::CombinationTable;
use super::{
    Alphabet, CombinationGroup, CombinationScheme, GroupMode, LexiconError, MAX_TABLE_POSITIONS,
};

pub const IMAGE_MAGIC: [u8; 4] = *b"AMP1";
pub const IMAGE_VERSION: u16 = 1;

#[derive(Default)]
struct Writer(Vec<u8>);

impl Writer {
    fn u8(&mut self, v: u8) {
        self.0.push(v);
    }
    fn u16(&mut self, v: u16) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }
    fn u32(&mut self, v: u32) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }
    fn len16(&mut self, n: usize) {
        self.u16(u16::try_from(n).expect("section count fits u16"));
    }
    fn len32(&mut self, n: usize) {
        self.u32(u32::try_from(n).expect("section count fits u32"));
    }
    fn str(&mut self, s: &str) {
        self.len32(s.len());
        self.0.extend_from_slice(s.as_bytes());
    }
    fn section(&mut self, body: Writer) {
        self.len32(body.0.len());
        self.0.extend(body.0);
    }
}

fn mode_byte(m: GroupMode) -> u8 {
    match m {
        GroupMode::Independent => 0,
        GroupMode::OrCollected => 1,
    }
}

pub fn serialize_image(img: &MemoryImage) -> Vec<u8> {
    let mut out = Writer::default();
    out.0.extend_from_slice(&IMAGE_MAGIC);
    out.u16(IMAGE_VERSION);

    let mut w = Writer::default();
    w.len16(img.alphabet.len());
    for &c in img.alphabet.letters() {
        w.u32(c as u32);
        w.u8(img.alphabet.code(c).expect("letter has a code"));
    }
    let folds: Vec<_> = img.alphabet.folds().collect();
    w.len16(folds.len());
    for (c, t) in folds {
        w.u32(c as u32);
        w.u32(t as u32);
    }
    out.section(w);

    let mut w = Writer::default();
    w.u8(img.max_word_len);
    w.u8(img.max_ending_len);
    w.u8(img.segment_bits);
    w.len16(img.scheme.groups().len());
    for g in img.scheme.groups() {
        w.u8(g.start);
        w.u8(g.end);
        w.u8(mode_byte(g.mode));
    }
    out.section(w);

    let mut w = Writer::default();
    w.len16(img.first_letter.len());
    for (&code, &seg) in &img.first_letter {
        w.u8(code);
        w.u16(seg);
    }
    w.len16(img.tables.len());
    for t in &img.tables {
        w.len16(t.group);
        w.u8(t.start);
        w.u8(t.end);
        w.u8(mode_byte(t.mode));
        w.len32(t.index.len());
        for (tuple, &i) in &t.index {
            w.0.extend_from_slice(tuple);
            w.u32(i);
        }
    }
    out.section(w);

    let mut w = Writer::default();
    w.len16(img.endings.len());
    for e in &img.endings {
        w.str(e);
    }
    w.len16(img.paradigms.len());
    for p in &img.paradigms {
        w.str(p);
    }
    w.len32(img.ending_memory.len());
    for (key, cell) in &img.ending_memory {
        w.0.extend_from_slice(key);
        match cell {
            EndingCell::Nop => w.u8(0),
            EndingCell::Ending {
                ending_id,
                consumed_len,
                paradigms,
                standalone,
            } => {
                w.u8(1);
                w.u16(*ending_id);
                w.u8(*consumed_len);
                w.len16(paradigms.len());
                for &p in paradigms {
                    w.u16(p);
                }
                match standalone {
                    Some(a) => {
                        w.u8(1);
                        w.u32(*a);
                    }
                    None => w.u8(0),
                }
            }
            EndingCell::StandaloneWord {
                consumed_len,
                record,
            } => {
                w.u8(2);
                w.u8(*consumed_len);
                w.u32(*record);
            }
        }
    }
    out.section(w);

    let mut w = Writer::default();
    w.len32(img.stem_memory.len());
    for (addr, row) in &img.stem_memory {
        w.u16(addr.segment);
        w.len16(addr.fields.len());
        for &f in &addr.fields {
            w.u32(f);
        }
        w.len16(row.len());
        for cell in row {
            w.str(&cell.stem);
            w.u16(cell.paradigm);
            w.len16(cell.links.len());
            for &(e, a) in &cell.links {
                w.u16(e);
                w.u32(a);
            }
        }
    }
    out.section(w);

    let mut w = Writer::default();
    w.len32(img.result_store.len());
    for &x in &img.result_store {
        w.u32(x);
    }
    w.len32(img.lemmas.len());
    for l in &img.lemmas {
        w.str(l);
    }
    w.len32(img.tagsets.len());
    for ts in &img.tagsets {
        w.len16(ts.len());
        for t in ts {
            w.str(t);
        }
    }
    out.section(w);

    let mut w = Writer::default();
    w.u32(img.sentinels.word_end);
    w.u32(img.sentinels.result_end);
    out.section(w);

    out.0
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
    end: usize,
}

impl<'a> Reader<'a> {
    fn err(&self, reason: impl Into<String>) -> LexiconError {
        LexiconError::Decode {
            offset: self.pos,
            reason: reason.into(),
        }
    }

    fn bytes(&mut self, n: usize) -> Result<&'a [u8], LexiconError> {
        if self.end - self.pos < n {
            return Err(self.err(format!("need {n} bytes, {} left", self.end - self.pos)));
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8, LexiconError> {
        Ok(self.bytes(1)?[0])
    }

    fn u16(&mut self) -> Result<u16, LexiconError> {
        Ok(u16::from_le_bytes(self.bytes(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32, LexiconError> {
        Ok(u32::from_le_bytes(self.bytes(4)?.try_into().unwrap()))
    }

    fn char(&mut self) -> Result<char, LexiconError> {
        let at = self.pos;
        let v = self.u32()?;
        char::from_u32(v).ok_or(LexiconError::Decode {
            offset: at,
            reason: format!("{v:#x} is not a scalar value"),
        })
    }

    fn str(&mut self) -> Result<String, LexiconError> {
        let n = self.u32()? as usize;
        let at = self.pos;
        let b = self.bytes(n)?;
        String::from_utf8(b.to_vec()).map_err(|e| LexiconError::Decode {
            offset: at + e.utf8_error().valid_up_to(),
            reason: "invalid UTF-8".into(),
        })
    }

    fn mode(&mut self) -> Result<GroupMode, LexiconError> {
        match self.u8()? {
            0 => Ok(GroupMode::Independent),
            1 => Ok(GroupMode::OrCollected),
            m => Err(LexiconError::Decode {
                offset: self.pos - 1,
                reason: format!("unknown group mode {m}"),
            }),
        }
    }

    /// Narrows the reader to the next length-prefixed section.
    fn section(&mut self, name: &str) -> Result<Reader<'a>, LexiconError> {
        let n = self.u32()? as usize;
        if self.end - self.pos < n {
            return Err(self.err(format!("{name} section length {n} runs past the end")));
        }
        let r = Reader {
            buf: self.buf,
            pos: self.pos,
            end: self.pos + n,
        };
        self.pos += n;
        Ok(r)
    }

    fn finish(&self, name: &str) -> Result<(), LexiconError> {
        if self.pos != self.end {
            return Err(self.err(format!("{} trailing bytes in {name} section", self.end - self.pos)));
        }
        Ok(())
    }
}

fn at(offset: usize, e: LexiconError) -> LexiconError {
    match e {
        LexiconError::Decode { .. } => e,
        other => LexiconError::Decode {
            offset,
            reason: other.to_string(),
        },
    }
}

pub fn deserialize_image(bytes: &[u8]) -> Result<MemoryImage, LexiconError> {
    let mut r = Reader {
        buf: bytes,
        pos: 0,
        end: bytes.len(),
    };
    if r.bytes(4)? != IMAGE_MAGIC {
        return Err(LexiconError::Decode {
            offset: 0,
            reason: "bad magic".into(),
        });
    }
    let version = r.u16()?;
    if version != IMAGE_VERSION {
        return Err(LexiconError::Decode {
            offset: 4,
            reason: format!("unsupported version {version}"),
        });
    }

    let mut s = r.section("alphabet")?;
    let start = s.pos;
    let mut letters = Vec::new();
    for _ in 0..s.u16()? {
        letters.push((s.char()?, s.u8()?));
    }
    let mut folds = Vec::new();
    for _ in 0..s.u16()? {
        folds.push((s.char()?, s.char()?));
    }
    s.finish("alphabet")?;
    let alphabet = Alphabet::from_parts(letters, folds).map_err(|e| at(start, e))?;

    let mut s = r.section("scheme")?;
    let start = s.pos;
    let max_word_len = s.u8()?;
    let max_ending_len = s.u8()?;
    let segment_bits = s.u8()?;
    let mut groups = Vec::new();
    for _ in 0..s.u16()? {
        let (a, b) = (s.u8()?, s.u8()?);
        groups.push(CombinationGroup {
            start: a,
            end: b,
            mode: s.mode()?,
        });
    }
    s.finish("scheme")?;
    let scheme = CombinationScheme::new(groups).map_err(|e| at(start, e))?;
    if max_ending_len == 0
        || max_ending_len > max_word_len.min(MAX_TABLE_POSITIONS)
        || !(1..=32).contains(&max_word_len)
    {
        return Err(LexiconError::Decode {
            offset: start,
            reason: "inconsistent word and ending lengths".into(),
        });
    }

    let mut s = r.section("decoders")?;
    let mut first_letter = BTreeMap::new();
    for _ in 0..s.u16()? {
        first_letter.insert(s.u8()?, s.u16()?);
    }
    let mut tables = Vec::new();
    for _ in 0..s.u16()? {
        let pos = s.pos;
        let group = usize::from(s.u16()?);
        let (start, end) = (s.u8()?, s.u8()?);
        let mode = s.mode()?;
        if end < start || group >= scheme.groups().len() {
            return Err(LexiconError::Decode {
                offset: pos,
                reason: "decoder table does not match the scheme".into(),
            });
        }
        let width = usize::from(end - start) + 1;
        let mut index = BTreeMap::new();
        for _ in 0..s.u32()? {
            let t = s.bytes(width)?.to_vec();
            index.insert(t, s.u32()?);
        }
        tables.push(CombinationTable {
            group,
            start,
            end,
            mode,
            index,
        });
    }
    s.finish("decoders")?;

    let mut s = r.section("ending memory")?;
    let mut endings = Vec::new();
    for _ in 0..s.u16()? {
        endings.push(s.str()?);
    }
    let mut paradigms = Vec::new();
    for _ in 0..s.u16()? {
        paradigms.push(s.str()?);
    }
    let mut ending_memory = BTreeMap::new();
    for _ in 0..s.u32()? {
        let key = s.bytes(usize::from(max_ending_len))?.to_vec();
        let cell = match s.u8()? {
            0 => EndingCell::Nop,
            1 => {
                let ending_id = s.u16()?;
                let consumed_len = s.u8()?;
                let mut ps = Vec::new();
                for _ in 0..s.u16()? {
                    ps.push(s.u16()?);
                }
                let standalone = match s.u8()? {
                    0 => None,
                    _ => Some(s.u32()?),
                };
                EndingCell::Ending {
                    ending_id,
                    consumed_len,
                    paradigms: ps,
                    standalone,
                }
            }
            2 => EndingCell::StandaloneWord {
                consumed_len: s.u8()?,
                record: s.u32()?,
            },
            k => {
                return Err(LexiconError::Decode {
                    offset: s.pos - 1,
                    reason: format!("unknown ending cell kind {k}"),
                })
            }
        };
        ending_memory.insert(key, cell);
    }
    s.finish("ending memory")?;

    let mut s = r.section("stem memory")?;
    let mut stem_memory = BTreeMap::new();
    for _ in 0..s.u32()? {
        let segment = s.u16()?;
        let mut fields = Vec::new();
        for _ in 0..s.u16()? {
            fields.push(s.u32()?);
        }
        let mut row = Vec::new();
        for _ in 0..s.u16()? {
            let stem = s.str()?;
            let paradigm = s.u16()?;
            let mut links = Vec::new();
            for _ in 0..s.u16()? {
                links.push((s.u16()?, s.u32()?));
            }
            row.push(StemCell {
                stem,
                paradigm,
                links,
            });
        }
        stem_memory.insert(StemAddress { segment, fields }, row);
    }
    s.finish("stem memory")?;

    let mut s = r.section("result store")?;
    let mut result_store = Vec::new();
    for _ in 0..s.u32()? {
        result_store.push(s.u32()?);
    }
    let mut lemmas = Vec::new();
    for _ in 0..s.u32()? {
        lemmas.push(s.str()?);
    }
    let mut tagsets = Vec::new();
    for _ in 0..s.u32()? {
        let mut ts = Vec::new();
        for _ in 0..s.u16()? {
            ts.push(s.str()?);
        }
        tagsets.push(ts);
    }
    s.finish("result store")?;

    let mut s = r.section("sentinels")?;
    let sentinels = Sentinels {
        word_end: s.u32()?,
        result_end: s.u32()?,
    };
    s.finish("sentinels")?;
    r.finish("image")?;

    Ok(MemoryImage {
        alphabet,
        scheme,
        max_word_len,
        max_ending_len,
        segment_bits,
        first_letter,
        tables,
        endings,
        paradigms,
        ending_memory,
        stem_memory,
        result_store,
        lemmas,
        tagsets,
        sentinels,
    })
}
