//! Deterministic synthetic lexicons shaped like an inflecting language.
//!
//! `generate(n, seed)` is always a prefix of `generate(m, seed)` for
//! `n <= m`, so lexicons of growing size share their first entries.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LexiconEntry;

const STEM_LETTERS: &str = "абвгґдеєжзиіїйклмнопрстуфхцчшщьюя";

const STANDALONE: [(&str, &str); 5] = [
    ("а", "conj"),
    ("і", "conj"),
    ("у", "prep"),
    ("й", "conj"),
    ("о", "interj"),
];

struct Paradigm {
    name: &'static str,
    /// Index into `forms` of the citation form.
    lemma_form: usize,
    forms: &'static [(&'static str, &'static str)],
}

const PARADIGMS: [Paradigm; 4] = [
    Paradigm {
        name: "noun_f",
        lemma_form: 0,
        forms: &[
            ("а", "noun,f,sg,nom"),
            ("и", "noun,f,sg,gen"),
            ("и", "noun,f,pl,nom"),
            ("і", "noun,f,sg,dat"),
            ("у", "noun,f,sg,acc"),
            ("ою", "noun,f,sg,ins"),
            ("ам", "noun,f,pl,dat"),
            ("ами", "noun,f,pl,ins"),
            ("ах", "noun,f,pl,loc"),
        ],
    },
    Paradigm {
        name: "noun_m",
        lemma_form: 0,
        forms: &[
            ("", "noun,m,sg,nom"),
            ("а", "noun,m,sg,gen"),
            ("ові", "noun,m,sg,dat"),
            ("ом", "noun,m,sg,ins"),
            ("і", "noun,m,sg,loc"),
            ("и", "noun,m,pl,nom"),
            ("ів", "noun,m,pl,gen"),
        ],
    },
    Paradigm {
        name: "verb",
        lemma_form: 0,
        forms: &[
            ("ати", "verb,inf"),
            ("аю", "verb,pres,1,sg"),
            ("аєш", "verb,pres,2,sg"),
            ("ає", "verb,pres,3,sg"),
            ("аємо", "verb,pres,1,pl"),
            ("аєте", "verb,pres,2,pl"),
            ("ають", "verb,pres,3,pl"),
        ],
    },
    Paradigm {
        name: "adj",
        lemma_form: 0,
        forms: &[
            ("ий", "adj,m,sg,nom"),
            ("ого", "adj,m,sg,gen"),
            ("ому", "adj,m,sg,dat"),
            ("им", "adj,m,sg,ins"),
            ("а", "adj,f,sg,nom"),
            ("ої", "adj,f,sg,gen"),
            ("у", "adj,f,sg,acc"),
            ("е", "adj,n,sg,nom"),
            ("і", "adj,pl,nom"),
            ("их", "adj,pl,gen"),
            ("ими", "adj,pl,ins"),
        ],
    },
];

/// Every `CROSS_EVERY`-th stem also inflects in a second paradigm, which
/// produces homonyms with different lemmas.
const CROSS_EVERY: usize = 10;

fn inflect(stem: &str, p: &Paradigm, out: &mut Vec<LexiconEntry>) {
    let lemma = format!("{stem}{}", p.forms[p.lemma_form].0);
    for (ending, tags) in p.forms {
        out.push(
            LexiconEntry::new(stem, *ending, &lemma, tags.split(','), p.name)
                .expect("generated entry is valid"),
        );
    }
}

/// Stem length: one plus a sum of four uniform draws from `0..=4`.
fn stem_length(rng: &mut ChaCha8Rng) -> usize {
    1 + (0..4).map(|_| rng.gen_range(0..=4usize)).sum::<usize>()
}

pub fn generate(n: usize, seed: u64) -> Vec<LexiconEntry> {
    let letters: Vec<char> = STEM_LETTERS.chars().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<LexiconEntry> = STANDALONE
        .iter()
        .map(|(w, t)| LexiconEntry::new("", *w, *w, [*t], "particle").unwrap())
        .collect();
    let mut stems = BTreeSet::new();
    let mut k = 0usize;
    while out.len() < n {
        let len = stem_length(&mut rng);
        let stem: String = (0..len)
            .map(|_| letters[rng.gen_range(0..letters.len())])
            .collect();
        let pi = rng.gen_range(0..PARADIGMS.len());
        if !stems.insert(stem.clone()) {
            continue;
        }
        inflect(&stem, &PARADIGMS[pi], &mut out);
        k += 1;
        if k.is_multiple_of(CROSS_EVERY) {
            inflect(&stem, &PARADIGMS[(pi + 1) % PARADIGMS.len()], &mut out);
        }
    }
    out.truncate(n);
    out
}

/// Uniformly random strings over the stem letters.
pub fn random_words(count: usize, seed: u64, min_len: usize, max_len: usize) -> Vec<String> {
    let letters: Vec<char> = STEM_LETTERS.chars().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(min_len..=max_len);
            (0..len)
                .map(|_| letters[rng.gen_range(0..letters.len())])
                .collect()
        })
        .collect()
}

/// One entry per stem, with stems chosen so that positions 2–4 take exactly
/// `count` distinct values (`count <= 33³`).
pub fn with_distinct_tuples(count: usize) -> Vec<LexiconEntry> {
    let letters: Vec<char> = STEM_LETTERS.chars().collect();
    let n = letters.len();
    assert!((1..=n * n * n).contains(&count), "count out of range");
    (0..count)
        .map(|i| {
            let stem: String = ['а', letters[i / (n * n)], letters[(i / n) % n], letters[i % n]]
                .into_iter()
                .collect();
            LexiconEntry::new(&stem, "а", format!("{stem}а"), ["noun"], "noun_f").unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_and_deterministic() {
        let small = generate(100, 3);
        let big = generate(1000, 3);
        assert_eq!(small.len(), 100);
        assert_eq!(&big[..100], &small[..]);
        assert_eq!(generate(1000, 3), big);
        assert_ne!(generate(1000, 4), big);
    }

    #[test]
    fn includes_homonyms_and_standalone() {
        let e = generate(500, 1);
        assert!(e.iter().any(|x| x.stem().is_empty()));
        let mut surfaces = std::collections::BTreeMap::<&str, usize>::new();
        for x in &e {
            *surfaces.entry(x.surface()).or_default() += 1;
        }
        assert!(surfaces.values().any(|&c| c > 1));
    }

    #[test]
    fn engineered_tuple_count() {
        let e = with_distinct_tuples(50);
        assert_eq!(e.len(), 50);
    }
}
