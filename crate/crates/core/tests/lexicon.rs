use std::collections::BTreeMap;

use morphoforge::lexicon::{
    combination_counts, compile_lexicon, deserialize_image, fit_gaussian, fit_histogram,
    mean_stem_length, r_squared, range_counts, required_data_width, serialize_image,
    stem_length_histogram, synth, Alphabet, CombinationScheme, CompileOptions, LexiconEntry,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn brute_histogram(entries: &[LexiconEntry]) -> BTreeMap<usize, u64> {
    let mut max = 0;
    for e in entries {
        max = max.max(e.stem().chars().count());
    }
    let mut out = BTreeMap::new();
    for len in 1..=max {
        let n = entries
            .iter()
            .filter(|e| e.stem().chars().count() == len)
            .count() as u64;
        if n > 0 {
            out.insert(len, n);
        }
    }
    out
}

#[test]
fn histogram_matches_brute_force_counter() {
    let entries = synth::generate(1000, 11);
    let hist = stem_length_histogram(&entries);
    assert_eq!(hist, brute_histogram(&entries));
    let stemmed = entries.iter().filter(|e| !e.stem().is_empty()).count() as u64;
    assert_eq!(hist.values().sum::<u64>(), stemmed);
    let weighted: u64 = hist.iter().map(|(&k, &v)| k as u64 * v).sum();
    let mean = mean_stem_length(&entries).unwrap();
    assert!((mean - weighted as f64 / stemmed as f64).abs() < 1e-12);
}

#[test]
fn engineered_tuple_count() {
    let entries = synth::with_distinct_tuples(26450);
    let a = Alphabet::ukrainian();
    let scheme = CombinationScheme::parse("2-4:independent").unwrap();
    let tables = combination_counts(&entries, &scheme, &a).unwrap();
    assert_eq!(tables.len(), 1);
    assert_eq!(tables[0].count(), 26450);
    assert_eq!(tables[0].data_width_bits(), 15);
    assert_eq!(required_data_width(26450).unwrap(), 15);
    let rc = range_counts(&entries, &a, &[(2, 4)]).unwrap();
    assert_eq!(rc[0].count, 26450);
}

#[test]
fn combination_counts_ignore_entry_order() {
    let a = Alphabet::ukrainian();
    let scheme = CombinationScheme::parse("2-4:independent,5-7:independent,8-16:or").unwrap();
    let mut entries = synth::generate(800, 5);
    let before = combination_counts(&entries, &scheme, &a).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..5 {
        entries.shuffle(&mut rng);
        assert_eq!(combination_counts(&entries, &scheme, &a).unwrap(), before);
    }
}

#[test]
fn compiled_image_ignores_entry_order() {
    let a = Alphabet::ukrainian();
    let mut entries = synth::generate(600, 2);
    let opts = CompileOptions::default();
    let first = serialize_image(&compile_lexicon(&entries, &a, &opts).unwrap().image);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    entries.shuffle(&mut rng);
    let second = serialize_image(&compile_lexicon(&entries, &a, &opts).unwrap().image);
    assert_eq!(first, second);
}

fn gauss(a: f64, mu: f64, w: f64, x: f64) -> f64 {
    a * (-(x - mu) * (x - mu) / w).exp()
}

fn sse(pts: &[(f64, f64)], mu: f64, w: f64) -> (f64, f64) {
    // amplitude solved in closed form for fixed centre and width
    let (mut num, mut den) = (0.0, 0.0);
    for &(x, y) in pts {
        let e = gauss(1.0, mu, w, x);
        num += y * e;
        den += e * e;
    }
    let a = if den > 0.0 { num / den } else { 0.0 };
    let s = pts.iter().map(|&(x, y)| (y - gauss(a, mu, w, x)).powi(2)).sum();
    (s, a)
}

fn grid_polish_oracle(pts: &[(f64, f64)]) -> f64 {
    let (mut best_mu, mut best_w, mut best) = (0.0, 1.0, f64::INFINITY);
    for i in 0..=200 {
        let mu = i as f64 * 0.1;
        for j in 1..=200 {
            let w = j as f64 * 0.5;
            let (s, _) = sse(pts, mu, w);
            if s < best {
                (best_mu, best_w, best) = (mu, w, s);
            }
        }
    }
    let (mut step_mu, mut step_w) = (0.1, 0.5);
    while step_mu > 1e-12 {
        let mut moved = false;
        for (dm, dw) in [(step_mu, 0.0), (-step_mu, 0.0), (0.0, step_w), (0.0, -step_w)] {
            let (m, w) = (best_mu + dm, best_w + dw);
            if w <= 0.0 {
                continue;
            }
            let (s, _) = sse(pts, m, w);
            if s < best {
                (best_mu, best_w, best) = (m, w, s);
                moved = true;
            }
        }
        if !moved {
            step_mu *= 0.5;
            step_w *= 0.5;
        }
    }
    best
}

#[test]
fn noisy_fit_reaches_oracle_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..5 {
        let a: f64 = rng.gen_range(100.0..5000.0);
        let mu: f64 = rng.gen_range(6.0..12.0);
        let w: f64 = rng.gen_range(4.0..30.0);
        let pts: Vec<(f64, f64)> = (1..=20)
            .map(|x| {
                let x = x as f64;
                let noise = rng.gen_range(-0.05..0.05);
                (x, (gauss(a, mu, w, x) * (1.0 + noise)).max(0.0))
            })
            .collect();
        let fit = fit_gaussian(&pts).unwrap();
        let ours: f64 = pts
            .iter()
            .map(|&(x, y)| (y - fit.eval(x)).powi(2))
            .sum();
        let oracle = grid_polish_oracle(&pts);
        assert!(
            ours <= oracle * (1.0 + 1e-6) + 1e-9,
            "fit sse {ours} vs oracle {oracle}"
        );
    }
}

#[test]
fn histogram_fit_of_synthetic_lexicon_is_good() {
    let entries = synth::generate(5000, 1);
    let fit = fit_histogram::<f64>(&stem_length_histogram(&entries)).unwrap();
    assert!(fit.r_squared > 0.9, "{fit:?}");
    assert!(fit.center > 3.0 && fit.center < 20.0);
}

fn random_lexicon(rng: &mut ChaCha8Rng) -> (Vec<LexiconEntry>, CompileOptions) {
    let n = rng.gen_range(1..400);
    let mut entries = synth::generate(n, rng.gen());
    if rng.gen_bool(0.3) {
        entries.push(
            LexiconEntry::new("довгаоснова", "ння", "довгаосновання", ["noun"], "x").unwrap(),
        );
    }
    let schemes = [
        "2-4:independent",
        "2-4:independent,5-7:independent,8-32:or",
        "2-3:independent,4-9:or",
        "2-4:independent,5-7:independent,8-10:independent,11-32:or",
    ];
    let opts = CompileOptions {
        scheme: CombinationScheme::parse(schemes[rng.gen_range(0..schemes.len())]).unwrap(),
        max_ending_len: rng.gen_range(4..=6),
        ..CompileOptions::default()
    };
    (entries, opts)
}

#[test]
fn codec_round_trip_is_bit_exact() {
    let a = Alphabet::ukrainian();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let (entries, opts) = random_lexicon(&mut rng);
        let image = compile_lexicon(&entries, &a, &opts).unwrap().image;
        let bytes = serialize_image(&image);
        let back = deserialize_image(&bytes).unwrap();
        assert_eq!(back, image);
        assert_eq!(serialize_image(&back), bytes);
    }
}

proptest! {
    #[test]
    fn r_squared_of_identity_is_one(obs in prop::collection::vec(-1e6f64..1e6, 2..50)) {
        prop_assume!(obs.iter().any(|&v| v != obs[0]));
        prop_assert_eq!(r_squared(&obs, &obs).unwrap(), 1.0);
    }

    #[test]
    fn data_width_is_smallest_power(count in 1u64..u64::MAX / 2) {
        let b = required_data_width(count).unwrap();
        prop_assert!(1u128 << b >= u128::from(count));
        if b > 0 {
            prop_assert!(1u128 << (b - 1) < u128::from(count));
        }
    }

    #[test]
    fn truncated_images_are_rejected(seed in any::<u64>(), cut in 0.0f64..1.0) {
        let a = Alphabet::ukrainian();
        let entries = synth::generate(50, seed);
        let image = compile_lexicon(&entries, &a, &CompileOptions::default()).unwrap().image;
        let bytes = serialize_image(&image);
        let at = ((bytes.len() as f64) * cut) as usize;
        prop_assert!(deserialize_image(&bytes[..at.min(bytes.len() - 1)]).is_err());
    }
}
