//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use morphoforge::amp::{
    analyze_word, naive_scan_baseline, oracle_lookup, AmpConfig, OracleMap, Reading, ScanMode,
    Status,
};
use morphoforge::costmodel::{
    bram_count, description_complexity, hierarchical_complexity, ideal_exponent,
    merge_operators, micro_complexity, pareto_front, relative_complexity, select_realization,
    AlgorithmDescription, MicroInstruction, OperatorSpec, RealizationPoint, WeightVector,
};
use morphoforge::lexicon::{
    combination_counts, compile_lexicon, deserialize_image, eval_gaussian, fit_gaussian,
    parse_lexicon, r_squared, required_data_width, serialize_image, synth, Alphabet,
    CombinationScheme, CompileOptions, GaussianFit, LexiconEntry, MemoryImage,
};
use morphoforge::ontometrics::{concept_union, uniform_complexity, uniform_tree, vertex_complexity};
use morphoforge::textmodel::{index_structure, segment, AccDictionary, RawDocument};
use morphoforge::{Ontograph64, Ratio};
use rand::distributions::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        match $cond {
            true => {}
            false => return Err(format!($($fmt)+)),
        }
    };
}

fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(rel)
}

fn load_lexicon(rel: &str) -> Vec<LexiconEntry> {
    parse_lexicon(&std::fs::read_to_string(fixture(rel)).unwrap()).unwrap()
}

fn compile(entries: &[LexiconEntry]) -> MemoryImage {
    compile_lexicon(entries, &Alphabet::ukrainian(), &CompileOptions::default())
        .unwrap()
        .image
}

fn criterion_1() -> Outcome {
    let w = required_data_width(26450).map_err(|e| e.to_string())?;
    ensure!(w == 15, "requiredDataWidth(26450) = {w}");
    let b = bram_count(3, 15);
    ensure!(b == 120, "bramCount(3, 15) = {b}");
    let e = ideal_exponent(32);
    ensure!(e == 256, "idealExponent(32) = {e}");
    let entries = synth::with_distinct_tuples(26450);
    let scheme = CombinationScheme::parse("2-4:independent").unwrap();
    let t = combination_counts(&entries, &scheme, &Alphabet::ukrainian()).map_err(|e| e.to_string())?;
    ensure!(
        t[0].count() == 26450 && t[0].data_width_bits() == 15,
        "engineered table: {} tuples, {} bits",
        t[0].count(),
        t[0].data_width_bits()
    );
    Ok("width 15, 120 BRAMs, exponent 256".into())
}

fn criterion_2() -> Outcome {
    let printed = GaussianFit::from_params(33600.0, 9.0, 16.0);
    let peak = eval_gaussian(&printed, 9.0);
    ensure!(peak == 33600.0, "peak {peak}");
    let pts: Vec<(f64, f64)> = (1..=20)
        .map(|x| {
            let x = f64::from(x);
            (x, 33600.0 * (-(x - 9.0) * (x - 9.0) / 16.0).exp())
        })
        .collect();
    let fit = fit_gaussian(&pts).map_err(|e| e.to_string())?;
    let rel = |got: f64, want: f64| (got - want).abs() / want;
    for (name, got, want) in [
        ("A", fit.amplitude, 33600.0),
        ("mu", fit.center, 9.0),
        ("w", fit.width, 16.0),
    ] {
        ensure!(rel(got, want) <= 1e-3, "{name} = {got}, expected {want}");
    }
    let observed: Vec<f64> = pts.iter().map(|p| p.1).collect();
    let predicted: Vec<f64> = pts.iter().map(|p| eval_gaussian(&fit, p.0)).collect();
    let r2 = r_squared(&observed, &predicted).map_err(|e| e.to_string())?;
    ensure!((r2 - 1.0).abs() <= 1e-9 && (fit.r_squared - 1.0).abs() <= 1e-9, "R² = {r2}");
    Ok(format!(
        "A {:.4}, mu {:.6}, w {:.6}, 1 - R² = {:.1e}",
        fit.amplitude,
        fit.center,
        fit.width,
        1.0 - r2
    ))
}

/// Brute-force surface match written independently of the library.
fn brute_lookup(entries: &[LexiconEntry], a: &Alphabet, word: &str) -> Vec<Reading> {
    let Ok(target) = a.fold_str(word) else {
        return Vec::new();
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in entries {
        if a.fold_str(e.surface()).ok().as_deref() != Some(target.as_str()) {
            continue;
        }
        if !seen.insert((e.lemma().to_string(), e.tags().to_vec())) {
            continue;
        }
        out.push(Reading {
            lemma: e.lemma().to_string(),
            tags: e.tags().to_vec(),
            stem_len: e.stem().chars().count(),
            ending_len: e.ending().chars().count(),
        });
    }
    out.sort();
    out
}

fn criterion_3() -> Outcome {
    let a = Alphabet::ukrainian();
    let cfg = AmpConfig::default();
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for (i, rel) in ["lexicon/homonyms.tsv", "lexicon/inflected.tsv", "lexicon/synthetic-2000.tsv"]
        .into_iter()
        .enumerate()
    {
        let entries = load_lexicon(rel);
        let image = compile(&entries);
        let surfaces: BTreeSet<String> = entries.iter().map(|e| e.surface().to_string()).collect();
        let folded: BTreeSet<String> = surfaces.iter().map(|s| a.fold_str(s).unwrap()).collect();
        let mut non_words = Vec::new();
        let mut seed = 1000 + i as u64;
        while non_words.len() < 1000 {
            for w in synth::random_words(1000, seed, 1, 32) {
                if non_words.len() < 1000 && !folded.contains(&a.fold_str(&w).unwrap()) {
                    non_words.push(w);
                }
            }
            seed += 17;
        }
        let oracle = OracleMap::build(&entries, &a);
        for w in surfaces.iter().chain(&non_words) {
            let amp = analyze_word(&image, w, &cfg).map_err(|e| format!("{rel}: {e}"))?;
            let reference = if entries.len() <= 500 {
                oracle_lookup(&entries, &a, w)
            } else {
                oracle.lookup(w)
            };
            let got = amp.sorted_readings();
            if got != reference.sorted_readings() || amp.status != reference.status {
                mismatches.push(format!("{rel}: {w}"));
            }
            if entries.len() <= 500 && got != brute_lookup(&entries, &a, w) {
                mismatches.push(format!("{rel}: {w} (brute force)"));
            }
            checked += 1;
        }
    }
    ensure!(mismatches.is_empty(), "{} mismatches, e.g. {:?}", mismatches.len(), &mismatches[..mismatches.len().min(5)]);
    Ok(format!("{checked} words over 3 lexicons, 0 mismatches"))
}

fn criterion_4() -> Outcome {
    let a = Alphabet::ukrainian();
    let cfg = AmpConfig::default();
    let sizes = [100usize, 1000, 10_000];
    let lexicons: Vec<Vec<LexiconEntry>> = sizes.iter().map(|&n| synth::generate(n, 11)).collect();
    let images: Vec<MemoryImage> = lexicons.iter().map(|l| compile(l)).collect();
    let oracles: Vec<OracleMap> = lexicons.iter().map(|l| OracleMap::build(l, &a)).collect();
    let probes: Vec<String> = synth::random_words(300, 77, 2, 20)
        .into_iter()
        .filter(|w| oracles.iter().all(|o| o.lookup(w).status == Status::NotFound))
        .collect();
    ensure!(probes.len() >= 200, "only {} absent probes", probes.len());
    for w in &probes {
        let cycles: Vec<u64> = images
            .iter()
            .map(|i| analyze_word(i, w, &cfg).map(|r| r.cycles))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure!(cycles.iter().all(|&c| c == cycles[0]), "{w}: cycles {cycles:?}");
    }
    let scan = |l: &[LexiconEntry]| -> u64 {
        probes
            .iter()
            .map(|w| naive_scan_baseline(l, &a, w, ScanMode::FirstMatch).1)
            .sum()
    };
    let (small, big) = (scan(&lexicons[0]), scan(&lexicons[2]));
    ensure!(big >= 50 * small, "scan grew {:.1}x", big as f64 / small as f64);

    let out = Command::new(env!("CARGO_BIN_EXE_morphoforge"))
        .args(["bench", "--synthetic", "100,1000,10000", "--probe-count", "200", "--seed", "5"])
        .env_remove("MORPHOFORGE_CONFIG")
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "bench failed: {}", String::from_utf8_lossy(&out.stderr));
    let csv = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<u64>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    ensure!(rows.len() == 3, "bench rows: {}", rows.len());
    ensure!(rows.iter().all(|r| r[1] == rows[0][1]), "bench AMP column not flat: {csv}");
    ensure!(rows[2][2] >= 50 * rows[0][2], "bench scan column not linear: {csv}");
    Ok(format!(
        "{} probes flat across 10², 10³, 10⁴; scan {:.0}x; bench ampCycles {} flat, scan {} -> {}",
        probes.len(),
        big as f64 / small as f64,
        rows[0][1],
        rows[0][2],
        rows[2][2]
    ))
}

struct Instance {
    points: Vec<RealizationPoint<f64>>,
    weights: WeightVector<f64>,
}

fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    let m = rng.gen_range(1..=12);
    let small = Uniform::new_inclusive(1u32, 30);
    let points = (0..m)
        .map(|i| {
            let t = f64::from(small.sample(rng)) * 10f64.powi(rng.gen_range(0..3));
            let q = f64::from(small.sample(rng)) * 10f64.powi(rng.gen_range(0..4));
            RealizationPoint::new(i as u32, t, q).unwrap()
        })
        .collect();
    let norm = |rng: &mut ChaCha8Rng| {
        let raw: Vec<f64> = (0..m).map(|_| rng.gen_range(1..100) as f64).collect();
        let s: f64 = raw.iter().sum();
        raw.into_iter().map(|v| v / s).collect::<Vec<f64>>()
    };
    let c = norm(rng);
    let b = norm(rng);
    let weights = WeightVector {
        c,
        b,
        t0: rng.gen_range(1..100) as f64,
        q0: rng.gen_range(1..1000) as f64,
    };
    Instance { points, weights }
}

fn exhaustive_argmin(pts: &[RealizationPoint<f64>], w: &WeightVector<f64>) -> (u32, f64) {
    let mut best = (u32::MAX, f64::INFINITY);
    for (i, p) in pts.iter().enumerate() {
        let f = (w.c[i] * p.hardware + w.b[i] * p.time) / (w.c[i] * w.q0 + w.b[i] * w.t0);
        if f < best.1 || (f == best.1 && p.id < best.0) {
            best = (p.id, f);
        }
    }
    best
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = Vec::new();
    let mut rescale_flips = 0usize;
    let mut rescale_drift = 0usize;
    for n in 0..500 {
        let Instance { points, weights } = random_instance(&mut rng);
        let mut oracle: Vec<&RealizationPoint<f64>> = points
            .iter()
            .filter(|p| !points.iter().any(|q| q.time <= p.time && q.hardware <= p.hardware && (q.time < p.time || q.hardware < p.hardware)))
            .filter(|p| !points.iter().any(|q| q.id < p.id && q.time == p.time && q.hardware == p.hardware))
            .collect();
        oracle.sort_by(|a, b| a.time.partial_cmp(&b.time).unwrap());
        let front: Vec<u32> = pareto_front(&points).iter().map(|p| p.id).collect();
        let expected: Vec<u32> = oracle.iter().map(|p| p.id).collect();
        if front != expected {
            failures.push(format!("instance {n}: front {front:?} vs {expected:?}"));
        }
        let sel = select_realization(&points, &weights).map_err(|e| e.to_string())?;
        let (id, f) = exhaustive_argmin(&points, &weights);
        if sel.id != id || (sel.f - f).abs() > 1e-12 * f {
            failures.push(format!("instance {n}: selected {} vs {id}", sel.id));
        }

        let s = 10f64.powi(rng.gen_range(-3..=3)) * rng.gen_range(1.0..10.0);
        let scaled: Vec<RealizationPoint<f64>> = points
            .iter()
            .map(|p| RealizationPoint::new(p.id, p.time * s, p.hardware).unwrap())
            .collect();
        let ws = WeightVector { t0: weights.t0 * s, ..weights.clone() };
        let after = select_realization(&scaled, &ws).map_err(|e| e.to_string())?;
        if after.id != sel.id {
            rescale_flips += 1;
        }
        if (after.f - sel.f).abs() > 1e-12 * sel.f.abs() {
            rescale_drift += 1;
        }
    }
    ensure!(failures.is_empty(), "{} failures, e.g. {:?}", failures.len(), &failures[..failures.len().min(3)]);
    ensure!(
        rescale_flips == 0 && rescale_drift == 0,
        "front and selection match oracles on 500 instances, but rescaling every T (and T0) \
         changed the argmin in {rescale_flips} and the minimum functional in {rescale_drift} of 500 instances"
    );
    Ok("500 instances: front, selection and T-rescaling invariance hold".into())
}

fn random_ops(rng: &mut ChaCha8Rng) -> Vec<OperatorSpec> {
    let n = rng.gen_range(1..25);
    (0..n)
        .map(|_| {
            OperatorSpec::new(
                format!("op{}", rng.gen_range(0..8)),
                rng.gen_range(1..128),
                rng.gen_range(0..1000),
                rng.gen_range(0..5),
            )
            .unwrap()
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 0..1000 {
        let ops = random_ops(&mut rng);
        let mut total: u128 = 0;
        let mut per_level: BTreeMap<u32, u128> = BTreeMap::new();
        for o in &ops {
            for _ in 0..o.count {
                total += u128::from(o.code_width);
                *per_level.entry(o.level).or_default() += u128::from(o.code_width);
            }
        }
        ensure!(description_complexity(&ops) == total, "operator set {n}: Q_A");
        if let Ok(alg) = AlgorithmDescription::new(ops.clone()) {
            let h = hierarchical_complexity(&alg);
            ensure!(h.total == total, "operator set {n}: hierarchy total");
            for (&l, &q) in &h.per_level {
                ensure!(per_level.get(&l).copied().unwrap_or(0) == q, "operator set {n}: level {l}");
                let below: u128 = per_level.range(..l).map(|(_, v)| v).sum();
                match relative_complexity(&alg, l) {
                    Ok(r) => ensure!(below > 0 && r == Ratio::new(q, below), "operator set {n}: ratio at {l}"),
                    Err(_) => ensure!(below == 0, "operator set {n}: ratio at {l} refused"),
                }
            }
        }
        let z: Vec<u32> = (0..rng.gen_range(1..20)).map(|_| rng.gen_range(0..10_000)).collect();
        let mi = MicroInstruction::new(z.iter().map(|&v| f64::from(v)).collect()).map_err(|e| e.to_string())?;
        let sum: u64 = z.iter().map(|&v| u64::from(v)).sum();
        ensure!(micro_complexity(&mi) == sum as f64, "operator set {n}: micro-instruction");
    }
    let mut merges = 0;
    while merges < 1000 {
        let ops = random_ops(&mut rng);
        let mut take: Vec<(usize, u64)> = Vec::new();
        for _ in 0..rng.gen_range(1..4) {
            let i = rng.gen_range(0..ops.len());
            let used: u64 = take.iter().filter(|t| t.0 == i).map(|t| t.1).sum();
            let left = ops[i].count - used;
            if left > 0 {
                take.push((i, rng.gen_range(1..=left.min(5))));
            }
        }
        let removed: u128 = take.iter().map(|&(i, k)| u128::from(k) * u128::from(ops[i].code_width)).sum();
        if removed < 2 {
            continue;
        }
        let width = rng.gen_range(1..removed as u64);
        let composite = OperatorSpec::new("composite", width, 1, ops[0].level).unwrap();
        let m = merge_operators(&ops, &take, composite).map_err(|e| e.to_string())?;
        let before = description_complexity(&ops);
        let after = description_complexity(&m.ops);
        ensure!(
            after == before - removed + u128::from(width) && after < before,
            "merge {merges}: {before} -> {after}"
        );
        merges += 1;
    }
    Ok("1000 specs exact, 1000 merges monotone".into())
}

fn random_tree(rng: &mut ChaCha8Rng) -> Ontograph64 {
    let mut g = Ontograph64::new();
    g.add_vertex("root", 0, Some(rng.gen_range(0.0..2.0))).unwrap();
    let mut placed = vec![("root".to_string(), 0u32)];
    for _ in 0..rng.gen_range(0..14) {
        let id = rng.gen_range(0..40u32);
        let label = if rng.gen_bool(0.2) { format!("C{id}") } else { format!("c{id}") };
        let level = id % 4 + 1;
        if g.vertex(&label).is_some() {
            continue;
        }
        let (parent, pl) = placed[rng.gen_range(0..placed.len())].clone();
        if level <= pl {
            continue;
        }
        g.add_vertex(&label, level, Some(rng.gen_range(0.0..2.0))).unwrap();
        g.add_edge(&parent, &label, ["is-a", "part-of"][rng.gen_range(0..2)], Some(rng.gen_range(0.0..1.0)))
            .unwrap();
        placed.push((label, level));
    }
    g
}

type Sets = (Vec<String>, Vec<(String, String, String)>);

fn sets(g: &Ontograph64) -> Sets {
    (g.label_set(), g.edge_set())
}

fn criterion_7() -> Outcome {
    for s in 1..=4u64 {
        for h in 1..=6u32 {
            let formula = uniform_complexity(s, h).map_err(|e| e.to_string())?;
            let explicit = vertex_complexity(&uniform_tree::<f64>(s, h)).map_err(|e| e.to_string())?;
            ensure!(formula == explicit, "S {s}, h {h}: {formula} vs {explicit}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let trees: Vec<Ontograph64> = (0..200).map(|_| random_tree(&mut rng)).collect();
    let u = |gs: &[&Ontograph64]| -> Result<Ontograph64, String> {
        concept_union(&gs.iter().map(|g| (*g).clone()).collect::<Vec<_>>()).map_err(|e| e.to_string())
    };
    for i in 0..trees.len() {
        let g = &trees[i];
        let h = &trees[(i + 1) % trees.len()];
        let k = &trees[(i + 2) % trees.len()];
        ensure!(sets(&u(&[g, g])?) == sets(g), "tree {i}: idempotence");
        ensure!(sets(&u(&[g, h])?) == sets(&u(&[h, g])?), "tree {i}: commutativity");
        let gh = u(&[g, h])?;
        let hk = u(&[h, k])?;
        ensure!(sets(&u(&[&gh, k])?) == sets(&u(&[g, &hk])?), "tree {i}: associativity");
    }
    Ok("24 uniform trees exact; union laws over 200 trees".into())
}

const CURATED: [&str; 6] = [
    "Машини, верстати т.д. Далі текст.",
    "Відстань 12,5 км. ФОП і фоп різні!",
    "«Цитата.» Наступне речення… т.д.",
    "  \n\tПробіли навколо км.  \n",
    "Без крапки в кінці км",
    "",
];

fn random_unicode(rng: &mut ChaCha8Rng) -> String {
    let mut s = String::new();
    for _ in 0..rng.gen_range(0..80) {
        match rng.gen_range(0..10) {
            0..=4 => s.push(char::from_u32(rng.gen_range(0x0410..0x0450)).unwrap()),
            5 => s.push([' ', '\n', '\t', '.', ',', '!', '?', '…'][rng.gen_range(0..8)]),
            6 => s.push_str(["т.д.", "км", "ФОП", "фоп"][rng.gen_range(0..4)]),
            _ => s.push(loop {
                if let Some(c) = char::from_u32(rng.gen_range(0..0x11_0000)) {
                    break c;
                }
            }),
        }
    }
    s
}

fn check_text(text: &str, acc: &AccDictionary) -> Result<(), String> {
    let gs = segment(&RawDocument::new("t", text).map_err(|e| e.to_string())?, acc);
    ensure!(gs.join() == text, "join differs for {text:?}");
    let indexed = index_structure(&gs);
    let mut last = None;
    let mut end = 0;
    for s in indexed.sentences() {
        for w in &s.wordforms {
            ensure!(w.char_span.0 >= end && text[w.char_span.0..w.char_span.1] == w.surface, "span order in {text:?}");
            end = w.char_span.1;
            let idx = w.dotted_index.clone().ok_or("unindexed wordform")?;
            if let Some(prev) = &last {
                ensure!(&idx > prev, "index order in {text:?}");
            }
            last = Some(idx);
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let acc = AccDictionary::parse(&std::fs::read_to_string(fixture("acc.tsv")).unwrap())
        .map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut texts: Vec<String> = (0..1000).map(|_| random_unicode(&mut rng)).collect();
    for t in texts.iter_mut().step_by(3) {
        t.push_str(" т.д. км ФОП.");
    }
    for t in &texts {
        check_text(t, &acc)?;
    }
    for t in CURATED {
        check_text(t, &acc)?;
    }
    let sample = std::fs::read_to_string(fixture("text/sample.txt")).unwrap();
    check_text(&sample, &acc)?;
    Ok(format!("{} texts lossless and ordered", texts.len() + CURATED.len() + 1))
}

fn criterion_9() -> Outcome {
    let a = Alphabet::ukrainian();
    let schemes = [
        "2-4:independent",
        "2-4:independent,5-7:independent,8-32:or",
        "2-3:independent,4-9:or",
        "2-4:independent,5-7:independent,8-10:independent,11-32:or",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bytes_total = 0;
    for n in 0..100 {
        let entries = synth::generate(rng.gen_range(1..400), rng.gen());
        let opts = CompileOptions {
            scheme: CombinationScheme::parse(schemes[rng.gen_range(0..schemes.len())]).unwrap(),
            max_ending_len: rng.gen_range(4..=6),
            ..CompileOptions::default()
        };
        let image = compile_lexicon(&entries, &a, &opts).map_err(|e| e.to_string())?.image;
        let bytes = serialize_image(&image);
        let back = deserialize_image(&bytes).map_err(|e| format!("image {n}: {e}"))?;
        ensure!(back == image, "image {n}: decoded image differs");
        ensure!(serialize_image(&back) == bytes, "image {n}: bytes differ");
        bytes_total += bytes.len();
    }
    Ok(format!("100 images, {bytes_total} bytes, bit-exact"))
}

fn main() -> ExitCode {
    let criteria: [(fn() -> Outcome, u64); 9] = [
        (criterion_1, 1),
        (criterion_2, 5),
        (criterion_3, 10),
        (criterion_4, 30),
        (criterion_5, 10),
        (criterion_6, 5),
        (criterion_7, 5),
        (criterion_8, 10),
        (criterion_9, 5),
    ];
    let mut failed = 0;
    for (i, (check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > Duration::from_secs(limit) => {
                Err(format!("{detail}, but took {took:.2?} (limit {limit} s)"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {detail} [{took:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {detail} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
