use morphoforge::amp::{
    analyze_sentence, analyze_word, analyze_word_traced, naive_scan_baseline, oracle_lookup,
    wave_cycles, AmpConfig, OracleMap, ScanMode, Status, TraceStep,
};
use morphoforge::lexicon::{
    compile_lexicon, synth, Alphabet, CombinationScheme, CompileOptions, LexiconEntry,
    MemoryImage,
};
use morphoforge::textmodel::{segment, AccDictionary, RawDocument};
use proptest::prelude::*;

fn compile(entries: &[LexiconEntry]) -> MemoryImage {
    compile_lexicon(entries, &Alphabet::ukrainian(), &CompileOptions::default())
        .unwrap()
        .image
}

/// Cycles of a word that matches nothing under the default parameters.
fn absent_cycles(n: u64, e_max: u64) -> u64 {
    let probes = n.min(e_max);
    let slots = (n - 1).min(e_max) + 1;
    4 + n + probes + 2 * slots
}

fn e(stem: &str, ending: &str, lemma: &str, tags: &str) -> LexiconEntry {
    LexiconEntry::new(stem, ending, lemma, tags.split(','), "p").unwrap()
}

fn homonym_lexicon() -> Vec<LexiconEntry> {
    vec![
        e("мам", "а", "мама", "noun,f,sg,nom"),
        e("мам", "и", "мама", "noun,f,sg,gen"),
        e("мам", "и", "мама", "noun,f,pl,nom"),
        e("стал", "ь", "сталь", "noun,f,sg,nom"),
        e("стал", "ь", "стати", "verb,past,m"),
        e("", "й", "й", "conj"),
        e("", "і", "і", "conj"),
        e("", "і", "вона", "pron,dat"),
        e("мам", "і", "мама", "noun,f,sg,dat"),
        e("найдовшеслововлексикондляпере", "вір", "найдовше", "adj"),
    ]
}

#[test]
fn amp_matches_oracle_on_homonyms() {
    let entries = homonym_lexicon();
    let a = Alphabet::ukrainian();
    let image = compile(&entries);
    let cfg = AmpConfig::default();
    let long = "найдовшеслововлексикондляперевір";
    assert_eq!(long.chars().count(), 32);
    for w in ["мама", "мами", "сталь", "й", "і", "мамі", "МАМА", long, "мам", "ма", "ь"] {
        let amp = analyze_word(&image, w, &cfg).unwrap();
        let oracle = oracle_lookup(&entries, &a, w);
        assert_eq!(amp.sorted_readings(), oracle.sorted_readings(), "{w}");
        assert_eq!(amp.status, oracle.status, "{w}");
    }
}

#[test]
fn amp_matches_oracle_on_synthetic_lexicons() {
    let a = Alphabet::ukrainian();
    let cfg = AmpConfig::default();
    for (n, seed) in [(300, 1), (2000, 2)] {
        let entries = synth::generate(n, seed);
        let image = compile(&entries);
        let oracle = OracleMap::build(&entries, &a);
        let surfaces: Vec<String> = oracle.surfaces().map(str::to_string).collect();
        for w in &surfaces {
            let amp = analyze_word(&image, w, &cfg).unwrap();
            assert_eq!(amp.sorted_readings(), oracle.lookup(w).sorted_readings(), "{w}");
        }
        for w in synth::random_words(500, seed + 100, 1, 20) {
            let amp = analyze_word(&image, &w, &cfg).unwrap();
            assert_eq!(amp.sorted_readings(), oracle.lookup(&w).sorted_readings(), "{w}");
        }
    }
}

#[test]
fn cycles_do_not_depend_on_lexicon_size() {
    let cfg = AmpConfig::default();
    let a = Alphabet::ukrainian();
    let sizes = [100, 1000, 10_000];
    let lexicons: Vec<Vec<LexiconEntry>> = sizes.iter().map(|&n| synth::generate(n, 7)).collect();
    let images: Vec<MemoryImage> = lexicons.iter().map(|l| compile(l)).collect();
    let oracles: Vec<OracleMap> = lexicons.iter().map(|l| OracleMap::build(l, &a)).collect();
    let absent: Vec<String> = synth::random_words(200, 99, 3, 24)
        .into_iter()
        .filter(|w| oracles[2].lookup(w).status == Status::NotFound)
        .collect();
    assert!(absent.len() > 150);
    for w in &absent {
        let n = w.chars().count() as u64;
        for image in &images {
            let r = analyze_word(image, w, &cfg).unwrap();
            assert_eq!(r.cycles, absent_cycles(n, 4), "{w}");
        }
    }
    let present: Vec<&str> = oracles[0].surfaces().take(100).collect();
    for w in present {
        let counts: Vec<usize> = oracles.iter().map(|o| o.lookup(w).readings.len()).collect();
        if counts.iter().all(|&c| c == counts[0]) {
            let cycles: Vec<u64> = images
                .iter()
                .map(|i| analyze_word(i, w, &cfg).unwrap().cycles)
                .collect();
            assert!(cycles.iter().all(|&c| c == cycles[0]), "{w}: {cycles:?}");
        }
    }
}

#[test]
fn scan_grows_linearly_on_absent_probes() {
    let a = Alphabet::ukrainian();
    let small = synth::generate(100, 7);
    let big = synth::generate(10_000, 7);
    for w in ["щщщщщ", "ьььь", "жжжжжжжж"] {
        let (_, c1) = naive_scan_baseline(&small, &a, w, ScanMode::FullScan);
        let (_, c2) = naive_scan_baseline(&big, &a, w, ScanMode::FirstMatch);
        assert_eq!((c1, c2), (100, 10_000));
    }
    let (r, c) = naive_scan_baseline(&big, &a, big[500].surface(), ScanMode::FirstMatch);
    assert_eq!(r.status, Status::Found);
    let first = big
        .iter()
        .position(|x| a.fold_str(x.surface()).unwrap() == a.fold_str(big[500].surface()).unwrap())
        .unwrap();
    assert_eq!(c, first as u64 + 1);
}

#[test]
fn sentence_cycles_follow_wave_law() {
    let entries = homonym_lexicon();
    let image = compile(&entries);
    let acc = AccDictionary::parse("т.д.\tabbr\n").unwrap();
    let text = "Мама і мами сталь й мамі т.д. хто мам.";
    let gs = segment(&RawDocument::new("d", text).unwrap(), &acc);
    for k in 1..=6usize {
        let cfg = AmpConfig {
            block_count: k,
            ..AmpConfig::default()
        };
        let sa = analyze_sentence(&image, &gs.sentences()[0], &acc, &cfg).unwrap();
        let computed: Vec<u64> = sa
            .per_word
            .iter()
            .filter(|p| p.result.status != Status::AccProvided)
            .map(|p| p.result.cycles)
            .collect();
        assert_eq!(computed.len(), 8);
        let expected: u64 = computed
            .chunks(k)
            .map(|c| c.iter().max().unwrap() + cfg.cycles.fixed)
            .sum();
        assert_eq!(sa.sentence_cycles, expected, "K = {k}");
        assert_eq!(wave_cycles(&computed, k, cfg.cycles.fixed), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_lexicons_agree_with_oracle(
        stems in prop::collection::vec("[абвгдеж]{0,6}", 1..30),
        endings in prop::collection::vec("[аоиі]{0,3}", 1..30),
        lemmas in prop::collection::vec(0u8..4, 1..30),
        probes in prop::collection::vec("[абвгдежаоиі]{1,9}", 1..30),
        scheme in prop::sample::select(vec!["2-4:independent", "2-3:independent,4-9:or", "2-2:or"]),
    ) {
        let a = Alphabet::ukrainian();
        let mut entries = Vec::new();
        for ((s, en), l) in stems.iter().zip(&endings).zip(&lemmas) {
            if s.is_empty() && en.is_empty() {
                continue;
            }
            entries.push(LexiconEntry::new(s.as_str(), en.as_str(), format!("л{l}"), [format!("t{l}")], "p").unwrap());
        }
        prop_assume!(!entries.is_empty());
        let opts = CompileOptions {
            scheme: CombinationScheme::parse(scheme).unwrap(),
            ..CompileOptions::default()
        };
        let image = compile_lexicon(&entries, &a, &opts).unwrap().image;
        let cfg = AmpConfig::default();
        let words: Vec<String> = entries.iter().map(|e| e.surface().to_string()).chain(probes).collect();
        for w in &words {
            let amp = analyze_word(&image, w, &cfg).unwrap();
            let oracle = oracle_lookup(&entries, &a, w);
            prop_assert_eq!(amp.sorted_readings(), oracle.sorted_readings(), "{}", w);
        }
    }

    #[test]
    fn absent_cycles_grow_with_length(len in 1usize..31, seed in any::<u64>()) {
        let image = compile(&synth::generate(200, 3));
        let cfg = AmpConfig::default();
        let w = &synth::random_words(1, seed, len, len)[0];
        let longer = format!("{w}щ");
        let (r1, r2) = (analyze_word(&image, w, &cfg).unwrap(), analyze_word(&image, &longer, &cfg).unwrap());
        if r1.status == Status::NotFound && r2.status == Status::NotFound {
            prop_assert!(r2.cycles > r1.cycles);
        }
        prop_assert!(r2.cycles > absent_cycles(len as u64, 4));
    }

    #[test]
    fn traces_are_deterministic_and_valid(idx in 0usize..400, junk in "[абвг]{1,6}") {
        let entries = synth::generate(400, 5);
        let image = compile(&entries);
        let cfg = AmpConfig::default();
        for w in [entries[idx].surface().to_string(), junk] {
            let (r1, t1) = analyze_word_traced(&image, &w, &cfg).unwrap();
            let (r2, t2) = analyze_word_traced(&image, &w, &cfg).unwrap();
            prop_assert_eq!(&r1, &r2);
            prop_assert_eq!(t1.to_string(), t2.to_string());
            prop_assert!(t1.is_valid_path());
            let n = w.chars().count();
            let recv = t1.steps.iter().filter(|s| matches!(s, TraceStep::ReceiveSymbol(_))).count();
            let emits = t1.steps.iter().filter(|s| matches!(s, TraceStep::EmitResultWord(_))).count();
            prop_assert_eq!(recv, n);
            prop_assert_eq!(emits, 2 * r1.readings.len());
            prop_assert_eq!(analyze_word(&image, &w, &cfg).unwrap(), r1);
        }
    }
}
