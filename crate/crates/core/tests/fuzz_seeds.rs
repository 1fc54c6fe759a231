//! Replays the fuzz corpus seeds through the same round-trip checks the fuzz
//! targets make, so the parsers stay covered on stable toolchains.

use std::fs;
use std::path::PathBuf;

use umbra::cli::{parse_complex, parse_param_list, RangeSpec, RunConfig};
use umbra::Number;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(!files.is_empty());
    files.into_iter().map(|p| fs::read_to_string(p).unwrap()).collect()
}

#[test]
fn number_literal_seeds() {
    for s in seeds("number_literal") {
        if let Ok(v) = s.parse::<Number>() {
            let back: Number = v.to_string().parse().unwrap_or_else(|e| panic!("{s:?} -> {v}: {e}"));
            if v.is_exact() {
                assert_eq!(back, v);
            }
            let json = serde_json::to_string(&v).unwrap();
            let _: Number = serde_json::from_str(&json).unwrap();
        }
        let _ = parse_complex(&s);
    }
}

#[test]
fn range_seeds() {
    for s in seeds("range_parse") {
        let Ok(r) = s.parse::<RangeSpec>() else { continue };
        assert_eq!(r.to_string().parse::<RangeSpec>().unwrap(), r, "{s:?}");
        if let Ok(points) = r.points(&Number::ratio(1, 2)) {
            assert!(!points.is_empty());
        }
    }
}

#[test]
fn toml_config_seeds() {
    let mut parsed = 0;
    for s in seeds("toml_config") {
        let Ok(cfg) = RunConfig::from_toml(&s) else { continue };
        parsed += 1;
        let text = cfg.to_toml().unwrap();
        let again = RunConfig::from_toml(&text).unwrap();
        assert_eq!(again.to_toml().unwrap(), text);
    }
    assert!(parsed >= 4);
}

#[test]
fn param_list_seeds() {
    for s in seeds("param_list") {
        let Ok(values) = parse_param_list(&s) else { continue };
        let text: Vec<String> = values.iter().map(Number::to_string).collect();
        assert_eq!(parse_param_list(&text.join(",")).unwrap().len(), values.len());
    }
}

mod random_text {
    use super::*;
    use proptest::prelude::*;

    const ALPHABET: &str = "[0-9eE+./:ij, \\-\\[\\]]{0,16}";

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn number_literals_round_trip(s in ALPHABET) {
            if let Ok(v) = s.parse::<Number>() {
                let back: Number = v.to_string().parse().unwrap();
                if v.is_exact() {
                    prop_assert_eq!(back, v);
                }
            }
            let _ = parse_complex(&s);
        }

        #[test]
        fn ranges_round_trip(s in ALPHABET) {
            if let Ok(r) = s.parse::<RangeSpec>() {
                let back: RangeSpec = r.to_string().parse().unwrap();
                if r.start.is_exact() && r.stop.is_exact() {
                    prop_assert_eq!(back, r.clone());
                }
                let _ = r.points(&Number::ratio(1, 3));
                let _ = r.integers();
            }
        }

        #[test]
        fn param_lists_round_trip(s in ALPHABET) {
            if let Ok(values) = parse_param_list(&s) {
                let text: Vec<String> = values.iter().map(Number::to_string).collect();
                prop_assert_eq!(parse_param_list(&text.join(",")).unwrap().len(), values.len());
            }
        }
    }
}
