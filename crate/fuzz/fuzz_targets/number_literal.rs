#![no_main]

use libfuzzer_sys::fuzz_target;
use umbra::cli::parse_complex;
use umbra::Number;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = s.parse::<Number>() {
        // display output parses back to the same value
        let back: Number = v.to_string().parse().expect("display re-parses");
        if v.is_exact() {
            assert_eq!(back, v);
        }
        let _ = v.to_f64();
        let json = serde_json::to_string(&v).unwrap();
        let _: Number = serde_json::from_str(&json).expect("json re-parses");
    }
    let _ = parse_complex(s);
});
