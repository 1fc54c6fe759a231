#![no_main]

use libfuzzer_sys::fuzz_target;
use umbra::cli::{RangeSpec, MAX_POINTS};
use umbra::Number;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(r) = s.parse::<RangeSpec>() else { return };
    let back: RangeSpec = r.to_string().parse().expect("display re-parses");
    if r.start.is_exact() && r.stop.is_exact() {
        assert_eq!(back, r);
    }
    if let Ok(points) = r.points(&Number::ratio(1, 2)) {
        assert!(!points.is_empty() && points.len() <= MAX_POINTS + 1);
    }
    let _ = r.integers();
});
