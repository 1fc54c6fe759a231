#![no_main]

use libfuzzer_sys::fuzz_target;
use umbra::cli::parse_param_list;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(values) = parse_param_list(s) else { return };
    let text: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    let again = parse_param_list(&text.join(",")).expect("rendered list re-parses");
    assert_eq!(again.len(), values.len());
});
