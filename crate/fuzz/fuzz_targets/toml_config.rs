#![no_main]

use libfuzzer_sys::fuzz_target;
use umbra::cli::RunConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(cfg) = RunConfig::from_toml(s) else { return };
    if let Ok(text) = cfg.to_toml() {
        let again = RunConfig::from_toml(&text).expect("serialized config re-parses");
        assert_eq!(again.to_toml().ok(), Some(text));
    }
    let _ = cfg.clone().merge(RunConfig::default());
});
