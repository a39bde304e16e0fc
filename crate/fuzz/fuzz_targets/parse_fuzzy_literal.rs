#![no_main]

use agw_core::parse_fuzzy_literal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = parse_fuzzy_literal(text) {
        assert_eq!(parse_fuzzy_literal(&f.to_string()).unwrap(), f);
    }
});
