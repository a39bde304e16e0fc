#![no_main]

use agw_core::parse_table;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = parse_table(text) {
        assert_eq!(parse_table(&t.to_string()).unwrap(), t);
    }
});
