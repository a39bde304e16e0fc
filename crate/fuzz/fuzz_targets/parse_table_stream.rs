#![no_main]

use agw_core::{parse_table_stream, write_table_stream};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(stream) = parse_table_stream(text) {
        if let Some(summary) = stream.summary {
            let again = parse_table_stream(&write_table_stream(&stream.tables, &summary)).unwrap();
            assert_eq!(again, stream);
        }
    }
});
