#![no_main]
use libfuzzer_sys::fuzz_target;
use primspace::format;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(tables) = format::parse_table_stream(s) {
            let text = format::write_table_stream(&tables);
            assert_eq!(format::parse_table_stream(&text).unwrap(), tables);
        }
    }
});
