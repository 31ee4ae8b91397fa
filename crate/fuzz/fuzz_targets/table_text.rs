#![no_main]
use libfuzzer_sys::fuzz_target;
use primspace::format;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        // parse_table dispatches to both formats
        if let Ok(t) = format::parse_table(s) {
            let text = format::write_table_text(&t);
            assert_eq!(format::parse_table_text(&text).unwrap(), t);
        }
    }
});
