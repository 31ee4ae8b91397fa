#![no_main]
use libfuzzer_sys::fuzz_target;
use primspace::{format, FiniteSemigroup};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let direct = format::parse_table_json(s).ok();
        let derived = serde_json::from_str::<FiniteSemigroup>(s).ok();
        if let Some(t) = &direct {
            assert_eq!(format::parse_table_json(&format::write_table_json(t)).unwrap(), *t);
        }
        if let (Some(a), Some(b)) = (&direct, &derived) {
            assert_eq!(a, b);
        }
    }
});
