#![no_main]
use libfuzzer_sys::fuzz_target;
use primspace::ElemSet;

fuzz_target!(|data: &[u8]| {
    if let Ok(set) = serde_json::from_slice::<ElemSet>(data) {
        let text = serde_json::to_string(&set).unwrap();
        assert_eq!(serde_json::from_str::<ElemSet>(&text).unwrap(), set);
    }
});
