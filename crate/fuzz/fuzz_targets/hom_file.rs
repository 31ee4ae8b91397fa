#![no_main]
use libfuzzer_sys::fuzz_target;
use primspace::format;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(h) = format::parse_hom(s) {
            for a in 0..h.source().order() {
                for b in 0..h.source().order() {
                    let ab = h.source().mul(a, b);
                    assert_eq!(h.apply(ab), h.target().mul(h.apply(a), h.apply(b)));
                }
            }
        }
    }
});
