#![no_main]
use libfuzzer_sys::fuzz_target;
use primspace::catalog;
use primspace::primitive::{verify_primitive_witness, PrimitiveWitness};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(pw) = serde_json::from_str::<PrimitiveWitness>(s) {
            let again: PrimitiveWitness = serde_json::from_str(&serde_json::to_string(&pw).unwrap()).unwrap();
            assert_eq!(again, pw);
            let b22 = catalog::b2xb2();
            let _ = verify_primitive_witness(&b22, &pw);
        }
    }
});
