#![no_main]

use indrep_core::json::{parse_weight_value, weight_json};
use indrep_core::rootsys::{Basis, Weight};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) {
        if let Ok(coords) = parse_weight_value(&v) {
            let w = Weight::new(Basis::E, coords.clone());
            assert_eq!(parse_weight_value(&weight_json(&w)).unwrap(), coords);
        }
    }
});
