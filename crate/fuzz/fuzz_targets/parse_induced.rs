#![no_main]

use indrep_core::json::{induced_to_json, parse_induced};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(ip) = parse_induced(s) {
            let back = serde_json::to_string(&induced_to_json(&ip).unwrap()).unwrap();
            assert_eq!(parse_induced(&back).unwrap(), ip);
        }
    }
});
