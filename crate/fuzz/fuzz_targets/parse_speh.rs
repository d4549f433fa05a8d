#![no_main]

use indrep_core::json::{parse_speh, speh_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_speh(s) {
            let back = serde_json::to_string(&speh_to_json(&p)).unwrap();
            assert_eq!(parse_speh(&back).unwrap(), p);
        }
    }
});
