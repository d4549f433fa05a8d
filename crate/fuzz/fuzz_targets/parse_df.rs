#![no_main]

use indrep_core::json::{df_to_json, parse_df};
use indrep_core::repparams::{df_inf_char, df_range};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(d) = parse_df(s) {
            let _ = df_range(&d);
            let _ = df_inf_char(&d);
            let back = serde_json::to_string(&df_to_json(&d).unwrap()).unwrap();
            assert_eq!(parse_df(&back).unwrap(), d);
        }
    }
});
