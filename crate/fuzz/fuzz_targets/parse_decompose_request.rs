#![no_main]

use indrep_core::decompose::{kv_decompose, verdict};
use indrep_core::json::{parse_decompose_request, DecomposeRequest};
use indrep_core::Error;
use libfuzzer_sys::fuzz_target;

// Parsing plus the cheap downstream steps; internal errors are bugs.
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        match parse_decompose_request(s) {
            Ok(DecomposeRequest::DegeneratePs(p)) => {
                let _ = kv_decompose(&p);
            }
            Ok(DecomposeRequest::Induced(ip)) => {
                if ip.factors.len() <= 4 {
                    if let Err(Error::Internal(e)) = verdict(&ip) {
                        panic!("internal error: {e}");
                    }
                }
            }
            Err(Error::Internal(e)) => panic!("internal error while parsing: {e}"),
            Err(_) => {}
        }
    }
});
