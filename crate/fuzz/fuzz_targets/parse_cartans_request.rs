#![no_main]

use indrep_core::cartan::enumerate_cartans;
use indrep_core::json::parse_cartans_request;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok((family, kappa, _)) = parse_cartans_request(s) {
            let _ = enumerate_cartans(&family, kappa.total());
        }
    }
});
