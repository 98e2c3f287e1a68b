#![no_main]

use ebsearch::domains::korf::parse_korf_instances;
use ebsearch::domains::tiles::stp_space;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(states) = parse_korf_instances(text) {
        for s in states {
            // Parsed instances must be valid puzzle states.
            stp_space(s, 1_000_000).unwrap();
        }
    }
});
