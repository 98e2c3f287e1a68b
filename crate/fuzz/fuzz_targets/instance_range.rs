#![no_main]

use ebsearch_bench::InstanceRange;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = text.parse::<InstanceRange>() {
        if let InstanceRange::Span { start, end } = r {
            if end.saturating_sub(start) > 1 << 16 {
                return;
            }
        }
        let ids = r.ids();
        let again: InstanceRange = r.to_string().parse().unwrap();
        assert_eq!(again.ids(), ids);
    }
});
