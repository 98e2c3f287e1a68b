#![no_main]

use ebsearch::domains::graph::ExplicitGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = ExplicitGraph::from_dump(text) {
        let again = ExplicitGraph::from_dump(&g.to_dump()).unwrap();
        assert_eq!(again.to_dump(), g.to_dump());
    }
});
