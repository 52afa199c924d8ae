#![no_main]

use blowup_core::graph::graph6;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = graph6::decode(text) {
        assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }
    let _ = graph6::decode_lines(text);
});
