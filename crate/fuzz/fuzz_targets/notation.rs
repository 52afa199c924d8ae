#![no_main]

use blowup_core::graph::{graph6, notation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Copies and blow-ups can request large graphs; the order cap bounds them.
    if text.len() > 64 {
        return;
    }
    if let Ok(g) = notation::parse(text) {
        let again = notation::parse(&format!("g6:{}", graph6::encode(&g))).unwrap();
        assert_eq!(again, g);
    }
});
