#![no_main]

use blowup_core::formulas::BlowupKind;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(kind) = BlowupKind::parse(text) {
        assert_eq!(BlowupKind::parse(&kind.to_string()).unwrap(), kind);
    }
});
