#![no_main]

use blowup_core::oracle::parse_line;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else { return };
    if let Ok(entry) = parse_line(line) {
        let text = serde_json::to_string(&entry).unwrap();
        assert_eq!(parse_line(&text).unwrap(), entry);
    }
});
