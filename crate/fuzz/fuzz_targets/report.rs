#![no_main]

use blowup_core::harness::{render, Format, VerificationReport};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(report) = serde_json::from_slice::<VerificationReport>(data) else { return };
    let _ = render(&report, Format::Text);
    let json = render(&report, Format::Json);
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
});
