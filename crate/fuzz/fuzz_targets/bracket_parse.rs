#![no_main]

use atlas_freealg::BracketTerm;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = s.parse::<BracketTerm>() {
        let printed = t.to_string();
        let back: BracketTerm = printed.parse().expect("printed form parses");
        assert_eq!(back, t);
        assert!(t.word().len() >= 1);
    }
});
