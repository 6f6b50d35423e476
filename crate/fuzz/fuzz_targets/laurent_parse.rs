#![no_main]

use atlas_ring::LaurentPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = s.parse::<LaurentPoly>() {
        let printed = p.to_string();
        let back: LaurentPoly = printed.parse().expect("printed form parses");
        assert_eq!(back, p);
        assert_eq!(&p * &LaurentPoly::one(), p);
        assert!((&p - &p).is_zero());
    }
});
