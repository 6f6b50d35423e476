#![no_main]

use atlas_cli::listing::to_json;
use atlas_cli::parse_listing;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((listing, profiles)) = parse_listing(s) {
        assert_eq!(listing.records.len(), profiles.len());
        let (again, profiles2) = parse_listing(&to_json(&listing)).expect("re-serialized listing parses");
        assert_eq!(again, listing);
        assert_eq!(profiles2, profiles);
    }
});
