#![no_main]

use aggparadox::aggregation::parse_profile_file;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(profile) = parse_profile_file(text) {
        let back = parse_profile_file(&profile.render()).expect("rendered profile reparses");
        assert_eq!(back, profile);
    }
});
