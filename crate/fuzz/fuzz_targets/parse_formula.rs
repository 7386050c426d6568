#![no_main]

use aggparadox::logic::{parse, IssueSet};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let issues = IssueSet::numbered(6).unwrap();
    if let Ok(f) = parse(text, &issues) {
        let printed = f.to_string();
        let back = parse(&printed, &issues).expect("printed formula reparses");
        assert_eq!(back.normalized(), f.normalized(), "printed as {printed}");
    }
});
