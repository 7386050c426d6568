#![no_main]

use aggparadox::encoders::{parse_agenda_file, MAX_AGENDA_ENTRIES};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(agenda) = parse_agenda_file(text) {
        let entries = agenda.entries();
        assert!(entries.len() <= MAX_AGENDA_ENTRIES);
        for (i, e) in entries.iter().enumerate() {
            assert_eq!(entries[e.complement].complement, i, "complement is an involution");
            assert_ne!(e.complement, i);
        }
    }
});
