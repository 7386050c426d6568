#![no_main]

use aggparadox::logic::parse_formula_file;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(file) = parse_formula_file(text) {
        let rendered = file.render();
        let back = parse_formula_file(&rendered).expect("rendered file reparses");
        assert_eq!(back.issues, file.issues);
        assert_eq!(back.formulas.len(), file.formulas.len());
        for (a, b) in back.formulas.iter().zip(&file.formulas) {
            assert_eq!(a.normalized(), b.normalized());
        }
    }
});
