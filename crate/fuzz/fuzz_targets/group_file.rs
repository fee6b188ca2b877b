#![no_main]

use camina::workbench::groupfile::parse_group_text;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(entry) = parse_group_text(text) {
        for g in &entry.generators {
            assert_eq!(g.degree(), entry.degree);
        }
        // keep generation cheap
        let _ = entry.table(512);
    }
});
