#![no_main]

use camina::workbench::catalog::builtin;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(label) = std::str::from_utf8(data) else { return };
    if label.len() > 64 {
        return;
    }
    if let Ok(entry) = builtin(label) {
        let _ = entry.table(512);
    }
});
