#![no_main]

use camina::workbench::reports::{parse_records, write_records};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = parse_records(text) {
        let mut buf = Vec::new();
        write_records(&records, &mut buf).unwrap();
        let again = parse_records(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(again, records);
    }
});
