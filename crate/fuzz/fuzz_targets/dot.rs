#![no_main]

use hyperarena::io::{graph_to_dot, parse_dot};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_dot(text) {
        assert_eq!(parse_dot(&graph_to_dot(&g)).unwrap(), g);
    }
});
