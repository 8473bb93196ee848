//! `--seeds A..B` and `--witness x,y` argument parsers.

#![no_main]

use hyperarena::io::{parse_seed_range, parse_vertex_pair};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_seed_range(text) {
        assert!(r.start <= r.end);
        assert_eq!(
            parse_seed_range(&format!("{}..{}", r.start, r.end)).unwrap(),
            r
        );
    }
    if let Ok((x, y)) = parse_vertex_pair(text) {
        assert_eq!(
            parse_vertex_pair(&format!("{},{}", x.label(), y.label())).unwrap(),
            (x, y)
        );
    }
});
