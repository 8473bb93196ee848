#![no_main]

use hyperarena::classify_shape;
use hyperarena::io::{graph_to_dot, graph_to_json, parse_dot, parse_graph_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph_json(text) {
        assert_eq!(parse_graph_json(&graph_to_json(&g)).unwrap(), g);
        if g.n() > 0 {
            assert_eq!(parse_dot(&graph_to_dot(&g)).unwrap().n(), g.n());
        }
        let _ = classify_shape(&g);
    }
});
