//! Instance JSON: never panics; a document that builds must survive a
//! serialize/parse round trip, and must build iff `diagnose` finds nothing.

#![no_main]

use hyperarena::io::{instance_to_json, parse_instance, parse_instance_doc};
use hyperarena::BuildOptions;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = parse_instance_doc(text) else {
        return;
    };
    for options in [
        BuildOptions::default(),
        BuildOptions {
            tournament_mode: true,
        },
    ] {
        let built = doc.build(options);
        assert_eq!(built.is_ok(), doc.diagnose(options).is_empty());
        if let Ok(t) = built {
            let json = instance_to_json(&t);
            assert_eq!(parse_instance(&json, options).unwrap(), t);
        }
    }
});
