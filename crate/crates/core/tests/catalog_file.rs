//! The bundled record file must stay consistent with the embedded catalog:
//! same tensors, published bounds and visibilities, valid canonical digests.
//!
//! Regenerate after a catalog change with
//! `GHZBELL_WRITE_CATALOG=1 cargo test -p ghzbell --test catalog_file`.

use ghzbell::catalog;
use ghzbell::equiv;
use ghzbell::record::{format_record, read_records, InequalityRecord};
use std::path::Path;

fn bundled_path() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.rec"))
}

fn render() -> String {
    let mut out = String::new();
    out.push_str("# Bundled catalog: tight three-party correlation Bell inequalities with\n");
    out.push_str("# critical visibility below 1/2. One record per line; see record format docs.\n");
    for e in catalog::entries() {
        let digest = equiv::canonical_digest(&e.tensor).expect("catalog canonicalizes");
        let q = e.local_bound as f64 / e.visibility;
        let r = InequalityRecord {
            tensor: e.tensor.clone(),
            local_bound: e.local_bound,
            quantum_value: q,
            v_crit: e.visibility,
            tight: true,
            canonical_digest: digest,
            provenance: e.label.to_string(),
        };
        out.push_str(&format_record(&r).expect("catalog record is valid"));
        out.push('\n');
    }
    out
}

#[test]
fn bundled_file_matches_embedded_catalog() {
    let rendered = render();
    if std::env::var_os("GHZBELL_WRITE_CATALOG").is_some() {
        std::fs::write(bundled_path(), &rendered).expect("write bundled catalog");
    }
    let on_disk = std::fs::read_to_string(bundled_path()).expect("bundled catalog exists");
    assert_eq!(on_disk, rendered, "data/catalog.rec is stale; regenerate");
}

#[test]
fn bundled_file_parses_with_published_constants() {
    let records = read_records(std::fs::read_to_string(bundled_path()).unwrap().as_bytes())
        .expect("bundled catalog parses");
    assert_eq!(records.len(), catalog::entries().len());
    let v343 = records
        .iter()
        .find(|r| r.provenance == "V_343^1")
        .expect("V_343^1 present");
    assert_eq!(v343.local_bound, 44);
    assert!((v343.v_crit - 0.49967).abs() < 1e-12);
    for r in &records {
        r.validate().expect("record invariants hold");
        assert!(r.tight);
        assert_eq!(r.canonical_digest.len(), 64);
    }
}
