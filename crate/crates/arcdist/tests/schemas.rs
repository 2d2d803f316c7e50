//! The shipped JSON Schemas list exactly the fields the tool writes.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn load(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn keys(v: &Value) -> BTreeSet<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

fn required(schema: &Value) -> BTreeSet<String> {
    schema["required"]
        .as_array()
        .unwrap()
        .iter()
        .map(|k| k.as_str().unwrap().to_owned())
        .collect()
}

#[test]
fn every_reference_points_into_the_shared_definitions() {
    let dir = schema_dir();
    let common = load(&dir.join("common.schema.json"));
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let text = serde_json::to_string(&load(&entry.unwrap().path())).unwrap();
        for part in text.split("\"$ref\":\"").skip(1) {
            let target = &part[..part.find('"').unwrap()];
            let pointer = target.split_once('#').unwrap().1;
            assert!(common.pointer(pointer).is_some(), "dangling $ref {target}");
        }
        seen += 1;
    }
    assert_eq!(seen, 7);
}

#[test]
fn certificates_carry_exactly_the_schema_fields() {
    let dir = schema_dir();
    let out = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_arcdist"))
            .env("ARCDIST_SEED", "11")
            .args(args)
            .output()
            .unwrap();
        assert!(out.status.success(), "{args:?}");
    };
    let p = |name: &str| out.path().join(name).to_str().unwrap().to_owned();
    run(&["examples", "--out", &p("ex")]);
    run(&["dist", "--random-genus", "2", "-o", &p("d.json")]);

    let dist = load(&out.path().join("d.json"));
    let mut pair = serde_json::Map::new();
    for k in ["triangulation", "v", "w"] {
        pair.insert(k.into(), dist[k].clone());
    }
    std::fs::write(p("pair.json"), Value::Object(pair.clone()).to_string()).unwrap();
    run(&["path", &p("pair.json"), "-o", &p("p.json")]);

    let level = load(&out.path().join("ex/figure-eight.cert.json"));
    let input = load(&out.path().join("ex/figure-eight.input.json"));
    let cases = [
        ("distance-certificate", dist),
        ("path-certificate", load(&out.path().join("p.json"))),
        ("level-certificate", level.clone()),
        ("shadow-input", input),
        ("pair-input", Value::Object(pair)),
    ];
    for (name, doc) in cases {
        let schema = load(&dir.join(format!("{name}.schema.json")));
        assert_eq!(required(&schema), keys(&doc), "{name}");
        if let Some(f) = schema["properties"]["format"]["const"].as_str() {
            assert_eq!(doc["format"], f);
        }
    }

    let common = load(&dir.join("common.schema.json"));
    let defs = &common["$defs"];
    assert_eq!(required(&defs["position"]), keys(&level["position"]));
    assert_eq!(required(&defs["distance_body"]), keys(&level["best"]));
    assert_eq!(
        required(&defs["level"]),
        keys(&level["position"]["levels"][0])
    );
    assert_eq!(
        required(&defs["tube"]),
        keys(&level["position"]["tubes"][0])
    );
    assert_eq!(
        required(&defs["strand"]),
        keys(&level["position"]["tubes"][0]["p"])
    );
}
