use std::path::Path;
use std::process::{Command, Output};

fn arcdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcdist"))
        .args(args)
        .output()
        .unwrap()
}

fn arcdist_seeded(seed: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcdist"))
        .env("ARCDIST_SEED", seed)
        .args(args)
        .output()
        .unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn examples_pass_and_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let first = arcdist(&["examples", "--out", path(&a)]);
    assert!(first.status.success());
    let text = String::from_utf8(first.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 5);
    assert!(
        text.contains("PASS figure-eight: expected exact(2), got exact(2), 2-level certificate")
    );
    assert!(arcdist(&["examples", "--out", path(&b)]).status.success());
    for entry in std::fs::read_dir(&a).unwrap() {
        let name = entry.unwrap().file_name();
        let x = std::fs::read(a.join(&name)).unwrap();
        let y = std::fs::read(b.join(&name)).unwrap();
        assert_eq!(x, y, "{name:?} differs between runs");
        if name.to_str().unwrap().ends_with(".cert.json") {
            assert!(arcdist(&["check-cert", path(&a.join(&name))])
                .status
                .success());
        }
    }
}

#[test]
fn level_command_matches_the_bundled_certificate() {
    let dir = tempfile::tempdir().unwrap();
    assert!(arcdist(&["examples", "--out", path(dir.path())])
        .status
        .success());
    let input = dir.path().join("torus-2-3.input.json");
    let out = dir.path().join("level.json");
    assert!(arcdist(&["level", path(&input), "-o", path(&out)])
        .status
        .success());
    assert_eq!(
        std::fs::read(&out).unwrap(),
        std::fs::read(dir.path().join("torus-2-3.cert.json")).unwrap()
    );
}

#[test]
fn seeded_distance_and_path() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("d.json");
    let o = arcdist_seeded(
        "11",
        &[
            "dist",
            "--random-genus",
            "2",
            "--steps",
            "25",
            "-o",
            path(&cert),
        ],
    );
    assert!(o.status.success());
    let again = arcdist_seeded("11", &["dist", "--random-genus", "2", "--steps", "25"]);
    assert_eq!(again.stdout, std::fs::read(&cert).unwrap());
    assert!(arcdist(&["check-cert", path(&cert)]).status.success());

    // The certificate's triangulation and pair double as path input.
    let doc: serde_json::Value = serde_json::from_slice(&again.stdout).unwrap();
    let pair = serde_json::json!({
        "triangulation": doc["triangulation"],
        "v": doc["v"],
        "w": doc["w"],
    });
    let input = dir.path().join("pair.json");
    std::fs::write(&input, pair.to_string()).unwrap();
    let p = dir.path().join("p.json");
    assert!(arcdist(&["path", path(&input), "-o", path(&p)])
        .status
        .success());
    assert!(arcdist(&["check-cert", path(&p)]).status.success());

    let svg = dir.path().join("svg");
    assert!(arcdist(&["render", path(&p), "--svg", path(&svg)])
        .status
        .success());
    let drawing = std::fs::read_to_string(svg.join("path.svg")).unwrap();
    assert!(drawing.starts_with("<svg") && drawing.trim_end().ends_with("</svg>"));
}

#[test]
fn render_writes_one_page_per_level() {
    let dir = tempfile::tempdir().unwrap();
    assert!(arcdist(&["examples", "--out", path(dir.path())])
        .status
        .success());
    let svg = dir.path().join("svg");
    let cert = dir.path().join("figure-eight.cert.json");
    assert!(arcdist(&["render", path(&cert), "--svg", path(&svg)])
        .status
        .success());
    for f in ["pair.svg", "level-1.svg", "level-2.svg"] {
        assert!(svg.join(f).exists(), "{f}");
    }
    assert!(!svg.join("level-3.svg").exists());
}

#[test]
fn triangulation_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = arcdist(&["tri", "--standard", "3"]);
    assert!(o.status.success());
    let file = dir.path().join("t.json");
    std::fs::write(&file, &o.stdout).unwrap();
    let o = arcdist(&["tri", "--check", path(&file)]);
    assert!(o.status.success());
    assert!(String::from_utf8(o.stdout)
        .unwrap()
        .contains("V = 2, E = 18, F = 12"));
}

#[test]
fn errors_have_distinct_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    };
    let code = |args: &[&str]| arcdist(args).status.code().unwrap();

    assert_eq!(
        code(&["check-cert", path(&dir.path().join("missing.json"))]),
        3
    );
    let junk = write("junk.json", "{ not json");
    assert_eq!(code(&["check-cert", path(&junk)]), 4);
    let unknown = write(
        "unknown.json",
        r#"{"format": "something-else", "version": 1}"#,
    );
    assert_eq!(code(&["check-cert", path(&unknown)]), 5);
    let bad_tri = write(
        "bad.json",
        r#"{"genus": 1, "triangles": [[1, -4, 3], [2, -5, 4], [-1, -6, 5], [-2, -3, 1]], "p1": {"triangle": 0, "corner": 0}}"#,
    );
    assert_eq!(code(&["tri", "--check", path(&bad_tri)]), 6);

    let t = r#"{"genus": 1, "triangles": [[1, -4, 3], [2, -5, 4], [-1, -6, 5], [-2, -3, 6]], "p1": {"triangle": 0, "corner": 0}}"#;
    let edge = r#"{"start": {"triangle": 0, "corner": 0}, "crossings": [], "end": {"triangle": 0, "corner": 2}}"#;
    let foreign = r#"{"base": "0123456789abcdef", "start": {"triangle": 0, "corner": 0}, "crossings": [], "end": {"triangle": 0, "corner": 2}}"#;
    let mismatch = write(
        "mismatch.json",
        &format!(r#"{{"triangulation": {t}, "v": {edge}, "w": {foreign}}}"#),
    );
    assert_eq!(code(&["path", path(&mismatch)]), 7);
    let backwards = r#"{"start": {"triangle": 0, "corner": 2}, "crossings": [], "end": {"triangle": 0, "corner": 0}}"#;
    let bad_arc = write(
        "badarc.json",
        &format!(r#"{{"triangulation": {t}, "v": {edge}, "w": {backwards}}}"#),
    );
    assert_eq!(code(&["path", path(&bad_arc)]), 8);

    let good = dir.path().join("good.json");
    let pair = write(
        "pair.json",
        &format!(r#"{{"triangulation": {t}, "v": {edge}, "w": {edge}}}"#),
    );
    assert!(arcdist(&["dist", path(&pair), "-o", path(&good)])
        .status
        .success());
    let mut doc: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&good).unwrap()).unwrap();
    doc["verdict"] = serde_json::json!({"exact": 1});
    let forged = write("forged.json", &doc.to_string());
    assert_eq!(code(&["check-cert", path(&forged)]), 1);
}

#[test]
fn standard_tables_match_the_shipped_data() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    for g in 1..=4 {
        let file = data.join(format!("standard-genus-{g}.json"));
        let out = arcdist(&["tri", "--standard", &g.to_string()]);
        assert!(out.status.success());
        assert_eq!(out.stdout, std::fs::read(&file).unwrap(), "genus {g}");
        let check = arcdist(&["tri", "--check", path(&file)]);
        assert!(check.status.success());
        let text = String::from_utf8(check.stdout).unwrap();
        let expect = format!("V = 2, E = {}, F = {}", 6 * g, 4 * g);
        assert!(text.contains(&expect), "{text}");
    }
}
