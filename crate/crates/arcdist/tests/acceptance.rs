//! Acceptance suite. Runs without the test harness so that every criterion
//! prints one PASS or FAIL line; the process fails if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use arcdist::corpus::{build_examples, run_record};
use arcdist::format::{
    to_pretty, ArcJson, DistanceCertJson, LevelCertJson, PathCertJson, TriangulationJson,
};
use arcdist_core::arc::{intersection, intersection_by_flips, random_arc};
use arcdist_core::distance::{bounded_search, classify, SearchBounds, ShadowPairInput, Verdict};
use arcdist_core::leveling::{
    arcs_to_leveling, crossing_bound, level_number_report, leveling_to_arc_sequence, ArcSequence,
};
use arcdist_core::overlay::build_overlay;
use arcdist_core::surface::validate;
use arcdist_core::surgery::{descent_profile, path_between, surgery_step};
use arcdist_core::{ArcWord, Triangulation};

const STEPS: usize = 25;

/// Seeded pairs on the standard triangulation of genus `g`.
fn pairs(g: u32, count: usize) -> (Triangulation, Vec<(ArcWord, ArcWord)>) {
    let t = Triangulation::standard(g).unwrap();
    let out = (0..count as u64)
        .map(|s| {
            let v = random_arc(&t, 1_000 * u64::from(g) + s, STEPS).unwrap();
            let w = random_arc(&t, 500_000 + 1_000 * u64::from(g) + s, STEPS).unwrap();
            (v, w)
        })
        .collect();
    (t, out)
}

/// The first `count` seeded pairs that intersect.
fn crossing_pairs(g: u32, count: usize) -> (Triangulation, Vec<(ArcWord, ArcWord)>) {
    let t = Triangulation::standard(g).unwrap();
    let mut out = Vec::new();
    let mut s = 0u64;
    while out.len() < count {
        let v = random_arc(&t, 7_000_000 + 1_000_000 * u64::from(g) + s, STEPS).unwrap();
        let w = random_arc(&t, 9_000_000 + 1_000_000 * u64::from(g) + s, STEPS).unwrap();
        if intersection(&t, &v, &w).unwrap() > 0 {
            out.push((v, w));
        }
        s += 1;
    }
    (t, out)
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn triangulation_laws() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for g in 1..=4u32 {
        let t = Triangulation::standard(g).unwrap();
        let counts = (t.num_vertices(), t.num_edges(), t.num_triangles());
        let want = (2, 6 * g as usize, 4 * g as usize);
        if !validate(&t.to_table()).is_empty() || counts != want {
            bad.push(g);
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < Duration::from_secs(1),
        format!("genus 1..4 give (V, E, F) = (2, 6g, 4g); failures {bad:?}; {took:.2?}"),
    )
}

fn dual_oracle() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut disagreements = 0;
    for g in [1, 2] {
        let (t, ps) = pairs(g, 300);
        for (v, w) in &ps {
            total += 1;
            if intersection(&t, v, w).unwrap() != intersection_by_flips(&t, v, w).unwrap() {
                disagreements += 1;
            }
        }
    }
    let took = start.elapsed();
    outcome(
        disagreements == 0 && took < Duration::from_secs(120),
        format!("{total} pairs, {disagreements} disagreements; {took:.2?}"),
    )
}

fn surgery_postconditions() -> Outcome {
    let mut total = 0;
    let mut bad = 0;
    for g in [1, 2] {
        let (t, ps) = crossing_pairs(g, 300);
        for (v, w) in &ps {
            total += 1;
            let ok = surgery_step(&t, v, w).is_ok_and(|s| {
                let before = intersection(&t, v, w).unwrap();
                intersection(&t, w, &s.w_prime).unwrap() == 0
                    && intersection(&t, v, &s.w_prime).unwrap() < before
                    && s.before == before
            });
            if !ok {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0,
        format!("{total} crossing pairs: w' misses w and meets v less often; {bad} failures"),
    )
}

fn surgery_path_bound() -> Outcome {
    let mut total = 0;
    let mut bad = 0;
    for g in [1, 2] {
        let (t, ps) = crossing_pairs(g, 300);
        for (v, w) in &ps {
            total += 1;
            let i = intersection(&t, v, w).unwrap();
            let ok = path_between(&t, v, w).is_ok_and(|seq| {
                let arcs = seq.arcs();
                arcs.len() - 1 <= i + 1
                    && arcs.first() == Some(w)
                    && arcs.last() == Some(v)
                    && arcs
                        .windows(2)
                        .all(|p| intersection(&t, &p[0], &p[1]).unwrap() == 0)
            });
            if !ok {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0,
        format!("{total} crossing pairs: path length at most i(v, w) + 1, disjointness re-checked; {bad} failures"),
    )
}

fn example_values() -> Outcome {
    let mut seen = Vec::new();
    let mut ok = true;
    for r in build_examples() {
        let o = run_record(&r).unwrap();
        let want = if r.name == "trivial" {
            Verdict::Exact(0)
        } else if r.name.starts_with("torus-") {
            Verdict::Exact(1)
        } else if r.name == "figure-eight" {
            Verdict::Exact(2)
        } else {
            r.expected
        };
        ok &= o.got == want && o.passed;
        seen.push(format!("{}={:?}", r.name, o.got));
    }
    let names: Vec<&str> = seen.iter().map(|s| s.split('=').next().unwrap()).collect();
    ok &= names.contains(&"trivial") && names.contains(&"figure-eight");
    ok &= names.iter().filter(|n| n.starts_with("torus-")).count() >= 2;
    outcome(ok, seen.join(", "))
}

fn leveling_equality() -> Outcome {
    let mut sequences = 0;
    let mut trips_bad = 0;
    let mut exact = 0;
    let mut exact_bad = 0;
    for g in [1, 2] {
        let (t, ps) = crossing_pairs(g, 80);
        for (v, w) in &ps {
            let seq = path_between(&t, v, w).unwrap();
            sequences += 1;
            let back = arcs_to_leveling(&t, &seq).and_then(|p| {
                if p.ambient_genus != g * p.num_levels() as u32
                    || p.tubes.len() + 1 != p.num_levels()
                {
                    return Err(arcdist_core::Error::InvalidLevelPosition("genus law"));
                }
                leveling_to_arc_sequence(&t, &p)
            });
            if back.as_ref() != Ok(&seq) {
                trips_bad += 1;
            }
            let c = classify(&t, v, w, None).unwrap();
            if let Some(d) = c.verdict.exact().filter(|&d| d >= 1) {
                exact += 1;
                let ok = arcs_to_leveling(&t, &ArcSequence::new(c.path.clone())).is_ok_and(|p| {
                    p.num_levels() == d as usize
                        && p.validate().is_ok()
                        && p.ambient_genus == g * d
                        && leveling_to_arc_sequence(&t, &p).is_ok()
                });
                if !ok {
                    exact_bad += 1;
                }
            }
        }
        let (t, ps) = pairs(g, 40);
        for (v, w) in &ps {
            if let Some(d) = classify(&t, v, w, None)
                .unwrap()
                .verdict
                .exact()
                .filter(|&d| d == 1)
            {
                exact += 1;
                let seq = ArcSequence::new(vec![v.clone(), w.clone()]);
                let ok = arcs_to_leveling(&t, &seq).is_ok_and(|p| {
                    p.num_levels() == d as usize && p.ambient_genus == g && p.tubes.is_empty()
                });
                if !ok {
                    exact_bad += 1;
                }
            }
        }
    }
    outcome(
        sequences >= 100 && trips_bad == 0 && exact_bad == 0 && exact > 0,
        format!(
            "{sequences} round trips ({trips_bad} failures); {exact} exact verdicts d >= 1 \
             with d-level certificates ({exact_bad} failures)"
        ),
    )
}

fn crossing_bound_check() -> Outcome {
    let mut total = 0;
    let mut violations = 0;
    for g in [1, 2] {
        let (t, ps) = pairs(g, 150);
        for (v, w) in &ps {
            total += 1;
            let input = ShadowPairInput {
                v_side: vec![v.clone()],
                w_side: vec![w.clone()],
            };
            let report = level_number_report(&t, &input, None).unwrap();
            let n = intersection(&t, v, w).unwrap() + 2;
            let bound = crossing_bound(&t, v, w).unwrap();
            if report.level.upper() as usize > n - 1 || bound != n - 1 {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{total} pairs: level upper bound at most n - 1 with n = i(v, w) + 2; {violations} violations"),
    )
}

/// Search bounds are set per pair: arcs up to two crossings longer than the
/// longer input, enough to contain the overlay's witness whenever one exists.
fn distance_two_cross_check() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut disagreements = 0;
    let mut twos = 0;
    for (g, cap) in [(1, 10), (2, 8)] {
        let t = Triangulation::standard(g).unwrap();
        let mut s = 0u64;
        let mut taken = 0;
        while taken < 110 {
            let v = random_arc(&t, 20_000_000 + s, 30).unwrap();
            let w = random_arc(&t, 30_000_000 + s, 30).unwrap();
            s += 1;
            let longest = v.len().max(w.len());
            if longest > cap || intersection(&t, &v, &w).unwrap() == 0 {
                continue;
            }
            taken += 1;
            total += 1;
            let bounds = SearchBounds {
                max_len: longest + 2,
                max_depth: 2,
            };
            let face = build_overlay(&t, &v, &w).unwrap().has_p1_p2_region();
            let search = bounded_search(&t, &v, &w, bounds).is_some();
            twos += usize::from(face);
            if face != search {
                disagreements += 1;
            }
        }
    }
    // Random pairs of short arcs are nearly all at distance 2, so add pairs
    // picked for having no region through both marked points.
    let t = Triangulation::standard(1).unwrap();
    let mut s = 0u64;
    let mut far = 0;
    while far < 40 {
        let v = random_arc(&t, 40_000_000 + s, 30).unwrap();
        let w = random_arc(&t, 50_000_000 + s, 30).unwrap();
        s += 1;
        let longest = v.len().max(w.len());
        if longest > 12
            || intersection(&t, &v, &w).unwrap() == 0
            || build_overlay(&t, &v, &w).unwrap().has_p1_p2_region()
        {
            continue;
        }
        far += 1;
        total += 1;
        let bounds = SearchBounds {
            max_len: longest + 2,
            max_depth: 2,
        };
        if bounded_search(&t, &v, &w, bounds).is_some() {
            disagreements += 1;
        }
    }
    let took = start.elapsed();
    outcome(
        total >= 200 && disagreements == 0 && took < Duration::from_secs(300),
        format!("{total} crossing pairs, {twos} at distance 2, {disagreements} disagreements; {took:.2?}"),
    )
}

fn check_cert(bin: &str, path: &Path) -> bool {
    Command::new(bin)
        .arg("check-cert")
        .arg(path)
        .output()
        .is_ok_and(|o| o.status.success())
}

fn certificate_integrity() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_arcdist");
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    let mut write = |name: String, text: String| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        files.push(p);
    };
    for r in build_examples() {
        let o = run_record(&r).unwrap();
        write(format!("{}.json", r.name), to_pretty(&o.certificate));
    }
    for g in [1, 2] {
        let (t, ps) = pairs(g, 15);
        for (k, (v, w)) in ps.iter().enumerate() {
            let c = classify(&t, v, w, None).unwrap();
            write(
                format!("d{g}-{k}.json"),
                to_pretty(&DistanceCertJson::from_core(&t, &c)),
            );
            let seq = path_between(&t, v, w).unwrap();
            let doc = PathCertJson {
                format: arcdist::format::PATH_FORMAT.into(),
                version: arcdist::format::VERSION,
                triangulation: TriangulationJson::from_core(&t),
                v: ArcJson::from_core(&t, v),
                w: ArcJson::from_core(&t, w),
                intersection: intersection(&t, v, w).unwrap(),
                path: arcdist::format::arcs_from_core(&t, seq.arcs()),
                descent: descent_profile(&t, v, &seq).unwrap(),
            };
            write(format!("p{g}-{k}.json"), to_pretty(&doc));
            let input = ShadowPairInput {
                v_side: vec![v.clone(), w.clone()],
                w_side: vec![w.clone()],
            };
            let report = level_number_report(&t, &input, None).unwrap();
            let doc = LevelCertJson::from_core(&t, &input.v_side, &input.w_side, &report);
            write(format!("l{g}-{k}.json"), to_pretty(&doc));
        }
    }
    let failed: Vec<_> = files.iter().filter(|p| !check_cert(bin, p)).collect();

    // A certificate with a wrong claim must be refused.
    let forged = files
        .iter()
        .find(|p| p.file_name().unwrap().to_str().unwrap().starts_with('d'))
        .map(|p| {
            let text = std::fs::read_to_string(p).unwrap();
            let mut doc: DistanceCertJson = serde_json::from_str(&text).unwrap();
            doc.body.intersection += 1;
            let q = dir.path().join("forged.json");
            std::fs::write(&q, to_pretty(&doc)).unwrap();
            q
        })
        .unwrap();
    let refused = !check_cert(bin, &forged);
    outcome(
        failed.is_empty() && refused,
        format!(
            "{} certificates re-verified by check-cert from file, {} failures; forged certificate refused: {refused}",
            files.len(),
            failed.len()
        ),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("triangulation laws", triangulation_laws),
        ("intersection dual-oracle agreement", dual_oracle),
        ("surgery postconditions", surgery_postconditions),
        ("surgery path length bound", surgery_path_bound),
        ("example values", example_values),
        (
            "distance equals level number at data level",
            leveling_equality,
        ),
        ("level bound from crossing count", crossing_bound_check),
        (
            "distance-2 criterion against bounded search",
            distance_two_cross_check,
        ),
        ("certificate integrity", certificate_integrity),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!(
            "{} criterion {}: {name}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            k + 1,
            o.detail
        );
        if !o.ok {
            failures += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
