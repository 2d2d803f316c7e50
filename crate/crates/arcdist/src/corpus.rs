//! Bundled example records.
//!
//! Records are built deterministically on the standard genus-1
//! triangulation, whose four triangles tile a unit square with `P1` at the
//! corners and `P2` at the centre. Torus-knot shadows are found by searching
//! disjoint pairs of short arcs for one whose union is a closed curve in the
//! required homology class.

use arcdist_core::arc::{enumerate_arcs, intersection};
use arcdist_core::distance::{classify, ShadowPairInput, Verdict};
use arcdist_core::leveling::level_number_report;
use arcdist_core::{ArcWord, Triangulation};

use crate::format::{LevelCertJson, ShadowInputJson, TriangulationJson};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleRecord {
    pub name: String,
    pub genus: u32,
    pub input: ShadowPairInput,
    pub expected: Verdict,
    pub provenance: String,
}

/// Longest arcs considered when searching for shadows.
const SEARCH_LEN: usize = 8;

/// Twice the displacement, in the universal cover of the square torus, from
/// the start of `a` to its end. Only meaningful on the standard genus-1
/// triangulation: triangle `k` has corners at square vertex `k`, square
/// vertex `k + 1` and the centre, and its side 0 is side `k` of the square.
pub fn displacement(t: &Triangulation, a: &ArcWord) -> (i64, i64) {
    debug_assert_eq!(t.to_table(), Triangulation::standard_table(1).unwrap());
    const SQUARE: [(i64, i64); 4] = [(0, 0), (2, 0), (2, 2), (0, 2)];
    const SHIFT: [(i64, i64); 4] = [(0, -2), (2, 0), (0, 2), (-2, 0)];
    let point = |tri: usize, corner: u8| match corner {
        0 => SQUARE[tri],
        1 => SQUARE[(tri + 1) % 4],
        _ => (1, 1),
    };
    let start = point(a.start().triangle(), a.start().position);
    let mut offset = (0, 0);
    for s in a.crossings() {
        if s.position() == 0 {
            let d = SHIFT[s.triangle()];
            offset = (offset.0 + d.0, offset.1 + d.1);
        }
    }
    let end = point(a.end().triangle(), a.end().position);
    (end.0 + offset.0 - start.0, end.1 + offset.1 - start.1)
}

/// Homology class of the closed curve `v` followed by `w` reversed.
pub fn loop_class(t: &Triangulation, v: &ArcWord, w: &ArcWord) -> (i64, i64) {
    let (a, b) = (displacement(t, v), displacement(t, w));
    ((a.0 - b.0) / 2, (a.1 - b.1) / 2)
}

fn same_torus_knot(class: (i64, i64), p: i64, q: i64) -> bool {
    let (x, y) = (class.0.abs(), class.1.abs());
    (x, y) == (p, q) || (x, y) == (q, p)
}

/// First disjoint pair, in enumeration order, whose union has class `(p, q)`
/// up to sign and swapping the two factors.
pub fn torus_knot_shadows(t: &Triangulation, p: i64, q: i64) -> Option<(ArcWord, ArcWord)> {
    let arcs = enumerate_arcs(t, SEARCH_LEN);
    for v in &arcs {
        for w in &arcs {
            if v != w
                && same_torus_knot(loop_class(t, v, w), p, q)
                && intersection(t, v, w).ok()? == 0
            {
                return Some((v.clone(), w.clone()));
            }
        }
    }
    None
}

/// First crossing pair whose complement has a region meeting both marked
/// points, with `v` the first edge of the triangulation.
pub fn distance_two_shadows(t: &Triangulation) -> Option<(ArcWord, ArcWord)> {
    let arcs = enumerate_arcs(t, SEARCH_LEN);
    let v = arcs.first()?.clone();
    arcs.iter()
        .find(|w| matches!(classify(t, &v, w, None), Ok(c) if c.verdict == Verdict::Exact(2)))
        .map(|w| (v.clone(), w.clone()))
}

fn pair(v: ArcWord, w: ArcWord) -> ShadowPairInput {
    ShadowPairInput {
        v_side: vec![v],
        w_side: vec![w],
    }
}

pub fn build_examples() -> Vec<ExampleRecord> {
    let t = Triangulation::standard(1).unwrap();
    let mut out = Vec::new();
    let edge = ArcWord::from_edge(&t, t.p1_p2_edges()[0]).unwrap();
    out.push(ExampleRecord {
        name: "trivial".into(),
        genus: 1,
        input: pair(edge.clone(), edge),
        expected: Verdict::Exact(0),
        provenance: "identical shadows: the knot bounds a disk meeting the surface in one arc"
            .into(),
    });
    for (p, q) in [(2, 3), (3, 4), (2, 5)] {
        let (v, w) =
            torus_knot_shadows(&t, p, q).expect("torus-knot shadows within the search length");
        out.push(ExampleRecord {
            name: format!("torus-{p}-{q}"),
            genus: 1,
            input: pair(v, w),
            expected: Verdict::Exact(1),
            provenance: format!(
                "disjoint shadows whose union is a ({p}, {q}) curve on the torus, \
                 found by searching arcs of at most {SEARCH_LEN} crossings"
            ),
        });
    }
    let (v, w) = distance_two_shadows(&t).expect("a distance-two pair within the search length");
    out.push(ExampleRecord {
        name: "figure-eight".into(),
        genus: 1,
        input: pair(v, w),
        expected: Verdict::Exact(2),
        provenance: "stand-in for genus-1 figure-eight shadows: a crossing pair \
                     with a common disjoint arc, chosen by search; the knot type is not \
                     computed"
            .into(),
    });
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordOutcome {
    pub name: String,
    pub expected: Verdict,
    pub got: Verdict,
    pub levels: Option<usize>,
    pub passed: bool,
    pub certificate: LevelCertJson,
}

pub fn run_record(r: &ExampleRecord) -> Result<RecordOutcome, CliError> {
    let t = Triangulation::standard(r.genus)?;
    let report = level_number_report(&t, &r.input, None)?;
    let levels = report.certificate.as_ref().map(|p| p.num_levels());
    let level_ok = match r.expected {
        Verdict::Exact(0) => levels.is_none() && report.trivial_knot,
        Verdict::Exact(d) => levels == Some(d as usize),
        Verdict::Bounds { .. } => true,
    };
    let certificate = LevelCertJson::from_core(&t, &r.input.v_side, &r.input.w_side, &report);
    let passed =
        report.level == r.expected && level_ok && crate::check::check_level(&certificate).is_ok();
    Ok(RecordOutcome {
        name: r.name.clone(),
        expected: r.expected,
        got: report.level,
        levels,
        passed,
        certificate,
    })
}

/// The shadow input of a record as a document `arcdist level` accepts.
pub fn record_input(r: &ExampleRecord) -> ShadowInputJson {
    let t = Triangulation::standard(r.genus).unwrap();
    ShadowInputJson {
        triangulation: TriangulationJson::from_core(&t),
        v_side: crate::format::arcs_from_core(&t, &r.input.v_side),
        w_side: crate::format::arcs_from_core(&t, &r.input.w_side),
    }
}
