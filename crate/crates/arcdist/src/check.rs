//! Re-checking certificates from their serialised form.
//!
//! Nothing here trusts the producer: arcs are re-parsed and re-reduced,
//! intersection numbers recomputed, and every claimed disjointness tested.

use arcdist_core::arc::intersection;
use arcdist_core::distance::{classify, verify, Verdict};
use arcdist_core::leveling::{leveling_to_arc_sequence, validate_sequence};
use arcdist_core::{Error, Triangulation};

use crate::format::{arcs_to_core, Certificate, DistanceCertJson, LevelCertJson, PathCertJson};
use crate::CliError;

fn failed(msg: impl Into<String>) -> CliError {
    CliError::Verification(msg.into())
}

fn engine(e: Error) -> CliError {
    match e {
        Error::Postcondition(m) => failed(m),
        Error::InvalidSequence { index } => {
            failed(format!("path arcs {} and {index} intersect", index - 1))
        }
        other => CliError::from(other),
    }
}

/// One-line description of what was verified.
pub fn check(cert: &Certificate) -> Result<String, CliError> {
    match cert {
        Certificate::Distance(c) => check_distance(c),
        Certificate::Path(c) => check_path(c),
        Certificate::Level(c) => check_level(c),
    }
}

fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::Exact(d) => format!("exact({d})"),
        Verdict::Bounds { lower, upper } => format!("bounds [{lower}, {upper}]"),
    }
}

pub fn check_distance(c: &DistanceCertJson) -> Result<String, CliError> {
    let t = c.triangulation.to_core()?;
    let cert = c.body.to_core(&t)?;
    verify(&t, &cert).map_err(engine)?;
    Ok(format!(
        "distance certificate ok: {} with i(v, w) = {}",
        verdict_text(cert.verdict),
        cert.intersection
    ))
}

pub fn check_path(c: &PathCertJson) -> Result<String, CliError> {
    let t = c.triangulation.to_core()?;
    let v = c.v.to_core(&t)?;
    let w = c.w.to_core(&t)?;
    let path = arcs_to_core(&t, &c.path)?;
    if path.first() != Some(&w) || path.last() != Some(&v) {
        return Err(failed("path does not run from w to v"));
    }
    if let Some(bad) = validate_sequence(&t, &path).first() {
        return Err(failed(format!(
            "path arcs {} and {} intersect",
            bad.index - 1,
            bad.index
        )));
    }
    let i = intersection(&t, &v, &w).map_err(engine)?;
    if i != c.intersection {
        return Err(failed("recorded intersection number is wrong"));
    }
    if path.len() - 1 > i + 1 {
        return Err(failed("path is longer than i(v, w) + 1"));
    }
    let descent = path
        .iter()
        .map(|u| intersection(&t, &v, u))
        .collect::<Result<Vec<_>, _>>()
        .map_err(engine)?;
    if descent != c.descent {
        return Err(failed("recorded descent profile is wrong"));
    }
    if descent.windows(2).any(|p| p[1] >= p[0] && p[0] != 0) {
        return Err(failed("intersection with v does not strictly decrease"));
    }
    Ok(format!(
        "path certificate ok: {} steps, i(v, w) = {i}",
        path.len() - 1
    ))
}

fn rank(v: Verdict) -> (u32, bool) {
    (v.upper(), v.exact().is_none())
}

pub fn check_level(c: &LevelCertJson) -> Result<String, CliError> {
    let t: Triangulation = c.triangulation.to_core()?;
    let v_side = arcs_to_core(&t, &c.v_side)?;
    let w_side = arcs_to_core(&t, &c.w_side)?;
    if v_side.is_empty() || w_side.is_empty() {
        return Err(CliError::Schema("shadow lists must be non-empty".into()));
    }
    let best = c.best.to_core(&t)?;
    if v_side.get(c.v_index) != Some(&best.v) || w_side.get(c.w_index) != Some(&best.w) {
        return Err(failed("best pair does not match the indexed shadows"));
    }
    verify(&t, &best).map_err(engine)?;
    for (a, v) in v_side.iter().enumerate() {
        for (b, w) in w_side.iter().enumerate() {
            if (a, b) == (c.v_index, c.w_index) {
                continue;
            }
            let other = classify(&t, v, w, best.search).map_err(engine)?;
            if rank(other.verdict) < rank(best.verdict) {
                return Err(failed(format!(
                    "pair ({a}, {b}) is closer than the reported best"
                )));
            }
        }
    }
    let level = c.level.to_core();
    if level != best.verdict {
        return Err(failed("level verdict differs from the distance verdict"));
    }
    if c.trivial_knot != (level == Verdict::Exact(0)) {
        return Err(failed("trivial-knot flag is wrong"));
    }
    if !c.knot_upper_bound_only {
        return Err(failed(
            "finite shadow lists only bound the knot invariant from above",
        ));
    }
    match (&c.position, c.trivial_knot) {
        (None, true) => {}
        (Some(_), true) => return Err(failed("trivial knot carries no level position")),
        (None, false) => return Err(failed("level position missing")),
        (Some(p), false) => {
            let pos = p.to_core(&t)?;
            let seq = leveling_to_arc_sequence(&t, &pos).map_err(|e| match e {
                Error::InvalidLevelPosition(m) => failed(m),
                other => engine(other),
            })?;
            if seq.arcs() != best.path.as_slice() {
                return Err(failed("level position does not encode the certified path"));
            }
            if pos.num_levels() as u32 != level.upper() {
                return Err(failed("level count differs from the upper bound"));
            }
            if pos.ambient_genus != t.genus() * pos.num_levels() as u32 {
                return Err(failed("ambient genus is wrong"));
            }
        }
    }
    Ok(format!(
        "level certificate ok: level number {} over {} pairs",
        verdict_text(level),
        v_side.len() * w_side.len()
    ))
}
