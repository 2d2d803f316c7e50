//! Distances in the arc complex, with evidence that can be re-checked using
//! only intersection numbers.
//!
//! Distances 0 and 1 follow from equality and disjointness. Distance 2 holds
//! exactly when, with the two arcs in minimal position, some complementary
//! region meets both marked points: an arc through that region is disjoint
//! from both. Anything larger is reported as bounds, the upper one coming from
//! the surgery path or a bounded breadth-first search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::arc::{enumerate_arcs, intersection, ArcWord};
use crate::error::Error;
use crate::overlay::build_overlay;
use crate::surface::Triangulation;
use crate::surgery::path_between;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Exact(u32),
    Bounds { lower: u32, upper: u32 },
}

impl Verdict {
    pub fn upper(self) -> u32 {
        match self {
            Verdict::Exact(d) => d,
            Verdict::Bounds { upper, .. } => upper,
        }
    }

    pub fn lower(self) -> u32 {
        match self {
            Verdict::Exact(d) => d,
            Verdict::Bounds { lower, .. } => lower,
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            Verdict::Exact(d) => Some(d),
            Verdict::Bounds { .. } => None,
        }
    }
}

/// Limits for [`bounded_search`]: arcs with at most `max_len` crossings,
/// paths of at most `max_depth` steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_len: usize,
    pub max_depth: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_len: 3,
            max_depth: 4,
        }
    }
}

/// Verdict on a pair plus the evidence behind it.
///
/// `path` always runs from `v` to `w` and realises the upper bound; for
/// `Exact(2)` it is `(v, witness, w)`. For bounds, `search` records the limits
/// of the search that was run, if any, since the search is only complete
/// relative to them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub v: ArcWord,
    pub w: ArcWord,
    pub verdict: Verdict,
    pub intersection: usize,
    pub witness: Option<ArcWord>,
    pub path: Vec<ArcWord>,
    pub search: Option<SearchBounds>,
}

/// Finite lists of shadows for the two handlebodies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowPairInput {
    pub v_side: Vec<ArcWord>,
    pub w_side: Vec<ArcWord>,
}

impl ShadowPairInput {
    pub fn validate(&self, t: &Triangulation) -> Result<(), Error> {
        if self.v_side.is_empty() || self.w_side.is_empty() {
            return Err(Error::EmptyShadowList);
        }
        for a in self.v_side.iter().chain(&self.w_side) {
            a.check(t)?;
        }
        Ok(())
    }
}

/// Minimum over all supplied pairs, with the pair that attains it.
///
/// This bounds the knot's arc distance from above: the true invariant
/// minimises over every shadow, and the lists are finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSetCertificate {
    pub best: DistanceCertificate,
    pub v_index: usize,
    pub w_index: usize,
    pub verdict: Verdict,
    pub pairs: usize,
}

/// Exact distance for 0, 1 and 2; bounds `[3, U]` otherwise.
pub fn classify(
    t: &Triangulation,
    v: &ArcWord,
    w: &ArcWord,
    bounds: Option<SearchBounds>,
) -> Result<DistanceCertificate, Error> {
    v.check(t)?;
    w.check(t)?;
    let cert = |verdict, intersection, witness, path, search| DistanceCertificate {
        v: v.clone(),
        w: w.clone(),
        verdict,
        intersection,
        witness,
        path,
        search,
    };
    if v == w {
        return Ok(cert(Verdict::Exact(0), 0, None, vec![v.clone()], None));
    }
    let i = intersection(t, v, w)?;
    if i == 0 {
        return Ok(cert(
            Verdict::Exact(1),
            0,
            None,
            vec![v.clone(), w.clone()],
            None,
        ));
    }
    let overlay = build_overlay(t, v, w)?;
    if overlay.crossing_count() != i {
        return Err(Error::Postcondition(
            "overlay crossing count differs from i(v, w)",
        ));
    }
    if overlay.has_p1_p2_region() {
        let u = overlay.witness()?.ok_or(Error::Postcondition(
            "no witness routed through a P1-P2 region",
        ))?;
        if intersection(t, &u, v)? != 0 || intersection(t, &u, w)? != 0 {
            return Err(Error::Postcondition(
                "distance-2 witness meets an input arc",
            ));
        }
        let path = vec![v.clone(), u.clone(), w.clone()];
        return Ok(cert(Verdict::Exact(2), i, Some(u), path, None));
    }
    let mut path = path_between(t, v, w)?.into_arcs();
    path.reverse();
    if let Some(b) = bounds {
        if let Some(found) = bounded_search(t, v, w, b) {
            if found.len() < path.len() {
                path = found;
            }
        }
    }
    let upper = (path.len() - 1) as u32;
    Ok(cert(
        Verdict::Bounds { lower: 3, upper },
        i,
        None,
        path,
        bounds,
    ))
}

/// Breadth-first search from `v` to `w` in the disjointness graph on
/// `{v, w}` together with every embedded arc of at most `max_len` crossings.
///
/// Vertices are scanned in canonical order and the first discovery wins, so
/// the returned path does not depend on anything but the inputs. Returns
/// `None` when `w` is not reached within `max_depth` steps.
pub fn bounded_search(
    t: &Triangulation,
    v: &ArcWord,
    w: &ArcWord,
    bounds: SearchBounds,
) -> Option<Vec<ArcWord>> {
    if v == w {
        return Some(vec![v.clone()]);
    }
    let mut nodes: Vec<ArcWord> = vec![v.clone()];
    for a in enumerate_arcs(t, bounds.max_len) {
        if a != *v && a != *w {
            nodes.push(a);
        }
    }
    nodes.push(w.clone());
    let target = nodes.len() - 1;
    let mut parent = vec![usize::MAX; nodes.len()];
    let mut depth = vec![usize::MAX; nodes.len()];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        if depth[x] >= bounds.max_depth {
            continue;
        }
        // On the last step only the target can complete a path.
        let first = if depth[x] + 1 == bounds.max_depth {
            target
        } else {
            0
        };
        for y in first..nodes.len() {
            if depth[y] != usize::MAX {
                continue;
            }
            if intersection(t, &nodes[x], &nodes[y]).ok()? != 0 {
                continue;
            }
            depth[y] = depth[x] + 1;
            parent[y] = x;
            if y == target {
                let mut path = vec![nodes[target].clone()];
                let mut cur = target;
                while cur != 0 {
                    cur = parent[cur];
                    path.push(nodes[cur].clone());
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// Classify every pair and keep the smallest verdict.
pub fn pair_set_distance(
    t: &Triangulation,
    input: &ShadowPairInput,
    bounds: Option<SearchBounds>,
) -> Result<PairSetCertificate, Error> {
    input.validate(t)?;
    let mut best: Option<(DistanceCertificate, usize, usize)> = None;
    let mut pairs = 0;
    for (a, v) in input.v_side.iter().enumerate() {
        for (b, w) in input.w_side.iter().enumerate() {
            pairs += 1;
            let c = classify(t, v, w, bounds)?;
            let key = |c: &DistanceCertificate| (c.verdict.upper(), c.verdict.exact().is_none());
            if best.as_ref().is_none_or(|(bc, _, _)| key(&c) < key(bc)) {
                best = Some((c, a, b));
            }
        }
    }
    let (best, v_index, w_index) = best.unwrap();
    // Every non-exact pair has lower bound 3, above any exact value 0..=2.
    let verdict = best.verdict;
    Ok(PairSetCertificate {
        best,
        v_index,
        w_index,
        verdict,
        pairs,
    })
}

/// Re-check a certificate from its evidence alone.
pub fn verify(t: &Triangulation, c: &DistanceCertificate) -> Result<(), Error> {
    c.v.check(t)?;
    c.w.check(t)?;
    for a in &c.path {
        a.check(t)?;
    }
    let fail = Error::Postcondition;
    if c.path.first() != Some(&c.v) || c.path.last() != Some(&c.w) {
        return Err(fail("path does not join v to w"));
    }
    for (k, pair) in c.path.windows(2).enumerate() {
        if intersection(t, &pair[0], &pair[1])? != 0 {
            return Err(Error::InvalidSequence { index: k + 1 });
        }
    }
    let i = intersection(t, &c.v, &c.w)?;
    if i != c.intersection {
        return Err(fail("recorded intersection number is wrong"));
    }
    if c.verdict.upper() as usize != c.path.len() - 1 {
        return Err(fail("path length does not match the upper bound"));
    }
    if c.verdict.lower() > c.verdict.upper() {
        return Err(fail("lower bound exceeds upper bound"));
    }
    match c.verdict {
        Verdict::Exact(0) => {
            if c.v != c.w {
                return Err(fail("distance 0 needs equal arcs"));
            }
        }
        Verdict::Exact(1) => {
            if c.v == c.w || i != 0 {
                return Err(fail("distance 1 needs distinct disjoint arcs"));
            }
        }
        Verdict::Exact(2) => {
            if i == 0 {
                return Err(fail("distance 2 needs crossing arcs"));
            }
            let u = c
                .witness
                .as_ref()
                .ok_or(fail("distance 2 needs a witness"))?;
            if c.path.get(1) != Some(u) {
                return Err(fail("witness is not the middle of the path"));
            }
        }
        Verdict::Exact(_) => return Err(fail("exact verdicts stop at 2")),
        Verdict::Bounds { lower, .. } => {
            if lower != 3 {
                return Err(fail("lower bound must be 3"));
            }
            if i == 0 || c.v == c.w {
                return Err(fail("pair is closer than its lower bound"));
            }
            if build_overlay(t, &c.v, &c.w)?.has_p1_p2_region() {
                return Err(fail("a region meets both marked points, so distance is 2"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::random_arc;

    #[test]
    fn equal_and_disjoint() {
        let t = Triangulation::standard(1).unwrap();
        let e = t.p1_p2_edges();
        let v = ArcWord::from_edge(&t, e[0]).unwrap();
        let w = ArcWord::from_edge(&t, e[1]).unwrap();
        let c0 = classify(&t, &v, &v, None).unwrap();
        assert_eq!(c0.verdict, Verdict::Exact(0));
        let c1 = classify(&t, &v, &w, None).unwrap();
        assert_eq!(c1.verdict, Verdict::Exact(1));
        verify(&t, &c0).unwrap();
        verify(&t, &c1).unwrap();
        let s = bounded_search(
            &t,
            &v,
            &w,
            SearchBounds {
                max_len: 1,
                max_depth: 1,
            },
        )
        .unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn random_certificates_verify() {
        let t = Triangulation::standard(1).unwrap();
        for seed in 0..25 {
            let v = random_arc(&t, seed, 8).unwrap();
            let w = random_arc(&t, seed + 77, 8).unwrap();
            let c = classify(&t, &v, &w, None).unwrap();
            verify(&t, &c).unwrap();
            assert!(c.verdict.upper() as usize <= c.intersection + 1);
        }
    }

    #[test]
    fn empty_list_rejected() {
        let t = Triangulation::standard(1).unwrap();
        let v = ArcWord::from_edge(&t, t.p1_p2_edges()[0]).unwrap();
        let input = ShadowPairInput {
            v_side: vec![v],
            w_side: vec![],
        };
        assert_eq!(
            pair_set_distance(&t, &input, None),
            Err(Error::EmptyShadowList)
        );
    }
}
