//! Arc sequences and the knot positions they describe.
//!
//! A sequence `s_0, ..., s_n` of arcs, each disjoint from the next, builds a
//! knot on `n` parallel copies `F_1, ..., F_n` of the surface joined by
//! `n - 1` tubes. Level 1 carries `s_0`, level `n` carries `s_n`, and tube
//! `T_j` sits over `s_j`. Short stubs `α_j` (at `P1`) and `β_j` (at `P2`) on
//! the two levels adjacent to `T_j` connect the marked points to the feet of
//! the vertical strands `p_j` and `q_j` running through the tube.
//!
//! The position is recorded symbolically: arc words, stub labels and the
//! order in which the strands close up into the knot.

use alloc::vec;
use alloc::vec::Vec;

use crate::arc::{intersection, ArcWord};
use crate::distance::{
    pair_set_distance, PairSetCertificate, SearchBounds, ShadowPairInput, Verdict,
};
use crate::error::Error;
use crate::surface::{Marked, Triangulation};

/// Arcs `s_0, ..., s_n` over one triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSequence {
    arcs: Vec<ArcWord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceFault {
    /// Arc `index` is not a valid embedded arc on the triangulation.
    InvalidArc,
    /// Arcs `index - 1` and `index` intersect this many times.
    Crossing(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceViolation {
    pub index: usize,
    pub fault: SequenceFault,
}

impl ArcSequence {
    pub fn new(arcs: Vec<ArcWord>) -> Self {
        ArcSequence { arcs }
    }

    pub fn arcs(&self) -> &[ArcWord] {
        &self.arcs
    }

    pub fn into_arcs(self) -> Vec<ArcWord> {
        self.arcs
    }

    /// Number of steps, one less than the number of arcs.
    pub fn steps(&self) -> usize {
        self.arcs.len().saturating_sub(1)
    }

    pub fn validate(&self, t: &Triangulation) -> Vec<SequenceViolation> {
        validate_sequence(t, &self.arcs)
    }
}

/// Every arc must be embedded and each must miss the next.
pub fn validate_sequence(t: &Triangulation, arcs: &[ArcWord]) -> Vec<SequenceViolation> {
    let mut out = Vec::new();
    let ok: Vec<bool> = arcs.iter().map(|a| a.check(t).is_ok()).collect();
    for (index, good) in ok.iter().enumerate() {
        if !good {
            out.push(SequenceViolation {
                index,
                fault: SequenceFault::InvalidArc,
            });
        }
    }
    for index in 1..arcs.len() {
        if !(ok[index - 1] && ok[index]) {
            continue;
        }
        match intersection(t, &arcs[index - 1], &arcs[index]) {
            Ok(0) => {}
            Ok(n) => out.push(SequenceViolation {
                index,
                fault: SequenceFault::Crossing(n),
            }),
            Err(_) => out.push(SequenceViolation {
                index,
                fault: SequenceFault::InvalidArc,
            }),
        }
    }
    out.sort_by_key(|v| v.index);
    out
}

/// A point where two strands of the knot meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KnotPoint {
    /// The copy of a marked point on a level.
    At { level: u32, point: Marked },
    /// Where the vertical strand of a tube near `point` meets a level.
    Foot {
        level: u32,
        tube: u32,
        point: Marked,
    },
}

/// Which piece of the knot a strand is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StrandKind {
    /// A full arc `s_index` lying in a level.
    Arc(u32),
    /// The stub of `s_arc` at `end`: `α` for `P1`, `β` for `P2`.
    Stub { arc: u32, end: Marked },
    /// The strand through tube `T_tube` near `end`: `p` for `P1`, `q` for `P2`.
    Vertical { tube: u32, end: Marked },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strand {
    pub kind: StrandKind,
    pub from: KnotPoint,
    pub to: KnotPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    /// 1-based.
    pub index: u32,
    pub strands: Vec<Strand>,
    /// Words of the full arcs on this level, in strand order.
    pub arcs: Vec<ArcWord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tube {
    /// 1-based, joining levels `index` and `index + 1`.
    pub index: u32,
    pub core: Option<ArcWord>,
    pub p: Strand,
    pub q: Strand,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPosition {
    pub genus: u32,
    pub ambient_genus: u32,
    pub levels: Vec<Level>,
    pub tubes: Vec<Tube>,
    /// Every strand once, in the order met walking along the knot.
    pub cycle: Vec<StrandKind>,
}

fn at(level: u32, point: Marked) -> KnotPoint {
    KnotPoint::At { level, point }
}

fn foot(level: u32, tube: u32, point: Marked) -> KnotPoint {
    KnotPoint::Foot { level, tube, point }
}

fn stub(level: u32, arc: u32, end: Marked) -> Strand {
    Strand {
        kind: StrandKind::Stub { arc, end },
        from: at(level, end),
        to: foot(level, arc, end),
    }
}

fn vertical(tube: u32, end: Marked) -> Strand {
    Strand {
        kind: StrandKind::Vertical { tube, end },
        from: foot(tube, tube, end),
        to: foot(tube + 1, tube, end),
    }
}

fn arc_strand(level: u32, index: u32, from: Marked) -> Strand {
    Strand {
        kind: StrandKind::Arc(index),
        from: at(level, from),
        to: at(level, from.other()),
    }
}

/// Strands each level must carry for an `n`-level position.
fn expected_levels(n: u32) -> Vec<Vec<Strand>> {
    if n == 1 {
        return vec![vec![
            arc_strand(1, 0, Marked::P1),
            arc_strand(1, 1, Marked::P2),
        ]];
    }
    let mut levels = Vec::new();
    for j in 1..=n {
        let mut s = Vec::new();
        if j == 1 {
            s.push(arc_strand(1, 0, Marked::P1));
        }
        if j > 1 {
            s.push(stub(j, j - 1, Marked::P1));
        }
        if j < n {
            s.push(stub(j, j, Marked::P1));
        }
        if j > 1 {
            s.push(stub(j, j - 1, Marked::P2));
        }
        if j < n {
            s.push(stub(j, j, Marked::P2));
        }
        if j == n {
            s.push(arc_strand(n, n, Marked::P2));
        }
        levels.push(s);
    }
    levels
}

impl LevelPosition {
    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// All strands, levels first, then tubes.
    pub fn strands(&self) -> Vec<Strand> {
        let mut out: Vec<Strand> = self
            .levels
            .iter()
            .flat_map(|l| l.strands.iter().copied())
            .collect();
        for t in &self.tubes {
            out.push(t.p);
            out.push(t.q);
        }
        out
    }

    /// Check the structural invariants; arc words are checked separately by
    /// [`leveling_to_arc_sequence`].
    pub fn validate(&self) -> Result<(), Error> {
        let bad = Error::InvalidLevelPosition;
        let n = self.levels.len() as u32;
        if n == 0 {
            return Err(bad("no levels"));
        }
        if self.tubes.len() as u32 != n - 1 {
            return Err(bad("tube count must be one less than the level count"));
        }
        if self.ambient_genus != self.genus * n {
            return Err(bad(
                "ambient genus must be the base genus times the level count",
            ));
        }
        for (k, (level, want)) in self.levels.iter().zip(expected_levels(n)).enumerate() {
            if level.index != k as u32 + 1 {
                return Err(bad("levels out of order"));
            }
            if level.strands != want {
                return Err(bad("level strands do not follow the construction"));
            }
            let full = want
                .iter()
                .filter(|s| matches!(s.kind, StrandKind::Arc(_)))
                .count();
            if level.arcs.len() != full {
                return Err(bad("level is missing an arc word"));
            }
        }
        for (k, tube) in self.tubes.iter().enumerate() {
            let j = k as u32 + 1;
            if tube.index != j
                || tube.p != vertical(j, Marked::P1)
                || tube.q != vertical(j, Marked::P2)
            {
                return Err(bad("tube must carry its two vertical strands"));
            }
        }
        let strands = self.strands();
        if self.cycle
            != walk_cycle(&strands).ok_or(bad("strands do not close up into one cycle"))?
        {
            return Err(bad("recorded cycle does not match the strands"));
        }
        Ok(())
    }
}

/// Follow the strands from the first one. Every point must meet exactly two
/// strands and the walk must use all of them.
fn walk_cycle(strands: &[Strand]) -> Option<Vec<StrandKind>> {
    let mut points: Vec<(KnotPoint, usize)> = Vec::new();
    for (k, s) in strands.iter().enumerate() {
        points.push((s.from, k));
        points.push((s.to, k));
    }
    points.sort();
    for group in points.chunk_by(|a, b| a.0 == b.0) {
        if group.len() != 2 {
            return None;
        }
    }
    let partner = |p: KnotPoint, not: usize| {
        let i = points.partition_point(|x| x.0 < p);
        if points[i].1 == not {
            points[i + 1].1
        } else {
            points[i].1
        }
    };
    let mut order = Vec::with_capacity(strands.len());
    let mut used = vec![false; strands.len()];
    let (mut cur, mut tip) = (0usize, strands.first()?.to);
    loop {
        if used[cur] {
            break;
        }
        used[cur] = true;
        order.push(strands[cur].kind);
        let next = partner(tip, cur);
        tip = if strands[next].from == tip {
            strands[next].to
        } else {
            strands[next].from
        };
        cur = next;
    }
    // A two-strand cycle revisits strand 0 through its other end; anything
    // shorter than the full list means several components.
    (order.len() == strands.len()).then_some(order)
}

/// Build the position from a sequence with at least one step.
pub fn arcs_to_leveling(t: &Triangulation, seq: &ArcSequence) -> Result<LevelPosition, Error> {
    if let Some(v) = seq.validate(t).first() {
        return Err(Error::InvalidSequence { index: v.index });
    }
    let arcs = seq.arcs();
    if arcs.len() < 2 {
        return Err(Error::InvalidLevelPosition(
            "a position needs at least two arcs",
        ));
    }
    let n = (arcs.len() - 1) as u32;
    let levels: Vec<Level> = expected_levels(n)
        .into_iter()
        .enumerate()
        .map(|(k, strands)| {
            let words = strands
                .iter()
                .filter_map(|s| match s.kind {
                    StrandKind::Arc(i) => Some(arcs[i as usize].clone()),
                    _ => None,
                })
                .collect();
            Level {
                index: k as u32 + 1,
                strands,
                arcs: words,
            }
        })
        .collect();
    let tubes = (1..n)
        .map(|j| Tube {
            index: j,
            core: Some(arcs[j as usize].clone()),
            p: vertical(j, Marked::P1),
            q: vertical(j, Marked::P2),
        })
        .collect();
    let mut pos = LevelPosition {
        genus: t.genus(),
        ambient_genus: t.genus() * n,
        levels,
        tubes,
        cycle: Vec::new(),
    };
    pos.cycle = walk_cycle(&pos.strands()).ok_or(Error::Postcondition(
        "constructed strands do not form a cycle",
    ))?;
    pos.validate()?;
    Ok(pos)
}

/// Read off `s_0`, the tube cores, and `s_n`, then re-check disjointness.
pub fn leveling_to_arc_sequence(
    t: &Triangulation,
    pos: &LevelPosition,
) -> Result<ArcSequence, Error> {
    pos.validate()?;
    if pos.genus != t.genus() {
        return Err(Error::BaseMismatch);
    }
    let n = pos.levels.len();
    let mut arcs = Vec::with_capacity(n + 1);
    if n == 1 {
        arcs.extend(pos.levels[0].arcs.iter().cloned());
    } else {
        arcs.push(pos.levels[0].arcs[0].clone());
        for tube in &pos.tubes {
            arcs.push(
                tube.core
                    .clone()
                    .ok_or(Error::InvalidLevelPosition("tube has no core arc"))?,
            );
        }
        arcs.push(pos.levels[n - 1].arcs[0].clone());
    }
    let seq = ArcSequence::new(arcs);
    if let Some(v) = seq.validate(t).first() {
        return Err(Error::InvalidSequence { index: v.index });
    }
    Ok(seq)
}

/// Level number restated from the best pair in a shadow list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub distance: PairSetCertificate,
    /// Same shape as the distance verdict.
    pub level: Verdict,
    /// Position realising the upper bound; absent only for distance 0.
    pub certificate: Option<LevelPosition>,
    /// Equal shadows: the trivial knot, for which no level count is defined.
    pub trivial_knot: bool,
    /// The equality of level number and distance holds for nontrivial knots;
    /// over finite shadow lists the value is an upper bound for the knot.
    pub knot_upper_bound_only: bool,
}

pub fn level_number_report(
    t: &Triangulation,
    input: &ShadowPairInput,
    bounds: Option<SearchBounds>,
) -> Result<LevelReport, Error> {
    let distance = pair_set_distance(t, input, bounds)?;
    let trivial_knot = distance.verdict == Verdict::Exact(0);
    let certificate = if trivial_knot {
        None
    } else {
        let seq = ArcSequence::new(distance.best.path.clone());
        Some(arcs_to_leveling(t, &seq)?)
    };
    Ok(LevelReport {
        level: distance.verdict,
        distance,
        certificate,
        trivial_knot,
        knot_upper_bound_only: true,
    })
}

/// Shadows meeting in `i(v, w)` interior points plus both endpoints give a
/// position with at most `i(v, w) + 1` levels.
pub fn crossing_bound(t: &Triangulation, v: &ArcWord, w: &ArcWord) -> Result<usize, Error> {
    Ok(intersection(t, v, w)? + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::random_arc;
    use crate::surgery::path_between;

    fn edges(t: &Triangulation) -> Vec<ArcWord> {
        t.p1_p2_edges()
            .into_iter()
            .map(|e| ArcWord::from_edge(t, e).unwrap())
            .collect()
    }

    #[test]
    fn one_level_has_no_tubes() {
        let t = Triangulation::standard(1).unwrap();
        let e = edges(&t);
        let seq = ArcSequence::new(vec![e[0].clone(), e[1].clone()]);
        let pos = arcs_to_leveling(&t, &seq).unwrap();
        assert_eq!(pos.levels.len(), 1);
        assert!(pos.tubes.is_empty());
        assert_eq!(pos.ambient_genus, 1);
        assert_eq!(pos.cycle.len(), 2);
        assert_eq!(leveling_to_arc_sequence(&t, &pos).unwrap(), seq);
    }

    #[test]
    fn longer_sequences_round_trip() {
        let t = Triangulation::standard(2).unwrap();
        let e = edges(&t);
        for n in 2..=5 {
            let arcs: Vec<ArcWord> = (0..=n).map(|k| e[k % 2].clone()).collect();
            let seq = ArcSequence::new(arcs);
            let pos = arcs_to_leveling(&t, &seq).unwrap();
            assert_eq!(pos.levels.len(), n);
            assert_eq!(pos.tubes.len(), n - 1);
            assert_eq!(pos.ambient_genus, 2 * n as u32);
            assert_eq!(pos.cycle.len(), 6 * n - 4);
            assert_eq!(leveling_to_arc_sequence(&t, &pos).unwrap(), seq);
        }
    }

    #[test]
    fn crossing_pair_is_reported() {
        let t = Triangulation::standard(1).unwrap();
        for seed in 0..40 {
            let v = random_arc(&t, seed, 6).unwrap();
            let w = random_arc(&t, seed + 9, 6).unwrap();
            let i = intersection(&t, &v, &w).unwrap();
            if i == 0 {
                continue;
            }
            let bad = validate_sequence(&t, &[v.clone(), w.clone()]);
            assert_eq!(
                bad,
                vec![SequenceViolation {
                    index: 1,
                    fault: SequenceFault::Crossing(i)
                }]
            );
            let path = path_between(&t, &v, &w).unwrap();
            assert!(path.steps() <= crossing_bound(&t, &v, &w).unwrap());
            let pos = arcs_to_leveling(&t, &path).unwrap();
            assert_eq!(leveling_to_arc_sequence(&t, &pos).unwrap(), path);
            return;
        }
        panic!("no crossing pair found");
    }

    #[test]
    fn tampered_position_is_rejected() {
        let t = Triangulation::standard(1).unwrap();
        let e = edges(&t);
        let seq = ArcSequence::new(vec![e[0].clone(), e[1].clone(), e[0].clone()]);
        let pos = arcs_to_leveling(&t, &seq).unwrap();
        let mut p = pos.clone();
        p.ambient_genus += 1;
        assert!(p.validate().is_err());
        let mut p = pos.clone();
        p.tubes[0].core = None;
        assert!(leveling_to_arc_sequence(&t, &p).is_err());
        let mut p = pos;
        p.cycle.swap(0, 1);
        assert!(p.validate().is_err());
    }
}
