//! Arcs from `P1` to `P2` as reduced crossing words.
//!
//! An arc is recorded by the corner it leaves, the sequence of triangle sides
//! it crosses (each as the slot of the triangle being left) and the corner it
//! arrives at. A word is *reduced* when it never crosses a side and
//! immediately crosses back, its first crossing is the side opposite the
//! start corner and its last crossing is the side opposite the end corner.
//! Reduced words are exactly the paths traced by geodesic representatives in
//! the universal cover, so every isotopy class has one reduced word and
//! equality of classes is equality of words. Edges of the triangulation are
//! the words with no crossings; they are stored on the positive side of the
//! edge.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::surface::{Corner, EdgeLabel, Flip, Marked, QuadLayout, QuadSide, Slot, Triangulation};

/// A crossing word that is only required to be locally consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawWord {
    pub start: Corner,
    pub crossings: Vec<Slot>,
    pub end: Corner,
}

/// Canonical reduced word of an isotopy class of arcs from `P1` to `P2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcWord {
    base: u64,
    start: Corner,
    crossings: Vec<Slot>,
    end: Corner,
}

/// Entry or exit point of an arc inside one triangle, in local positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pos {
    Corner(u8),
    Side(u8),
}

impl Pos {
    /// Index in the cyclic counter-clockwise order
    /// `corner 0, side 0, corner 1, side 1, corner 2, side 2`.
    fn cyclic(self) -> u8 {
        match self {
            Pos::Corner(k) => 2 * k,
            Pos::Side(k) => 2 * k + 1,
        }
    }
}

/// One passage of an arc through a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Visit {
    pub triangle: usize,
    pub entry: Pos,
    pub exit: Pos,
}

impl ArcWord {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn start(&self) -> Corner {
        self.start
    }

    pub fn end(&self) -> Corner {
        self.end
    }

    pub fn crossings(&self) -> &[Slot] {
        &self.crossings
    }

    /// Number of edge crossings.
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn to_raw(&self) -> RawWord {
        RawWord {
            start: self.start,
            crossings: self.crossings.clone(),
            end: self.end,
        }
    }

    /// The arc running along edge `e`, which must join `P1` and `P2`.
    pub fn from_edge(t: &Triangulation, e: EdgeLabel) -> Result<ArcWord, Error> {
        let s = t.slot_of(e, true).ok_or(Error::OutOfRange)?;
        let (start, end) = match (t.vertex(s.tail()), t.vertex(s.head())) {
            (Marked::P1, Marked::P2) => (s.tail(), s.head()),
            (Marked::P2, Marked::P1) => (s.head(), s.tail()),
            _ => return Err(Error::Endpoints),
        };
        Ok(ArcWord {
            base: t.fingerprint(),
            start,
            crossings: Vec::new(),
            end,
        })
    }

    /// The edge this arc runs along, when it crosses nothing.
    pub fn as_edge(&self, t: &Triangulation) -> Option<EdgeLabel> {
        if !self.crossings.is_empty() {
            return None;
        }
        Some(t.edge(side_between(self.start, self.end)))
    }

    /// Split into per-triangle passages. Needs the base triangulation.
    pub fn visits(&self, t: &Triangulation) -> Vec<Visit> {
        raw_visits(t, self.start, &self.crossings, self.end)
    }

    /// Check that this word is the reduced word of an embedded arc on `t`.
    pub fn check(&self, t: &Triangulation) -> Result<(), Error> {
        if self.base != t.fingerprint() {
            return Err(Error::BaseMismatch);
        }
        let raw = self.to_raw();
        if tighten(t, &raw)? != *self {
            return Err(Error::Postcondition("word is not reduced"));
        }
        if count_crossings(t, self, self, true) != 0 {
            return Err(Error::NotEmbedded);
        }
        Ok(())
    }

    /// Rebuild from stored parts, verifying the word is reduced on `t`.
    pub fn from_parts(
        t: &Triangulation,
        start: Corner,
        crossings: Vec<Slot>,
        end: Corner,
    ) -> Result<ArcWord, Error> {
        let w = ArcWord {
            base: t.fingerprint(),
            start,
            crossings,
            end,
        };
        w.check(t)?;
        Ok(w)
    }
}

fn side_between(a: Corner, b: Corner) -> Slot {
    if b.position == (a.position + 1) % 3 {
        a.outgoing_side()
    } else {
        a.incoming_side()
    }
}

fn raw_visits(t: &Triangulation, start: Corner, crossings: &[Slot], end: Corner) -> Vec<Visit> {
    let mut out = Vec::with_capacity(crossings.len() + 1);
    let mut tri = start.triangle();
    let mut entry = Pos::Corner(start.position);
    for &c in crossings {
        out.push(Visit {
            triangle: tri,
            entry,
            exit: Pos::Side(c.position()),
        });
        let d = t.twin(c);
        tri = d.triangle();
        entry = Pos::Side(d.position());
    }
    out.push(Visit {
        triangle: tri,
        entry,
        exit: Pos::Corner(end.position),
    });
    out
}

fn check_raw(t: &Triangulation, raw: &RawWord) -> Result<(), Error> {
    if !t.has_corner(raw.start) || !t.has_corner(raw.end) {
        return Err(Error::OutOfRange);
    }
    let mut tri = raw.start.triangle();
    for (i, &c) in raw.crossings.iter().enumerate() {
        if !t.has_slot(c) {
            return Err(Error::OutOfRange);
        }
        if c.triangle() != tri {
            return Err(Error::Inconsistent { index: i });
        }
        tri = t.twin(c).triangle();
    }
    if raw.end.triangle() != tri {
        return Err(Error::Inconsistent {
            index: raw.crossings.len(),
        });
    }
    if t.vertex(raw.start) != Marked::P1 || t.vertex(raw.end) != Marked::P2 {
        return Err(Error::Endpoints);
    }
    Ok(())
}

/// Reduce a locally consistent word to the canonical word of its class.
///
/// Removes spurs (crossing a side and immediately back) and rotates each
/// endpoint past sides incident to it (corner bigons) until the first and
/// last crossings face the endpoints.
pub fn tighten(t: &Triangulation, raw: &RawWord) -> Result<ArcWord, Error> {
    check_raw(t, raw)?;
    let mut stack: Vec<Slot> = Vec::with_capacity(raw.crossings.len());
    for &c in &raw.crossings {
        if stack.last().is_some_and(|&p| p == t.twin(c)) {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
    let mut start = raw.start;
    let mut skip = 0;
    while skip < stack.len() {
        let c = stack[skip];
        if c == start.outgoing_side() {
            start = t.twin(c).head();
        } else if c == start.incoming_side() {
            start = t.twin(c).tail();
        } else {
            break;
        }
        skip += 1;
    }
    let mut crossings: Vec<Slot> = stack.split_off(skip);
    let mut end = raw.end;
    while let Some(&c) = crossings.last() {
        let d = t.twin(c);
        if d == end.outgoing_side() {
            end = c.head();
        } else if d == end.incoming_side() {
            end = c.tail();
        } else {
            break;
        }
        crossings.pop();
    }
    if crossings.is_empty() {
        debug_assert_eq!(start.triangle, end.triangle);
        let s = side_between(start, end);
        if !t.is_positive(s) {
            let d = t.twin(s);
            if start == s.tail() {
                start = d.head();
                end = d.tail();
            } else {
                start = d.tail();
                end = d.head();
            }
        }
    }
    Ok(ArcWord {
        base: t.fingerprint(),
        start,
        crossings,
        end,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum QuadPos {
    Corner(u8),
    Side(u8),
}

fn to_quad(layout: &QuadLayout, m: usize, p: Pos) -> Option<QuadPos> {
    match p {
        Pos::Corner(k) => Some(QuadPos::Corner(layout.corners[m][k as usize])),
        Pos::Side(k) => match layout.sides[m][k as usize] {
            QuadSide::Boundary(b) => Some(QuadPos::Side(b)),
            QuadSide::Diagonal => None,
        },
    }
}

fn from_quad(layout: &QuadLayout, m: usize, q: QuadPos) -> Option<Pos> {
    (0..3u8).find_map(|k| match q {
        QuadPos::Corner(c) if layout.corners[m][k as usize] == c => Some(Pos::Corner(k)),
        QuadPos::Side(b) if layout.sides[m][k as usize] == QuadSide::Boundary(b) => {
            Some(Pos::Side(k))
        }
        _ => None,
    })
}

fn diagonal_pos(layout: &QuadLayout, m: usize) -> u8 {
    (0..3u8)
        .find(|&k| layout.sides[m][k as usize] == QuadSide::Diagonal)
        .unwrap()
}

/// Move an arc across a flip, from the triangulation laid out by `src` to the
/// one laid out by `dst`. Both layouts describe the same quadrilateral.
fn carry(
    from: &Triangulation,
    to: &Triangulation,
    a: &ArcWord,
    src: &QuadLayout,
    dst: &QuadLayout,
) -> Result<ArcWord, Error> {
    if a.base != from.fingerprint() {
        return Err(Error::BaseMismatch);
    }
    let visits = a.visits(from);
    let mut out: Vec<Visit> = Vec::with_capacity(visits.len() + 2);
    let mut k = 0;
    while k < visits.len() {
        let v = visits[k];
        let Some(m) = src.member(v.triangle) else {
            out.push(v);
            k += 1;
            continue;
        };
        let entry =
            to_quad(src, m, v.entry).ok_or(Error::Postcondition("run enters by diagonal"))?;
        let mut last = v;
        let mut lm = m;
        while let Pos::Side(p) = last.exit {
            if src.sides[lm][p as usize] != QuadSide::Diagonal {
                break;
            }
            k += 1;
            last = visits[k];
            lm = src.member(last.triangle).unwrap();
        }
        let exit =
            to_quad(src, lm, last.exit).ok_or(Error::Postcondition("run exits by diagonal"))?;
        k += 1;

        let holds = |m: usize, q: QuadPos| from_quad(dst, m, q).is_some();
        if let Some(m) = (0..2).find(|&m| holds(m, entry) && holds(m, exit)) {
            out.push(Visit {
                triangle: dst.triangles[m] as usize,
                entry: from_quad(dst, m, entry).unwrap(),
                exit: from_quad(dst, m, exit).unwrap(),
            });
        } else {
            let me = (0..2).find(|&m| holds(m, entry)).unwrap();
            let mx = 1 - me;
            out.push(Visit {
                triangle: dst.triangles[me] as usize,
                entry: from_quad(dst, me, entry).unwrap(),
                exit: Pos::Side(diagonal_pos(dst, me)),
            });
            out.push(Visit {
                triangle: dst.triangles[mx] as usize,
                entry: Pos::Side(diagonal_pos(dst, mx)),
                exit: from_quad(dst, mx, exit).ok_or(Error::Postcondition("quad exit lost"))?,
            });
        }
    }
    let Pos::Corner(s) = out[0].entry else {
        return Err(Error::Postcondition(
            "transported arc does not start at a corner",
        ));
    };
    let Pos::Corner(e) = out[out.len() - 1].exit else {
        return Err(Error::Postcondition(
            "transported arc does not end at a corner",
        ));
    };
    let crossings = out[..out.len() - 1]
        .iter()
        .map(|v| match v.exit {
            Pos::Side(p) => Ok(Slot::new(v.triangle, p)),
            Pos::Corner(_) => Err(Error::Postcondition("corner in the middle of an arc")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let raw = RawWord {
        start: Corner::new(out[0].triangle, s),
        crossings,
        end: Corner::new(out[out.len() - 1].triangle, e),
    };
    tighten(to, &raw)
}

/// Rewrite `a` over `flip(t, e)`. Returns the flipped triangulation as well.
pub fn transport(
    t: &Triangulation,
    a: &ArcWord,
    e: EdgeLabel,
) -> Result<(Triangulation, ArcWord), Error> {
    let (next, flip) = t.flip(e)?;
    let moved = carry(t, &next, a, &flip.before, &flip.after)?;
    Ok((next, moved))
}

/// Inverse of [`transport`]: `a` lives on `after`, which is `before` flipped
/// by `flip`.
pub fn transport_back(
    after: &Triangulation,
    before: &Triangulation,
    flip: &Flip,
    a: &ArcWord,
) -> Result<ArcWord, Error> {
    carry(after, before, a, &flip.after, &flip.before)
}

/// A sequence of flips starting from a base triangulation, with every
/// intermediate triangulation kept so arcs can be carried both ways.
#[derive(Clone, Debug)]
pub struct FlipPath {
    frames: Vec<Triangulation>,
    flips: Vec<Flip>,
}

impl FlipPath {
    pub fn new(base: &Triangulation) -> Self {
        FlipPath {
            frames: alloc::vec![base.clone()],
            flips: Vec::new(),
        }
    }

    pub fn push(&mut self, e: EdgeLabel) -> Result<(), Error> {
        let (next, flip) = self.last().flip(e)?;
        self.frames.push(next);
        self.flips.push(flip);
        Ok(())
    }

    pub fn base(&self) -> &Triangulation {
        &self.frames[0]
    }

    pub fn last(&self) -> &Triangulation {
        &self.frames[self.frames.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn labels(&self) -> Vec<EdgeLabel> {
        self.flips.iter().map(|f| f.edge).collect()
    }

    /// Carry an arc on the base to the last triangulation.
    pub fn forward(&self, a: &ArcWord) -> Result<ArcWord, Error> {
        let mut cur = a.clone();
        for (k, f) in self.flips.iter().enumerate() {
            cur = carry(
                &self.frames[k],
                &self.frames[k + 1],
                &cur,
                &f.before,
                &f.after,
            )?;
        }
        Ok(cur)
    }

    /// Carry an arc on the last triangulation back to the base.
    pub fn backward(&self, a: &ArcWord) -> Result<ArcWord, Error> {
        let mut cur = a.clone();
        for (k, f) in self.flips.iter().enumerate().rev() {
            cur = carry(
                &self.frames[k + 1],
                &self.frames[k],
                &cur,
                &f.after,
                &f.before,
            )?;
        }
        Ok(cur)
    }
}

/// Outcome of [`straighten_to_edge`].
#[derive(Clone, Debug)]
pub struct Straightening {
    pub path: FlipPath,
    pub edge: EdgeLabel,
}

impl Straightening {
    pub fn flips(&self) -> Vec<EdgeLabel> {
        self.path.labels()
    }
}

/// Flip edges until `v` becomes an edge of the triangulation.
///
/// The edge crossed first is flipped whenever that is possible, which removes
/// exactly one crossing; otherwise the edge crossed last. When neither is
/// flippable (both sides of the edge on one folded triangle), the flippable
/// edge giving the shortest word is taken, never undoing the previous flip.
pub fn straighten_to_edge(t: &Triangulation, v: &ArcWord) -> Result<Straightening, Error> {
    if v.base != t.fingerprint() {
        return Err(Error::BaseMismatch);
    }
    let mut path = FlipPath::new(t);
    let mut cur = v.clone();
    let cap = 8 * (v.len() + t.num_edges()) + 64;
    let mut previous: Option<EdgeLabel> = None;
    while !cur.is_empty() {
        if path.len() >= cap {
            return Err(Error::StraightenCap {
                iterations: path.len(),
            });
        }
        let last = path.last();
        let ends = [
            last.edge(cur.crossings[0]),
            last.edge(cur.crossings[cur.len() - 1]),
        ];
        let mut chosen = None;
        for e in ends {
            if !last.is_flippable(e) {
                continue;
            }
            let (_, moved) = transport(last, &cur, e)?;
            if moved.len() < cur.len() {
                chosen = Some((e, moved));
                break;
            }
        }
        if chosen.is_none() {
            let mut best: Option<(usize, EdgeLabel, ArcWord)> = None;
            for e in last.flippable_edges() {
                if Some(e) == previous {
                    continue;
                }
                let (_, moved) = transport(last, &cur, e)?;
                if best.as_ref().is_none_or(|b| moved.len() < b.0) {
                    best = Some((moved.len(), e, moved));
                }
            }
            chosen = best.map(|(_, e, m)| (e, m));
        }
        let (e, moved) = chosen.ok_or(Error::StraightenCap {
            iterations: path.len(),
        })?;
        path.push(e)?;
        previous = Some(e);
        cur = moved;
    }
    let edge = cur.as_edge(path.last()).unwrap();
    Ok(Straightening { path, edge })
}

/// Left/right classification of a point against a chord inside a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
    Shared,
}

fn classify(chord_from: Pos, chord_to: Pos, p: Pos) -> Side {
    let (e, x, q) = (chord_from.cyclic(), chord_to.cyclic(), p.cyclic());
    if q == e || q == x {
        return Side::Shared;
    }
    if (q + 6 - e) % 6 < (x + 6 - e) % 6 {
        Side::Right
    } else {
        Side::Left
    }
}

/// Count transverse crossings between lifts of `v` and `w`, one per orbit of
/// lift pairs. Lifts that share a run of triangles form a *stretch*; the pair
/// crosses exactly when the ends of `w` leave the stretch on opposite sides
/// of `v`. With `same` set, the identity pair is skipped.
fn count_crossings(t: &Triangulation, v: &ArcWord, w: &ArcWord, same: bool) -> usize {
    let vv = v.visits(t);
    let wv = w.visits(t);
    let xv = &v.crossings;
    let xw = &w.crossings;
    let (nv, nw) = (xv.len(), xw.len());
    let mut total = 0;
    for i in 0..=nv {
        for j in 0..=nw {
            if vv[i].triangle != wv[j].triangle {
                continue;
            }
            if same && i == 0 && j == 0 {
                continue;
            }
            let par_pred = i >= 1 && j >= 1 && xv[i - 1] == xw[j - 1];
            let anti_pred = i >= 1 && j < nw && xv[i - 1] == t.twin(xw[j]);
            if par_pred || anti_pred {
                continue;
            }
            let parallel = i < nv && j < nw && xv[i] == xw[j];
            let anti = i < nv && j >= 1 && xv[i] == t.twin(xw[j - 1]);
            let (mut ie, mut je) = (i, j);
            if parallel {
                while ie < nv && je < nw && xv[ie] == xw[je] {
                    ie += 1;
                    je += 1;
                }
            } else if anti {
                while ie < nv && je >= 1 && xv[ie] == t.twin(xw[je - 1]) {
                    ie += 1;
                    je -= 1;
                }
            }
            let (bottom, top) = if anti {
                (wv[j].exit, wv[je].entry)
            } else {
                (wv[j].entry, wv[je].exit)
            };
            let a = classify(vv[i].entry, vv[i].exit, bottom);
            let b = classify(vv[ie].entry, vv[ie].exit, top);
            if matches!(
                (a, b),
                (Side::Left, Side::Right) | (Side::Right, Side::Left)
            ) {
                total += 1;
            }
        }
    }
    total
}

/// Minimal number of transverse self-crossings of the class of `a`.
pub fn self_intersection(t: &Triangulation, a: &ArcWord) -> Result<usize, Error> {
    if a.base != t.fingerprint() {
        return Err(Error::BaseMismatch);
    }
    Ok(count_crossings(t, a, a, true) / 2)
}

/// Minimal number of interior crossings between representatives of `v` and
/// `w`, counted combinatorially over lift pairs on the given triangulation.
/// Endpoints are never counted.
pub fn intersection(t: &Triangulation, v: &ArcWord, w: &ArcWord) -> Result<usize, Error> {
    if v.base != t.fingerprint() || w.base != t.fingerprint() {
        return Err(Error::BaseMismatch);
    }
    Ok(count_crossings(t, v, w, v == w))
}

/// Independent route to [`intersection`]: flip until `v` is an edge, carry
/// `w` along, and count how often `w` crosses that edge.
pub fn intersection_by_flips(t: &Triangulation, v: &ArcWord, w: &ArcWord) -> Result<usize, Error> {
    if w.base != t.fingerprint() {
        return Err(Error::BaseMismatch);
    }
    let s = straighten_to_edge(t, v)?;
    let moved = s.path.forward(w)?;
    let last = s.path.last();
    Ok(moved
        .crossings
        .iter()
        .filter(|&&c| last.edge(c) == s.edge)
        .count())
}

/// Deterministic pseudo-random embedded arc: flip `steps` random edges, take
/// a `P1`-`P2` edge of the result and carry it back to `t`.
pub fn random_arc(t: &Triangulation, seed: u64, steps: usize) -> Result<ArcWord, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut path = FlipPath::new(t);
    let mut pick = |n: usize| (rng.next_u64() % n as u64) as usize;
    for _ in 0..steps {
        let choices = path.last().flippable_edges();
        if choices.is_empty() {
            break;
        }
        let e = choices[pick(choices.len())];
        path.push(e)?;
    }
    for _ in 0..64 {
        let edges = path.last().p1_p2_edges();
        if !edges.is_empty() {
            let e = edges[pick(edges.len())];
            let a = ArcWord::from_edge(path.last(), e)?;
            return path.backward(&a);
        }
        let choices = path.last().flippable_edges();
        let e = choices[pick(choices.len())];
        path.push(e)?;
    }
    Err(Error::Postcondition("no P1-P2 edge found"))
}

/// All reduced words with at most `max_len` crossings, in canonical order,
/// optionally keeping only embedded ones.
pub fn enumerate_words(t: &Triangulation, max_len: usize, embedded_only: bool) -> Vec<ArcWord> {
    let mut out: Vec<ArcWord> = Vec::new();
    for e in t.p1_p2_edges() {
        out.push(ArcWord::from_edge(t, e).unwrap());
    }
    let mut stack: Vec<Slot> = Vec::new();
    for c in t.corners().filter(|&c| t.vertex(c) == Marked::P1) {
        if max_len == 0 {
            break;
        }
        stack.clear();
        stack.push(c.opposite_side());
        extend(t, c, &mut stack, max_len, &mut out);
    }
    if embedded_only {
        out.retain(|a| count_crossings(t, a, a, true) == 0);
    }
    out.sort_by(|a, b| {
        (a.len(), &a.crossings, a.start, a.end).cmp(&(b.len(), &b.crossings, b.start, b.end))
    });
    out.dedup();
    out
}

fn extend(
    t: &Triangulation,
    start: Corner,
    stack: &mut Vec<Slot>,
    max_len: usize,
    out: &mut Vec<ArcWord>,
) {
    let d = t.twin(*stack.last().unwrap());
    let far = d.opposite();
    if t.vertex(far) == Marked::P2 {
        out.push(ArcWord {
            base: t.fingerprint(),
            start,
            crossings: stack.clone(),
            end: far,
        });
    }
    if stack.len() == max_len {
        return;
    }
    for k in 1..3u8 {
        stack.push(Slot::new(d.triangle(), (d.position() + k) % 3));
        extend(t, start, stack, max_len, out);
        stack.pop();
    }
}

/// Every canonical embedded arc with at most `max_len` crossings, without
/// duplicates, sorted by length and then lexicographically.
pub fn enumerate_arcs(t: &Triangulation, max_len: usize) -> Vec<ArcWord> {
    enumerate_words(t, max_len, true)
}
