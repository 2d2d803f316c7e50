//! Two arcs drawn in minimal position, and the cell structure they cut out.
//!
//! The first arc is straightened to an edge of a flipped triangulation; the
//! second is drawn there as a normal arc, with its strands ordered along each
//! edge by the usual corner-arc nesting. In that frame the pair is bigon-free,
//! so the crossings of the second arc with the straightened edge are the
//! minimal crossings, and the complementary regions are read off by gluing
//! the pieces into which the second arc cuts each triangle.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::arc::{straighten_to_edge, tighten, ArcWord, Pos, RawWord, Straightening};
use crate::error::Error;
use crate::surface::{Corner, EdgeLabel, Marked, Slot, Triangulation};

/// Normal drawing of one embedded arc: how many strands cut off each corner
/// of each triangle, where the arc terminates, and the rank of every crossing
/// along the side it crosses (counted from the side's tail).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    corner_arcs: Vec<[u32; 3]>,
    terminal: Vec<Option<u8>>,
    weight: Vec<u32>,
    ranks: Vec<u32>,
}

impl Drawing {
    pub fn new(t: &Triangulation, a: &ArcWord) -> Result<Self, Error> {
        let n = t.num_triangles();
        let mut corner_arcs = vec![[0u32; 3]; n];
        let mut terminal: Vec<Option<u8>> = vec![None; n];
        let mut weight = vec![0u32; t.num_edges()];
        for &c in a.crossings() {
            weight[t.edge(c) as usize - 1] += 1;
        }
        let visits = a.visits(t);
        if a.is_empty() {
            return Ok(Drawing {
                corner_arcs,
                terminal,
                weight,
                ranks: Vec::new(),
            });
        }
        for v in &visits {
            match (v.entry, v.exit) {
                (Pos::Side(x), Pos::Side(y)) => {
                    let corner = if y == (x + 1) % 3 { y } else { x };
                    corner_arcs[v.triangle][corner as usize] += 1;
                }
                (Pos::Corner(c), Pos::Side(_)) | (Pos::Side(_), Pos::Corner(c)) => {
                    if terminal[v.triangle].replace(c).is_some() {
                        return Err(Error::NotEmbedded);
                    }
                }
                (Pos::Corner(_), Pos::Corner(_)) => unreachable!(),
            }
        }
        for (tri, term) in terminal.iter().enumerate() {
            if let Some(c) = term {
                if corner_arcs[tri][*c as usize] > 0 {
                    return Err(Error::NotEmbedded);
                }
            }
        }
        let mut d = Drawing {
            corner_arcs,
            terminal,
            weight,
            ranks: Vec::with_capacity(a.len()),
        };
        let xs = a.crossings();
        let first = xs[0];
        let mut rank = d.corner_arcs[first.triangle()][first.position() as usize];
        d.ranks.push(rank);
        for k in 0..xs.len() {
            let entry = t.twin(xs[k]);
            let q = d.len(t, entry) - 1 - rank;
            let tri = entry.triangle();
            let side = entry.position();
            let arcs = d.corner_arcs[tri];
            let tail_arcs = arcs[side as usize];
            let (exit, exit_rank) = if q < tail_arcs {
                let out = Slot::new(tri, (side + 2) % 3);
                (Some(out), d.len(t, out) - 1 - q)
            } else if d.terminal[tri] == Some((side + 2) % 3) && q == tail_arcs {
                (None, 0)
            } else {
                let r = d.len(t, entry) - 1 - q;
                (Some(Slot::new(tri, (side + 1) % 3)), r)
            };
            match (exit, xs.get(k + 1)) {
                (Some(s), Some(&next)) if s == next => {
                    rank = exit_rank;
                    d.ranks.push(rank);
                }
                (None, None) if a.end() == entry.opposite() => {}
                _ => return Err(Error::NotEmbedded),
            }
        }
        Ok(d)
    }

    /// Number of strands on side `s`.
    pub fn len(&self, t: &Triangulation, s: Slot) -> u32 {
        self.weight[t.edge(s) as usize - 1]
    }

    /// Rank of crossing `k` along the slot it leaves through, from its tail.
    pub fn rank(&self, k: usize) -> u32 {
        self.ranks[k]
    }
}

#[derive(Clone, Debug)]
struct Piece {
    triangle: usize,
    gaps: Vec<(Slot, u32)>,
    corners: Vec<u8>,
}

/// A crossing of the two arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OverlayCrossing {
    /// Index of the crossing in the second arc's word in the straightened frame.
    pub w_index: usize,
    /// Order along the first arc, counted from `P1`.
    pub along_v: usize,
}

/// A complementary region of the union of the two arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub touches_p1: bool,
    pub touches_p2: bool,
    pub pieces: usize,
}

/// Cell structure of two arcs in minimal position.
#[derive(Clone, Debug)]
pub struct Overlay {
    pub straightening: Straightening,
    /// The second arc carried into the frame where the first is an edge.
    pub w_frame: ArcWord,
    pub drawing: Drawing,
    /// Crossings sorted along the first arc from `P1` to `P2`.
    pub crossings: Vec<OverlayCrossing>,
    pub regions: Vec<Region>,
    pieces: Vec<Piece>,
    piece_region: Vec<usize>,
    walls: Vec<EdgeLabel>,
    /// Cells of the complex made of the triangulation edges and both arcs.
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl Overlay {
    /// Number of crossing vertices.
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }

    pub fn frame(&self) -> &Triangulation {
        self.straightening.path.last()
    }

    /// Some complementary region meets both marked points.
    pub fn has_p1_p2_region(&self) -> bool {
        self.regions.iter().any(|r| r.touches_p1 && r.touches_p2)
    }

    /// An arc through a region meeting both marked points, disjoint from both
    /// input arcs, returned on the base triangulation.
    ///
    /// Breadth-first search over pieces from every piece with a `P1` corner;
    /// sides of the straightened edge are walls. Ties go to the lowest piece
    /// index, so the route is deterministic.
    pub fn witness(&self) -> Result<Option<ArcWord>, Error> {
        let t = self.frame();
        let n = self.pieces.len();
        let p1_corner = |p: usize| {
            self.pieces[p]
                .corners
                .iter()
                .copied()
                .find(|&c| t.vertex(Corner::new(self.pieces[p].triangle, c)) == Marked::P1)
        };
        let p2_corner = |p: usize| {
            self.pieces[p]
                .corners
                .iter()
                .copied()
                .find(|&c| t.vertex(Corner::new(self.pieces[p].triangle, c)) == Marked::P2)
        };
        let eligible = |p: usize| {
            let r = self.regions[self.piece_region[p]];
            r.touches_p1 && r.touches_p2
        };
        let mut parent: Vec<Option<(usize, Slot)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for (p, s) in seen.iter_mut().enumerate() {
            if eligible(p) && p1_corner(p).is_some() {
                *s = true;
                queue.push_back(p);
            }
        }
        let lookup = self.gap_index();
        let mut goal = None;
        while let Some(p) = queue.pop_front() {
            if p2_corner(p).is_some() {
                goal = Some(p);
                break;
            }
            for &(s, g) in &self.pieces[p].gaps {
                if self.walls.contains(&t.edge(s)) {
                    continue;
                }
                let d = t.twin(s);
                let back = self.drawing.len(t, s) - g;
                let q = lookup[d.0 as usize][back as usize];
                if !seen[q] {
                    seen[q] = true;
                    parent[q] = Some((p, s));
                    queue.push_back(q);
                }
            }
        }
        let Some(goal) = goal else {
            return Ok(None);
        };
        let mut crossings = Vec::new();
        let mut p = goal;
        while let Some((q, s)) = parent[p] {
            crossings.push(s);
            p = q;
        }
        crossings.reverse();
        let raw = RawWord {
            start: Corner::new(self.pieces[p].triangle, p1_corner(p).unwrap()),
            crossings,
            end: Corner::new(self.pieces[goal].triangle, p2_corner(goal).unwrap()),
        };
        let u = tighten(t, &raw)?;
        self.straightening.path.backward(&u).map(Some)
    }

    fn gap_index(&self) -> Vec<Vec<usize>> {
        let t = self.frame();
        let mut lookup: Vec<Vec<usize>> = t
            .slots()
            .map(|s| vec![usize::MAX; self.drawing.len(t, s) as usize + 1])
            .collect();
        for (i, p) in self.pieces.iter().enumerate() {
            for &(s, g) in &p.gaps {
                lookup[s.0 as usize][g as usize] = i;
            }
        }
        lookup
    }
}

fn pieces_of(t: &Triangulation, d: &Drawing, tri: usize) -> Vec<Piece> {
    let side = |k: u8| Slot::new(tri, k % 3);
    let len = |k: u8| d.len(t, side(k));
    let n = d.corner_arcs[tri];
    let mut out = Vec::new();
    for c in 0..3u8 {
        let nc = n[c as usize];
        let prev = (c + 2) % 3;
        for k in 0..nc {
            out.push(Piece {
                triangle: tri,
                gaps: vec![(side(c), k), (side(prev), len(prev) - k)],
                corners: if k == 0 { vec![c] } else { Vec::new() },
            });
        }
    }
    match d.terminal[tri] {
        None => out.push(Piece {
            triangle: tri,
            gaps: (0..3u8).map(|k| (side(k), n[k as usize])).collect(),
            corners: (0..3u8).filter(|&k| n[k as usize] == 0).collect(),
        }),
        Some(c) => {
            let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
            let mut left = vec![c];
            if n[c1 as usize] == 0 {
                left.push(c1);
            }
            let mut right = vec![c];
            if n[c2 as usize] == 0 {
                right.push(c2);
            }
            out.push(Piece {
                triangle: tri,
                gaps: vec![(side(c), 0), (side(c1), n[c1 as usize])],
                corners: left,
            });
            out.push(Piece {
                triangle: tri,
                gaps: vec![(side(c1), n[c1 as usize] + 1), (side(c2), n[c2 as usize])],
                corners: right,
            });
        }
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Realise `v` and `w` in minimal position and compute the overlay.
pub fn build_overlay(t: &Triangulation, v: &ArcWord, w: &ArcWord) -> Result<Overlay, Error> {
    if v.base() != t.fingerprint() || w.base() != t.fingerprint() {
        return Err(Error::BaseMismatch);
    }
    let straightening = straighten_to_edge(t, v)?;
    let frame = straightening.path.last().clone();
    let w_frame = straightening.path.forward(w)?;
    let drawing = Drawing::new(&frame, &w_frame)?;
    let edge = straightening.edge;

    let mut walls = vec![edge];
    if let Some(e) = w_frame.as_edge(&frame) {
        if e != edge {
            walls.push(e);
        }
    }

    let a = frame.slot_of(edge, true).unwrap();
    let len = drawing.len(&frame, a);
    let p1_at_tail = frame.vertex(a.tail()) == Marked::P1;
    let mut crossings: Vec<OverlayCrossing> = w_frame
        .crossings()
        .iter()
        .enumerate()
        .filter(|(_, &c)| frame.edge(c) == edge)
        .map(|(k, &c)| {
            let from_tail = if c == a {
                drawing.rank(k)
            } else {
                len - 1 - drawing.rank(k)
            };
            let along = if p1_at_tail {
                from_tail
            } else {
                len - 1 - from_tail
            };
            OverlayCrossing {
                w_index: k,
                along_v: along as usize,
            }
        })
        .collect();
    crossings.sort_by_key(|c| c.along_v);

    let pieces: Vec<Piece> = (0..frame.num_triangles())
        .flat_map(|tri| pieces_of(&frame, &drawing, tri))
        .collect();
    let mut lookup: Vec<Vec<usize>> = frame
        .slots()
        .map(|s| vec![usize::MAX; drawing.len(&frame, s) as usize + 1])
        .collect();
    for (i, p) in pieces.iter().enumerate() {
        for &(s, g) in &p.gaps {
            lookup[s.0 as usize][g as usize] = i;
        }
    }
    debug_assert!(lookup.iter().flatten().all(|&x| x != usize::MAX));
    let mut parent: Vec<usize> = (0..pieces.len()).collect();
    for s in frame.slots() {
        if walls.contains(&frame.edge(s)) {
            continue;
        }
        let d = frame.twin(s);
        let l = drawing.len(&frame, s);
        for g in 0..=l {
            let (x, y) = (
                find(&mut parent, lookup[s.0 as usize][g as usize]),
                find(&mut parent, lookup[d.0 as usize][(l - g) as usize]),
            );
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
    }
    let mut region_of_root = vec![usize::MAX; pieces.len()];
    let mut regions: Vec<Region> = Vec::new();
    let mut piece_region = vec![0; pieces.len()];
    for i in 0..pieces.len() {
        let r = find(&mut parent, i);
        if region_of_root[r] == usize::MAX {
            region_of_root[r] = regions.len();
            regions.push(Region {
                touches_p1: false,
                touches_p2: false,
                pieces: 0,
            });
        }
        let idx = region_of_root[r];
        piece_region[i] = idx;
        let reg = &mut regions[idx];
        reg.pieces += 1;
        for &c in &pieces[i].corners {
            match frame.vertex(Corner::new(pieces[i].triangle, c)) {
                Marked::P1 => reg.touches_p1 = true,
                Marked::P2 => reg.touches_p2 = true,
            }
        }
    }

    let points: usize = drawing.weight.iter().map(|&x| x as usize).sum();
    let segments = if w_frame.is_empty() {
        0
    } else {
        w_frame.len() + 1
    };
    let vertices = 2 + points;
    let edges = frame.num_edges() + points + segments;
    let faces = pieces.len();
    Ok(Overlay {
        straightening,
        w_frame,
        drawing,
        crossings,
        regions,
        pieces,
        piece_region,
        walls,
        vertices,
        edges,
        faces,
    })
}
