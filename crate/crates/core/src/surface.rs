//! Ideal triangulations of a closed oriented surface whose only vertices are
//! the two marked points `P1` and `P2`.
//!
//! A triangulation is stored as a gluing table of *side slots*. Slot
//! `3 * t + k` is side `k` of triangle `t`; it runs from corner `k` to corner
//! `k + 1` in the counter-clockwise order of the triangle. Every edge is the
//! gluing of exactly two slots, which traverse it in opposite directions.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Edge labels are positive integers `1..=E`.
pub type EdgeLabel = u32;

/// A side of a triangle, encoded as `3 * triangle + position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot(pub u32);

impl Slot {
    pub fn new(triangle: usize, position: u8) -> Self {
        Slot(triangle as u32 * 3 + u32::from(position % 3))
    }

    pub fn triangle(self) -> usize {
        (self.0 / 3) as usize
    }

    pub fn position(self) -> u8 {
        (self.0 % 3) as u8
    }

    /// Corner at which this side starts.
    pub fn tail(self) -> Corner {
        Corner::new(self.triangle(), self.position())
    }

    /// Corner at which this side ends.
    pub fn head(self) -> Corner {
        Corner::new(self.triangle(), (self.position() + 1) % 3)
    }

    /// Corner of the same triangle not on this side.
    pub fn opposite(self) -> Corner {
        Corner::new(self.triangle(), (self.position() + 2) % 3)
    }
}

/// A corner of a triangle. Corner `k` is the tail of slot `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub triangle: u32,
    pub position: u8,
}

impl Corner {
    pub fn new(triangle: usize, position: u8) -> Self {
        Corner {
            triangle: triangle as u32,
            position: position % 3,
        }
    }

    pub fn triangle(self) -> usize {
        self.triangle as usize
    }

    fn index(self) -> usize {
        self.triangle as usize * 3 + self.position as usize
    }

    /// The side opposite this corner.
    pub fn opposite_side(self) -> Slot {
        Slot::new(self.triangle(), (self.position + 1) % 3)
    }

    /// Side leaving this corner (this corner is its tail).
    pub fn outgoing_side(self) -> Slot {
        Slot::new(self.triangle(), self.position)
    }

    /// Side arriving at this corner (this corner is its head).
    pub fn incoming_side(self) -> Slot {
        Slot::new(self.triangle(), (self.position + 2) % 3)
    }
}

/// The two marked points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marked {
    P1,
    P2,
}

impl Marked {
    pub fn other(self) -> Marked {
        match self {
            Marked::P1 => Marked::P2,
            Marked::P2 => Marked::P1,
        }
    }
}

/// Raw gluing data as it appears in files: each triangle is a triple of signed
/// edge labels, `+e` when the side traverses edge `e` in its positive
/// direction and `-e` otherwise. `p1` names a corner lying at `P1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationTable {
    pub genus: u32,
    pub triangles: Vec<[i32; 3]>,
    pub p1: Corner,
}

/// A violated triangulation invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    /// `3F` is odd, so sides cannot pair up.
    FaceCount {
        faces: usize,
    },
    /// Label is zero or larger than `3F / 2`.
    LabelRange {
        triangle: usize,
        label: i32,
    },
    /// An edge label does not occur exactly twice.
    EdgeDegree {
        edge: EdgeLabel,
        count: usize,
    },
    /// Both occurrences of an edge carry the same sign.
    Orientation {
        edge: EdgeLabel,
    },
    Disconnected {
        components: usize,
    },
    /// Corner tracing did not give exactly two vertices.
    VertexCount {
        found: usize,
    },
    /// `V - E + F` disagrees with the declared genus.
    Euler {
        declared_genus: u32,
        euler_characteristic: i64,
    },
    P1Corner {
        triangle: u32,
        position: u8,
    },
}

impl Violation {
    /// Short stable name for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Empty => "empty",
            Violation::FaceCount { .. } => "face count",
            Violation::LabelRange { .. } => "label range",
            Violation::EdgeDegree { .. } => "edge degree",
            Violation::Orientation { .. } => "orientation",
            Violation::Disconnected { .. } => "connectivity",
            Violation::VertexCount { .. } => "vertex count",
            Violation::Euler { .. } => "euler characteristic",
            Violation::P1Corner { .. } => "p1 corner",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty: table has no triangles"),
            Violation::FaceCount { faces } => {
                write!(f, "face count: {faces} triangles cannot pair their sides")
            }
            Violation::LabelRange { triangle, label } => {
                write!(f, "label range: triangle {triangle} uses label {label}")
            }
            Violation::EdgeDegree { edge, count } => {
                write!(f, "edge degree: edge {edge} occurs {count} times")
            }
            Violation::Orientation { edge } => {
                write!(
                    f,
                    "orientation: edge {edge} is glued orientation-reversingly"
                )
            }
            Violation::Disconnected { components } => {
                write!(f, "connectivity: {components} components")
            }
            Violation::VertexCount { found } => {
                write!(f, "vertex count: corners trace to {found} vertices")
            }
            Violation::Euler {
                declared_genus,
                euler_characteristic,
            } => write!(
                f,
                "euler characteristic: {euler_characteristic} does not match genus {declared_genus}"
            ),
            Violation::P1Corner { triangle, position } => {
                write!(f, "p1 corner: ({triangle}, {position}) is not a corner")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangulationError {
    GenusZero,
    Invalid(Vec<Violation>),
}

impl core::error::Error for TriangulationError {}

impl fmt::Display for TriangulationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangulationError::GenusZero => write!(f, "genus must be at least 1"),
            TriangulationError::Invalid(v) => {
                write!(f, "invalid triangulation:")?;
                for x in v {
                    write!(f, " [{x}]")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlipError {
    NoSuchEdge(EdgeLabel),
    /// Both sides of the edge belong to the same triangle.
    Unflippable(EdgeLabel),
}

impl core::error::Error for FlipError {}

impl fmt::Display for FlipError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlipError::NoSuchEdge(e) => write!(f, "no edge labelled {e}"),
            FlipError::Unflippable(e) => {
                write!(
                    f,
                    "edge {e} is not flippable: both sides lie on one triangle"
                )
            }
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// Check every invariant of a gluing table. An empty list means the table
/// describes a valid two-vertex triangulation.
pub fn validate(table: &TriangulationTable) -> Vec<Violation> {
    let mut out = Vec::new();
    let faces = table.triangles.len();
    if faces == 0 {
        out.push(Violation::Empty);
        return out;
    }
    if !(3 * faces).is_multiple_of(2) {
        out.push(Violation::FaceCount { faces });
        return out;
    }
    let edges = 3 * faces / 2;
    // per edge: (positive slot, negative slot) occurrences
    let mut pos: Vec<Vec<usize>> = vec![Vec::new(); edges];
    let mut neg: Vec<Vec<usize>> = vec![Vec::new(); edges];
    let mut labels_ok = true;
    for (t, tri) in table.triangles.iter().enumerate() {
        for (k, &l) in tri.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize > edges {
                out.push(Violation::LabelRange {
                    triangle: t,
                    label: l,
                });
                labels_ok = false;
                continue;
            }
            let e = l.unsigned_abs() as usize - 1;
            if l > 0 {
                pos[e].push(3 * t + k);
            } else {
                neg[e].push(3 * t + k);
            }
        }
    }
    let mut gluable = labels_ok;
    for e in 0..edges {
        let count = pos[e].len() + neg[e].len();
        if count != 2 {
            out.push(Violation::EdgeDegree {
                edge: e as u32 + 1,
                count,
            });
            gluable = false;
        } else if pos[e].len() != 1 {
            out.push(Violation::Orientation { edge: e as u32 + 1 });
            gluable = false;
        }
    }
    if table.p1.position > 2 || table.p1.triangle() >= faces {
        out.push(Violation::P1Corner {
            triangle: table.p1.triangle,
            position: table.p1.position,
        });
    }
    if !gluable {
        return out;
    }
    let mut tris = UnionFind::new(faces);
    let mut corners = UnionFind::new(3 * faces);
    for e in 0..edges {
        let (a, b) = (Slot(pos[e][0] as u32), Slot(neg[e][0] as u32));
        tris.union(a.triangle(), b.triangle());
        corners.union(a.tail().index(), b.head().index());
        corners.union(a.head().index(), b.tail().index());
    }
    let components = tris.classes();
    if components != 1 {
        out.push(Violation::Disconnected { components });
    }
    let vertices = corners.classes();
    if vertices != 2 {
        out.push(Violation::VertexCount { found: vertices });
    }
    let chi = vertices as i64 - edges as i64 + faces as i64;
    if chi != 2 - 2 * i64::from(table.genus) {
        out.push(Violation::Euler {
            declared_genus: table.genus,
            euler_characteristic: chi,
        });
    }
    out
}

/// Which boundary side of a flip quadrilateral, or its diagonal, sits at a
/// triangle position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadSide {
    Boundary(u8),
    Diagonal,
}

/// How the two triangles adjacent to a flipped edge sit in the quadrilateral
/// `Q0 Q1 Q2 Q3` (counter-clockwise). Boundary side `k` runs from `Qk` to
/// `Q(k+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadLayout {
    pub triangles: [u32; 2],
    pub corners: [[u8; 3]; 2],
    pub sides: [[QuadSide; 3]; 2],
}

impl QuadLayout {
    /// Index (0 or 1) of `triangle` in the layout.
    pub fn member(&self, triangle: usize) -> Option<usize> {
        self.triangles.iter().position(|&t| t as usize == triangle)
    }
}

/// Record of a flip: the quadrilateral before and after, over the same
/// triangle indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flip {
    pub edge: EdgeLabel,
    pub before: QuadLayout,
    pub after: QuadLayout,
}

/// A valid ideal triangulation with exactly two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    genus: u32,
    twin: Vec<u32>,
    label: Vec<EdgeLabel>,
    positive: Vec<bool>,
    /// `[positive slot, negative slot]` per edge, indexed by `label - 1`.
    edge_slots: Vec<[u32; 2]>,
    vertex: Vec<Marked>,
    id: u64,
}

fn fingerprint_of(table: &TriangulationTable) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |x: u32| {
        for b in x.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    feed(table.genus);
    feed(table.p1.triangle);
    feed(u32::from(table.p1.position));
    for tri in &table.triangles {
        for &x in tri {
            feed(x as u32);
        }
    }
    h
}

impl Triangulation {
    /// The standard triangulation of genus `g`: the `4g`-gon with side word
    /// `a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1` coned from its centre.
    ///
    /// Polygon vertices all become `P1`, the centre is `P2`. Triangle `k` has
    /// corners `(v_k, v_{k+1}, centre)`; side 0 is polygon side `k`. Labels:
    /// `a_i = 2i + 1`, `b_i = 2i + 2` for `i` in `0..g`, and spoke `k`
    /// (centre to `v_k`) is `2g + 1 + k`.
    pub fn standard(genus: u32) -> Result<Self, TriangulationError> {
        Self::from_table(&Self::standard_table(genus)?)
    }

    pub fn standard_table(genus: u32) -> Result<TriangulationTable, TriangulationError> {
        if genus == 0 {
            return Err(TriangulationError::GenusZero);
        }
        let g = genus as i32;
        let n = 4 * g;
        let spoke = |k: i32| 2 * g + 1 + k.rem_euclid(n);
        let triangles = (0..n)
            .map(|k| {
                let (i, r) = (k / 4, k % 4);
                let side = match r {
                    0 => 2 * i + 1,
                    1 => 2 * i + 2,
                    2 => -(2 * i + 1),
                    _ => -(2 * i + 2),
                };
                [side, -spoke(k + 1), spoke(k)]
            })
            .collect();
        Ok(TriangulationTable {
            genus,
            triangles,
            p1: Corner::new(0, 0),
        })
    }

    pub fn from_table(table: &TriangulationTable) -> Result<Self, TriangulationError> {
        if table.genus == 0 {
            return Err(TriangulationError::GenusZero);
        }
        let violations = validate(table);
        if !violations.is_empty() {
            return Err(TriangulationError::Invalid(violations));
        }
        let faces = table.triangles.len();
        let edges = 3 * faces / 2;
        let mut label = vec![0; 3 * faces];
        let mut positive = vec![false; 3 * faces];
        let mut edge_slots = vec![[u32::MAX; 2]; edges];
        for (t, tri) in table.triangles.iter().enumerate() {
            for (k, &l) in tri.iter().enumerate() {
                let s = 3 * t + k;
                let e = l.unsigned_abs();
                label[s] = e;
                positive[s] = l > 0;
                edge_slots[e as usize - 1][usize::from(l < 0)] = s as u32;
            }
        }
        let mut twin = vec![0; 3 * faces];
        for &[a, b] in &edge_slots {
            twin[a as usize] = b;
            twin[b as usize] = a;
        }
        let mut corners = UnionFind::new(3 * faces);
        for &[a, b] in &edge_slots {
            let (a, b) = (Slot(a), Slot(b));
            corners.union(a.tail().index(), b.head().index());
            corners.union(a.head().index(), b.tail().index());
        }
        let p1 = corners.find(table.p1.index());
        let vertex = (0..3 * faces)
            .map(|c| {
                if corners.find(c) == p1 {
                    Marked::P1
                } else {
                    Marked::P2
                }
            })
            .collect();
        let mut out = Triangulation {
            genus: table.genus,
            twin,
            label,
            positive,
            edge_slots,
            vertex,
            id: 0,
        };
        out.id = fingerprint_of(&out.to_table());
        Ok(out)
    }

    pub fn to_table(&self) -> TriangulationTable {
        let triangles = (0..self.num_triangles())
            .map(|t| {
                let mut tri = [0i32; 3];
                for (k, x) in tri.iter_mut().enumerate() {
                    let s = Slot::new(t, k as u8);
                    let l = self.edge(s) as i32;
                    *x = if self.is_positive(s) { l } else { -l };
                }
                tri
            })
            .collect();
        let p1 = (0..self.vertex.len())
            .find(|&c| self.vertex[c] == Marked::P1)
            .unwrap_or(0);
        TriangulationTable {
            genus: self.genus,
            triangles,
            p1: Corner::new(p1 / 3, (p1 % 3) as u8),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn num_triangles(&self) -> usize {
        self.twin.len() / 3
    }

    pub fn num_edges(&self) -> usize {
        self.edge_slots.len()
    }

    pub fn num_vertices(&self) -> usize {
        let mut seen = [false; 2];
        for v in &self.vertex {
            seen[*v as usize] = true;
        }
        seen.iter().filter(|&&x| x).count()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_triangles() as i64
    }

    pub fn slots(&self) -> impl Iterator<Item = Slot> {
        (0..self.twin.len() as u32).map(Slot)
    }

    pub fn corners(&self) -> impl Iterator<Item = Corner> {
        (0..self.vertex.len()).map(|c| Corner::new(c / 3, (c % 3) as u8))
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = EdgeLabel> {
        1..=self.num_edges() as u32
    }

    pub fn twin(&self, s: Slot) -> Slot {
        Slot(self.twin[s.0 as usize])
    }

    pub fn edge(&self, s: Slot) -> EdgeLabel {
        self.label[s.0 as usize]
    }

    pub fn is_positive(&self, s: Slot) -> bool {
        self.positive[s.0 as usize]
    }

    /// Slot for edge `e` taken with the given sign.
    pub fn slot_of(&self, e: EdgeLabel, positive: bool) -> Option<Slot> {
        let pair = self.edge_slots.get((e as usize).checked_sub(1)?)?;
        Some(Slot(pair[usize::from(!positive)]))
    }

    pub fn vertex(&self, c: Corner) -> Marked {
        self.vertex[c.index()]
    }

    pub fn has_corner(&self, c: Corner) -> bool {
        c.position < 3 && c.triangle() < self.num_triangles()
    }

    pub fn has_slot(&self, s: Slot) -> bool {
        (s.0 as usize) < self.twin.len()
    }

    /// Edges whose two ends are `P1` and `P2`, in label order.
    pub fn p1_p2_edges(&self) -> Vec<EdgeLabel> {
        self.edge_labels()
            .filter(|&e| {
                let s = self.slot_of(e, true).unwrap();
                self.vertex(s.tail()) != self.vertex(s.head())
            })
            .collect()
    }

    pub fn is_flippable(&self, e: EdgeLabel) -> bool {
        match self.slot_of(e, true) {
            Some(a) => a.triangle() != self.twin(a).triangle(),
            None => false,
        }
    }

    pub fn flippable_edges(&self) -> Vec<EdgeLabel> {
        self.edge_labels()
            .filter(|&e| self.is_flippable(e))
            .collect()
    }

    /// Replace edge `e` by the other diagonal of the quadrilateral formed by
    /// its two triangles. The new diagonal keeps label `e`.
    pub fn flip(&self, e: EdgeLabel) -> Result<(Triangulation, Flip), FlipError> {
        let a = self.slot_of(e, true).ok_or(FlipError::NoSuchEdge(e))?;
        let b = self.twin(a);
        let (ta, tb) = (a.triangle(), b.triangle());
        if ta == tb {
            return Err(FlipError::Unflippable(e));
        }
        let (i, j) = (a.position(), b.position());
        let at = |p: u8| Slot::new(ta, (i + p) % 3);
        let bt = |p: u8| Slot::new(tb, (j + p) % 3);
        let q0 = self.vertex(at(0).tail());
        let q2 = self.vertex(at(1).tail());
        let q3 = self.vertex(at(2).tail());
        let q1 = self.vertex(bt(2).tail());
        let old = [bt(1), bt(2), at(1), at(2)];
        let new = [
            Slot::new(ta, 1),
            Slot::new(tb, 0),
            Slot::new(tb, 1),
            Slot::new(ta, 0),
        ];
        let remap = |s: Slot| old.iter().position(|&o| o == s).map_or(s, |k| new[k]);

        let mut out = self.clone();
        for k in 0..4 {
            let (o, n) = (old[k], new[k]);
            let ot = self.twin(o);
            let nt = remap(ot);
            out.twin[n.0 as usize] = nt.0;
            if !old.contains(&ot) {
                out.twin[ot.0 as usize] = n.0;
            }
            out.label[n.0 as usize] = self.edge(o);
            out.positive[n.0 as usize] = self.is_positive(o);
        }
        let (fa, fb) = (Slot::new(ta, 2), Slot::new(tb, 2));
        out.twin[fa.0 as usize] = fb.0;
        out.twin[fb.0 as usize] = fa.0;
        out.label[fa.0 as usize] = e;
        out.label[fb.0 as usize] = e;
        out.positive[fa.0 as usize] = true;
        out.positive[fb.0 as usize] = false;
        for s in [new[0], new[1], new[2], new[3], fa, fb] {
            let l = out.edge(s) as usize - 1;
            let side = usize::from(!out.is_positive(s));
            out.edge_slots[l][side] = s.0;
        }
        for (k, v) in [q3, q0, q1].into_iter().enumerate() {
            out.vertex[3 * ta + k] = v;
        }
        for (k, v) in [q1, q2, q3].into_iter().enumerate() {
            out.vertex[3 * tb + k] = v;
        }

        let place = |start: u8, vals: [u8; 3]| {
            let mut r = [0u8; 3];
            for (p, v) in vals.into_iter().enumerate() {
                r[(start as usize + p) % 3] = v;
            }
            r
        };
        let placeq = |start: u8, vals: [QuadSide; 3]| {
            let mut r = [QuadSide::Diagonal; 3];
            for (p, v) in vals.into_iter().enumerate() {
                r[(start as usize + p) % 3] = v;
            }
            r
        };
        use QuadSide::{Boundary as Bd, Diagonal as Dg};
        let before = QuadLayout {
            triangles: [ta as u32, tb as u32],
            corners: [place(i, [0, 2, 3]), place(j, [2, 0, 1])],
            sides: [placeq(i, [Dg, Bd(2), Bd(3)]), placeq(j, [Dg, Bd(0), Bd(1)])],
        };
        let after = QuadLayout {
            triangles: [ta as u32, tb as u32],
            corners: [[3, 0, 1], [1, 2, 3]],
            sides: [[Bd(3), Bd(0), Dg], [Bd(1), Bd(2), Dg]],
        };
        out.id = fingerprint_of(&out.to_table());
        Ok((
            out,
            Flip {
                edge: e,
                before,
                after,
            },
        ))
    }

    /// Breadth-first relabelling from `start`, recording twins and vertex marks.
    fn relabel_from(&self, start: Slot) -> Vec<u32> {
        let n = self.num_triangles();
        let mut order: Vec<(usize, u8)> = Vec::with_capacity(n);
        let mut new_index = vec![u32::MAX; n];
        let mut rotation = vec![0u8; n];
        new_index[start.triangle()] = 0;
        rotation[start.triangle()] = start.position();
        order.push((start.triangle(), start.position()));
        let mut queue = VecDeque::from([0usize]);
        let mut code = Vec::with_capacity(6 * n);
        while let Some(idx) = queue.pop_front() {
            let (t, r) = order[idx];
            for k in 0..3u8 {
                let s = Slot::new(t, (r + k) % 3);
                let tw = self.twin(s);
                let u = tw.triangle();
                if new_index[u] == u32::MAX {
                    new_index[u] = order.len() as u32;
                    rotation[u] = tw.position();
                    queue.push_back(order.len());
                    order.push((u, tw.position()));
                }
                let local = (tw.position() + 3 - rotation[u]) % 3;
                code.push(new_index[u] * 3 + u32::from(local));
                code.push(self.vertex(s.tail()) as u32);
            }
        }
        code
    }

    /// Canonical code: minimum breadth-first relabelling over all start slots.
    pub fn canonical_form(&self) -> Vec<u32> {
        self.slots()
            .map(|s| self.relabel_from(s))
            .min()
            .unwrap_or_default()
    }

    /// Combinatorial isomorphism preserving orientation and the `P1`/`P2` marks.
    pub fn is_isomorphic(&self, other: &Triangulation) -> bool {
        self.genus == other.genus
            && self.num_triangles() == other.num_triangles()
            && self.canonical_form() == other.canonical_form()
    }

    /// Hash of the gluing table; arcs record it to detect base mismatches.
    pub fn fingerprint(&self) -> u64 {
        self.id
    }
}
