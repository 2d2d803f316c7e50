//! SVG pictures of certificates. Purely presentational: nothing drawn here
//! feeds back into a verdict.
//!
//! Standard triangulations are drawn as the polygon they are cut from, coned
//! to the centre. Any other triangulation is drawn as separate triangles in a
//! grid, sides labelled by edge so the gluing can be read off.

use std::fmt::Write;

use arcdist_core::arc::Pos;
use arcdist_core::leveling::{LevelPosition, StrandKind};
use arcdist_core::{ArcWord, Marked, Triangulation};

type Pt = (f64, f64);

const SIZE: f64 = 480.0;
const COLOURS: [&str; 6] = [
    "#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#117a65",
];

struct Layout {
    corners: Vec<[Pt; 3]>,
}

impl Layout {
    fn new(t: &Triangulation) -> Self {
        let g = t.genus();
        let standard = Triangulation::standard_table(g).is_ok_and(|s| s == t.to_table());
        let f = t.num_triangles();
        let mut corners = Vec::with_capacity(f);
        if standard {
            let n = f as f64;
            let c = SIZE / 2.0;
            let r = SIZE * 0.44;
            let vertex = |k: usize| {
                let a = std::f64::consts::TAU * (k as f64 + 0.5) / n - std::f64::consts::FRAC_PI_2;
                (c + r * a.cos(), c - r * a.sin())
            };
            for k in 0..f {
                corners.push([vertex(k), vertex((k + 1) % f), (c, c)]);
            }
        } else {
            let cols = (f as f64).sqrt().ceil() as usize;
            let cell = SIZE / cols as f64;
            for k in 0..f {
                let (x, y) = ((k % cols) as f64 * cell, (k / cols) as f64 * cell);
                let m = cell * 0.12;
                corners.push([
                    (x + m, y + cell - m),
                    (x + cell - m, y + cell - m),
                    (x + cell / 2.0, y + m),
                ]);
            }
        }
        Layout { corners }
    }

    fn corner(&self, tri: usize, k: u8) -> Pt {
        self.corners[tri][k as usize]
    }

    /// Point a fraction `s` of the way along side `k` from its tail.
    fn on_side(&self, tri: usize, k: u8, s: f64) -> Pt {
        let a = self.corner(tri, k);
        let b = self.corner(tri, (k + 1) % 3);
        (a.0 + (b.0 - a.0) * s, a.1 + (b.1 - a.1) * s)
    }
}

fn pt(p: Pt) -> String {
    format!("{:.1},{:.1}", p.0, p.1)
}

fn header(title: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{h}\" viewBox=\"0 0 {SIZE} {h}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n\
         <text x=\"10\" y=\"{ty}\" font-family=\"sans-serif\" font-size=\"14\">{title}</text>\n",
        h = SIZE + 30.0,
        ty = SIZE + 20.0,
    )
}

fn draw_triangulation(out: &mut String, t: &Triangulation, l: &Layout) {
    for tri in 0..t.num_triangles() {
        let c = l.corners[tri];
        let _ = writeln!(
            out,
            "<polygon points=\"{} {} {}\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"1\"/>",
            pt(c[0]),
            pt(c[1]),
            pt(c[2])
        );
        for k in 0..3u8 {
            let s = arcdist_core::Slot::new(tri, k);
            let m = l.on_side(tri, k, 0.5);
            let centroid = (
                (c[0].0 + c[1].0 + c[2].0) / 3.0,
                (c[0].1 + c[1].1 + c[2].1) / 3.0,
            );
            let p = (
                m.0 + (centroid.0 - m.0) * 0.12,
                m.1 + (centroid.1 - m.1) * 0.12,
            );
            let sign = if t.is_positive(s) { "" } else { "-" };
            let _ = writeln!(
                out,
                "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#888\" text-anchor=\"middle\">{sign}{}</text>",
                p.0,
                p.1,
                t.edge(s)
            );
        }
        for k in 0..3u8 {
            let p = l.corner(tri, k);
            let colour = match t.vertex(arcdist_core::Corner::new(tri, k)) {
                Marked::P1 => "#000",
                Marked::P2 => "#fff",
            };
            let _ = writeln!(
                out,
                "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"4\" fill=\"{colour}\" stroke=\"#000\"/>",
                p.0, p.1
            );
        }
    }
}

/// Entry and exit point of each passage of `a`, two points per triangle.
/// `lane` spreads several arcs apart where they share a side.
fn arc_points(t: &Triangulation, l: &Layout, a: &ArcWord, lane: f64) -> Vec<Pt> {
    let mut pts = Vec::new();
    for v in a.visits(t) {
        let p = |pos: Pos| match pos {
            Pos::Corner(k) => l.corner(v.triangle, k),
            Pos::Side(k) => {
                let s = arcdist_core::Slot::new(v.triangle, k);
                // Same physical point from both sides of the edge.
                let f = if t.is_positive(s) { lane } else { 1.0 - lane };
                l.on_side(v.triangle, k, f)
            }
        };
        pts.push(p(v.entry));
        pts.push(p(v.exit));
    }
    pts
}

fn draw_arc(
    out: &mut String,
    t: &Triangulation,
    l: &Layout,
    a: &ArcWord,
    colour: &str,
    lane: f64,
    width: f64,
) {
    let pts = arc_points(t, l, a, lane);
    for seg in pts.chunks(2) {
        if let [p, q] = seg {
            let _ = writeln!(
                out,
                "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{colour}\" stroke-width=\"{width}\" stroke-linecap=\"round\"/>",
                p.0, p.1, q.0, q.1
            );
        }
    }
}

fn lane(k: usize, n: usize) -> f64 {
    (k as f64 + 1.0) / (n as f64 + 1.0)
}

/// Arcs drawn on one picture, each with a caption.
pub fn arcs_svg(t: &Triangulation, title: &str, arcs: &[(&str, &ArcWord)]) -> String {
    let l = Layout::new(t);
    let mut out = header(title);
    draw_triangulation(&mut out, t, &l);
    for (k, (_, a)) in arcs.iter().enumerate() {
        draw_arc(
            &mut out,
            t,
            &l,
            a,
            COLOURS[k % COLOURS.len()],
            lane(k, arcs.len()),
            2.5,
        );
    }
    for (k, (name, _)) in arcs.iter().enumerate() {
        let _ = writeln!(
            out,
            "<text x=\"{:.1}\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\" fill=\"{}\">{name}</text>",
            10.0 + 70.0 * k as f64,
            COLOURS[k % COLOURS.len()]
        );
    }
    out.push_str("</svg>\n");
    out
}

/// One picture per level: the full arcs it carries, the stubs as short
/// pieces of the adjacent tube cores, and the tube disks at their ends.
pub fn level_svgs(t: &Triangulation, pos: &LevelPosition, arcs: &[ArcWord]) -> Vec<String> {
    let l = Layout::new(t);
    let mut pages = Vec::new();
    for level in &pos.levels {
        let mut out = header(&format!("level {} of {}", level.index, pos.levels.len()));
        draw_triangulation(&mut out, t, &l);
        for s in &level.strands {
            match s.kind {
                StrandKind::Arc(i) => {
                    let colour = COLOURS[i as usize % COLOURS.len()];
                    draw_arc(&mut out, t, &l, &arcs[i as usize], colour, 0.5, 2.5);
                }
                StrandKind::Stub { arc, end } => {
                    let a = &arcs[arc as usize];
                    let pts = arc_points(t, &l, a, 0.5);
                    let (p, q) = match end {
                        Marked::P1 => (pts[0], pts[1]),
                        Marked::P2 => (pts[pts.len() - 1], pts[pts.len() - 2]),
                    };
                    let tip = (p.0 + (q.0 - p.0) * 0.35, p.1 + (q.1 - p.1) * 0.35);
                    let colour = COLOURS[arc as usize % COLOURS.len()];
                    let _ = writeln!(
                        out,
                        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{colour}\" stroke-width=\"2.5\" stroke-dasharray=\"4 2\"/>",
                        p.0, p.1, tip.0, tip.1
                    );
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"6\" fill=\"#eee\" stroke=\"{colour}\"/>\n\
                         <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"9\">T{arc}</text>",
                        tip.0,
                        tip.1,
                        tip.0 + 8.0,
                        tip.1 - 6.0
                    );
                }
                StrandKind::Vertical { .. } => {}
            }
        }
        out.push_str("</svg>\n");
        pages.push(out);
    }
    pages
}
