//! JSON documents read and written by the command-line tool.
//!
//! Every document that mentions arcs embeds the triangulation they live on,
//! so a file can be checked with nothing else at hand. Field layouts are
//! described in `docs/formats.md` and as JSON Schema under `schemas/`.

use arcdist_core::distance::{DistanceCertificate, PairSetCertificate, SearchBounds, Verdict};
use arcdist_core::leveling::{
    KnotPoint, Level, LevelPosition, LevelReport, Strand, StrandKind, Tube,
};
use arcdist_core::{ArcWord, Corner, Marked, Slot, Triangulation, TriangulationTable};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const DISTANCE_FORMAT: &str = "arcdist/distance-certificate";
pub const PATH_FORMAT: &str = "arcdist/path-certificate";
pub const LEVEL_FORMAT: &str = "arcdist/level-certificate";
pub const VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CornerJson {
    pub triangle: u32,
    pub corner: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideJson {
    pub triangle: u32,
    pub side: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationJson {
    pub genus: u32,
    pub triangles: Vec<[i32; 3]>,
    pub p1: CornerJson,
}

/// `base` is the fingerprint of the triangulation the word was written
/// against, as 16 lowercase hex digits. It is optional on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    pub start: CornerJson,
    pub crossings: Vec<SideJson>,
    pub end: CornerJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairInput {
    pub triangulation: TriangulationJson,
    pub v: ArcJson,
    pub w: ArcJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShadowInputJson {
    pub triangulation: TriangulationJson,
    pub v_side: Vec<ArcJson>,
    pub w_side: Vec<ArcJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum VerdictJson {
    Exact(u32),
    Bounds { lower: u32, upper: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchJson {
    pub max_len: usize,
    pub max_depth: usize,
}

/// Everything about one pair apart from the triangulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistanceBody {
    pub v: ArcJson,
    pub w: ArcJson,
    pub verdict: VerdictJson,
    pub intersection: usize,
    pub witness: Option<ArcJson>,
    pub path: Vec<ArcJson>,
    pub search: Option<SearchJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistanceCertJson {
    pub format: String,
    pub version: u32,
    pub triangulation: TriangulationJson,
    #[serde(flatten)]
    pub body: DistanceBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathCertJson {
    pub format: String,
    pub version: u32,
    pub triangulation: TriangulationJson,
    pub v: ArcJson,
    pub w: ArcJson,
    pub intersection: usize,
    /// Runs from `w` to `v`.
    pub path: Vec<ArcJson>,
    /// Intersection of each path arc with `v`.
    pub descent: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MarkedJson {
    P1,
    P2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum PointJson {
    At {
        level: u32,
        point: MarkedJson,
    },
    Foot {
        level: u32,
        tube: u32,
        point: MarkedJson,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum StrandKindJson {
    Arc(u32),
    Stub { arc: u32, end: MarkedJson },
    Vertical { tube: u32, end: MarkedJson },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrandJson {
    pub kind: StrandKindJson,
    pub from: PointJson,
    pub to: PointJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelJson {
    pub index: u32,
    pub strands: Vec<StrandJson>,
    pub arcs: Vec<ArcJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TubeJson {
    pub index: u32,
    pub core: Option<ArcJson>,
    pub p: StrandJson,
    pub q: StrandJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositionJson {
    pub genus: u32,
    pub ambient_genus: u32,
    pub levels: Vec<LevelJson>,
    pub tubes: Vec<TubeJson>,
    pub cycle: Vec<StrandKindJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelCertJson {
    pub format: String,
    pub version: u32,
    pub triangulation: TriangulationJson,
    pub v_side: Vec<ArcJson>,
    pub w_side: Vec<ArcJson>,
    /// Indices of the pair attaining the minimum.
    pub v_index: usize,
    pub w_index: usize,
    pub best: DistanceBody,
    pub level: VerdictJson,
    pub trivial_knot: bool,
    pub knot_upper_bound_only: bool,
    pub position: Option<PositionJson>,
}

/// Any certificate, told apart by its `format` field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Distance(DistanceCertJson),
    Path(PathCertJson),
    Level(LevelCertJson),
}

pub fn parse_certificate(text: &str) -> Result<Certificate, CliError> {
    #[derive(Deserialize)]
    struct Header {
        format: String,
        version: u32,
    }
    let header: Header = serde_json::from_str(text)?;
    if header.version != VERSION {
        return Err(CliError::Schema(format!(
            "unsupported version {}",
            header.version
        )));
    }
    match header.format.as_str() {
        DISTANCE_FORMAT => Ok(Certificate::Distance(serde_json::from_str(text)?)),
        PATH_FORMAT => Ok(Certificate::Path(serde_json::from_str(text)?)),
        LEVEL_FORMAT => Ok(Certificate::Level(serde_json::from_str(text)?)),
        other => Err(CliError::Schema(format!(
            "unknown certificate format {other:?}"
        ))),
    }
}

fn corner_from(c: CornerJson) -> Result<Corner, CliError> {
    if c.corner > 2 {
        return Err(CliError::Schema(format!(
            "corner index {} is not 0, 1 or 2",
            c.corner
        )));
    }
    Ok(Corner::new(c.triangle as usize, c.corner))
}

fn corner_to(c: Corner) -> CornerJson {
    CornerJson {
        triangle: c.triangle,
        corner: c.position,
    }
}

impl TriangulationJson {
    pub fn from_core(t: &Triangulation) -> Self {
        let table = t.to_table();
        TriangulationJson {
            genus: table.genus,
            triangles: table.triangles,
            p1: corner_to(table.p1),
        }
    }

    pub fn table(&self) -> Result<TriangulationTable, CliError> {
        Ok(TriangulationTable {
            genus: self.genus,
            triangles: self.triangles.clone(),
            p1: corner_from(self.p1)?,
        })
    }

    pub fn to_core(&self) -> Result<Triangulation, CliError> {
        Ok(Triangulation::from_table(&self.table()?)?)
    }
}

pub fn fingerprint_hex(t: &Triangulation) -> String {
    format!("{:016x}", t.fingerprint())
}

impl ArcJson {
    pub fn from_core(t: &Triangulation, a: &ArcWord) -> Self {
        ArcJson {
            base: Some(fingerprint_hex(t)),
            start: corner_to(a.start()),
            crossings: a
                .crossings()
                .iter()
                .map(|s| SideJson {
                    triangle: s.triangle() as u32,
                    side: s.position(),
                })
                .collect(),
            end: corner_to(a.end()),
        }
    }

    /// Parse and check against `t`. The word must already be reduced; use
    /// [`ArcJson::to_core_tightened`] to accept any consistent word.
    pub fn to_core(&self, t: &Triangulation) -> Result<ArcWord, CliError> {
        self.check_base(t)?;
        let (start, crossings, end) = self.parts()?;
        Ok(ArcWord::from_parts(t, start, crossings, end)?)
    }

    pub fn to_core_tightened(&self, t: &Triangulation) -> Result<ArcWord, CliError> {
        self.check_base(t)?;
        let (start, crossings, end) = self.parts()?;
        let raw = arcdist_core::RawWord {
            start,
            crossings,
            end,
        };
        let a = arcdist_core::arc::tighten(t, &raw)?;
        a.check(t)?;
        Ok(a)
    }

    fn check_base(&self, t: &Triangulation) -> Result<(), CliError> {
        match &self.base {
            Some(b) if *b != fingerprint_hex(t) => Err(CliError::BaseMismatch(format!(
                "arc written for triangulation {b}, found {}",
                fingerprint_hex(t)
            ))),
            _ => Ok(()),
        }
    }

    fn parts(&self) -> Result<(Corner, Vec<Slot>, Corner), CliError> {
        let crossings = self
            .crossings
            .iter()
            .map(|s| {
                if s.side > 2 {
                    Err(CliError::Schema(format!(
                        "side index {} is not 0, 1 or 2",
                        s.side
                    )))
                } else {
                    Ok(Slot::new(s.triangle as usize, s.side))
                }
            })
            .collect::<Result<_, _>>()?;
        Ok((corner_from(self.start)?, crossings, corner_from(self.end)?))
    }
}

pub fn arcs_to_core(t: &Triangulation, arcs: &[ArcJson]) -> Result<Vec<ArcWord>, CliError> {
    arcs.iter().map(|a| a.to_core(t)).collect()
}

pub fn arcs_from_core(t: &Triangulation, arcs: &[ArcWord]) -> Vec<ArcJson> {
    arcs.iter().map(|a| ArcJson::from_core(t, a)).collect()
}

impl VerdictJson {
    pub fn from_core(v: Verdict) -> Self {
        match v {
            Verdict::Exact(d) => VerdictJson::Exact(d),
            Verdict::Bounds { lower, upper } => VerdictJson::Bounds { lower, upper },
        }
    }

    pub fn to_core(self) -> Verdict {
        match self {
            VerdictJson::Exact(d) => Verdict::Exact(d),
            VerdictJson::Bounds { lower, upper } => Verdict::Bounds { lower, upper },
        }
    }
}

impl DistanceBody {
    pub fn from_core(t: &Triangulation, c: &DistanceCertificate) -> Self {
        DistanceBody {
            v: ArcJson::from_core(t, &c.v),
            w: ArcJson::from_core(t, &c.w),
            verdict: VerdictJson::from_core(c.verdict),
            intersection: c.intersection,
            witness: c.witness.as_ref().map(|u| ArcJson::from_core(t, u)),
            path: arcs_from_core(t, &c.path),
            search: c.search.map(|s| SearchJson {
                max_len: s.max_len,
                max_depth: s.max_depth,
            }),
        }
    }

    pub fn to_core(&self, t: &Triangulation) -> Result<DistanceCertificate, CliError> {
        Ok(DistanceCertificate {
            v: self.v.to_core(t)?,
            w: self.w.to_core(t)?,
            verdict: self.verdict.to_core(),
            intersection: self.intersection,
            witness: self.witness.as_ref().map(|u| u.to_core(t)).transpose()?,
            path: arcs_to_core(t, &self.path)?,
            search: self.search.map(|s| SearchBounds {
                max_len: s.max_len,
                max_depth: s.max_depth,
            }),
        })
    }
}

impl DistanceCertJson {
    pub fn from_core(t: &Triangulation, c: &DistanceCertificate) -> Self {
        DistanceCertJson {
            format: DISTANCE_FORMAT.into(),
            version: VERSION,
            triangulation: TriangulationJson::from_core(t),
            body: DistanceBody::from_core(t, c),
        }
    }
}

fn marked_to(m: Marked) -> MarkedJson {
    match m {
        Marked::P1 => MarkedJson::P1,
        Marked::P2 => MarkedJson::P2,
    }
}

fn marked_from(m: MarkedJson) -> Marked {
    match m {
        MarkedJson::P1 => Marked::P1,
        MarkedJson::P2 => Marked::P2,
    }
}

fn point_to(p: KnotPoint) -> PointJson {
    match p {
        KnotPoint::At { level, point } => PointJson::At {
            level,
            point: marked_to(point),
        },
        KnotPoint::Foot { level, tube, point } => PointJson::Foot {
            level,
            tube,
            point: marked_to(point),
        },
    }
}

fn point_from(p: PointJson) -> KnotPoint {
    match p {
        PointJson::At { level, point } => KnotPoint::At {
            level,
            point: marked_from(point),
        },
        PointJson::Foot { level, tube, point } => KnotPoint::Foot {
            level,
            tube,
            point: marked_from(point),
        },
    }
}

fn kind_to(k: StrandKind) -> StrandKindJson {
    match k {
        StrandKind::Arc(i) => StrandKindJson::Arc(i),
        StrandKind::Stub { arc, end } => StrandKindJson::Stub {
            arc,
            end: marked_to(end),
        },
        StrandKind::Vertical { tube, end } => StrandKindJson::Vertical {
            tube,
            end: marked_to(end),
        },
    }
}

fn kind_from(k: StrandKindJson) -> StrandKind {
    match k {
        StrandKindJson::Arc(i) => StrandKind::Arc(i),
        StrandKindJson::Stub { arc, end } => StrandKind::Stub {
            arc,
            end: marked_from(end),
        },
        StrandKindJson::Vertical { tube, end } => StrandKind::Vertical {
            tube,
            end: marked_from(end),
        },
    }
}

fn strand_to(s: Strand) -> StrandJson {
    StrandJson {
        kind: kind_to(s.kind),
        from: point_to(s.from),
        to: point_to(s.to),
    }
}

fn strand_from(s: StrandJson) -> Strand {
    Strand {
        kind: kind_from(s.kind),
        from: point_from(s.from),
        to: point_from(s.to),
    }
}

impl PositionJson {
    pub fn from_core(t: &Triangulation, p: &LevelPosition) -> Self {
        PositionJson {
            genus: p.genus,
            ambient_genus: p.ambient_genus,
            levels: p
                .levels
                .iter()
                .map(|l| LevelJson {
                    index: l.index,
                    strands: l.strands.iter().copied().map(strand_to).collect(),
                    arcs: arcs_from_core(t, &l.arcs),
                })
                .collect(),
            tubes: p
                .tubes
                .iter()
                .map(|tube| TubeJson {
                    index: tube.index,
                    core: tube.core.as_ref().map(|a| ArcJson::from_core(t, a)),
                    p: strand_to(tube.p),
                    q: strand_to(tube.q),
                })
                .collect(),
            cycle: p.cycle.iter().copied().map(kind_to).collect(),
        }
    }

    pub fn to_core(&self, t: &Triangulation) -> Result<LevelPosition, CliError> {
        let levels = self
            .levels
            .iter()
            .map(|l| {
                Ok(Level {
                    index: l.index,
                    strands: l.strands.iter().copied().map(strand_from).collect(),
                    arcs: arcs_to_core(t, &l.arcs)?,
                })
            })
            .collect::<Result<_, CliError>>()?;
        let tubes = self
            .tubes
            .iter()
            .map(|tube| {
                Ok(Tube {
                    index: tube.index,
                    core: tube.core.as_ref().map(|a| a.to_core(t)).transpose()?,
                    p: strand_from(tube.p),
                    q: strand_from(tube.q),
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(LevelPosition {
            genus: self.genus,
            ambient_genus: self.ambient_genus,
            levels,
            tubes,
            cycle: self.cycle.iter().copied().map(kind_from).collect(),
        })
    }
}

impl LevelCertJson {
    pub fn from_core(
        t: &Triangulation,
        v_side: &[ArcWord],
        w_side: &[ArcWord],
        r: &LevelReport,
    ) -> Self {
        let d: &PairSetCertificate = &r.distance;
        LevelCertJson {
            format: LEVEL_FORMAT.into(),
            version: VERSION,
            triangulation: TriangulationJson::from_core(t),
            v_side: arcs_from_core(t, v_side),
            w_side: arcs_from_core(t, w_side),
            v_index: d.v_index,
            w_index: d.w_index,
            best: DistanceBody::from_core(t, &d.best),
            level: VerdictJson::from_core(r.level),
            trivial_knot: r.trivial_knot,
            knot_upper_bound_only: r.knot_upper_bound_only,
            position: r
                .certificate
                .as_ref()
                .map(|p| PositionJson::from_core(t, p)),
        }
    }
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialise");
    s.push('\n');
    s
}
