//! Arcs joining the two marked points of a closed oriented surface.
//!
//! Arcs are stored as reduced crossing words over an ideal triangulation
//! whose only vertices are the marked points. On top of that representation
//! the crate computes minimal intersection numbers (by two independent
//! routes), builds paths in the arc complex by surgery, certifies arc
//! distances 0, 1 and 2 exactly, and converts between arc sequences and
//! level positions of knots in one-bridge position.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arc;
pub mod distance;
mod error;
pub mod leveling;
pub mod overlay;
pub mod surface;
pub mod surgery;

pub use arc::{ArcWord, RawWord};
pub use distance::{DistanceCertificate, ShadowPairInput, Verdict};
pub use error::Error;
pub use leveling::{ArcSequence, LevelPosition};
pub use overlay::Overlay;
pub use surface::{Corner, EdgeLabel, Marked, Slot, Triangulation, TriangulationTable};
pub use surgery::SurgeryTrace;
