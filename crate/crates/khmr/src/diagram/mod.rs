//! Link diagrams in `#^r(S^2 x S^1)`: parsing, validation, shifting data,
//! diagram moves and knotification.

mod io;
mod knotify;
mod lk;
mod model;
mod moves;

pub use io::{from_json, parse_any, parse_pd, to_json, to_pd, SIGN_CONVENTION};
pub use knotify::{knotify, parse_pairs, Point};
pub use lk::{braid_closure, build_lk};
pub use moves::Move;
pub use model::{Crossing, End, Gate, GateStrand, MrDiagram, ShiftingData, Vertex};

use crate::error::Result;

/// Parse a diagram file (JSON or bare PD) and validate it.
///
/// Odd gates give `Error::OddIntersection` only after every other check.
pub fn parse(text: &str) -> Result<MrDiagram> {
    let d = parse_any(text)?;
    d.validate()?;
    Ok(d)
}
