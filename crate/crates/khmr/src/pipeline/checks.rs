use serde::Serialize;

use super::{khovanov_homology, KhOptions, KhResult};
use crate::diagram::{knotify, Move, MrDiagram, Point};
use crate::error::{Error, Result};

/// Outcome of [`wrap_shift_check`].
#[derive(Clone, Debug, Serialize)]
pub struct WrapReport {
    pub gate: usize,
    pub edge: u32,
    pub positive: bool,
    pub eta: i64,
    /// `(h, q)` shift predicted for the wrapped table.
    pub shift: (i32, i32),
    pub h_min: i32,
    pub original: KhResult,
    pub wrapped: KhResult,
    pub passed: bool,
}

/// Wrap `edge` (by default the first top edge of the gate) around gate
/// `gate` and check that the table moves by `(±eta, ±3 eta)`.
pub fn wrap_shift_check(d: &MrDiagram, gate: usize, positive: bool, edge: Option<u32>, h_min: i32) -> Result<WrapReport> {
    let g = d.gates.get(gate).ok_or_else(|| Error::Move(format!("no gate {gate}")))?;
    let edge = edge.unwrap_or(g.strands[0].top);
    let wrapped_d = d.apply_move(Move::Wrap { gate, edge, positive })?;
    let eta = d.shifting_data()[gate].eta;
    let s = if positive { 1 } else { -1 };
    let shift = ((s * eta) as i32, (3 * s * eta) as i32);
    // The shifted original must cover the whole window of the wrapped one.
    let original = khovanov_homology(d, &KhOptions::new(h_min - shift.0.max(0)))?;
    let wrapped = khovanov_homology(&wrapped_d, &KhOptions::new(h_min))?;
    let passed = wrapped.table.restrict(h_min) == original.table.shift(shift.0, shift.1).restrict(h_min);
    Ok(WrapReport { gate, edge, positive, eta, shift, h_min, original, wrapped, passed })
}

/// Knotify a classical link at the given point pairs and compute the
/// homology of the result.
pub fn knotification_homology(l: &MrDiagram, pairs: &[(Point, Point)], opts: &KhOptions) -> Result<(MrDiagram, KhResult)> {
    let k = knotify(l, pairs)?;
    let h = khovanov_homology(&k, opts)?;
    Ok((k, h))
}
