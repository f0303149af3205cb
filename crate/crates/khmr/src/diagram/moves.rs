//! Diagram moves used to test invariance.
//!
//! New crossings are described in local compass coordinates (`S, E, N, W`
//! counterclockwise); strands are threaded through them by splitting
//! existing edges. Where several local pictures are conceivable, every
//! candidate is built and the planar one with the requested property kept.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::model::{Crossing, GateStrand, MrDiagram, Vertex};
use crate::chain::Sign;
use crate::error::{Error, Result};

/// A move on a diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Add a kink on `edge`; `left` puts the loop on the left of the strand.
    R1Add { edge: u32, positive: bool, left: bool },
    /// Remove the kink at crossing `crossing`.
    R1Remove { crossing: usize },
    /// Push `over` across `under`, creating a bigon.
    R2 { over: u32, under: u32 },
    /// Push a finger of `edge` through gate `gate`; its width grows by two.
    Finger { gate: usize, edge: u32 },
    /// Wrap `edge` around the strands leaving gate `gate` through its top.
    Wrap { gate: usize, edge: u32, positive: bool },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    S = 0,
    E = 1,
    N = 2,
    W = 3,
}

/// A crossing under construction.
#[derive(Clone, Copy, Default)]
struct Local {
    slots: [u32; 4],
    arriving: [bool; 4],
    /// The `S-N` strand passes over.
    over_ns: bool,
}

impl Local {
    fn new(over_ns: bool) -> Self {
        Self { over_ns, ..Default::default() }
    }

    fn finish(&self) -> Crossing {
        let [s, e, n, w] = self.slots;
        if self.over_ns {
            Crossing::from_ccw([w, s, e, n], self.arriving[Dir::W as usize], self.arriving[Dir::S as usize])
        } else {
            Crossing::from_ccw([s, e, n, w], self.arriving[Dir::S as usize], self.arriving[Dir::E as usize])
        }
    }
}

/// Split `e` at a sequence of stops, each `(crossing, in, out)` in travel
/// order. The first piece keeps the id `e`. Returns all pieces.
fn thread(d: &mut MrDiagram, e: u32, stops: &[(usize, Dir, Dir)], locals: &mut [Local], next: &mut u32) -> Result<Vec<u32>> {
    let head = d.head_end(e).ok_or_else(|| Error::Move(format!("edge {e} has no head")))?;
    let mut pieces = vec![e];
    for _ in stops {
        *next += 1;
        pieces.push(*next);
    }
    for (i, &(c, din, dout)) in stops.iter().enumerate() {
        locals[c].slots[din as usize] = pieces[i];
        locals[c].arriving[din as usize] = true;
        locals[c].slots[dout as usize] = pieces[i + 1];
    }
    if !stops.is_empty() {
        d.rename_at(head, *pieces.last().unwrap());
        d.edges.extend(&pieces[1..]);
    }
    Ok(pieces)
}

fn commit(d: &mut MrDiagram, locals: &[Local]) {
    d.crossings.extend(locals.iter().map(Local::finish));
    d.sort_edges();
}

fn planar(d: &MrDiagram) -> bool {
    d.genus().map(|g| g == 0).unwrap_or(false)
}

impl MrDiagram {
    /// Apply a move, returning the new diagram.
    pub fn apply_move(&self, m: Move) -> Result<MrDiagram> {
        let out = match m {
            Move::R1Add { edge, positive, left } => self.r1_add(edge, positive, left)?,
            Move::R1Remove { crossing } => self.r1_remove(crossing)?,
            Move::R2 { over, under } => self.r2(over, under)?,
            Move::Finger { gate, edge } => self.finger(gate, edge)?,
            Move::Wrap { gate, edge, positive } => self.wrap(gate, edge, positive)?,
        };
        out.validate()?;
        Ok(out)
    }

    fn check_edge(&self, e: u32) -> Result<()> {
        if self.edges.contains(&e) {
            Ok(())
        } else {
            Err(Error::Move(format!("no edge {e}")))
        }
    }

    fn r1_add(&self, edge: u32, positive: bool, left: bool) -> Result<MrDiagram> {
        self.check_edge(edge)?;
        let want = if positive { Sign::Pos } else { Sign::Neg };
        // First pass runs S -> N; the loop comes back in from the side.
        let (din, dout) = if left { (Dir::W, Dir::E) } else { (Dir::E, Dir::W) };
        for over_ns in [true, false] {
            let mut d = self.clone();
            let mut next = d.max_edge();
            let mut locals = [Local::new(over_ns)];
            thread(&mut d, edge, &[(0, Dir::S, Dir::N), (0, din, dout)], &mut locals, &mut next)?;
            commit(&mut d, &locals);
            if d.crossings.last().unwrap().sign == want && planar(&d) {
                return Ok(d);
            }
        }
        Err(Error::Move(format!("no kink of the requested sign on edge {edge}")))
    }

    fn r1_remove(&self, c: usize) -> Result<MrDiagram> {
        let x = *self.crossings.get(c).ok_or_else(|| Error::Move(format!("no crossing {c}")))?;
        let s = x.slots;
        let Some(i) = (0..4).find(|&i| s[i] == s[(i + 1) % 4]) else {
            return Err(Error::Move(format!("crossing {c} is not a kink")));
        };
        let ends = self.ends()?;
        let lp = s[i];
        let others = [s[(i + 2) % 4], s[(i + 3) % 4]];
        let at_c = |e: u32, head: bool| {
            let (t, h) = ends[&e];
            let end = if head { h } else { t };
            end.vertex == Vertex::Crossing(c)
        };
        let e_in = *others.iter().find(|&&e| at_c(e, true) && e != lp).unwrap();
        let e_out = *others.iter().find(|&&e| at_c(e, false) && e != lp).unwrap();
        let mut d = self.clone();
        if e_in == e_out {
            d.edges.retain(|&e| e != lp && e != e_in);
            d.loops += 1;
        } else {
            d.rename_at(ends[&e_out].1, e_in);
            d.edges.retain(|&e| e != lp && e != e_out);
        }
        d.crossings.remove(c);
        Ok(d)
    }

    fn r2(&self, a: u32, b: u32) -> Result<MrDiagram> {
        self.check_edge(a)?;
        self.check_edge(b)?;
        if a == b {
            return Err(Error::Move("a Reidemeister II move needs two different edges".into()));
        }
        for b_first in [0usize, 1] {
            for (d1, d2) in [(true, true), (true, false), (false, true), (false, false)] {
                for a_over in [true, false] {
                    let mut d = self.clone();
                    let mut next = d.max_edge();
                    let mut locals = [Local::new(a_over), Local::new(a_over)];
                    let pa = thread(&mut d, a, &[(0, Dir::S, Dir::N), (1, Dir::S, Dir::N)], &mut locals, &mut next)?;
                    let hop = |east: bool| if east { (Dir::W, Dir::E) } else { (Dir::E, Dir::W) };
                    let ((i1, o1), (i2, o2)) = (hop(d1), hop(d2));
                    let stops = [(b_first, i1, o1), (1 - b_first, i2, o2)];
                    let pb = thread(&mut d, b, &stops, &mut locals, &mut next)?;
                    commit(&mut d, &locals);
                    if !planar(&d) {
                        continue;
                    }
                    let bigon: BTreeSet<u32> = [pa[1], pb[1]].into();
                    let faces = d.faces()?;
                    if faces.iter().any(|f| f.len() == 2 && f.iter().map(|s| s.0).collect::<BTreeSet<_>>() == bigon) {
                        return Ok(d);
                    }
                }
            }
        }
        Err(Error::Move(format!("edges {a} and {b} do not share a face")))
    }

    fn finger(&self, g: usize, y: u32) -> Result<MrDiagram> {
        self.check_edge(y)?;
        if g >= self.gates.len() {
            return Err(Error::Move(format!("no gate {g}")));
        }
        let head = self.ends()?[&y].1;
        for at_left in [true, false] {
            for from_bottom in [true, false] {
                for a_outer in [true, false] {
                    let mut d = self.clone();
                    let (cap, yb) = (d.max_edge() + 1, d.max_edge() + 2);
                    d.rename_at(head, yb);
                    d.edges.extend([cap, yb]);
                    d.sort_edges();
                    let (a, b) = if from_bottom {
                        (GateStrand { bottom: y, top: cap, up: true }, GateStrand { bottom: yb, top: cap, up: false })
                    } else {
                        (GateStrand { bottom: cap, top: y, up: false }, GateStrand { bottom: cap, top: yb, up: true })
                    };
                    let pair = if a_outer == at_left { [a, b] } else { [b, a] };
                    let strands = &mut d.gates[g].strands;
                    let at = if at_left { 0 } else { strands.len() };
                    strands.splice(at..at, pair);
                    if planar(&d) {
                        return Ok(d);
                    }
                }
            }
        }
        Err(Error::Move(format!("edge {y} does not border gate {g}")))
    }

    fn wrap(&self, g: usize, x: u32, positive: bool) -> Result<MrDiagram> {
        self.check_edge(x)?;
        let gate = self.gates.get(g).ok_or_else(|| Error::Move(format!("no gate {g}")))?.clone();
        let n = gate.width();
        let agrees: Vec<bool> = gate.strands.iter().map(|s| s.up == (gate.orientation == 1)).collect();
        let tops: Vec<u32> = gate.strands.iter().map(|s| s.top).collect();
        for from_west in [true, false] {
            for near_first in [true, false] {
                for first_over in [true, false] {
                    // Crossing (row, j) has index row * n + j; row 0 is next to the gate.
                    let mut locals: Vec<Local> = (0..2 * n)
                        .map(|i| Local::new((i / n == 0) == (near_first != first_over)))
                        .collect();
                    let rows = if near_first { [0, 1] } else { [1, 0] };
                    let mut lasso = vec![];
                    for (pass, &row) in rows.iter().enumerate() {
                        let east = (pass == 0) == from_west;
                        let order: Vec<usize> = if east { (0..n).collect() } else { (0..n).rev().collect() };
                        for j in order {
                            let (i, o) = if east { (Dir::W, Dir::E) } else { (Dir::E, Dir::W) };
                            lasso.push((row * n + j, i, o));
                        }
                    }
                    let mut d = self.clone();
                    let mut next = d.max_edge();
                    let mut wrapped = false;
                    for j in 0..n {
                        let up = gate.strands[j].up;
                        let (c0, c1) = (j, n + j);
                        let mut stops = if up {
                            vec![(c0, Dir::S, Dir::N), (c1, Dir::S, Dir::N)]
                        } else {
                            vec![(c1, Dir::N, Dir::S), (c0, Dir::N, Dir::S)]
                        };
                        if tops[j] == x {
                            // The wrap goes on the far side of the rows.
                            wrapped = true;
                            if up {
                                stops.extend(&lasso);
                            } else {
                                stops.splice(0..0, lasso.iter().copied());
                            }
                        }
                        thread(&mut d, tops[j], &stops, &mut locals, &mut next)?;
                    }
                    if !wrapped {
                        thread(&mut d, x, &lasso, &mut locals, &mut next)?;
                    }
                    let first_new = d.crossings.len();
                    commit(&mut d, &locals);
                    let wrap_signs_ok = (0..2 * n).all(|i| {
                        let s = d.crossings[first_new + i].sign;
                        (s == Sign::Pos) == (agrees[i % n] == positive)
                    });
                    if wrap_signs_ok && planar(&d) {
                        return Ok(d);
                    }
                }
            }
        }
        Err(Error::Move(format!("edge {x} cannot wrap gate {g} with the requested sign")))
    }
}
