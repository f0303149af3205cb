//! Knotification: join the components of a link in `S^3` through surgery
//! gates, one gate per pair of points.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::model::{Crossing, Gate, GateStrand, MrDiagram};
use crate::chain::Sign;
use crate::error::{Error, Result};

/// A point on an edge. Points on one edge are ordered by `pos` along the
/// edge's direction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Point {
    pub edge: u32,
    #[serde(default)]
    pub pos: u32,
}

/// Parse pairs written as `e1:pos1-e2:pos2,...`; `:pos` may be omitted.
pub fn parse_pairs(text: &str) -> Result<Vec<(Point, Point)>> {
    let point = |s: &str| -> Result<Point> {
        let (e, p) = s.trim().split_once(':').unwrap_or((s.trim(), "0"));
        let bad = || Error::Knotify(format!("bad point {s:?}"));
        Ok(Point { edge: e.trim().parse().map_err(|_| bad())?, pos: p.trim().parse().map_err(|_| bad())? })
    };
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair.split_once('-').ok_or_else(|| Error::Knotify(format!("bad pair {pair:?}")))?;
            Ok((point(a)?, point(b)?))
        })
        .collect()
}

/// Cut positions made so far on each original edge, with the piece after
/// each cut, in travel order.
#[derive(Default)]
struct Cuts {
    per_edge: BTreeMap<u32, (Vec<u32>, Vec<u32>)>,
}

impl Cuts {
    /// Cut at `p`, returning `(arriving piece, leaving piece)`.
    fn cut(&mut self, d: &mut MrDiagram, p: Point) -> Result<(u32, u32)> {
        let (pos, pieces) = self.per_edge.entry(p.edge).or_insert_with(|| (vec![], vec![p.edge]));
        let i = pos.partition_point(|&x| x < p.pos);
        if pos.get(i) == Some(&p.pos) {
            return Err(Error::Knotify(format!("point {}:{} used twice", p.edge, p.pos)));
        }
        let before = pieces[i];
        let after = d.max_edge() + 1;
        let head = d.head_end(before).ok_or_else(|| Error::Knotify(format!("edge {} has no head", p.edge)))?;
        d.rename_at(head, after);
        d.edges.push(after);
        pos.insert(i, p.pos);
        pieces.insert(i + 1, after);
        Ok((before, after))
    }
}

fn components_by_edge(d: &MrDiagram) -> Result<BTreeMap<u32, usize>> {
    Ok(d.components()?.into_iter().enumerate().flat_map(|(i, c)| c.into_iter().map(move |e| (e, i))).collect())
}

/// Knotify a link diagram with `r + 1` components along `r` point pairs.
///
/// Each pair `(P, Q)` becomes a width-2 gate whose strands run oppositely,
/// so every gate has `eta = 0`. When no planar placement exists, a positive
/// crossing is added between the gate and `Q`.
pub fn knotify(l: &MrDiagram, pairs: &[(Point, Point)]) -> Result<MrDiagram> {
    l.validate()?;
    if l.r() != 0 {
        return Err(Error::Knotify("knotification starts from a diagram without gates".into()));
    }
    if l.loops > 0 {
        return Err(Error::Knotify("free loops carry no edge to attach to; add a kink".into()));
    }
    let comp = components_by_edge(l)?;
    let count = l.component_count()?;
    if count != pairs.len() + 1 {
        return Err(Error::Knotify(format!("{count} components need {} pairs, got {}", count - 1, pairs.len())));
    }
    // The pairing graph must be a tree on the components.
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (p, q) in pairs {
        let cp = *comp.get(&p.edge).ok_or_else(|| Error::Knotify(format!("no edge {}", p.edge)))?;
        let cq = *comp.get(&q.edge).ok_or_else(|| Error::Knotify(format!("no edge {}", q.edge)))?;
        let (a, b) = (find(&mut parent, cp), find(&mut parent, cq));
        if a == b {
            return Err(Error::Knotify("pairing graph has a cycle or a pair within one component".into()));
        }
        parent[a] = b;
    }
    let mut d = l.clone();
    let mut cuts = Cuts::default();
    for (i, &(p, q)) in pairs.iter().enumerate() {
        let (e1a, e1b) = cuts.cut(&mut d, p)?;
        let (e2a, e2b) = cuts.cut(&mut d, q)?;
        d = place_gate(&d, e1a, e1b, e2a, e2b).ok_or_else(|| Error::Knotify(format!("pair {i} points do not share a face")))?;
    }
    d.sort_edges();
    d.validate()?;
    Ok(d)
}

/// Add the gate: strand `alpha` runs up from `e1a` into `e2b`, strand `beta`
/// down from `e2a` into `e1b`.
fn place_gate(d: &MrDiagram, e1a: u32, e1b: u32, e2a: u32, e2b: u32) -> Option<MrDiagram> {
    let planar = |d: &MrDiagram| d.genus().map(|g| g == 0).unwrap_or(false);
    let gate = |alpha: GateStrand, beta: GateStrand, alpha_left: bool| Gate {
        strands: if alpha_left { vec![alpha, beta] } else { vec![beta, alpha] },
        orientation: if alpha_left { 1 } else { -1 },
        insert_at: String::new(),
    };
    for alpha_left in [true, false] {
        let mut c = d.clone();
        let alpha = GateStrand { bottom: e1a, top: e2b, up: true };
        let beta = GateStrand { bottom: e1b, top: e2a, up: false };
        c.gates.push(gate(alpha, beta, alpha_left));
        if planar(&c) {
            return Some(c);
        }
    }
    // A positive crossing between the gate's top edges and Q.
    for alpha_left in [true, false] {
        for beta_east in [true, false] {
            for alpha_over in [true, false] {
                let mut c = d.clone();
                let (ua, ub) = (c.max_edge() + 1, c.max_edge() + 2);
                c.edges.extend([ua, ub]);
                // alpha: ua enters from S, leaves N as e2b; beta crosses W-E.
                let (b_in, b_out) = if beta_east { (3, 1) } else { (1, 3) };
                let mut slots = [0u32; 4];
                slots[0] = ua;
                slots[2] = e2b;
                slots[b_in] = e2a;
                slots[b_out] = ub;
                let [s, e, n, w] = slots;
                let x = if alpha_over {
                    Crossing::from_ccw([w, s, e, n], beta_east, true)
                } else {
                    Crossing::from_ccw([s, e, n, w], true, !beta_east)
                };
                if x.sign != Sign::Pos {
                    continue;
                }
                c.crossings.push(x);
                let alpha = GateStrand { bottom: e1a, top: ua, up: true };
                let beta = GateStrand { bottom: e1b, top: ub, up: false };
                c.gates.push(gate(alpha, beta, alpha_left));
                if planar(&c) {
                    return Some(c);
                }
            }
        }
    }
    None
}
