use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::chain::Sign;
use crate::error::{Error, Result};
use crate::twist::TwistSpec;

/// A crossing of the diagram.
///
/// `slots` lists the four incident edges counterclockwise starting with the
/// edge on which the under strand arrives, so the under strand runs
/// `slots[0] -> slots[2]`. For a positive crossing the over strand runs
/// `slots[3] -> slots[1]`, for a negative one `slots[1] -> slots[3]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub slots: [u32; 4],
    pub sign: Sign,
}

impl Crossing {
    /// Build from the over and under strands, each given as `[in, out]`.
    pub fn from_strands(over: [u32; 2], under: [u32; 2], sign: Sign) -> Self {
        let slots = match sign {
            Sign::Pos => [under[0], over[1], under[1], over[0]],
            Sign::Neg => [under[0], over[0], under[1], over[1]],
        };
        Self { slots, sign }
    }

    /// Build from ccw slots with `slots[0] -> slots[2]` under, given the
    /// direction of each strand; the sign follows.
    pub fn from_ccw(slots: [u32; 4], under_forward: bool, over_forward: bool) -> Self {
        // over_forward: the over strand runs slots[1] -> slots[3].
        let s = if under_forward { slots } else { [slots[2], slots[3], slots[0], slots[1]] };
        let over_13 = over_forward == under_forward;
        let sign = if over_13 { Sign::Neg } else { Sign::Pos };
        Self { slots: s, sign }
    }

    pub fn over(&self) -> [u32; 2] {
        match self.sign {
            Sign::Pos => [self.slots[3], self.slots[1]],
            Sign::Neg => [self.slots[1], self.slots[3]],
        }
    }

    pub fn under(&self) -> [u32; 2] {
        [self.slots[0], self.slots[2]]
    }

    fn is_head_slot(&self, i: usize) -> bool {
        match (i, self.sign) {
            (0, _) => true,
            (2, _) => false,
            (3, Sign::Pos) | (1, Sign::Neg) => true,
            _ => false,
        }
    }
}

/// One strand passing through a gate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GateStrand {
    /// Edge attached below the gate.
    pub bottom: u32,
    /// Edge attached above the gate.
    pub top: u32,
    /// The strand travels from bottom to top.
    pub up: bool,
}

/// A surgery gate: the parallel strands crossing one surgery line, listed
/// left to right. The infinite twist is inserted here.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Gate {
    pub strands: Vec<GateStrand>,
    /// `+1` if the surgery line points the same way as an upward strand.
    pub orientation: i8,
    #[serde(default)]
    pub insert_at: String,
}

impl Gate {
    pub fn width(&self) -> usize {
        self.strands.len()
    }

    /// Edge ids counterclockwise around the gate: bottom left to right,
    /// then top right to left.
    pub fn ccw(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.strands.iter().map(|s| s.bottom).collect();
        v.extend(self.strands.iter().rev().map(|s| s.top));
        v
    }

    /// Whether ccw slot `i` is where its edge arrives at the gate.
    fn is_head_slot(&self, i: usize) -> bool {
        let n = self.width();
        if i < n {
            self.strands[i].up
        } else {
            !self.strands[2 * n - 1 - i].up
        }
    }

    pub fn spec(&self, k: usize) -> TwistSpec {
        TwistSpec { n: self.width(), k, up: self.strands.iter().map(|s| s.up).collect() }
    }
}

/// A link diagram in `#^r(S^2 x S^1)` in gate normal form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MrDiagram {
    pub edges: Vec<u32>,
    pub crossings: Vec<Crossing>,
    pub gates: Vec<Gate>,
    /// Crossingless circles disjoint from everything else.
    pub loops: u32,
}

/// A vertex of the diagram graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Vertex {
    Crossing(usize),
    Gate(usize),
}

/// Where an edge meets a vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct End {
    pub vertex: Vertex,
    pub slot: usize,
}

/// Per-gate quantities entering the grading shifts.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ShiftingData {
    pub n: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    /// `2 n^- - n^+`.
    pub big_n: i64,
    pub eta: i64,
}

impl MrDiagram {
    /// An ordinary link diagram from crossings alone.
    pub fn classical(crossings: Vec<Crossing>) -> Self {
        let edges: BTreeSet<u32> = crossings.iter().flat_map(|c| c.slots).collect();
        Self { edges: edges.into_iter().collect(), crossings, gates: vec![], loops: 0 }
    }

    pub fn r(&self) -> usize {
        self.gates.len()
    }

    pub fn max_edge(&self) -> u32 {
        self.edges.iter().copied().max().unwrap_or(0)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.crossings.len()).map(Vertex::Crossing).chain((0..self.gates.len()).map(Vertex::Gate)).collect()
    }

    /// Edge ids around a vertex, counterclockwise.
    pub fn rotation(&self, v: Vertex) -> Vec<u32> {
        match v {
            Vertex::Crossing(i) => self.crossings[i].slots.to_vec(),
            Vertex::Gate(g) => self.gates[g].ccw(),
        }
    }

    fn is_head(&self, e: End) -> bool {
        match e.vertex {
            Vertex::Crossing(i) => self.crossings[i].is_head_slot(e.slot),
            Vertex::Gate(g) => self.gates[g].is_head_slot(e.slot),
        }
    }

    /// Where `e` arrives, found by scanning vertices; works on diagrams
    /// that are still being rewired.
    pub(crate) fn head_end(&self, e: u32) -> Option<End> {
        self.vertices().into_iter().find_map(|v| {
            self.rotation(v)
                .into_iter()
                .enumerate()
                .map(|(slot, x)| (x, End { vertex: v, slot }))
                .find(|&(x, end)| x == e && self.is_head(end))
                .map(|(_, end)| end)
        })
    }

    /// For each edge, its `(tail, head)` ends.
    pub fn ends(&self) -> Result<BTreeMap<u32, (End, End)>> {
        let mut tails: BTreeMap<u32, Vec<End>> = BTreeMap::new();
        let mut heads: BTreeMap<u32, Vec<End>> = BTreeMap::new();
        for v in self.vertices() {
            for (slot, e) in self.rotation(v).into_iter().enumerate() {
                let end = End { vertex: v, slot };
                if self.is_head(end) {
                    heads.entry(e).or_default().push(end);
                } else {
                    tails.entry(e).or_default().push(end);
                }
            }
        }
        let known: BTreeSet<u32> = self.edges.iter().copied().collect();
        if known.len() != self.edges.len() {
            return Err(Error::Diagram("duplicate edge id".into()));
        }
        let mut out = BTreeMap::new();
        for &e in &self.edges {
            match (tails.get(&e).map(|v| v.as_slice()), heads.get(&e).map(|v| v.as_slice())) {
                (Some([t]), Some([h])) => {
                    out.insert(e, (*t, *h));
                }
                _ => {
                    return Err(Error::Diagram(format!(
                        "edge {e} must leave exactly one slot and enter exactly one slot"
                    )))
                }
            }
        }
        if let Some(e) = tails.keys().chain(heads.keys()).find(|e| !known.contains(e)) {
            return Err(Error::Diagram(format!("edge {e} is used but not declared")));
        }
        Ok(out)
    }

    /// Check wiring, orientation consistency, planarity and gate parity.
    ///
    /// Odd gates are reported last, so an `OddIntersection` error means the
    /// diagram is otherwise valid.
    pub fn validate(&self) -> Result<()> {
        self.ends()?;
        for (g, gate) in self.gates.iter().enumerate() {
            if gate.strands.is_empty() {
                return Err(Error::Diagram(format!("gate {g} has no strands")));
            }
            if gate.orientation != 1 && gate.orientation != -1 {
                return Err(Error::Diagram(format!("gate {g} orientation must be +1 or -1")));
            }
        }
        let genus = self.genus()?;
        if genus != 0 {
            return Err(Error::Diagram(format!("diagram is not planar (genus {genus})")));
        }
        if let Some(g) = self.gates.iter().position(|g| g.width() % 2 == 1) {
            return Err(Error::OddIntersection { gate: g });
        }
        Ok(())
    }

    /// The edge following `e` along the link.
    pub fn next_edge(&self, e: u32, ends: &BTreeMap<u32, (End, End)>) -> u32 {
        let head = ends[&e].1;
        match head.vertex {
            Vertex::Crossing(i) => {
                let c = &self.crossings[i];
                if c.under()[0] == e && head.slot == 0 {
                    c.under()[1]
                } else {
                    c.over()[1]
                }
            }
            Vertex::Gate(g) => {
                let gate = &self.gates[g];
                let n = gate.width();
                if head.slot < n {
                    gate.strands[head.slot].top
                } else {
                    gate.strands[2 * n - 1 - head.slot].bottom
                }
            }
        }
    }

    /// Link components as cyclic edge sequences, plus free loops.
    pub fn components(&self) -> Result<Vec<Vec<u32>>> {
        let ends = self.ends()?;
        let mut seen = BTreeSet::new();
        let mut out = vec![];
        for &e in &self.edges {
            if seen.contains(&e) {
                continue;
            }
            let mut comp = vec![];
            let mut cur = e;
            while seen.insert(cur) {
                comp.push(cur);
                cur = self.next_edge(cur, &ends);
            }
            out.push(comp);
        }
        Ok(out)
    }

    pub fn component_count(&self) -> Result<usize> {
        Ok(self.components()?.len() + self.loops as usize)
    }

    /// Faces of the embedded diagram graph, each as a cyclic list of
    /// `(edge, forward)` sides.
    pub fn faces(&self) -> Result<Vec<Vec<(u32, bool)>>> {
        let ends = self.ends()?;
        let rot: BTreeMap<Vertex, Vec<u32>> = self.vertices().into_iter().map(|v| (v, self.rotation(v))).collect();
        // A dart is an edge traversed forward (tail -> head) or backward.
        let mut used: BTreeSet<(u32, bool)> = BTreeSet::new();
        let mut faces = vec![];
        for &e in &self.edges {
            for dir in [true, false] {
                if used.contains(&(e, dir)) {
                    continue;
                }
                let mut face = vec![];
                let (mut ce, mut cd) = (e, dir);
                while used.insert((ce, cd)) {
                    face.push((ce, cd));
                    // Arrive at the far end, then turn to the next slot clockwise,
                    // which keeps the face on the left.
                    let (t, h) = ends[&ce];
                    let at = if cd { h } else { t };
                    let r = &rot[&at.vertex];
                    let slot = (at.slot + r.len() - 1) % r.len();
                    let ne = r[slot];
                    let (nt, _) = ends[&ne];
                    let leaving_tail = nt.vertex == at.vertex && nt.slot == slot;
                    ce = ne;
                    cd = leaving_tail;
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// Genus of the surface determined by the rotation system, summed over
    /// connected pieces.
    pub fn genus(&self) -> Result<i64> {
        let ends = self.ends()?;
        let v = self.crossings.len() + self.gates.len();
        let e = self.edges.len();
        let f = self.faces()?.len();
        // Connected pieces of the graph.
        let verts = self.vertices();
        let idx: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for (t, h) in ends.values() {
            let (a, b) = (find(&mut parent, idx[&t.vertex]), find(&mut parent, idx[&h.vertex]));
            parent[a] = b;
        }
        let c = (0..verts.len()).filter(|&i| find(&mut parent, i) == i).count();
        let chi = v as i64 - e as i64 + f as i64;
        Ok((2 * c as i64 - chi) / 2)
    }

    /// Shifting data of every gate.
    pub fn shifting_data(&self) -> Vec<ShiftingData> {
        self.gates
            .iter()
            .map(|g| {
                let (n_plus, n_minus) = g.spec(1).crossing_counts();
                let ups = g.strands.iter().filter(|s| s.up).count() as i64;
                let downs = g.width() as i64 - ups;
                ShiftingData {
                    n: g.width(),
                    n_plus,
                    n_minus,
                    big_n: 2 * n_minus as i64 - n_plus as i64,
                    eta: g.orientation as i64 * (ups - downs),
                }
            })
            .collect()
    }

    /// Rename every occurrence of edge `from` to `to` at the given end only.
    pub(crate) fn rename_at(&mut self, end: End, to: u32) {
        match end.vertex {
            Vertex::Crossing(i) => self.crossings[i].slots[end.slot] = to,
            Vertex::Gate(g) => {
                let gate = &mut self.gates[g];
                let n = gate.strands.len();
                if end.slot < n {
                    gate.strands[end.slot].bottom = to;
                } else {
                    gate.strands[2 * n - 1 - end.slot].top = to;
                }
            }
        }
    }

    pub(crate) fn sort_edges(&mut self) {
        self.edges.sort_unstable();
        self.edges.dedup();
    }

    /// Signs of the crossings as `(n+, n-)`.
    pub fn crossing_signs(&self) -> (usize, usize) {
        let pos = self.crossings.iter().filter(|c| c.sign == Sign::Pos).count();
        (pos, self.crossings.len() - pos)
    }
}
