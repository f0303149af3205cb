//! Graded Euler characteristics, the Kauffman bracket, and the checks that
//! tie them to the homology.

mod window;

pub use window::LaurentWindow;

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::chain::{BigradedHomology, Sign};
use crate::diagram::{build_lk, MrDiagram, Vertex};
use crate::error::{Error, Result};
use crate::pipeline::{khovanov_homology, KhOptions};
use crate::planar::{glue, Matching};
use crate::twist::{as_tl, truncated_infinite_twist};

/// `sum (-1)^h rank q^j` over the cells with `j` in the window.
pub fn euler_series(h: &BigradedHomology, q_min: i32, q_max: i32) -> LaurentWindow {
    let mut s = LaurentWindow::zero(q_min, q_max);
    for (&(hd, q), g) in &h.cells {
        s.add_term(q, if hd.rem_euclid(2) == 0 { g.free as i64 } else { -(g.free as i64) });
    }
    s
}

/// Euler series of the stabilized homology of `d` on `[q_min, q_max]`.
///
/// Homological degrees are lowered until two successive computations agree
/// on the window, since the table itself is only known above some `h_min`.
pub fn kh_euler_series(d: &MrDiagram, q_min: i32, q_max: i32) -> Result<LaurentWindow> {
    if d.gates.is_empty() {
        let opts = KhOptions::new(-(d.crossings.len() as i32) - 1);
        return Ok(euler_series(&khovanov_homology(d, &opts)?.table, q_min, q_max));
    }
    let mut h_min = (q_min.min(0) - 1).div_euclid(2) - 1;
    let mut prev = euler_series(&khovanov_homology(d, &KhOptions::new(h_min))?.table, q_min, q_max);
    for _ in 0..4 {
        h_min -= 2;
        let next = euler_series(&khovanov_homology(d, &KhOptions::new(h_min))?.table, q_min, q_max);
        if next == prev {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::Window(format!("Euler series on [{q_min}, {q_max}] still moving at h_min = {h_min}")))
}

/// An unoriented crossingless-or-not planar picture: crossings, plain arcs
/// and free circles, glued along shared labels. Every label occurs twice.
#[derive(Clone, Debug, Default)]
pub struct BracketInput {
    /// Slots counterclockwise, `x0 -> x2` the under strand.
    pub crossings: Vec<[u32; 4]>,
    pub arcs: Vec<(u32, u32)>,
    pub loops: u32,
}

impl BracketInput {
    pub fn from_diagram(d: &MrDiagram) -> Result<Self> {
        if !d.gates.is_empty() {
            return Err(Error::Precondition("the bracket needs a classical diagram".into()));
        }
        let crossings = (0..d.crossings.len())
            .map(|i| {
                let r = d.rotation(Vertex::Crossing(i));
                [r[0], r[1], r[2], r[3]]
            })
            .collect();
        Ok(Self { crossings, arcs: vec![], loops: d.loops })
    }

    /// Replace crossing `i` by its 0- or 1-resolution.
    pub fn resolve(&self, i: usize, one: bool) -> Self {
        let mut out = self.clone();
        let x = out.crossings.remove(i);
        if one {
            out.arcs.extend([(x[0], x[3]), (x[1], x[2])]);
        } else {
            out.arcs.extend([(x[0], x[1]), (x[2], x[3])]);
        }
        out
    }
}

/// The unnormalized bracket: `<X> = <0-res> - q <1-res>` and every circle
/// is `q + q^{-1}`.
///
/// Crossings are absorbed one at a time; partial states with the same
/// boundary matching are merged, so each canonical sub-diagram is
/// evaluated once.
pub fn raw_bracket(b: &BracketInput) -> LaurentWindow {
    // Pieces as lists of (matching, weight); repeated labels inside a
    // piece are split off through an extra arc.
    let mut next = b.crossings.iter().flatten().chain(b.arcs.iter().flat_map(|a| [&a.0, &a.1])).max().copied().unwrap_or(0);
    let mut fresh = || {
        next += 1;
        next
    };
    let mut loops = b.loops;
    let mut pieces: Vec<Vec<(Matching, LaurentWindow)>> = vec![];
    let minus_q = LaurentWindow::poly([(1, -1)].into());
    for x in &b.crossings {
        let mut x = *x;
        let mut seen = BTreeSet::new();
        for l in x.iter_mut() {
            if !seen.insert(*l) {
                let f = fresh();
                pieces.push(vec![(Matching::from_pairs([(*l, f)]), LaurentWindow::one())]);
                *l = f;
            }
        }
        pieces.push(vec![
            (Matching::from_pairs([(x[0], x[1]), (x[2], x[3])]), LaurentWindow::one()),
            (Matching::from_pairs([(x[0], x[3]), (x[1], x[2])]), minus_q.clone()),
        ]);
    }
    for &(a, c) in &b.arcs {
        if a == c {
            loops += 1;
        } else {
            pieces.push(vec![(Matching::from_pairs([(a, c)]), LaurentWindow::one())]);
        }
    }
    let mut states: HashMap<Matching, LaurentWindow> = HashMap::from([(Matching::empty(), LaurentWindow::one())]);
    let mut bd: BTreeSet<u32> = BTreeSet::new();
    while !pieces.is_empty() {
        let pick = (0..pieces.len())
            .min_by_key(|&i| {
                let m = &pieces[i][0].0;
                let shared = m.labels().filter(|l| bd.contains(l)).count();
                (bd.len() + m.len() - 2 * shared, usize::MAX - shared, i)
            })
            .unwrap();
        let piece = pieces.swap_remove(pick);
        let mut out: HashMap<Matching, LaurentWindow> = HashMap::new();
        for (m, w) in &states {
            for (r, rw) in &piece {
                let g = glue(m, r);
                let mut v = w.mul(rw);
                for _ in 0..g.circles.len() {
                    v = v.mul(&LaurentWindow::circle());
                }
                let e = out.entry(g.matching).or_insert_with(|| LaurentWindow::poly(Default::default()));
                *e = e.add(&v);
            }
        }
        states = out;
        bd = states.keys().next().map(|m| m.labels().collect()).unwrap_or_default();
    }
    let mut total = LaurentWindow::poly(Default::default());
    for (m, w) in states {
        assert!(m.is_empty(), "open diagram");
        total = total.add(&w);
    }
    for _ in 0..loops {
        total = total.mul(&LaurentWindow::circle());
    }
    total
}

/// The bracket renormalized to the Khovanov grading:
/// `(-1)^{n-} q^{n+ - 2n-} <D>`, so the unknot gives `q + q^{-1}`.
pub fn kauffman_bracket(d: &MrDiagram) -> Result<LaurentWindow> {
    let raw = raw_bracket(&BracketInput::from_diagram(d)?);
    let np = d.crossings.iter().filter(|c| c.sign == Sign::Pos).count() as i32;
    let nm = d.crossings.len() as i32 - np;
    Ok(raw.shift(np - 2 * nm, if nm % 2 == 0 { 1 } else { -1 }))
}

/// Outcome of [`skein_consistency`].
#[derive(Clone, Debug, Serialize)]
pub struct SkeinReport {
    pub q_min: i32,
    pub q_max: i32,
    /// Twist count at which the bracket side settled (0 for classical input).
    pub k: usize,
    pub euler: LaurentWindow,
    pub bracket: LaurentWindow,
    pub mismatches: Vec<i32>,
}

impl SkeinReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Bracket of `L(k)` times the grading shift of the gate twists, so that it
/// computes the Euler characteristic of the finite complex at `k`.
fn shifted_bracket(d: &MrDiagram, k: usize) -> Result<LaurentWindow> {
    let lk = build_lk(d, &vec![k; d.gates.len()])?;
    let mut dq = 0;
    let mut odd = false;
    for g in &d.gates {
        let (pos, neg) = g.spec(1).crossing_counts();
        let (pos, neg) = ((k * pos) as i32, (k * neg) as i32);
        let p = (g.width() / 2) as i32;
        dq += 2 * neg - pos - 2 * k as i32 * p * (p + 1);
        odd ^= neg % 2 == 1;
    }
    Ok(kauffman_bracket(&lk)?.shift(dq, if odd { -1 } else { 1 }))
}

/// Compare the Euler characteristic of the homology with the stabilized
/// bracket of the finite approximations on `[q_min, q_max]`.
pub fn skein_consistency(d: &MrDiagram, q_min: i32, q_max: i32) -> Result<SkeinReport> {
    d.validate()?;
    if let Some(s) = d.shifting_data().iter().position(|s| s.eta != 0) {
        return Err(Error::Precondition(format!("gate {s} is not null-homologous")));
    }
    let euler = kh_euler_series(d, q_min, q_max)?;
    let (k, bracket) = if d.gates.is_empty() {
        (0, kauffman_bracket(d)?.restrict(q_min, q_max))
    } else {
        let mut k = 1;
        let mut prev = shifted_bracket(d, k)?.restrict(q_min, q_max);
        loop {
            let next = shifted_bracket(d, k + 1)?.restrict(q_min, q_max);
            if next == prev {
                break (k, prev);
            }
            k += 1;
            if k > 12 {
                return Err(Error::Window(format!("bracket on [{q_min}, {q_max}] not stable by k = {k}")));
            }
            prev = next;
        }
    };
    let mismatches = euler.mismatches(&bracket);
    Ok(SkeinReport { q_min, q_max, k, euler, bracket, mismatches })
}

/// Outcome of [`p20_series_check`].
#[derive(Clone, Debug, Serialize)]
pub struct P20Report {
    pub order: usize,
    /// Coefficient series of the cup-cap diagram.
    pub cup_cap: LaurentWindow,
    /// Coefficient series of the identity diagram.
    pub identity: LaurentWindow,
    pub mismatches: Vec<String>,
}

impl P20Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Check that the stable two-strand twist decategorifies to
/// `<cup-cap> (q^-1 - q^-3 + q^-5 - ...)` through `order` terms.
pub fn p20_series_check(order: usize) -> P20Report {
    assert!(order >= 1);
    let q_min = -(2 * order as i32 - 1);
    let (c, _) = truncated_infinite_twist(2, -2 * order as i32);
    let mut cup_cap = LaurentWindow::zero(q_min, -1);
    let mut identity = LaurentWindow::zero(q_min, -1);
    for o in &c.objects {
        let sign = if o.h.rem_euclid(2) == 0 { 1 } else { -1 };
        let tl = as_tl(&o.diagram, 2);
        debug_assert_eq!(tl.circles, 0, "twist complexes are delooped");
        let target = if tl.through_degree() == 0 { &mut cup_cap } else { &mut identity };
        target.add_term(o.q, sign);
    }
    let mut mismatches = vec![];
    for j in 0..order as i32 {
        let e = -(2 * j + 1);
        let want = if j % 2 == 0 { 1 } else { -1 };
        if cup_cap.get(e) != Some(want) {
            mismatches.push(format!("cup-cap coefficient of q^{e} is {:?}, expected {want}", cup_cap.get(e)));
        }
    }
    if !identity.coeffs.is_empty() {
        mismatches.push(format!("identity coefficient is {identity}, expected 0"));
    }
    P20Report { order, cup_cap, identity, mismatches }
}
