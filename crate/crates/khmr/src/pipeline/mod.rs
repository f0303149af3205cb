//! Stabilized Khovanov homology of diagrams with surgery gates.

mod checks;
mod output;

pub use checks::{knotification_homology, wrap_shift_check, WrapReport};
pub use output::{KhResult, Row};

use std::collections::BTreeSet;

use crate::chain::{crossing_complex, deloop, glue_reduce, homology, BigradedHomology, Complex, Sign};
use crate::diagram::{MrDiagram, Vertex};
use crate::error::{Error, Result};
use crate::planar::Matching;
use crate::twist::TwistCache;

/// Knobs for [`khovanov_homology`].
#[derive(Clone, Debug)]
pub struct KhOptions {
    pub h_min: i32,
    /// Largest twist count tried at any gate.
    pub k_max: usize,
    /// Abort when an intermediate complex grows past this many objects.
    pub max_objects: usize,
    pub cache: TwistCache,
}

impl KhOptions {
    pub fn new(h_min: i32) -> Self {
        Self { h_min, k_max: 16, max_objects: 2_000_000, cache: TwistCache::from_env() }
    }
}

/// A tensor factor of the diagram's complex.
struct Piece {
    complex: Complex,
    /// Highest homological degree of the factor.
    max_h: i32,
}

/// Split the diagram into tensor factors: one per gate, one per crossing,
/// and an arc wherever an edge returns to the vertex it left.
fn pieces(d: &MrDiagram, k: &[usize], floor: Option<i32>, cache: &TwistCache) -> Result<Vec<Piece>> {
    let lift = d.crossings.iter().filter(|c| c.sign == Sign::Pos).count() as i32;
    let mut next = d.max_edge().max(1_000_000);
    let mut out = vec![];
    for v in d.vertices() {
        let mut labels = d.rotation(v);
        let mut seen = BTreeSet::new();
        for l in labels.iter_mut() {
            if !seen.insert(*l) {
                next += 1;
                out.push(Piece { complex: Complex::single(Matching::from_pairs([(*l, next)]), 0, 0), max_h: 0 });
                *l = next;
            }
        }
        let piece = match v {
            Vertex::Crossing(i) => {
                let sign = d.crossings[i].sign;
                let x = [labels[0], labels[1], labels[2], labels[3]];
                Piece { complex: crossing_complex(sign, x), max_h: if sign == Sign::Pos { 1 } else { 0 } }
            }
            Vertex::Gate(g) => {
                let gate = &d.gates[g];
                let n = gate.width();
                let twist = match floor {
                    Some(f) => cache.get_above(&gate.spec(k[g]), f - lift)?,
                    None => cache.get(&gate.spec(k[g]))?,
                };
                // Twist labels: bottom 1..=n, top n+1..=2n, both left to right.
                let relabel = |l: u32| {
                    let l = l as usize;
                    if l <= n {
                        labels[l - 1]
                    } else {
                        labels[2 * n - 1 - (l - n - 1)]
                    }
                };
                Piece { complex: twist.relabel(relabel), max_h: 0 }
            }
        };
        out.push(piece);
    }
    Ok(out)
}

/// Glue all pieces, keeping only what can reach degrees `>= floor`.
fn scan(mut pieces: Vec<Piece>, loops: u32, floor: Option<i32>, max_objects: usize) -> Result<Complex> {
    let mut cur = Complex::single(Matching::empty(), 0, 0);
    let mut cur_max = 0;
    let mut rest: i32 = pieces.iter().map(|p| p.max_h).sum();
    while !pieces.is_empty() {
        let bd: BTreeSet<u32> = cur.boundary.iter().copied().collect();
        // Smallest resulting boundary first, then most shared labels.
        let pick = (0..pieces.len())
            .min_by_key(|&i| {
                let b = &pieces[i].complex.boundary;
                let shared = b.iter().filter(|l| bd.contains(l)).count();
                (bd.len() + b.len() - 2 * shared, usize::MAX - shared, i)
            })
            .unwrap();
        let p = pieces.swap_remove(pick);
        rest -= p.max_h;
        let mut piece = p.complex;
        if let Some(f) = floor {
            piece = piece.truncate(f - 1 - cur_max - rest);
        }
        cur = glue_reduce(&cur, &piece);
        if let Some(f) = floor {
            cur = cur.truncate(f - 1 - rest);
        }
        cur_max = cur.max_h().unwrap_or(0);
        if cur.len() > max_objects {
            return Err(Error::TooLarge(max_objects));
        }
    }
    for _ in 0..loops {
        cur = glue_reduce(&cur, &Complex::circle());
    }
    Ok(deloop(&cur))
}

/// The closed, reduced complex of `d` with `k[i]` twists at gate `i`.
///
/// Gates must have even width; the caller handles odd ones.
pub fn finite_complex(d: &MrDiagram, k: &[usize]) -> Result<Complex> {
    finite_complex_with(d, k, None, &TwistCache::from_env(), usize::MAX)
}

fn finite_complex_with(
    d: &MrDiagram,
    k: &[usize],
    floor: Option<i32>,
    cache: &TwistCache,
    max_objects: usize,
) -> Result<Complex> {
    if k.len() != d.gates.len() {
        return Err(Error::Diagram(format!("{} twist counts given for {} gates", k.len(), d.gates.len())));
    }
    if let Some(g) = d.gates.iter().position(|g| g.width() % 2 == 1) {
        return Err(Error::OddIntersection { gate: g });
    }
    scan(pieces(d, k, floor, cache)?, d.loops, floor, max_objects)
}

/// Homology of the finite approximation, valid in degrees `>= h_min` once
/// the twist counts are large enough.
pub fn truncated_homology(d: &MrDiagram, k: &[usize], opts: &KhOptions) -> Result<BigradedHomology> {
    let c = finite_complex_with(d, k, Some(opts.h_min - 1), &opts.cache, opts.max_objects)?;
    Ok(homology(&c)?.restrict(opts.h_min))
}

/// Smallest twist count that reaches degree `h_min` at every gate.
///
/// Degrees above `-2k` of `C(k)` already agree with the infinite twist, and
/// the other factors can raise degrees by at most their combined top degree.
pub fn initial_k(d: &MrDiagram, h_min: i32) -> usize {
    let lift = d.crossings.iter().filter(|c| c.sign == Sign::Pos).count() as i32;
    let need = lift - h_min + 1;
    ((need / 2) + 1).max(1) as usize
}

/// Stabilized homology on `h >= h_min`.
///
/// Twist counts grow uniformly until two consecutive rounds agree.
pub fn khovanov_homology(d: &MrDiagram, opts: &KhOptions) -> Result<KhResult> {
    match d.validate() {
        Err(Error::OddIntersection { gate }) => return Ok(KhResult::odd(d, opts.h_min, gate)),
        r => r?,
    }
    let shifting = d.shifting_data();
    if d.gates.is_empty() {
        let h = truncated_homology(d, &[], opts)?;
        return Ok(KhResult::new(h, opts.h_min, vec![], shifting));
    }
    let mut k = initial_k(d, opts.h_min);
    let mut prev = truncated_homology(d, &vec![k; d.r()], opts)?;
    let mut older = BigradedHomology::default();
    loop {
        if k >= opts.k_max {
            return Err(Error::Ceiling { kmax: opts.k_max as u32, last: Box::new(prev), previous: Box::new(older) });
        }
        let next = truncated_homology(d, &vec![k + 1; d.r()], opts)?;
        if next == prev {
            return Ok(KhResult::new(prev, opts.h_min, vec![k; d.r()], shifting));
        }
        k += 1;
        older = std::mem::replace(&mut prev, next);
    }
}
