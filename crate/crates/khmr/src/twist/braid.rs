use crate::chain::{crossing_complex, glue_reduce, raw_crossing, Complex, Sign};
use crate::planar::Matching;

/// A crossing in a tangle: ccw slots with `x[0] -> x[2]` the under strand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub slots: [u32; 4],
    pub sign: Sign,
    /// Whether the under strand travels from `slots[0]` to `slots[2]`.
    pub under_forward: bool,
}

/// Braid word of `F_n^k` as generator indices `i` for `σ_i` (1-based).
///
/// `F_n = (σ_1 ⋯ σ_{n-1})^n`, giving `k n (n-1)` positive crossings.
pub fn full_twist_word(n: usize, k: usize) -> Vec<usize> {
    let one: Vec<usize> = (0..n).flat_map(|_| 1..n).collect();
    one.repeat(k)
}

/// The Jucys-Murphy word `σ_1 ⋯ σ_{n-1} σ_{n-1} ⋯ σ_1`.
pub fn jucys_murphy_word(n: usize) -> Vec<usize> {
    (1..n).chain((1..n).rev()).collect()
}

/// Lay out a braid word as crossings.
///
/// Position `i` starts at label `bottom[i]` and ends at `top[i]`; internal
/// edges take fresh labels from `next`. `up[i]` is the direction of the strand
/// that starts at position `i`; a crossing is positive when both strands
/// point the same way.
pub fn braid_crossings(word: &[usize], bottom: &[u32], top: &[u32], up: &[bool], next: &mut u32) -> Vec<Crossing> {
    let signed: Vec<i32> = word.iter().map(|&g| g as i32).collect();
    signed_braid_crossings(&signed, bottom, top, up, next)
}

/// As [`braid_crossings`], with `-i` standing for `σ_i^{-1}`.
pub fn signed_braid_crossings(word: &[i32], bottom: &[u32], top: &[u32], up: &[bool], next: &mut u32) -> Vec<Crossing> {
    let n = bottom.len();
    let mut cur = bottom.to_vec();
    let mut dir = up.to_vec();
    let mut last = vec![usize::MAX; n];
    for (t, &g) in word.iter().enumerate() {
        let g = g.unsigned_abs() as usize;
        last[g - 1] = t;
        last[g] = t;
    }
    let mut out = Vec::with_capacity(word.len());
    for (t, &g) in word.iter().enumerate() {
        let (i, j) = (g.unsigned_abs() as usize - 1, g.unsigned_abs() as usize);
        let mut fresh = |p: usize| {
            if last[p] == t {
                top[p]
            } else {
                *next += 1;
                *next
            }
        };
        let (ti, tj) = (fresh(i), fresh(j));
        let same = dir[i] == dir[j];
        // σ_i takes the right strand under to the left; its inverse takes the
        // left strand under to the right.
        out.push(if g > 0 {
            Crossing { slots: [cur[j], tj, ti, cur[i]], sign: if same { Sign::Pos } else { Sign::Neg }, under_forward: dir[j] }
        } else {
            Crossing { slots: [cur[i], cur[j], tj, ti], sign: if same { Sign::Neg } else { Sign::Pos }, under_forward: dir[i] }
        });
        cur[i] = ti;
        cur[j] = tj;
        dir.swap(i, j);
    }
    out
}

/// Scan-built, delooped and eliminated complex of a braid word.
///
/// With `raw` the crossings carry no grading shift (`0`-resolution at
/// `(0,0)`); otherwise the usual `h^{-n-} q^{n+ - 2n-}` is applied.
pub fn braid_complex(word: &[usize], bottom: &[u32], top: &[u32], up: &[bool], raw: bool) -> Complex {
    let mut next = 1_000_000;
    let xs = braid_crossings(word, bottom, top, up, &mut next);
    let ident = Matching::from_pairs(bottom.iter().zip(top).map(|(&a, &b)| (a, b)));
    if xs.is_empty() {
        return Complex::single(ident, 0, 0);
    }
    let mut c: Option<Complex> = None;
    for x in xs {
        let piece = if raw { raw_crossing(x.slots) } else { crossing_complex(x.sign, x.slots) };
        c = Some(match c {
            None => piece,
            Some(c) => glue_reduce(&c, &piece),
        });
    }
    c.unwrap()
}
