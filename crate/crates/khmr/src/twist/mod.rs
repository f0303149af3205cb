//! Full-twist complexes `C^*(F_n^k)`, their structural checks and a disk cache.

mod braid;
mod cache;

pub use braid::{braid_complex, braid_crossings, full_twist_word, jucys_murphy_word, signed_braid_crossings, Crossing};
pub use cache::{TwistCache, ENGINE_TAG};

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::chain::{glue_reduce, homology, BigradedHomology, Complex};
use crate::planar::{Matching, Smoothing, TLDiagram};

/// Bottom boundary labels of a twist tangle: `1..=n`, left to right.
pub fn bottom_labels(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

/// Top boundary labels: `n+1..=2n`, left to right.
pub fn top_labels(n: usize) -> Vec<u32> {
    (n as u32 + 1..=2 * n as u32).collect()
}

/// A twist request. `up[i]` is the direction of the strand entering at
/// bottom position `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistSpec {
    pub n: usize,
    pub k: usize,
    pub up: Vec<bool>,
}

impl TwistSpec {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k, up: vec![true; n] }
    }

    /// Signed crossing counts `(n+, n-)` of one full twist.
    pub fn crossing_counts(&self) -> (usize, usize) {
        let n = self.n;
        let mut next = 0;
        let xs = braid_crossings(&full_twist_word(n, 1), &bottom_labels(n), &top_labels(n), &self.up, &mut next);
        let pos = xs.iter().filter(|x| x.sign == crate::chain::Sign::Pos).count();
        (pos, xs.len() - pos)
    }

    /// Orientation pattern as a string of `u`/`d`.
    pub fn orient_tag(&self) -> String {
        self.up.iter().map(|&u| if u { 'u' } else { 'd' }).collect()
    }
}

/// Reduced complex of one full twist with unshifted crossings.
///
/// Built as `E_n · F_{n-1}` with `F_{n-1}` on the right `n-1` strands, so
/// each stage is reduced before the next crossings arrive. Memoized.
pub fn raw_one_twist(n: usize) -> Complex {
    static MEMO: OnceLock<Mutex<HashMap<usize, Complex>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(c) = memo.lock().unwrap().get(&n) {
        return c.clone();
    }
    let c = build_one_twist(n);
    memo.lock().unwrap().insert(n, c.clone());
    c
}

fn build_one_twist(n: usize) -> Complex {
    if n <= 1 {
        return braid_complex(&[], &bottom_labels(n), &top_labels(n), &vec![true; n], true);
    }
    let below = raw_one_twist(n - 1);
    let mid = 500_000u32;
    let m = n as u32 - 1;
    let lower = below.relabel(|l| if l <= m { l + 1 } else { mid + l - m + 1 });
    let lower = glue_reduce(&lower, &Complex::single(Matching::from_pairs([(1, mid + 1)]), 0, 0));
    let mids: Vec<u32> = (1..=n as u32).map(|i| mid + i).collect();
    let e = braid_complex(&jucys_murphy_word(n), &mids, &top_labels(n), &vec![true; n], true);
    glue_reduce(&lower, &e)
}

/// Stack two `n`-strand tangle complexes, `a` below `b`.
pub fn stack(a: &Complex, b: &Complex, n: usize) -> Complex {
    let mid = 500_000u32;
    let a = a.relabel(|l| if l as usize > n { mid + l - n as u32 } else { l });
    let b = b.relabel(|l| if l as usize <= n { mid + l } else { l });
    glue_reduce(&a, &b)
}

/// `C^*(k) = h^{-2kp^2} q^{-2kp(p+1)} [[F_n^k]]` built from unshifted crossings.
///
/// The shift puts the top object at `h = 0`. For odd `n` the complex is left
/// unshifted. The result does not depend on strand orientations.
pub fn reduced_twist_complex(n: usize, k: usize) -> Complex {
    twist_complex_above(n, k, None)
}

/// `C^*(k)` with only the objects that can reach degrees `>= floor` (all of
/// them for `None`). Stacking truncates as it goes, which is much cheaper
/// than truncating the finished complex. Degrees above `floor` match the
/// full build; the floor degree itself may keep extra objects.
pub fn twist_complex_above(n: usize, k: usize, floor: Option<i32>) -> Complex {
    let p = (n / 2) as i32;
    let shift = if n.is_multiple_of(2) { (-2 * k as i32 * p * p, -2 * k as i32 * p * (p + 1)) } else { (0, 0) };
    if k == 0 {
        return braid_complex(&[], &bottom_labels(n), &top_labels(n), &vec![true; n], true);
    }
    let one = raw_one_twist(n);
    let top = one.max_h().unwrap_or(0);
    // After i twists, the remaining k - i can raise degrees by at most (k - i) top.
    let keep = |c: Complex, i: usize| match floor {
        Some(f) => c.truncate(f - shift.0 - (k - i) as i32 * top - 1),
        None => c,
    };
    let mut c = keep(one.clone(), 1);
    for i in 2..=k {
        c = keep(stack(&c, &one, n), i);
    }
    c.shift(shift.0, shift.1)
}

/// A twist-tangle object seen as a Temperley-Lieb diagram.
pub fn as_tl(s: &Smoothing, n: usize) -> TLDiagram {
    let pairs: Vec<(u32, u32)> = s.matching.pairs().map(|(a, b)| (a - 1, b - 1)).collect();
    let mut d = TLDiagram::new(n, n, &pairs);
    d.circles = s.circles as usize;
    d
}

#[derive(Clone, Debug, Default)]
pub struct ThroughDegreeReport {
    pub n: usize,
    /// Highest raw degree reached by each `m = (n - th)/2`.
    pub top_degree: BTreeMap<usize, i32>,
    pub violations: Vec<String>,
}

impl ThroughDegreeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the through-degree bound `h <= 2m(n-m)` on the one-twist complex,
/// its attainment for every `m`, absence of circles and, for even `n`, that
/// the two top degrees hold only `th = 0` diagrams.
pub fn check_through_degree_bounds(n: usize) -> ThroughDegreeReport {
    let c = raw_one_twist(n);
    let mut r = ThroughDegreeReport { n, ..Default::default() };
    for o in &c.objects {
        let tl = as_tl(&o.diagram, n);
        if tl.circles > 0 {
            r.violations.push(format!("object at h={} has circles", o.h));
        }
        let m = (n - tl.through_degree()) / 2;
        let bound = (2 * m * (n - m)) as i32;
        if o.h > bound {
            r.violations.push(format!("th={} object at h={} exceeds {bound}", tl.through_degree(), o.h));
        }
        let e = r.top_degree.entry(m).or_insert(i32::MIN);
        *e = (*e).max(o.h);
    }
    for m in 0..=n / 2 {
        let bound = (2 * m * (n - m)) as i32;
        if r.top_degree.get(&m) != Some(&bound) {
            r.violations.push(format!("m={m}: bound {bound} not attained (top {:?})", r.top_degree.get(&m)));
        }
    }
    if n.is_multiple_of(2) {
        let p = (n / 2) as i32;
        for o in &c.objects {
            if o.h >= 2 * p * p - 1 && as_tl(&o.diagram, n).through_degree() != 0 {
                r.violations.push(format!("th>0 object in top degree {}", o.h));
            }
        }
    }
    r
}

/// Objects as a sorted multiset of `(diagram, h, q)`.
pub fn object_multiset(c: &Complex) -> Vec<(Smoothing, i32, i32)> {
    let mut v: Vec<_> = c.objects.iter().map(|o| (o.diagram.clone(), o.h, o.q)).collect();
    v.sort();
    v
}

/// Closures of an `n`-strand tangle used as stabilization probes: the braid
/// closure and the plat closure.
pub fn test_closures(n: usize) -> Vec<Matching> {
    let b = bottom_labels(n);
    let t = top_labels(n);
    let braid = Matching::from_pairs(b.iter().zip(&t).map(|(&x, &y)| (x, y)));
    let plat = Matching::from_pairs(
        (0..n / 2).flat_map(|i| [(b[2 * i], b[2 * i + 1]), (t[2 * i], t[2 * i + 1])]),
    );
    if n.is_multiple_of(2) { vec![braid, plat] } else { vec![braid] }
}

/// Homology of a tangle complex closed off by a crossingless matching.
pub fn closure_homology(c: &Complex, closure: &Matching) -> BigradedHomology {
    let cap = Complex::single(closure.clone(), 0, 0);
    homology(&glue_reduce(c, &cap)).expect("closure is closed")
}

#[derive(Clone, Debug, Default)]
pub struct StabilizationReport {
    pub n: usize,
    pub k: usize,
    pub objects: usize,
    pub violations: Vec<String>,
}

impl StabilizationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compare the top `2k` degrees of `C^*(k)` and `C^*(k+1)`.
pub fn check_stabilization(n: usize, k: usize) -> StabilizationReport {
    assert!(n.is_multiple_of(2) && k >= 1);
    let a = reduced_twist_complex(n, k);
    let b = reduced_twist_complex(n, k + 1);
    stabilization_between(&a, &b, n, k)
}

pub(crate) fn stabilization_between(a: &Complex, b: &Complex, n: usize, k: usize) -> StabilizationReport {
    let floor = -2 * k as i32;
    let (ta, tb) = (a.truncate(floor), b.truncate(floor));
    let mut r = StabilizationReport { n, k, objects: ta.len(), ..Default::default() };
    for (name, c) in [("k", &ta), ("k+1", &tb)] {
        if let Err(e) = c.validate() {
            r.violations.push(format!("{name}: {e}"));
        }
        for o in &c.objects {
            if o.h > 0 || o.diagram.circles > 0 || as_tl(&o.diagram, n).through_degree() != 0 {
                r.violations.push(format!("{name}: object at ({}, {}) is not a th=0 diagram with h<=0", o.h, o.q));
            }
        }
    }
    if object_multiset(&ta) != object_multiset(&tb) {
        r.violations.push(format!("object multisets differ ({} vs {} objects)", ta.len(), tb.len()));
    }
    for cl in test_closures(n) {
        let ha = closure_homology(&ta, &cl).restrict(floor + 2);
        let hb = closure_homology(&tb, &cl).restrict(floor + 2);
        if ha != hb {
            r.violations.push(format!("closure {cl:?}: homology differs"));
        }
    }
    r
}

/// The smallest stable `C^*(k)`, truncated to `h > h_min`.
///
/// Starts from the least `k` with `-2k <= h_min` and increases `k` until the
/// truncations at `k` and `k+1` agree object for object.
pub fn truncated_infinite_twist(n: usize, h_min: i32) -> (Complex, usize) {
    assert!(n.is_multiple_of(2));
    let mut k = ((-h_min).max(1) as usize).div_ceil(2);
    let mut cur = reduced_twist_complex(n, k);
    loop {
        let next = reduced_twist_complex(n, k + 1);
        if object_multiset(&cur.truncate(h_min)) == object_multiset(&next.truncate(h_min)) {
            return (cur.truncate(h_min), k);
        }
        k += 1;
        cur = next;
    }
}
