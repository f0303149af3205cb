use std::collections::HashMap;

use super::complex::Complex;
use crate::planar::{checked_mul, cycles, glue, Assembly, Cob, Glued, Matching, Smoothing};

/// Sign of a crossing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

/// The two-object complex of one crossing `X[x0,x1,x2,x3]`.
///
/// Slots are listed counterclockwise with `x0 -> x2` the under strand. The
/// 0-resolution joins `(x0,x1),(x2,x3)` and the 1-resolution joins
/// `(x0,x3),(x1,x2)`. Gradings carry the crossing's share of the overall
/// shift `h^{-n-} q^{n+ - 2n-}`: a positive crossing sits at `(0,1),(1,2)`,
/// a negative one at `(-1,-2),(0,-1)`.
pub fn crossing_complex(sign: Sign, x: [u32; 4]) -> Complex {
    let (h0, q0) = match sign {
        Sign::Pos => (0, 1),
        Sign::Neg => (-1, -2),
    };
    raw_crossing(x).shift(h0, q0)
}

/// The unshifted crossing complex, 0-resolution at `(0,0)`.
pub fn raw_crossing(x: [u32; 4]) -> Complex {
    let r0 = Matching::from_pairs([(x[0], x[1]), (x[2], x[3])]);
    let r1 = Matching::from_pairs([(x[0], x[3]), (x[1], x[2])]);
    let mut c = Complex::new(r0.labels().collect());
    let a = c.push(Smoothing::new(r0), 0, 0);
    let b = c.push(Smoothing::new(r1), 1, 1);
    c.set(a, b, Cob::plain(1));
    c
}

/// Cobordism `phi ⊗ id` (or `id ⊗ phi`) between glued smoothings.
///
/// `mv` is the factor carrying `phi: mv_s -> mv_t`; `fixed` is the other
/// factor's matching. Returns mask terms over the boundary circles of
/// `gs -> gt` (cycles, then circles of `gs`, then circles of `gt`).
fn extension(mv_s: &Matching, mv_t: &Matching, fixed: &Matching, gs: &Glued, gt: &Glued) -> Assembly {
    let (ca, n1) = cycles(mv_s, mv_t);
    let (cb, n2) = cycles(fixed, fixed);
    let disk_of = |l: u32| -> usize {
        match mv_s.index_of(l) {
            Some(i) => ca[i] as usize,
            None => n1 + cb[fixed.index_of(l).unwrap()] as usize,
        }
    };
    let glues: Vec<(usize, usize)> = mv_s
        .labels()
        .filter_map(|l| fixed.index_of(l).map(|j| (disk_of(l), n1 + cb[j] as usize)))
        .collect();
    let (c3, n3) = cycles(&gs.matching, &gt.matching);
    let mut finals = vec![usize::MAX; n3];
    for i in 0..gs.matching.len() {
        let c = c3[i] as usize;
        if finals[c] == usize::MAX {
            finals[c] = disk_of(gs.matching.label_at(i));
        }
    }
    finals.extend(gs.circles.iter().map(|circ| disk_of(circ[0])));
    finals.extend(gt.circles.iter().map(|circ| disk_of(circ[0])));
    Assembly::new(n1 + n2, &glues, &finals)
}

fn extend(asm: &Assembly, phi: &Cob, sign: i64) -> Cob {
    let mut terms = vec![];
    for &(m, k) in phi.terms() {
        for (mm, c) in asm.evaluate(m as u128) {
            terms.push((mm, checked_mul(checked_mul(c, k), sign)));
        }
    }
    Cob::from_terms(terms)
}

/// Planar tensor product of two circle-free complexes, glued along every
/// boundary label they share. Gradings add; the differential is
/// `d_A ⊗ 1 + (-1)^{h_A} 1 ⊗ d_B`. Objects may contain circles; follow with
/// [`deloop`].
pub fn tensor(a: &Complex, b: &Complex) -> Complex {
    assert!(a.objects.iter().chain(&b.objects).all(|o| o.diagram.circles == 0), "tensor inputs must be delooped");
    let boundary: Vec<u32> = a
        .boundary
        .iter()
        .filter(|l| b.boundary.binary_search(l).is_err())
        .chain(b.boundary.iter().filter(|l| a.boundary.binary_search(l).is_err()))
        .copied()
        .collect();
    let mut out = Complex::new(boundary);
    let nb = b.len();
    let mut glued: Vec<Glued> = Vec::with_capacity(a.len() * nb);
    for oa in &a.objects {
        for ob in &b.objects {
            let g = glue(&oa.diagram.matching, &ob.diagram.matching);
            out.push(
                Smoothing::with_circles(g.matching.clone(), g.circles.len() as u32),
                oa.h + ob.h,
                oa.q + ob.q,
            );
            glued.push(g);
        }
    }
    let idx = |i: usize, j: usize| i * nb + j;
    for (i, row) in a.d.iter().enumerate() {
        for (&i2, phi) in row {
            for j in 0..nb {
                let ext = extension(
                    &a.objects[i].diagram.matching,
                    &a.objects[i2].diagram.matching,
                    &b.objects[j].diagram.matching,
                    &glued[idx(i, j)],
                    &glued[idx(i2, j)],
                );
                out.set(idx(i, j), idx(i2, j), extend(&ext, phi, 1));
            }
        }
    }
    for (j, row) in b.d.iter().enumerate() {
        for (&j2, psi) in row {
            for i in 0..a.len() {
                let ext = extension(
                    &b.objects[j].diagram.matching,
                    &b.objects[j2].diagram.matching,
                    &a.objects[i].diagram.matching,
                    &glued[idx(i, j)],
                    &glued[idx(i, j2)],
                );
                let sign = if a.objects[i].h.rem_euclid(2) == 0 { 1 } else { -1 };
                let c = extend(&ext, psi, sign);
                out.add_to(idx(i, j), idx(i, j2), &c);
            }
        }
    }
    out
}

/// Replace every circle by its two circle-free copies at `q ± 1`.
///
/// A `+` copy is included by a plain birth and projected by a dotted death;
/// a `-` copy is included by a dotted birth and projected by a plain death.
/// Each basis term of an entry therefore lands in exactly one delooped entry.
pub fn deloop(c: &Complex) -> Complex {
    if c.objects.iter().all(|o| o.diagram.circles == 0) {
        return c.clone();
    }
    let mut out = Complex::new(c.boundary.clone());
    let mut first = Vec::with_capacity(c.len());
    for o in &c.objects {
        first.push(out.len());
        let k = o.diagram.circles;
        for s in 0u32..1 << k {
            let minus = s.count_ones() as i32;
            let plus = k as i32 - minus;
            out.push(Smoothing::new(o.diagram.matching.clone()), o.h, o.q + plus - minus);
        }
    }
    for (i, row) in c.d.iter().enumerate() {
        let si = &c.objects[i].diagram;
        for (&j, cob) in row {
            let tj = &c.objects[j].diagram;
            let n = cycles(&si.matching, &tj.matching).1;
            let (cs, ct) = (si.circles as usize, tj.circles as usize);
            let mut parts: HashMap<(u64, u64), Vec<(u64, i64)>> = HashMap::new();
            for &(m, k) in cob.terms() {
                let src = (m >> n) & ((1 << cs) - 1);
                let tgt = (m >> (n + cs)) & ((1 << ct) - 1);
                let s = !src & ((1 << cs) - 1);
                parts.entry((s, tgt)).or_default().push((m & ((1 << n) - 1), k));
            }
            let mut keys: Vec<_> = parts.keys().copied().collect();
            keys.sort_unstable();
            for key in keys {
                let terms = parts.remove(&key).unwrap();
                out.set(first[i] + key.0 as usize, first[j] + key.1 as usize, Cob::from_terms(terms));
            }
        }
    }
    out
}
