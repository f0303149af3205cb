use std::collections::{BTreeMap, BTreeSet};

use super::complex::Complex;
use crate::planar::{compose, Cob};

/// Cancel every `±identity` entry between equal circle-free smoothings.
///
/// Pivots are taken scanning objects by increasing `h`, then by index, and
/// within an object by increasing target index. Cancelling `φ: a -> b`
/// replaces each entry `c -> e` by `ε - δ φ⁻¹ γ` with `γ: c -> b` and
/// `δ: a -> e`, then drops `a` and `b`.
pub fn gaussian_eliminate(c: &Complex) -> Complex {
    let n = c.len();
    let mut d: Vec<BTreeMap<usize, Cob>> = c.d.clone();
    let mut inc: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (i, row) in d.iter().enumerate() {
        for &j in row.keys() {
            inc[j].insert(i);
        }
    }
    let mut alive = vec![true; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (c.objects[i].h, i));
    let obj = &c.objects;
    loop {
        let mut changed = false;
        for &a in &order {
            if !alive[a] {
                continue;
            }
            let pivot = d[a].iter().find_map(|(&b, f)| {
                let same = obj[a].diagram == obj[b].diagram && obj[a].diagram.circles == 0;
                if same {
                    f.unit().map(|u| (b, u))
                } else {
                    None
                }
            });
            let Some((b, u)) = pivot else { continue };
            changed = true;
            let sources: Vec<(usize, Cob)> =
                inc[b].iter().filter(|&&x| x != a).map(|&x| (x, d[x][&b].clone())).collect();
            let targets: Vec<(usize, Cob)> =
                d[a].iter().filter(|(&y, _)| y != b).map(|(&y, f)| (y, f.clone())).collect();
            for (x, gamma) in &sources {
                for (y, delta) in &targets {
                    let zig = compose(&obj[*x].diagram, &obj[b].diagram, &obj[*y].diagram, gamma, delta).scale(-u);
                    if zig.is_zero() {
                        continue;
                    }
                    let cur = d[*x].remove(y).unwrap_or_default().add(&zig);
                    if cur.is_zero() {
                        inc[*y].remove(x);
                    } else {
                        d[*x].insert(*y, cur);
                        inc[*y].insert(*x);
                    }
                }
            }
            for v in [a, b] {
                for t in std::mem::take(&mut d[v]).into_keys() {
                    inc[t].remove(&v);
                }
                for s in std::mem::take(&mut inc[v]) {
                    d[s].remove(&v);
                }
                alive[v] = false;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out = Complex::new(c.boundary.clone());
    let mut new_index = vec![usize::MAX; n];
    for i in 0..n {
        if alive[i] {
            new_index[i] = out.push(obj[i].diagram.clone(), obj[i].h, obj[i].q);
        }
    }
    for i in 0..n {
        if alive[i] {
            for (&j, f) in &d[i] {
                out.d[new_index[i]].insert(new_index[j], f.clone());
            }
        }
    }
    out
}
