//! Independent brute-force oracle: the full Khovanov cube over `Z[X]/X^2`
//! with a hand-rolled integer Smith normal form.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `(h, q) -> (free rank, torsion orders)`.
pub type Table = BTreeMap<(i32, i32), (usize, Vec<u64>)>;

/// Crossing slots `[x0, x1, x2, x3]` counterclockwise with `x0 -> x2` under,
/// and `true` for a positive crossing.
pub fn cube_homology(xs: &[([u32; 4], bool)]) -> Table {
    let n = xs.len();
    let npos = xs.iter().filter(|x| x.1).count() as i32;
    let nneg = n as i32 - npos;
    // Circles of each resolution.
    let mut circles: Vec<(usize, HashMap<u32, usize>)> = Vec::with_capacity(1 << n);
    for r in 0..1usize << n {
        let mut uf: HashMap<u32, u32> = HashMap::new();
        fn find(uf: &mut HashMap<u32, u32>, a: u32) -> u32 {
            let p = *uf.entry(a).or_insert(a);
            if p == a {
                a
            } else {
                let root = find(uf, p);
                uf.insert(a, root);
                root
            }
        }
        for (c, (x, _)) in xs.iter().enumerate() {
            let pairs = if r >> c & 1 == 0 { [(x[0], x[1]), (x[2], x[3])] } else { [(x[0], x[3]), (x[1], x[2])] };
            for (a, b) in pairs {
                let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
                uf.insert(ra, rb);
            }
        }
        let labels: Vec<u32> = uf.keys().copied().collect();
        let mut id: HashMap<u32, usize> = HashMap::new();
        let mut of: HashMap<u32, usize> = HashMap::new();
        for l in labels {
            let root = find(&mut uf, l);
            let k = id.len();
            let c = *id.entry(root).or_insert(k);
            of.insert(l, c);
        }
        circles.push((id.len(), of));
    }
    // Generators: (resolution, bitmask of X-labelled circles).
    let grade = |r: usize, m: usize| -> (i32, i32) {
        let h = r.count_ones() as i32;
        let k = circles[r].0 as i32;
        let x = m.count_ones() as i32;
        (h - nneg, (k - 2 * x) + h + npos - 2 * nneg)
    };
    let mut gens: BTreeMap<(i32, i32), Vec<(usize, usize)>> = BTreeMap::new();
    for r in 0..1usize << n {
        for m in 0..1usize << circles[r].0 {
            gens.entry(grade(r, m)).or_default().push((r, m));
        }
    }
    let index: HashMap<(usize, usize), usize> = gens
        .values()
        .flat_map(|v| v.iter().enumerate().map(|(i, &g)| (g, i)))
        .collect();
    let mut out = Table::new();
    let mut ranks: HashMap<(i32, i32), usize> = HashMap::new();
    let mut tors: HashMap<(i32, i32), Vec<u64>> = HashMap::new();
    for (&(h, q), src) in &gens {
        let Some(tgt) = gens.get(&(h + 1, q)) else { continue };
        let mut mat = vec![vec![BigInt::zero(); src.len()]; tgt.len()];
        for (col, &(r, m)) in src.iter().enumerate() {
            for c in 0..n {
                if r >> c & 1 == 1 {
                    continue;
                }
                let r2 = r | 1 << c;
                let sign: i64 = if (r & ((1 << c) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                for (m2, coef) in edge_map(xs[c].0, &circles[r].1, &circles[r2].1, circles[r2].0, m) {
                    let row = index[&(r2, m2)];
                    mat[row][col] += BigInt::from(sign * coef);
                }
            }
        }
        let d = snf(mat);
        ranks.insert((h, q), d.len());
        tors.insert((h + 1, q), d.iter().filter(|x| **x != BigInt::from(1)).map(|x| x.try_into().unwrap()).collect());
    }
    for (&(h, q), g) in &gens {
        let free = g.len() - ranks.get(&(h, q)).copied().unwrap_or(0) - ranks.get(&(h - 1, q)).copied().unwrap_or(0);
        let t = tors.remove(&(h, q)).unwrap_or_default();
        if free > 0 || !t.is_empty() {
            out.insert((h, q), (free, t));
        }
    }
    out
}

/// Merge or split between resolutions differing at one crossing.
fn edge_map(x: [u32; 4], from: &HashMap<u32, usize>, to: &HashMap<u32, usize>, nto: usize, m: usize) -> Vec<(usize, i64)> {
    // Circles of `to` not touching the crossing correspond to circles of `from`.
    let mut base = 0usize;
    let mut touched_from = vec![from[&x[0]], from[&x[1]], from[&x[2]], from[&x[3]]];
    touched_from.sort();
    touched_from.dedup();
    let mut touched_to = vec![to[&x[0]], to[&x[1]], to[&x[2]], to[&x[3]]];
    touched_to.sort();
    touched_to.dedup();
    for (&l, &c) in from {
        if !touched_from.contains(&c) && m >> c & 1 == 1 {
            base |= 1 << to[&l];
        }
    }
    let _ = nto;
    match (touched_from.len(), touched_to.len()) {
        (2, 1) => {
            // Merge: 1*1=1, 1*X=X, X*X=0.
            let xs = touched_from.iter().filter(|&&c| m >> c & 1 == 1).count();
            match xs {
                0 => vec![(base, 1)],
                1 => vec![(base | 1 << touched_to[0], 1)],
                _ => vec![],
            }
        }
        (1, 2) => {
            // Split: 1 -> 1X + X1, X -> XX.
            let (a, b) = (touched_to[0], touched_to[1]);
            if m >> touched_from[0] & 1 == 1 {
                vec![(base | 1 << a | 1 << b, 1)]
            } else {
                vec![(base | 1 << a, 1), (base | 1 << b, 1)]
            }
        }
        _ => unreachable!("a saddle changes the circle count by one"),
    }
}

/// Nonzero invariant factors of an integer matrix.
pub fn snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = vec![];
    let mut t = 0;
    while t < rows.min(cols) {
        // Any nonzero pivot, then reduce until it divides its row and column.
        let Some((pr, pc)) = (t..rows).flat_map(|r| (t..cols).map(move |c| (r, c))).find(|&(r, c)| !a[r][c].is_zero())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut done = true;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let (qt, rem) = a[r][t].div_rem(&a[t][t]);
                for c in t..cols {
                    let v = &a[t][c] * &qt;
                    a[r][c] -= v;
                }
                if !rem.is_zero() {
                    a.swap(t, r);
                    done = false;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let (qt, rem) = a[t][c].div_rem(&a[t][t]);
                for row in a.iter_mut() {
                    let v = &row[t] * &qt;
                    row[c] -= v;
                }
                if !rem.is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                    done = false;
                }
            }
            if !done {
                continue;
            }
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !(&a[r][c] % &a[t][t]).is_zero()));
            match bad {
                Some(r) => {
                    for c in t..cols {
                        let v = a[r][c].clone();
                        a[t][c] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// The library table in oracle form.
pub fn to_table(h: &khmr::chain::BigradedHomology) -> Table {
    h.cells.iter().map(|(&k, g)| (k, (g.free, g.torsion.clone()))).collect()
}

/// Path of a bundled fixture.
pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> khmr::diagram::MrDiagram {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    khmr::diagram::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Every bundled classical link, by file stem.
pub fn classical() -> Vec<(String, khmr::diagram::MrDiagram)> {
    let mut names: Vec<_> = std::fs::read_dir(fixture_path("classical"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "pd"))
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|p| {
            let stem = p.file_stem().unwrap().to_string_lossy().into_owned();
            (stem, fixture(&format!("classical/{}", p.file_name().unwrap().to_string_lossy())))
        })
        .collect()
}

/// Oracle input for a classical diagram.
pub fn oracle_input(d: &khmr::diagram::MrDiagram) -> Vec<([u32; 4], bool)> {
    d.crossings.iter().map(|c| (c.slots, c.sign == khmr::chain::Sign::Pos)).collect()
}

/// Oracle homology including free loops, which the cube does not see: each
/// loop tensors the table with `Z(q) + Z(q^-1)`.
pub fn oracle(d: &khmr::diagram::MrDiagram) -> Table {
    let mut t = if d.crossings.is_empty() { Table::from([((0, 0), (1, vec![]))]) } else { cube_homology(&oracle_input(d)) };
    for _ in 0..d.loops {
        let mut next = Table::new();
        for (&(h, q), (f, tor)) in &t {
            for dq in [-1, 1] {
                let e = next.entry((h, q + dq)).or_insert((0, vec![]));
                e.0 += f;
                e.1.extend(tor);
                e.1.sort();
            }
        }
        t = next;
    }
    t
}

/// Table from `((h, q), free, torsion)` triples.
pub fn table(cells: &[((i32, i32), usize, &[u64])]) -> Table {
    cells.iter().map(|&(k, f, t)| (k, (f, t.to_vec()))).collect()
}

/// The two-longitude example at `h >= -6`: the published cells down to
/// `h = -3` and their two-periodic continuation below.
pub fn l1_table() -> Table {
    table(&[
        ((-6, -14), 1, &[]),
        ((-5, -12), 0, &[2]),
        ((-5, -10), 1, &[]),
        ((-4, -10), 1, &[]),
        ((-3, -8), 0, &[2]),
        ((-3, -6), 1, &[]),
        ((-2, -6), 1, &[]),
        ((-1, -4), 0, &[2]),
        ((-1, -2), 1, &[]),
        ((0, -2), 1, &[]),
        ((0, 0), 1, &[]),
    ])
}

/// The knotified Hopf link at `h >= -3`.
pub fn l2_table() -> Table {
    table(&[
        ((-3, -9), 1, &[2]),
        ((-3, -7), 1, &[]),
        ((-2, -7), 1, &[2]),
        ((-2, -5), 1, &[]),
        ((-1, -5), 0, &[2]),
        ((-1, -3), 1, &[]),
        ((0, -3), 1, &[]),
        ((0, -1), 1, &[]),
    ])
}

/// The crossingless two-gate example at `h >= -5`.
pub fn l3_table() -> Table {
    table(&[
        ((-5, -13), 2, &[2, 2, 2, 2]),
        ((-5, -11), 4, &[]),
        ((-4, -11), 3, &[2, 2]),
        ((-4, -9), 2, &[]),
        ((-3, -9), 1, &[2, 2, 2]),
        ((-3, -7), 3, &[]),
        ((-2, -7), 2, &[2]),
        ((-2, -5), 1, &[]),
        ((-1, -5), 0, &[2, 2]),
        ((-1, -3), 2, &[]),
        ((0, -3), 1, &[]),
        ((0, -1), 1, &[]),
    ])
}

pub fn restrict(t: &Table, hmin: i32) -> Table {
    t.iter().filter(|(k, _)| k.0 >= hmin).map(|(k, v)| (*k, v.clone())).collect()
}

/// A random noncrossing matching on labels `1..=2m`, built from a random
/// balanced bracket word.
pub fn random_matching(rng: &mut impl rand::Rng, m: usize) -> khmr::planar::Matching {
    let mut opens = m;
    let mut closes = m;
    let mut stack = vec![];
    let mut pairs = vec![];
    let mut label = 0u32;
    while opens + closes > 0 {
        label += 1;
        let can_close = !stack.is_empty();
        let open = opens > 0 && (!can_close || rng.gen_bool(opens as f64 / (opens + closes) as f64));
        if open {
            stack.push(label);
            opens -= 1;
        } else {
            pairs.push((stack.pop().unwrap(), label));
            closes -= 1;
        }
    }
    khmr::planar::Matching::from_pairs(pairs)
}

/// A random homogeneous cobordism `s -> t`: every term carries the same
/// number of dots.
pub fn random_cob(rng: &mut impl rand::Rng, s: &khmr::planar::Smoothing, t: &khmr::planar::Smoothing) -> khmr::planar::Cob {
    let bits = s.hom_rank_bits(t);
    let dots = rng.gen_range(0..=bits.min(2));
    let masks: Vec<u64> = (0u64..1 << bits).filter(|m| m.count_ones() as usize == dots).collect();
    let terms = (0..rng.gen_range(1..=3))
        .map(|_| (masks[rng.gen_range(0..masks.len())], rng.gen_range(-3i64..=3)))
        .collect();
    khmr::planar::Cob::from_terms(terms)
}

/// Check associativity and degree additivity on `count` random composable
/// triples; returns the violations.
pub fn random_cob_triples(seed: u64, count: usize) -> Vec<String> {
    use khmr::planar::{compose, Smoothing};
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut bad = vec![];
    for i in 0..count {
        let m = rng.gen_range(0..=3);
        let sm: Vec<Smoothing> =
            (0..4).map(|_| Smoothing::with_circles(random_matching(&mut rng, m), rng.gen_range(0..=1))).collect();
        let f = random_cob(&mut rng, &sm[0], &sm[1]);
        let g = random_cob(&mut rng, &sm[1], &sm[2]);
        let h = random_cob(&mut rng, &sm[2], &sm[3]);
        let gf = compose(&sm[0], &sm[1], &sm[2], &f, &g);
        let hg = compose(&sm[1], &sm[2], &sm[3], &g, &h);
        let left = compose(&sm[0], &sm[2], &sm[3], &gf, &h);
        let right = compose(&sm[0], &sm[1], &sm[3], &f, &hg);
        if left != right {
            bad.push(format!("triple {i}: (hg)f != h(gf)"));
        }
        let (df, dg) = (f.degree(&sm[0], &sm[1]), g.degree(&sm[1], &sm[2]));
        if !gf.is_zero() {
            match (df, dg, gf.degree(&sm[0], &sm[2])) {
                (Some(a), Some(b), Some(c)) if a + b == c => {}
                other => bad.push(format!("triple {i}: degrees {other:?} do not add")),
            }
        }
    }
    bad
}
