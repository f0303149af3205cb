use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::complex::Complex;
use super::snf::smith_diagonal;
use crate::error::Error;

/// One cell of a homology table: `Z^free ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Group {
    pub free: usize,
    pub torsion: Vec<u64>,
}

impl Group {
    pub fn free(n: usize) -> Self {
        Self { free: n, torsion: vec![] }
    }

    pub fn new(free: usize, torsion: &[u64]) -> Self {
        Self { free, torsion: torsion.to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        if self.free > 0 {
            parts.push(if self.free == 1 { "Z".to_string() } else { format!("Z^{}", self.free) });
        }
        let mut t = self.torsion.clone();
        t.dedup();
        for o in t {
            let k = self.torsion.iter().filter(|&&x| x == o).count();
            parts.push(if k == 1 { format!("Z_{o}") } else { format!("Z_{o}^{k}") });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// Bigraded homology: `(h, q) -> group`, zero cells omitted.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BigradedHomology {
    pub cells: BTreeMap<(i32, i32), Group>,
}

impl BigradedHomology {
    pub fn get(&self, h: i32, q: i32) -> Group {
        self.cells.get(&(h, q)).cloned().unwrap_or_default()
    }

    pub fn insert(&mut self, h: i32, q: i32, g: Group) {
        if !g.is_zero() {
            self.cells.insert((h, q), g);
        }
    }

    /// Cells with `h >= hmin`.
    pub fn restrict(&self, hmin: i32) -> Self {
        Self { cells: self.cells.iter().filter(|(k, _)| k.0 >= hmin).map(|(k, v)| (*k, v.clone())).collect() }
    }

    /// Translate all gradings.
    pub fn shift(&self, dh: i32, dq: i32) -> Self {
        Self { cells: self.cells.iter().map(|(&(h, q), g)| ((h + dh, q + dq), g.clone())).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

impl fmt::Display for BigradedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(h, q), g) in &self.cells {
            writeln!(f, "({h}, {q}): {g}")?;
        }
        Ok(())
    }
}

/// Integer homology of a closed complex (every object the empty diagram).
///
/// Computed separately for every q-degree with Smith normal form.
pub fn homology(c: &Complex) -> Result<BigradedHomology, Error> {
    if !c.boundary.is_empty() || c.objects.iter().any(|o| o.diagram.circles > 0) {
        return Err(Error::NotClosed);
    }
    super::audit::check(c, "homology");
    let mut by_q: BTreeMap<i32, BTreeMap<i32, Vec<usize>>> = BTreeMap::new();
    for (i, o) in c.objects.iter().enumerate() {
        by_q.entry(o.q).or_default().entry(o.h).or_default().push(i);
    }
    let mut out = BigradedHomology::default();
    for (q, degs) in by_q {
        // For every h: rank of d_h and torsion of its cokernel.
        let mut rank: BTreeMap<i32, usize> = BTreeMap::new();
        let mut tors: BTreeMap<i32, Vec<u64>> = BTreeMap::new();
        for (&h, src) in &degs {
            let Some(tgt) = degs.get(&(h + 1)) else { continue };
            let mut m = vec![vec![BigInt::from(0); src.len()]; tgt.len()];
            for (col, &i) in src.iter().enumerate() {
                for (row, &j) in tgt.iter().enumerate() {
                    if let Some(f) = c.entry(i, j) {
                        m[row][col] = BigInt::from(scalar(f));
                    }
                }
            }
            let diag = smith_diagonal(m);
            rank.insert(h, diag.len());
            let t: Vec<u64> = diag
                .iter()
                .filter(|d| !d.is_one())
                .map(|d| d.to_u64().expect("torsion order exceeds u64"))
                .collect();
            tors.insert(h + 1, t);
        }
        for (&h, objs) in &degs {
            let free = objs.len() - rank.get(&h).copied().unwrap_or(0) - rank.get(&(h - 1)).copied().unwrap_or(0);
            let torsion = tors.remove(&h).unwrap_or_default();
            out.insert(h, q, Group { free, torsion });
        }
    }
    Ok(out)
}

fn scalar(f: &crate::planar::Cob) -> i64 {
    match f.terms() {
        [] => 0,
        [(0, k)] => *k,
        _ => unreachable!("cobordisms between empty diagrams are scalars"),
    }
}
