use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Nonzero diagonal of the Smith normal form of an integer matrix.
///
/// Returns invariant factors `d_1 | d_2 | ... | d_r`, all positive, where
/// `r` is the rank. Pivots are chosen with minimal absolute value among the
/// remaining entries to keep intermediate coefficients small.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut diag = vec![];
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_entry(&m, t) else { break };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            // Clear column t below the pivot.
            for r in t + 1..rows {
                if m[r][t].is_zero() {
                    continue;
                }
                let q = floor_div(&m[r][t], &m[t][t]);
                sub_row(&mut m, r, t, &q);
                if !m[r][t].is_zero() {
                    dirty = true;
                }
            }
            // Clear row t right of the pivot.
            for c in t + 1..cols {
                if m[t][c].is_zero() {
                    continue;
                }
                let q = floor_div(&m[t][c], &m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[c] -= v;
                }
                if !m[t][c].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A remainder is smaller than the pivot: move it into place.
                let (pr, pc) = min_in_cross(&m, t);
                m.swap(t, pr);
                for row in m.iter_mut() {
                    row.swap(t, pc);
                }
                continue;
            }
            // Pivot must divide the rest of the matrix.
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !(&m[r][c] % &m[t][t]).is_zero()));
            match bad {
                Some(r) => {
                    let row_r = m[r].clone();
                    for c in t..cols {
                        m[t][c] += &row_r[c];
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

fn min_entry(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in m.iter().enumerate().skip(t) {
        for (c, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| v.abs() < m[br][bc].abs()) {
                best = Some((r, c));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn min_in_cross(m: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for r in t..m.len() {
        if !m[r][t].is_zero() && (m[best.0][best.1].is_zero() || m[r][t].abs() < m[best.0][best.1].abs()) {
            best = (r, t);
        }
    }
    for c in t..m[0].len() {
        if !m[t][c].is_zero() && m[t][c].abs() < m[best.0][best.1].abs() {
            best = (t, c);
        }
    }
    best
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_floor(b)
}

fn sub_row(m: &mut [Vec<BigInt>], r: usize, t: usize, q: &BigInt) {
    let (lo, hi) = m.split_at_mut(r);
    let pivot_row = &lo[t];
    for (x, p) in hi[0].iter_mut().zip(pivot_row.iter()).skip(t) {
        if !p.is_zero() {
            *x -= p * q;
        }
    }
}
