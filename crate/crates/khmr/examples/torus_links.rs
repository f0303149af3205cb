//! Homology of T(2, k) approaches the table of two longitudes in S^2 x S^1.

use khmr::diagram::{braid_closure, parse};
use khmr::pipeline::{khovanov_homology, KhOptions};

fn main() -> khmr::Result<()> {
    let l1 = khovanov_homology(&parse(include_str!("../../../fixtures/l1.json"))?, &KhOptions::new(-6))?;
    for m in [2, 4, 6, 8, 10] {
        // L1 is the m-crossing positive twist closed up, renormalized so the
        // top cell sits at (0, 0); for T(2, m) that is a shift by (-m, -3m).
        let d = braid_closure(2, &vec![1; m])?;
        let t = khovanov_homology(&d, &KhOptions::new(-1))?.table.shift(-(m as i32), -3 * m as i32);
        let agree = (-6..=0).filter(|&h| (-30..=2).all(|q| t.get(h, q) == l1.table.get(h, q))).count();
        println!("T(2,{m}): matches L1 in {agree} of 7 degrees on [-6, 0]");
    }
    Ok(())
}
