//! Stabilized homology table of a diagram file.
//!
//! cargo run --example kh_table -- [FILE] [HMIN]

use khmr::diagram::parse;
use khmr::pipeline::{khovanov_homology, KhOptions};

fn main() -> khmr::Result<()> {
    let mut args = std::env::args().skip(1);
    let file = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/l1.json").into());
    let h_min: i32 = args.next().map(|s| s.parse().expect("HMIN is an integer")).unwrap_or(-6);

    let d = parse(&std::fs::read_to_string(&file)?)?;
    let r = khovanov_homology(&d, &KhOptions::new(h_min))?;
    println!("{file}: stable at k = {:?}", r.k);
    for s in &r.shifting_data {
        println!("gate: n+ = {}, n- = {}, N = {}, eta = {}", s.n_plus, s.n_minus, s.big_n, s.eta);
    }
    print!("{}", r.to_grid());
    Ok(())
}
