//! Knotification: the Hopf link becomes L2, and a handle slide on the
//! 3-chain leaves the table alone.

use khmr::diagram::{parse, parse_pairs, Point};
use khmr::pipeline::{khovanov_homology, knotification_homology, KhOptions};

fn main() -> khmr::Result<()> {
    let opts = KhOptions::new(-3);
    let hopf = parse(include_str!("../../../fixtures/classical/hopf_negative.pd"))?;
    let c = hopf.components()?;
    let pair = (Point { edge: c[0][0], pos: 0 }, Point { edge: c[1][0], pos: 0 });
    let (k, r) = knotification_homology(&hopf, &[pair], &opts)?;
    let l2 = khovanov_homology(&parse(include_str!("../../../fixtures/l2.json"))?, &opts)?;
    println!("Hopf link knotified at edges {} and {}: {} crossings, {} gate", c[0][0], c[1][0], k.crossings.len(), k.gates.len());
    print!("{}", r.to_grid());
    println!("same table as L2: {}", r.table == l2.table);

    let chain = parse(include_str!("../../../fixtures/classical/chain3.pd"))?;
    for spec in ["1-5,3-7", "1-5,2-8", "2-6,4-8"] {
        let (_, r) = knotification_homology(&chain, &parse_pairs(spec)?, &opts)?;
        println!("3-chain joined at {spec}: {} cells, Euler rank {}", r.table.cells.len(),
            r.table.cells.iter().map(|(&(h, _), g)| if h % 2 == 0 { g.free as i64 } else { -(g.free as i64) }).sum::<i64>());
    }
    Ok(())
}
