//! The table of L2 survives Reidemeister and finger moves.

use khmr::diagram::{parse, Move};
use khmr::pipeline::{khovanov_homology, KhOptions};

fn main() -> khmr::Result<()> {
    let d = parse(include_str!("../../../fixtures/l2.json"))?;
    let opts = KhOptions::new(-4);
    let base = khovanov_homology(&d, &opts)?;
    print!("{}", base.to_grid());
    let (e, f) = (d.edges[0], d.edges[1]);
    for m in [
        Move::R1Add { edge: e, positive: true, left: true },
        Move::R1Add { edge: f, positive: false, left: false },
        Move::R2 { over: e, under: f },
        Move::Finger { gate: 0, edge: e },
    ] {
        let v = d.apply_move(m)?;
        let r = khovanov_homology(&v, &opts)?;
        let sd = &v.shifting_data()[0];
        println!(
            "{m:?}: {} crossings, gate width {}, eta {}, table {}",
            v.crossings.len(),
            sd.n,
            sd.eta,
            if r.table == base.table { "unchanged" } else { "CHANGED" }
        );
    }
    Ok(())
}
