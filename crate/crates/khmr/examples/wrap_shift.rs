//! Wrapping a strand around a gate shifts the table by `(±eta, ±3 eta)`.

use khmr::diagram::parse;
use khmr::pipeline::wrap_shift_check;

fn main() -> khmr::Result<()> {
    for (name, text) in [
        ("l1.json", include_str!("../../../fixtures/l1.json")),
        ("l1_opposite.json", include_str!("../../../fixtures/l1_opposite.json")),
    ] {
        let d = parse(text)?;
        for positive in [true, false] {
            let r = wrap_shift_check(&d, 0, positive, None, -4)?;
            println!(
                "{name} {} wrap on edge {}: eta {}, predicted shift {:?}, {}",
                if positive { "positive" } else { "negative" },
                r.edge,
                r.eta,
                r.shift,
                if r.passed { "confirmed" } else { "NOT confirmed" }
            );
        }
    }
    Ok(())
}
