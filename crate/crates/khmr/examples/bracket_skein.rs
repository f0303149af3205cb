//! Kauffman brackets, and their agreement with the graded Euler
//! characteristic of the homology.

use khmr::decat::{kauffman_bracket, skein_consistency};
use khmr::diagram::parse;

fn main() -> khmr::Result<()> {
    for (name, text) in [
        ("unknot", include_str!("../../../fixtures/classical/unknot.pd")),
        ("Hopf link", include_str!("../../../fixtures/classical/hopf_negative.pd")),
        ("left trefoil", include_str!("../../../fixtures/classical/trefoil_left.pd")),
        ("figure eight", include_str!("../../../fixtures/classical/figure_eight.pd")),
    ] {
        println!("{name}: {}", kauffman_bracket(&parse(text)?)?);
    }
    // For a gated diagram the bracket is a series, compared on a window.
    let l2 = parse(include_str!("../../../fixtures/l2.json"))?;
    let r = skein_consistency(&l2, -9, 1)?;
    println!("L2 at k = {}: bracket {}", r.k, r.bracket);
    println!("L2 Euler series:    {}", r.euler);
    println!("agree: {}", r.passed());
    Ok(())
}
