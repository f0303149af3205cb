//! Glue crossing complexes one at a time, reducing as we go.

use khmr::chain::{crossing_complex, glue_reduce, homology, Complex, Sign};
use khmr::diagram::{parse_pd, Vertex};
use khmr::planar::Matching;

fn main() -> khmr::Result<()> {
    // Right-handed trefoil.
    let d = parse_pd("X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]")?;
    let mut c = Complex::single(Matching::empty(), 0, 0);
    for (i, x) in d.crossings.iter().enumerate() {
        let sign = x.sign;
        let r = d.rotation(Vertex::Crossing(i));
        let piece = crossing_complex(sign, [r[0], r[1], r[2], r[3]]);
        c = glue_reduce(&c, &piece);
        println!("after crossing {i} ({}): {} objects, {} entries", if sign == Sign::Pos { "+" } else { "-" }, c.len(), c.entry_count());
    }
    print!("{}", homology(&c)?);
    Ok(())
}
