//! Shape of the one-full-twist complex and its stabilization.
//!
//! cargo run --example twist_structure -- [N]

use std::collections::BTreeMap;

use khmr::twist::{as_tl, check_stabilization, check_through_degree_bounds, raw_one_twist};

fn main() {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().expect("N is a strand count")).unwrap_or(4);
    let c = raw_one_twist(n);
    println!("F_{n}: {} objects after reduction", c.len());

    // Objects per raw degree, split by through-degree.
    let mut grid: BTreeMap<i32, BTreeMap<usize, usize>> = BTreeMap::new();
    for o in &c.objects {
        *grid.entry(o.h).or_default().entry(as_tl(&o.diagram, n).through_degree()).or_default() += 1;
    }
    for (h, by_th) in &grid {
        let cells: Vec<String> = by_th.iter().map(|(th, k)| format!("th={th}: {k}")).collect();
        println!("  h={h:>3}  {}", cells.join(", "));
    }

    let r = check_through_degree_bounds(n);
    println!("top degree per m = (n - th)/2: {:?}", r.top_degree);
    println!("through-degree bound: {}", if r.passed() { "holds" } else { "violated" });
    for v in &r.violations {
        println!("  {v}");
    }
    if n % 2 == 0 {
        for k in 1..=if n <= 2 { 4 } else { 1 } {
            let s = check_stabilization(n, k);
            println!("C({k}) vs C({}): {} objects above -2k, {}", k + 1, s.objects, if s.passed() { "agree" } else { "differ" });
        }
    }
}
