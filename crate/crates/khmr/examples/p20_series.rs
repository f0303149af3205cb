//! The stable two-strand twist decategorifies to `1/(q + q^-1)` times the
//! cup-cap diagram.

use khmr::decat::p20_series_check;

fn main() {
    let order: usize = std::env::args().nth(1).map(|s| s.parse().expect("ORDER is a count")).unwrap_or(10);
    let r = p20_series_check(order);
    println!("cup-cap coefficient: {}", r.cup_cap);
    println!("identity coefficient: {}", r.identity);
    println!("{}", if r.passed() { "matches q^-1 - q^-3 + q^-5 - ..." } else { "MISMATCH" });
    for m in &r.mismatches {
        println!("  {m}");
    }
}
