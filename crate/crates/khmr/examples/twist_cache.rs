//! Build twist complexes once and reuse them from disk.
//!
//! cargo run --example twist_cache -- [DIR]

use std::time::Instant;

use khmr::twist::{TwistCache, TwistSpec, ENGINE_TAG};

fn main() -> khmr::Result<()> {
    let dir = std::env::args().nth(1).map(std::path::PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("khmr-cache-example"));
    let cache = TwistCache::new(Some(dir.clone()));
    let spec = TwistSpec::new(4, 2);
    for pass in ["cold", "warm"] {
        let t = Instant::now();
        let c = cache.get(&spec)?;
        println!("{pass}: C(F_4^2) has {} objects, {:.2?}", c.len(), t.elapsed());
    }
    println!("stored at {} (engine {ENGINE_TAG})", cache.path(&spec).unwrap().display());
    Ok(())
}
