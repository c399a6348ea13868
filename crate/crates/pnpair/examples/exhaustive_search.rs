//! Exhaustive quintuple searches over the two fully-searchable fields, plus
//! a sharded run merged back together.
//!
//!     cargo run --release --example exhaustive_search

use pnpair::gf2::make_ctx;
use pnpair::search::{exhaustive_search, merge_reports, SearchOptions, Shard};
use std::time::Instant;

fn main() -> pnpair::Result<()> {
    for (k, m, modulus) in [(1u32, 2u32, "x^2+x+1"), (1, 3, "x^3+x+1")] {
        let ctx = make_ctx(k, m, Some(pnpair::gf2x::parse(modulus).unwrap()))?;
        let t = Instant::now();
        let r = exhaustive_search(&ctx, Shard::full(), &SearchOptions::default())?;
        println!(
            "({},{}) mod {}: checked {} quintuples, {} exceptional ({:.2?})",
            1u64 << k,
            m,
            modulus,
            r.checked,
            r.exceptional,
            t.elapsed()
        );
    }

    // the same run in four shards
    let ctx = make_ctx(1, 3, Some(0b1011))?;
    let parts: Vec<_> = (1..=4)
        .map(|i| {
            let shard = Shard::new(i, 4).unwrap();
            let r = exhaustive_search(&ctx, shard, &SearchOptions::default()).unwrap();
            println!(
                "  shard {}/4: checked {}, exceptional {}",
                i, r.checked, r.exceptional
            );
            r
        })
        .collect();
    let merged = merge_reports(parts)?;
    println!(
        "  merged: checked {}, exceptional {}",
        merged.checked, merged.exceptional
    );
    Ok(())
}
