//! Seeded random quintuple sampling for fields too large to exhaust; the
//! report is reproducible given (seed, budget).
//!
//!     cargo run --release --example sampled_search

use pnpair::gf2::make_ctx;
use pnpair::search::sampled_search;

fn main() -> pnpair::Result<()> {
    for (q, m, budget) in [(4u64, 4u32, 1000u64), (8, 3, 500), (2, 7, 500)] {
        let ctx = make_ctx(q.trailing_zeros(), m, None)?;
        let r = sampled_search(&ctx, budget, 0xfeed)?;
        println!(
            "({q},{m}) mod {}: {} sampled quintuples, {} exceptional (seed {})",
            r.modulus,
            r.checked,
            r.exceptional,
            r.rng_seed.unwrap()
        );
        if let Some(list) = &r.exceptional_list {
            for e in list {
                println!("  exceptional quintuple: {e}");
            }
        }
    }
    Ok(())
}
