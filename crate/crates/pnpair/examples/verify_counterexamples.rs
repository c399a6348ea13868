//! Re-verify each shipped counter-example quintuple by running the full
//! witness loop: no coprime power of the primitive element may work.
//!
//!     cargo run --release --example verify_counterexamples

use pnpair::search::{counterexample_rows, verify_counterexample};
use std::time::Instant;

fn main() -> pnpair::Result<()> {
    for row in counterexample_rows()? {
        let ctx = row.ctx()?;
        let map = row.quintuple(&ctx)?;
        let t = Instant::now();
        let confirmed = verify_counterexample(&ctx, &map, 1 << 24)?;
        println!(
            "({},{}) mod {}: quintuple ({}) → {} ({:.2?})",
            row.q,
            row.m,
            row.modulus,
            map.to_hex(),
            if confirmed {
                "confirmed exceptional"
            } else {
                "HAS A WITNESS"
            },
            t.elapsed()
        );
    }
    Ok(())
}
