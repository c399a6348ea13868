//! Factor the multiplicative group orders q^m − 1 = 2^(km) − 1 through the
//! cyclotomic pre-split, and evaluate ω, W = 2^ω and φ.
//!
//!     cargo run --release --example factor_group_orders

use pnpair::factorize::{check_w_bound, factor_qm_minus_1};

fn main() -> pnpair::Result<()> {
    for (k, m) in [(1u32, 17u32), (7, 4), (4, 15), (5, 31)] {
        let f = factor_qm_minus_1(k, m)?;
        let primes: Vec<String> = f
            .primes()
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        println!("2^({k}·{m}) − 1 = {}", primes.join(" · "));
        println!(
            "  ω = {}, W = {}, φ = {}",
            f.omega(),
            f.w_value(),
            f.euler_phi()
        );
    }

    // the bound sweeps used to close out large-field cases
    println!("\nW(n) growth bounds up to 10^5:");
    for (alpha, c, odd) in [
        (5u32, "6.46", true),
        (6, "37.4683", false),
        (8, "4514.7", false),
    ] {
        let r = check_w_bound(100_000, alpha, c, odd)?;
        println!(
            "  W(n) < {c}·n^(1/{alpha}) ({}): {} violations, max ratio {:.4} at n = {}",
            if odd { "odd n" } else { "all n" },
            r.violations.len(),
            r.max_ratio,
            r.max_ratio_at
        );
    }
    Ok(())
}
