//! The distinct-factor structure of x^m − 1 over F_q from q-cyclotomic
//! cosets, the exact ratio σ(q,m), and explicit factor polynomials.
//!
//!     cargo run --example cyclotomic_structure

use pnpair::gf2::make_ctx;
use pnpair::xm1::{explicit_factors, xm_structure};

fn main() -> pnpair::Result<()> {
    for (q, m) in [(2u64, 17u32), (2, 21), (4, 9), (8, 3), (16, 15), (2, 12)] {
        let k = q.trailing_zeros();
        let s = xm_structure(k, m);
        println!(
            "x^{m}−1 over F_{q}: m′ = {}, multiplicity 2^{} = {}, degrees {:?}, u = {}, Ω = {}, σ = {}/{}",
            s.m_prime(),
            s.a(),
            s.multiplicity(),
            s.factor_degrees(),
            s.u(),
            s.omega_xm(),
            s.sigma().numer(),
            s.sigma().denom(),
        );
    }

    // explicit factors, computed inside the extension field
    println!();
    for (k, m) in [(1u32, 9u32), (2, 3)] {
        let ctx = make_ctx(k, m, None)?;
        let xf = explicit_factors(&ctx)?;
        let q = 1u64 << k;
        println!(
            "x^{}−1 over F_{q}: {}",
            xf.structure.m_prime(),
            xf.factors
                .iter()
                .map(|f| format!("({})", f.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    Ok(())
}
