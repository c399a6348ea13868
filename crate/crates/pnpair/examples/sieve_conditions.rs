//! The sufficient conditions in exact arithmetic: the plain bound, the
//! prime/polynomial sieve with θ and 𝔖, and the closed forms.
//!
//!     cargo run --release --example sieve_conditions

use num_bigint::BigUint;
use pnpair::factorize::factor_qm_minus_1;
use pnpair::sieve::{
    lemma53_s, lemma56_bound, plain_condition_full, rational_to_f64, sieve_eval, DSpec, SieveChoice,
};
use pnpair::xm1::xm_structure;

fn main() -> pnpair::Result<()> {
    // the plain bound is hopeless for small pairs…
    for (q, m) in [(2u64, 4u32), (16, 15), (32, 31)] {
        let k = q.trailing_zeros();
        let order = factor_qm_minus_1(k, m)?;
        let xm = xm_structure(k, m);
        let pc = plain_condition_full(k, m, &order, &xm);
        println!(
            "plain bound ({q},{m}): q^(m/2) ≈ {:.3e} vs 4W²Ω² = {} → {}",
            pc.lhs,
            pc.rhs,
            if pc.passes { "passes" } else { "fails" }
        );
    }

    // …but the sieve rescues (128,4) with d = 3, g = x+1
    let k = 7;
    let order = factor_qm_minus_1(k, 4)?;
    let xm = xm_structure(k, 4);
    let choice = SieveChoice::new(&order, &xm, &DSpec::Value(BigUint::from(3u32)), vec![1])?;
    let ev = sieve_eval(&choice, k, 4);
    println!(
        "\nsieve (128,4), d = 3, g = x+1: n = {}, k = {}, θ ≈ {:.5}, 𝔖 ≈ {:.4}, bound ≈ {:.2} vs q^(m/2) = {} → {}",
        ev.n,
        ev.k,
        rational_to_f64(&ev.theta),
        rational_to_f64(ev.s.as_ref().unwrap()),
        rational_to_f64(ev.rhs.as_ref().unwrap()),
        ev.lhs,
        if ev.passes { "passes" } else { "fails" }
    );

    // and (32,31) with d = 1, g = x^31−1 (all factors linear)
    let order = factor_qm_minus_1(5, 31)?;
    let xm = xm_structure(5, 31);
    let all = xm.factor_degrees().to_vec();
    let choice = SieveChoice::new(&order, &xm, &DSpec::Value(BigUint::from(1u32)), all)?;
    let ev = sieve_eval(&choice, 5, 31);
    println!(
        "sieve (32,31), d = 1, g = x^31−1: ω = {}, 𝔖 ≈ {:.4} → {}",
        order.omega(),
        rational_to_f64(ev.s.as_ref().unwrap()),
        if ev.passes { "passes" } else { "fails" }
    );

    // closed form for the m′ | q−1 regime
    println!("\nclosed-form 𝔖 (d = q^m−1, g = 1, m′ linear factors remaining):");
    for (k, a) in [(3u32, 7u64), (3, 1), (4, 5), (5, 31)] {
        let q = 1u64 << k;
        match lemma53_s(k, a)? {
            Some(s) => println!(
                "  q = {q}, a = {a} (m′ = {}): 𝔖 = {}/{} ≈ {:.4}",
                (q - 1) / a,
                s.numer(),
                s.denom(),
                rational_to_f64(&s)
            ),
            None => println!("  q = {q}, a = {a}: invalid (θ ≤ 0 regime)"),
        }
    }

    // the 𝔖 ≤ m′ estimate, with violations flagged rather than hidden
    println!("\n𝔖 vs m′ with g = (degree < u factors):");
    for (q, m) in [(2u64, 5u32), (2, 7), (4, 5)] {
        let r = lemma56_bound(&xm_structure(q.trailing_zeros(), m));
        match (&r.s, r.holds) {
            (Some(s), Some(h)) => println!(
                "  ({q},{m}): 𝔖 = {}/{} ≈ {:.4}, m′ = {} → {}",
                s.numer(),
                s.denom(),
                rational_to_f64(s),
                r.m_prime,
                if h { "holds" } else { "VIOLATED" }
            ),
            _ => println!("  ({q},{m}): θ ≤ 0"),
        }
    }
    Ok(())
}
