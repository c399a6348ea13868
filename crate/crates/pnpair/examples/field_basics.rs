//! Build fields of even characteristic, do arithmetic, find primitive
//! elements, and round-trip the hex element encoding.
//!
//!     cargo run --example field_basics

use pnpair::freeness::mult_order;
use pnpair::gf2::{make_ctx, FieldElement};

fn main() -> pnpair::Result<()> {
    // F_4 with the published modulus
    let f4 = make_ctx(1, 2, Some(pnpair::gf2x::parse("x^2+x+1").unwrap()))?;
    let alpha = f4.find_primitive();
    println!("F_4 = F_2[x]/({})", f4.modulus_string());
    println!("  primitive element: {} (hex)", alpha.to_hex());
    println!("  α·α = {}", f4.mul(alpha, alpha).to_hex());
    println!("  α + 1 = {}", f4.add(alpha, FieldElement::ONE).to_hex());
    println!("  ord(α) = {}", mult_order(&f4, alpha)?);

    // F_64 as a degree-3 extension of F_4: same bit representation, the
    // subfield view only changes the Frobenius
    let f64_over_f4 = make_ctx(2, 3, Some(pnpair::gf2x::parse("x^6+x^4+x^3+x+1").unwrap()))?;
    let a = f64_over_f4.find_primitive();
    println!(
        "\nF_(4^3) = F_2[x]/({}), q = 4",
        f64_over_f4.modulus_string()
    );
    println!(
        "  group order {} = {:?}",
        f64_over_f4.group_order(),
        f64_over_f4
            .group_order_factors()
            .primes()
            .iter()
            .map(|(p, e)| format!("{p}^{e}"))
            .collect::<Vec<_>>()
    );
    println!("  α = {}", a.to_hex());
    println!(
        "  α^q (q-Frobenius) = {}",
        f64_over_f4.frobenius_q(a).to_hex()
    );
    println!(
        "  conjugates: {:?}",
        f64_over_f4
            .conjugates(a)
            .iter()
            .map(|c| c.to_hex())
            .collect::<Vec<_>>()
    );

    // default modulus: lexicographically smallest irreducible
    for (k, m) in [(1, 5), (1, 8), (3, 2)] {
        let ctx = make_ctx(k, m, None)?;
        println!(
            "\ndefault modulus for n = {}: {}",
            ctx.n(),
            ctx.modulus_string()
        );
    }

    // hex round trip
    let e = FieldElement::from_hex("c")?;
    println!("\nhex \"c\" = coefficient bits {:04b} (α³+α²)", e.bits());
    Ok(())
}
