//! Orders, normality, e-/g-freeness, and the rational map
//! f(x) = (ax²+bx+c)/(dx+e) evaluated at field points.
//!
//!     cargo run --example freeness_predicates

use pnpair::freeness::{
    eval_map, fq_order, is_e_free, is_g_free, is_normal, mult_order, EDivisor, GDivisor, MapValue,
    RationalMap,
};
use pnpair::gf2::{make_ctx, FieldElement};
use pnpair::xm1::explicit_factors;

fn main() -> pnpair::Result<()> {
    let ctx = make_ctx(1, 4, Some(pnpair::gf2x::parse("x^4+x+1").unwrap()))?;
    let xf = explicit_factors(&ctx)?;
    let alpha = ctx.find_primitive();
    let full_e = EDivisor::full(&ctx);
    let full_g = GDivisor::full(&ctx, &xf)?;

    println!(
        "F_16 = F_2[x]/({}), α = {}",
        ctx.modulus_string(),
        alpha.to_hex()
    );
    for bits in 0..16u128 {
        let u = FieldElement::from_bits(bits);
        let ord = if u.is_zero() {
            "—".to_string()
        } else {
            mult_order(&ctx, u)?.to_string()
        };
        println!(
            "  u = {:>2}  ord = {:>2}  Ord = {:<12}  primitive = {:<5}  normal = {:<5}  e-free(15) = {:<5}  g-free(x^4−1) = {}",
            u.to_hex(),
            ord,
            fq_order(&ctx, &xf, u)?.to_string(),
            ctx.is_primitive(u),
            is_normal(&ctx, u),
            is_e_free(&ctx, u, &full_e),
            is_g_free(&ctx, u, &full_g),
        );
    }

    // the published F_4 counter-example quintuple (α, 0, 0, α, α)
    let f4 = make_ctx(1, 2, Some(0b111))?;
    let a = f4.find_primitive();
    let map = RationalMap::new(a, FieldElement::ZERO, FieldElement::ZERO, a, a)?;
    println!("\nf(x) = (αx²)/(αx+α) over F_4:");
    for bits in 0..4u128 {
        let u = FieldElement::from_bits(bits);
        match eval_map(&f4, &map, u) {
            MapValue::Pole => println!("  f({}) = pole", u.to_hex()),
            MapValue::Value(v) => println!("  f({}) = {}", u.to_hex(), v.to_hex()),
        }
    }
    Ok(())
}
