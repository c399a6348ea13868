//! Exhaustive counting of α with α e₁/g₁-free and f(α) e₂/g₂-free.
//!
//!     cargo run --release --example count_pairs

use pnpair::freeness::{count_m, FreenessSpec, RationalMap};
use pnpair::gf2::{make_ctx, FieldElement};
use pnpair::xm1::explicit_factors;

fn main() -> pnpair::Result<()> {
    // the published F_4 counter-example: no α is primitive normal with
    // f(α) primitive normal
    let f4 = make_ctx(1, 2, Some(0b111))?;
    let xf = explicit_factors(&f4)?;
    let a = f4.find_primitive();
    let map = RationalMap::new(a, FieldElement::ZERO, FieldElement::ZERO, a, a)?;
    let full = FreenessSpec::full(&f4, &xf)?;
    let r = count_m(&f4, &map, &full.clone(), &full, 1 << 24)?;
    println!(
        "F_4, f = (αx²)/(αx+α), full freeness both sides: count = {}, poles skipped = {}",
        r.count, r.poles_skipped
    );

    // trivial constraints count every non-pole point
    let trivial = FreenessSpec::trivial();
    let r = count_m(&f4, &map, &trivial.clone(), &trivial, 1 << 24)?;
    println!(
        "F_4, same map, no constraints: count = {}, poles skipped = {}",
        r.count, r.poles_skipped
    );

    // f = x² in F_16: squaring preserves primitivity and normality over F_2
    let f16 = make_ctx(1, 4, None)?;
    let xf16 = explicit_factors(&f16)?;
    let square = RationalMap::new(
        FieldElement::ONE,
        FieldElement::ZERO,
        FieldElement::ZERO,
        FieldElement::ZERO,
        FieldElement::ONE,
    )?;
    let full16 = FreenessSpec::full(&f16, &xf16)?;
    let r = count_m(&f16, &square, &full16.clone(), &full16, 1 << 24)?;
    println!(
        "F_16, f = x², full freeness both sides: count = {} (= number of primitive normal elements)",
        r.count
    );
    Ok(())
}
