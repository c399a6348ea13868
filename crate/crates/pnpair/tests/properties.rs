//! Property tests for the algebraic invariants and the serialization
//! round-trips.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use pnpair::factorize::{factor, IntFactorization};
use pnpair::freeness::{fq_order, is_g_free, GDivisor};
use pnpair::gf2::{make_ctx, FieldCtx, FieldElement};
use pnpair::xm1::{explicit_factors, PolyExt};
use proptest::prelude::*;

fn small_field() -> impl Strategy<Value = FieldCtx> {
    prop_oneof![
        Just((1u32, 6u32)),
        Just((1, 8)),
        Just((2, 3)),
        Just((2, 4)),
        Just((3, 2)),
        Just((4, 2)),
    ]
    .prop_map(|(k, m)| make_ctx(k, m, None).unwrap())
}

proptest! {
    #[test]
    fn pow_splits_over_exponent_sums(
        ctx in small_field(),
        bits in 1u128..256,
        a in 0u128..100_000,
        b in 0u128..100_000,
    ) {
        let u = FieldElement::from_bits(bits % (ctx.field_size() - 1) + 1);
        let lhs = ctx.mul(
            ctx.pow_u128(u, a).unwrap(),
            ctx.pow_u128(u, b).unwrap(),
        );
        let rhs = ctx.pow_u128(u, a + b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_commutes_and_distributes(
        ctx in small_field(),
        a in 0u128..u128::MAX,
        b in 0u128..u128::MAX,
        c in 0u128..u128::MAX,
    ) {
        let size = ctx.field_size();
        let (a, b, c) = (
            FieldElement::from_bits(a % size),
            FieldElement::from_bits(b % size),
            FieldElement::from_bits(c % size),
        );
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(
            ctx.mul(a, ctx.add(b, c)),
            ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        );
    }

    #[test]
    fn element_hex_round_trip(bits in 0u128..u128::MAX) {
        let e = FieldElement::from_bits(bits);
        prop_assert_eq!(FieldElement::from_hex(&e.to_hex()).unwrap(), e);
    }

    #[test]
    fn factorization_multiplies_back_and_phi_divides(n in 2u64..u64::MAX) {
        let n = BigUint::from(n);
        let f = factor(&n).unwrap();
        let mut prod = BigUint::one();
        for (p, e) in f.primes() {
            prod *= p.pow(*e);
        }
        prop_assert_eq!(&prod, &n);
        // φ(n) < n and gcd record round-trips
        prop_assert!(f.euler_phi() < n);
        let rec = f.to_record();
        prop_assert_eq!(IntFactorization::from_record(&rec).unwrap(), f);
    }

    #[test]
    fn w_is_multiplicative(a in 2u64..200_000, b in 2u64..200_000) {
        let (a, b) = (BigUint::from(a), BigUint::from(b));
        prop_assume!(a.gcd(&b).is_one());
        let wa = factor(&a).unwrap().w_value();
        let wb = factor(&b).unwrap().w_value();
        let wab = factor(&(&a * &b)).unwrap().w_value();
        prop_assert_eq!(wab, wa * wb);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fq_order_divides_and_decides_g_freeness(
        ctx in prop_oneof![Just((1u32, 6u32)), Just((2, 3)), Just((1, 4))]
            .prop_map(|(k, m)| make_ctx(k, m, None).unwrap()),
        bits in 0u128..64,
    ) {
        let u = FieldElement::from_bits(bits % ctx.field_size());
        let xf = explicit_factors(&ctx).unwrap();
        let ord = fq_order(&ctx, &xf, u).unwrap();
        // Ord(u) divides x^m−1
        let xm1 = PolyExt::x_pow_minus_one(ctx.m());
        prop_assert!(xm1.rem(&ctx, &ord).unwrap().is_zero());
        // h-freeness depends only on Ord(u): u is h-free iff h does not
        // divide (x^m−1)/Ord(u)
        let (cof, r) = xm1.divrem(&ctx, &ord).unwrap();
        prop_assert!(r.is_zero());
        for i in 0..xf.factors.len() {
            let g = GDivisor::from_indices(&ctx, &xf, &[i]).unwrap();
            let free = is_g_free(&ctx, u, &g);
            let h_divides_cof = cof.rem(&ctx, &xf.factors[i]).unwrap().is_zero();
            prop_assert_eq!(free, !h_divides_cof);
        }
    }
}
