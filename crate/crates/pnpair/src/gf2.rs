//! Arithmetic in F_{q^m} with q = 2^k, realized as F_2[x]/(p) for a monic
//! irreducible p of degree n = k·m.
//!
//! Elements are coefficient bitvectors packed into a `u128` (bit i = the
//! coefficient of x^i), which caps the extension degree at n ≤ 127. Every
//! operation is a pure function of a shared, immutable [`FieldCtx`].

use crate::error::{Error, Result};
use crate::factorize::{self, IntFactorization};
use crate::gf2x;
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// An element of F_{q^m}: the residue polynomial's coefficient bitvector,
/// ascending degree, bit 0 = constant term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u128);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wrap a raw coefficient bitvector. The caller is responsible for
    /// keeping the degree below n for the intended field; use
    /// [`FieldCtx::element_from_bits`] for a validated construction.
    pub fn from_bits(bits: u128) -> FieldElement {
        FieldElement(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Lowercase hex of the coefficient bitvector, least-significant
    /// coefficient in bit 0.
    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<FieldElement> {
        let s = s.trim().strip_prefix("0x").unwrap_or(s.trim());
        u128::from_str_radix(s, 16)
            .map(FieldElement)
            .map_err(|_| Error::Parse(format!("invalid element hex: {s:?}")))
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// A concrete realization of F_{q^m}, q = 2^k, as F_2[x]/(p).
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    k: u32,
    m: u32,
    n: u32,
    modulus: u128,
    group_order: BigUint,
    group_order_factors: IntFactorization,
    /// (p, (q^m−1)/p) per distinct prime p of the group order.
    prime_cofactors: Vec<(BigUint, BigUint)>,
}

/// Build a field context. With no override the modulus is the
/// lexicographically smallest monic irreducible polynomial of degree k·m
/// (smallest integer value of the coefficient bitvector).
pub fn make_ctx(k: u32, m: u32, modulus_override: Option<u128>) -> Result<FieldCtx> {
    if k == 0 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 1 and m >= 2, got k={k}, m={m}"
        )));
    }
    let n64 = k as u64 * m as u64;
    if n64 > 127 {
        return Err(Error::FieldTooLarge { n: n64 });
    }
    let n = n64 as u32;
    let modulus = match modulus_override {
        Some(p) => {
            if p >> n != 1 {
                return Err(Error::InvalidParameter(format!(
                    "modulus {} is not monic of degree {n}",
                    gf2x::to_string(p)
                )));
            }
            if !gf2x::is_irreducible(p, n) {
                return Err(Error::NonIrreducibleModulus { degree: n });
            }
            p
        }
        None => gf2x::smallest_irreducible(n),
    };
    let group_order_factors = factorize::factor_two_pow_minus_1(n)?;
    let group_order = group_order_factors.value().clone();
    let prime_cofactors = group_order_factors
        .primes()
        .iter()
        .map(|(p, _)| (p.clone(), &group_order / p))
        .collect();
    Ok(FieldCtx {
        k,
        m,
        n,
        modulus,
        group_order,
        group_order_factors,
        prime_cofactors,
    })
}

impl FieldCtx {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// n = k·m, the F_2-degree of the field.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// q = 2^k as a bigint.
    pub fn q(&self) -> BigUint {
        BigUint::one() << self.k
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    pub fn modulus_string(&self) -> String {
        gf2x::to_string(self.modulus)
    }

    /// q^m − 1.
    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    /// q^m − 1 as u128 (always representable since n ≤ 127).
    pub fn group_order_u128(&self) -> u128 {
        if self.n == 127 {
            u128::MAX >> 1
        } else {
            (1u128 << self.n) - 1
        }
    }

    /// Number of elements q^m, when it fits a u128.
    pub fn field_size(&self) -> u128 {
        1u128 << self.n
    }

    pub fn group_order_factors(&self) -> &IntFactorization {
        &self.group_order_factors
    }

    pub fn prime_cofactors(&self) -> &[(BigUint, BigUint)] {
        &self.prime_cofactors
    }

    /// Validate a raw bitvector as an element of this field.
    pub fn element_from_bits(&self, bits: u128) -> Result<FieldElement> {
        if self.n < 128 && bits >> self.n != 0 {
            return Err(Error::InvalidParameter(format!(
                "bit pattern {bits:#x} has degree >= n = {}",
                self.n
            )));
        }
        Ok(FieldElement(bits))
    }

    pub fn add(&self, u: FieldElement, v: FieldElement) -> FieldElement {
        FieldElement(u.0 ^ v.0)
    }

    pub fn mul(&self, u: FieldElement, v: FieldElement) -> FieldElement {
        FieldElement(gf2x::mulmod(u.0, v.0, self.modulus, self.n))
    }

    pub fn sqr(&self, u: FieldElement) -> FieldElement {
        self.mul(u, u)
    }

    /// u^e by square-and-multiply. `u = 0, e = 0` is rejected.
    pub fn pow(&self, u: FieldElement, e: &BigUint) -> Result<FieldElement> {
        if u.is_zero() && e.is_zero() {
            return Err(Error::ZeroToZero);
        }
        if u.is_zero() {
            return Ok(FieldElement::ZERO);
        }
        let mut acc = FieldElement::ONE;
        for i in (0..e.bits()).rev() {
            acc = self.sqr(acc);
            if e.bit(i) {
                acc = self.mul(acc, u);
            }
        }
        Ok(acc)
    }

    /// u^e for machine-word exponents (hot paths).
    pub fn pow_u128(&self, u: FieldElement, e: u128) -> Result<FieldElement> {
        if u.is_zero() && e == 0 {
            return Err(Error::ZeroToZero);
        }
        if u.is_zero() {
            return Ok(FieldElement::ZERO);
        }
        let mut acc = FieldElement::ONE;
        let bits = 128 - e.leading_zeros();
        for i in (0..bits).rev() {
            acc = self.sqr(acc);
            if (e >> i) & 1 == 1 {
                acc = self.mul(acc, u);
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a nonzero element (u^(q^m − 2)).
    pub fn inv(&self, u: FieldElement) -> Result<FieldElement> {
        if u.is_zero() {
            return Err(Error::ZeroElement);
        }
        self.pow_u128(u, self.group_order_u128() - 1)
    }

    /// The q-power Frobenius u ↦ u^q = u^(2^k): square k times.
    pub fn frobenius_q(&self, u: FieldElement) -> FieldElement {
        let mut v = u;
        for _ in 0..self.k {
            v = self.sqr(v);
        }
        v
    }

    /// The m conjugates u, u^q, …, u^(q^(m−1)).
    pub fn conjugates(&self, u: FieldElement) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(self.m as usize);
        out.push(u);
        for _ in 1..self.m {
            let prev = *out.last().unwrap();
            out.push(self.frobenius_q(prev));
        }
        out
    }

    /// True iff the multiplicative order of u is q^m − 1.
    pub fn is_primitive(&self, u: FieldElement) -> bool {
        if u.is_zero() {
            return false;
        }
        self.prime_cofactors
            .iter()
            .all(|(_, cof)| self.pow(u, cof).expect("nonzero base") != FieldElement::ONE)
    }

    /// First primitive element in the deterministic candidate order
    /// x, x+1, x^2, x^2+1, … (ascending bitvector value, skipping 0 and 1).
    pub fn find_primitive(&self) -> FieldElement {
        let mut bits = 2u128;
        loop {
            let cand = FieldElement(bits);
            if self.is_primitive(cand) {
                return cand;
            }
            bits += 1;
            debug_assert!(bits < self.field_size(), "primitive element must exist");
        }
    }
}
