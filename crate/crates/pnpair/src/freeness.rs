//! Multiplicative order, primitivity and e-freeness; the F_q-order Ord(α),
//! normality and g-freeness; evaluation of the rational map
//! f(x) = (ax²+bx+c)/(dx+e); and the exhaustive counter for the number of α
//! with α e₁/g₁-free and f(α) e₂/g₂-free.
//!
//! All freeness tests work on radicals: only the distinct primes of the
//! chosen divisor of q^m−1 and the distinct irreducible factors of the chosen
//! divisor of x^m−1 matter.

use crate::error::{Error, Result};
use crate::gf2::{FieldCtx, FieldElement};
use crate::xm1::{PolyExt, XmFactors};
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

/// The quintuple (a,b,c,d,e) defining f(x) = (ax²+bx+c)/(dx+e).
///
/// Valid quintuples have a ≠ 0 and (d,e) ≠ (0,0), which is exactly the rank-2
/// condition on the 2×3 coefficient matrix given a ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalMap {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
    pub e: FieldElement,
}

impl RationalMap {
    pub fn new(
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
        e: FieldElement,
    ) -> Result<RationalMap> {
        if a.is_zero() {
            return Err(Error::InvalidParameter("quintuple needs a != 0".into()));
        }
        if d.is_zero() && e.is_zero() {
            return Err(Error::InvalidParameter(
                "quintuple needs (d,e) != (0,0)".into(),
            ));
        }
        Ok(RationalMap { a, b, c, d, e })
    }

    /// Is the quintuple valid (a ≠ 0, dx+e ≠ 0)?
    pub fn is_valid_quintuple(
        a: FieldElement,
        _b: FieldElement,
        _c: FieldElement,
        d: FieldElement,
        e: FieldElement,
    ) -> bool {
        !a.is_zero() && !(d.is_zero() && e.is_zero())
    }

    /// f reduces to y·x for some y ≠ 0: c = 0, d ≠ 0 and a·e = b·d.
    pub fn is_yx(&self, ctx: &FieldCtx) -> bool {
        self.c.is_zero() && !self.d.is_zero() && ctx.mul(self.a, self.e) == ctx.mul(self.b, self.d)
    }

    /// f reduces to y·x² for some y ≠ 0: d = 0 and b = c = 0.
    pub fn is_yx2(&self) -> bool {
        self.d.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn as_tuple(
        &self,
    ) -> (
        FieldElement,
        FieldElement,
        FieldElement,
        FieldElement,
        FieldElement,
    ) {
        (self.a, self.b, self.c, self.d, self.e)
    }

    pub fn to_hex(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.a.to_hex(),
            self.b.to_hex(),
            self.c.to_hex(),
            self.d.to_hex(),
            self.e.to_hex()
        )
    }
}

/// Value of the rational map at a point; a pole is a value, not a fault.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapValue {
    Value(FieldElement),
    Pole,
}

/// (a·u² + b·u + c) / (d·u + e), or `Pole` when the denominator vanishes.
pub fn eval_map(ctx: &FieldCtx, f: &RationalMap, u: FieldElement) -> MapValue {
    let den = ctx.add(ctx.mul(f.d, u), f.e);
    if den.is_zero() {
        return MapValue::Pole;
    }
    let u2 = ctx.sqr(u);
    let num = ctx.add(ctx.add(ctx.mul(f.a, u2), ctx.mul(f.b, u)), f.c);
    let inv = ctx.inv(den).expect("nonzero denominator");
    MapValue::Value(ctx.mul(num, inv))
}

/// Exact multiplicative order of a nonzero element, by dividing prime factors
/// out of q^m − 1.
pub fn mult_order(ctx: &FieldCtx, u: FieldElement) -> Result<BigUint> {
    if u.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut order = ctx.group_order().clone();
    for (p, e) in ctx.group_order_factors().primes() {
        for _ in 0..*e {
            let cand = &order / p;
            if ctx.pow(u, &cand)? == FieldElement::ONE {
                order = cand;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// The multiplicative side of a freeness spec: the distinct primes of a
/// divisor e | q^m−1 together with the exponents (q^m−1)/p.
#[derive(Debug, Clone, Default)]
pub struct EDivisor {
    primes: Vec<(BigUint, BigUint)>,
}

impl EDivisor {
    /// e = 1: no constraint.
    pub fn trivial() -> EDivisor {
        EDivisor::default()
    }

    /// e = q^m − 1: full freeness, i.e. primitivity.
    pub fn full(ctx: &FieldCtx) -> EDivisor {
        EDivisor {
            primes: ctx.prime_cofactors().to_vec(),
        }
    }

    /// The radical of an arbitrary divisor d | q^m−1.
    pub fn from_divisor(ctx: &FieldCtx, d: &BigUint) -> Result<EDivisor> {
        if d.is_zero() || !ctx.group_order_factors().divides(d) {
            return Err(Error::InvalidParameter(format!(
                "{d} does not divide q^m-1 = {}",
                ctx.group_order()
            )));
        }
        Ok(EDivisor {
            primes: ctx
                .prime_cofactors()
                .iter()
                .filter(|(p, _)| (d % p).is_zero())
                .cloned()
                .collect(),
        })
    }

    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }
}

/// True iff u is e-free: no prime p of e has u as a p-th power. With
/// e = q^m−1 this is primitivity; e = 1 imposes nothing.
pub fn is_e_free(ctx: &FieldCtx, u: FieldElement, e: &EDivisor) -> bool {
    if e.primes.is_empty() {
        return true;
    }
    if u.is_zero() {
        return false;
    }
    e.primes
        .iter()
        .all(|(_, cof)| ctx.pow(u, cof).expect("nonzero base") != FieldElement::ONE)
}

/// Apply the module action g∘u = Σ g_i·u^(q^i), coefficient index from 0.
pub fn apply_action(ctx: &FieldCtx, g: &PolyExt, u: FieldElement) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    let mut conj = u;
    for (i, c) in g.coeffs().iter().enumerate() {
        if i > 0 {
            conj = ctx.frobenius_q(conj);
        }
        if !c.is_zero() {
            acc = ctx.add(acc, ctx.mul(*c, conj));
        }
    }
    acc
}

/// The additive side of a freeness spec: for each chosen distinct irreducible
/// h | x^m−1, the cofactor (x^m−1)/h whose action decides h-freeness.
#[derive(Debug, Clone, Default)]
pub struct GDivisor {
    cofactors: Vec<PolyExt>,
}

impl GDivisor {
    /// g = 1: no constraint.
    pub fn trivial() -> GDivisor {
        GDivisor::default()
    }

    /// g = x^m − 1: full freeness, i.e. normality.
    pub fn full(ctx: &FieldCtx, xf: &XmFactors) -> Result<GDivisor> {
        GDivisor::from_indices(ctx, xf, &(0..xf.factors.len()).collect::<Vec<_>>())
    }

    /// g = the product of the selected distinct irreducible factors.
    pub fn from_indices(ctx: &FieldCtx, xf: &XmFactors, indices: &[usize]) -> Result<GDivisor> {
        let mut cofactors = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= xf.factors.len() {
                return Err(Error::InvalidParameter(format!(
                    "factor index {i} out of range"
                )));
            }
            cofactors.push(xf.cofactor_of(ctx, i)?);
        }
        Ok(GDivisor { cofactors })
    }

    pub fn factor_count(&self) -> usize {
        self.cofactors.len()
    }
}

/// True iff u is g-free: ((x^m−1)/h)∘u ≠ 0 for every distinct irreducible
/// h | g. Depends only on Ord(u).
pub fn is_g_free(ctx: &FieldCtx, u: FieldElement, g: &GDivisor) -> bool {
    g.cofactors
        .iter()
        .all(|cof| !apply_action(ctx, cof, u).is_zero())
}

/// Ord(u): the minimal-degree monic divisor g of x^m−1 with g∘u = 0, found by
/// descending the divisor lattice. Ord(0) = 1 by the minimal-annihilator
/// convention.
pub fn fq_order(ctx: &FieldCtx, xf: &XmFactors, u: FieldElement) -> Result<PolyExt> {
    let mut t = xf.product(ctx);
    debug_assert!(apply_action(ctx, &t, u).is_zero());
    for h in &xf.factors {
        loop {
            let (q, r) = t.divrem(ctx, h)?;
            if !r.is_zero() {
                break;
            }
            if !apply_action(ctx, &q, u).is_zero() {
                break;
            }
            t = q;
        }
    }
    Ok(t)
}

/// Normality test: gcd(x^m−1, Σ_{i=0}^{m−1} u^(q^i)·x^(m−1−i)) = 1 in
/// F_{q^m}[x]; equivalently Ord(u) = x^m−1.
pub fn is_normal(ctx: &FieldCtx, u: FieldElement) -> bool {
    let m = ctx.m() as usize;
    let conj = ctx.conjugates(u);
    // coefficient of x^(m−1−i) is u^(q^i)
    let mut coeffs = vec![FieldElement::ZERO; m];
    for (i, c) in conj.iter().enumerate() {
        coeffs[m - 1 - i] = *c;
    }
    let s = PolyExt::from_coeffs(coeffs);
    if s.is_zero() {
        return false;
    }
    let xm1 = PolyExt::x_pow_minus_one(ctx.m());
    crate::xm1::poly_gcd(ctx, &xm1, &s)
        .map(|g| g.is_one())
        .unwrap_or(false)
}

/// A pair of freeness requirements (e | q^m−1, g | x^m−1), kept as radicals.
#[derive(Debug, Clone, Default)]
pub struct FreenessSpec {
    pub e: EDivisor,
    pub g: GDivisor,
}

impl FreenessSpec {
    pub fn trivial() -> FreenessSpec {
        FreenessSpec::default()
    }

    /// e = q^m−1 and g = x^m−1: primitive and normal.
    pub fn full(ctx: &FieldCtx, xf: &XmFactors) -> Result<FreenessSpec> {
        Ok(FreenessSpec {
            e: EDivisor::full(ctx),
            g: GDivisor::full(ctx, xf)?,
        })
    }

    pub fn satisfied_by(&self, ctx: &FieldCtx, u: FieldElement) -> bool {
        is_e_free(ctx, u, &self.e) && is_g_free(ctx, u, &self.g)
    }
}

/// Result of the exhaustive count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CountM {
    pub count: u64,
    pub poles_skipped: u64,
}

/// Count the α ∈ F_{q^m} with α satisfying `spec1` and f(α) satisfying
/// `spec2`, by exhausting the field. Poles of f are skipped (and tallied),
/// never counted.
pub fn count_m(
    ctx: &FieldCtx,
    f: &RationalMap,
    spec1: &FreenessSpec,
    spec2: &FreenessSpec,
    cap: u128,
) -> Result<CountM> {
    let size = ctx.field_size();
    if size > cap {
        return Err(Error::FieldTooLarge { n: ctx.n() as u64 });
    }
    let chunk = 1u128 << 12;
    let chunks: Vec<u128> = (0..size.div_ceil(chunk)).collect();
    let (count, poles) = chunks
        .par_iter()
        .map(|&ci| {
            let lo = ci * chunk;
            let hi = (lo + chunk).min(size);
            let mut count = 0u64;
            let mut poles = 0u64;
            for bits in lo..hi {
                let alpha = FieldElement(bits);
                match eval_map(ctx, f, alpha) {
                    MapValue::Pole => poles += 1,
                    MapValue::Value(img) => {
                        if spec1.satisfied_by(ctx, alpha) && spec2.satisfied_by(ctx, img) {
                            count += 1;
                        }
                    }
                }
            }
            (count, poles)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(CountM {
        count,
        poles_skipped: poles,
    })
}
