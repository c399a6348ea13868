//! Structure of x^m − 1 over F_q: the radical split m = 2^a·m′, distinct
//! irreducible factor degrees via q-cyclotomic cosets mod m′, Ω(x^m−1), the
//! exact rational σ(q,m), and polynomial arithmetic over F_{q^m} for the
//! normality machinery.
//!
//! Factor degrees come from a pure integer orbit computation; explicit factor
//! polynomials are computed only on demand by equal-degree splitting inside
//! F_{q^m}, where F_q lives as the Frobenius-fixed subfield.

use crate::error::{Error, Result};
use crate::gf2::{FieldCtx, FieldElement};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

/// Distinct-irreducible-factor structure of x^m − 1 over F_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmStructure {
    k: u32,
    m: u32,
    /// m = 2^a · m′ with m′ odd.
    a: u32,
    m_prime: u32,
    /// Degrees of the distinct monic irreducible factors of x^m′ − 1 over
    /// F_q, ascending. Their sum is m′.
    factor_degrees: Vec<u32>,
    /// Multiplicative order of q mod m′ (1 when m′ = 1).
    u: u32,
}

/// Compute the structure from the q-cyclotomic cosets of Z/m′Z.
pub fn xm_structure(k: u32, m: u32) -> XmStructure {
    assert!(k >= 1 && m >= 1);
    let mut m_prime = m;
    let mut a = 0;
    while m_prime % 2 == 0 {
        m_prime /= 2;
        a += 1;
    }
    let q_mod = |x: u64| -> u64 {
        // 2^k mod m′ without overflow
        let mut r = 1u64;
        for _ in 0..k {
            r = (r * 2) % m_prime as u64;
        }
        (x * r) % m_prime as u64
    };
    let mut degrees = Vec::new();
    let mut seen = vec![false; m_prime as usize];
    for start in 0..m_prime as u64 {
        if seen[start as usize] {
            continue;
        }
        let mut size = 0u32;
        let mut c = start;
        loop {
            if seen[c as usize] {
                break;
            }
            seen[c as usize] = true;
            size += 1;
            c = q_mod(c);
        }
        degrees.push(size);
    }
    degrees.sort_unstable();
    // ord(q mod m′): the largest coset size (and 1 when m′ = 1)
    let u = if m_prime == 1 {
        1
    } else {
        let mut ord = 1u32;
        let mut cur = q_mod(1);
        while cur != 1 {
            cur = q_mod(cur);
            ord += 1;
        }
        ord
    };
    XmStructure {
        k,
        m,
        a,
        m_prime,
        factor_degrees: degrees,
        u,
    }
}

impl XmStructure {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn m_prime(&self) -> u32 {
        self.m_prime
    }

    pub fn factor_degrees(&self) -> &[u32] {
        &self.factor_degrees
    }

    /// Common multiplicity 2^a of every distinct factor inside x^m − 1.
    pub fn multiplicity(&self) -> u32 {
        1 << self.a
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn distinct_factor_count(&self) -> u32 {
        self.factor_degrees.len() as u32
    }

    /// Ω(x^m − 1) = 2^(number of distinct irreducible factors).
    pub fn omega_xm(&self) -> BigUint {
        BigUint::one() << self.factor_degrees.len()
    }

    /// σ(q,m) = M/m where M counts distinct factors of degree strictly
    /// below u. Exact rational.
    pub fn sigma(&self) -> BigRational {
        let m_count = self.factor_degrees.iter().filter(|&&d| d < self.u).count();
        BigRational::new(BigInt::from(m_count), BigInt::from(self.m))
    }
}

// ---- polynomials over F_{q^m} ----

/// Polynomial over F_{q^m}, coefficients ascending; always trimmed so the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyExt {
    coeffs: Vec<FieldElement>,
}

impl PolyExt {
    pub fn zero() -> PolyExt {
        PolyExt { coeffs: Vec::new() }
    }

    pub fn one() -> PolyExt {
        PolyExt {
            coeffs: vec![FieldElement::ONE],
        }
    }

    pub fn x() -> PolyExt {
        PolyExt {
            coeffs: vec![FieldElement::ZERO, FieldElement::ONE],
        }
    }

    /// x^m − 1 (= x^m + 1 in characteristic 2).
    pub fn x_pow_minus_one(m: u32) -> PolyExt {
        let mut coeffs = vec![FieldElement::ZERO; m as usize + 1];
        coeffs[0] = FieldElement::ONE;
        coeffs[m as usize] = FieldElement::ONE;
        PolyExt { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> PolyExt {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyExt { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, other: &PolyExt) -> PolyExt {
        let mut coeffs = vec![FieldElement::ZERO; self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] = *c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] = FieldElement(coeffs[i].bits() ^ c.bits());
        }
        PolyExt::from_coeffs(coeffs)
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &PolyExt) -> PolyExt {
        if self.is_zero() || other.is_zero() {
            return PolyExt::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = ctx.mul(*a, *b);
                coeffs[i + j] = ctx.add(coeffs[i + j], prod);
            }
        }
        PolyExt::from_coeffs(coeffs)
    }

    pub fn scale(&self, ctx: &FieldCtx, s: FieldElement) -> PolyExt {
        PolyExt::from_coeffs(self.coeffs.iter().map(|c| ctx.mul(*c, s)).collect())
    }

    pub fn make_monic(&self, ctx: &FieldCtx) -> Result<PolyExt> {
        let lead = self.leading().ok_or(Error::ZeroElement)?;
        if lead == FieldElement::ONE {
            return Ok(self.clone());
        }
        Ok(self.scale(ctx, ctx.inv(lead)?))
    }

    /// Long division: self = q·div + r with deg r < deg div.
    pub fn divrem(&self, ctx: &FieldCtx, div: &PolyExt) -> Result<(PolyExt, PolyExt)> {
        let dd = div.degree().ok_or(Error::ZeroElement)?;
        let lead_inv = ctx.inv(div.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((PolyExt::zero(), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let f = ctx.mul(c, lead_inv);
            quot[i - dd] = f;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let sub = ctx.mul(f, *dc);
                rem[i - dd + j] = ctx.add(rem[i - dd + j], sub);
            }
        }
        Ok((PolyExt::from_coeffs(quot), PolyExt::from_coeffs(rem)))
    }

    pub fn rem(&self, ctx: &FieldCtx, div: &PolyExt) -> Result<PolyExt> {
        Ok(self.divrem(ctx, div)?.1)
    }

    /// f² mod modulus. Squaring is coefficient-wise in characteristic 2:
    /// (Σ cᵢxⁱ)² = Σ cᵢ²x^(2i).
    pub fn sqr_mod(&self, ctx: &FieldCtx, modulus: &PolyExt) -> Result<PolyExt> {
        if self.is_zero() {
            return Ok(PolyExt::zero());
        }
        let mut coeffs = vec![FieldElement::ZERO; 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = ctx.sqr(*c);
        }
        PolyExt::from_coeffs(coeffs).rem(ctx, modulus)
    }

    /// Render like `x^2+(3)x+(1)` with hex element coefficients; plain
    /// monomial list when all coefficients are 0/1.
    pub fn to_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let binary = self.coeffs.iter().all(|c| c.bits() <= 1);
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let t = if binary {
                if var.is_empty() {
                    "1".into()
                } else {
                    var
                }
            } else if *c == FieldElement::ONE && !var.is_empty() {
                var
            } else if var.is_empty() {
                format!("({})", c.to_hex())
            } else {
                format!("({}){}", c.to_hex(), var)
            };
            terms.push(t);
        }
        terms.join("+")
    }
}

/// Monic polynomial gcd over F_{q^m} via the Euclidean algorithm.
/// `gcd(f, 0)` is the monic scalar multiple of `f`.
pub fn poly_gcd(ctx: &FieldCtx, f: &PolyExt, g: &PolyExt) -> Result<PolyExt> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::InvalidParameter("gcd(0, 0) is undefined".into()));
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(ctx, &b)?;
        a = b;
        b = r;
    }
    a.make_monic(ctx)
}

// ---- explicit factors of x^m′ − 1 over F_q ----

/// The distinct monic irreducible F_q-factors of x^m − 1, realized inside
/// F_{q^m}, together with their common multiplicity 2^a.
#[derive(Debug, Clone)]
pub struct XmFactors {
    pub structure: XmStructure,
    /// Distinct monic irreducible factors of x^m′ − 1, sorted by
    /// (degree, coefficient bits).
    pub factors: Vec<PolyExt>,
}

/// Iterator source for the elements of the subfield F_q inside F_{q^m}:
/// 0, 1, γ, γ², … for γ a generator of F_q*.
struct SubfieldElems {
    elems: Vec<FieldElement>,
}

impl SubfieldElems {
    fn new(ctx: &FieldCtx) -> SubfieldElems {
        let q_minus_1: u128 = (1u128 << ctx.k()) - 1;
        let mut elems = vec![FieldElement::ZERO, FieldElement::ONE];
        if q_minus_1 > 1 {
            let alpha = ctx.find_primitive();
            let exp = ctx.group_order_u128() / q_minus_1;
            let gamma = ctx.pow_u128(alpha, exp).expect("nonzero");
            let mut cur = gamma;
            while cur != FieldElement::ONE {
                elems.push(cur);
                cur = ctx.mul(cur, gamma);
            }
        }
        SubfieldElems { elems }
    }

    fn get(&self, i: usize) -> Option<FieldElement> {
        self.elems.get(i).copied()
    }

    /// γ^a (with γ^0 = 1); γ is elems[2] when the subfield is bigger than F_2.
    fn gamma_pow(&self, ctx: &FieldCtx, a: usize) -> FieldElement {
        if a == 0 || self.elems.len() == 2 {
            return FieldElement::ONE;
        }
        let gamma = self.elems[2];
        let mut acc = FieldElement::ONE;
        for _ in 0..a {
            acc = ctx.mul(acc, gamma);
        }
        acc
    }

    fn count(&self) -> usize {
        self.elems.len()
    }
}

/// Candidate polynomials for the trace splitting, in a deterministic order.
///
/// Monomials γ^a·x^e come first: for any two distinct components some
/// monomial with a < k and e < 2·deg separates their traces (the products
/// γ^a·β^e span each component over F_2, and the two-factor CRT makes the
/// trace functionals independent once e can reach 2·deg−1). Conjugate factor
/// pairs h, h^σ need the large exponents, which a plain low-degree-first
/// enumeration takes exponentially long to reach. The generic digit
/// enumeration over all subfield-coefficient polynomials follows as a
/// fallback.
fn edf_candidates<'a>(
    ctx: &'a FieldCtx,
    sub: &'a SubfieldElems,
    part_degree: u32,
) -> impl Iterator<Item = PolyExt> + 'a {
    let k = ctx.k() as usize;
    let monomials = (1..2 * part_degree as usize).flat_map(move |e| {
        (0..k).map(move |a| {
            let mut coeffs = vec![FieldElement::ZERO; e + 1];
            coeffs[e] = sub.gamma_pow(ctx, a);
            PolyExt::from_coeffs(coeffs)
        })
    });
    let count = sub.count() as u64;
    let generic = (count..).map(move |t| {
        let mut digits = Vec::new();
        let mut v = t;
        while v > 0 {
            digits.push((v % count) as usize);
            v /= count;
        }
        PolyExt::from_coeffs(
            digits
                .iter()
                .map(|&i| sub.get(i).expect("digit in range"))
                .collect(),
        )
    });
    monomials.chain(generic)
}

/// Deterministic equal-degree splitting of a product of distinct
/// irreducibles of common degree `deg`, over F_q (char-2 trace splitting).
fn edf(
    ctx: &FieldCtx,
    sub: &SubfieldElems,
    part: &PolyExt,
    deg: u32,
    out: &mut Vec<PolyExt>,
) -> Result<()> {
    let d = part.degree().unwrap() as u32;
    if d == deg {
        out.push(part.clone());
        return Ok(());
    }
    let trace_len = ctx.k() as u64 * deg as u64;
    for w in edf_candidates(ctx, sub, d) {
        let w = w.rem(ctx, part)?;
        if w.degree().map_or(true, |dw| dw == 0) {
            continue;
        }
        // T = w + w² + w⁴ + … (trace to F_2), taken mod part; the gcd
        // collects the components whose trace lands on 0
        let mut cur = w.clone();
        let mut tr = w.clone();
        for _ in 1..trace_len {
            cur = cur.sqr_mod(ctx, part)?;
            tr = tr.add(&cur);
        }
        if tr.is_zero() || tr.degree() == Some(0) {
            continue;
        }
        let g = poly_gcd(ctx, &tr, part)?;
        let gd = g.degree().unwrap() as u32;
        if gd == 0 || gd == d {
            continue;
        }
        let (q, r) = part.divrem(ctx, &g)?;
        debug_assert!(r.is_zero());
        edf(ctx, sub, &g, deg, out)?;
        edf(ctx, sub, &q.make_monic(ctx)?, deg, out)?;
        return Ok(());
    }
    unreachable!("the candidate stream contains a separator for every factor pair")
}

/// Compute the distinct monic irreducible factors of x^m′ − 1 over F_q by
/// distinct-degree splitting (gcd with x^(q^j) − x) followed by equal-degree
/// splitting, all inside F_{q^m}. Verifies divisibility and that the degrees
/// agree with the coset computation.
pub fn explicit_factors(ctx: &FieldCtx) -> Result<XmFactors> {
    let structure = xm_structure(ctx.k(), ctx.m());
    let sub = SubfieldElems::new(ctx);
    let target = PolyExt::x_pow_minus_one(structure.m_prime());
    let mut factors: Vec<PolyExt> = Vec::new();
    let mut remaining = target.clone();
    let x = PolyExt::x();
    let mut h = x.clone(); // x^(q^j) mod remaining
    let mut j = 0u32;
    while remaining.degree().unwrap_or(0) > 0 {
        j += 1;
        // q-power: k squarings
        for _ in 0..ctx.k() {
            h = h.sqr_mod(ctx, &remaining)?;
        }
        let g = poly_gcd(ctx, &h.add(&x), &remaining)?;
        if g.degree() == Some(0) {
            continue;
        }
        // g is the product of all irreducible factors of degree exactly j
        let count = g.degree().unwrap() as u32 / j;
        let mut split = Vec::new();
        if count == 1 {
            split.push(g.clone());
        } else {
            edf(ctx, &sub, &g, j, &mut split)?;
        }
        factors.extend(split);
        let (q, r) = remaining.divrem(ctx, &g)?;
        debug_assert!(r.is_zero());
        remaining = q.make_monic(ctx)?;
        h = h.rem(ctx, &remaining)?;
        if j > structure.u() {
            return Err(Error::InvalidParameter(
                "distinct-degree splitting ran past the coset bound".into(),
            ));
        }
    }
    factors.sort_by(|a, b| {
        (
            a.degree(),
            a.coeffs()
                .iter()
                .rev()
                .map(|c| c.bits())
                .collect::<Vec<_>>(),
        )
            .cmp(&(
                b.degree(),
                b.coeffs()
                    .iter()
                    .rev()
                    .map(|c| c.bits())
                    .collect::<Vec<_>>(),
            ))
    });
    // cross-check against the coset degrees and divisibility
    let mut degs: Vec<u32> = factors.iter().map(|f| f.degree().unwrap() as u32).collect();
    degs.sort_unstable();
    if degs != structure.factor_degrees {
        return Err(Error::InvalidParameter(format!(
            "factor degrees {degs:?} disagree with coset degrees {:?}",
            structure.factor_degrees
        )));
    }
    for f in &factors {
        if !target.rem(ctx, f)?.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "computed factor {} does not divide x^{}−1",
                f.to_string(),
                structure.m_prime()
            )));
        }
    }
    Ok(XmFactors { structure, factors })
}

impl XmFactors {
    /// (x^m − 1) / h for a distinct irreducible factor h: the cofactor used
    /// by the g-free test. x^m − 1 = (x^m′ − 1)^(2^a).
    pub fn cofactor_of(&self, ctx: &FieldCtx, factor_index: usize) -> Result<PolyExt> {
        let mut prod = PolyExt::one();
        let mult = self.structure.multiplicity();
        for (i, f) in self.factors.iter().enumerate() {
            let e = if i == factor_index { mult - 1 } else { mult };
            for _ in 0..e {
                prod = prod.mul(ctx, f);
            }
        }
        Ok(prod)
    }

    /// Rebuild x^m − 1 as the product of the distinct factors raised to the
    /// common multiplicity.
    pub fn product(&self, ctx: &FieldCtx) -> PolyExt {
        let mut prod = PolyExt::one();
        for f in &self.factors {
            for _ in 0..self.structure.multiplicity() {
                prod = prod.mul(ctx, f);
            }
        }
        prod
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::make_ctx;

    #[test]
    fn structure_f2_m3() {
        let s = xm_structure(1, 3);
        assert_eq!(s.m_prime(), 3);
        assert_eq!(s.a(), 0);
        assert_eq!(s.factor_degrees(), &[1, 2]);
        assert_eq!(s.omega_xm(), BigUint::from(4u32));
        assert_eq!(s.u(), 2);
    }

    #[test]
    fn structure_f2_m17() {
        let s = xm_structure(1, 17);
        assert_eq!(s.factor_degrees(), &[1, 8, 8]);
        assert_eq!(s.u(), 8);
    }

    #[test]
    fn structure_f8_m3() {
        // 3 does not divide q−1 = 7: cosets of 8 ≡ 2 mod 3
        let s = xm_structure(3, 3);
        assert_eq!(s.factor_degrees(), &[1, 2]);
    }

    #[test]
    fn structure_even_m() {
        let s = xm_structure(1, 4);
        assert_eq!(s.m_prime(), 1);
        assert_eq!(s.a(), 2);
        assert_eq!(s.factor_degrees(), &[1]);
        assert_eq!(s.multiplicity(), 4);
        assert_eq!(s.omega_xm(), BigUint::from(2u32));
    }

    #[test]
    fn omega_f16_m15() {
        // x^15 − 1 splits into 15 distinct linears over F_16
        let s = xm_structure(4, 15);
        assert_eq!(s.distinct_factor_count(), 15);
        assert_eq!(s.omega_xm(), BigUint::from(1u32 << 15));
    }

    #[test]
    fn sigma_reference_values() {
        let cases: [(u32, u32, u32, u32); 8] = [
            (1, 3, 1, 3),
            (1, 5, 1, 5),
            (1, 9, 2, 9),
            (1, 21, 4, 21),
            (2, 9, 1, 3),
            (2, 45, 11, 45),
            (3, 3, 1, 3),
            (3, 21, 1, 3),
        ];
        for (k, m, num, den) in cases {
            let s = xm_structure(k, m);
            let expect = BigRational::new(BigInt::from(num), BigInt::from(den));
            assert_eq!(s.sigma(), expect, "sigma(2^{k},{m})");
        }
    }

    #[test]
    fn degree_sum_and_linear_count_invariants() {
        for k in 1..=5u32 {
            for m in 1..=64u32 {
                let s = xm_structure(k, m);
                let sum: u32 = s.factor_degrees().iter().sum();
                assert_eq!(sum, s.m_prime(), "({k},{m})");
                // number of degree-1 factors equals gcd(m′, q−1)
                let q_minus_1 = (1u64 << k) - 1;
                let g = num_integer::gcd(s.m_prime() as u64, q_minus_1);
                let linears = s.factor_degrees().iter().filter(|&&d| d == 1).count() as u64;
                assert_eq!(linears, g, "({k},{m})");
                // every degree divides u; u is the max degree when m′ > 1
                for &d in s.factor_degrees() {
                    assert_eq!(s.u() % d, 0);
                }
                if s.m_prime() > 1 {
                    assert_eq!(s.u(), *s.factor_degrees().iter().max().unwrap());
                }
                // σ·m is an integer (M), and radical invariance of Ω
                let sm = s.sigma() * BigRational::from(BigInt::from(m));
                assert!(sm.is_integer());
                if s.m_prime() > 1 {
                    let s_rad = xm_structure(k, s.m_prime());
                    assert_eq!(s.omega_xm(), s_rad.omega_xm());
                    assert_eq!(
                        sm,
                        s_rad.sigma() * BigRational::from(BigInt::from(s.m_prime()))
                    );
                }
            }
        }
    }

    #[test]
    fn explicit_factors_f2_small() {
        let ctx = make_ctx(1, 3, None).unwrap();
        let xf = explicit_factors(&ctx).unwrap();
        let strs: Vec<String> = xf.factors.iter().map(|f| f.to_string()).collect();
        assert_eq!(strs, vec!["x+1", "x^2+x+1"]);
    }

    #[test]
    fn explicit_factors_f2_m5() {
        let ctx = make_ctx(1, 5, None).unwrap();
        let xf = explicit_factors(&ctx).unwrap();
        let strs: Vec<String> = xf.factors.iter().map(|f| f.to_string()).collect();
        assert_eq!(strs, vec!["x+1", "x^4+x^3+x^2+x+1"]);
    }

    #[test]
    fn explicit_factors_f2_m9_degrees() {
        let ctx = make_ctx(1, 9, None).unwrap();
        let xf = explicit_factors(&ctx).unwrap();
        let degs: Vec<usize> = xf.factors.iter().map(|f| f.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 2, 6]);
    }

    #[test]
    fn explicit_factors_reconstruct_xm_minus_one() {
        for (k, m) in [
            (1u32, 2u32),
            (1, 3),
            (1, 4),
            (1, 6),
            (1, 9),
            (1, 12),
            (2, 2),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 2),
            (3, 3),
            (4, 3),
            (4, 5),
        ] {
            let ctx = make_ctx(k, m, None).unwrap();
            let xf = explicit_factors(&ctx).unwrap();
            assert_eq!(xf.product(&ctx), PolyExt::x_pow_minus_one(m), "({k},{m})");
        }
    }

    #[test]
    fn linear_split_when_m_prime_divides_q_minus_1() {
        // q = 4, m′ = 3 | 3: three distinct linear factors
        let ctx = make_ctx(2, 3, None).unwrap();
        let xf = explicit_factors(&ctx).unwrap();
        assert_eq!(xf.factors.len(), 3);
        assert!(xf.factors.iter().all(|f| f.degree() == Some(1)));
    }

    #[test]
    fn gcd_examples() {
        let ctx = make_ctx(1, 2, Some(0b111)).unwrap();
        // gcd(f, 0) is the monic scaling of f
        let f = PolyExt::from_coeffs(vec![FieldElement::ONE, FieldElement(0b10)]);
        let g = poly_gcd(&ctx, &f, &PolyExt::zero()).unwrap();
        assert_eq!(g.leading(), Some(FieldElement::ONE));
        assert_eq!(g.degree(), Some(1));
        // gcd(x^2+1, x+1) = x+1 since x^2+1 = (x+1)^2
        let a = PolyExt::from_coeffs(vec![
            FieldElement::ONE,
            FieldElement::ZERO,
            FieldElement::ONE,
        ]);
        let b = PolyExt::from_coeffs(vec![FieldElement::ONE, FieldElement::ONE]);
        assert_eq!(poly_gcd(&ctx, &a, &b).unwrap(), b);
        // gcd(x^3+1, x^2+x+1) = x^2+x+1 over F_4
        let c = PolyExt::x_pow_minus_one(3);
        let d = PolyExt::from_coeffs(vec![
            FieldElement::ONE,
            FieldElement::ONE,
            FieldElement::ONE,
        ]);
        assert_eq!(poly_gcd(&ctx, &c, &d).unwrap(), d);
        assert!(poly_gcd(&ctx, &PolyExt::zero(), &PolyExt::zero()).is_err());
    }

    #[test]
    fn divrem_property() {
        let ctx = make_ctx(2, 3, None).unwrap();
        let a = PolyExt::from_coeffs(vec![
            FieldElement(5),
            FieldElement(9),
            FieldElement(0),
            FieldElement(63),
            FieldElement(1),
        ]);
        let b = PolyExt::from_coeffs(vec![FieldElement(7), FieldElement(2), FieldElement(1)]);
        let (q, r) = a.divrem(&ctx, &b).unwrap();
        assert!(r.degree().map_or(true, |d| d < 2));
        assert_eq!(q.mul(&ctx, &b).add(&r), a);
    }
}
