//! The sufficient conditions for the existence of a primitive normal pair:
//! the plain bound q^(m/2) > 4·W(e₁)W(e₂)Ω(g₁)Ω(g₂), the sieve refinement
//! q^(m/2) > 4·W(d)²Ω(g)²·𝔖 with θ and 𝔖, the closed-form 𝔖 for m′ | q−1,
//! and the 𝔖 ≤ m′ estimate.
//!
//! Every pass/fail decision is made in exact rational arithmetic by squaring
//! the inequality; floats appear only in reports.

use crate::error::{Error, Result};
use crate::factorize::IntFactorization;
use crate::xm1::XmStructure;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact check of q^(m/2) > rhs for a non-negative rational rhs:
/// equivalent to q^m · den² > num².
pub fn lhs_exceeds(k: u32, m: u32, rhs: &BigRational) -> bool {
    if rhs.is_negative() {
        return true;
    }
    let qm = BigInt::from(BigUint::one() << (k as u64 * m as u64));
    let num = rhs.numer();
    let den = rhs.denom();
    qm * den * den > num * num
}

/// Outcome of the plain condition with both sides.
#[derive(Debug, Clone)]
pub struct PlainCondition {
    /// q^(m/2) as a float (reporting only).
    pub lhs: f64,
    /// 4·W(e₁)W(e₂)Ω(g₁)Ω(g₂), exact.
    pub rhs: BigUint,
    pub passes: bool,
}

/// The plain sufficient condition for divisors with ω(e₁), ω(e₂) distinct
/// primes and g₁, g₂ having the given numbers of distinct irreducible
/// factors.
pub fn plain_condition(
    k: u32,
    m: u32,
    omega_e1: u32,
    omega_e2: u32,
    gd_1: u32,
    gd_2: u32,
) -> PlainCondition {
    let rhs = BigUint::from(4u32) << (omega_e1 + omega_e2 + gd_1 + gd_2);
    let qm = BigUint::one() << (k as u64 * m as u64);
    let passes = qm > &rhs * &rhs;
    PlainCondition {
        lhs: 2f64.powf(k as f64 * m as f64 / 2.0),
        rhs,
        passes,
    }
}

/// The plain condition at full strength: e₁ = e₂ = q^m−1, g₁ = g₂ = x^m−1.
pub fn plain_condition_full(
    k: u32,
    m: u32,
    order: &IntFactorization,
    xm: &XmStructure,
) -> PlainCondition {
    plain_condition(
        k,
        m,
        order.omega(),
        order.omega(),
        xm.distinct_factor_count(),
        xm.distinct_factor_count(),
    )
}

/// A sieve configuration: which primes of q^m−1 go into d and which distinct
/// irreducible factors of x^m−1 go into g; the complements are sieved.
#[derive(Debug, Clone)]
pub struct SieveChoice {
    pub d_primes: Vec<BigUint>,
    pub remaining_primes: Vec<BigUint>,
    /// Degrees of the distinct factors inside g.
    pub g_degrees: Vec<u32>,
    /// Degrees of the remaining distinct factors g_1, …, g_k.
    pub remaining_degrees: Vec<u32>,
}

impl SieveChoice {
    /// Build from a divisor d | q^m−1 (taking its distinct primes) and the
    /// set of factor degrees included in g.
    pub fn new(
        order: &IntFactorization,
        xm: &XmStructure,
        d: &DSpec,
        g_degrees: Vec<u32>,
    ) -> Result<SieveChoice> {
        let mut d_primes = Vec::new();
        let mut remaining_primes = Vec::new();
        match d {
            DSpec::Full => {
                d_primes = order.distinct_primes().cloned().collect();
            }
            DSpec::Value(v) => {
                if v.is_zero() || !order.divides(v) {
                    return Err(Error::InvalidParameter(format!(
                        "d = {v} does not divide q^m-1 = {}",
                        order.value()
                    )));
                }
                for p in order.distinct_primes() {
                    if (v % p).is_zero() {
                        d_primes.push(p.clone());
                    } else {
                        remaining_primes.push(p.clone());
                    }
                }
            }
        }
        let mut remaining_degrees: Vec<u32> = xm.factor_degrees().to_vec();
        for d in &g_degrees {
            match remaining_degrees.iter().position(|r| r == d) {
                Some(i) => {
                    remaining_degrees.remove(i);
                }
                None => {
                    return Err(Error::InvalidParameter(format!(
                        "g selects a degree-{d} factor that x^m-1 does not have left"
                    )))
                }
            }
        }
        Ok(SieveChoice {
            d_primes,
            remaining_primes,
            g_degrees,
            remaining_degrees,
        })
    }

    pub fn n(&self) -> u32 {
        self.remaining_primes.len() as u32
    }

    pub fn k(&self) -> u32 {
        self.remaining_degrees.len() as u32
    }

    pub fn w_d(&self) -> BigUint {
        BigUint::one() << self.d_primes.len()
    }

    pub fn omega_g(&self) -> BigUint {
        BigUint::one() << self.g_degrees.len()
    }
}

/// How the d side of a sieve choice is specified.
#[derive(Debug, Clone)]
pub enum DSpec {
    /// d = q^m − 1 (all primes absorbed, n = 0).
    Full,
    Value(BigUint),
}

/// Sieve evaluation with exact θ and 𝔖.
#[derive(Debug, Clone)]
pub struct SieveEvaluation {
    pub n: u32,
    pub k: u32,
    pub w_d: BigUint,
    pub omega_g: BigUint,
    /// θ = 1 − 2Σ1/p_i − 2Σ1/q^deg(g_i), exact.
    pub theta: BigRational,
    /// 𝔖 = (2n+2k−1)/θ + 2; None when θ ≤ 0.
    pub s: Option<BigRational>,
    /// 4·W(d)²·Ω(g)²·𝔖; None when θ ≤ 0.
    pub rhs: Option<BigRational>,
    /// q^(m/2) as float, for reports.
    pub lhs: f64,
    /// θ > 0 and q^(m/2) > rhs, decided exactly.
    pub passes: bool,
}

/// Evaluate the sieve condition for a choice in F_{q^m}, q = 2^k.
pub fn sieve_eval(choice: &SieveChoice, k: u32, m: u32) -> SieveEvaluation {
    let mut theta = BigRational::one();
    let two = BigRational::from(BigInt::from(2));
    for p in &choice.remaining_primes {
        theta -= &two / BigRational::from(BigInt::from(p.clone()));
    }
    for deg in &choice.remaining_degrees {
        let qd = BigUint::one() << (k as u64 * *deg as u64);
        theta -= &two / BigRational::from(BigInt::from(qd));
    }
    let n = choice.n();
    let kk = choice.k();
    let (s, rhs, passes) = if theta.is_positive() {
        let count = BigRational::from(BigInt::from(2 * n as i64 + 2 * kk as i64 - 1));
        let s = count / &theta + &two;
        let factor = BigUint::from(4u32) * choice.w_d().pow(2) * choice.omega_g().pow(2);
        let rhs = BigRational::from(BigInt::from(factor)) * &s;
        let passes = lhs_exceeds(k, m, &rhs);
        (Some(s), Some(rhs), passes)
    } else {
        (None, None, false)
    };
    SieveEvaluation {
        n,
        k: kk,
        w_d: choice.w_d(),
        omega_g: choice.omega_g(),
        theta,
        s,
        rhs,
        lhs: 2f64.powf(k as f64 * m as f64 / 2.0),
        passes,
    }
}

/// Closed-form 𝔖 for the m′ | q−1 regime with d = q^m−1, g = 1 and all m′
/// linear factors remaining: (2q²−6q+aq+4)/(aq−2q+2) where m′ = (q−1)/a.
/// Returns None when the denominator is ≤ 0 (the θ ≤ 0 regime).
pub fn lemma53_s(k: u32, a: u64) -> Result<Option<BigRational>> {
    let q: u64 = 1u64
        .checked_shl(k)
        .ok_or_else(|| Error::InvalidParameter("q overflows".into()))?;
    if a == 0 || (q - 1) % a != 0 {
        return Err(Error::InvalidParameter(format!(
            "a = {a} must divide q-1 = {}",
            q - 1
        )));
    }
    let qi = BigInt::from(q);
    let ai = BigInt::from(a);
    let den = &ai * &qi - BigInt::from(2) * &qi + BigInt::from(2);
    if !den.is_positive() {
        return Ok(None);
    }
    let num = BigInt::from(2) * &qi * &qi - BigInt::from(6) * &qi + &ai * &qi + BigInt::from(4);
    Ok(Some(BigRational::new(num, den)))
}

/// The generic sieve 𝔖 with d = q^m−1, g = 1 and the m′ linear factors of
/// x^m′−1 remaining; equals the closed form whenever θ > 0.
pub fn lemma53_generic(k: u32, a: u64) -> Result<Option<BigRational>> {
    let q: u64 = 1 << k;
    if a == 0 || (q - 1) % a != 0 {
        return Err(Error::InvalidParameter("a must divide q-1".into()));
    }
    let m_prime = (q - 1) / a;
    let mut theta = BigRational::one();
    let per_factor = BigRational::new(BigInt::from(2), BigInt::from(q));
    theta -= per_factor * BigInt::from(m_prime);
    if !theta.is_positive() {
        return Ok(None);
    }
    let count = BigRational::from(BigInt::from(2 * m_prime as i64 - 1));
    Ok(Some(count / theta + BigRational::from(BigInt::from(2))))
}

/// Report for the 𝔖 ≤ m′ estimate: g = (factors of degree < u), d = q^m−1.
#[derive(Debug, Clone)]
pub struct Lemma56Report {
    pub m_prime: u32,
    pub u: u32,
    pub k: u32,
    pub theta: BigRational,
    pub s: Option<BigRational>,
    /// Some(true) when 𝔖 ≤ m′; Some(false) flags the violation; None when
    /// θ ≤ 0.
    pub holds: Option<bool>,
}

/// Evaluate 𝔖 with g the product of irreducible factors of degree below u
/// (so the degree-u factors remain), n = 0, and compare against m′.
pub fn lemma56_bound(s: &XmStructure) -> Lemma56Report {
    let u = s.u();
    let remaining: Vec<u32> = s
        .factor_degrees()
        .iter()
        .copied()
        .filter(|&d| d == u)
        .collect();
    let kk = remaining.len() as u32;
    let mut theta = BigRational::one();
    let two = BigRational::from(BigInt::from(2));
    for deg in &remaining {
        let qd = BigUint::one() << (s.k() as u64 * *deg as u64);
        theta -= &two / BigRational::from(BigInt::from(qd));
    }
    let (s_val, holds) = if theta.is_positive() {
        let count = BigRational::from(BigInt::from(2 * kk as i64 - 1));
        let sv = count / &theta + &two;
        let holds = sv <= BigRational::from(BigInt::from(s.m_prime()));
        (Some(sv), Some(holds))
    } else {
        (None, None)
    };
    Lemma56Report {
        m_prime: s.m_prime(),
        u,
        k: kk,
        theta,
        s: s_val,
        holds,
    }
}

/// Float mirror for reports.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}
