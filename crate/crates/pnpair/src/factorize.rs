//! Integer factorization and the multiplicative counting functions ω(n),
//! W(n) = 2^ω(n), φ(n) used by the bound and sieve evaluations.
//!
//! The pipeline is trial division to a configurable limit, Miller–Rabin with
//! a fixed deterministic base set (proven for everything below 2^64 and far
//! beyond; a strong probable-prime test past that), and Brent's cycle-finding
//! rho with an effort cap. Values of the form 2^j − 1 are pre-split into
//! cyclotomic-polynomial values Φ_d(2), which keeps every group order arising
//! from q^m ≤ 2^128 comfortably inside the default budget.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, OnceLock};

/// A positive integer together with its complete prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntFactorization {
    value: BigUint,
    /// (prime, multiplicity), primes strictly increasing.
    primes: Vec<(BigUint, u32)>,
}

impl IntFactorization {
    pub fn one() -> Self {
        IntFactorization {
            value: BigUint::one(),
            primes: Vec::new(),
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn primes(&self) -> &[(BigUint, u32)] {
        &self.primes
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = &BigUint> {
        self.primes.iter().map(|(p, _)| p)
    }

    /// ω(n): number of distinct prime divisors.
    pub fn omega(&self) -> u32 {
        self.primes.len() as u32
    }

    /// W(n) = 2^ω(n).
    pub fn w_value(&self) -> BigUint {
        BigUint::one() << self.primes.len()
    }

    /// Euler's totient from the factorization.
    pub fn euler_phi(&self) -> BigUint {
        let mut phi = BigUint::one();
        for (p, e) in &self.primes {
            phi *= p - 1u32;
            phi *= p.pow(e - 1);
        }
        phi
    }

    /// Does `d` divide the factored value?
    pub fn divides(&self, d: &BigUint) -> bool {
        (self.value.clone() % d).is_zero()
    }

    /// Cache-file record: `n=p1^e1*p2^e2*...` in decimal.
    pub fn to_record(&self) -> String {
        let parts: Vec<String> = self
            .primes
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        format!("{}={}", self.value, parts.join("*"))
    }

    pub fn from_record(line: &str) -> Result<IntFactorization> {
        let (v, rest) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad cache record {line:?}")))?;
        let value: BigUint = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad value in {line:?}")))?;
        let mut primes = Vec::new();
        let rest = rest.trim();
        if !rest.is_empty() {
            for part in rest.split('*') {
                let (p, e) = match part.split_once('^') {
                    Some((p, e)) => (
                        p.parse()
                            .map_err(|_| Error::Parse(format!("bad prime in {line:?}")))?,
                        e.parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in {line:?}")))?,
                    ),
                    None => (
                        part.parse()
                            .map_err(|_| Error::Parse(format!("bad prime in {line:?}")))?,
                        1u32,
                    ),
                };
                primes.push((p, e));
            }
        }
        let fac = IntFactorization { value, primes };
        fac.validate()?;
        Ok(fac)
    }

    fn validate(&self) -> Result<()> {
        let mut prod = BigUint::one();
        let mut prev: Option<&BigUint> = None;
        for (p, e) in &self.primes {
            if let Some(q) = prev {
                if q >= p {
                    return Err(Error::Parse("primes not strictly increasing".into()));
                }
            }
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            prod *= p.pow(*e);
            prev = Some(p);
        }
        if prod != self.value {
            return Err(Error::Parse("factorization does not multiply back".into()));
        }
        Ok(())
    }
}

/// Effort caps for the factoring pipeline.
#[derive(Debug, Clone)]
pub struct FactorBudget {
    pub trial_limit: u64,
    pub rho_max_iterations: u64,
    pub rho_retries: u32,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_limit: 1_000_000,
            rho_max_iterations: 50_000_000,
            rho_retries: 24,
        }
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = 1_000_000usize;
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if sieve[i] {
                let mut j = i * i;
                while j <= limit {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (2..=limit)
            .filter(|&i| sieve[i])
            .map(|i| i as u64)
            .collect()
    })
}

// ---- primality ----

fn addmod_u128(a: u128, b: u128, m: u128) -> u128 {
    // requires a, b < m; correct even when m > 2^127
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

fn mulmod_u128(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return (a % m) * (b % m) % m;
    }
    let mut a = a % m;
    let mut b = b % m;
    let mut acc = 0u128;
    while b != 0 {
        if b & 1 == 1 {
            acc = addmod_u128(acc, a, m);
        }
        b >>= 1;
        a = addmod_u128(a, a, m);
    }
    acc
}

fn powmod_u128(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128 % m;
    base %= m;
    while exp != 0 {
        if exp & 1 == 1 {
            acc = mulmod_u128(acc, base, m);
        }
        base = mulmod_u128(base, base, m);
        exp >>= 1;
    }
    acc
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'base: for &b in &MR_BASES {
        let mut x = powmod_u128(b as u128, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u128(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Primality test: deterministic Miller–Rabin below 2^64 (the fixed base set
/// is in fact proven deterministic to ~3.3·10^24), strong probable prime with
/// the same bases plus further fixed bases beyond.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(v) = n.to_u128() {
        return is_prime_u128(v);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let d0 = n - &one;
    let s = d0.trailing_zeros().unwrap_or(0);
    let d = &d0 >> s;
    let extra: [u64; 8] = [41, 43, 47, 53, 59, 61, 67, 71];
    'base: for b in MR_BASES.iter().chain(extra.iter()) {
        let b = BigUint::from(*b);
        if &b >= n {
            continue;
        }
        let mut x = b.modpow(&d, n);
        if x == one || x == d0 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == d0 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn integer_nth_root(n: &BigUint, k: u32) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    let bits = n.bits();
    let mut hi = BigUint::one() << (bits / k as u64 + 1);
    let mut lo = BigUint::zero();
    while &lo < &hi {
        let mid: BigUint = (&lo + &hi + 1u32) >> 1;
        if mid.pow(k) <= *n {
            lo = mid;
        } else {
            hi = mid - 1u32;
        }
    }
    lo
}

/// n = b^k with k >= 2? Returns (b, k) with maximal k.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    for k in (2..=bits.max(2)).rev() {
        let root = integer_nth_root(n, k);
        if root > BigUint::one() && root.pow(k) == *n {
            return Some((root, k));
        }
    }
    None
}

// ---- Brent's rho ----

fn rho_brent_u128(n: u128, c: u128, max_iters: u64) -> Option<u128> {
    let f = |x: u128| {
        let y = mulmod_u128(x, x, n);
        let y = y + c;
        if y >= n {
            y - n
        } else {
            y
        }
    };
    let mut y = 2u128;
    let mut r = 1u64;
    let mut q = 1u128;
    let mut g = 1u128;
    let mut x = 0u128;
    let mut ys = 0u128;
    let batch = 128u64;
    let mut iters = 0u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0u64;
        while k < r && g == 1 {
            ys = y;
            let inner = batch.min(r - k);
            for _ in 0..inner {
                y = f(y);
                q = mulmod_u128(q, x.abs_diff(y), n);
            }
            g = num_integer::gcd(q, n);
            k += inner;
            iters += inner;
            if iters > max_iters {
                return None;
            }
        }
        r = r.saturating_mul(2);
    }
    if g == n {
        // back up and redo one step at a time
        loop {
            ys = f(ys);
            g = num_integer::gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    if g == n {
        None
    } else {
        Some(g)
    }
}

fn rho_brent_big(n: &BigUint, c: u32, max_iters: u64) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = BigUint::zero();
    let mut ys = BigUint::zero();
    let one = BigUint::one();
    let batch = 64u64;
    let mut iters = 0u64;
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0u64;
        while k < r && g == one {
            ys = y.clone();
            let inner = batch.min(r - k);
            for _ in 0..inner {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = q * diff % n;
            }
            g = q.gcd(n);
            k += inner;
            iters += inner;
            if iters > max_iters {
                return None;
            }
        }
        r = r.saturating_mul(2);
    }
    if g == *n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g > one {
                break;
            }
        }
    }
    if g == *n {
        None
    } else {
        Some(g)
    }
}

fn split_composite(n: &BigUint, budget: &FactorBudget) -> Option<BigUint> {
    if let Some((b, _)) = perfect_power(n) {
        return Some(b);
    }
    if let Some(v) = n.to_u128() {
        for attempt in 0..budget.rho_retries {
            let c = 2 * attempt as u128 + 1;
            if let Some(f) = rho_brent_u128(v, c, budget.rho_max_iterations) {
                return Some(BigUint::from(f));
            }
        }
        return None;
    }
    for attempt in 0..budget.rho_retries {
        if let Some(f) = rho_brent_big(n, 2 * attempt + 1, budget.rho_max_iterations) {
            return Some(f);
        }
    }
    None
}

/// Complete, deterministic factorization of `n >= 1` under the default budget.
pub fn factor(n: &BigUint) -> Result<IntFactorization> {
    factor_with_budget(n, &FactorBudget::default())
}

pub fn factor_with_budget(n: &BigUint, budget: &FactorBudget) -> Result<IntFactorization> {
    if n.is_zero() {
        return Err(Error::InvalidParameter("cannot factor 0".into()));
    }
    let mut rest = n.clone();
    let mut found: Vec<BigUint> = Vec::new();
    for &p in small_primes() {
        if p > budget.trial_limit {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (rest.clone() % &pb).is_zero() {
            rest /= &pb;
            found.push(pb.clone());
        }
    }
    let mut stack = Vec::new();
    if rest > BigUint::one() {
        stack.push(rest);
    }
    while let Some(c) = stack.pop() {
        if is_prime(&c) {
            found.push(c);
            continue;
        }
        match split_composite(&c, budget) {
            Some(f) => {
                let q = &c / &f;
                stack.push(f);
                stack.push(q);
            }
            None => {
                return Err(Error::FactorizationFailure {
                    value: n.to_string(),
                    cofactor: c.to_string(),
                })
            }
        }
    }
    found.sort();
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    for p in found {
        match primes.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => primes.push((p, 1)),
        }
    }
    Ok(IntFactorization {
        value: n.clone(),
        primes,
    })
}

// ---- cyclotomic pre-splitting for 2^j − 1 ----

/// Values Φ_d(2) for all divisors d of n, computed by exact division.
fn cyclotomic_values_at_two(n: u32) -> HashMap<u32, BigUint> {
    let mut vals: HashMap<u32, BigUint> = HashMap::new();
    let mut divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    divisors.sort();
    for d in divisors {
        let mut v = (BigUint::one() << d) - 1u32;
        for (e, phi) in vals.iter() {
            if d % e == 0 && *e < d {
                v /= phi;
            }
        }
        vals.insert(d, v);
    }
    vals
}

/// Factorization of 2^n − 1, pre-split into cyclotomic-polynomial values.
pub fn factor_two_pow_minus_1(n: u32) -> Result<IntFactorization> {
    factor_two_pow_minus_1_with(n, &FactorBudget::default(), None)
}

pub fn factor_two_pow_minus_1_with(
    n: u32,
    budget: &FactorBudget,
    cache: Option<&FactorCache>,
) -> Result<IntFactorization> {
    if n == 0 || n > 4096 {
        return Err(Error::InvalidParameter(format!(
            "2^{n}-1 is outside the supported exponent range 1..=4096"
        )));
    }
    let value = (BigUint::one() << n) - 1u32;
    if let Some(cache) = cache {
        if let Some(hit) = cache.get(&value) {
            return Ok(hit);
        }
    }
    let mut merged: HashMap<BigUint, u32> = HashMap::new();
    for (_, phi) in cyclotomic_values_at_two(n) {
        if phi.is_one() {
            continue;
        }
        let fac = match cache.and_then(|c| c.get(&phi)) {
            Some(hit) => hit,
            None => {
                let f = factor_with_budget(&phi, budget)?;
                if let Some(cache) = cache {
                    cache.insert(&f);
                }
                f
            }
        };
        for (p, e) in fac.primes {
            *merged.entry(p).or_insert(0) += e;
        }
    }
    let mut primes: Vec<(BigUint, u32)> = merged.into_iter().collect();
    primes.sort_by(|a, b| a.0.cmp(&b.0));
    let fac = IntFactorization { value, primes };
    debug_assert!(fac.validate().is_ok());
    if let Some(cache) = cache {
        cache.insert(&fac);
    }
    Ok(fac)
}

/// Factorization of q^m − 1 = 2^(k·m) − 1.
pub fn factor_qm_minus_1(k: u32, m: u32) -> Result<IntFactorization> {
    let n = k
        .checked_mul(m)
        .ok_or_else(|| Error::InvalidParameter("k*m overflows".into()))?;
    if n == 0 {
        return Err(Error::InvalidParameter("need k*m >= 1".into()));
    }
    factor_two_pow_minus_1(n)
}

// ---- W(n) bound sweeps ----

#[derive(Debug, Clone, serde::Serialize)]
pub struct WBoundReport {
    pub n_max: u64,
    pub exponent_denominator: u32,
    pub constant: String,
    pub odd_only: bool,
    pub checked: u64,
    pub violations: Vec<u64>,
    pub max_ratio: f64,
    pub max_ratio_at: u64,
}

/// Verify W(n) < c · n^(1/α) for all n ≤ n_max (odd n only when `odd_only`).
/// The constant is a decimal string such as "6.46"; ties and near-ties are
/// decided in exact integer arithmetic.
pub fn check_w_bound(
    n_max: u64,
    exponent_denominator: u32,
    constant: &str,
    odd_only: bool,
) -> Result<WBoundReport> {
    let (c_num, c_den) = parse_decimal(constant)?;
    let alpha = exponent_denominator;
    if alpha == 0 || n_max == 0 {
        return Err(Error::InvalidParameter(
            "need n_max >= 1 and denominator >= 1".into(),
        ));
    }
    // sieve ω(n)
    let mut omega = vec![0u8; n_max as usize + 1];
    for i in 2..=n_max as usize {
        if omega[i] == 0 {
            let mut j = i;
            while j <= n_max as usize {
                omega[j] += 1;
                j += i;
            }
        }
    }
    let cf = c_num as f64 / c_den as f64;
    let mut violations = Vec::new();
    let mut checked = 0u64;
    let mut max_ratio = 0.0f64;
    let mut max_at = 0u64;
    for n in 1..=n_max {
        if odd_only && n % 2 == 0 {
            continue;
        }
        checked += 1;
        let w = 1u64 << omega[n as usize];
        let bound = cf * (n as f64).powf(1.0 / alpha as f64);
        let ratio = w as f64 / bound;
        if ratio > max_ratio {
            max_ratio = ratio;
            max_at = n;
        }
        let holds = if ratio < 1.0 - 1e-9 {
            true
        } else if ratio > 1.0 + 1e-9 {
            false
        } else {
            // exact: W^α · c_den^α < c_num^α · n
            let lhs = BigUint::from(w).pow(alpha) * BigUint::from(c_den).pow(alpha);
            let rhs = BigUint::from(c_num).pow(alpha) * BigUint::from(n);
            lhs < rhs
        };
        if !holds {
            violations.push(n);
        }
    }
    Ok(WBoundReport {
        n_max,
        exponent_denominator: alpha,
        constant: constant.to_string(),
        odd_only,
        checked,
        violations,
        max_ratio,
        max_ratio_at: max_at,
    })
}

/// Parse a non-negative decimal literal into (numerator, power-of-ten denominator).
pub fn parse_decimal(s: &str) -> Result<(u64, u64)> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid decimal constant {s:?}"));
    match s.split_once('.') {
        None => Ok((s.parse().map_err(|_| bad())?, 1)),
        Some((int, frac)) => {
            if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10u64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
            let int_part: u64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let num = int_part
                .checked_mul(den)
                .and_then(|v| v.checked_add(frac.parse::<u64>().map_err(|_| bad()).ok()?))
                .ok_or_else(bad)?;
            Ok((num, den))
        }
    }
}

// ---- on-disk factorization cache ----

/// One record per line: `n=p1^e1*p2^e2*…`, decimal. Process-private; a single
/// process may read and append concurrently through the internal lock.
pub struct FactorCache {
    path: PathBuf,
    map: Mutex<HashMap<BigUint, Vec<(BigUint, u32)>>>,
}

impl FactorCache {
    pub fn open(path: &Path) -> Result<FactorCache> {
        let mut map = HashMap::new();
        if path.exists() {
            for line in std::fs::read_to_string(path)?.lines() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let fac = IntFactorization::from_record(line)?;
                map.insert(fac.value.clone(), fac.primes);
            }
        }
        Ok(FactorCache {
            path: path.to_path_buf(),
            map: Mutex::new(map),
        })
    }

    pub fn get(&self, n: &BigUint) -> Option<IntFactorization> {
        self.map
            .lock()
            .unwrap()
            .get(n)
            .map(|primes| IntFactorization {
                value: n.clone(),
                primes: primes.clone(),
            })
    }

    pub fn insert(&self, fac: &IntFactorization) {
        let mut map = self.map.lock().unwrap();
        if map.contains_key(&fac.value) {
            return;
        }
        map.insert(fac.value.clone(), fac.primes.clone());
        if let Ok(mut f) = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
        {
            let _ = writeln!(f, "{}", fac.to_record());
        }
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
