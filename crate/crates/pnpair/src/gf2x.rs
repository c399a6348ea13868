//! Bit-packed polynomials over F_2.
//!
//! A polynomial is a `u128` whose bit `i` is the coefficient of `x^i`, so the
//! supported degrees are 0..=127. Products of two such polynomials need up to
//! 255 bits and are carried as a `(lo, hi)` pair of `u128` halves (bit `i` of
//! `hi` is the coefficient of `x^{128+i}`).

/// Degree of `p`, with the convention that the zero polynomial has degree 0.
pub fn degree(p: u128) -> u32 {
    127 - p.leading_zeros().min(127)
}

/// Carry-less multiply of two bit-polynomials; returns (low 128, high 128)
/// coefficient words of the 255-bit product.
pub fn mul_wide(a: u128, mut b: u128) -> (u128, u128) {
    let mut lo = 0u128;
    let mut hi = 0u128;
    let mut shift = 0u32;
    while b != 0 {
        if b & 1 == 1 {
            lo ^= a << shift;
            if shift > 0 {
                hi ^= a >> (128 - shift);
            }
        }
        b >>= 1;
        shift += 1;
    }
    (lo, hi)
}

/// Reduce a 255-bit product modulo a monic polynomial of degree `n` (bit `n`
/// of `modulus` set, `n <= 127`).
pub fn reduce_wide(mut lo: u128, mut hi: u128, modulus: u128, n: u32) -> u128 {
    debug_assert!(n <= 127 && modulus >> n == 1);
    // Fold bits 128..=254 down first, then 127..=n. XORing the shifted modulus
    // clears the target bit via the monic leading term.
    for bit in (0..127u32).rev() {
        if (hi >> bit) & 1 == 1 {
            let pos = 128 + bit - n; // shift that aligns the leading term with the bit
            if pos < 128 {
                lo ^= modulus << pos;
                hi ^= modulus >> (128 - pos); // pos >= 1 because n <= 127
            } else {
                hi ^= modulus << (pos - 128);
            }
        }
    }
    for bit in (n..128u32).rev() {
        if (lo >> bit) & 1 == 1 {
            lo ^= modulus << (bit - n);
        }
    }
    lo
}

/// `a * b mod modulus` for a monic modulus of degree `n`.
pub fn mulmod(a: u128, b: u128, modulus: u128, n: u32) -> u128 {
    let (lo, hi) = mul_wide(a, b);
    reduce_wide(lo, hi, modulus, n)
}

/// Remainder of `a` modulo `b` (`b != 0`).
pub fn rem(mut a: u128, b: u128) -> u128 {
    debug_assert!(b != 0);
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

/// Polynomial gcd over F_2 (returns 0 only if both inputs are 0).
pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Is the monic polynomial `p` of degree `n >= 1` irreducible over F_2?
///
/// Uses the standard criterion: x^(2^n) ≡ x (mod p) together with
/// gcd(x^(2^(n/r)) − x, p) = 1 for every prime r | n.
pub fn is_irreducible(p: u128, n: u32) -> bool {
    if n == 0 || p >> n != 1 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if p & 1 == 0 {
        return false; // divisible by x
    }
    // t_j = x^(2^j) mod p for increasing j
    let mut pow_cache = vec![2u128]; // j = 0: x
    for _ in 1..=n {
        let last = *pow_cache.last().unwrap();
        pow_cache.push(mulmod(last, last, p, n));
    }
    if pow_cache[n as usize] != rem(2, p) {
        return false;
    }
    let mut rest = n;
    let mut r = 2;
    let mut seen = Vec::new();
    while rest > 1 {
        if rest % r == 0 {
            seen.push(r);
            while rest % r == 0 {
                rest /= r;
            }
        }
        r += 1;
        if r * r > rest && rest > 1 {
            seen.push(rest);
            break;
        }
    }
    for r in seen {
        let j = n / r;
        if gcd(pow_cache[j as usize] ^ 2, p) != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `n`
/// (smallest integer value of the coefficient bitvector).
pub fn smallest_irreducible(n: u32) -> u128 {
    assert!(n >= 1 && n <= 127);
    if n == 1 {
        return 0b10; // x
    }
    let base = 1u128 << n;
    let mut cand = base + 1;
    loop {
        if is_irreducible(cand, n) {
            return cand;
        }
        cand += 2; // constant term must stay 1
    }
}

/// Render a bit-polynomial as a monomial list such as `x^6+x^4+x^3+x+1`.
pub fn to_string(p: u128) -> String {
    if p == 0 {
        return "0".into();
    }
    let mut terms = Vec::new();
    for i in (0..=degree(p)).rev() {
        if (p >> i) & 1 == 1 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                i => format!("x^{i}"),
            });
        }
    }
    terms.join("+")
}

/// Parse a monomial list (`x^6+x^4+x^3+x+1`, whitespace tolerated) into a
/// bit-polynomial. `-` is accepted as a separator since −1 = 1 over F_2.
pub fn parse(s: &str) -> Option<u128> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return None;
    }
    let mut p = 0u128;
    for term in cleaned.replace('-', "+").split('+') {
        if term.is_empty() {
            return None;
        }
        let exp: u32 = if term == "1" {
            0
        } else if term == "x" {
            1
        } else {
            term.strip_prefix("x^")?.parse().ok()?
        };
        if exp > 127 {
            return None;
        }
        p ^= 1u128 << exp;
    }
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_multiply_matches_shift_xor() {
        let a = 0b1011u128;
        let b = 0b110u128;
        let (lo, hi) = mul_wide(a, b);
        assert_eq!(hi, 0);
        // (x^3+x+1)(x^2+x) = x^5+x^4+x^3+x^2+x^2+x = x^5+x^4+x^3+x
        assert_eq!(lo, 0b111010);
    }

    #[test]
    fn wide_multiply_high_bits() {
        let a = 1u128 << 127;
        let b = 0b10u128;
        let (lo, hi) = mul_wide(a, b);
        assert_eq!(lo, 0);
        assert_eq!(hi, 1);
    }

    #[test]
    fn reduction_in_f4() {
        // x * x mod x^2+x+1 = x+1
        assert_eq!(mulmod(0b10, 0b10, 0b111, 2), 0b11);
    }

    #[test]
    fn gcd_finds_common_factor() {
        // x^2+1 = (x+1)^2, so gcd with x+1 is x+1
        assert_eq!(gcd(0b101, 0b11), 0b11);
        assert_eq!(gcd(0b111, 0b11), 1);
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(0b111, 2)); // x^2+x+1
        assert!(!is_irreducible(0b110, 2)); // x^2+x = x(x+1)
        assert!(!is_irreducible(0b101, 2)); // x^2+1 = (x+1)^2
        assert!(is_irreducible(0b1011, 3)); // x^3+x+1
        assert!(is_irreducible(0b1101, 3)); // x^3+x^2+1
        assert!(!is_irreducible(0b1111, 3)); // (x+1)(x^2+x+1)
        assert!(is_irreducible(0b1011011, 6)); // x^6+x^4+x^3+x+1
    }

    #[test]
    fn smallest_irreducible_table() {
        let expected: [(u32, u128); 8] = [
            (2, 7),
            (3, 11),
            (4, 19),
            (5, 37),
            (6, 67),
            (7, 131),
            (8, 283),
            (12, 4105),
        ];
        for (n, p) in expected {
            assert_eq!(smallest_irreducible(n), p, "degree {n}");
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["x^6+x^4+x^3+x+1", "x^2+x+1", "x+1", "1", "x"] {
            let p = parse(s).unwrap();
            assert_eq!(to_string(p), s);
        }
        assert_eq!(parse("x^5 + x^2 + 1"), Some(0b100101));
        assert_eq!(parse("x^3-1"), Some(0b1001));
        assert_eq!(parse(""), None);
        assert_eq!(parse("y+1"), None);
    }
}
