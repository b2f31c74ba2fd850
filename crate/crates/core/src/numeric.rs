//! Unbounded integer helpers: square roots, gcds and divisor lists.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Magnitudes such as |I| and k.
pub type Natural = BigUint;

/// Largest |I| that [`positive_divisors`] will factor unless told otherwise.
pub const DEFAULT_DIVISOR_CAP: u64 = 100_000_000_000_000;

/// Quadratic residues mod 64: only 12 of 64 residues can be squares.
const SQUARE_MOD_64: [bool; 64] = {
    let mut table = [false; 64];
    let mut i = 0;
    while i < 64 {
        table[(i * i) % 64] = true;
        i += 1;
    }
    table
};

/// Exact square root: `Some(s)` with `s * s == n`, `None` when `n` is not a square.
///
/// Panics on negative input.
pub fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    assert!(!n.is_negative(), "integer_sqrt of a negative number");
    let low = n.iter_u64_digits().next().unwrap_or(0);
    if !SQUARE_MOD_64[(low & 63) as usize] {
        return None;
    }
    // Newton iteration on the magnitude; no floating point involved.
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Bezout coefficients: returns `(g, u, v)` with `g = gcd(a, b) >= 0` and `a*u + b*v = g`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_u, mut u) = (BigInt::one(), BigInt::zero());
    let (mut old_v, mut v) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_u = &old_u - &q * &u;
        old_u = std::mem::replace(&mut u, next_u);
        let next_v = &old_v - &q * &v;
        old_v = std::mem::replace(&mut v, next_v);
    }
    if old_r.is_negative() {
        (-old_r, -old_u, -old_v)
    } else {
        (old_r, old_u, old_v)
    }
}

/// All positive divisors of `n` in ascending order, by trial division up to √n.
///
/// `n` above `cap` is refused with [`Error::DivisorLimitExceeded`] instead of
/// grinding through an infeasible search.
pub fn positive_divisors(n: &BigInt, cap: &Natural) -> Result<Vec<BigInt>> {
    if n.sign() != Sign::Plus {
        return Err(Error::NonPositive("divisor enumeration argument"));
    }
    let magnitude = n.magnitude();
    let too_large = || Error::DivisorLimitExceeded {
        value: magnitude.clone(),
        cap: cap.clone(),
    };
    if magnitude > cap {
        return Err(too_large());
    }
    let n = magnitude.to_u128().ok_or_else(too_large)?;

    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    Ok(small
        .into_iter()
        .chain(large.into_iter().rev())
        .map(BigInt::from)
        .collect())
}

/// Trial-division primality test; only used on small values such as −J.
pub fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    let two = BigInt::from(2);
    if n.is_even() {
        return *n == two;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d += &two;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn divisors(n: i64) -> Vec<i64> {
        positive_divisors(&big(n), &Natural::from(DEFAULT_DIVISOR_CAP))
            .unwrap()
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(integer_sqrt(&big(9)), Some(big(3)));
        assert_eq!(integer_sqrt(&big(0)), Some(big(0)));
        assert_eq!(integer_sqrt(&big(8)), None);
        let huge = BigInt::from(10u8).pow(40) + 7;
        let sq = &huge * &huge;
        assert_eq!(integer_sqrt(&sq), Some(huge));
        assert_eq!(integer_sqrt(&(sq + 1)), None);
    }

    #[test]
    fn sqrt_agrees_with_naive_search() {
        let mut next_root = 0i64;
        for n in 0..20_000i64 {
            let expected = if next_root * next_root == n {
                next_root += 1;
                Some(big(next_root - 1))
            } else {
                None
            };
            assert_eq!(integer_sqrt(&big(n)), expected, "n = {n}");
        }
    }

    #[test]
    #[should_panic]
    fn sqrt_rejects_negative() {
        integer_sqrt(&big(-4));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&big(6), &big(9)), big(3));
        assert_eq!(gcd(&big(2), &big(2)), big(2));
        assert_eq!(gcd(&big(0), &big(7)), big(7));
        assert_eq!(gcd(&big(0), &big(0)), big(0));
        assert_eq!(gcd(&big(-6), &big(9)), big(3));
    }

    #[test]
    fn extended_gcd_examples() {
        let (g, u, v) = extended_gcd(&big(6), &big(9));
        assert_eq!(g, big(3));
        assert_eq!(big(6) * u + big(9) * v, big(3));

        assert_eq!(extended_gcd(&big(1), &big(0)), (big(1), big(1), big(0)));

        let (g, u, v) = extended_gcd(&big(240), &big(46));
        assert_eq!(g, big(2));
        assert_eq!(big(240) * u + big(46) * v, big(2));
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(80), vec![1, 2, 4, 5, 8, 10, 16, 20, 40, 80]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(10), vec![1, 2, 5, 10]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn divisor_errors() {
        let cap = Natural::from(1000u32);
        assert_eq!(
            positive_divisors(&big(0), &cap),
            Err(Error::NonPositive("divisor enumeration argument"))
        );
        assert!(positive_divisors(&big(-5), &cap).is_err());
        assert!(matches!(
            positive_divisors(&big(1001), &cap),
            Err(Error::DivisorLimitExceeded { .. })
        ));
        assert!(positive_divisors(&big(1000), &cap).is_ok());
    }

    #[test]
    fn divisor_count_matches_naive_tau() {
        // Sieve τ(n) for every n up to the bound, then compare a sampled subset
        // plus the whole low range.
        const LIMIT: usize = 1_000_000;
        let mut tau = vec![0u32; LIMIT + 1];
        for d in 1..=LIMIT {
            for m in (d..=LIMIT).step_by(d) {
                tau[m] += 1;
            }
        }
        let cap = Natural::from(DEFAULT_DIVISOR_CAP);
        let samples = (1..=2000).chain((2001..=LIMIT).step_by(997)).chain([LIMIT]);
        for n in samples {
            let ds = positive_divisors(&BigInt::from(n), &cap).unwrap();
            assert_eq!(ds.len() as u32, tau[n], "tau({n})");
            assert!(ds.windows(2).all(|w| w[0] < w[1]));
            assert!(ds.iter().all(|d| (BigInt::from(n) % d).is_zero()));
        }
    }

    #[test]
    fn primes() {
        let small: Vec<i64> = (0..30).filter(|&n| is_prime(&big(n))).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(&big(-7)));
    }

    proptest! {
        #[test]
        fn sqrt_of_square(s in 0u64..u64::MAX) {
            let s = BigInt::from(s);
            let sq = &s * &s;
            prop_assert_eq!(integer_sqrt(&sq), Some(s.clone()));
            if !s.is_zero() {
                prop_assert_eq!(integer_sqrt(&(sq + 1)), None);
            }
        }

        #[test]
        fn bezout_holds(a in any::<i64>(), b in any::<i64>()) {
            let (a, b) = (big(a), big(b));
            let (g, u, v) = extended_gcd(&a, &b);
            prop_assert!(!g.is_negative());
            prop_assert_eq!(&g, &gcd(&a, &b));
            prop_assert_eq!(&a * u + &b * v, g);
        }

        #[test]
        fn bezout_small(a in -50i64..50, b in -50i64..50) {
            let (a, b) = (big(a), big(b));
            let (g, u, v) = extended_gcd(&a, &b);
            prop_assert_eq!(&g, &gcd(&a, &b));
            prop_assert_eq!(&a * u + &b * v, g);
        }
    }
}
