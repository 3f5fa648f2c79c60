//! Number-theoretic helpers shared by the group and verification code.

use serde::Serialize;

use crate::error::{Error, Result};

pub use num_integer::{gcd, lcm};

/// Euler's totient. `euler_phi(1) == 1`.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("euler_phi is undefined at 0".into()));
    }
    if n == 1 {
        return Ok(1);
    }
    Ok(factorize(n)?
        .prime_powers()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// Totient for callers that already know `n >= 1`.
pub(crate) fn phi(n: u64) -> u64 {
    euler_phi(n).expect("phi of a positive integer")
}

/// Canonical prime factorization, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    prime_powers: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn prime_powers(&self) -> &[(u64, u32)] {
        &self.prime_powers
    }

    pub fn value(&self) -> u64 {
        self.prime_powers.iter().map(|&(p, a)| p.pow(a)).product()
    }

    pub fn distinct_primes(&self) -> usize {
        self.prime_powers.len()
    }

    /// Sum of exponents (number of prime factors with multiplicity).
    pub fn big_omega(&self) -> u32 {
        self.prime_powers.iter().map(|&(_, a)| a).sum()
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.prime_powers.as_slice(), [(_, 1)])
    }

    /// `Some((p, a))` when the integer is `p^a` with `a >= 1`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.prime_powers.as_slice() {
            [pa] => Some(*pa),
            _ => None,
        }
    }

    pub fn is_prime_power(&self) -> bool {
        self.prime_power().is_some()
    }

    /// `p * q` with `p != q` both prime.
    pub fn is_product_of_two_distinct_primes(&self) -> bool {
        matches!(self.prime_powers.as_slice(), [(_, 1), (_, 1)])
    }

    /// `p * q` with `p`, `q` prime, `p == q` allowed.
    pub fn is_product_of_two_primes(&self) -> bool {
        self.big_omega() == 2
    }
}

/// Trial-division factorization; inputs here are group orders, so small.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n <= 1 {
        return Err(Error::Domain(format!("cannot factorize {n}")));
    }
    let mut rest = n;
    let mut prime_powers = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut a = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                a += 1;
            }
            prime_powers.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        prime_powers.push((rest, 1));
    }
    Ok(Factorization { prime_powers })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

/// `n` is `p^a` for a prime `p` and `a >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime_power()).unwrap_or(false)
}

pub fn is_power_of_two(n: u64) -> bool {
    n.is_power_of_two()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(7).unwrap(), 6);
        assert_eq!(euler_phi(12).unwrap(), brute_phi(12));
        assert_eq!(brute_phi(12), 4);
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn phi_matches_brute_force() {
        for n in 1..500 {
            assert_eq!(euler_phi(n).unwrap(), brute_phi(n), "n = {n}");
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(8).unwrap().prime_powers(), &[(2, 3)]);
        assert_eq!(factorize(12).unwrap().prime_powers(), &[(2, 2), (3, 1)]);
        let f15 = factorize(15).unwrap();
        assert_eq!(f15.prime_powers(), &[(3, 1), (5, 1)]);
        assert!(f15.is_product_of_two_distinct_primes());
        assert!(f15.is_product_of_two_primes());
        assert!(!factorize(9).unwrap().is_product_of_two_distinct_primes());
        assert!(factorize(9).unwrap().is_product_of_two_primes());
        assert!(factorize(1).is_err());
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorization_round_trips() {
        for n in 2..3000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), n);
            for w in f.prime_powers().windows(2) {
                assert!(w[0].0 < w[1].0);
            }
            for &(p, a) in f.prime_powers() {
                assert!(a >= 1);
                assert!((2..p).take_while(|d| d * d <= p).all(|d| p % d != 0));
            }
        }
    }
}
