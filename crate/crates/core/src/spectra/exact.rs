//! Exact linear algebra on small-entry integer matrices.
//!
//! Nullity is computed as `n − rank` modulo the Mersenne prime `2^61 − 1`,
//! which bounds the rational nullity from above, and the modular kernel is
//! lifted back to Q by rational reconstruction and checked exactly, which
//! bounds it from below. Whenever the two bounds do not meet, fraction-free
//! Bareiss elimination over big integers decides.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};

pub(crate) const P: u64 = (1 << 61) - 1;

#[inline]
pub(crate) fn mulmod(a: u64, b: u64) -> u64 {
    let x = a as u128 * b as u128;
    let s = (x as u64 & P) + (x >> 61) as u64;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

#[inline]
fn invmod(a: u64) -> u64 {
    debug_assert!(a != 0);
    powmod(a, P - 2)
}

#[inline]
pub(crate) fn to_mod(v: i64) -> u64 {
    v.rem_euclid(P as i64) as u64
}

/// Square matrix of rationals stored as `i64` numerators over one shared
/// positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    num: Vec<i64>,
    den: i64,
}

impl RationalMatrix {
    /// Integer matrix from row-major entries.
    pub fn from_integers(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Domain(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            n,
            num: entries,
            den: 1,
        })
    }

    /// Row-major numerators over `den`, reduced to lowest common terms.
    pub fn from_fraction(n: usize, numerators: Vec<i64>, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        let mut m = Self::from_integers(n, numerators)?;
        m.den = den;
        m.normalize();
        Ok(m)
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            self.num.iter_mut().for_each(|x| *x = -*x);
        }
        let g = self.num.iter().fold(self.den, |g, &x| g.gcd(&x));
        if g > 1 {
            self.den /= g;
            self.num.iter_mut().for_each(|x| *x /= g);
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)` as a reduced fraction `(numerator, denominator)`.
    pub fn entry(&self, i: usize, j: usize) -> (i64, i64) {
        let x = self.num[i * self.n + j];
        let g = x.gcd(&self.den);
        (x / g, self.den / g)
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.num[i * self.n + j] == self.num[j * self.n + i]))
    }

    /// `M − λI` for integer `λ`.
    pub fn shifted(&self, lambda: i64) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.num[i * self.n + i] -= lambda * self.den;
        }
        out
    }

    /// Rational nullity; scaling by the denominator does not change it.
    pub fn nullity(&self) -> usize {
        nullity(self.n, &self.num)
    }

    /// Rational nullity by Bareiss elimination alone.
    pub fn bareiss_nullity(&self) -> usize {
        self.n - bareiss_rank(self.n, &self.num)
    }
}

/// Reduced row echelon form mod P in place; returns the pivot columns.
fn rref_mod(n: usize, m: &mut [u64]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(r) = (row..n).find(|&r| m[r * n + col] != 0) else {
            continue;
        };
        if r != row {
            for j in 0..n {
                m.swap(r * n + j, row * n + j);
            }
        }
        let inv = invmod(m[row * n + col]);
        for j in col..n {
            m[row * n + j] = mulmod(m[row * n + j], inv);
        }
        for r in 0..n {
            if r == row {
                continue;
            }
            let f = m[r * n + col];
            if f == 0 {
                continue;
            }
            for j in col..n {
                let t = mulmod(f, m[row * n + j]);
                m[r * n + j] = submod(m[r * n + j], t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// `a ≡ r/t (mod P)` with `|r|, |t| ≤ sqrt(P/2)`.
fn rational_reconstruct(a: u64) -> Option<(i128, i128)> {
    const BOUND: i128 = 1_518_500_249; // floor(sqrt((2^61 - 1) / 2))
    let (mut r0, mut r1) = (P as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > BOUND {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > BOUND || r1.gcd(&t1) != 1 {
        return None;
    }
    if t1 < 0 {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

/// Nullity of an integer matrix over Q.
pub(crate) fn nullity(n: usize, a: &[i64]) -> usize {
    if n == 0 {
        return 0;
    }
    let mut m: Vec<u64> = a.iter().map(|&x| to_mod(x)).collect();
    let pivots = rref_mod(n, &mut m);
    let upper = n - pivots.len();
    if upper == 0 || lift_kernel(n, a, &m, &pivots) {
        upper
    } else {
        n - bareiss_rank(n, a)
    }
}

/// Lifts the RREF kernel basis to integer vectors and checks each exactly.
/// Success proves the rational nullity is at least the modular one.
fn lift_kernel(n: usize, a: &[i64], rref: &[u64], pivots: &[usize]) -> bool {
    let mut is_pivot = vec![false; n];
    for &c in pivots {
        is_pivot[c] = true;
    }
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        // x_free = 1, x_pivot(r) = −rref[r][free]
        let mut fracs = vec![(0i128, 1i128); n];
        fracs[free] = (1, 1);
        for (r, &pc) in pivots.iter().enumerate() {
            let v = rref[r * n + free];
            if v == 0 {
                continue;
            }
            let Some((num, den)) = rational_reconstruct(submod(0, v)) else {
                return false;
            };
            fracs[pc] = (num, den);
        }
        if !kernel_vector_checks(n, a, &fracs) {
            return false;
        }
    }
    true
}

fn kernel_vector_checks(n: usize, a: &[i64], fracs: &[(i128, i128)]) -> bool {
    let mut lcm: i128 = 1;
    for &(_, d) in fracs {
        match lcm.checked_mul(d / lcm.gcd(&d)) {
            Some(l) => lcm = l,
            None => return verify_big(n, a, fracs),
        }
    }
    let mut v = Vec::with_capacity(n);
    for &(num, den) in fracs {
        match num.checked_mul(lcm / den) {
            Some(x) => v.push(x),
            None => return verify_big(n, a, fracs),
        }
    }
    verify_small(n, a, &v).unwrap_or_else(|| verify_big(n, a, fracs))
}

/// `A v = 0` in checked `i128`; `None` on overflow.
fn verify_small(n: usize, a: &[i64], v: &[i128]) -> Option<bool> {
    for i in 0..n {
        let mut s: i128 = 0;
        for j in 0..n {
            let x = a[i * n + j];
            if x != 0 && v[j] != 0 {
                s = s.checked_add((x as i128).checked_mul(v[j])?)?;
            }
        }
        if s != 0 {
            return Some(false);
        }
    }
    Some(true)
}

fn verify_big(n: usize, a: &[i64], fracs: &[(i128, i128)]) -> bool {
    let lcm = fracs
        .iter()
        .fold(BigInt::from(1), |l, &(_, d)| l.lcm(&BigInt::from(d)));
    let v: Vec<BigInt> = fracs
        .iter()
        .map(|&(num, den)| BigInt::from(num) * (&lcm / BigInt::from(den)))
        .collect();
    (0..n).all(|i| {
        let s: BigInt = (0..n)
            .filter(|&j| a[i * n + j] != 0)
            .map(|j| &v[j] * a[i * n + j])
            .sum();
        s == BigInt::from(0)
    })
}

/// Rank over Q by fraction-free Gaussian elimination.
pub(crate) fn bareiss_rank(n: usize, a: &[i64]) -> usize {
    let mut m: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(r) = (row..n).find(|&r| m[r * n + col] != zero) else {
            continue;
        };
        if r != row {
            for j in 0..n {
                m.swap(r * n + j, row * n + j);
            }
        }
        for i in row + 1..n {
            for j in col + 1..n {
                let v =
                    (&m[row * n + col] * &m[i * n + j] - &m[i * n + col] * &m[row * n + j]) / &prev;
                m[i * n + j] = v;
            }
            m[i * n + col] = zero.clone();
        }
        prev = m[row * n + col].clone();
        row += 1;
    }
    row
}

/// Characteristic polynomial `det(xI − A)` mod P, coefficients from the
/// constant term upwards, via reduction to Hessenberg form.
pub(crate) fn charpoly_mod(n: usize, a: &[i64]) -> Vec<u64> {
    let mut h: Vec<u64> = a.iter().map(|&x| to_mod(x)).collect();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i * n + j] != 0) else {
            continue;
        };
        if i != j + 1 {
            for c in 0..n {
                h.swap(i * n + c, (j + 1) * n + c);
            }
            for r in 0..n {
                h.swap(r * n + i, r * n + j + 1);
            }
        }
        let inv = invmod(h[(j + 1) * n + j]);
        for r in j + 2..n {
            let u = mulmod(h[r * n + j], inv);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let t = mulmod(u, h[(j + 1) * n + c]);
                h[r * n + c] = submod(h[r * n + c], t);
            }
            for row in 0..n {
                let t = mulmod(u, h[row * n + r]);
                h[row * n + j + 1] = addmod(h[row * n + j + 1], t);
            }
        }
    }

    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        // (x − h[m−1][m−1]) p_{m−1}
        let prev = &polys[m - 1];
        let mut p = vec![0u64; m + 1];
        let d = h[(m - 1) * n + m - 1];
        for (k, &c) in prev.iter().enumerate() {
            p[k + 1] = addmod(p[k + 1], c);
            p[k] = submod(p[k], mulmod(d, c));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mulmod(t, h[(m - i) * n + m - i - 1]);
            let f = mulmod(t, h[(m - i - 1) * n + m - 1]);
            if f == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                p[k] = submod(p[k], mulmod(f, c));
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

pub(crate) fn eval_mod(coeffs: &[u64], x: u64) -> u64 {
    let x = x % P;
    coeffs
        .iter()
        .rev()
        .fold(0, |acc, &c| addmod(mulmod(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mulmod_matches_u128() {
        for &(a, b) in &[(P - 1, P - 1), (12345, 67890), (1 << 60, 3), (0, 5)] {
            assert_eq!(mulmod(a, b) as u128, a as u128 * b as u128 % P as u128);
        }
    }

    #[test]
    fn reconstruction_round_trip() {
        for &(r, t) in &[(1i64, 3i64), (-7, 5), (123457, 789), (0, 1)] {
            let a = mulmod(to_mod(r), invmod(to_mod(t)));
            assert_eq!(rational_reconstruct(a), Some((r as i128, t as i128)));
        }
    }

    #[test]
    fn fractions_reduce() {
        let m = RationalMatrix::from_fraction(2, vec![2, -4, 6, 8], 4).unwrap();
        assert_eq!(m.entry(0, 1), (-1, 1));
        assert_eq!(m.entry(0, 0), (1, 2));
        assert!(!m.is_integral());
        assert_eq!(m.nullity(), 0);
    }

    #[test]
    fn charpoly_of_small_matrices() {
        // [[2,1],[1,2]]: x² − 4x + 3
        assert_eq!(charpoly_mod(2, &[2, 1, 1, 2]), vec![3, P - 4, 1]);
        // 3x3 needing a row swap during reduction
        let a = [1, 2, 3, 0, 4, 5, 1, 0, 6];
        let c = charpoly_mod(3, &a);
        // det(A) = 1*24 - 2*(-5) + 3*(-4) = 22, trace 11, principal minors 4 + 3 + 24 = 31
        assert_eq!(c, vec![P - 22, 31, P - 11, 1]);
    }

    fn small_matrix() -> impl Strategy<Value = (usize, Vec<i64>)> {
        (1usize..7).prop_flat_map(|n| (Just(n), proptest::collection::vec(-3i64..=3, n * n)))
    }

    proptest! {
        #[test]
        fn modular_nullity_matches_bareiss((n, a) in small_matrix(), rank_drop in 0usize..3) {
            // copy earlier rows to force dependent rows
            let mut a = a;
            for r in 0..rank_drop.min(n - 1) {
                let src = r;
                let dst = n - 1 - r;
                if dst > src {
                    for j in 0..n {
                        a[dst * n + j] = 2 * a[src * n + j];
                    }
                }
            }
            prop_assert_eq!(nullity(n, &a), n - bareiss_rank(n, &a));
        }

        #[test]
        fn charpoly_vanishes_at_eigenvalues((n, a) in small_matrix()) {
            let c = charpoly_mod(n, &a);
            prop_assert_eq!(c.len(), n + 1);
            for lambda in -6i64..=6 {
                let shifted: Vec<i64> = (0..n * n)
                    .map(|k| if k / n == k % n { a[k] - lambda } else { a[k] })
                    .collect();
                let singular = bareiss_rank(n, &shifted) < n;
                prop_assert_eq!(singular, eval_mod(&c, to_mod(lambda)) == 0);
            }
        }
    }
}
