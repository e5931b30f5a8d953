//! Shared exact-arithmetic kernel: factorization, divisor sums, the
//! partition function, and small helpers on top of `num-bigint` /
//! `num-rational`.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! any number of threads.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counts;
use crate::error::{Error, Result};

pub type BigRat = num_rational::BigRational;

/// Default ceiling for trial-division factorization. All scans in this crate
/// stay at most in the low thousands, so a deterministic sqrt(n) sweep is
/// plenty; the cap just keeps accidental huge inputs from spinning.
pub const FACTORIZE_CAP: u64 = 1_000_000;

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Multiplies the factorization back together.
    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
            let mut pk = 1u64;
            for _ in 0..=e {
                next.extend(divs.iter().map(|d| d * pk));
                pk *= p;
            }
            divs = next;
        }
        divs.sort_unstable();
        divs
    }
}

/// Deterministic trial division up to sqrt(n). `factorize(1)` is the empty
/// product.
pub fn factorize(n: u64) -> Result<Factorization> {
    factorize_with_cap(n, FACTORIZE_CAP)
}

pub fn factorize_with_cap(n: u64, cap: u64) -> Result<Factorization> {
    assert!(n >= 1, "factorize requires n >= 1");
    if n > cap {
        return Err(Error::FactorCapExceeded { n, cap });
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Sum of the positive divisors of n.
pub fn sigma(n: u64) -> Result<BigInt> {
    let f = factorize(n)?;
    let mut acc = BigInt::one();
    for &(p, e) in f.factors() {
        // (p^(e+1) - 1) / (p - 1)
        let p = BigInt::from(p);
        let num = pow_big(&p, e + 1) - 1u32;
        let den = &p - 1u32;
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        debug_assert!(r.is_zero());
        acc *= q;
    }
    Ok(acc)
}

/// The partition function p(n). There is a single production code path for
/// it: the commuting-pair count for the dimension-2 lattice.
pub fn partition(n: u32) -> BigInt {
    counts::n_ell(2, n)
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n.max(1) {
        acc *= k;
    }
    acc
}

pub fn pow_big(base: &BigInt, exp: u32) -> BigInt {
    num_traits::Pow::pow(base, exp)
}

pub fn pow_rat(base: &BigRat, exp: u32) -> BigRat {
    BigRat::new_raw(pow_big(base.numer(), exp), pow_big(base.denom(), exp))
}

pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Exact division, asserting there is no remainder. Used wherever a counting
/// identity guarantees divisibility; a remainder means the implementation is
/// wrong, so it aborts loudly.
pub fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(&num, den);
    assert!(
        r.is_zero(),
        "internal consistency: {num} is not divisible by {den}"
    );
    q
}

/// Asserts a rational is an integer and unwraps it.
pub fn expect_integer(x: BigRat) -> BigInt {
    assert!(
        x.denom().is_one(),
        "internal consistency: expected an integer, got {}/{}",
        x.numer(),
        x.denom()
    );
    x.numer().clone()
}

pub fn rat_abs(x: &BigRat) -> BigRat {
    BigRat::new_raw(x.numer().abs(), x.denom().clone())
}
