//! Large-rank growth data for the scaled count at fixed n: the leading term,
//! the subleading term, explicit upper/lower envelopes, and the comparison
//! table machinery.
//!
//! Every quantity is an exact rational of the shape
//! coefficient * base^(ell - 1 - offset); nothing here ever touches floating
//! point. Decimal output happens only at render time.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{self, BigRat};
use crate::counts::CountTable;
use crate::error::{Error, Result};
use crate::render;

/// Residue of n mod 3, which selects every piecewise branch in this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Residue {
    Zero,
    One,
    Two,
}

impl Residue {
    pub fn of(n: u32) -> Self {
        match n % 3 {
            0 => Residue::Zero,
            1 => Residue::One,
            _ => Residue::Two,
        }
    }
}

/// A growth term coefficient * base^(ell - 1 - exponent_offset).
///
/// Offset 0 for the leading/subleading terms, 1 for the lower envelope
/// (whose exponent is ell - 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticTerm {
    pub coefficient: BigRat,
    pub base: BigInt,
    pub exponent_offset: u32,
}

impl AsymptoticTerm {
    fn new(coefficient: BigRat, base: BigInt, exponent_offset: u32) -> Self {
        debug_assert!(base >= BigInt::one());
        debug_assert!(coefficient > BigRat::new(0.into(), 1.into()));
        AsymptoticTerm {
            coefficient,
            base,
            exponent_offset,
        }
    }

    pub fn eval(&self, ell: u32) -> BigRat {
        assert!(ell > self.exponent_offset);
        let e = ell - 1 - self.exponent_offset;
        &self.coefficient * arith::pow_rat(&BigRat::from(self.base.clone()), e)
    }
}

/// 1 / (2^k * k!)
fn inv_pow2_factorial(k: u32) -> BigRat {
    BigRat::new(
        BigInt::one(),
        arith::pow_big(&BigInt::from(2), k) * arith::factorial(k),
    )
}

/// The growth base: 3^(n/3), 4*3^((n-4)/3), or 2*3^((n-2)/3) by n mod 3.
pub fn leading_base(n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::OutOfBranch {
            op: "leading base",
            n,
            requirement: "n >= 2",
        });
    }
    let three = BigInt::from(3);
    Ok(match Residue::of(n) {
        Residue::Zero => arith::pow_big(&three, n / 3),
        Residue::One => 4 * arith::pow_big(&three, (n - 4) / 3),
        Residue::Two => 2 * arith::pow_big(&three, (n - 2) / 3),
    })
}

/// The leading term as coefficient * base^(ell-1).
pub fn leading_term(n: u32) -> Result<AsymptoticTerm> {
    let base = leading_base(n)?;
    let coefficient = match Residue::of(n) {
        Residue::Zero => inv_pow2_factorial(n / 3),
        Residue::One => arith::rat(7, 6) * inv_pow2_factorial((n - 4) / 3),
        Residue::Two => inv_pow2_factorial((n - 2) / 3),
    };
    Ok(AsymptoticTerm::new(coefficient, base, 0))
}

/// Exact value of the leading term at rank `ell`.
pub fn leading(ell: u32, n: u32) -> Result<BigRat> {
    Ok(leading_term(n)?.eval(ell))
}

/// The subleading term. Defined only past the per-residue small-n guards
/// (n > 3, > 7, > 5); outside them this refuses rather than inventing a
/// zero, so threshold machinery cannot silently misuse it.
pub fn subleading_term(n: u32) -> Result<AsymptoticTerm> {
    let three = BigInt::from(3);
    let (coefficient, base) = match Residue::of(n) {
        Residue::Zero if n > 3 => {
            let k = (n - 6) / 3;
            (
                arith::rat(5, 6) * inv_pow2_factorial(k),
                8 * arith::pow_big(&three, k),
            )
        }
        Residue::One if n > 7 => {
            let k = (n - 10) / 3;
            (
                arith::rat(41, 120) * inv_pow2_factorial(k),
                32 * arith::pow_big(&three, k),
            )
        }
        Residue::Two if n > 5 => {
            let k = (n - 8) / 3;
            (
                arith::rat(43, 72) * inv_pow2_factorial(k),
                16 * arith::pow_big(&three, k),
            )
        }
        Residue::Zero => {
            return Err(Error::OutOfBranch {
                op: "subleading term",
                n,
                requirement: "n > 3 when n == 0 (mod 3)",
            })
        }
        Residue::One => {
            return Err(Error::OutOfBranch {
                op: "subleading term",
                n,
                requirement: "n > 7 when n == 1 (mod 3)",
            })
        }
        Residue::Two => {
            return Err(Error::OutOfBranch {
                op: "subleading term",
                n,
                requirement: "n > 5 when n == 2 (mod 3)",
            })
        }
    };
    Ok(AsymptoticTerm::new(coefficient, base, 0))
}

pub fn subleading(ell: u32, n: u32) -> Result<BigRat> {
    Ok(subleading_term(n)?.eval(ell))
}

/// The next-to-subleading growth base: eleven explicit small cases, then
/// 2^6*3^((n-12)/3), 2^8*3^((n-16)/3), 2^7*3^((n-14)/3) by residue.
pub fn next_subleading_base(n: u32) -> Result<BigInt> {
    let small = match n {
        3 => Some(1u32),
        4 => Some(2),
        5 => Some(4),
        6 => Some(6),
        7 => Some(9),
        8 => Some(15),
        9 => Some(20),
        10 => Some(30),
        11 => Some(45),
        13 => Some(90),
        _ => None,
    };
    if let Some(v) = small {
        return Ok(BigInt::from(v));
    }
    if n < 3 {
        return Err(Error::OutOfBranch {
            op: "next-to-subleading base",
            n,
            requirement: "n >= 3",
        });
    }
    let three = BigInt::from(3);
    Ok(match Residue::of(n) {
        Residue::Zero => 64 * arith::pow_big(&three, (n - 12) / 3),
        Residue::One => 256 * arith::pow_big(&three, (n - 16) / 3),
        Residue::Two => 128 * arith::pow_big(&three, (n - 14) / 3),
    })
}

/// The explicit lower envelope as coefficient * base^(ell-2).
pub fn lower_term(n: u32) -> Result<AsymptoticTerm> {
    let base = leading_base(n)?;
    let coefficient = match Residue::of(n) {
        Residue::Zero => BigRat::new(BigInt::one(), arith::factorial(n / 3)),
        Residue::One => arith::rat(2, 3) / BigRat::from(arith::factorial((n - 4) / 3)),
        Residue::Two => BigRat::new(BigInt::one(), arith::factorial((n - 2) / 3)),
    };
    Ok(AsymptoticTerm::new(coefficient, base, 1))
}

pub fn lower(ell: u32, n: u32) -> Result<BigRat> {
    Ok(lower_term(n)?.eval(ell))
}

/// The explicit upper envelope p(n) * leading_base(n)^(ell-1).
pub fn upper(ell: u32, n: u32) -> Result<BigRat> {
    assert!(ell >= 1);
    let base = leading_base(n)?;
    Ok(BigRat::from(
        arith::partition(n) * arith::pow_big(&base, ell - 1),
    ))
}

/// One row of the leading-term comparison: exact values plus the fixed
/// decimal renderings (10 significant digits for values, 9 decimal places
/// for the ratio).
#[derive(Debug, Clone)]
pub struct RatioRow {
    pub ell: u32,
    pub count: BigInt,
    pub leading: BigRat,
    pub count_rendered: String,
    pub leading_rendered: String,
    pub ratio_rendered: String,
}

/// Compares the exact count with its leading term at fixed n over the given
/// ranks.
pub fn ratio_table(n: u32, ells: &[u32]) -> Result<Vec<RatioRow>> {
    let mut rows = Vec::with_capacity(ells.len());
    for &ell in ells {
        let table = CountTable::new(ell, n)?;
        let count = table.value(n).clone();
        let lead = leading(ell, n)?;
        let ratio = &lead / BigRat::from(count.clone());
        rows.push(RatioRow {
            ell,
            count_rendered: render::sci_int(&count, false),
            leading_rendered: render::sci(&lead, false),
            ratio_rendered: render::fixed9(&ratio),
            count,
            leading: lead,
        });
    }
    Ok(rows)
}
