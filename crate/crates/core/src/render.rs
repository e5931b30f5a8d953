//! Decimal rendering of exact values.
//!
//! The comparison table spans 10^-30 to 10^1526, far outside floating point,
//! so all digits come from exact integer long division. Rounding is
//! half-up. This is the only lossy step anywhere in the crate and it happens
//! strictly at the output boundary.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{pow_big, BigRat};

const SIGNIFICANT_DIGITS: u32 = 10;

/// Scientific notation with 10 significant digits, half-up:
/// "1.905692920·10^8" (or "1.905692920e8" in ascii mode).
pub fn sci(x: &BigRat, ascii: bool) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let num = x.numer().abs();
    let den = x.denom().clone();

    // decimal exponent e with 10^e <= |x| < 10^(e+1)
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    while cmp_scaled(&num, &den, e) == std::cmp::Ordering::Less {
        e -= 1;
    }
    while cmp_scaled(&num, &den, e + 1) != std::cmp::Ordering::Less {
        e += 1;
    }

    // mantissa = round_half_up(|x| * 10^(9 - e)), a 10-digit integer
    let shift = SIGNIFICANT_DIGITS as i64 - 1 - e;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num * pow_big(&BigInt::from(10), shift as u32), den)
    } else {
        (num, den * pow_big(&BigInt::from(10), (-shift) as u32))
    };
    let mut mantissa =
        (BigInt::from(2) * scaled_num + &scaled_den) / (BigInt::from(2) * scaled_den);
    let ten_pow = pow_big(&BigInt::from(10), SIGNIFICANT_DIGITS);
    if mantissa >= ten_pow {
        // rounding carried into a new leading digit
        mantissa /= 10;
        e += 1;
    }

    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len() as u32, SIGNIFICANT_DIGITS);
    let sign = if neg { "-" } else { "" };
    if ascii {
        format!("{sign}{}.{}e{e}", &digits[..1], &digits[1..])
    } else {
        format!("{sign}{}.{}\u{b7}10^{e}", &digits[..1], &digits[1..])
    }
}

/// compares num against den * 10^e (i.e. |x| against 10^e)
fn cmp_scaled(num: &BigInt, den: &BigInt, e: i64) -> std::cmp::Ordering {
    if e >= 0 {
        num.cmp(&(den * pow_big(&BigInt::from(10), e as u32)))
    } else {
        (num * pow_big(&BigInt::from(10), (-e) as u32)).cmp(den)
    }
}

pub fn sci_int(x: &BigInt, ascii: bool) -> String {
    sci(&BigRat::from(x.clone()), ascii)
}

/// Fixed-point with exactly 9 digits after the decimal point, half-up:
/// "0.070245595".
pub fn fixed9(x: &BigRat) -> String {
    let neg = x.is_negative();
    let num = x.numer().abs();
    let den = x.denom();
    let billion = pow_big(&BigInt::from(10), 9);
    let scaled = (BigInt::from(2) * num * &billion + den) / (BigInt::from(2) * den);
    let int_part = &scaled / &billion;
    let frac_part = &scaled % &billion;
    format!("{}{int_part}.{frac_part:09}", if neg { "-" } else { "" })
}

/// Exact fraction "p/q", including q = 1.
pub fn fraction(x: &BigRat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}
