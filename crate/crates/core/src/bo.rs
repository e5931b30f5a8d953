//! Bessenrodt-Ono analysis: the product-versus-sum deltas
//! delta(a, b, ell) = N_ell(a) N_ell(b) - N_ell(a+b), their sign
//! classification over windows of pairs, sign-stabilization profiles in the
//! rank, and the certified rank thresholds beyond which the sign is proven
//! constant.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::counts::CountTable;
use crate::error::{Error, Result};

/// Default rank ceiling for profiles with no certified threshold.
pub const EMPIRICAL_CAP: u32 = 200;

/// Safety margin added to every ceil'd threshold. The underlying bounds are
/// strict inequalities evaluated in double precision; the margin absorbs any
/// boundary ambiguity and the stability tests verify the sign at the margin.
const BOUND_MARGIN: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DeltaSign {
    Negative,
    Zero,
    Positive,
}

impl DeltaSign {
    pub fn of(x: &BigInt) -> Self {
        match x.sign() {
            num_bigint::Sign::Minus => DeltaSign::Negative,
            num_bigint::Sign::NoSign => DeltaSign::Zero,
            num_bigint::Sign::Plus => DeltaSign::Positive,
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            DeltaSign::Negative => "-",
            DeltaSign::Zero => "0",
            DeltaSign::Positive => "+",
        }
    }
}

impl fmt::Display for DeltaSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.glyph())
    }
}

/// delta(a, b) evaluated inside an existing table (which must reach a + b).
pub fn delta_in(table: &CountTable, a: u32, b: u32) -> BigInt {
    table.value(a) * table.value(b) - table.value(a + b)
}

/// N_ell(a) N_ell(b) - N_ell(a+b), exactly. Symmetric in (a, b); zero for
/// all (a, b) at ell = 1.
pub fn delta(a: u32, b: u32, ell: u32) -> BigInt {
    assert!(a >= 2 && b >= 2 && ell >= 1);
    let table = CountTable::new(ell, a + b).expect("desk-scale inputs stay below the cap");
    delta_in(&table, a, b)
}

/// Zero and strictly negative pairs in a scan window, normalized to
/// (min, max) tuple order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionReport {
    pub ell: u32,
    pub a_max: u32,
    pub zero_pairs: BTreeSet<(u32, u32)>,
    pub negative_pairs: BTreeSet<(u32, u32)>,
}

/// Classifies delta over all pairs 2 <= lo <= hi <= a_max at the given rank.
pub fn scan_exceptions(ell: u32, a_max: u32) -> Result<ExceptionReport> {
    assert!(ell >= 2 && a_max >= 2);
    let table = CountTable::new(ell, 2 * a_max)?;
    let mut zero_pairs = BTreeSet::new();
    let mut negative_pairs = BTreeSet::new();
    for hi in 2..=a_max {
        for lo in 2..=hi {
            let d = delta_in(&table, lo, hi);
            match DeltaSign::of(&d) {
                DeltaSign::Zero => {
                    zero_pairs.insert((lo, hi));
                }
                DeltaSign::Negative => {
                    negative_pairs.insert((lo, hi));
                }
                DeltaSign::Positive => {}
            }
        }
    }
    Ok(ExceptionReport {
        ell,
        a_max,
        zero_pairs,
        negative_pairs,
    })
}

/// Which certified-threshold case matched, keyed by the arithmetic shape of
/// the pair (residues mod 3 and the side conditions), plus the literal
/// small cases that are handled with individually quoted thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// One of the individually-treated small pairs.
    Special(u32, u32),
    /// b = 2, a > 9, a == 0 (mod 3).
    B2Div3,
    /// b = 2, a > 5, a == 2 (mod 3).
    B2Res2,
    /// b = 4, a > 9, a == 0 (mod 3).
    B4Div3,
    /// a == b == 0 (mod 3).
    BothDiv3,
    /// a == 0, b == 1 (mod 3), b > 4.
    Res0Res1,
    /// a == b == 1 (mod 3), b > 1.
    Res1Res1,
    /// a == 0, b == 2 (mod 3), b > 2.
    Res0Res2,
    /// a == 1 (mod 3), a > 1, b == 2 (mod 3).
    Res1Res2,
    /// a == b == 2 (mod 3), both > 2.
    Res2Res2,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Special(a, b) => write!(f, "special({a},{b})"),
            CaseTag::B2Div3 => write!(f, "b=2,a=0mod3"),
            CaseTag::B2Res2 => write!(f, "b=2,a=2mod3"),
            CaseTag::B4Div3 => write!(f, "b=4,a=0mod3"),
            CaseTag::BothDiv3 => write!(f, "0mod3,0mod3"),
            CaseTag::Res0Res1 => write!(f, "0mod3,1mod3"),
            CaseTag::Res1Res1 => write!(f, "1mod3,1mod3"),
            CaseTag::Res0Res2 => write!(f, "0mod3,2mod3"),
            CaseTag::Res1Res2 => write!(f, "1mod3,2mod3"),
            CaseTag::Res2Res2 => write!(f, "2mod3,2mod3"),
        }
    }
}

/// A rank threshold with a proven eventual sign.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedBound {
    /// Sign holds for every rank >= ell_star.
    pub ell_star: u32,
    pub case: CaseTag,
    pub sign: DeltaSign,
    /// The bound expression before ceil + margin.
    pub raw_bound: f64,
}

fn log98(x: f64) -> f64 {
    x.ln() / (9.0f64 / 8.0).ln()
}

fn finish(raw: f64, case: CaseTag, sign: DeltaSign) -> CertifiedBound {
    let ell_star = (raw.ceil().max(0.0) as u32) + BOUND_MARGIN;
    CertifiedBound {
        ell_star: ell_star.max(2),
        case,
        sign,
        raw_bound: raw,
    }
}

/// Certified rank threshold for the pair, if one of the effective cases
/// covers it. Symmetric in (a, b). `None` means no case applies (for
/// example (2, 2)); the sign there is still observable, just not certified
/// here.
pub fn theorem_bound(a: u32, b: u32) -> Option<CertifiedBound> {
    assert!(a >= 2 && b >= 2);
    let key = if a <= b { (a, b) } else { (b, a) };
    // Small pairs proven individually, with their quoted thresholds.
    let special = match key {
        (2, 3) => Some((7.0, DeltaSign::Negative)),
        (3, 4) => Some((20.0, DeltaSign::Negative)),
        (2, 5) => Some((16.0, DeltaSign::Negative)),
        (2, 6) => Some((72.0, DeltaSign::Positive)),
        (4, 6) => Some((52.0, DeltaSign::Positive)),
        (2, 9) => Some((97.0, DeltaSign::Positive)),
        (4, 9) => Some((91.0, DeltaSign::Positive)),
        _ => None,
    };
    if let Some((raw, sign)) = special {
        return Some(finish(raw, CaseTag::Special(key.0, key.1), sign));
    }

    // Attached b = 2 / b = 4 cases.
    for (x, y) in [(a, b), (b, a)] {
        let xf = x as f64;
        if y == 2 && x > 9 && x % 3 == 0 {
            let raw = 1.0
                + log98(72.0 / 17.0)
                + (xf - 6.0) / 3.0 * log98(2.0 / 3.0 * (xf - 6.0))
                + (xf + 2.0) * log98(2.0);
            return Some(finish(raw, CaseTag::B2Div3, DeltaSign::Positive));
        }
        if y == 2 && x > 5 && x % 3 == 2 {
            let raw = 1.0 + (xf - 2.0) / 3.0 * log98(2.0 / 3.0 * (xf - 2.0)) + xf * log98(xf);
            return Some(finish(raw, CaseTag::B2Res2, DeltaSign::Negative));
        }
        if y == 4 && x > 9 && x % 3 == 0 {
            let raw = 1.0
                + log98(360.0 / 227.0)
                + (xf - 6.0) / 3.0 * log98(2.0 / 3.0 * (xf - 6.0))
                + (xf + 4.0) * log98(2.0);
            return Some(finish(raw, CaseTag::B4Div3, DeltaSign::Positive));
        }
    }

    let s = (a + b) as f64;
    if a.is_multiple_of(3) && b.is_multiple_of(3) {
        let raw = 1.0 + s / 3.0 * log98(4.0 * s / 3.0);
        return Some(finish(raw, CaseTag::BothDiv3, DeltaSign::Positive));
    }
    for (x, y) in [(a, b), (b, a)] {
        if x % 3 == 0 && y % 3 == 1 && y > 4 {
            let raw = log98(7.0 / 6.0)
                + (s - 2.0) / 3.0 * log98(4.0)
                + (s - 4.0) / 3.0 * log98((s - 4.0) / 3.0);
            return Some(finish(raw, CaseTag::Res0Res1, DeltaSign::Positive));
        }
        if x % 3 == 1 && y % 3 == 1 && y > 1 {
            let raw = -6.0 + 9.0 * s + (s / 2.0 + 2.0) / 3.0 * log98((s - 2.0) / 3.0);
            return Some(finish(raw, CaseTag::Res1Res1, DeltaSign::Negative));
        }
        if x % 3 == 0 && y % 3 == 2 && y > 2 {
            let raw = 1.0 + (s - 1.0) / 3.0 * log98(4.0) + (s - 2.0) / 3.0 * log98((s - 2.0) / 3.0);
            return Some(finish(raw, CaseTag::Res0Res2, DeltaSign::Positive));
        }
        if x % 3 == 1 && x > 1 && y % 3 == 2 {
            let raw = 5.0 + 9.0 * s + (s / 2.0 + 4.0) / 3.0 * log98(s / 3.0);
            return Some(finish(raw, CaseTag::Res1Res2, DeltaSign::Negative));
        }
        if x % 3 == 2 && y % 3 == 2 && x > 2 && y > 2 {
            let raw = 1.0 + log98(7.0 / 6.0) + ((s - 4.0) / 3.0 + s) * log98(2.0);
            return Some(finish(raw, CaseTag::Res2Res2, DeltaSign::Positive));
        }
    }
    None
}

/// How far a profile's constancy claim reaches.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    /// A certified threshold guarantees the sign for every rank past
    /// `ell_star`; the profile was computed through it.
    Certified { ell_star: u32, case: CaseTag },
    /// No certified case applies; the tail is observed, not proven.
    EmpiricalOnly { checked_to: u32 },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::Certified { .. })
    }
}

/// Run-length-encoded sign sequence of delta(a, b, ell) for ell = 2 upward,
/// with the rank from which the sign stays constant in the checked range.
#[derive(Debug, Clone, PartialEq)]
pub struct SignProfile {
    pub a: u32,
    pub b: u32,
    /// (sign, run length) pairs covering ell = 2..=checked_to.
    pub runs: Vec<(DeltaSign, u32)>,
    /// First rank of the final constant run (>= 2).
    pub stable_from: u32,
    /// Last rank whose sign was computed.
    pub checked_to: u32,
    pub certificate: Certificate,
}

impl SignProfile {
    pub fn final_sign(&self) -> DeltaSign {
        self.runs.last().expect("profile covers at least ell = 2").0
    }

    /// Sign at a specific rank within the checked range.
    pub fn sign_at(&self, ell: u32) -> DeltaSign {
        assert!((2..=self.checked_to).contains(&ell));
        let mut at = 2;
        for &(sign, len) in &self.runs {
            if ell < at + len {
                return sign;
            }
            at += len;
        }
        unreachable!("runs cover the checked range")
    }

    /// Compact entry "+_m" / "-_m", starred when the history is anything
    /// other than the strictly opposite sign before m (a zero anywhere, or a
    /// mixed prefix).
    pub fn entry(&self) -> String {
        let last = self.final_sign();
        let plain = self
            .runs
            .iter()
            .take(self.runs.len() - 1)
            .all(|&(sign, _)| {
                matches!(
                    (last, sign),
                    (DeltaSign::Positive, DeltaSign::Negative)
                        | (DeltaSign::Negative, DeltaSign::Positive)
                )
            });
        format!(
            "{}_{}{}",
            last.glyph(),
            self.stable_from,
            if plain { "" } else { "*" }
        )
    }
}

/// Computes the sign profile of a pair for ell = 2 upward.
///
/// With a certified threshold the profile runs exactly through ell_star and
/// is marked [`Certificate::Certified`]; otherwise it runs through
/// max(200, override) and stays [`Certificate::EmpiricalOnly`].
pub fn sign_profile(a: u32, b: u32, ell_cap_override: Option<u32>) -> Result<SignProfile> {
    assert!(a >= 2 && b >= 2);
    let bound = theorem_bound(a, b);
    let (checked_to, certificate) = match &bound {
        Some(cb) => (
            cb.ell_star,
            Certificate::Certified {
                ell_star: cb.ell_star,
                case: cb.case,
            },
        ),
        None => {
            let cap = EMPIRICAL_CAP.max(ell_cap_override.unwrap_or(0));
            (cap, Certificate::EmpiricalOnly { checked_to: cap })
        }
    };

    let mut runs: Vec<(DeltaSign, u32)> = Vec::new();
    let mut stable_from = 2;
    for ell in 2..=checked_to {
        let table = CountTable::new(ell, a + b)?;
        let sign = DeltaSign::of(&delta_in(&table, a, b));
        match runs.last_mut() {
            Some((last, len)) if *last == sign => *len += 1,
            _ => {
                stable_from = ell;
                runs.push((sign, 1));
            }
        }
    }
    Ok(SignProfile {
        a,
        b,
        runs,
        stable_from,
        checked_to,
        certificate,
    })
}

/// Eventual sign of the delta sequence predicted by residue arithmetic
/// alone, with the four small exceptional pairs. No counting happens here.
pub fn eventual_sign(a: u32, b: u32) -> DeltaSign {
    assert!(a >= 2 && b >= 2);
    let (a, b) = if b.is_multiple_of(3) && !a.is_multiple_of(3) {
        (b, a)
    } else {
        (a, b)
    };
    if a % 3 == 0 {
        let key = if a <= b { (a, b) } else { (b, a) };
        return if key == (2, 3) || key == (3, 4) {
            DeltaSign::Negative
        } else {
            DeltaSign::Positive
        };
    }
    if a % 3 == 2 && b % 3 == 2 {
        return if a > 2 && b > 2 {
            DeltaSign::Positive
        } else {
            DeltaSign::Negative
        };
    }
    DeltaSign::Negative
}

/// Certified negative-side threshold for pairs with a == b == 1 (mod 3):
/// the ceiling of -6 + 9(a+b) + ((a+b)/2 + 2)/3 * log_{9/8}((a+b-2)/3).
/// The delta is negative at every rank past the returned value; these
/// witnesses grow without bound in a + b.
pub fn witness_threshold(a: u32, b: u32) -> Result<u32> {
    if a % 3 != 1 || b % 3 != 1 || b <= 1 {
        return Err(Error::WitnessResidue { a, b });
    }
    let s = (a + b) as f64;
    let raw = -6.0 + 9.0 * s + (s / 2.0 + 2.0) / 3.0 * log98((s - 2.0) / 3.0);
    Ok(raw.ceil() as u32)
}

/// Smallest floor L such that every pair with L <= lo <= hi <= a_max has a
/// strictly positive delta at the given rank. Window-limited and therefore
/// not certified: a violation past a_max would raise it.
pub fn empirical_stable_floor(ell: u32, a_max: u32) -> Result<u32> {
    let report = scan_exceptions(ell, a_max)?;
    let worst = report
        .zero_pairs
        .iter()
        .chain(report.negative_pairs.iter())
        .map(|&(lo, _)| lo)
        .max();
    Ok(match worst {
        Some(lo) => lo + 1,
        None => 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn delta_examples() {
        assert_eq!(delta(2, 6, 2), BigInt::zero());
        assert_eq!(delta(3, 3, 2), BigInt::from(-2));
        for (a, b) in [(2u32, 2u32), (5, 9), (3, 7)] {
            assert!(delta(a, b, 1).is_zero());
        }
    }

    #[test]
    fn delta_is_symmetric() {
        for ell in [2u32, 3, 7] {
            for (a, b) in [(2u32, 5u32), (3, 8), (4, 9)] {
                assert_eq!(delta(a, b, ell), delta(b, a, ell));
            }
        }
    }

    #[test]
    fn scan_exceptions_window_10() {
        let r = scan_exceptions(2, 10).unwrap();
        let negs: BTreeSet<(u32, u32)> = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 5)]
            .into_iter()
            .collect();
        let zeros: BTreeSet<(u32, u32)> = [(2, 6), (2, 7), (3, 4)].into_iter().collect();
        assert_eq!(r.negative_pairs, negs);
        assert_eq!(r.zero_pairs, zeros);

        let r4 = scan_exceptions(4, 10).unwrap();
        let negs4: BTreeSet<(u32, u32)> = [
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 3),
            (3, 4),
            (3, 5),
            (3, 7),
        ]
        .into_iter()
        .collect();
        assert_eq!(r4.negative_pairs, negs4);

        let r10 = scan_exceptions(10, 10).unwrap();
        let negs10: BTreeSet<(u32, u32)> = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5)]
            .into_iter()
            .collect();
        assert_eq!(r10.negative_pairs, negs10);
    }

    #[test]
    fn profile_3_3_stabilizes_at_18() {
        let p = sign_profile(3, 3, None).unwrap();
        assert_eq!(p.stable_from, 18);
        assert_eq!(p.final_sign(), DeltaSign::Positive);
        for ell in 2..=17 {
            assert_eq!(p.sign_at(ell), DeltaSign::Negative);
        }
        assert_eq!(p.entry(), "+_18");
        assert!(p.certificate.is_certified());
    }

    #[test]
    fn profile_2_7_has_zero_then_flip() {
        let p = sign_profile(2, 7, None).unwrap();
        assert_eq!(p.sign_at(2), DeltaSign::Zero);
        for ell in 3..=18 {
            assert_eq!(p.sign_at(ell), DeltaSign::Positive);
        }
        assert_eq!(p.sign_at(19), DeltaSign::Negative);
        assert_eq!(p.final_sign(), DeltaSign::Negative);
        assert_eq!(p.entry(), "-_19*");
    }

    #[test]
    fn profile_3_7_has_negative_window() {
        let p = sign_profile(3, 7, None).unwrap();
        for ell in [2u32, 3] {
            assert_eq!(p.sign_at(ell), DeltaSign::Positive);
        }
        for ell in 4..=7 {
            assert_eq!(p.sign_at(ell), DeltaSign::Negative);
        }
        assert_eq!(p.sign_at(8), DeltaSign::Positive);
        assert_eq!(p.entry(), "+_8*");
    }

    #[test]
    fn uncovered_pair_is_empirical() {
        let p = sign_profile(2, 2, None).unwrap();
        assert!(!p.certificate.is_certified());
        assert_eq!(p.checked_to, EMPIRICAL_CAP);
        assert_eq!(p.entry(), "-_2");
        let deeper = sign_profile(2, 2, Some(250)).unwrap();
        assert_eq!(deeper.checked_to, 250);
    }

    #[test]
    fn theorem_bound_examples() {
        let cb = theorem_bound(3, 3).unwrap();
        assert_eq!(cb.case, CaseTag::BothDiv3);
        assert_eq!(cb.sign, DeltaSign::Positive);
        assert_eq!(cb.ell_star, 39);

        let cb = theorem_bound(12, 2).unwrap();
        assert_eq!(cb.case, CaseTag::B2Div3);
        assert_eq!(cb.sign, DeltaSign::Positive);

        let cb = theorem_bound(4, 4).unwrap();
        assert_eq!(cb.case, CaseTag::Res1Res1);
        assert_eq!(cb.sign, DeltaSign::Negative);
        assert!((77.0..=81.0).contains(&(cb.ell_star as f64)));

        assert!(theorem_bound(2, 2).is_none());
    }

    #[test]
    fn theorem_bound_is_symmetric() {
        for (a, b) in [(2u32, 8u32), (3, 10), (4, 5), (6, 2), (5, 10)] {
            let x = theorem_bound(a, b).unwrap();
            let y = theorem_bound(b, a).unwrap();
            assert_eq!(x.case, y.case);
            assert_eq!(x.ell_star, y.ell_star);
            assert_eq!(x.sign, y.sign);
        }
    }

    #[test]
    fn witness_threshold_examples() {
        assert_eq!(witness_threshold(4, 4).unwrap(), 78);
        assert!(witness_threshold(3, 4).is_err());
        let w47 = witness_threshold(4, 7).unwrap();
        let w77 = witness_threshold(7, 7).unwrap();
        assert!(78 < w47 && w47 < w77);
    }

    #[test]
    fn eventual_sign_examples() {
        assert_eq!(eventual_sign(6, 9), DeltaSign::Positive);
        assert_eq!(eventual_sign(4, 7), DeltaSign::Negative);
        assert_eq!(eventual_sign(5, 8), DeltaSign::Positive);
        assert_eq!(eventual_sign(2, 3), DeltaSign::Negative);
        assert_eq!(eventual_sign(3, 4), DeltaSign::Negative);
        assert_eq!(eventual_sign(2, 5), DeltaSign::Negative);
    }

    #[test]
    fn empirical_floor_window_20() {
        // worst offender with both entries <= 20 is (3, 5)
        assert_eq!(empirical_stable_floor(2, 20).unwrap(), 4);
    }
}
