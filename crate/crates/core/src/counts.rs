//! The scaled homomorphism count: the number of `ell`-tuples of pairwise
//! commuting permutations in the symmetric group on n letters, divided
//! by n!.
//!
//! The production route is the divisor-driven recursion
//!
//! ```text
//! N(n) = (1/n) * sum_{k=1..n} g(k) * N(n-k),    N(0) = 1,
//! ```
//!
//! where g(k) counts index-k subgroups of the rank-`ell` lattice. Three
//! independent oracles live alongside it: a truncated Euler-product
//! expansion, an ordered-composition sum, and (for tiny inputs) direct
//! enumeration over permutation tuples in [`crate::census`]. Exact closed
//! forms exist for n in {2, 3, 4, 5, 7} and are exposed with their
//! remainder terms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{self, BigRat};
use crate::error::{Error, Result};
use crate::subgroups;

/// Largest n accepted by [`composition_oracle`]; the enumeration walks all
/// 2^(n-1) ordered compositions.
pub const COMPOSITION_MAX: u32 = 25;

/// Memoized per-rank table of scaled homomorphism counts N(0..=n_max)
/// together with the subgroup counts g(1..=n_max) that drive the recursion.
///
/// Extending the table never changes existing entries. Construction is
/// single-writer; a finished table is immutable and safe to share across
/// threads.
#[derive(Debug, Clone)]
pub struct CountTable {
    ell: u32,
    values: Vec<BigInt>,
    g_values: Vec<BigInt>,
}

impl CountTable {
    pub fn new(ell: u32, n_max: u32) -> Result<Self> {
        assert!(ell >= 1);
        let mut table = CountTable {
            ell,
            values: vec![BigInt::one()],
            g_values: Vec::new(),
        };
        table.extend_to(n_max)?;
        Ok(table)
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn n_max(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// N(n) for n <= n_max.
    pub fn value(&self, n: u32) -> &BigInt {
        &self.values[n as usize]
    }

    /// g(n) for 1 <= n <= n_max.
    pub fn subgroup_count(&self, n: u32) -> &BigInt {
        assert!(n >= 1, "subgroup counts start at index 1");
        &self.g_values[n as usize - 1]
    }

    /// Fills entries up to `n_max`, leaving anything already computed
    /// untouched.
    pub fn extend_to(&mut self, n_max: u32) -> Result<()> {
        for k in (self.g_values.len() as u32 + 1)..=n_max {
            self.g_values.push(subgroups::count(self.ell, k as u64)?);
        }
        for n in (self.values.len() as u32)..=n_max {
            // Accumulate in integers; the sum is provably divisible by n,
            // and the exact division asserts it.
            let mut acc = BigInt::zero();
            for k in 1..=n {
                acc += &self.g_values[k as usize - 1] * &self.values[(n - k) as usize];
            }
            self.values.push(arith::exact_div(acc, &BigInt::from(n)));
        }
        Ok(())
    }
}

/// Scaled count of commuting `ell`-tuples in the symmetric group on n
/// letters. Builds a fresh table; use [`CountTable`] directly when scanning.
pub fn n_ell(ell: u32, n: u32) -> BigInt {
    CountTable::new(ell, n)
        .expect("desk-scale n stays far below the factorization cap")
        .value(n)
        .clone()
}

/// Coefficients 0..=n_max of the truncated Euler product
/// prod_{k>=1} (1 - t^k)^(-g_(ell-1)(k)).
///
/// Each factor is expanded through the binomial series (the coefficient of
/// t^(k*j) is C(g+j-1, j)) and multiplied into the running product, so this
/// path shares nothing with the recursion except the subgroup counts.
pub fn euler_oracle(ell: u32, n_max: u32) -> Result<Vec<BigInt>> {
    assert!(ell >= 2);
    let len = n_max as usize + 1;
    let mut coeffs = vec![BigInt::zero(); len];
    coeffs[0] = BigInt::one();
    for k in 1..=n_max {
        let g = subgroups::count(ell - 1, k as u64)?;
        // coefficients of (1 - t^k)^(-g) up to degree n_max
        let mut factor = Vec::new();
        let mut c = BigInt::one();
        let mut j = 0u32;
        while (k * j) as usize <= n_max as usize {
            factor.push(c.clone());
            // C(g+j, j+1) = C(g+j-1, j) * (g+j) / (j+1), exactly divisible
            c = arith::exact_div(c * (&g + j), &BigInt::from(j + 1));
            j += 1;
        }
        let mut next = vec![BigInt::zero(); len];
        for (i, ci) in coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, fj) in factor.iter().enumerate() {
                let deg = i + j * k as usize;
                if deg >= len {
                    break;
                }
                next[deg] += ci * fj;
            }
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// The ordered-composition sum
/// sum_{k=1..n} sum_{m_1+..+m_k=n} (1/k!) * g(m_1)...g(m_k) / (m_1...m_k),
/// accumulated in exact rationals and asserted integral.
///
/// Enumerates every ordered composition with no symmetry reduction, so the
/// cost is 2^(n-1) leaf visits; refused above [`COMPOSITION_MAX`].
pub fn composition_oracle(ell: u32, n: u32) -> Result<BigInt> {
    assert!(ell >= 1 && n >= 1);
    if n > COMPOSITION_MAX {
        return Err(Error::CompositionTooLarge {
            n,
            max: COMPOSITION_MAX,
        });
    }
    // g(m)/m for each possible part m
    let mut part_weight = Vec::with_capacity(n as usize);
    for m in 1..=n {
        part_weight.push(BigRat::new(
            subgroups::count(ell, m as u64)?,
            BigInt::from(m),
        ));
    }

    fn walk(
        part_weight: &[BigRat],
        remaining: u32,
        parts_so_far: u32,
        product: BigRat,
        by_part_count: &mut [BigRat],
    ) {
        if remaining == 0 {
            by_part_count[parts_so_far as usize] += product;
            return;
        }
        for m in 1..=remaining {
            walk(
                part_weight,
                remaining - m,
                parts_so_far + 1,
                &product * &part_weight[m as usize - 1],
                by_part_count,
            );
        }
    }

    let mut by_part_count = vec![BigRat::zero(); n as usize + 1];
    walk(&part_weight, n, 0, BigRat::one(), &mut by_part_count);

    let mut total = BigRat::zero();
    for (k, s) in by_part_count.iter().enumerate().skip(1) {
        total += s / BigRat::from(arith::factorial(k as u32));
    }
    Ok(arith::expect_integer(total))
}

/// One monomial coefficient * base^(ell-1) of a closed form.
type Monomial = (i64, i64, u32); // (numerator, denominator, base)

const CLOSED_FORM_2: &[Monomial] = &[(1, 1, 2)];
const CLOSED_FORM_3: &[Monomial] = &[(1, 2, 3), (1, 1, 2), (-1, 2, 1)];
const CLOSED_FORM_4: &[Monomial] = &[(7, 6, 4), (1, 2, 3), (-1, 2, 2), (-1, 6, 1)];
const CLOSED_FORM_5: &[Monomial] = &[(1, 2, 6), (1, 4, 5), (7, 6, 4), (-1, 1, 2), (1, 12, 1)];
const CLOSED_FORM_7: &[Monomial] = &[
    (7, 12, 12),
    (1, 4, 10),
    (1, 8, 9),
    (5, 6, 8),
    (1, 6, 7),
    (1, 4, 6),
    (-13, 12, 4),
    (-1, 3, 3),
    (1, 6, 2),
    (1, 24, 1),
];

fn closed_form_monomials(n: u32) -> Result<&'static [Monomial]> {
    match n {
        2 => Ok(CLOSED_FORM_2),
        3 => Ok(CLOSED_FORM_3),
        4 => Ok(CLOSED_FORM_4),
        5 => Ok(CLOSED_FORM_5),
        7 => Ok(CLOSED_FORM_7),
        _ => Err(Error::UnsupportedClosedForm { n }),
    }
}

/// Exact closed form of the scaled count for n in {2, 3, 4, 5, 7}, e.g.
/// (7/6)4^(ell-1) + (1/2)3^(ell-1) - (1/2)2^(ell-1) - 1/6 for n = 4.
pub fn closed_form(n: u32, ell: u32) -> Result<BigInt> {
    assert!(ell >= 1);
    let mut acc = BigRat::zero();
    for &(num, den, base) in closed_form_monomials(n)? {
        acc += arith::rat(num, den) * arith::pow_rat(&BigRat::from(BigInt::from(base)), ell - 1);
    }
    Ok(arith::expect_integer(acc))
}

/// Which remainder to evaluate: the closed form for n = 4, 5, or 7 minus its
/// two leading monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Remainder {
    R4,
    R5,
    R7,
}

/// Exact remainder after stripping the two fastest-growing monomials from
/// the closed form:
/// R4 = N(4) - (7/6)4^(ell-1) - (1/2)3^(ell-1), and the n = 5, 7 analogues.
pub fn remainder(which: Remainder, ell: u32) -> BigRat {
    assert!(ell >= 2);
    let (n, leading): (u32, &[Monomial]) = match which {
        Remainder::R4 => (4, &[(7, 6, 4), (1, 2, 3)]),
        Remainder::R5 => (5, &[(1, 2, 6), (1, 4, 5)]),
        Remainder::R7 => (7, &[(7, 12, 12), (1, 4, 10)]),
    };
    let mut acc = BigRat::from(n_ell(ell, n));
    for &(num, den, base) in leading {
        acc -= arith::rat(num, den) * arith::pow_rat(&BigRat::from(BigInt::from(base)), ell - 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{pow_rat, rat};

    const TABLE1_ROW2: [u64; 11] = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    const TABLE1_ROW3: [u64; 11] = [1, 1, 4, 8, 21, 39, 92, 170, 360, 667, 1316];
    const TABLE1_ROW4: [u64; 11] = [1, 1, 8, 21, 84, 206, 717, 1810, 5462, 13859, 38497];

    #[test]
    fn recursion_reproduces_reference_rows() {
        for (ell, row) in [(2, TABLE1_ROW2), (3, TABLE1_ROW3), (4, TABLE1_ROW4)] {
            let t = CountTable::new(ell, 10).unwrap();
            for (n, want) in row.iter().enumerate() {
                assert_eq!(t.value(n as u32), &BigInt::from(*want), "ell={ell} n={n}");
            }
        }
    }

    #[test]
    fn n_ell_examples() {
        assert_eq!(n_ell(3, 4), BigInt::from(21));
        assert_eq!(n_ell(4, 10), BigInt::from(38497));
        for n in [0u32, 1, 5, 40] {
            assert_eq!(n_ell(1, n), BigInt::one());
        }
    }

    #[test]
    fn euler_oracle_examples() {
        let want: Vec<BigInt> = TABLE1_ROW2.iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(euler_oracle(2, 10).unwrap(), want);
        let want3: Vec<BigInt> = TABLE1_ROW3[..6].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(euler_oracle(3, 5).unwrap(), want3);
        assert_eq!(euler_oracle(5, 0).unwrap(), vec![BigInt::one()]);
    }

    #[test]
    fn composition_oracle_examples() {
        assert_eq!(composition_oracle(2, 3).unwrap(), BigInt::from(3));
        assert_eq!(composition_oracle(4, 2).unwrap(), BigInt::from(8));
        assert_eq!(composition_oracle(3, 6).unwrap(), BigInt::from(92));
    }

    #[test]
    fn composition_oracle_refuses_past_guard() {
        assert_eq!(
            composition_oracle(2, COMPOSITION_MAX + 1).unwrap_err(),
            Error::CompositionTooLarge {
                n: COMPOSITION_MAX + 1,
                max: COMPOSITION_MAX
            }
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(2, 5).unwrap(), BigInt::from(16));
        assert_eq!(closed_form(4, 4).unwrap(), BigInt::from(84));
        assert_eq!(closed_form(7, 3).unwrap(), BigInt::from(170));
        assert_eq!(
            closed_form(6, 2).unwrap_err(),
            Error::UnsupportedClosedForm { n: 6 }
        );
    }

    #[test]
    fn closed_forms_agree_with_recursion() {
        for ell in 1..=12 {
            let t = CountTable::new(ell, 7).unwrap();
            for n in [2u32, 3, 4, 5, 7] {
                assert_eq!(&closed_form(n, ell).unwrap(), t.value(n), "ell={ell} n={n}");
            }
        }
    }

    #[test]
    fn remainder_examples() {
        // N(4) at rank 2 minus 14/3 minus 3/2 = 5 - 37/6
        assert_eq!(remainder(Remainder::R4, 2), rat(-7, 6));
        // N(7) at rank 2 minus 7 minus 5/2
        assert_eq!(remainder(Remainder::R7, 2), rat(11, 2));
        for ell in 2..=10 {
            let two = BigRat::from(BigInt::from(2));
            let four = BigRat::from(BigInt::from(4));
            let want = rat(7, 6) * pow_rat(&four, ell - 1) - pow_rat(&two, ell - 1) + rat(1, 12);
            assert_eq!(remainder(Remainder::R5, ell), want, "ell={ell}");
        }
    }

    #[test]
    fn remainder_envelopes_to_40() {
        let two = BigRat::from(BigInt::from(2));
        let four = BigRat::from(BigInt::from(4));
        let nine = BigRat::from(BigInt::from(9));
        for ell in 2..=40u32 {
            let r4 = arith::rat_abs(&remainder(Remainder::R4, ell));
            let r5 = arith::rat_abs(&remainder(Remainder::R5, ell));
            let r7 = arith::rat_abs(&remainder(Remainder::R7, ell));
            assert!(r4 <= pow_rat(&two, ell), "ell={ell}");
            assert!(r5 <= rat(7, 6) * pow_rat(&four, ell - 1), "ell={ell}");
            assert!(r7 <= pow_rat(&nine, ell), "ell={ell}");
        }
    }

    #[test]
    fn extension_never_rewrites_entries() {
        let mut t = CountTable::new(3, 50).unwrap();
        let frozen: Vec<BigInt> = (0..=50).map(|n| t.value(n).clone()).collect();
        t.extend_to(100).unwrap();
        for (n, want) in frozen.iter().enumerate() {
            assert_eq!(t.value(n as u32), want);
        }
        assert_eq!(t.n_max(), 100);
    }

    #[test]
    fn recursion_is_integral_exhaustively() {
        // exact_div inside the table panics on any non-integral step
        for ell in 1..=10 {
            let t = CountTable::new(ell, 100).unwrap();
            assert!(t.value(100) > &BigInt::zero());
        }
    }
}
