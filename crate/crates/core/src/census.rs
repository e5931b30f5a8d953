//! Brute-force enumeration of commuting permutation tuples.
//!
//! This is the ground-truth oracle: it literally walks tuples of
//! permutations and counts the ones that pairwise commute. A partial tuple
//! is only ever extended by permutations that commute with everything chosen
//! so far, so the walk visits the centralizer intersection lattice instead
//! of all |S_n|^ell tuples.

use num_bigint::BigInt;

use crate::arith;
use crate::error::{Error, Result};

/// Enumeration guard: at most this many letters.
pub const CENSUS_MAX_N: u32 = 5;
/// Enumeration guard: at most this many tuple slots.
pub const CENSUS_MAX_ELL: u32 = 3;

/// Raw and scaled result of a direct tuple count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingTupleCensus {
    pub ell: u32,
    pub n: u32,
    /// Number of commuting ell-tuples, i.e. |Hom(Z^ell, S_n)|.
    pub raw_count: BigInt,
    /// raw_count / n!, always an exact integer.
    pub scaled: BigInt,
}

fn permutations(n: u32) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut items: Vec<u8> = (0..n as u8).collect();
    // Heap's algorithm, iterative
    let mut c = vec![0usize; n as usize];
    out.push(items.clone());
    let mut i = 0;
    while i < n as usize {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(items.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn commutes(a: &[u8], b: &[u8]) -> bool {
    (0..a.len()).all(|i| a[b[i] as usize] == b[a[i] as usize])
}

/// Counts commuting `ell`-tuples in the symmetric group on n letters by
/// enumeration with centralizer pruning, and checks the n! scaling.
pub fn brute_force_census(ell: u32, n: u32) -> Result<CommutingTupleCensus> {
    assert!(ell >= 1 && n >= 1);
    if ell > CENSUS_MAX_ELL || n > CENSUS_MAX_N {
        return Err(Error::CensusTooLarge {
            ell,
            n,
            max_ell: CENSUS_MAX_ELL,
            max_n: CENSUS_MAX_N,
        });
    }
    let perms = permutations(n);

    fn walk(perms: &[Vec<u8>], candidates: &[usize], slots_left: u32) -> u64 {
        if slots_left == 0 {
            return 1;
        }
        let mut total = 0u64;
        for &chosen in candidates {
            if slots_left == 1 {
                // every remaining candidate closes a tuple
                total += 1;
                continue;
            }
            let narrowed: Vec<usize> = candidates
                .iter()
                .copied()
                .filter(|&other| commutes(&perms[chosen], &perms[other]))
                .collect();
            total += walk(perms, &narrowed, slots_left - 1);
        }
        total
    }

    let all: Vec<usize> = (0..perms.len()).collect();
    let raw = walk(&perms, &all, ell);
    let raw_count = BigInt::from(raw);
    let scaled = arith::exact_div(raw_count.clone(), &arith::factorial(n));
    Ok(CommutingTupleCensus {
        ell,
        n,
        raw_count,
        scaled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::n_ell;

    #[test]
    fn census_examples() {
        let c = brute_force_census(2, 3).unwrap();
        assert_eq!(c.raw_count, BigInt::from(18));
        assert_eq!(c.scaled, BigInt::from(3));

        let c = brute_force_census(1, 4).unwrap();
        assert_eq!(c.raw_count, BigInt::from(24));
        assert_eq!(c.scaled, BigInt::from(1));

        let c = brute_force_census(3, 3).unwrap();
        assert_eq!(c.raw_count, BigInt::from(48));
        assert_eq!(c.scaled, BigInt::from(8));
    }

    #[test]
    fn census_agrees_with_recursion_up_to_guard() {
        for ell in 1..=CENSUS_MAX_ELL {
            for n in 1..=CENSUS_MAX_N {
                let c = brute_force_census(ell, n).unwrap();
                assert_eq!(c.scaled, n_ell(ell, n), "ell={ell} n={n}");
                assert_eq!(c.raw_count, c.scaled * arith::factorial(n));
            }
        }
    }

    #[test]
    fn census_refuses_past_guard() {
        assert!(matches!(
            brute_force_census(4, 3),
            Err(Error::CensusTooLarge { .. })
        ));
        assert!(matches!(
            brute_force_census(2, 6),
            Err(Error::CensusTooLarge { .. })
        ));
    }

    #[test]
    fn permutation_generator_is_complete() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        let unique: std::collections::HashSet<_> = ps.iter().collect();
        assert_eq!(unique.len(), 24);
    }
}
