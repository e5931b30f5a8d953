//! Acceptance suite: every gate criterion as one test with one PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! All comparisons are exact; there are no tolerances anywhere.

use std::collections::BTreeSet;

use num_traits::Signed;

use commuting_tuples::arith::{self, BigRat};
use commuting_tuples::counts::{composition_oracle, euler_oracle, CountTable};
use commuting_tuples::{asymptotics, bo, census, golden};
use commuting_tuples::{BigInt, DeltaSign};

fn pairs(list: &[(u32, u32)]) -> BTreeSet<(u32, u32)> {
    list.iter().copied().collect()
}

#[test]
fn criterion_01_table1_exact_reproduction() {
    let report = golden::verify_table1().unwrap();
    assert_eq!(report.cells, 33);
    assert!(report.passed(), "diffs: {:?}", report.diffs);
    // spot value named in the gate
    assert_eq!(commuting_tuples::n_ell(4, 9), BigInt::from(13859));
    println!("PASS criterion 1: table1 bit-exact (33 cells)");
}

#[test]
fn criterion_02_zero_and_negative_pair_sets_window_100() {
    let report = bo::scan_exceptions(2, 100).unwrap();
    assert_eq!(
        report.zero_pairs,
        pairs(&[(2, 6), (2, 7), (3, 4)]),
        "zero pairs"
    );
    assert_eq!(
        report.negative_pairs,
        pairs(&[(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 5)]),
        "negative pairs"
    );
    println!("PASS criterion 2: rank-2 zero/negative sets over window 100");
}

#[test]
fn criterion_03_table2_reproduction_window_100() {
    // Set equality over the window also certifies that no new pair appears
    // anywhere in 8..=100.
    for (ell, golden_negatives) in golden::table2_rows() {
        let report = bo::scan_exceptions(ell, 100).unwrap();
        assert_eq!(
            report.negative_pairs, golden_negatives,
            "negative set at ell = {ell}"
        );
        if ell >= 3 {
            assert!(
                report.zero_pairs.is_empty(),
                "unexpected zero pairs at ell = {ell}: {:?}",
                report.zero_pairs
            );
        }
    }
    println!("PASS criterion 3: table2 rows for ranks 2..=10 over window 100");
}

#[test]
fn criterion_04_table3_rendered_reproduction() {
    let report = golden::verify_table3().unwrap();
    assert_eq!(report.cells, 54);
    assert!(report.passed(), "diffs: {:?}", report.diffs);
    // spot ratio named in the gate
    let rows = asymptotics::ratio_table(100, &[50]).unwrap();
    assert_eq!(rows[0].ratio_rendered, "0.070245595");
    println!("PASS criterion 4: table3 renderings exact (18 rows x 3 cells)");
}

#[test]
fn criterion_05_table4_sign_profiles() {
    let report = golden::verify_table4().unwrap();
    assert_eq!(report.cells, 45);
    assert!(report.passed(), "diffs: {:?}", report.diffs);
    assert_eq!(golden::table4_starred_count(), 4);

    // the four starred histories and two plain thresholds named in the gate
    for (a, b, want) in [
        (2, 6, "+_3*"),
        (2, 7, "-_19*"),
        (3, 4, "-_3*"),
        (3, 7, "+_8*"),
        (10, 10, "-_59"),
        (3, 3, "+_18"),
    ] {
        assert_eq!(bo::sign_profile(a, b, None).unwrap().entry(), want);
    }
    println!("PASS criterion 5: table4 profiles (45 entries, 4 starred)");
}

#[test]
fn criterion_06_oracle_equivalence() {
    // recursion = Euler product = composition sum
    for ell in 2..=5u32 {
        let table = CountTable::new(ell, 20).unwrap();
        let coeffs = euler_oracle(ell, 20).unwrap();
        for n in 0..=20u32 {
            assert_eq!(table.value(n), &coeffs[n as usize], "euler ell={ell} n={n}");
            if n >= 1 {
                assert_eq!(
                    &composition_oracle(ell, n).unwrap(),
                    table.value(n),
                    "composition ell={ell} n={n}"
                );
            }
        }
    }
    // recursion = brute-force tuple enumeration
    for ell in 1..=3u32 {
        for n in 1..=5u32 {
            let c = census::brute_force_census(ell, n).unwrap();
            assert_eq!(c.scaled, commuting_tuples::n_ell(ell, n), "ell={ell} n={n}");
        }
    }
    println!("PASS criterion 6: recursion = Euler product = composition sum (ell<=5, n<=20); = census (ell<=3, n<=5)");
}

#[test]
fn criterion_07_closed_forms_and_remainder_identity() {
    for ell in 1..=12u32 {
        let table = CountTable::new(ell, 7).unwrap();
        for n in [2u32, 3, 4, 5, 7] {
            assert_eq!(
                &commuting_tuples::counts::closed_form(n, ell).unwrap(),
                table.value(n),
                "ell={ell} n={n}"
            );
        }
    }
    for ell in 2..=40u32 {
        let four = BigRat::from(BigInt::from(4));
        let two = BigRat::from(BigInt::from(2));
        let want = arith::rat(7, 6) * arith::pow_rat(&four, ell - 1)
            - arith::pow_rat(&two, ell - 1)
            + arith::rat(1, 12);
        assert_eq!(
            commuting_tuples::counts::remainder(commuting_tuples::counts::Remainder::R5, ell),
            want,
            "ell={ell}"
        );
    }
    println!("PASS criterion 7: closed forms (ell 1..=12) and exact R5 identity (ell 2..=40)");
}

#[test]
fn criterion_08_sandwich_and_envelope() {
    for ell in 2..=10u32 {
        let table = CountTable::new(ell, 60).unwrap();
        for n in 2..=60u32 {
            let count = BigRat::from(table.value(n).clone());
            assert!(
                asymptotics::lower(ell, n).unwrap() <= count,
                "lower bound ell={ell} n={n}"
            );
            assert!(
                count <= asymptotics::upper(ell, n).unwrap(),
                "upper bound ell={ell} n={n}"
            );
        }
        for n in 14..=40u32 {
            let count = BigRat::from(table.value(n).clone());
            let residue = count
                - asymptotics::leading(ell, n).unwrap()
                - asymptotics::subleading(ell, n).unwrap();
            let envelope = BigRat::from(
                arith::partition(n)
                    * arith::pow_big(&asymptotics::next_subleading_base(n).unwrap(), ell - 1),
            );
            assert!(residue.abs() <= envelope, "envelope ell={ell} n={n}");
        }
    }
    println!("PASS criterion 8: sandwich (ell<=10, n<=60) and three-term envelope (14<=n<=40)");
}

/// Sample covering every certified case: the attached b=2/b=4 shapes, all
/// residue shapes, and the individually-quoted small pairs.
const BOUND_SAMPLE: [(u32, u32); 18] = [
    (3, 3),
    (6, 9),
    (3, 7),
    (4, 4),
    (4, 7),
    (5, 8),
    (4, 5),
    (12, 2),
    (12, 4),
    (8, 2),
    (3, 5),
    (3, 2),
    (3, 4),
    (5, 2),
    (6, 2),
    (6, 4),
    (9, 2),
    (9, 4),
];

#[test]
fn criterion_09_certified_bounds_hold_at_and_past_threshold() {
    let mut seen = std::collections::HashSet::new();
    for (a, b) in BOUND_SAMPLE {
        let bound = bo::theorem_bound(a, b)
            .unwrap_or_else(|| panic!("({a},{b}) should be covered by a certified case"));
        seen.insert(std::mem::discriminant(&bound.case));
        for ell in [
            bound.ell_star,
            bound.ell_star + 1,
            bound.ell_star + 7,
            bound.ell_star + 25,
        ] {
            let d = bo::delta(a, b, ell);
            assert_eq!(
                DeltaSign::of(&d),
                bound.sign,
                "({a},{b}) at ell={ell}, case {}",
                bound.case
            );
        }
    }
    // 9 structural cases + the special-pair case
    assert_eq!(seen.len(), 10, "sample must cover every case shape");
    println!(
        "PASS criterion 9: certified signs verified at ell*, ell*+1, ell*+7, ell*+25 for {} pairs",
        BOUND_SAMPLE.len()
    );
}

#[test]
fn criterion_10_witness_thresholds_demonstrate_unbounded_negativity() {
    let mut previous = 0u32;
    for (a, b) in [(4u32, 4u32), (4, 7), (7, 7), (7, 10)] {
        let witness = bo::witness_threshold(a, b).unwrap();
        assert!(
            witness > previous,
            "witness must grow strictly with a+b: ({a},{b}) gave {witness} after {previous}"
        );
        previous = witness;

        let d = bo::delta(a, b, witness);
        assert!(
            d.is_negative(),
            "delta({a},{b}) at rank {witness} must be negative"
        );

        // each of these pairs starts with a positive stretch before flipping
        let profile = bo::sign_profile(a, b, None).unwrap();
        assert_eq!(profile.runs[0].0, DeltaSign::Positive, "({a},{b})");
        assert!(profile.runs[0].1 >= 1);
        assert_eq!(profile.final_sign(), DeltaSign::Negative);
    }
    println!("PASS criterion 10: witness thresholds negative and strictly increasing in a+b");
}

// ---- supporting invariants required alongside the gate ----

#[test]
fn eventual_signs_match_profiles_on_the_grid() {
    for a in 2..=10u32 {
        for b in a..=10u32 {
            let profile = bo::sign_profile(a, b, None).unwrap();
            assert_eq!(profile.final_sign(), bo::eventual_sign(a, b), "({a},{b})");
        }
    }
}

#[test]
fn table3_ratios_are_nondecreasing_within_unit_interval() {
    let rows = asymptotics::ratio_table(100, &golden::TABLE3_ELLS).unwrap();
    let mut prev = BigRat::new(BigInt::from(0), BigInt::from(1));
    for row in rows {
        let ratio = &row.leading / BigRat::from(row.count.clone());
        assert!(ratio > BigRat::new(BigInt::from(0), BigInt::from(1)));
        assert!(ratio <= BigRat::new(BigInt::from(1), BigInt::from(1)));
        assert!(ratio >= prev, "ratio must not decrease (ell = {})", row.ell);
        prev = ratio;
    }
}

/// The published stabilization grid prints -_59 for (8,10); exact
/// arithmetic puts the flip one rank earlier. Both the recursion and the
/// independent Euler-product route agree, so the embedded golden carries
/// -_58 and this test pins the two ranks around the flip.
#[test]
fn pair_8_10_flips_at_rank_58_by_two_routes() {
    for ell in [57u32, 58] {
        let table = CountTable::new(ell, 18).unwrap();
        let coeffs = euler_oracle(ell, 18).unwrap();
        for n in 0..=18u32 {
            assert_eq!(
                table.value(n),
                &coeffs[n as usize],
                "routes at ell={ell} n={n}"
            );
        }
        let delta = bo::delta_in(&table, 8, 10);
        if ell == 57 {
            assert!(delta.is_positive(), "rank 57 is still positive");
        } else {
            assert!(delta.is_negative(), "rank 58 is already negative");
        }
    }
}
