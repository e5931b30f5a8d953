//! Worker-pool scans. Work items are distributed round-robin, each worker
//! owns its own count tables, and results are reassembled in input order,
//! so the output bytes never depend on scheduling or worker count.

use commuting_tuples::error::Result;
use commuting_tuples::{bo, DeltaSign};

use crate::records::{ExceptionRecord, FloorRecord, ThresholdRecord, SCHEMA_VERSION};

/// Applies `f` to every item on `workers` threads, preserving input order.
pub fn ordered_parallel<I, O, F>(items: Vec<I>, workers: usize, f: F) -> Vec<O>
where
    I: Send + Sync,
    O: Send,
    F: Fn(&I) -> O + Sync,
{
    assert!(workers >= 1);
    if workers == 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let mut slots: Vec<Option<O>> = (0..items.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let chunks: Vec<(usize, &[I])> = {
            let per = items.len().div_ceil(workers);
            items.chunks(per).enumerate().collect()
        };
        let mut handles = Vec::new();
        for (chunk_idx, chunk) in chunks {
            let f = &f;
            handles.push(scope.spawn(move || {
                let outs: Vec<O> = chunk.iter().map(f).collect();
                (chunk_idx, outs)
            }));
        }
        let per = items.len().div_ceil(workers);
        for h in handles {
            let (chunk_idx, outs) = h.join().expect("scan worker panicked");
            for (i, o) in outs.into_iter().enumerate() {
                slots[chunk_idx * per + i] = Some(o);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("slot filled")).collect()
}

fn class_name(sign: DeltaSign) -> &'static str {
    match sign {
        DeltaSign::Zero => "zero",
        DeltaSign::Negative => "negative",
        DeltaSign::Positive => "positive",
    }
}

/// Exception scan over ranks; rows ordered lexicographically by
/// (ell, a, b).
pub fn scan_exceptions(ells: &[u32], a_max: u32, workers: usize) -> Result<Vec<ExceptionRecord>> {
    let reports = ordered_parallel(ells.to_vec(), workers, |&ell| {
        bo::scan_exceptions(ell, a_max)
    });
    let mut rows = Vec::new();
    for report in reports {
        let report = report?;
        let mut pairs: Vec<(u32, u32, DeltaSign)> = report
            .zero_pairs
            .iter()
            .map(|&(a, b)| (a, b, DeltaSign::Zero))
            .chain(
                report
                    .negative_pairs
                    .iter()
                    .map(|&(a, b)| (a, b, DeltaSign::Negative)),
            )
            .collect();
        pairs.sort_unstable_by_key(|&(a, b, _)| (a, b));
        rows.extend(pairs.into_iter().map(|(a, b, sign)| ExceptionRecord {
            schema_version: SCHEMA_VERSION,
            record: "exception".to_string(),
            ell: report.ell,
            a,
            b,
            class: class_name(sign).to_string(),
        }));
    }
    Ok(rows)
}

pub fn threshold_record(profile: &bo::SignProfile) -> ThresholdRecord {
    let (certified, case, ell_star) = match &profile.certificate {
        bo::Certificate::Certified { ell_star, case } => {
            (true, Some(case.to_string()), Some(*ell_star))
        }
        bo::Certificate::EmpiricalOnly { .. } => (false, None, None),
    };
    ThresholdRecord {
        schema_version: SCHEMA_VERSION,
        record: "threshold".to_string(),
        a: profile.a,
        b: profile.b,
        entry: profile.entry(),
        stable_from: profile.stable_from,
        final_sign: profile.final_sign().glyph().to_string(),
        checked_to: profile.checked_to,
        certified,
        case,
        ell_star,
        runs: profile
            .runs
            .iter()
            .map(|&(sign, len)| (sign.glyph().to_string(), len))
            .collect(),
    }
}

/// Sign-profile scan over all pairs 2 <= a <= b <= a_max, ordered by
/// (a, b).
pub fn scan_thresholds(
    a_max: u32,
    ell_cap: Option<u32>,
    workers: usize,
) -> Result<Vec<ThresholdRecord>> {
    let mut pairs = Vec::new();
    for a in 2..=a_max {
        for b in a..=a_max {
            pairs.push((a, b));
        }
    }
    let profiles = ordered_parallel(pairs, workers, |&(a, b)| bo::sign_profile(a, b, ell_cap));
    let mut rows = Vec::with_capacity(profiles.len());
    for p in profiles {
        rows.push(threshold_record(&p?));
    }
    Ok(rows)
}

/// Window-limited positivity floors per rank, ordered by ell.
pub fn scan_floors(ells: &[u32], a_max: u32, workers: usize) -> Result<Vec<FloorRecord>> {
    let floors = ordered_parallel(ells.to_vec(), workers, |&ell| {
        bo::empirical_stable_floor(ell, a_max).map(|floor| (ell, floor))
    });
    let mut rows = Vec::new();
    for f in floors {
        let (ell, floor) = f?;
        rows.push(FloorRecord {
            schema_version: SCHEMA_VERSION,
            record: "empirical-floor".to_string(),
            ell,
            a_max,
            floor,
            certified: false,
        });
    }
    Ok(rows)
}
