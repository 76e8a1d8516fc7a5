//! The three ways of producing ξ_{L,S} must agree, and the partitions they
//! come from must have the predicted census.

use std::collections::HashSet;

use lsseq_core::ls::{block_points, direct_enumeration, fast_points};
use lsseq_core::numeric::counts;
use lsseq_core::partition::{ls_partition, ls_partition_capped, RefinementRule, DEFAULT_TIE_TOLERANCE};
use lsseq_core::{solve_beta, LSParams};

const PAIRS: [(i64, i64); 6] = [(1, 1), (2, 1), (1, 2), (3, 1), (4, 1), (5, 1)];

fn params(l: i64, s: i64) -> LSParams {
    solve_beta(l, s).unwrap()
}

#[test]
fn block_fast_direct_agree_at_depth_eight() {
    for (l, s) in PAIRS {
        let p = params(l, s);
        let t = counts(&p, 8).unwrap().t as usize;
        let block = block_points(&p, 8).unwrap();
        let fast = fast_points(&p, t).unwrap();
        let direct = direct_enumeration(&p, t).unwrap();
        assert_eq!(block.len(), t);
        assert_eq!(block.exact, fast.exact, "({l},{s}) block vs fast");
        assert_eq!(fast.exact, direct.exact, "({l},{s}) fast vs direct");
        for i in 0..t {
            assert!((block.points[i] - fast.points[i]).abs() <= 1e-12);
            assert!((fast.points[i] - direct.points[i]).abs() <= 1e-12);
        }
    }
}

const MATERIALIZE_LIMIT: u64 = 4_000_000;

/// Tallies interval lengths against βⁿ and βⁿ⁺¹, returning (long, short).
fn classify(lengths: impl Iterator<Item = (f64, u64)>, p: &LSParams, n: u32) -> (u64, u64) {
    let long = p.beta().powi(n as i32);
    let short = long * p.beta();
    let (mut nl, mut ns) = (0u64, 0u64);
    for (len, mult) in lengths {
        assert!(
            (len - long).abs() <= 1e-9 || (len - short).abs() <= 1e-9,
            "({},{}) n={n}: stray length {len}",
            p.l(),
            p.s()
        );
        // Deep lengths are far below 1e-9, so classify relatively.
        if (len - long).abs() <= 1e-6 * long {
            nl += mult;
        } else if (len - short).abs() <= 1e-6 * short {
            ns += mult;
        } else {
            panic!("({},{}) n={n}: {len} is neither βⁿ nor βⁿ⁺¹", p.l(), p.s());
        }
    }
    (nl, ns)
}

/// Applies the refinement rule to a length histogram instead of positions,
/// for partitions too large to hold in memory.
fn refine_histogram(hist: &[(f64, u64)], rule: &RefinementRule) -> Vec<(f64, u64)> {
    let max = hist.iter().map(|&(h, _)| h).fold(0.0, f64::max);
    let threshold = max - DEFAULT_TIE_TOLERANCE * max;
    let mut out: Vec<(f64, u64)> = Vec::new();
    let mut push = |len: f64, mult: u64| match out.iter_mut().find(|(h, _)| (h - len).abs() <= 1e-12 * len) {
        Some(slot) => slot.1 += mult,
        None => out.push((len, mult)),
    };
    for &(h, mult) in hist {
        if h >= threshold {
            for &f in rule.fractions() {
                push(h * f, mult);
            }
        } else {
            push(h, mult);
        }
    }
    out
}

#[test]
fn partition_census_matches_recurrence() {
    for (l, s) in PAIRS {
        let p = params(l, s);
        let rule = RefinementRule::ls(&p);
        let mut hist = vec![(1.0, 1u64)];
        for n in 0..=12 {
            let c = counts(&p, n).unwrap();
            if n > 0 {
                hist = refine_histogram(&hist, &rule);
            }
            let total: u64 = hist.iter().map(|&(_, m)| m).sum();
            assert_eq!(total, c.t, "({l},{s}) n={n} histogram");
            assert_eq!(classify(hist.iter().copied(), &p, n), (c.l, c.s), "({l},{s}) n={n} histogram");

            if c.t <= MATERIALIZE_LIMIT {
                let part = ls_partition_capped(&p, n, MATERIALIZE_LIMIT).unwrap();
                assert_eq!(part.len() as u64, c.t, "({l},{s}) n={n}");
                let counted = classify(part.lengths().into_iter().map(|h| (h, 1)), &p, n);
                assert_eq!(counted, (c.l, c.s), "({l},{s}) n={n}");
            }
        }
    }
}

#[test]
fn each_block_is_the_next_partition() {
    for (l, s) in PAIRS {
        let p = params(l, s);
        for depth in 0..=7 {
            let mut block = block_points(&p, depth).unwrap().points;
            block.sort_by(f64::total_cmp);
            let lefts = ls_partition(&p, depth).unwrap().lefts().to_vec();
            assert_eq!(block.len(), lefts.len());
            for (a, b) in block.iter().zip(&lefts) {
                assert!((a - b).abs() <= 1e-12, "({l},{s}) depth {depth}");
            }
        }
    }
}

#[test]
fn prefixes_are_stable() {
    for (l, s) in PAIRS {
        let p = params(l, s);
        let long = fast_points(&p, 500).unwrap();
        for n in [1, 2, 7, 100, 499] {
            let short = fast_points(&p, n).unwrap();
            assert_eq!(short.exact[..], long.exact[..n]);
        }
    }
}

#[test]
fn ten_thousand_points_distinct_and_routes_agree() {
    for (l, s) in PAIRS {
        let p = params(l, s);
        let fast = fast_points(&p, 10_000).unwrap();
        let direct = direct_enumeration(&p, 10_000).unwrap();
        assert_eq!(fast.exact, direct.exact, "({l},{s})");
        let distinct: HashSet<u64> = fast.points.iter().map(|x| x.to_bits()).collect();
        assert_eq!(distinct.len(), 10_000, "({l},{s})");
        assert!(fast.points.iter().all(|x| (0.0..1.0).contains(x)));
    }
}
