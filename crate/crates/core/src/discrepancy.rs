//! Exact extreme and star discrepancy in one and two dimensions.
//!
//! The supremum over half-open boxes is approached, never attained, so every
//! candidate box is evaluated twice at the critical coordinates: once with the
//! points on its boundary excluded (the box grows towards the next point from
//! below, which maximises `volume − count/N`) and once with them included (the
//! box shrinks onto the points from above, which maximises
//! `count/N − volume`). Ties between coordinates need no special handling.
//!
//! [`naive`] holds brute-force versions that count points box by box. They
//! serve as oracles for the fast routes and for the `--oracle` CLI mode.

use alloc::vec::Vec;

use crate::numeric::CompensatedSum;
use crate::pointset::{PointSet1D, PointSet2D};
use crate::{Error, Result};

/// Largest set accepted by [`star_discrepancy_2d`].
pub const MAX_POINTS_2D: usize = 20_000;

/// Whether the points on the boundary of the witness are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    /// Boundary points included: the supremum is the limit of boxes shrinking
    /// onto the closed box.
    Closed,
    /// Boundary points excluded: the limit of boxes growing towards the open
    /// box.
    Open,
}

/// Box at which the supremum is realised.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Witness {
    /// `[0, c)` in one dimension.
    Anchored { c: f64, edge: Edge },
    /// `[a, b)` in one dimension.
    Interval { a: f64, b: f64, edge: Edge },
    /// `[0, b₁) × [0, b₂)`.
    AnchoredBox { b1: f64, b2: f64, edge: Edge },
    /// `[a₁, b₁) × [a₂, b₂)`.
    Box { a: [f64; 2], b: [f64; 2], edge: Edge },
}

/// A supremum and the box attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub value: f64,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyReport {
    pub n: usize,
    pub d_star: f64,
    pub d_extreme: Option<f64>,
    pub star_witness: Witness,
    pub extreme_witness: Option<Witness>,
    /// Points on the right x-edge were counted inside boxes with `b₁ = 1`.
    pub closed_right_x: bool,
}

fn sorted(points: &[f64]) -> Vec<f64> {
    let mut xs = points.to_vec();
    xs.sort_by(f64::total_cmp);
    xs
}

/// Star discrepancy of a one-dimensional set:
/// `max_i max(i/N − x₍ᵢ₎, x₍ᵢ₎ − (i−1)/N)` over the order statistics.
pub fn star_discrepancy_1d(points: &[f64]) -> Result<Extremum> {
    PointSet1D::new(points.to_vec(), "").validate()?;
    Ok(star_sorted(&sorted(points)))
}

fn star_sorted(xs: &[f64]) -> Extremum {
    let n = xs.len() as f64;
    let mut best = Extremum { value: 0.0, witness: Witness::Anchored { c: 1.0, edge: Edge::Open } };
    for (k, &x) in xs.iter().enumerate() {
        let i = (k + 1) as f64;
        let over = i / n - x;
        if over > best.value {
            best = Extremum { value: over, witness: Witness::Anchored { c: x, edge: Edge::Closed } };
        }
        let under = x - (i - 1.0) / n;
        if under > best.value {
            best = Extremum { value: under, witness: Witness::Anchored { c: x, edge: Edge::Open } };
        }
    }
    best
}

/// Extreme discrepancy, the supremum over all `[a, b) ⊆ [0, 1)`.
///
/// With sorted points, an over-full interval is the closed `[x₍ᵢ₎, x₍ⱼ₎]`,
/// worth `(j/N − x₍ⱼ₎) + (x₍ᵢ₎ − (i−1)/N)`; an under-full one is the open
/// `(x₍ᵢ₎, x₍ⱼ₎)`, worth `(x₍ⱼ₎ − (j−1)/N) − (x₍ᵢ₎ − i/N)`, with sentinels
/// standing for the ends 0 and 1. Both split into a running maximum, so the
/// scan is linear after sorting.
///
/// Intervals that tie in exact arithmetic can differ by an ulp once rounded,
/// and the scan keeps only one of them. Up to [`EXACT_PAIRS_1D`] points every
/// pair of distinct coordinates is evaluated instead, which makes the result
/// bit-identical to [`naive::extreme_1d`].
pub fn extreme_discrepancy_1d(points: &[f64]) -> Result<Extremum> {
    PointSet1D::new(points.to_vec(), "").validate()?;
    Ok(extreme_discrepancy_sorted(&sorted(points)))
}

/// Largest set for which the 1D extreme discrepancy tries every interval.
pub const EXACT_PAIRS_1D: usize = 4096;

pub(crate) fn extreme_discrepancy_sorted(xs: &[f64]) -> Extremum {
    if xs.len() <= EXACT_PAIRS_1D {
        extreme_all_pairs(xs)
    } else {
        extreme_scan(xs)
    }
}

/// Every critical interval, each worth `count/N − length` or
/// `length − count/N` exactly as the oracle computes it.
fn extreme_all_pairs(xs: &[f64]) -> Extremum {
    let n = xs.len() as f64;
    // distinct values with the first and last sorted index holding them
    let mut runs: Vec<(f64, usize, usize)> = Vec::new();
    for (k, &x) in xs.iter().enumerate() {
        match runs.last_mut() {
            Some(run) if run.0 == x => run.2 = k,
            _ => runs.push((x, k, k)),
        }
    }
    let mut best = Extremum { value: 0.0, witness: Witness::Interval { a: 0.0, b: 1.0, edge: Edge::Open } };
    let mut offer = |value: f64, a: f64, b: f64, edge: Edge| {
        if value > best.value {
            best = Extremum { value, witness: Witness::Interval { a, b, edge } };
        }
    };
    for (p, &(a, first_a, last_a)) in runs.iter().enumerate() {
        for &(b, _, last_b) in &runs[p..] {
            offer((last_b - first_a + 1) as f64 / n - (b - a), a, b, Edge::Closed);
        }
        offer((xs.len() - first_a) as f64 / n - (1.0 - a), a, 1.0, Edge::Closed);

        for &(b, first_b, _) in &runs[p + 1..] {
            offer((b - a) - (first_b - last_a - 1) as f64 / n, a, b, Edge::Open);
        }
        offer((1.0 - a) - (xs.len() - last_a - 1) as f64 / n, a, 1.0, Edge::Open);
    }
    // intervals starting at 0, closed on the left; [0, 1) itself is worth 0
    for &(b, first_b, _) in runs.iter().filter(|r| r.0 > 0.0) {
        offer((b - 0.0) - first_b as f64 / n, 0.0, b, Edge::Open);
    }
    best
}

fn extreme_scan(xs: &[f64]) -> Extremum {
    let len = xs.len();
    let n = len as f64;
    let idx = |k: usize| (k + 1) as f64;

    // The scan picks the winning interval; its value is then recomputed as
    // `count/N − length`, the same expression the naive oracle evaluates.

    // over-full: best left end so far, by x_i - (i-1)/N
    let mut over = (f64::NEG_INFINITY, 0usize, 0usize);
    let mut best_left = (f64::NEG_INFINITY, 0usize);
    for (k, &x) in xs.iter().enumerate() {
        let left = x - (idx(k) - 1.0) / n;
        if left > best_left.0 {
            best_left = (left, k);
        }
        let value = (idx(k) / n - x) + best_left.0;
        if value > over.0 {
            over = (value, best_left.1, k);
        }
    }
    let (i, j) = (over.1, over.2);
    let over = Extremum {
        value: (j - i + 1) as f64 / n - (xs[j] - xs[i]),
        witness: Witness::Interval { a: xs[i], b: xs[j], edge: Edge::Closed },
    };

    // under-full: minimise x_i - i/N over left ends; `None` is the end a = 0
    // and `len` stands for the end b = 1
    let mut under = (0.0, None, len);
    let mut best_right = (0.0, None);
    for (k, &x) in xs.iter().enumerate() {
        let value = (x - (idx(k) - 1.0) / n) - best_right.0;
        if value > under.0 {
            under = (value, best_right.1, k);
        }
        let e = x - idx(k) / n;
        if e < best_right.0 {
            best_right = (e, Some(k));
        }
    }
    if -best_right.0 > under.0 {
        under = (-best_right.0, best_right.1, len);
    }
    let (a, inside_from) = match under.1 {
        Some(i) => (xs[i], i + 1),
        None => (0.0, 0),
    };
    let b = xs.get(under.2).copied().unwrap_or(1.0);
    let under = Extremum {
        value: (b - a) - (under.2 - inside_from) as f64 / n,
        witness: Witness::Interval { a, b, edge: Edge::Open },
    };

    if over.value >= under.value {
        over
    } else {
        under
    }
}

/// Star and extreme discrepancy of a one-dimensional set.
pub fn report_1d(set: &PointSet1D) -> Result<DiscrepancyReport> {
    set.validate()?;
    let xs = sorted(&set.points);
    let star = star_sorted(&xs);
    let extreme = extreme_discrepancy_sorted(&xs);
    Ok(DiscrepancyReport {
        n: xs.len(),
        d_star: star.value,
        d_extreme: Some(extreme.value),
        star_witness: star.witness,
        extreme_witness: Some(extreme.witness),
        closed_right_x: false,
    })
}

/// Distinct values in increasing order, with 1 appended if absent.
fn critical(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut v: Vec<f64> = values.collect();
    v.sort_by(f64::total_cmp);
    v.dedup();
    if v.last() != Some(&1.0) {
        v.push(1.0);
    }
    v
}

/// Exact star discrepancy over anchored boxes `[0, b₁) × [0, b₂)`.
///
/// Sweeps `b₁` over the distinct x-coordinates (and 1). The points left of
/// the sweep line are tallied per y-rank, so each column costs one prefix
/// scan for the open count and, after admitting the points on the line, one
/// for the closed count: `O(N²)` in total.
pub fn star_discrepancy_2d(set: &PointSet2D) -> Result<Extremum> {
    set.validate()?;
    if set.len() > MAX_POINTS_2D {
        return Err(Error::TooManyPoints { count: set.len(), limit: MAX_POINTS_2D });
    }
    let n = set.len() as f64;
    let xs = critical(set.xs());
    let ys = critical(set.ys());
    let rank = |y: f64| ys.binary_search_by(|v| v.total_cmp(&y)).expect("y is critical");

    let mut by_x: Vec<(f64, usize)> = set.points.iter().map(|p| (p[0], rank(p[1]))).collect();
    by_x.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut tally = alloc::vec![0u32; ys.len()];
    let mut next = 0;
    let mut best =
        Extremum { value: f64::NEG_INFINITY, witness: Witness::AnchoredBox { b1: 1.0, b2: 1.0, edge: Edge::Open } };
    for &b1 in &xs {
        // open count: points with x < b1 and y < b2
        let mut below = 0u32;
        for (r, &b2) in ys.iter().enumerate() {
            let value = b1 * b2 - f64::from(below) / n;
            if value > best.value {
                best = Extremum { value, witness: Witness::AnchoredBox { b1, b2, edge: Edge::Open } };
            }
            below += tally[r];
        }
        while next < by_x.len() && by_x[next].0 <= b1 {
            tally[by_x[next].1] += 1;
            next += 1;
        }
        // closed count: points with x <= b1 and y <= b2
        let mut upto = 0u32;
        for (r, &b2) in ys.iter().enumerate() {
            upto += tally[r];
            let value = f64::from(upto) / n - b1 * b2;
            if value > best.value {
                best = Extremum { value, witness: Witness::AnchoredBox { b1, b2, edge: Edge::Closed } };
            }
        }
    }
    Ok(best)
}

pub fn report_2d(set: &PointSet2D) -> Result<DiscrepancyReport> {
    let star = star_discrepancy_2d(set)?;
    Ok(DiscrepancyReport {
        n: set.len(),
        d_star: star.value,
        d_extreme: None,
        star_witness: star.witness,
        extreme_witness: None,
        closed_right_x: set.closed_right_x,
    })
}

/// `|(1/N) Σ exp(2πi·h·xₙ)|`.
pub fn weyl_sum(points: &[f64], h: i64) -> Result<f64> {
    if h == 0 {
        return Err(Error::ZeroFrequency);
    }
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut re = CompensatedSum::default();
    let mut im = CompensatedSum::default();
    for &x in points {
        // reduce h·x mod 1 first so large h keeps its accuracy
        let t = h as f64 * x;
        let frac = t - libm::floor(t);
        let angle = 2.0 * core::f64::consts::PI * frac;
        re.add(libm::cos(angle));
        im.add(libm::sin(angle));
    }
    let n = points.len() as f64;
    Ok(libm::hypot(re.total(), im.total()) / n)
}

/// Brute-force discrepancies that count points box by box.
pub mod naive {
    use super::*;

    /// Largest set accepted by [`extreme_2d`].
    pub const MAX_POINTS_EXTREME_2D: usize = 32;

    /// Star discrepancy from explicit counts over `c ∈ {xᵢ} ∪ {1}`, open and
    /// closed.
    pub fn star_1d(points: &[f64]) -> Result<f64> {
        PointSet1D::new(points.to_vec(), "").validate()?;
        let n = points.len() as f64;
        let mut best = 0.0f64;
        for c in critical(points.iter().copied()) {
            let open = points.iter().filter(|&&x| x < c).count() as f64;
            let closed = points.iter().filter(|&&x| x <= c).count() as f64;
            best = best.max(c - open / n).max(closed / n - c);
        }
        Ok(best)
    }

    /// Extreme discrepancy from explicit counts over every critical interval.
    pub fn extreme_1d(points: &[f64]) -> Result<f64> {
        PointSet1D::new(points.to_vec(), "").validate()?;
        let n = points.len() as f64;
        let coords = critical(points.iter().copied());
        let mut best = 0.0f64;
        // over-full: [a, b] with a <= b both point coordinates
        for &a in &coords {
            for &b in coords.iter().filter(|&&b| b >= a) {
                let count = points.iter().filter(|&&x| a <= x && x <= b).count() as f64;
                best = best.max(count / n - (b - a));
            }
        }
        // under-full: left end 0 (inclusive) or just past a coordinate
        let lefts = core::iter::once((0.0, true)).chain(coords.iter().map(|&a| (a, false)));
        for (a, inclusive) in lefts {
            for &b in coords.iter().filter(|&&b| b > a) {
                let count = points.iter().filter(|&&x| (x > a || (inclusive && x == a)) && x < b).count() as f64;
                best = best.max((b - a) - count / n);
            }
        }
        Ok(best)
    }

    /// Star discrepancy by counting every anchored critical box directly,
    /// `O(N³)`.
    pub fn star_2d(set: &PointSet2D) -> Result<f64> {
        set.validate()?;
        let n = set.len() as f64;
        let xs = critical(set.xs());
        let ys = critical(set.ys());
        let mut best = f64::NEG_INFINITY;
        for &b1 in &xs {
            for &b2 in &ys {
                let open = set.points.iter().filter(|p| p[0] < b1 && p[1] < b2).count() as u32;
                let closed = set.points.iter().filter(|p| p[0] <= b1 && p[1] <= b2).count() as u32;
                best = best.max(b1 * b2 - f64::from(open) / n);
                best = best.max(f64::from(closed) / n - b1 * b2);
            }
        }
        Ok(best)
    }

    /// Extreme discrepancy over all boxes `[a₁, b₁) × [a₂, b₂)`, `O(N⁵)`;
    /// small sets only.
    pub fn extreme_2d(set: &PointSet2D) -> Result<f64> {
        set.validate()?;
        if set.len() > MAX_POINTS_EXTREME_2D {
            return Err(Error::TooManyPoints { count: set.len(), limit: MAX_POINTS_EXTREME_2D });
        }
        let n = set.len() as f64;
        let axes = [critical(set.xs()), critical(set.ys())];
        let inside_closed = |p: &[f64; 2], a: [f64; 2], b: [f64; 2]| (0..2).all(|d| a[d] <= p[d] && p[d] <= b[d]);
        // open box with optional inclusive left edge at 0; right edge 1 is closed
        let inside_open = |p: &[f64; 2], a: [(f64, bool); 2], b: [f64; 2]| {
            (0..2).all(|d| {
                let left = p[d] > a[d].0 || (a[d].1 && p[d] == a[d].0);
                let right = p[d] < b[d] || (b[d] == 1.0 && p[d] == 1.0);
                left && right
            })
        };
        let mut best = 0.0f64;
        for &a1 in &axes[0] {
            for &b1 in axes[0].iter().filter(|&&b| b >= a1) {
                for &a2 in &axes[1] {
                    for &b2 in axes[1].iter().filter(|&&b| b >= a2) {
                        let count = set.points.iter().filter(|p| inside_closed(p, [a1, a2], [b1, b2])).count();
                        best = best.max(count as f64 / n - (b1 - a1) * (b2 - a2));
                    }
                }
            }
        }
        let lefts = |axis: &Vec<f64>| -> Vec<(f64, bool)> {
            core::iter::once((0.0, true)).chain(axis.iter().map(|&a| (a, false))).collect()
        };
        let (l1, l2) = (lefts(&axes[0]), lefts(&axes[1]));
        for &a1 in &l1 {
            for &b1 in axes[0].iter().filter(|&&b| b > a1.0) {
                for &a2 in &l2 {
                    for &b2 in axes[1].iter().filter(|&&b| b > a2.0) {
                        let count = set.points.iter().filter(|p| inside_open(p, [a1, a2], [b1, b2])).count();
                        best = best.max((b1 - a1.0) * (b2 - a2.0) - count as f64 / n);
                    }
                }
            }
        }
        Ok(best)
    }
}
