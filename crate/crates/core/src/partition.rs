//! ρ-refinement of partitions of `[0, 1)`.
//!
//! A partition is kept as its sorted left endpoints; the right endpoint of the
//! last interval is 1. Refining splits every interval of maximal length
//! homothetically according to a fixed pattern of fractions.

use alloc::vec;
use alloc::vec::Vec;

use crate::discrepancy;
use crate::numeric::{counts, offsets, LSParams};
use crate::{Error, Result};

/// Relative tolerance used to decide which intervals are "of maximal length".
pub const DEFAULT_TIE_TOLERANCE: f64 = 1e-9;

/// Default bound on the number of intervals a partition may hold.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    lefts: Vec<f64>,
}

impl Partition {
    /// The trivial partition `{[0, 1)}`.
    pub fn trivial() -> Self {
        Self { lefts: vec![0.0] }
    }

    pub fn from_lefts(lefts: Vec<f64>) -> Result<Self> {
        let ok = lefts.first() == Some(&0.0)
            && lefts.windows(2).all(|w| w[0] < w[1])
            && lefts.last().is_some_and(|&x| x < 1.0);
        if ok {
            Ok(Self { lefts })
        } else {
            Err(Error::InvalidRule)
        }
    }

    pub fn lefts(&self) -> &[f64] {
        &self.lefts
    }

    pub fn len(&self) -> usize {
        self.lefts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lefts.is_empty()
    }

    /// Interval lengths, in order.
    pub fn lengths(&self) -> Vec<f64> {
        self.lefts.iter().zip(self.lefts.iter().skip(1).chain(core::iter::once(&1.0))).map(|(a, b)| b - a).collect()
    }

    pub fn intervals(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.lefts.iter().copied().zip(self.lefts.iter().skip(1).copied().chain(core::iter::once(1.0)))
    }

    /// Whether every left endpoint of `self` is also one of `finer`.
    pub fn is_refined_by(&self, finer: &Partition) -> bool {
        let mut j = 0;
        self.lefts.iter().all(|&x| {
            while j < finer.lefts.len() && finer.lefts[j] < x {
                j += 1;
            }
            j < finer.lefts.len() && finer.lefts[j] == x
        })
    }
}

/// Homothetic subdivision pattern: an interval `[a, a + h)` is split into
/// pieces of lengths `h·f₀, h·f₁, …`.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinementRule {
    fractions: Vec<f64>,
}

impl RefinementRule {
    pub fn new(fractions: Vec<f64>) -> Result<Self> {
        let sum: f64 = fractions.iter().sum();
        let ok =
            !fractions.is_empty() && fractions.iter().all(|&f| f > 0.0 && f <= 1.0) && libm::fabs(sum - 1.0) <= 1e-12;
        if ok {
            Ok(Self { fractions })
        } else {
            Err(Error::InvalidRule)
        }
    }

    /// `L` copies of β followed by `S` copies of β².
    pub fn ls(params: &LSParams) -> Self {
        let b = params.beta();
        let mut fractions = vec![b; params.l() as usize];
        fractions.extend(core::iter::repeat_n(b * b, params.s() as usize));
        Self { fractions }
    }

    /// Kakutani's `{α, 1 − α}`.
    pub fn kakutani(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(Self { fractions: vec![alpha, 1.0 - alpha] })
    }

    pub fn fractions(&self) -> &[f64] {
        &self.fractions
    }
}

/// Splits every interval whose length is within `tol · max` of the maximal
/// length; the others are copied unchanged.
pub fn refine(pi: &Partition, rho: &RefinementRule, tol: f64) -> Partition {
    let lengths = pi.lengths();
    let max = lengths.iter().copied().fold(0.0, f64::max);
    let threshold = max - tol * max;
    let offs = offsets(&rho.fractions);
    let mut lefts = Vec::with_capacity(pi.len() * rho.fractions.len());
    for (&a, &h) in pi.lefts.iter().zip(&lengths) {
        if h >= threshold {
            lefts.extend(offs.iter().map(|&o| a + h * o));
        } else {
            lefts.push(a);
        }
    }
    Partition { lefts }
}

/// `n`-fold refinement of the trivial partition by `rho`.
pub fn iterate(rho: &RefinementRule, n: u32, tol: f64) -> Partition {
    (0..n).fold(Partition::trivial(), |pi, _| refine(&pi, rho, tol))
}

/// The `n`-th LS-partition ρⁿ_{L,S}ω, guarded by `cap` on `t(n)`.
pub fn ls_partition_capped(params: &LSParams, n: u32, cap: u64) -> Result<Partition> {
    let needed = counts(params, n)?.t;
    if needed > cap {
        return Err(Error::CapExceeded { depth: n, needed, cap });
    }
    Ok(iterate(&RefinementRule::ls(params), n, DEFAULT_TIE_TOLERANCE))
}

pub fn ls_partition(params: &LSParams, n: u32) -> Result<Partition> {
    ls_partition_capped(params, n, DEFAULT_CAP)
}

/// The `n`-th Kakutani α-refinement of `[0, 1)`.
pub fn kakutani_partition(alpha: f64, n: u32) -> Result<Partition> {
    let rule = RefinementRule::kakutani(alpha)?;
    let mut pi = Partition::trivial();
    for depth in 1..=n {
        pi = refine(&pi, &rule, DEFAULT_TIE_TOLERANCE);
        if pi.len() as u64 > DEFAULT_CAP {
            return Err(Error::CapExceeded { depth, needed: pi.len() as u64, cap: DEFAULT_CAP });
        }
    }
    Ok(pi)
}

/// Extreme discrepancy of the left endpoints of `pi`.
pub fn partition_discrepancy(pi: &Partition) -> f64 {
    discrepancy::extreme_discrepancy_sorted(&pi.lefts).value
}
