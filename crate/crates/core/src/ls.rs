//! The LS point sequence ξ_{L,S} in van der Corput order.
//!
//! Three routes produce the same sequence:
//!
//! - [`block_points`] grows Λⁿ block by block, translating the first `l(n)`
//!   points (the left ends of the long intervals) by `iβⁿ⁺¹` and
//!   `Lβⁿ⁺¹ + jβⁿ⁺²`.
//! - [`fast_points`] walks the naturals, writes each in base `L + S`, keeps the
//!   admissible digit strings and maps digits to coefficients of powers of β.
//! - [`direct_enumeration`] produces only the admissible strings, in the same
//!   order, without rejecting anything.
//!
//! Every point carries its exact [`BetaPolynomial`] so the routes can be
//! compared without floating-point slack.

use alloc::vec::Vec;

use crate::numeric::{base_digits, counts, BetaPolynomial, DigitString, LSParams};
use crate::partition::DEFAULT_CAP;
use crate::{Error, Result};

/// Above this many points [`ls_points`] switches from digit filtering to
/// direct enumeration.
pub const DIRECT_THRESHOLD: usize = 1_000;

/// A prefix of ξ_{L,S}, with the exact value of every point.
#[derive(Debug, Clone, PartialEq)]
pub struct LSPointSeq {
    pub params: LSParams,
    pub points: Vec<f64>,
    pub exact: Vec<BetaPolynomial>,
}

impl LSPointSeq {
    fn with_capacity(params: LSParams, n: usize) -> Self {
        Self { params, points: Vec::with_capacity(n), exact: Vec::with_capacity(n) }
    }

    fn push(&mut self, poly: BetaPolynomial) {
        self.points.push(poly.eval(&self.params));
        self.exact.push(poly);
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A natural number together with its base-`(L+S)` digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleIndex {
    pub n: u64,
    pub digits: DigitString,
}

/// Admissibility of a little-endian digit string: no neighbouring pair
/// `(aᵢ, aᵢ₊₁)` with `aᵢ ≥ L` and `aᵢ₊₁ ≥ 1`.
///
/// A digit `≥ L` selects one of the maps onto the last long interval or a
/// short one; those maps are only defined on `[0, β)`, so the next more
/// significant digit must be 0.
pub fn is_admissible(digits: &DigitString, params: &LSParams) -> bool {
    admissible_slice(digits.digits(), params.l())
}

fn admissible_slice(digits: &[u32], l: u32) -> bool {
    digits.windows(2).all(|w| !(w[0] >= l && w[1] >= 1))
}

/// Λⁿ_{L,S}: the first `t(n)` points built block by block.
pub fn block_points(params: &LSParams, depth: u32) -> Result<LSPointSeq> {
    let total = counts(params, depth)?.t;
    if total > DEFAULT_CAP {
        return Err(Error::CapExceeded { depth, needed: total, cap: DEFAULT_CAP });
    }
    let (big_l, big_s) = (params.l(), params.s());
    let mut seq = LSPointSeq::with_capacity(*params, total as usize);
    seq.push(BetaPolynomial::zero());
    for k in 0..depth {
        let longs = counts(params, k)?.l as usize;
        let pos = k as usize;
        // φ_i adds iβ^{k+1}; φ_{L,j} adds Lβ^{k+1} + jβ^{k+2}
        let shifts = (1..=big_l).map(|i| (i, 0)).chain((1..big_s).map(|j| (big_l, j)));
        for coeff in shifts {
            for idx in 0..longs {
                let moved = seq.exact[idx].with_coeff(pos, coeff);
                seq.push(moved);
            }
        }
    }
    debug_assert_eq!(seq.len() as u64, total);
    Ok(seq)
}

/// The first `count` points by digit filtering: every natural is expanded in
/// base `L + S` and inadmissible strings are dropped.
pub fn fast_points(params: &LSParams, count: usize) -> Result<LSPointSeq> {
    if count == 0 {
        return Err(Error::EmptyPointSet);
    }
    let mut seq = LSPointSeq::with_capacity(*params, count);
    for index in admissible_indices(params).take(count) {
        seq.push(BetaPolynomial::from_ls_digits(index.digits.digits(), params));
    }
    Ok(seq)
}

/// Iterator over the admissible naturals `0, 1, …` in increasing order,
/// found by filtering.
pub fn admissible_indices(params: &LSParams) -> impl Iterator<Item = AdmissibleIndex> + '_ {
    let base = params.base();
    (0u64..).filter_map(move |n| {
        let digits = base_digits(n, base).expect("base >= 2");
        is_admissible(&digits, params).then_some(AdmissibleIndex { n, digits })
    })
}

/// Enumerates admissible digit strings in increasing numeric order without
/// rejection: length by length, most significant digit nonzero, after the
/// zero string.
///
/// Digits are held most-significant-first. Advancing increments the lowest
/// position that still has room under the pair constraint and resets the
/// positions below it to zero, which is always admissible.
#[derive(Debug, Clone)]
pub struct AdmissibleStrings {
    l: u32,
    base: u32,
    // most significant first
    msd_first: Vec<u32>,
    started: bool,
}

impl AdmissibleStrings {
    pub fn new(params: &LSParams) -> Self {
        Self { l: params.l(), base: params.base(), msd_first: Vec::new(), started: false }
    }

    fn max_digit(&self, pos: usize) -> u32 {
        // pos indexes msd_first; the more significant neighbour sits at pos - 1
        if pos > 0 && self.msd_first[pos - 1] >= 1 {
            self.l - 1
        } else {
            self.base - 1
        }
    }

    fn advance(&mut self) {
        if !self.started {
            self.started = true;
            self.msd_first.push(0);
            return;
        }
        for pos in (0..self.msd_first.len()).rev() {
            let cur = self.msd_first[pos];
            if cur < self.max_digit(pos) {
                self.msd_first[pos] = cur + 1;
                for d in &mut self.msd_first[pos + 1..] {
                    *d = 0;
                }
                return;
            }
        }
        let len = self.msd_first.len();
        self.msd_first.clear();
        self.msd_first.push(1);
        self.msd_first.resize(len + 1, 0);
    }

    /// Current string, little-endian.
    fn little_endian(&self) -> Vec<u32> {
        self.msd_first.iter().rev().copied().collect()
    }
}

impl Iterator for AdmissibleStrings {
    type Item = DigitString;

    fn next(&mut self) -> Option<DigitString> {
        self.advance();
        Some(DigitString::new(self.little_endian(), self.base).expect("digits below base"))
    }
}

/// The first `count` points by direct enumeration of admissible strings.
pub fn direct_enumeration(params: &LSParams, count: usize) -> Result<LSPointSeq> {
    if count == 0 {
        return Err(Error::EmptyPointSet);
    }
    let mut seq = LSPointSeq::with_capacity(*params, count);
    for digits in AdmissibleStrings::new(params).take(count) {
        seq.push(BetaPolynomial::from_ls_digits(digits.digits(), params));
    }
    Ok(seq)
}

/// The first `count` points of ξ_{L,S}, by the cheaper route for `count`.
pub fn ls_points(params: &LSParams, count: usize) -> Result<LSPointSeq> {
    if count > DIRECT_THRESHOLD {
        direct_enumeration(params, count)
    } else {
        fast_points(params, count)
    }
}
