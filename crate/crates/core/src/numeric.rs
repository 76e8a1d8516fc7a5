//! Scalar and integer foundations shared by every construction.
//!
//! An LS pair `(L, S)` splits the unit interval into `L` long intervals of
//! length β and `S` short intervals of length β², where β is the positive
//! root of `Lβ + Sβ² = 1`. The digit machinery here works in base `L + S`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// The pair `(L, S)` together with its derived root β.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LSParams {
    l: u32,
    s: u32,
    beta: f64,
}

impl LSParams {
    /// Number of long intervals.
    pub fn l(&self) -> u32 {
        self.l
    }

    /// Number of short intervals.
    pub fn s(&self) -> u32 {
        self.s
    }

    /// Length of a long interval of the first partition.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Digit base of the fast algorithm, `L + S`.
    pub fn base(&self) -> u32 {
        self.l + self.s
    }

    /// `|Lβ + Sβ² − 1|`.
    pub fn residual(&self) -> f64 {
        let b = self.beta;
        libm::fabs(f64::from(self.l) * b + f64::from(self.s) * b * b - 1.0)
    }

    /// Exponent `1 + log(Sβ)/log β` that governs the discrepancy decay when
    /// `S > L + 1`. Reported as a diagnostic only.
    pub fn gamma(&self) -> f64 {
        1.0 + libm::log(f64::from(self.s) * self.beta) / libm::log(self.beta)
    }
}

impl core::fmt::Display for LSParams {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{})", self.l, self.s)
    }
}

/// Builds [`LSParams`] for `(L, S)`.
///
/// β is taken from the closed form `(−L + √(L² + 4S)) / 2S` and then polished
/// with one Newton step on `Sβ² + Lβ − 1`, which removes the cancellation
/// error of the closed form for large `L`.
pub fn solve_beta(l: i64, s: i64) -> Result<LSParams> {
    if l < 1 || s < 1 || l > i64::from(u32::MAX / 2) || s > i64::from(u32::MAX / 2) {
        return Err(Error::InvalidLs { l, s });
    }
    let (lf, sf) = (l as f64, s as f64);
    let mut beta = (-lf + libm::sqrt(lf * lf + 4.0 * sf)) / (2.0 * sf);
    let f = sf * beta * beta + lf * beta - 1.0;
    let df = 2.0 * sf * beta + lf;
    let polished = beta - f / df;
    // keep the Newton step only when it does not make things worse
    let res = |b: f64| libm::fabs(lf * b + sf * b * b - 1.0);
    if res(polished) <= res(beta) {
        beta = polished;
    }
    Ok(LSParams { l: l as u32, s: s as u32, beta })
}

/// Interval census of the `n`-th LS-partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountTriple {
    /// Total number of intervals.
    pub t: u64,
    /// Long intervals (length βⁿ).
    pub l: u64,
    /// Short intervals (length βⁿ⁺¹).
    pub s: u64,
    pub n: u32,
}

/// Counts of the `n`-th LS-partition, with checked arithmetic.
///
/// `l(n) = L·l(n−1) + s(n−1)` and `s(n) = S·l(n−1)`, starting from the
/// trivial partition `(l, s) = (1, 0)`.
pub fn counts(params: &LSParams, n: u32) -> Result<CountTriple> {
    let (big_l, big_s) = (u64::from(params.l), u64::from(params.s));
    let (mut l, mut s) = (1u64, 0u64);
    for depth in 1..=n {
        let overflow = Error::CountOverflow { depth };
        let next_l = big_l.checked_mul(l).and_then(|v| v.checked_add(s)).ok_or(overflow.clone())?;
        let next_s = big_s.checked_mul(l).ok_or(overflow.clone())?;
        next_l.checked_add(next_s).ok_or(overflow)?;
        l = next_l;
        s = next_s;
    }
    Ok(CountTriple { t: l + s, l, s, n })
}

/// Little-endian digits of a natural number: `digits[0]` is the least
/// significant digit of `n`, which becomes the first digit after the radix
/// point once the representation is mirrored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: Vec<u32>,
    base: u32,
}

impl DigitString {
    /// Wraps raw little-endian digits. Trailing (most significant) zeros are
    /// trimmed; an empty or all-zero input becomes the canonical `[0]`.
    pub fn new(mut digits: Vec<u32>, base: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidBase(u64::from(base)));
        }
        if let Some(&bad) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::InvalidBase(u64::from(bad)));
        }
        while digits.len() > 1 && digits.last() == Some(&0) {
            digits.pop();
        }
        if digits.is_empty() {
            digits.push(0);
        }
        Ok(Self { digits, base })
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Reconstructs `Σ aᵢ bⁱ`, or `None` on overflow.
    pub fn value(&self) -> Option<u64> {
        self.digits
            .iter()
            .rev()
            .try_fold(0u64, |acc, &d| acc.checked_mul(u64::from(self.base))?.checked_add(u64::from(d)))
    }
}

/// Base-`b` digits of `n`, least significant first.
///
/// Loops until the quotient vanishes instead of sizing the buffer with
/// `⌊log n / log b⌋ + 1`, which misjudges `n` close to a power of `b`.
pub fn base_digits(mut n: u64, base: u32) -> Result<DigitString> {
    if base < 2 {
        return Err(Error::InvalidBase(u64::from(base)));
    }
    let b = u64::from(base);
    let mut digits = Vec::with_capacity(8);
    loop {
        digits.push((n % b) as u32);
        n /= b;
        if n == 0 {
            break;
        }
    }
    Ok(DigitString { digits, base })
}

/// Radical inverse `φ_b(n) = Σ aᵢ b^{−i−1}`.
///
/// Evaluated by Horner's rule from the most significant digit of `n` (the
/// smallest power of `1/b`) towards `a₀`, so the order of the floating-point
/// operations is fixed.
pub fn radical_inverse(n: u64, base: u32) -> Result<f64> {
    if base < 2 {
        return Err(Error::InvalidBase(u64::from(base)));
    }
    Ok(radical_inverse_unchecked(n, base))
}

pub(crate) fn radical_inverse_unchecked(mut n: u64, base: u32) -> f64 {
    let b = u64::from(base);
    let bf = f64::from(base);
    let mut digits = [0u32; 64];
    let mut len = 0;
    while n > 0 {
        digits[len] = (n % b) as u32;
        n /= b;
        len += 1;
    }
    digits[..len].iter().rev().fold(0.0, |acc, &d| (acc + f64::from(d)) / bf)
}

/// A point of an LS-sequence written exactly as `Σ (pᵢ + qᵢβ) β^{i+1}`.
///
/// `coeffs[i] = (p, q)` multiplies `β^{i+1}`. Two points are the same point
/// iff their coefficient vectors agree after trimming trailing zero pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaPolynomial {
    coeffs: Vec<(u32, u32)>,
}

impl BetaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<(u32, u32)>) -> Self {
        while coeffs.last() == Some(&(0, 0)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Applies the LS digit map: a digit `d ≤ L` contributes `d`, a digit
    /// `L + k` contributes `L + kβ`.
    pub fn from_ls_digits(digits: &[u32], params: &LSParams) -> Self {
        let l = params.l;
        Self::from_coeffs(digits.iter().map(|&d| if d <= l { (d, 0) } else { (l, d - l) }).collect())
    }

    pub fn coeffs(&self) -> &[(u32, u32)] {
        &self.coeffs
    }

    /// Sets the coefficient of `β^{pos+1}`, growing the vector as needed.
    pub fn with_coeff(&self, pos: usize, coeff: (u32, u32)) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() <= pos {
            coeffs.resize(pos + 1, (0, 0));
        }
        coeffs[pos] = coeff;
        Self::from_coeffs(coeffs)
    }

    /// Double-precision value, Horner from the highest power down.
    pub fn eval(&self, params: &LSParams) -> f64 {
        let beta = params.beta;
        self.coeffs.iter().rev().fold(0.0, |acc, &(p, q)| (acc + f64::from(p) + f64::from(q) * beta) * beta)
    }
}

/// Free-function form of [`BetaPolynomial::eval`].
pub fn eval_beta_poly(poly: &BetaPolynomial, params: &LSParams) -> f64 {
    poly.eval(params)
}

/// The first sixteen primes.
pub const PRIMES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Compensated (Neumaier) running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Cumulative offsets `0, f₀, f₀+f₁, …` of a subdivision pattern, without the
/// final 1.
pub(crate) fn offsets(fractions: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; fractions.len()];
    let mut acc = CompensatedSum::default();
    for (slot, &f) in out.iter_mut().zip(fractions) {
        *slot = acc.total();
        acc.add(f);
    }
    out
}
