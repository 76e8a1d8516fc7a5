//! Radical-inverse generators, Kronecker sequences and the two planar LS
//! constructions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::ls::ls_points;
use crate::numeric::{gcd, radical_inverse_unchecked, LSParams, PRIMES};
use crate::pointset::{PointSet1D, PointSet2D, PointSetKD};
use crate::{Error, Result};

/// How the `N` points of an order-`N` construction are indexed.
///
/// `OneBased` pairs `n = 1..N` with `x = n/N` and radical inverses of `n`;
/// the last point sits on `x = 1` and the set is flagged closed on the right.
/// `ZeroBased` uses `m = 0..N−1`, so `x = m/N` stays inside `[0, 1)` and the
/// radical inverses start at `φ(0) = 0`. LS sequences always start at
/// `ξ¹ = 0`, so their n-th point is the same under both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndexConvention {
    #[default]
    OneBased,
    ZeroBased,
}

impl IndexConvention {
    /// Index fed to the radical inverse for the k-th point, `k = 0..N`.
    fn index(self, k: usize) -> u64 {
        match self {
            Self::OneBased => k as u64 + 1,
            Self::ZeroBased => k as u64,
        }
    }

    /// `n/N` for the k-th point.
    fn abscissa(self, k: usize, n: usize) -> f64 {
        self.index(k) as f64 / n as f64
    }

    fn closed_right(self) -> bool {
        self == Self::OneBased
    }
}

fn need_points(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyPointSet)
    } else {
        Ok(())
    }
}

/// `φ₂(1), …, φ₂(N)`.
pub fn van_der_corput(n: usize) -> Result<PointSet1D> {
    need_points(n)?;
    let points = (1..=n as u64).map(|i| radical_inverse_unchecked(i, 2)).collect();
    Ok(PointSet1D::new(points, "vdc"))
}

/// The order-`N` van der Corput set `(n/N, φ₂(n))`.
pub fn vdc_2d(n: usize, conv: IndexConvention) -> Result<PointSet2D> {
    need_points(n)?;
    let points = (0..n).map(|k| [conv.abscissa(k, n), radical_inverse_unchecked(conv.index(k), 2)]).collect();
    Ok(PointSet2D::new(points, "vdc2d").closed_right(conv.closed_right()))
}

/// Halton rows `(φ_{b₁}(n), …, φ_{b_s}(n))`.
///
/// Bases must be pairwise coprime unless `allow_shared_factors` is set, which
/// exists to show how a shared factor destroys uniformity.
pub fn halton(n: usize, bases: &[u32], allow_shared_factors: bool, conv: IndexConvention) -> Result<PointSetKD> {
    need_points(n)?;
    if bases.is_empty() {
        return Err(Error::InvalidDimension { got: 0, min: 1, max: usize::MAX });
    }
    if let Some(&b) = bases.iter().find(|&&b| b < 2) {
        return Err(Error::InvalidBase(u64::from(b)));
    }
    if !allow_shared_factors {
        for (i, &a) in bases.iter().enumerate() {
            for &b in &bases[i + 1..] {
                if gcd(u64::from(a), u64::from(b)) != 1 {
                    return Err(Error::NonCoprimeBases { a, b });
                }
            }
        }
    }
    let mut data = Vec::with_capacity(n * bases.len());
    for k in 0..n {
        let idx = conv.index(k);
        data.extend(bases.iter().map(|&b| radical_inverse_unchecked(idx, b)));
    }
    Ok(PointSetKD::from_rows(bases.len(), data, format!("halton({})", join(bases))))
}

/// Hammersley rows `(n/N, φ_{p₁}(n), …, φ_{p_{s−1}}(n))` with `pⱼ` the j-th
/// prime.
pub fn hammersley(n: usize, dim: usize, conv: IndexConvention) -> Result<PointSetKD> {
    need_points(n)?;
    if !(2..=PRIMES.len() + 1).contains(&dim) {
        return Err(Error::InvalidDimension { got: dim, min: 2, max: PRIMES.len() + 1 });
    }
    let primes = &PRIMES[..dim - 1];
    let mut data = Vec::with_capacity(n * dim);
    for k in 0..n {
        data.push(conv.abscissa(k, n));
        let idx = conv.index(k);
        data.extend(primes.iter().map(|&b| radical_inverse_unchecked(idx, b)));
    }
    let mut set = PointSetKD::from_rows(dim, data, format!("hammersley{dim}"));
    set.closed_right_x = conv.closed_right();
    Ok(set)
}

/// The order-`N` LS set `(n/N, ξⁿ_{L,S})`, `ξ¹ = 0`.
pub fn ls_vdc_2d(params: &LSParams, n: usize, conv: IndexConvention) -> Result<PointSet2D> {
    need_points(n)?;
    let seq = ls_points(params, n)?;
    let points = (0..n).map(|k| [conv.abscissa(k, n), seq.points[k]]).collect();
    Ok(PointSet2D::new(points, format!("ls_vdc{params}")).closed_right(conv.closed_right()))
}

/// Pairs `(ξⁿ_{L₁,S₁}, ξⁿ_{L₂,S₂})` of two LS sequences.
pub fn ls_halton_2d(px: &LSParams, py: &LSParams, n: usize) -> Result<PointSet2D> {
    need_points(n)?;
    let xs = ls_points(px, n)?;
    let ys = ls_points(py, n)?;
    let points = xs.points.iter().zip(&ys.points).map(|(&x, &y)| [x, y]).collect();
    Ok(PointSet2D::new(points, format!("ls_halton{px}x{py}")))
}

/// Fractional parts `{nθ}`, `n = 1..N`. Rational θ is accepted.
pub fn kronecker(theta: f64, n: usize) -> Result<PointSet1D> {
    need_points(n)?;
    let points = (1..=n)
        .map(|i| {
            let t = i as f64 * theta;
            let f = t - libm::floor(t);
            // t just below an integer can round up to 1.0
            if f >= 1.0 {
                0.0
            } else {
                f
            }
        })
        .collect();
    Ok(PointSet1D::new(points, format!("kronecker({theta})")))
}

/// Smallest `k` with `t(k) = target` in the count sequence of `params`, if
/// one exists below the 64-bit range.
pub fn find_count_index(params: &LSParams, target: u64) -> Option<u32> {
    (0..)
        .map_while(|k| crate::numeric::counts(params, k).ok().map(|c| (k, c.t)))
        .take_while(|&(_, t)| t <= target)
        .find(|&(_, t)| t == target)
        .map(|(k, _)| k)
}

fn join(values: &[u32]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{v}"));
    }
    out
}
