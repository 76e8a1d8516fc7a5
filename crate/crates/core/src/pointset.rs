//! Ordered finite point sets shared by the discrepancy and QMC code.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Points on the unit interval, in generation order.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet1D {
    pub points: Vec<f64>,
    pub label: String,
}

impl PointSet1D {
    pub fn new(points: Vec<f64>, label: impl Into<String>) -> Self {
        Self { points, label: label.into() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Checks `N ≥ 1` and that every point lies in `[0, 1)`.
    pub fn validate(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        check_unit(self.points.iter().copied(), false)
    }
}

/// Points on the unit square.
///
/// Generators of the form `(n/N, …)` reach `x = 1` at `n = N`. Such sets keep
/// the point and set `closed_right_x`; a point at `x = 1` then counts as
/// inside every box whose right x-edge is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet2D {
    pub points: Vec<[f64; 2]>,
    pub label: String,
    pub closed_right_x: bool,
}

impl PointSet2D {
    pub fn new(points: Vec<[f64; 2]>, label: impl Into<String>) -> Self {
        Self { points, label: label.into(), closed_right_x: false }
    }

    pub fn closed_right(mut self, flag: bool) -> Self {
        self.closed_right_x = flag;
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        for (i, p) in self.points.iter().enumerate() {
            let x_ok = (0.0..1.0).contains(&p[0]) || (self.closed_right_x && p[0] == 1.0);
            if !x_ok {
                return Err(Error::OutOfRange { index: i, value: p[0] });
            }
            if !(0.0..1.0).contains(&p[1]) {
                return Err(Error::OutOfRange { index: i, value: p[1] });
            }
        }
        Ok(())
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p[0])
    }

    pub fn ys(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p[1])
    }
}

/// Points in `s` dimensions stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSetKD {
    dim: usize,
    data: Vec<f64>,
    pub label: String,
    pub closed_right_x: bool,
}

impl PointSetKD {
    pub(crate) fn from_rows(dim: usize, data: Vec<f64>, label: String) -> Self {
        debug_assert!(dim > 0 && data.len().is_multiple_of(dim));
        Self { dim, data, label, closed_right_x: false }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.data.chunks_exact(self.dim)
    }

    /// Two-dimensional view, if `dim == 2`.
    pub fn to_2d(&self) -> Option<PointSet2D> {
        (self.dim == 2).then(|| PointSet2D {
            points: self.rows().map(|r| [r[0], r[1]]).collect(),
            label: self.label.clone(),
            closed_right_x: self.closed_right_x,
        })
    }
}

fn check_unit(values: impl Iterator<Item = f64>, allow_one: bool) -> Result<()> {
    for (index, value) in values.enumerate() {
        if !((0.0..1.0).contains(&value) || (allow_one && value == 1.0)) {
            return Err(Error::OutOfRange { index, value });
        }
    }
    Ok(())
}
