//! LS-sequences of partitions and points on the unit interval, together with
//! the classical radical-inverse family (van der Corput, Halton, Hammersley),
//! exact one- and two-dimensional discrepancy, Weyl-sum diagnostics and
//! quasi-Monte Carlo estimates over the unit square.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, plotting and
//! the command line live in the `lsseq` crate.
//!
//! Module map:
//!
//! - [`numeric`]: the β-solver, interval-count recurrences, base-b digits,
//!   radical inverse and exact `p + qβ` coefficient polynomials.
//! - [`partition`]: ρ-refinement of partitions, Kakutani α-refinement and
//!   LS-partitions.
//! - [`ls`]: the LS point sequence, by block construction, by the digit
//!   filtering algorithm and by direct enumeration of admissible strings.
//! - [`classic`]: radical-inverse generators, Kronecker sequences and the two
//!   planar LS constructions.
//! - [`discrepancy`]: exact extreme and star discrepancy plus naive oracles.
//! - [`qmc`]: integrand registry, estimates, convergence studies and the
//!   reference integration table.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classic;
pub mod discrepancy;
mod error;
pub mod ls;
pub mod numeric;
pub mod partition;
pub mod pointset;
pub mod qmc;

pub use error::{Error, Result};
pub use numeric::{solve_beta, BetaPolynomial, CountTriple, DigitString, LSParams};
pub use pointset::{PointSet1D, PointSet2D, PointSetKD};
