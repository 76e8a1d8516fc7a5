//! Quasi-Monte Carlo estimates of integrals over the unit square.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::classic::{halton, ls_halton_2d, ls_vdc_2d, vdc_2d, IndexConvention};
use crate::numeric::{CompensatedSum, LSParams};
use crate::pointset::PointSet2D;
use crate::{solve_beta, Error, Result};

/// A named integrand on `[0, 1]²`.
#[derive(Debug, Clone, Copy)]
pub struct Integrand2D {
    pub name: &'static str,
    pub eval: fn(f64, f64) -> f64,
    pub exact_value: Option<f64>,
}

fn poly23(x: f64, y: f64) -> f64 {
    2.0 * x + 3.0 * y * y
}

fn one(_: f64, _: f64) -> f64 {
    1.0
}

fn lower_left_quarter(x: f64, y: f64) -> f64 {
    if x < 0.5 && y < 0.5 {
        1.0
    } else {
        0.0
    }
}

fn cos_product(x: f64, y: f64) -> f64 {
    let tau = 2.0 * core::f64::consts::PI;
    libm::cos(tau * x) * libm::cos(tau * y)
}

/// Every integrand the CLI can select by name.
pub const INTEGRANDS: [Integrand2D; 4] = [
    Integrand2D { name: "poly23", eval: poly23, exact_value: Some(2.0) },
    Integrand2D { name: "const1", eval: one, exact_value: Some(1.0) },
    Integrand2D { name: "box_quarter", eval: lower_left_quarter, exact_value: Some(0.25) },
    Integrand2D { name: "cos_product", eval: cos_product, exact_value: Some(0.0) },
];

pub fn integrand(name: &str) -> Result<Integrand2D> {
    INTEGRANDS.iter().find(|f| f.name == name).copied().ok_or_else(|| Error::UnknownIntegrand(name.to_string()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimateRow {
    pub generator: String,
    pub n: usize,
    pub estimate: f64,
    pub abs_error: Option<f64>,
}

/// Mean of `f` over the points, accumulated in index order with
/// compensation.
pub fn estimate(points: &PointSet2D, f: &Integrand2D) -> Result<EstimateRow> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let sum: CompensatedSum = points.points.iter().map(|p| (f.eval)(p[0], p[1])).collect();
    let estimate = sum.total() / points.len() as f64;
    Ok(EstimateRow {
        generator: points.label.clone(),
        n: points.len(),
        estimate,
        abs_error: f.exact_value.map(|v| libm::fabs(estimate - v)),
    })
}

/// Seeded pseudo-random points from xoshiro256++, the Monte Carlo baseline.
pub fn random_points(n: usize, seed: u64) -> Result<PointSet2D> {
    if n == 0 {
        return Err(Error::EmptyPointSet);
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut unit = || (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    let points = (0..n).map(|_| [unit(), unit()]).collect();
    Ok(PointSet2D::new(points, format!("random(seed={seed})")))
}

/// A planar point generator, selectable from the CLI.
#[derive(Debug, Clone, PartialEq)]
pub enum Generator2D {
    /// `(n/N, φ₂(n))`.
    VanDerCorput,
    Halton {
        bases: [u32; 2],
        allow_shared_factors: bool,
    },
    /// `(n/N, ξⁿ_{L,S})`.
    LsVdc(LSParams),
    /// `(ξⁿ_{L₁,S₁}, ξⁿ_{L₂,S₂})`.
    LsHalton(LSParams, LSParams),
    Random {
        seed: u64,
    },
}

impl Generator2D {
    pub fn generate(&self, n: usize, conv: IndexConvention) -> Result<PointSet2D> {
        match self {
            Self::VanDerCorput => vdc_2d(n, conv),
            Self::Halton { bases, allow_shared_factors } => {
                let set = halton(n, bases, *allow_shared_factors, conv)?;
                Ok(set.to_2d().expect("two bases"))
            }
            Self::LsVdc(p) => ls_vdc_2d(p, n, conv),
            Self::LsHalton(px, py) => ls_halton_2d(px, py, n),
            Self::Random { seed } => random_points(n, *seed),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::VanDerCorput => "vdc2d".into(),
            Self::Halton { bases, .. } => format!("halton({},{})", bases[0], bases[1]),
            Self::LsVdc(p) => format!("ls_vdc{p}"),
            Self::LsHalton(px, py) => format!("ls_halton{px}x{py}"),
            Self::Random { seed } => format!("random(seed={seed})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub estimate: f64,
    pub abs_error: f64,
    /// `N·|error| / ln N`; undefined (NaN) at `N = 1`.
    pub scaled_error: f64,
}

/// Estimates on a strictly increasing grid of sample sizes. Each estimate
/// uses the first `N` points of a fresh order-`N` set.
pub fn convergence_study(
    generator: &Generator2D,
    f: &Integrand2D,
    ns: &[usize],
    conv: IndexConvention,
) -> Result<Vec<ConvergenceRow>> {
    let exact = f.exact_value.ok_or(Error::NoExactValue(f.name))?;
    if ns.is_empty() || ns[0] == 0 || ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid);
    }
    ns.iter()
        .map(|&n| {
            let row = estimate(&generator.generate(n, conv)?, f)?;
            let abs_error = libm::fabs(row.estimate - exact);
            let nf = n as f64;
            Ok(ConvergenceRow { n, estimate: row.estimate, abs_error, scaled_error: nf * abs_error / libm::log(nf) })
        })
        .collect()
}

/// Sample sizes of the reference integration table.
pub const TABLE_NS: [usize; 4] = [100, 500, 1000, 2000];

/// Published estimates of `∫∫ 2x + 3y²` in the order of the table's column
/// headers: `(n/N, φ₂)`, Halton (2,3), `(n/N, ξ_{3,1})`, `(ξ_{3,1}, ξ_{4,1})`.
/// One row per entry of [`TABLE_NS`].
pub const TABLE_REFERENCE: [[f64; 4]; 4] = [
    [1.9560, 1.9346, 1.9440, 1.958],
    [1.9906, 1.9837, 1.9898, 1.9911],
    [1.9953, 1.9925, 1.9935, 1.9949],
    [1.9977, 1.9959, 1.9979, 1.9976],
];

/// Deviation allowed between a computed cell and its published value.
pub const TABLE_TOLERANCE: f64 = 5e-3;

/// Which published column a generator is compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReferenceLayout {
    /// Each generator against the column carrying its header.
    #[default]
    AsPrinted,
    /// The two LS columns exchanged: the `(n/N, ξ_{3,1})` set against the
    /// values printed under `(ξ_{3,1}, ξ_{4,1})` and vice versa.
    SwappedLs,
}

impl ReferenceLayout {
    fn column(self, generator: usize) -> usize {
        match (self, generator) {
            (Self::SwappedLs, 2) => 3,
            (Self::SwappedLs, 3) => 2,
            (_, g) => g,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableConfig {
    pub ns: Vec<usize>,
    pub convention: IndexConvention,
    pub layout: ReferenceLayout,
    pub seed: u64,
}

impl Default for TableConfig {
    fn default() -> Self {
        Self {
            ns: TABLE_NS.to_vec(),
            convention: IndexConvention::OneBased,
            layout: ReferenceLayout::AsPrinted,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub generator: String,
    pub n: usize,
    pub estimate: f64,
    /// Published value, when `n` is one of [`TABLE_NS`] and the generator is
    /// deterministic.
    pub paper_value: Option<f64>,
    pub deviation: Option<f64>,
}

/// The four deterministic generators of the table, in header order.
pub fn table_generators() -> [Generator2D; 4] {
    let p31 = solve_beta(3, 1).expect("valid");
    let p41 = solve_beta(4, 1).expect("valid");
    [
        Generator2D::VanDerCorput,
        Generator2D::Halton { bases: [2, 3], allow_shared_factors: false },
        Generator2D::LsVdc(p31),
        Generator2D::LsHalton(p31, p41),
    ]
}

/// Reproduces the integration table for `f = 2x + 3y²`, one row per
/// (N, generator) plus a seeded random baseline that has no published
/// counterpart.
pub fn table31(config: &TableConfig) -> Result<Vec<TableRow>> {
    let f = integrand("poly23")?;
    let mut rows = Vec::new();
    for &n in &config.ns {
        let reference_row = TABLE_NS.iter().position(|&m| m == n);
        for (g, generator) in table_generators().iter().enumerate() {
            let set = generator.generate(n, config.convention)?;
            let est = estimate(&set, &f)?.estimate;
            let paper_value = reference_row.map(|r| TABLE_REFERENCE[r][config.layout.column(g)]);
            rows.push(TableRow {
                generator: generator.label(),
                n,
                estimate: est,
                paper_value,
                deviation: paper_value.map(|v| libm::fabs(est - v)),
            });
        }
        let baseline = Generator2D::Random { seed: config.seed };
        let est = estimate(&baseline.generate(n, config.convention)?, &f)?.estimate;
        rows.push(TableRow { generator: baseline.label(), n, estimate: est, paper_value: None, deviation: None });
    }
    Ok(rows)
}

/// Largest deviation over the compared cells, if any.
pub fn max_deviation(rows: &[TableRow]) -> Option<f64> {
    rows.iter().filter_map(|r| r.deviation).reduce(f64::max)
}
