use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use lsseq_core::classic::{kronecker, van_der_corput};
use lsseq_core::discrepancy::{self, naive, DiscrepancyReport, Edge, Witness};
use lsseq_core::ls::{block_points, direct_enumeration, fast_points, ls_points};
use lsseq_core::numeric::counts;
use lsseq_core::partition::{kakutani_partition, ls_partition_capped};
use lsseq_core::qmc::{self, ReferenceLayout, TableConfig, TABLE_TOLERANCE};
use lsseq_core::{LSParams, PointSet1D, PointSet2D};

use crate::input::{read_points, PointFile};
use crate::output::{self, csv_field, fmt_g17};
use crate::{
    Command, CountsArgs, DiscrepancyArgs, Failure, Format, IntegrateArgs, Method, PartitionArgs, Points2dArgs,
    PointsArgs, Source1D, Table31Args, EXIT_FAILURE,
};

pub(crate) fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Points(a) => points(a, stdout),
        Command::Partition(a) => partition(a, stdout),
        Command::Counts(a) => counts_cmd(a, stdout),
        Command::Points2d(a) => points2d(a, stdout),
        Command::Scatter(a) => scatter(a, stdout),
        Command::Discrepancy(a) => discrepancy_cmd(a, stdout),
        Command::Integrate(a) => integrate(a, stdout),
        Command::Table31(a) => table31(a, stdout, stderr),
    }
}

/// Runs `body` against the output file, or stdout when there is none.
fn with_output(
    path: Option<&Path>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<(), Failure> {
    match path {
        Some(p) => {
            let file = File::create(p).with_context(|| format!("cannot create {}", p.display()))?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush()?;
        }
        None => {
            body(stdout)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn ls_prefix(params: &LSParams, n: usize, method: Method) -> anyhow::Result<Vec<f64>> {
    let seq = match method {
        Method::Auto => ls_points(params, n)?,
        Method::Fast => fast_points(params, n)?,
        Method::Direct => direct_enumeration(params, n)?,
        Method::Block => {
            if n == 0 {
                bail!("point count must be at least 1");
            }
            let depth = (0..)
                .find(|&d| counts(params, d).map_or(true, |c| c.t >= n as u64))
                .expect("counts grow without bound");
            let mut seq = block_points(params, depth)?;
            seq.points.truncate(n);
            seq
        }
    };
    Ok(seq.points)
}

fn source_1d(src: &Source1D, n: usize) -> anyhow::Result<Option<PointSet1D>> {
    let chosen = usize::from(src.ls.is_some()) + usize::from(src.vdc) + usize::from(src.kronecker.is_some());
    if chosen > 1 {
        bail!("choose exactly one of --ls, --vdc, --kronecker");
    }
    if let Some(p) = &src.ls {
        return Ok(Some(PointSet1D::new(ls_prefix(p, n, src.method)?, format!("ls{p}"))));
    }
    if src.vdc {
        return Ok(Some(van_der_corput(n)?));
    }
    if let Some(theta) = src.kronecker {
        return Ok(Some(kronecker(theta, n)?));
    }
    Ok(None)
}

fn points(a: PointsArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let set = source_1d(&a.source, a.n)?.ok_or_else(|| anyhow!("choose one of --ls, --vdc, --kronecker"))?;
    with_output(a.output.as_deref(), stdout, |w| output::write_points_1d(w, &set.points))
}

fn partition(a: PartitionArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let part = match (a.ls, a.kakutani) {
        (Some(p), None) => ls_partition_capped(&p, a.depth, a.cap)?,
        (None, Some(alpha)) => kakutani_partition(alpha, a.depth)?,
        _ => return Err(anyhow!("choose exactly one of --ls, --kakutani").into()),
    };
    with_output(a.output.as_deref(), stdout, |w| {
        writeln!(w, "index,left,length")?;
        for (i, (left, right)) in part.intervals().enumerate() {
            writeln!(w, "{},{},{}", i + 1, fmt_g17(left), fmt_g17(right - left))?;
        }
        Ok(())
    })
}

fn counts_cmd(a: CountsArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let rows = (0..=a.depth).map(|d| counts(&a.ls, d)).collect::<Result<Vec<_>, _>>()?;
    with_output(a.output.as_deref(), stdout, |w| {
        writeln!(w, "n,t,l,s")?;
        for c in &rows {
            writeln!(w, "{},{},{},{}", c.n, c.t, c.l, c.s)?;
        }
        Ok(())
    })
}

fn planar(a: &Points2dArgs) -> anyhow::Result<PointSet2D> {
    let generator = a
        .source
        .generator()?
        .ok_or_else(|| anyhow!("choose one of --vdc2d, --halton, --ls-vdc, --ls-halton, --random"))?;
    Ok(generator.generate(a.n, a.source.convention())?)
}

fn points2d(a: Points2dArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let set = planar(&a)?;
    with_output(a.output.as_deref(), stdout, |w| output::write_points_2d(w, &set.points))
}

fn scatter(a: Points2dArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let set = planar(&a)?;
    let svg = crate::svg::scatter_svg(&set);
    with_output(a.output.as_deref(), stdout, |w| w.write_all(svg.as_bytes()))
}

fn edge_text(edge: Edge) -> &'static str {
    match edge {
        Edge::Closed => "closed",
        Edge::Open => "open",
    }
}

fn witness_text(w: &Witness) -> String {
    match *w {
        Witness::Anchored { c, edge } => format!("[0, {}) {}", fmt_g17(c), edge_text(edge)),
        Witness::Interval { a, b, edge } => format!("[{}, {}) {}", fmt_g17(a), fmt_g17(b), edge_text(edge)),
        Witness::AnchoredBox { b1, b2, edge } => {
            format!("[0, {}) x [0, {}) {}", fmt_g17(b1), fmt_g17(b2), edge_text(edge))
        }
        Witness::Box { a, b, edge } => format!(
            "[{}, {}) x [{}, {}) {}",
            fmt_g17(a[0]),
            fmt_g17(b[0]),
            fmt_g17(a[1]),
            fmt_g17(b[1]),
            edge_text(edge)
        ),
    }
}

struct Summary {
    label: String,
    n: usize,
    d_star: f64,
    d_extreme: Option<f64>,
    witness: String,
}

impl Summary {
    fn from_report(label: &str, r: &DiscrepancyReport) -> Self {
        Self {
            label: label.to_string(),
            n: r.n,
            d_star: r.d_star,
            d_extreme: r.d_extreme,
            witness: witness_text(&r.star_witness),
        }
    }
}

fn discrepancy_cmd(a: DiscrepancyArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let generator = a.source2.generator()?;
    let file = match (&a.input, generator) {
        (Some(path), None) => {
            let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
            read_points(f, &path.display().to_string())?
        }
        (None, Some(g)) => {
            let n = a.n.ok_or_else(|| anyhow!("-n is required for generated points"))?;
            PointFile::TwoD(g.generate(n, a.source2.convention())?)
        }
        (None, None) => {
            let n = a.n.ok_or_else(|| anyhow!("-n is required for generated points"))?;
            let set = source_1d(&a.source1, n)?.ok_or_else(|| anyhow!("give --input or a generator"))?;
            PointFile::OneD(set)
        }
        (Some(_), Some(_)) => return Err(anyhow!("--input excludes generator flags").into()),
    };
    let summary = match (&file, a.oracle) {
        (PointFile::OneD(s), false) => Summary::from_report(&s.label, &discrepancy::report_1d(s)?),
        (PointFile::TwoD(s), false) => Summary::from_report(&s.label, &discrepancy::report_2d(s)?),
        (PointFile::OneD(s), true) => Summary {
            label: s.label.clone(),
            n: s.len(),
            d_star: naive::star_1d(&s.points)?,
            d_extreme: Some(naive::extreme_1d(&s.points)?),
            witness: "oracle".into(),
        },
        (PointFile::TwoD(s), true) => Summary {
            label: s.label.clone(),
            n: s.len(),
            d_star: naive::star_2d(s)?,
            d_extreme: None,
            witness: "oracle".into(),
        },
    };
    with_output(a.output.as_deref(), stdout, |w| match a.format {
        Format::Text => {
            writeln!(w, "source: {}", summary.label)?;
            writeln!(w, "N: {}", summary.n)?;
            writeln!(w, "D*: {}", fmt_g17(summary.d_star))?;
            if let Some(d) = summary.d_extreme {
                writeln!(w, "D: {}", fmt_g17(d))?;
            }
            writeln!(w, "witness: {}", summary.witness)
        }
        Format::Csv => {
            writeln!(w, "source,N,d_star,d_extreme,witness")?;
            writeln!(
                w,
                "{},{},{},{},{}",
                csv_field(&summary.label),
                summary.n,
                fmt_g17(summary.d_star),
                summary.d_extreme.map(fmt_g17).unwrap_or_default(),
                csv_field(&summary.witness)
            )
        }
    })
}

fn integrate(a: IntegrateArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let f = qmc::integrand(&a.integrand)?;
    let generator = a.source.generator()?.ok_or_else(|| anyhow!("choose a planar generator"))?;
    let conv = a.source.convention();
    if !a.ns.is_empty() {
        let rows = qmc::convergence_study(&generator, &f, &a.ns, conv)?;
        let label = generator.label();
        return with_output(a.output.as_deref(), stdout, |w| output::write_convergence(w, &label, &rows));
    }
    let n = a.n.ok_or_else(|| anyhow!("give -n or --Ns"))?;
    let row = qmc::estimate(&generator.generate(n, conv)?, &f)?;
    with_output(a.output.as_deref(), stdout, |w| {
        writeln!(w, "generator,N,estimate,abs_error")?;
        writeln!(
            w,
            "{},{},{},{}",
            csv_field(&row.generator),
            row.n,
            fmt_g17(row.estimate),
            row.abs_error.map(fmt_g17).unwrap_or_default()
        )
    })
}

fn table31(a: Table31Args, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let config = TableConfig {
        ns: a.ns,
        convention: if a.open_right {
            lsseq_core::classic::IndexConvention::ZeroBased
        } else {
            lsseq_core::classic::IndexConvention::OneBased
        },
        layout: if a.swap_ls_columns { ReferenceLayout::SwappedLs } else { ReferenceLayout::AsPrinted },
        seed: a.seed,
    };
    let rows = qmc::table31(&config)?;
    let to_file = a.output.is_some();
    with_output(a.output.as_deref(), stdout, |w| output::write_table(w, &rows))?;

    let summary: &mut dyn Write = if to_file { stdout } else { stderr };
    let compared = rows.iter().filter(|r| r.deviation.is_some()).count();
    let failing: Vec<_> = rows.iter().filter(|r| r.deviation.is_some_and(|d| d > TABLE_TOLERANCE)).collect();
    writeln!(
        summary,
        "convention: {}, layout: {}, compared cells: {compared}, max deviation: {}",
        if a.open_right { "zero-based" } else { "one-based" },
        if a.swap_ls_columns { "LS columns swapped" } else { "as printed" },
        qmc::max_deviation(&rows).map(|d| format!("{d:.6}")).unwrap_or_else(|| "n/a".into()),
    )
    .map_err(anyhow::Error::from)?;
    for r in &failing {
        writeln!(
            summary,
            "  over tolerance: {} N={} estimate={:.6} printed={:.4} deviation={:.6}",
            r.generator,
            r.n,
            r.estimate,
            r.paper_value.unwrap_or(f64::NAN),
            r.deviation.unwrap_or(f64::NAN)
        )
        .map_err(anyhow::Error::from)?;
    }
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_FAILURE,
            error: anyhow!("{} of {compared} cells deviate by more than {TABLE_TOLERANCE}", failing.len()),
        })
    }
}
