//! Number formatting and CSV writers.

use std::io::{self, Write};

use lsseq_core::qmc::{ConvergenceRow, TableRow};

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros removed,
/// scientific notation outside `1e-4 ≤ |v| < 1e17`. Doubles survive the
/// round trip through this text exactly.
pub fn fmt_g17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let fixed = format!("{:.*}", (16 - exp) as usize, v);
    strip_zeros(&fixed).to_string()
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_points_1d(out: &mut dyn Write, points: &[f64]) -> io::Result<()> {
    writeln!(out, "index,x")?;
    for (i, x) in points.iter().enumerate() {
        writeln!(out, "{},{}", i + 1, fmt_g17(*x))?;
    }
    Ok(())
}

pub fn write_points_2d(out: &mut dyn Write, points: &[[f64; 2]]) -> io::Result<()> {
    writeln!(out, "index,x,y")?;
    for (i, p) in points.iter().enumerate() {
        writeln!(out, "{},{},{}", i + 1, fmt_g17(p[0]), fmt_g17(p[1]))?;
    }
    Ok(())
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_g17).unwrap_or_default()
}

pub fn write_table(out: &mut dyn Write, rows: &[TableRow]) -> io::Result<()> {
    writeln!(out, "generator,N,estimate,paper_value,deviation")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(&r.generator),
            r.n,
            fmt_g17(r.estimate),
            opt(r.paper_value),
            opt(r.deviation)
        )?;
    }
    Ok(())
}

pub fn write_convergence(out: &mut dyn Write, generator: &str, rows: &[ConvergenceRow]) -> io::Result<()> {
    writeln!(out, "generator,N,estimate,abs_error,scaled_error")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(generator),
            r.n,
            fmt_g17(r.estimate),
            fmt_g17(r.abs_error),
            fmt_g17(r.scaled_error)
        )?;
    }
    Ok(())
}

/// Quotes a field if it contains a separator or quote.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
