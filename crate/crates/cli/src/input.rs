//! Reading point sets back from CSV.

use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use lsseq_core::{PointSet1D, PointSet2D};

#[derive(Debug, Clone, PartialEq)]
pub enum PointFile {
    OneD(PointSet1D),
    TwoD(PointSet2D),
}

/// Parses `index,x` or `index,x,y` CSV (a header row is required). A bare
/// `x` or `x,y` header without the index column is accepted as well.
///
/// Errors name the offending line. A 2D file with points at `x = 1` is
/// treated as closed on the right.
pub fn read_points(reader: impl Read, label: &str) -> Result<PointFile> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().context("line 1: cannot read header")?.clone();
    let names: Vec<&str> = headers.iter().collect();
    let (xcol, ycol) = match names.as_slice() {
        ["index", "x"] => (1, None),
        ["index", "x", "y"] => (1, Some(2)),
        ["x"] => (0, None),
        ["x", "y"] => (0, Some(1)),
        other => bail!("line 1: unrecognised header {:?}; expected index,x or index,x,y", other.join(",")),
    };
    let mut xs = Vec::new();
    let mut pts = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            anyhow!("line {line}: {e}")
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |col: usize| -> Result<f64> {
            let raw = record.get(col).ok_or_else(|| anyhow!("line {line}: missing column {}", col + 1))?;
            raw.parse::<f64>().map_err(|_| anyhow!("line {line}: {raw:?} is not a number"))
        };
        let x = field(xcol)?;
        match ycol {
            None => xs.push(x),
            Some(c) => pts.push([x, field(c)?]),
        }
    }
    match ycol {
        None => {
            let set = PointSet1D::new(xs, label);
            set.validate().map_err(|e| anyhow!("{}", locate(e, 2)))?;
            Ok(PointFile::OneD(set))
        }
        Some(_) => {
            let closed = pts.iter().any(|p| p[0] == 1.0);
            let set = PointSet2D::new(pts, label).closed_right(closed);
            set.validate().map_err(|e| anyhow!("{}", locate(e, 2)))?;
            Ok(PointFile::TwoD(set))
        }
    }
}

// maps a point index to its line in the file
fn locate(err: lsseq_core::Error, first_data_line: usize) -> String {
    match err {
        lsseq_core::Error::OutOfRange { index, value } => {
            format!("line {}: coordinate {value} lies outside [0, 1)", index + first_data_line)
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_both_shapes() {
        let one = read_points("index,x\n1,0\n2,0.5\n".as_bytes(), "f").unwrap();
        assert_eq!(one, PointFile::OneD(PointSet1D::new(vec![0.0, 0.5], "f")));
        let two = read_points("x,y\n0.5,0.5\n1,0.25\n".as_bytes(), "g").unwrap();
        match two {
            PointFile::TwoD(s) => {
                assert!(s.closed_right_x);
                assert_eq!(s.len(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_name_the_line() {
        let err = read_points("index,x\n1,0.1\n2,abc\n".as_bytes(), "f").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
        let err = read_points("index,x\n1,0.1\n2,1.5\n".as_bytes(), "f").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
        let err = read_points("index,x,y\n1,0.1,0.2\n2,0.3\n".as_bytes(), "f").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
        assert!(read_points("a,b\n".as_bytes(), "f").is_err());
    }
}
