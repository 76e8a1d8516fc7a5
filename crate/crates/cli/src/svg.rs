//! Standalone SVG scatter plots of planar point sets.
//!
//! The canvas is a fixed `0 0 1000 1000` view box with the y axis flipped so
//! the origin sits bottom-left. Output depends only on the points and label.

use std::fmt::Write as _;

use lsseq_core::PointSet2D;

pub const CANVAS: f64 = 1000.0;
pub const RADIUS: &str = "1.2";

pub fn scatter_svg(set: &PointSet2D) -> String {
    let mut svg = String::with_capacity(64 * set.len() + 512);
    let label = escape(&set.label);
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n",
    );
    let _ = writeln!(svg, "<title>{label}</title>");
    svg.push_str(
        "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n",
    );
    svg.push_str("<g fill=\"black\" stroke=\"none\">\n");
    for p in &set.points {
        let cx = p[0] * CANVAS;
        let cy = (1.0 - p[1]) * CANVAS;
        let _ = writeln!(svg, "<circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{RADIUS}\"/>");
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
