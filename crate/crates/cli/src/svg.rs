//! Minimal static line plots.
//!
//! Plots are rendered from an already-built report column, never from
//! intermediate values, so writing one cannot change the table.

use std::fmt::Write;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Linear,
    Log,
}

impl Axis {
    fn map(self, v: f64) -> f64 {
        match self {
            Axis::Linear => v,
            Axis::Log => v.log10(),
        }
    }

    /// Log scale when all values are positive and span more than two decades.
    pub fn auto(values: &[f64]) -> Self {
        let (lo, hi) = finite_range(values.iter().copied());
        if lo > 0.0 && hi / lo > 100.0 {
            Axis::Log
        } else {
            Axis::Linear
        }
    }
}

fn finite_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        })
}

/// Polyline of (x, y) with labelled axes; points that cannot be placed
/// (non-finite, or ≤ 0 on a log axis) are skipped.
pub fn line_plot(
    title: &str,
    x_label: &str,
    y_label: &str,
    xs: &[f64],
    ys: &[f64],
    x_axis: Axis,
    y_axis: Axis,
) -> String {
    let points: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| (x_axis.map(x), y_axis.map(y)))
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();
    let (x0, x1) = padded(finite_range(points.iter().map(|p| p.0)));
    let (y0, y1) = padded(finite_range(points.iter().map(|p| p.1)));
    let px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    let (left, right, top, bottom) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        svg,
        r#"<path d="M{left} {top} L{left} {bottom} L{right} {bottom}" fill="none" stroke="black"/>"#
    );
    for (value, pos) in [(x0, left), (x1, right)] {
        let _ = writeln!(
            svg,
            r#"<text x="{pos}" y="{}" text-anchor="middle" font-size="11">{}</text>"#,
            bottom + 16.0,
            tick_label(value, x_axis)
        );
    }
    for (value, pos) in [(y0, bottom), (y1, top)] {
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{pos}" text-anchor="end" font-size="11">{}</text>"#,
            left - 4.0,
            tick_label(value, y_axis)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="13">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0,
        escape(&axis_label(x_label, x_axis))
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{}" text-anchor="middle" font-size="13" transform="rotate(-90 16 {})">{}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        escape(&axis_label(y_label, y_axis))
    );
    if !points.is_empty() {
        let coords: Vec<String> = points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#,
            coords.join(" ")
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Widen degenerate or empty ranges so the mapping stays finite.
fn padded((lo, hi): (f64, f64)) -> (f64, f64) {
    if !lo.is_finite() {
        (0.0, 1.0)
    } else if hi - lo <= f64::EPSILON * lo.abs().max(1.0) {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

fn tick_label(v: f64, axis: Axis) -> String {
    match axis {
        Axis::Linear => format!("{v:.3e}"),
        Axis::Log => format!("1e{v:.2}"),
    }
}

fn axis_label(label: &str, axis: Axis) -> String {
    match axis {
        Axis::Linear => label.to_string(),
        Axis::Log => format!("{label} (log)"),
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
