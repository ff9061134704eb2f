//! File emission: contractual CSV plus convenience SVG line plots.

use qsl_horizon::figures::SweepTable;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

/// Which artifacts a command writes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Svg,
    Both,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "csv" => Some(OutputFormat::Csv),
            "svg" => Some(OutputFormat::Svg),
            "both" => Some(OutputFormat::Both),
            _ => None,
        }
    }

    pub fn wants_csv(&self) -> bool {
        matches!(self, OutputFormat::Csv | OutputFormat::Both)
    }

    pub fn wants_svg(&self) -> bool {
        matches!(self, OutputFormat::Svg | OutputFormat::Both)
    }
}

pub fn write_table(
    table: &SweepTable,
    stem: &Path,
    format: OutputFormat,
) -> io::Result<Vec<String>> {
    let mut written = Vec::new();
    if format.wants_csv() {
        let path = stem.with_extension("csv");
        std::fs::write(&path, table.to_csv())?;
        written.push(path.display().to_string());
    }
    if format.wants_svg() {
        let path = stem.with_extension("svg");
        std::fs::write(&path, render_svg(table))?;
        written.push(path.display().to_string());
    }
    Ok(written)
}

const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ff9896",
];

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 50.0;

/// Plain line plot of every non-ratio column against x. Presentation
/// only: the CSV carries the numerical contract.
pub fn render_svg(table: &SweepTable) -> String {
    let curves: Vec<&(String, Vec<f64>)> = table
        .columns
        .iter()
        .filter(|(label, _)| !label.ends_with("_ratio"))
        .collect();

    let (x_lo, x_hi) = span(&table.x);
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for (_, col) in &curves {
        let (lo, hi) = span(col);
        y_lo = y_lo.min(lo);
        y_hi = y_hi.max(hi);
    }
    if y_lo > y_hi {
        (y_lo, y_hi) = (0.0, 1.0);
    }
    if (y_hi - y_lo).abs() < 1e-300 {
        y_hi = y_lo + 1.0;
    }
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        svg,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        svg,
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{plot_w}\" height=\"{plot_h}\" \
         fill=\"none\" stroke=\"black\"/>"
    );
    // axis tick labels at the corners keep the plot self-describing
    let _ = writeln!(
        svg,
        "<text x=\"{MARGIN_LEFT}\" y=\"{:.1}\" font-size=\"12\">{}</text>",
        HEIGHT - 30.0,
        format_tick(x_lo)
    );
    let _ = writeln!(
        svg,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" text-anchor=\"end\">{}</text>",
        MARGIN_LEFT + plot_w,
        HEIGHT - 30.0,
        format_tick(x_hi)
    );
    let _ = writeln!(
        svg,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
        MARGIN_LEFT + 0.5 * plot_w,
        HEIGHT - 12.0,
        table.x_name
    );
    let _ = writeln!(
        svg,
        "<text x=\"8\" y=\"{:.1}\" font-size=\"12\">{}</text>",
        MARGIN_TOP + 12.0,
        format_tick(y_hi)
    );
    let _ = writeln!(
        svg,
        "<text x=\"8\" y=\"{:.1}\" font-size=\"12\">{}</text>",
        MARGIN_TOP + plot_h,
        format_tick(y_lo)
    );

    for (k, (label, col)) in curves.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let mut points = String::new();
        for (i, &y) in col.iter().enumerate() {
            let _ = write!(points, "{:.2},{:.2} ", px(table.x[i]), py(y));
        }
        let _ = writeln!(
            svg,
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.4\" points=\"{}\"/>",
            points.trim_end()
        );
        let ly = MARGIN_TOP + 16.0 + 16.0 * k as f64;
        let lx = WIDTH - MARGIN_RIGHT + 10.0;
        let _ = writeln!(
            svg,
            "<line x1=\"{lx}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{color}\" \
             stroke-width=\"2\"/>",
            ly - 4.0,
            lx + 18.0,
            ly - 4.0
        );
        let _ = writeln!(
            svg,
            "<text x=\"{:.1}\" y=\"{ly}\" font-size=\"11\">{label}</text>",
            lx + 24.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn span(values: &[f64]) -> (f64, f64) {
    values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    })
}

fn format_tick(v: f64) -> String {
    format!("{v:.4}")
}
