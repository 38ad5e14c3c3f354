//! SVG rendering of `t_n` against the curves `𝒯_n`, `𝒯_{n+1}`.

use std::fmt::Write;

use rug::{Float, Rational};
use turankit::curves::{branches, vertex, Scheme, Which};
use turankit::families::{eval_triple, FamilySpec};
use turankit::zeros_claims::{default_zero_tolerance, isolate_zeros};
use turankit::Param;

use crate::error::CliResult;
use crate::format::{fmt_float_digits, fmt_rational};

pub struct PlotConfig {
    pub lambda: Param,
    pub n: usize,
    pub theta: Param,
    /// `None` picks a window around the vertex and the two largest zeros.
    pub x_range: Option<(Rational, Rational)>,
    pub samples: usize,
    pub precision: u32,
}

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 520.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

const BLACK: &str = "#000000";
const BLUE: &str = "#1f4fd8";
const RED: &str = "#d62728";

/// A polyline broken wherever the curve is undefined or leaves the frame.
type Path = Vec<Vec<(f64, f64)>>;

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x.0) / (self.x.1 - self.x.0) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.y.0) / (self.y.1 - self.y.0) * (HEIGHT - TOP - BOTTOM)
    }

    fn contains_y(&self, y: f64) -> bool {
        y.is_finite() && y >= self.y.0 && y <= self.y.1
    }
}

fn split(points: &[Option<(f64, f64)>]) -> Path {
    let mut out: Path = Vec::new();
    let mut cur = Vec::new();
    for p in points {
        match p {
            Some(p) => cur.push(*p),
            None => {
                if cur.len() > 1 {
                    out.push(std::mem::take(&mut cur));
                }
                cur.clear();
            }
        }
    }
    if cur.len() > 1 {
        out.push(cur);
    }
    out
}

fn label(p: &Param) -> String {
    match p {
        Param::Exact(r) => fmt_rational(r),
        Param::Real(f) => fmt_float_digits(f, 8),
    }
}

/// `base` with a subscript, as SVG text content.
fn sub(base: &str, index: &str) -> String {
    format!(r#"{base}<tspan baseline-shift="sub" font-size="9">{index}</tspan>"#)
}

/// From just left of min(x̃, x₂) (or x₁ when n = 0 has a single zero) to 1.
fn auto_range(x_tilde: Option<&Float>, zeros: &[Float]) -> (Rational, Rational) {
    let mut left = zeros.iter().take(2).map(|z| z.to_f64()).fold(1.0f64, f64::min);
    if let Some(x) = x_tilde {
        left = left.min(x.to_f64());
    }
    let lo = (left - 0.15 * (1.0 - left)).max(0.0);
    // round down to a multiple of 1/100 so the axis labels stay tidy
    let lo = (lo * 100.0).floor() as i64;
    (Rational::from((lo, 100)), Rational::from(1))
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn plot_svg(cfg: &PlotConfig) -> CliResult<String> {
    let prec = cfg.precision;
    let family = FamilySpec::ultraspherical(cfg.lambda.clone())?;
    let scheme = Scheme::Ultraspherical {
        lambda: cfg.lambda.clone(),
        n: cfg.n,
        theta: cfg.theta.clone(),
    };
    let zeros = isolate_zeros(&cfg.lambda, cfg.n + 1, &default_zero_tolerance(prec), prec)?;
    let x_tilde = vertex(&scheme, Which::Current, prec).ok().map(|v| v.x_vertex);
    let x_range = match &cfg.x_range {
        Some(r) => r.clone(),
        None => auto_range(x_tilde.as_ref(), &zeros.zeros),
    };
    let (lo, hi) = (Float::with_val(prec, &x_range.0), Float::with_val(prec, &x_range.1));
    let step = Float::with_val(prec, &hi - &lo) / (cfg.samples as u64 - 1);
    let xs: Vec<Float> = (0..cfg.samples)
        .map(|i| Float::with_val(prec, &lo + Float::with_val(prec, &step * i as u64)))
        .collect();

    let mut ratio = Vec::with_capacity(xs.len());
    let mut curve = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    for x in &xs {
        let tr = eval_triple(&family, cfg.n, x, prec, false)?;
        ratio.push(tr.ratio().map(|r| r.to_f64()));
        for (k, which) in [Which::Current, Which::Next].into_iter().enumerate() {
            // the quadratic degenerates where x^θ = 0; leave a gap there
            let roots = branches(&scheme, which, x, prec).ok().and_then(|b| b.roots);
            curve[2 * k].push(roots.as_ref().map(|r| r.0.to_f64()));
            curve[2 * k + 1].push(roots.as_ref().map(|r| r.1.to_f64()));
        }
    }

    let branch_values: Vec<f64> = curve.iter().flatten().flatten().copied().filter(|v| v.is_finite()).collect();
    let (mut ylo, mut yhi) = branch_values
        .iter()
        .fold((0.0f64, 1.0f64), |(a, b), &v| (a.min(v), b.max(v)));
    // keep outliers near the degenerate end from flattening the picture
    ylo = ylo.max(-3.0);
    yhi = yhi.min(3.0);
    let pad = 0.08 * (yhi - ylo);
    let frame = Frame {
        x: (x_range.0.to_f64(), x_range.1.to_f64()),
        y: (ylo - pad, yhi + pad),
    };

    let xf: Vec<f64> = xs.iter().map(|x| x.to_f64()).collect();
    let path_of = |vals: &[Option<f64>]| -> Path {
        let pts: Vec<Option<(f64, f64)>> = xf
            .iter()
            .zip(vals)
            .map(|(&x, v)| v.filter(|v| frame.contains_y(*v)).map(|v| (x, v)))
            .collect();
        split(&pts)
    };

    let mut markers: Vec<(String, f64, &str)> = Vec::new();
    if let Some(x) = &x_tilde {
        markers.push((r#"x<tspan dx="-6" dy="-7">~</tspan>"#.into(), x.to_f64(), "#2ca02c"));
    }
    if let Ok(v) = vertex(&scheme, Which::Next, prec) {
        markers.push((sub("x", "0"), v.x_vertex.to_f64(), "#9467bd"));
    }
    let zero_ticks: Vec<(String, f64)> = zeros
        .zeros
        .iter()
        .take(2)
        .enumerate()
        .map(|(i, z)| (sub("x", &(i + 1).to_string()), z.to_f64()))
        .collect();

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(s, "<!-- turankit {} -->", env!("CARGO_PKG_VERSION")).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let title = format!("λ = {}, n = {}, θ = {}", label(&cfg.lambda), cfg.n, label(&cfg.theta));
    writeln!(s, r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{}</text>"#, WIDTH / 2.0, esc(&title)).unwrap();

    // axes and ticks
    let (x0, x1) = (frame.px(frame.x.0), frame.px(frame.x.1));
    let (y0, y1) = (frame.py(frame.y.0), frame.py(frame.y.1));
    writeln!(s, r##"<g stroke="#444" stroke-width="1" fill="none">"##).unwrap();
    writeln!(s, r#"<rect x="{x0:.2}" y="{y1:.2}" width="{:.2}" height="{:.2}"/>"#, x1 - x0, y0 - y1).unwrap();
    if frame.y.0 < 0.0 && frame.y.1 > 0.0 {
        let yz = frame.py(0.0);
        writeln!(s, r##"<line x1="{x0:.2}" y1="{yz:.2}" x2="{x1:.2}" y2="{yz:.2}" stroke="#bbb"/>"##).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    for i in 0..=5 {
        let xv = frame.x.0 + (frame.x.1 - frame.x.0) * i as f64 / 5.0;
        let yv = frame.y.0 + (frame.y.1 - frame.y.0) * i as f64 / 5.0;
        let (px, py) = (frame.px(xv), frame.py(yv));
        writeln!(s, r##"<line x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{:.2}" stroke="#444"/>"##, y0 + 5.0).unwrap();
        writeln!(s, r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{xv:.2}</text>"#, y0 + 19.0).unwrap();
        writeln!(s, r##"<line x1="{:.2}" y1="{py:.2}" x2="{x0:.2}" y2="{py:.2}" stroke="#444"/>"##, x0 - 5.0).unwrap();
        writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{yv:.2}</text>"#, x0 - 8.0, py + 4.0).unwrap();
    }
    writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">x</text>"#, (x0 + x1) / 2.0, HEIGHT - 18.0).unwrap();

    // vertical markers
    for (i, (name, xm, color)) in markers.iter().enumerate() {
        if *xm < frame.x.0 || *xm > frame.x.1 {
            continue;
        }
        let px = frame.px(*xm);
        writeln!(
            s,
            r#"<line x1="{px:.2}" y1="{y1:.2}" x2="{px:.2}" y2="{y0:.2}" stroke="{color}" stroke-dasharray="5,4"/>"#
        )
        .unwrap();
        let ty = y1 + 14.0 + 16.0 * i as f64;
        writeln!(s, r#"<text x="{:.2}" y="{ty:.2}" fill="{color}">{name}</text>"#, px + 3.0).unwrap();
    }
    for (name, z) in &zero_ticks {
        if *z < frame.x.0 || *z > frame.x.1 {
            continue;
        }
        let px = frame.px(*z);
        writeln!(s, r##"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{y0:.2}" stroke="#666" stroke-width="2"/>"##, y0 - 10.0).unwrap();
        writeln!(s, r##"<text x="{px:.2}" y="{:.2}" text-anchor="middle" fill="#666">{name}</text>"##, y0 - 13.0).unwrap();
    }

    // curves
    let mut emit = |path: &Path, color: &str, width: f64| {
        for seg in path {
            let pts: Vec<String> = seg
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", frame.px(x), frame.py(y)))
                .collect();
            writeln!(
                s,
                r#"<polyline fill="none" stroke="{color}" stroke-width="{width}" points="{}"/>"#,
                pts.join(" ")
            )
            .unwrap();
        }
    };
    emit(&path_of(&curve[0]), BLUE, 1.6);
    emit(&path_of(&curve[1]), BLUE, 1.6);
    emit(&path_of(&curve[2]), RED, 1.6);
    emit(&path_of(&curve[3]), RED, 1.6);
    emit(&path_of(&ratio), BLACK, 1.8);

    // legend
    let entries = [
        (sub("t", &cfg.n.to_string()), BLACK),
        (sub("T", &cfg.n.to_string()), BLUE),
        (sub("T", &(cfg.n + 1).to_string()), RED),
    ];
    let (lx, ly) = (x0 + 12.0, y1 + 28.0);
    writeln!(
        s,
        r##"<rect x="{:.2}" y="{:.2}" width="92" height="{}" fill="white" stroke="#999"/>"##,
        lx - 6.0,
        ly - 14.0,
        18 * entries.len() + 8
    )
    .unwrap();
    for (i, (name, color)) in entries.iter().enumerate() {
        let y = ly + 18.0 * i as f64;
        writeln!(
            s,
            r#"<line x1="{lx:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"/>"#,
            y - 4.0,
            lx + 24.0,
            y - 4.0
        )
        .unwrap();
        writeln!(s, r#"<text x="{:.2}" y="{y:.2}" font-style="italic">{name}</text>"#, lx + 30.0).unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}
