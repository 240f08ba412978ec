//! Minimal deterministic SVG charts. No timestamps or random ids are
//! embedded, so identical inputs give identical files.

use std::fmt::Write as _;

const W: f64 = 640.0;
const H: f64 = 400.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.to_string() }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
    log_x: bool,
}

impl Frame {
    fn new(xs: impl Iterator<Item = f64> + Clone, ys: impl Iterator<Item = f64> + Clone, log_x: bool) -> Self {
        let fx = |v: f64| if log_x { v.max(f64::MIN_POSITIVE).log10() } else { v };
        let (mut x0, mut x1) = xs.clone().map(fx).fold((f64::INFINITY, f64::NEG_INFINITY), |a, v| (a.0.min(v), a.1.max(v)));
        let (mut y0, mut y1) = ys.fold((0.0f64, f64::NEG_INFINITY), |a, v| (a.0.min(v), a.1.max(v)));
        if !x0.is_finite() || !x1.is_finite() {
            (x0, x1) = (0.0, 1.0);
        }
        if x1 - x0 < 1e-12 {
            (x0, x1) = (x0 - 0.5, x1 + 0.5);
        }
        if !y1.is_finite() || y1 - y0 < 1e-12 {
            y1 = y0 + 1.0;
        }
        let pad = (x1 - x0) * 0.05;
        (x0, x1) = (x0 - pad, x1 + pad);
        y1 += (y1 - y0) * 0.05;
        if y0 < 0.0 {
            y0 -= (y1 - y0) * 0.05;
        }
        Self { x: (x0, x1), y: (y0, y1), log_x }
    }

    fn px(&self, v: f64) -> f64 {
        let v = if self.log_x { v.max(f64::MIN_POSITIVE).log10() } else { v };
        LEFT + (v - self.x.0) / (self.x.1 - self.x.0) * (W - LEFT - RIGHT)
    }

    fn py(&self, v: f64) -> f64 {
        H - BOTTOM - (v - self.y.0) / (self.y.1 - self.y.0) * (H - TOP - BOTTOM)
    }

    fn axes(&self, out: &mut String, title: &str, xlabel: &str, ylabel: &str) {
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(out, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
        let _ = writeln!(out, r#"<text x="{}" y="22" text-anchor="middle" font-size="15">{}</text>"#, num(W / 2.0), esc(title));
        let (x0, y0, x1, y1) = (LEFT, H - BOTTOM, W - RIGHT, TOP);
        let _ = writeln!(out, r#"<path d="M{} {} H{} M{} {} V{}" stroke="black" fill="none"/>"#, num(x0), num(y0), num(x1), num(x0), num(y0), num(y1));
        for i in 0..=4 {
            let f = f64::from(i) / 4.0;
            let xv = self.x.0 + f * (self.x.1 - self.x.0);
            let shown = if self.log_x { 10f64.powf(xv) } else { xv };
            let px = LEFT + f * (W - LEFT - RIGHT);
            let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, num(px), num(y0 + 18.0), num(shown));
            let yv = self.y.0 + f * (self.y.1 - self.y.0);
            let py = self.py(yv);
            let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, num(x0 - 6.0), num(py + 4.0), num(yv));
        }
        let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, num(W / 2.0), num(H - 10.0), esc(xlabel));
        let _ = writeln!(
            out,
            r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{}</text>"#,
            num(H / 2.0),
            num(H / 2.0),
            esc(ylabel)
        );
    }
}

/// Bars for `(length, count)` and an optional fitted curve.
pub fn histogram(bars: &[(f64, f64)], curve: Option<&dyn Fn(f64) -> f64>, title: &str) -> String {
    let xs = bars.iter().map(|b| b.0);
    let curve_pts: Vec<(f64, f64)> = match (curve, bars.first(), bars.last()) {
        (Some(f), Some(first), Some(last)) => {
            let (a, b) = (first.0 - 1.0, last.0 + 1.0);
            (0..=200).map(|i| a + (b - a) * f64::from(i) / 200.0).map(|x| (x, f(x))).collect()
        }
        _ => Vec::new(),
    };
    let frame = Frame::new(
        xs.chain(curve_pts.iter().map(|p| p.0)),
        bars.iter().map(|b| b.1).chain(curve_pts.iter().map(|p| p.1)),
        false,
    );
    let mut out = String::new();
    frame.axes(&mut out, title, "stem length", "entries");
    let bw = (frame.px(1.0) - frame.px(0.0)) * 0.8;
    for &(x, y) in bars {
        let (px, py) = (frame.px(x) - bw / 2.0, frame.py(y));
        let _ = writeln!(
            out,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#8fb3d9"/>"##,
            num(px),
            num(py),
            num(bw),
            num(frame.py(0.0) - py)
        );
    }
    if !curve_pts.is_empty() {
        let d: Vec<String> = curve_pts
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| format!("{}{} {}", if i == 0 { "M" } else { "L" }, num(frame.px(x)), num(frame.py(y))))
            .collect();
        let _ = writeln!(out, r##"<path d="{}" stroke="#c0392b" stroke-width="2" fill="none"/>"##, d.join(" "));
    }
    out.push_str("</svg>\n");
    out
}

/// All points, the front joined by a line, the selected point ringed.
pub fn pareto(points: &[(u32, f64, f64)], front: &[u32], selected: Option<u32>, units: (&str, &str)) -> String {
    let frame = Frame::new(points.iter().map(|p| p.1), points.iter().map(|p| p.2), false);
    let mut out = String::new();
    frame.axes(&mut out, "Pareto front", &format!("T ({})", units.0), &format!("Q ({})", units.1));
    let fp: Vec<&(u32, f64, f64)> = front
        .iter()
        .filter_map(|id| points.iter().find(|p| p.0 == *id))
        .collect();
    if fp.len() > 1 {
        let d: Vec<String> = fp
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{}{} {}", if i == 0 { "M" } else { "L" }, num(frame.px(p.1)), num(frame.py(p.2))))
            .collect();
        let _ = writeln!(out, r##"<path d="{}" stroke="#c0392b" fill="none"/>"##, d.join(" "));
    }
    for p in points {
        let on_front = front.contains(&p.0);
        let fill = if on_front { "#c0392b" } else { "#7f8c8d" };
        let (x, y) = (num(frame.px(p.1)), num(frame.py(p.2)));
        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="4" fill="{fill}"><title>{}</title></circle>"#, p.0);
        if selected == Some(p.0) {
            let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="9" stroke="black" fill="none"/>"#);
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Label, stroke colour and points of one line.
pub type Series<'a> = (&'a str, &'a str, Vec<(f64, f64)>);

/// Named series over a logarithmic x axis, each scaled to its own maximum.
pub fn series(title: &str, xlabel: &str, lines: &[Series<'_>]) -> String {
    let frame = Frame::new(
        lines.iter().flat_map(|l| l.2.iter().map(|p| p.0)),
        [0.0, 1.0].into_iter(),
        true,
    );
    let mut out = String::new();
    frame.axes(&mut out, title, xlabel, "relative to maximum");
    for (i, (name, colour, pts)) in lines.iter().enumerate() {
        let max = pts.iter().map(|p| p.1).fold(0.0f64, f64::max).max(f64::MIN_POSITIVE);
        let d: Vec<String> = pts
            .iter()
            .enumerate()
            .map(|(j, p)| format!("{}{} {}", if j == 0 { "M" } else { "L" }, num(frame.px(p.0)), num(frame.py(p.1 / max))))
            .collect();
        let _ = writeln!(out, r#"<path d="{}" stroke="{colour}" stroke-width="2" fill="none"/>"#, d.join(" "));
        let ly = TOP + 16.0 * (i as f64 + 1.0);
        let _ = writeln!(out, r#"<text x="{}" y="{}" fill="{colour}">{} (max {})</text>"#, num(LEFT + 10.0), num(ly), esc(name), num(max));
    }
    out.push_str("</svg>\n");
    out
}
