//! SVG drawings of instances, optionally with a coloring.

use std::fmt::Write;

use regioncolor_core::geom::{HalfPlane, Side};
use regioncolor_core::{Coloring, Instance, Rational};

const SIZE: f64 = 800.0;
const PALETTE: [&str; 10] =
    ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"];
const UNCOLORED: &str = "#555555";

fn fill(col: Option<&Coloring>, i: usize) -> &'static str {
    col.map_or(UNCOLORED, |c| PALETTE[c.colors[i] % PALETTE.len()])
}

struct Frame {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Frame {
    /// Bounding box of `xs` and `ys`, grown by 20% (and to a unit box when flat).
    fn around(xs: &[f64], ys: &[f64]) -> Frame {
        let span = |v: &[f64]| {
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if !lo.is_finite() {
                (-1.0, 1.0)
            } else if hi - lo < 1e-9 {
                (lo - 1.0, hi + 1.0)
            } else {
                let pad = 0.2 * (hi - lo);
                (lo - pad, hi + pad)
            }
        };
        let ((x0, x1), (y0, y1)) = (span(xs), span(ys));
        Frame { x0, y0, x1, y1 }
    }

    fn sx(&self, x: f64) -> f64 {
        (x - self.x0) / (self.x1 - self.x0) * SIZE
    }

    fn sy(&self, y: f64) -> f64 {
        SIZE - (y - self.y0) / (self.y1 - self.y0) * SIZE
    }

    fn corners(&self) -> Vec<(f64, f64)> {
        vec![(self.x0, self.y0), (self.x1, self.y0), (self.x1, self.y1), (self.x0, self.y1)]
    }
}

fn f(r: &Rational) -> f64 {
    r.to_f64()
}

/// Corners of the region where `h` holds inside the clip box
/// (Sutherland-Hodgman against a single half-plane).
fn clip(h: &HalfPlane, poly: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let (a, b) = (f(&h.slope), f(&h.intercept));
    let side = |p: (f64, f64)| {
        let d = p.1 - (a * p.0 + b);
        if h.region == Side::Above {
            d
        } else {
            -d
        }
    };
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        let (dp, dq) = (side(p), side(q));
        if dp >= 0.0 {
            out.push(p);
        }
        if (dp >= 0.0) != (dq >= 0.0) {
            let t = dp / (dp - dq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

fn frame_for(instance: &Instance) -> Frame {
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    match instance {
        Instance::Points(p) => p.iter().for_each(|p| {
            xs.push(f(&p.x));
            ys.push(f(&p.y));
        }),
        Instance::BottomlessRects(r) => r.iter().for_each(|r| {
            xs.extend([f(&r.a), f(&r.b)]);
            ys.push(f(&r.c));
        }),
        Instance::BaselineRects(r) => {
            ys.push(0.0);
            r.iter().for_each(|r| {
                xs.extend([f(&r.a), f(&r.b)]);
                ys.extend([f(&r.bottom), f(&r.top)]);
            })
        }
        Instance::HalfPlanes(h) => {
            for i in 0..h.len() {
                for j in i + 1..h.len() {
                    let ds = f(&h[i].slope) - f(&h[j].slope);
                    if ds != 0.0 {
                        let x = (f(&h[j].intercept) - f(&h[i].intercept)) / ds;
                        xs.push(x);
                        ys.push(f(&h[i].slope) * x + f(&h[i].intercept));
                    }
                }
            }
            if xs.is_empty() {
                xs.extend([-1.0, 1.0]);
                ys.extend(h.iter().map(|h| f(&h.intercept)));
            }
        }
    }
    let mut frame = Frame::around(&xs, &ys);
    if let Instance::BottomlessRects(_) = instance {
        // leave room below the lowest top
        frame.y0 -= 0.2 * (frame.y1 - frame.y0);
    }
    frame
}

/// The instance drawn in an 800 x 800 SVG; regions are filled in their color.
pub fn render_svg(instance: &Instance, col: Option<&Coloring>) -> String {
    let fr = frame_for(instance);
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#).unwrap();
    writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#).unwrap();
    match instance {
        Instance::Points(p) => {
            for (i, p) in p.iter().enumerate() {
                let (x, y) = (fr.sx(f(&p.x)), fr.sy(f(&p.y)));
                writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="{}"/>"#, fill(col, i)).unwrap();
            }
        }
        Instance::BottomlessRects(r) => {
            for (i, r) in r.iter().enumerate() {
                let (x0, x1, top) = (fr.sx(f(&r.a)), fr.sx(f(&r.b)), fr.sy(f(&r.c)));
                let c = fill(col, i);
                writeln!(
                    s,
                    r#"<rect x="{x0:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="{c}" fill-opacity="0.25" stroke="{c}"/>"#,
                    x1 - x0,
                    SIZE - top
                )
                .unwrap();
            }
        }
        Instance::BaselineRects(r) => {
            let base = fr.sy(0.0);
            writeln!(s, r##"<line x1="0" y1="{base:.2}" x2="{SIZE}" y2="{base:.2}" stroke="#000" stroke-dasharray="6 4"/>"##)
                .unwrap();
            for (i, r) in r.iter().enumerate() {
                let (x0, x1) = (fr.sx(f(&r.a)), fr.sx(f(&r.b)));
                let (top, bottom) = (fr.sy(f(&r.top)), fr.sy(f(&r.bottom)));
                let c = fill(col, i);
                writeln!(
                    s,
                    r#"<rect x="{x0:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="{c}" fill-opacity="0.25" stroke="{c}"/>"#,
                    x1 - x0,
                    bottom - top
                )
                .unwrap();
            }
        }
        Instance::HalfPlanes(h) => {
            for (i, h) in h.iter().enumerate() {
                let poly = clip(h, &fr.corners());
                let c = fill(col, i);
                let pts: Vec<String> = poly.iter().map(|&(x, y)| format!("{:.2},{:.2}", fr.sx(x), fr.sy(y))).collect();
                writeln!(s, r#"<polygon points="{}" fill="{c}" fill-opacity="0.15"/>"#, pts.join(" ")).unwrap();
                let at = |x: f64| fr.sy(f(&h.slope) * x + f(&h.intercept));
                writeln!(s, r#"<line x1="0" y1="{:.2}" x2="{SIZE}" y2="{:.2}" stroke="{c}"/>"#, at(fr.x0), at(fr.x1)).unwrap();
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
