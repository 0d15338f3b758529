//! Static SVG drawings of angulations.
//!
//! The annulus is drawn as two concentric circles. A point of the universal
//! cover with horizontal coordinate `x` and height `y` (0 on the inner line,
//! 1 on the outer line) is drawn at angle `2πx` and at a radius interpolated
//! between the two circles, so type-1 diagonals with large winding spiral
//! around the hole exactly as their lifts prescribe. Arcs of types 2 and 3
//! bulge towards the other boundary by an amount growing with their span.

use std::f64::consts::TAU;
use std::fmt::Write;

use angulator::{lift, Angulation, MDiagonal, Rational};

const SIZE: f64 = 520.0;
const CENTER: f64 = SIZE / 2.0;
const OUTER: f64 = 220.0;
const INNER: f64 = 90.0;
const SAMPLES: usize = 64;

fn to_f64(x: Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Screen position of the cover point `(x, y)`.
fn place(x: f64, y: f64) -> (f64, f64) {
    let r = INNER + y * (OUTER - INNER);
    let angle = TAU * x;
    (CENTER + r * angle.cos(), CENTER - r * angle.sin())
}

fn path(points: &[(f64, f64)]) -> String {
    let mut d = String::new();
    for (k, (x, y)) in points.iter().enumerate() {
        let cmd = if k == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{x:.2},{y:.2} ").expect("writing to a String");
    }
    d.trim_end().to_string()
}

fn diagonal_points(a: &Angulation, d: &MDiagonal) -> Vec<(f64, f64)> {
    let arc = lift(a.config(), d, 0);
    let (x0, x1) = (to_f64(arc.start.x), to_f64(arc.end.x));
    (0..=SAMPLES)
        .map(|k| {
            let t = k as f64 / SAMPLES as f64;
            let x = x0 + t * (x1 - x0);
            let bulge = (0.9 * (x1 - x0).abs()).min(0.8) * 4.0 * t * (1.0 - t);
            let y = match d {
                MDiagonal::Type1 { .. } => 1.0 - t,
                MDiagonal::Type2 { .. } => 1.0 - bulge,
                MDiagonal::Type3 { .. } => bulge,
            };
            place(x, y)
        })
        .collect()
}

/// A deterministic SVG document showing `a` with labelled vertices.
pub fn render(a: &Angulation) -> String {
    let c = a.config();
    let mut out = String::new();
    let w = |out: &mut String, s: String| out.push_str(&s);
    w(
        &mut out,
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
        ),
    );
    w(&mut out, format!("  <title>{a}</title>\n"));
    w(
        &mut out,
        "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n".into(),
    );
    for r in [OUTER, INNER] {
        w(
            &mut out,
            format!("  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{r}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"),
        );
    }
    let palette = ["#1f77b4", "#d62728", "#2ca02c"];
    for d in a.diagonals() {
        let colour = palette[usize::from(d.type_number()) - 1];
        w(
            &mut out,
            format!(
                "  <path d=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"1.5\"><title>{d}</title></path>\n",
                path(&diagonal_points(a, d))
            ),
        );
    }
    let vertices = (0..c.outer_count())
        .map(|j| {
            (
                format!("O{j}"),
                j as f64 / c.outer_count() as f64,
                1.0,
                14.0,
            )
        })
        .chain((0..c.inner_count()).map(|j| {
            (
                format!("I{j}"),
                -(j as f64) / c.inner_count() as f64,
                0.0,
                -14.0,
            )
        }));
    for (label, x, y, push) in vertices {
        let (px, py) = place(x, y);
        let (lx, ly) = place(x, y + push / (OUTER - INNER));
        w(
            &mut out,
            format!("  <circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"3\" fill=\"black\"/>\n"),
        );
        w(
            &mut out,
            format!(
                "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">{label}</text>\n"
            ),
        );
    }
    out.push_str("</svg>\n");
    out
}
