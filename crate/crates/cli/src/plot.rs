//! Marching squares over the affine chart `z = 1`.

use std::fmt::Write;

use conchoid_core::algebra::MultiPoly;
use conchoid_core::scalar::promote;
use conchoid_core::{Error, Field, Rational, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct PlotSpec {
    pub window: (Rational, Rational, Rational, Rational),
    /// Cells per axis.
    pub grid: usize,
    pub stroke: String,
    pub stroke_width: f64,
}

impl PlotSpec {
    pub fn new(window: (Rational, Rational, Rational, Rational), grid: usize) -> Result<Self> {
        let (x0, x1, y0, y1) = &window;
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::InvalidArgument("degenerate plot window".into()));
        }
        if grid < 16 {
            return Err(Error::InvalidArgument(format!("grid {grid} is below 16")));
        }
        Ok(PlotSpec {
            window,
            grid,
            stroke: "black".into(),
            stroke_width: 0.0,
        })
    }
}

type Point = (f64, f64);

/// Sign changes of `f(x, y, 1)` on the grid, joined into segments.
pub fn segments<K: Field>(f: &MultiPoly<K>, spec: &PlotSpec) -> Result<Vec<(Point, Point)>> {
    if !f.is_real() {
        return Err(Error::InvalidArgument("cannot plot a curve with imaginary coefficients".into()));
    }
    let (x0, x1, y0, y1) = &spec.window;
    let n = spec.grid;
    let steps = Rational::from_integer((n as i64).into());
    let dx = (x1 - x0) / &steps;
    let dy = (y1 - y0) / &steps;
    let xs: Vec<Rational> = (0..=n).map(|i| x0 + &dx * Rational::from_integer((i as i64).into())).collect();
    let ys: Vec<Rational> = (0..=n).map(|j| y0 + &dy * Rational::from_integer((j as i64).into())).collect();
    let nv = f.nvars();
    // values[j][i] at (xs[i], ys[j]), evaluated exactly then rounded
    let values: Vec<Vec<f64>> = ys
        .iter()
        .map(|y| {
            xs.iter()
                .map(|x| {
                    let mut pt = vec![K::one(); nv];
                    pt[0] = promote(x);
                    if nv > 1 {
                        pt[1] = promote(y);
                    }
                    f.eval(&pt).to_f64().unwrap_or(0.0)
                })
                .collect()
        })
        .collect();
    let fx: Vec<f64> = xs.iter().map(|x| to_f64(x)).collect();
    let fy: Vec<f64> = ys.iter().map(|y| to_f64(y)).collect();

    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..n {
            // corners counterclockwise from the lower left
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let v: Vec<f64> = corners.iter().map(|&(a, b)| values[b][a]).collect();
            let p: Vec<Point> = corners.iter().map(|&(a, b)| (fx[a], fy[b])).collect();
            let cross = |k: usize| -> Point {
                let l = (k + 1) % 4;
                let t = if v[k] == v[l] { 0.5 } else { v[k] / (v[k] - v[l]) };
                (p[k].0 + t * (p[l].0 - p[k].0), p[k].1 + t * (p[l].1 - p[k].1))
            };
            let case = (0..4).fold(0, |acc, k| acc | (usize::from(v[k] > 0.0) << k));
            let centre_pos = v.iter().sum::<f64>() > 0.0;
            let edges: &[(usize, usize)] = match case {
                0 | 15 => &[],
                1 | 14 => &[(3, 0)],
                2 | 13 => &[(0, 1)],
                3 | 12 => &[(3, 1)],
                4 | 11 => &[(1, 2)],
                6 | 9 => &[(0, 2)],
                7 | 8 => &[(2, 3)],
                5 if centre_pos => &[(3, 2), (0, 1)],
                5 => &[(3, 0), (1, 2)],
                10 if centre_pos => &[(3, 0), (1, 2)],
                10 => &[(3, 2), (0, 1)],
                _ => unreachable!(),
            };
            out.extend(edges.iter().map(|&(a, b)| (cross(a), cross(b))));
        }
    }
    Ok(out)
}

fn to_f64(q: &Rational) -> f64 {
    <Rational as Field>::to_f64(q).unwrap_or(0.0)
}

/// SVG 1.1 document with one path through all segments. The `y` axis points
/// up.
pub fn render_svg<K: Field>(f: &MultiPoly<K>, spec: &PlotSpec) -> Result<String> {
    let segs = segments(f, spec)?;
    let (x0, x1, y0, y1) = &spec.window;
    let (x0, x1, y0, y1) = (to_f64(x0), to_f64(x1), to_f64(y0), to_f64(y1));
    let width = if spec.stroke_width > 0.0 {
        spec.stroke_width
    } else {
        (x1 - x0).max(y1 - y0) / 300.0
    };
    let mut d = String::new();
    for ((ax, ay), (bx, by)) in &segs {
        write!(d, "M{:.6} {:.6}L{:.6} {:.6}", ax, -ay, bx, -by).unwrap();
    }
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        x0,
        -y1,
        x1 - x0,
        y1 - y0
    )
    .unwrap();
    if !segs.is_empty() {
        writeln!(
            svg,
            "<path d=\"{d}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{:.6}\" stroke-linecap=\"round\"/>",
            spec.stroke, width
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
