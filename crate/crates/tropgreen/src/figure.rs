//! Figure export: projectivized weak-basis vertices of a row or column
//! space plus sampled hull points, written as CSV (RFC 4180) and as an SVG
//! scatter. The SVG is a scatter of vertices and samples, not an exact
//! boundary computation.

use std::fmt::Write as _;
use std::path::Path;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::convex::{combine, ConvexSet};
use crate::error::{Error, Result};
use crate::linalg::{ProjPoint, TropMatrix, TropVector};
use crate::scalar::TropScalar;

/// Row or column space selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Rows,
    Cols,
}

/// Everything the export computed; files are rendered from this.
#[derive(Debug, Clone)]
pub struct FigureData {
    /// chart coordinates of the weak-basis vertices (length `n - 1` each)
    pub vertices: Vec<Vec<TropScalar>>,
    /// chart coordinates of sampled hull points
    pub samples: Vec<Vec<TropScalar>>,
    /// the two coordinates used for drawing, per vertex
    pub plot_vertices: Vec<(TropScalar, TropScalar)>,
    pub plot_samples: Vec<(TropScalar, TropScalar)>,
    /// samples skipped because their pivot coordinate was not finite
    pub skipped_samples: usize,
}

/// Chart a vector by the pivot coordinate: subtract entry `pivot` and drop
/// it. `pivot = n-1` is the plain drop-last chart.
fn chart_by(x: &TropVector, pivot: usize) -> Result<Vec<TropScalar>> {
    let p = x.get(pivot);
    if !p.is_finite() {
        return Err(Error::ChartUndefined(format!(
            "pivot coordinate {pivot} is {p}, not finite"
        )));
    }
    let neg = p.neg_unchecked();
    Ok(x.entries()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pivot)
        .map(|(_, e)| neg.t_mul(e))
        .collect())
}

/// Compute the figure for one space of a matrix.
///
/// `chart_pivot` overrides the chart coordinate (0-based); by default the
/// final coordinate is used, and every weak-basis vertex must be finite
/// there. The drawing plane is the first two chart coordinates; any
/// further chart coordinates must be constant across the plotted points.
pub fn figure_data(
    m: &TropMatrix,
    space: Space,
    samples: usize,
    seed: u64,
    chart_pivot: Option<usize>,
) -> Result<FigureData> {
    let set = match space {
        Space::Rows => ConvexSet::row_space(m),
        Space::Cols => ConvexSet::col_space(m),
    };
    let n = set.ambient_dim();
    let pivot = match chart_pivot {
        Some(k) if k < n => k,
        Some(k) => {
            return Err(Error::ChartUndefined(format!(
                "chart coordinate {k} out of range for ambient dimension {n}"
            )))
        }
        None => n - 1,
    };

    let basis: Vec<TropVector> = set.weak_basis().into_iter().cloned().collect();
    if basis.is_empty() {
        return Err(Error::ChartUndefined(
            "the zero space has no vertices to plot".into(),
        ));
    }
    // vertices deduplicate projectively; keep first representatives
    let mut vertex_reps: Vec<ProjPoint> = Vec::new();
    for v in &basis {
        let p = ProjPoint::new(v.clone());
        if !vertex_reps.contains(&p) {
            vertex_reps.push(p);
        }
    }
    let vertices: Vec<Vec<TropScalar>> = vertex_reps
        .iter()
        .map(|p| chart_by(p.original(), pivot))
        .collect::<Result<_>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample_charts = Vec::new();
    let mut skipped = 0usize;
    for _ in 0..samples {
        let coeffs: Vec<TropScalar> = basis
            .iter()
            .map(|_| TropScalar::int(rng.gen_range(-8..=0)))
            .collect();
        let point = combine(n, &basis, &coeffs);
        match chart_by(&point, pivot) {
            Ok(c) => sample_charts.push(c),
            Err(_) => skipped += 1,
        }
    }

    let plane = |charts: &[Vec<TropScalar>]| -> Result<Vec<(TropScalar, TropScalar)>> {
        charts
            .iter()
            .map(|c| match c.len() {
                0 => Err(Error::ChartUndefined("chart dimension is zero".into())),
                1 => Ok((c[0].clone(), TropScalar::int(0))),
                _ => Ok((c[0].clone(), c[1].clone())),
            })
            .collect()
    };
    // the drawing plane must not hide variation in trailing coordinates
    for c in vertices.iter().chain(sample_charts.iter()) {
        for (k, e) in c.iter().enumerate().skip(2) {
            if *e != vertices[0][k] {
                return Err(Error::ChartUndefined(format!(
                    "chart coordinate {k} varies across points; not drawable in 2D"
                )));
            }
        }
    }
    let plot_vertices = plane(&vertices)?;
    let plot_samples = plane(&sample_charts)?;

    Ok(FigureData {
        vertices,
        samples: sample_charts,
        plot_vertices,
        plot_samples,
        skipped_samples: skipped,
    })
}

/// RFC 4180 CSV: header, then one record per point (`kind` first).
pub fn render_csv(data: &FigureData) -> String {
    let dim = data.vertices.first().map_or(0, |v| v.len());
    let mut out = String::new();
    let mut header = vec!["kind".to_string()];
    for i in 1..=dim {
        header.push(format!("x{i}"));
    }
    out.push_str(&header.join(","));
    out.push_str("\r\n");
    let mut push_row = |kind: &str, coords: &[TropScalar]| {
        let mut fields = vec![kind.to_string()];
        fields.extend(coords.iter().map(|c| c.to_text()));
        out.push_str(&fields.join(","));
        out.push_str("\r\n");
    };
    for v in &data.vertices {
        push_row("vertex", v);
    }
    for s in &data.samples {
        push_row("sample", s);
    }
    out
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

/// SVG 1.1 scatter: samples as small gray dots, vertices as labeled black
/// dots. Points with non-finite plot coordinates are listed in the CSV but
/// left out of the drawing.
pub fn render_svg(data: &FigureData) -> String {
    let finite: Vec<(f64, f64, bool)> = data
        .plot_vertices
        .iter()
        .map(|p| (p, true))
        .chain(data.plot_samples.iter().map(|p| (p, false)))
        .filter_map(
            |((x, y), is_vertex)| match (x.as_rational(), y.as_rational()) {
                (Some(a), Some(b)) => Some((to_f64(a), to_f64(b), is_vertex)),
                _ => None,
            },
        )
        .collect();

    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if let Some(&(x, y, _)) = finite.first() {
        (min_x, max_x, min_y, max_y) = (x, x, y, y);
    }
    for &(x, y, _) in &finite {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span_x = (max_x - min_x).max(1.0);
    let span_y = (max_y - min_y).max(1.0);
    let (w, h, margin) = (420.0, 420.0, 40.0);
    let sx = |x: f64| margin + (x - min_x) / span_x * (w - 2.0 * margin);
    let sy = |y: f64| h - margin - (y - min_y) / span_y * (h - 2.0 * margin);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(svg, "  <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
    for &(x, y, _) in finite.iter().filter(|&&(_, _, is_vertex)| !is_vertex) {
        let _ = writeln!(
            svg,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.6\" fill=\"#9a9a9a\"/>",
            sx(x),
            sy(y)
        );
    }
    for &(x, y, _) in finite.iter().filter(|&&(_, _, is_vertex)| is_vertex) {
        let _ = writeln!(
            svg,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4.5\" fill=\"black\"/>",
            sx(x),
            sy(y)
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" font-family=\"monospace\">({}, {})</text>",
            sx(x) + 7.0,
            sy(y) - 5.0,
            trim_float(x),
            trim_float(y)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn trim_float(v: f64) -> String {
    if v.fract() == 0.0 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

/// Compute and write both files. Either path may be omitted.
pub fn export_figure(
    m: &TropMatrix,
    space: Space,
    csv_path: Option<&Path>,
    svg_path: Option<&Path>,
    samples: usize,
    seed: u64,
    chart_pivot: Option<usize>,
) -> Result<FigureData> {
    let data = figure_data(m, space, samples, seed, chart_pivot)?;
    if let Some(p) = csv_path {
        std::fs::write(p, render_csv(&data))
            .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    if let Some(p) = svg_path {
        std::fs::write(p, render_svg(&data))
            .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::SemiringFlavor;

    fn pairs(data: &FigureData) -> Vec<(i64, i64)> {
        let mut out: Vec<(i64, i64)> = data
            .plot_vertices
            .iter()
            .map(|(x, y)| {
                let xi = x.as_rational().unwrap().to_integer();
                let yi = y.as_rational().unwrap().to_integer();
                (i64::try_from(xi).unwrap(), i64::try_from(yi).unwrap())
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn vertex_sets_match_the_printed_labels() {
        let a61_cols = figure_data(&fixtures::a61(), Space::Cols, 50, 1, None).unwrap();
        assert_eq!(pairs(&a61_cols), vec![(0, 0), (1, -1), (2, -2), (3, -3)]);

        let b61_cols = figure_data(&fixtures::b61(), Space::Cols, 50, 1, None).unwrap();
        assert_eq!(pairs(&b61_cols), vec![(0, 0), (1, -2), (3, -3)]);

        let a63_rows = figure_data(&fixtures::a63(), Space::Rows, 50, 1, None).unwrap();
        assert_eq!(pairs(&a63_rows), vec![(0, 0), (1, 5), (3, 2)]);
    }

    #[test]
    fn single_generator_space() {
        let m = TropMatrix::from_ints(SemiringFlavor::FT, &[&[1, 2, 3], &[1, 2, 3]]);
        let data = figure_data(&m, Space::Rows, 10, 9, None).unwrap();
        assert_eq!(data.vertices.len(), 1);
        for s in &data.samples {
            assert_eq!(s, &data.vertices[0]);
        }
    }

    #[test]
    fn chart_override_for_t_flavor() {
        // the 6.2 matrices have -inf final coordinates; pivot on the third
        let a = fixtures::a62();
        let data = figure_data(&a, Space::Cols, 20, 5, Some(2)).unwrap();
        assert_eq!(data.vertices.len(), 3);
        // default pivot is undefined there
        assert!(matches!(
            figure_data(&a, Space::Cols, 0, 5, None),
            Err(Error::ChartUndefined(_))
        ));
    }

    #[test]
    fn csv_is_crlf_with_header() {
        let data = figure_data(&fixtures::a63(), Space::Rows, 3, 2, None).unwrap();
        let csv = render_csv(&data);
        assert!(csv.starts_with("kind,x1,x2\r\n"));
        assert_eq!(
            csv.lines().count(),
            1 + data.vertices.len() + data.samples.len()
        );
    }

    #[test]
    fn svg_is_renderable_scatter() {
        let data = figure_data(&fixtures::b61(), Space::Cols, 25, 3, None).unwrap();
        let svg = render_svg(&data);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("circle"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
