//! Static SVG 1.1 drawing of a plane section `C_A ⊂ {x_3 = 0}`.
//!
//! The y axis points up, so SVG coordinates are `(x, −y)`. All numbers are
//! printed with six decimals, which keeps output byte-for-byte stable.

use std::fmt::Write;

use alcove::polytope::{VertexSet, VertexTag};
use alcove::{Point, Scalar};

/// Renders the polygon, its tagged vertices, the origin and optional span
/// samples. `vertices` must have order 3.
pub fn render(vertices: &VertexSet, span: &[Point]) -> String {
    let corners = hull(vertices.points().map(planar).collect());
    let view = ViewBox::around(vertices.points().map(planar));
    let mark = view.size * 0.015;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        num(view.x),
        num(view.y),
        num(view.size),
        num(view.size)
    )
    .unwrap();
    let stroke = num(mark / 4.0);

    let points: Vec<String> = corners
        .iter()
        .map(|(x, y)| format!("{},{}", num(x.to_f64()), num(-y.to_f64())))
        .collect();
    writeln!(
        out,
        "  <polygon class=\"polytope\" points=\"{}\" fill=\"#dbe8f5\" stroke=\"#2b5d8a\" stroke-width=\"{stroke}\"/>",
        points.join(" ")
    )
    .unwrap();

    if !span.is_empty() {
        out.push_str("  <g class=\"span\" fill=\"#999999\">\n");
        for p in span {
            let (x, y) = planar(p);
            writeln!(
                out,
                "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                num(x.to_f64()),
                num(-y.to_f64()),
                num(mark / 3.0)
            )
            .unwrap();
        }
        out.push_str("  </g>\n");
    }

    writeln!(
        out,
        "  <g class=\"origin\" stroke=\"#000000\" stroke-width=\"{stroke}\">\n    <line x1=\"{}\" y1=\"0.000000\" x2=\"{}\" y2=\"0.000000\"/>\n    <line x1=\"0.000000\" y1=\"{}\" x2=\"0.000000\" y2=\"{}\"/>\n  </g>",
        num(-mark),
        num(mark),
        num(-mark),
        num(mark)
    )
    .unwrap();

    out.push_str("  <g class=\"generators\" fill=\"#c0392b\">\n");
    for p in vertices.with_tag(VertexTag::Generator) {
        let (x, y) = planar(p);
        writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            num(x.to_f64()),
            num(-y.to_f64()),
            num(mark)
        )
        .unwrap();
    }
    out.push_str("  </g>\n");

    out.push_str("  <g class=\"pseudovertices\" fill=\"#27ae60\">\n");
    for p in vertices.with_tag(VertexTag::Pseudovertex) {
        let (x, y) = planar(p);
        writeln!(
            out,
            "    <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>",
            num(x.to_f64() - mark),
            num(-y.to_f64() - mark),
            num(2.0 * mark),
            num(2.0 * mark)
        )
        .unwrap();
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

fn planar(p: &Point) -> (Scalar, Scalar) {
    (p[0].clone(), p[1].clone())
}

/// Six decimals, with negative zero printed as zero.
fn num(v: f64) -> String {
    let text = format!("{v:.6}");
    if text == "-0.000000" {
        "0.000000".into()
    } else {
        text
    }
}

/// A square view box: the bounding box of the vertices and the origin,
/// widened by 10% of its larger side on every edge.
struct ViewBox {
    x: f64,
    y: f64,
    size: f64,
}

impl ViewBox {
    fn around(points: impl Iterator<Item = (Scalar, Scalar)>) -> Self {
        let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for (x, y) in points {
            let (x, y) = (x.to_f64(), -y.to_f64());
            lo_x = lo_x.min(x);
            hi_x = hi_x.max(x);
            lo_y = lo_y.min(y);
            hi_y = hi_y.max(y);
        }
        let side = (hi_x - lo_x).max(hi_y - lo_y);
        let margin = if side > 0.0 { side * 0.1 } else { 1.0 };
        let size = side + 2.0 * margin;
        // centre the shorter side
        let x = (lo_x + hi_x - size) / 2.0;
        let y = (lo_y + hi_y - size) / 2.0;
        ViewBox { x, y, size }
    }
}

/// Convex hull corners in counter-clockwise order (monotone chain, exact).
fn hull(mut pts: Vec<(Scalar, Scalar)>) -> Vec<(Scalar, Scalar)> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: &(Scalar, Scalar), a: &(Scalar, Scalar), b: &(Scalar, Scalar)| {
        (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
    };
    let mut lower: Vec<(Scalar, Scalar)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(Scalar, Scalar)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
