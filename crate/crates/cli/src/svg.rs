//! Deterministic SVG pictures of planar tropical polytopes.
//!
//! Coordinates are the affine chart; the y axis points up. The viewport is the
//! bounding box of the drawn points with a 10% margin on each side. Every
//! number is written with four decimals, so equal inputs give equal bytes.

use std::collections::BTreeSet;
use std::fmt::Write;

use num_traits::ToPrimitive;
use tropconv::{segment_breakpoints, AffinePoint2, Halfspace, Rat};

#[derive(Debug, Clone, Default)]
pub struct RenderOptions {
    /// Horizontal, vertical and diagonal lines through the vertices.
    pub arrangement: bool,
    /// Boundary pseudovertices, drawn white.
    pub pseudovertices: Option<Vec<AffinePoint2>>,
    /// A halfspace whose sectors are shaded.
    pub halfspace: Option<Halfspace>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Pt {
    x: f64,
    y: f64,
}

fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

fn pt(p: &AffinePoint2) -> Pt {
    Pt {
        x: to_f64(&p.x),
        y: to_f64(&p.y),
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy)]
struct Viewport {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Viewport {
    fn around(points: &[Pt]) -> Self {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        let span = (x1 - x0).max(y1 - y0);
        let span = if span > 0.0 { span } else { 1.0 };
        // degenerate boxes get the other side's extent
        let (w, h) = ((x1 - x0).max(span * 0.25), (y1 - y0).max(span * 0.25));
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        let (w, h) = (w * 1.2, h * 1.2);
        Viewport {
            x0: cx - w / 2.0,
            y0: cy - h / 2.0,
            x1: cx + w / 2.0,
            y1: cy + h / 2.0,
        }
    }

    fn size(&self) -> f64 {
        (self.x1 - self.x0).max(self.y1 - self.y0)
    }

    fn corners(&self) -> Vec<Pt> {
        vec![
            Pt { x: self.x0, y: self.y0 },
            Pt { x: self.x1, y: self.y0 },
            Pt { x: self.x1, y: self.y1 },
            Pt { x: self.x0, y: self.y1 },
        ]
    }
}

/// `a·x + b·y ≤ c`.
#[derive(Debug, Clone, Copy)]
struct HalfPlane {
    a: f64,
    b: f64,
    c: f64,
}

impl HalfPlane {
    fn value(&self, p: Pt) -> f64 {
        self.a * p.x + self.b * p.y - self.c
    }
}

/// Sutherland–Hodgman clipping of a convex polygon.
fn clip(polygon: Vec<Pt>, plane: HalfPlane) -> Vec<Pt> {
    let mut out = Vec::with_capacity(polygon.len() + 1);
    for i in 0..polygon.len() {
        let (p, q) = (polygon[i], polygon[(i + 1) % polygon.len()]);
        let (vp, vq) = (plane.value(p), plane.value(q));
        if vp <= 0.0 {
            out.push(p);
        }
        if (vp < 0.0 && vq > 0.0) || (vp > 0.0 && vq < 0.0) {
            let t = vp / (vp - vq);
            out.push(Pt {
                x: p.x + t * (q.x - p.x),
                y: p.y + t * (q.y - p.y),
            });
        }
    }
    out
}

/// The closed sector `k` at `apex` in the chart, as two half-planes.
fn sector_planes(apex: Pt, k: usize) -> [HalfPlane; 2] {
    let s = apex.y - apex.x;
    match k {
        0 => [
            HalfPlane { a: -1.0, b: 0.0, c: -apex.x },
            HalfPlane { a: 0.0, b: -1.0, c: -apex.y },
        ],
        1 => [
            HalfPlane { a: 1.0, b: 0.0, c: apex.x },
            HalfPlane { a: 1.0, b: -1.0, c: -s },
        ],
        _ => [
            HalfPlane { a: 0.0, b: 1.0, c: apex.y },
            HalfPlane { a: -1.0, b: 1.0, c: s },
        ],
    }
}

struct Canvas {
    body: String,
}

impl Canvas {
    /// SVG's y axis points down.
    fn y(&self, y: f64) -> f64 {
        -y
    }

    fn path(&self, points: &[Pt]) -> String {
        points
            .iter()
            .map(|p| format!("{},{}", num(p.x), num(self.y(p.y))))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn polygon(&mut self, class: &str, points: &[Pt]) {
        let path = self.path(points);
        writeln!(self.body, r#"  <polygon class="{class}" points="{path}"/>"#).unwrap();
    }

    fn polyline(&mut self, class: &str, points: &[Pt]) {
        let path = self.path(points);
        writeln!(self.body, r#"  <polyline class="{class}" points="{path}"/>"#).unwrap();
    }

    fn line(&mut self, class: &str, a: Pt, b: Pt) {
        writeln!(
            self.body,
            r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(a.x),
            num(self.y(a.y)),
            num(b.x),
            num(self.y(b.y))
        )
        .unwrap();
    }

    fn circle(&mut self, class: &str, p: Pt, r: f64) {
        writeln!(
            self.body,
            r#"  <circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            num(p.x),
            num(self.y(p.y)),
            num(r)
        )
        .unwrap();
    }
}

/// The boundary of the hull as one closed polyline in the chart.
fn boundary(vertices: &[AffinePoint2]) -> Vec<Pt> {
    let h = vertices.len();
    let mut out: Vec<Pt> = Vec::new();
    if h == 1 {
        return vec![pt(&vertices[0])];
    }
    for i in 0..h {
        let (u, w) = (vertices[i].to_trop(), vertices[(i + 1) % h].to_trop());
        let pieces = segment_breakpoints(&u, &w).expect("points of the plane");
        for p in pieces {
            let p = pt(&AffinePoint2::from_trop(&p).expect("points of the plane"));
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
    }
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Renders input points and their hull vertices.
pub fn render_svg(points: &[AffinePoint2], vertices: &[AffinePoint2], options: &RenderOptions) -> String {
    let mut extent: Vec<Pt> = points.iter().map(pt).collect();
    if let Some(h) = &options.halfspace {
        extent.push(pt(&AffinePoint2::from_trop(&h.apex).expect("planar halfspace")));
    }
    let view = Viewport::around(&extent);
    let mut canvas = Canvas { body: String::new() };
    let size = view.size();

    if let Some(h) = &options.halfspace {
        let apex = pt(&AffinePoint2::from_trop(&h.apex).expect("planar halfspace"));
        for &k in h.indices() {
            let mut region = view.corners();
            for plane in sector_planes(apex, k) {
                region = clip(region, plane);
            }
            if region.len() >= 3 {
                canvas.polygon(&format!("sector sector-{k}"), &region);
            }
        }
    }

    let outline = boundary(vertices);
    if outline.len() >= 3 {
        canvas.polygon("hull", &outline);
    }
    let h = vertices.len();
    if h >= 2 {
        let facets = if h == 2 { 1 } else { h };
        for i in 0..facets {
            let pair = [vertices[i].clone(), vertices[(i + 1) % h].clone()];
            let piece = boundary(&pair);
            // boundary() closes the loop; a single facet is the forward half
            let u = pt(&pair[0]);
            let w = pt(&pair[1]);
            let mut line: Vec<Pt> = Vec::new();
            for p in piece.iter().copied() {
                line.push(p);
                if p == w {
                    break;
                }
            }
            debug_assert_eq!(line.first(), Some(&u));
            canvas.polyline("facet", &line);
        }
    }

    if options.arrangement {
        let xs: BTreeSet<&Rat> = vertices.iter().map(|v| &v.x).collect();
        let ys: BTreeSet<&Rat> = vertices.iter().map(|v| &v.y).collect();
        let ss: BTreeSet<Rat> = vertices.iter().map(AffinePoint2::s).collect();
        for x in xs {
            let x = to_f64(x);
            canvas.line("arrangement", Pt { x, y: view.y0 }, Pt { x, y: view.y1 });
        }
        for y in ys {
            let y = to_f64(y);
            canvas.line("arrangement", Pt { x: view.x0, y }, Pt { x: view.x1, y });
        }
        for s in &ss {
            let s = to_f64(s);
            let lo = view.x0.max(view.y0 - s);
            let hi = view.x1.min(view.y1 - s);
            if lo < hi {
                canvas.line("arrangement", Pt { x: lo, y: lo + s }, Pt { x: hi, y: hi + s });
            }
        }
    }

    let r = size * 0.012;
    for p in points {
        canvas.circle("input-point", pt(p), r);
    }
    if let Some(pv) = &options.pseudovertices {
        for p in pv {
            canvas.circle("pseudovertex", pt(p), r);
        }
    }

    let (vx, vy, vw, vh) = (view.x0, -view.y1, view.x1 - view.x0, view.y1 - view.y0);
    let width = 600.0;
    let height = (width * vh / vw).round();
    let mut doc = String::new();
    writeln!(doc, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        doc,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(width),
        num(height),
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    )
    .unwrap();
    writeln!(doc, "  <style>").unwrap();
    writeln!(doc, "    .hull {{ fill: #c8d8f0; stroke: none; }}").unwrap();
    writeln!(doc, "    .sector {{ fill: #f0e0a0; fill-opacity: 0.5; stroke: none; }}").unwrap();
    writeln!(doc, "    .facet {{ fill: none; stroke: #203060; stroke-width: 2; vector-effect: non-scaling-stroke; }}").unwrap();
    writeln!(doc, "    .arrangement {{ stroke: #909090; stroke-width: 1; stroke-dasharray: 4 3; vector-effect: non-scaling-stroke; }}").unwrap();
    writeln!(doc, "    .input-point {{ fill: black; }}").unwrap();
    writeln!(doc, "    .pseudovertex {{ fill: white; stroke: black; stroke-width: 1; vector-effect: non-scaling-stroke; }}").unwrap();
    writeln!(doc, "  </style>").unwrap();
    doc.push_str(&canvas.body);
    writeln!(doc, "</svg>").unwrap();
    doc
}
