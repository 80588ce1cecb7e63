//! Deterministic SVG rendering of sites, skeleton edges and lens outlines.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::l1::LensFamilyL1;
use crate::metric::{Lens, LensForm, Metric, Point2};
use crate::segments::Segment;
use crate::skeleton::Edge;

/// Samples per disc boundary.
pub const DISC_SAMPLES: usize = 256;

#[derive(Debug, Clone, PartialEq)]
pub enum Sites {
    Points(Vec<Point2>),
    Segments(Vec<Segment>),
    /// A drawn graph: vertex positions, its edges, and which vertices are
    /// sites.
    Graph {
        positions: Vec<Point2>,
        edges: Vec<(usize, usize)>,
        sites: Vec<usize>,
    },
}

impl Sites {
    fn count(&self) -> usize {
        match self {
            Sites::Points(p) => p.len(),
            Sites::Segments(s) => s.len(),
            Sites::Graph { sites, .. } => sites.len(),
        }
    }

    /// Anchor of site `k` for drawing skeleton edges.
    fn anchor(&self, k: usize) -> Point2 {
        match self {
            Sites::Points(p) => p[k],
            Sites::Segments(s) => s[k].at(0.5),
            Sites::Graph { positions, sites, .. } => positions[sites[k]],
        }
    }

    fn extent_points(&self) -> Vec<Point2> {
        match self {
            Sites::Points(p) => p.clone(),
            Sites::Segments(s) => s.iter().flat_map(|s| [s.p1, s.p2]).collect(),
            Sites::Graph { positions, .. } => positions.clone(),
        }
    }
}

/// Skeleton edges drawn with one style tag.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeLayer {
    pub tag: String,
    pub edges: Vec<Edge>,
}

/// A closed outline in original coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct LensOutline {
    pub tag: String,
    pub rings: Vec<Vec<Point2>>,
}

fn disc_ring(metric: Metric, c: Point2, r: f64) -> Vec<Point2> {
    (0..DISC_SAMPLES)
        .map(|k| {
            let th = std::f64::consts::TAU * k as f64 / DISC_SAMPLES as f64;
            let (s, co) = th.sin_cos();
            c + Point2::new(co, s) * (r / metric.norm(co, s))
        })
        .collect()
}

impl LensOutline {
    /// Both disc boundaries of an lp lens; the segment for `β = 0`; the two
    /// bounding perpendiculars for `β = ∞`.
    pub fn from_lens(lens: &Lens, tag: impl Into<String>) -> Self {
        let rings = match lens.form {
            LensForm::TwoDiscs { c1, c2, radius } => {
                vec![disc_ring(lens.metric, c1, radius), disc_ring(lens.metric, c2, radius)]
            }
            LensForm::Segment => vec![vec![lens.v1, lens.v2]],
            LensForm::Strip => {
                let n = (lens.v2 - lens.v1).perp();
                vec![vec![lens.v1 + n, lens.v1 + n * -1.0], vec![lens.v2 + n, lens.v2 + n * -1.0]]
            }
        };
        LensOutline { tag: tag.into(), rings }
    }

    /// The representatives of an l₁ / l∞ lens family.
    pub fn from_l1_family(family: &LensFamilyL1, tag: impl Into<String>) -> Self {
        LensOutline {
            tag: tag.into(),
            rings: (0..family.representatives.len())
                .map(|k| family.polygon(k).to_vec())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub sites: Sites,
    pub layers: Vec<EdgeLayer>,
    pub lenses: Vec<LensOutline>,
}

impl Scene {
    pub fn new(sites: Sites) -> Self {
        Scene {
            sites,
            layers: Vec::new(),
            lenses: Vec::new(),
        }
    }

    pub fn with_layer(mut self, tag: impl Into<String>, edges: impl IntoIterator<Item = Edge>) -> Self {
        self.layers.push(EdgeLayer {
            tag: tag.into(),
            edges: edges.into_iter().collect(),
        });
        self
    }

    pub fn with_lens(mut self, outline: LensOutline) -> Self {
        self.lenses.push(outline);
        self
    }
}

const PALETTE: [&str; 6] = ["#1f4e79", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085"];

fn fmt(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".into()
    } else {
        s
    }
}

fn xy(p: Point2) -> (String, String) {
    (fmt(p.x), fmt(-p.y))
}

fn sanitize(tag: &str) -> String {
    tag.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

/// SVG 1.1 document of the scene. The y axis points up; the view box is
/// the bounding box of all geometry plus a 5% margin.
pub fn render_scene(scene: &Scene) -> Result<String> {
    if scene.sites.count() == 0 {
        return Err(Error::EmptyScene);
    }
    let mut pts = scene.sites.extent_points();
    pts.extend(scene.lenses.iter().flat_map(|l| l.rings.iter().flatten().copied()));
    if pts.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
        return Err(Error::NonFinite);
    }
    let (mut lo, mut hi) = (pts[0], pts[0]);
    for p in &pts {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let size = (hi.x - lo.x).max(hi.y - lo.y);
    let size = if size > 0.0 { size } else { 1.0 };
    let margin = 0.05 * size;
    let (vx, vy) = (lo.x - margin, -hi.y - margin);
    let (vw, vh) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
    let stroke = fmt(0.004 * size);
    let marker = fmt(0.008 * size);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        fmt(vx),
        fmt(vy),
        fmt(vw),
        fmt(vh)
    );
    let line = |out: &mut String, class: &str, color: &str, width: &str, a: Point2, b: Point2| {
        let ((x1, y1), (x2, y2)) = (xy(a), xy(b));
        let _ = writeln!(
            out,
            r#"  <line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" stroke-width="{width}"/>"#
        );
    };

    if let Sites::Graph { positions, edges, .. } = &scene.sites {
        let _ = writeln!(out, r#"  <g id="graph">"#);
        for &(a, b) in edges {
            line(&mut out, "graph-edge", "#bbbbbb", &stroke, positions[a], positions[b]);
        }
        let _ = writeln!(out, "  </g>");
    }
    for (k, l) in scene.lenses.iter().enumerate() {
        let _ = writeln!(out, r#"  <g id="lens-{k}" class="lens {}">"#, sanitize(&l.tag));
        for ring in &l.rings {
            let pts: Vec<String> = ring.iter().map(|&p| {
                let (x, y) = xy(p);
                format!("{x},{y}")
            }).collect();
            let elem = if ring.len() > 2 { "polygon" } else { "polyline" };
            let _ = writeln!(
                out,
                r##"    <{elem} points="{}" fill="none" stroke="#999999" stroke-width="{stroke}"/>"##,
                pts.join(" ")
            );
        }
        let _ = writeln!(out, "  </g>");
    }
    for (k, layer) in scene.layers.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let class = sanitize(&layer.tag);
        let _ = writeln!(out, r#"  <g id="layer-{k}" class="{class}">"#);
        for &(i, j) in &layer.edges {
            line(&mut out, &class, color, &stroke, scene.sites.anchor(i), scene.sites.anchor(j));
        }
        let _ = writeln!(out, "  </g>");
    }
    let _ = writeln!(out, r#"  <g id="sites">"#);
    match &scene.sites {
        Sites::Segments(segs) => {
            let wide = fmt(0.008 * size);
            for s in segs {
                line(&mut out, "site", "#000000", &wide, s.p1, s.p2);
            }
        }
        sites => {
            for k in 0..sites.count() {
                let (x, y) = xy(sites.anchor(k));
                let _ = writeln!(out, r##"    <circle class="site" cx="{x}" cy="{y}" r="{marker}" fill="#000000"/>"##);
            }
        }
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{lens_construct, Beta};
    use crate::skeleton::{gabriel_graph, PointSet};

    #[test]
    fn single_point() {
        let svg = render_scene(&Scene::new(Sites::Points(vec![Point2::new(1.0, 2.0)]))).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.starts_with("<?xml"));
    }

    #[test]
    fn gabriel_scene() {
        let pts = vec![Point2::new(0.0, 0.0), Point2::new(2.0, 0.0), Point2::new(1.0, 0.1)];
        let g = gabriel_graph(&PointSet::new(pts.clone()).unwrap()).unwrap();
        let lens = lens_construct(Metric::L2, pts[0], pts[1], Beta::Finite(1.0)).unwrap();
        let scene = Scene::new(Sites::Points(pts))
            .with_layer("gabriel", g.edges.iter().copied())
            .with_lens(LensOutline::from_lens(&lens, "witness"));
        let svg = render_scene(&scene).unwrap();
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches(r#"<line class="gabriel""#).count(), 2);
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert_eq!(svg, render_scene(&scene).unwrap());
    }

    #[test]
    fn empty_scene() {
        assert_eq!(render_scene(&Scene::new(Sites::Points(vec![]))), Err(Error::EmptyScene));
    }
}
