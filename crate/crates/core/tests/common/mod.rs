//! Independent oracles shared by the integration tests and the acceptance
//! run. Nothing here calls the geometry it checks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proxiskel::graph::{GraphPoint, WeightedGraph};
use proxiskel::segments::SegmentSet;
use proxiskel::{Edge, Point2, Variant};

pub const EPS_REL: f64 = 1e-9;

pub fn lp_dist(p: f64, a: Point2, b: Point2) -> f64 {
    let (dx, dy) = ((a.x - b.x).abs(), (a.y - b.y).abs());
    let m = dx.max(dy);
    if m == 0.0 {
        return 0.0;
    }
    m * ((dx / m).powf(p) + (dy / m).powf(p)).powf(1.0 / p)
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn lp_grad(p: f64, x: Point2) -> Point2 {
    let n = lp_dist(p, x, Point2::new(0.0, 0.0));
    let g = |v: f64| v.signum() * (v.abs() / n).powf(p - 1.0);
    Point2::new(g(x.x), g(x.y))
}

/// Newton's method on `(d(c, v1) − r, d(c, v2) − r)` from the Euclidean
/// solution; `None` if it does not settle.
fn newton_center(p: f64, v1: Point2, v2: Point2, r: f64) -> Option<Point2> {
    let m = (v1 + v2) * 0.5;
    let e = v2 - v1;
    let half = e.norm2() / 2.0;
    let n = Point2::new(-e.y, e.x) * (1.0 / e.norm2());
    let h = (r * r - half * half).max(0.0).sqrt();
    let mut c = m + n * h;
    for _ in 0..60 {
        let f = (lp_dist(p, c, v1) - r, lp_dist(p, c, v2) - r);
        if f.0.abs().max(f.1.abs()) <= 1e-13 * r {
            return Some(c);
        }
        let (g1, g2) = (lp_grad(p, c - v1), lp_grad(p, c - v2));
        let det = g1.x * g2.y - g1.y * g2.x;
        if det.abs() < 1e-300 {
            return None;
        }
        let dx = (f.0 * g2.y - f.1 * g1.y) / det;
        let dy = (g1.x * f.1 - g2.x * f.0) / det;
        c = c - Point2::new(dx, dy);
        if (c - m).dot(n) <= 0.0 {
            return None;
        }
    }
    None
}

/// Lens disc centers and radius in `l_p`. For `β < 1` the center is found
/// by Newton's method, falling back to nested bisection along the
/// equidistant curve: across the generator direction for equidistance,
/// along the Euclidean normal for the radius.
pub fn lp_lens(p: f64, v1: Point2, v2: Point2, beta: f64) -> (Point2, Point2, f64) {
    let d = lp_dist(p, v1, v2);
    if beta >= 1.0 {
        let c1 = v1 + (v2 - v1) * (beta / 2.0);
        let c2 = v2 + (v1 - v2) * (beta / 2.0);
        return (c1, c2, beta * d / 2.0);
    }
    let r = d / (2.0 * beta);
    let m = (v1 + v2) * 0.5;
    if let Some(c1) = newton_center(p, v1, v2, r) {
        return (c1, m * 2.0 - c1, r);
    }
    let e = v2 - v1;
    let n = Point2::new(-e.y, e.x);
    let span = 4.0 * r / e.norm2() + 4.0;
    let equi = |s: f64| {
        let base = m + n * s;
        let lam = bisect(|l| lp_dist(p, base + e * l, v1) - lp_dist(p, base + e * l, v2), -span, span);
        base + e * lam
    };
    let mut hi = 1.0;
    while lp_dist(p, equi(hi), v1) < r {
        hi *= 2.0;
    }
    let s = bisect(|s| lp_dist(p, equi(s), v1) - r, 0.0, hi);
    let c1 = equi(s);
    (c1, m * 2.0 - c1, r)
}

fn within(variant: Variant, v: f64, bound: f64, eps: f64) -> bool {
    match variant {
        Variant::Closed => v <= bound + eps,
        Variant::Open => v < bound - eps,
    }
}

/// Open and closed `l_p` β-skeletons by membership re-check against
/// [`lp_lens`].
pub fn lp_skeletons(p: f64, pts: &[Point2], beta: f64) -> (BTreeSet<Edge>, BTreeSet<Edge>) {
    let (mut open, mut closed) = (BTreeSet::new(), BTreeSet::new());
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (c1, c2, r) = lp_lens(p, pts[i], pts[j], beta);
            let eps = EPS_REL * lp_dist(p, pts[i], pts[j]);
            let blocked = |variant: Variant| {
                pts.iter().enumerate().any(|(k, &q)| {
                    k != i
                        && k != j
                        && within(variant, lp_dist(p, q, c1), r, eps)
                        && within(variant, lp_dist(p, q, c2), r, eps)
                })
            };
            if !blocked(Variant::Open) {
                open.insert((i, j));
            }
            if !blocked(Variant::Closed) {
                closed.insert((i, j));
            }
        }
    }
    (open, closed)
}

pub fn floyd_warshall(g: &WeightedGraph) -> Vec<Vec<f64>> {
    let n = g.n_vertices;
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0.0;
    }
    for &(a, b, w) in &g.edges {
        d[a][b] = d[a][b].min(w);
        d[b][a] = d[b][a].min(w);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Distance from the point at fraction `t` of edge `id` to vertex `u`.
pub fn edge_point_dist(g: &WeightedGraph, fw: &[Vec<f64>], id: usize, t: f64, u: usize) -> f64 {
    let (a, b, w) = g.edges[id];
    (t * w + fw[a][u]).min((1.0 - t) * w + fw[b][u])
}

/// Graph points with `d(c, u) = ru` and `d(c, v) = rv`, as `(edge, t)`,
/// found by scanning each edge on a grid of step `1e-4` and refining sign
/// changes by bisection and near-zero local maxima by ternary search.
pub fn grid_centers(g: &WeightedGraph, fw: &[Vec<f64>], u: usize, ru: f64, v: usize, rv: f64) -> Vec<(usize, f64)> {
    let eps = 1e-9 * g.edges.iter().map(|e| e.2).fold(0.0, f64::max);
    let steps = 10_000usize;
    let mut out = Vec::new();
    for id in 0..g.edges.len() {
        let w = g.edges[id].2;
        let f = |t: f64| edge_point_dist(g, fw, id, t, u) - ru;
        let vals: Vec<f64> = (0..=steps).map(|k| f(k as f64 / steps as f64)).collect();
        let mut roots = Vec::new();
        for k in 0..=steps {
            let t = k as f64 / steps as f64;
            if vals[k].abs() <= eps {
                roots.push(t);
            } else if k < steps && vals[k + 1].abs() > eps && (vals[k] > 0.0) != (vals[k + 1] > 0.0) {
                roots.push(bisect(f, t, (k + 1) as f64 / steps as f64));
            }
            if k > 0 && k < steps && vals[k] >= vals[k - 1] && vals[k] >= vals[k + 1] && vals[k] < 0.0 {
                let (mut lo, mut hi) = ((k - 1) as f64 / steps as f64, (k + 1) as f64 / steps as f64);
                for _ in 0..100 {
                    let (a, b) = (lo + (hi - lo) / 3.0, hi - (hi - lo) / 3.0);
                    if f(a) < f(b) {
                        lo = a;
                    } else {
                        hi = b;
                    }
                }
                let t = 0.5 * (lo + hi);
                if f(t).abs() <= eps {
                    roots.push(t);
                }
            }
        }
        for t in roots {
            if (edge_point_dist(g, fw, id, t, v) - rv).abs() > 1e3 * eps {
                continue;
            }
            if !out.iter().any(|&(e, s): &(usize, f64)| e == id && ((s - t) * w).abs() <= 1e3 * eps) {
                out.push((id, t));
            }
        }
    }
    out
}

/// Graph distance between two locations on the same graph, one given as
/// `(edge, t)`.
pub fn location_gap(g: &WeightedGraph, fw: &[Vec<f64>], loc: (usize, f64), p: GraphPoint) -> f64 {
    let (id, t) = loc;
    let w = g.edges[id].2;
    match p {
        GraphPoint::Vertex(x) => edge_point_dist(g, fw, id, t, x),
        GraphPoint::EdgePoint { edge, t: s } => {
            let (a, b, _) = g.edges[edge];
            let ws = g.edges[edge].2;
            let via = (s * ws + edge_point_dist(g, fw, id, t, a)).min((1.0 - s) * ws + edge_point_dist(g, fw, id, t, b));
            if edge == id {
                via.min((s - t).abs() * w)
            } else {
                via
            }
        }
    }
}

fn disc_span(a: Point2, b: Point2, c: Point2, r: f64) -> Option<(f64, f64)> {
    // |a + t(b − a) − c|² = r²
    let d = b - a;
    let f = a - c;
    let qa = d.x * d.x + d.y * d.y;
    let qb = 2.0 * (f.x * d.x + f.y * d.y);
    let qc = f.x * f.x + f.y * f.y - r * r;
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return None;
    }
    let s = disc.sqrt();
    Some(((-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)))
}

/// Whether segment `k` meets the Euclidean lens of the points at `(t1, t2)`
/// on segments `i`, `j`.
pub fn segment_meets_lens(ss: &SegmentSet, i: usize, j: usize, t1: f64, t2: f64, beta: f64, variant: Variant, k: usize) -> bool {
    let s = ss.segments();
    let (a, b) = (s[i].at(t1), s[j].at(t2));
    let (c1, c2, r) = lp_lens(2.0, a, b, beta);
    let eps = EPS_REL * (b - a).norm2();
    let r = match variant {
        Variant::Closed => r + eps,
        Variant::Open => r - eps,
    };
    let (Some(x), Some(y)) = (disc_span(s[k].p1, s[k].p2, c1, r), disc_span(s[k].p1, s[k].p2, c2, r)) else {
        return false;
    };
    let (lo, hi) = (x.0.max(y.0).max(0.0), x.1.min(y.1).min(1.0));
    match variant {
        Variant::Closed => lo <= hi,
        Variant::Open => lo < hi,
    }
}
