use std::collections::BTreeSet;

use super::{frame_points, pair_is_edge, validate_sites, AxisIndex, RotatedFrame};
use crate::error::{Error, Result};
use crate::metric::{Beta, Metric, Point2, Variant};
use crate::skeleton::{edge, PointSet, Producer, Setting, SkeletonGraph};

/// Every `s` whose box with `t` might be empty: drops only points whose box
/// holds another point at least `eps` inside on both axes, which blocks in
/// either variant. Per quadrant, points sorted by `|du|` are checked against
/// the running minimum `|dw|` of points at least `eps` inside the quadrant.
fn box_partner_superset(pts: &[Point2], t: usize, eps: f64) -> Vec<usize> {
    let o = pts[t];
    let mut quads: [Vec<(f64, f64, usize)>; 4] = Default::default();
    for (k, p) in pts.iter().enumerate() {
        if k != t {
            let (du, dw) = (p.x - o.x, p.y - o.y);
            quads[(du < 0.0) as usize * 2 + (dw < 0.0) as usize].push((du.abs(), dw.abs(), k));
        }
    }
    let mut out = Vec::new();
    for q in &mut quads {
        q.sort_by(|a, b| a.0.total_cmp(&b.0));
        // blockers enter once they are `eps` short of the current `|du|`
        let (mut next, mut min_w) = (0, f64::INFINITY);
        for &(u, w, k) in q.iter() {
            while next < q.len() && q[next].0 < u - eps {
                if q[next].0 > eps && q[next].1 > eps {
                    min_w = min_w.min(q[next].1);
                }
                next += 1;
            }
            if !(min_w < w - eps) {
                out.push(k);
            }
        }
    }
    out
}

/// `G_β` for `0 ≤ β < 1` under l₁ / l∞: a pair is an edge iff its spanning
/// box in the rotated frame holds no third point. The answer does not
/// depend on β.
///
/// Left-to-right sweep in `u`. The list of points following `p`, pruned of
/// everything separated from `p` by an earlier point, is kept implicitly as
/// the open window `(lo, hi)` in `w` of still-visible points: a later point
/// is an edge partner of `p` iff it falls inside the window, and then
/// narrows it. O(n²) time, O(n) space.
///
/// Pairs with a point that shares a frame coordinate with another point are
/// decided by a direct box test instead.
pub fn sweep_small_beta(ps: &PointSet, metric: Metric, beta: Beta, variant: Variant) -> Result<SkeletonGraph> {
    let frame = RotatedFrame::for_metric(metric)?;
    let b = beta.value();
    if !(0.0..1.0).contains(&b) {
        return Err(Error::InvalidBeta(format!("small-beta sweep needs 0 <= beta < 1, got {beta}")));
    }
    validate_sites(ps)?;
    let (pts, eps) = frame_points(ps, frame);
    let index = AxisIndex::new(&pts);
    let tied = index.tied_flags(eps);
    let n = pts.len();
    let order = index.order(0);

    let mut edges = BTreeSet::new();
    for (k, &j) in order.iter().enumerate() {
        if tied[j] {
            continue;
        }
        let wj = pts[j].y;
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for &i in &order[k + 1..] {
            let wi = pts[i].y;
            if wi > wj && wi < hi {
                hi = wi;
            } else if wi < wj && wi > lo {
                lo = wi;
            } else {
                continue;
            }
            if !tied[i] {
                edges.insert(edge(i, j));
            }
        }
    }
    for t in (0..n).filter(|&t| tied[t]) {
        for s in box_partner_superset(&pts, t, eps) {
            if pair_is_edge(&pts, &index, t, s, 0.0, variant) {
                edges.insert(edge(t, s));
            }
        }
    }
    Ok(SkeletonGraph::new(
        n,
        edges,
        beta,
        Setting::Plane(metric),
        variant,
        Producer::SweepSmallBeta,
    ))
}
