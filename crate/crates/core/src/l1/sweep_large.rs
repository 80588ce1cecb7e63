use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{
    frame_points, normalize_candidates, pair_is_edge, validate_sites, AxisIndex, Family,
    RotatedFrame,
};
use crate::error::{Error, Result};
use crate::metric::{Beta, Metric, Point2, Variant, EPS_REL};
use crate::skeleton::{Edge, PointSet, Producer, Setting, SkeletonGraph};

/// Centered interval tree over ranks `0..n`. Each interval is marked at the
/// highest node whose center it covers and queued there by both endpoints.
/// Removal only clears the mark; queue entries without a mark are stale and
/// skipped when they surface.
#[derive(Debug, Clone)]
pub struct IntervalTree {
    n: usize,
    by_lo: Vec<BinaryHeap<Reverse<(u32, u32)>>>,
    by_hi: Vec<BinaryHeap<(u32, u32)>>,
    marked: Vec<bool>,
}

impl IntervalTree {
    pub fn new(n: usize, capacity: usize) -> Self {
        let nodes = 4 * n.max(1) + 4;
        Self {
            n,
            by_lo: vec![BinaryHeap::new(); nodes],
            by_hi: vec![BinaryHeap::new(); nodes],
            marked: vec![false; capacity],
        }
    }

    fn split_node(&self, a: usize, b: usize) -> usize {
        let (mut lo, mut hi, mut node) = (0usize, self.n - 1, 1usize);
        loop {
            let mid = (lo + hi) / 2;
            if b < mid {
                hi = mid - 1;
                node *= 2;
            } else if a > mid {
                lo = mid + 1;
                node = 2 * node + 1;
            } else {
                return node;
            }
        }
    }

    /// Marks interval `id` covering ranks `a..=b`. Each id is inserted at
    /// most once.
    pub fn insert(&mut self, id: usize, a: usize, b: usize) {
        debug_assert!(a <= b && b < self.n && !self.marked[id]);
        let node = self.split_node(a, b);
        self.by_lo[node].push(Reverse((a as u32, id as u32)));
        self.by_hi[node].push((b as u32, id as u32));
        self.marked[id] = true;
    }

    /// Erases the mark of `id` if it is still present.
    pub fn remove(&mut self, id: usize) {
        self.marked[id] = false;
    }

    /// Erases every interval containing rank `v` and appends its id to
    /// `out`.
    pub fn stab(&mut self, v: usize, out: &mut Vec<usize>) {
        let (mut lo, mut hi, mut node) = (0usize, self.n - 1, 1usize);
        let v32 = v as u32;
        while lo <= hi {
            let mid = (lo + hi) / 2;
            if v <= mid {
                let heap = &mut self.by_lo[node];
                while let Some(&Reverse((a, id))) = heap.peek() {
                    if a > v32 {
                        break;
                    }
                    heap.pop();
                    if std::mem::take(&mut self.marked[id as usize]) {
                        out.push(id as usize);
                    }
                }
            } else {
                let heap = &mut self.by_hi[node];
                while let Some(&(b, id)) = heap.peek() {
                    if b < v32 {
                        break;
                    }
                    heap.pop();
                    if std::mem::take(&mut self.marked[id as usize]) {
                        out.push(id as usize);
                    }
                }
            }
            if v == mid {
                break;
            } else if v < mid {
                hi = mid - 1;
                node *= 2;
            } else {
                lo = mid + 1;
                node = 2 * node + 1;
            }
        }
    }
}

/// A lens swept along `t`: active on `[open, close]`, covering the ranks
/// `a..=b` of the dominant axis.
#[derive(Debug, Clone, Copy)]
struct SweptLens {
    a: usize,
    b: usize,
    open: f64,
    close: f64,
}

/// For each lens, the first point met after it opens whose rank it covers.
/// Events at equal `t` run open, point, close.
fn first_hits(rank: &[usize], t: &[f64], lenses: &[SweptLens]) -> Vec<Option<usize>> {
    let mut events: Vec<(f64, u8, u32)> = Vec::with_capacity(rank.len() + 2 * lenses.len());
    events.extend(t.iter().enumerate().map(|(i, &ti)| (ti, 1u8, i as u32)));
    for (id, l) in lenses.iter().enumerate() {
        if l.a <= l.b {
            events.push((l.open, 0, id as u32));
            events.push((l.close, 2, id as u32));
        }
    }
    events.sort_unstable_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    let mut tree = IntervalTree::new(rank.len(), lenses.len());
    let mut hits = vec![None; lenses.len()];
    let mut popped = Vec::new();
    for (_, kind, id) in events {
        let id = id as usize;
        match kind {
            0 => tree.insert(id, lenses[id].a, lenses[id].b),
            1 => {
                popped.clear();
                tree.stab(rank[id], &mut popped);
                for &l in &popped {
                    hits[l] = Some(id);
                }
            }
            _ => tree.remove(id),
        }
    }
    hits
}

/// Blockers nearest to the generator band of every lens in one slope
/// class: `(highest t below, lowest t above)`.
fn class_extremes(pts: &[Point2], index: &AxisIndex, swap: bool, beta: f64, pairs: &[Edge]) -> Vec<(Option<f64>, Option<f64>)> {
    let coord = |p: Point2| if swap { (p.y, p.x) } else { (p.x, p.y) };
    let n = pts.len();
    let order = index.order(swap as usize);
    let mut rank = vec![0usize; n];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let t_up: Vec<f64> = pts.iter().map(|&p| coord(p).1).collect();
    let t_down: Vec<f64> = t_up.iter().map(|t| -t).collect();
    let mut up = Vec::with_capacity(pairs.len());
    let mut down = Vec::with_capacity(pairs.len());
    for &(i, j) in pairs {
        let (ri, rj) = (rank[i].min(rank[j]), rank[i].max(rank[j]));
        let (a, b) = (ri + 1, rj.wrapping_sub(1));
        let f = Family::new(pts[i], pts[j], beta);
        let slack = 2.0 * EPS_REL * f.d;
        let (bottom, top) = f.t_extent();
        let (tl, th) = (t_up[i].min(t_up[j]), t_up[i].max(t_up[j]));
        up.push(SweptLens { a, b, open: tl, close: top + slack });
        down.push(SweptLens { a, b, open: -th, close: -bottom + slack });
    }
    let hits_up = first_hits(&rank, &t_up, &up);
    let hits_down = first_hits(&rank, &t_down, &down);
    hits_up
        .into_iter()
        .zip(hits_down)
        .map(|(u, dn)| (dn.map(|k| t_up[k]), u.map(|k| t_up[k])))
        .collect()
}

/// `G_β` for `β ≥ 1` under l₁ / l∞, restricted to `candidates`.
///
/// Four sweeps (two slope classes, two directions) find for each candidate
/// lens the nearest blocker on each side of the generator band inside the
/// lens strip; the pair is an edge iff an admissible lens fits in the gap
/// between them. Pairs with a point that shares a frame coordinate with
/// another point are decided by a direct scan.
pub fn sweep_large_beta(
    ps: &PointSet,
    metric: Metric,
    beta: Beta,
    variant: Variant,
    candidates: &[Edge],
) -> Result<SkeletonGraph> {
    let frame = RotatedFrame::for_metric(metric)?;
    if !(beta.value() >= 1.0) {
        return Err(Error::InvalidBeta(format!("large-beta sweep needs beta >= 1, got {beta}")));
    }
    validate_sites(ps)?;
    let cands = normalize_candidates(ps.len(), candidates)?;
    let b = beta.value();
    let (pts, eps) = frame_points(ps, frame);
    let index = AxisIndex::new(&pts);
    let tied = index.tied_flags(eps);

    let mut classes: [Vec<Edge>; 2] = [Vec::new(), Vec::new()];
    let mut explicit = Vec::new();
    for &(i, j) in &cands {
        if tied[i] || tied[j] {
            explicit.push((i, j));
        } else {
            let swap = (pts[j].y - pts[i].y).abs() > (pts[j].x - pts[i].x).abs();
            classes[swap as usize].push((i, j));
        }
    }

    let mut edges = Vec::new();
    for (swap, pairs) in classes.iter().enumerate() {
        let extremes = class_extremes(&pts, &index, swap == 1, b, pairs);
        for (&(i, j), (below, above)) in pairs.iter().zip(extremes) {
            if Family::new(pts[i], pts[j], b).admits_gap(below, above, variant) {
                edges.push((i, j));
            }
        }
    }
    edges.extend(
        explicit
            .into_iter()
            .filter(|&(i, j)| pair_is_edge(&pts, &index, i, j, b, variant)),
    );
    Ok(SkeletonGraph::new(
        ps.len(),
        edges,
        beta,
        Setting::Plane(metric),
        variant,
        Producer::SweepLargeBeta,
    ))
}
