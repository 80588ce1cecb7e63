//! β-skeletons under l₁ and l∞.
//!
//! Both metrics become the Chebyshev metric in a suitable frame: l₁ after
//! the rotation `u = x + y, w = x − y`, l∞ as is. Discs are axis-aligned
//! squares there and every lens is an axis-aligned rectangle.
//!
//! Lens centers are not unique under these metrics, so `G_β` is defined by
//! the existence of one empty lens in the family of admissible center
//! pairs. For `β < 1` the smallest lens is the box spanned by the
//! generators; for `β ≥ 2` the family collapses to the `β = 2` lens; in
//! between it is a one-parameter slide bounded by two extremal lenses.


use crate::error::{Error, Result};
use crate::metric::{Beta, Metric, Point2, Variant, EPS_REL};
use crate::skeleton::{edge, Edge, PointSet, Producer, Setting, SkeletonGraph};

mod sweep_large;
mod sweep_small;

pub use sweep_large::{sweep_large_beta, IntervalTree};
pub use sweep_small::sweep_small_beta;

/// Linear map taking l₁ (or l∞) to the Chebyshev metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotatedFrame {
    /// `u = x + y, w = x − y`, for l₁.
    Diagonal,
    /// Identity, for l∞.
    Identity,
}

impl RotatedFrame {
    pub fn for_metric(metric: Metric) -> Result<Self> {
        match metric {
            Metric::L1 => Ok(RotatedFrame::Diagonal),
            Metric::Linf => Ok(RotatedFrame::Identity),
            Metric::Lp(_) => Err(Error::UnsupportedMetric(format!(
                "{metric}: the l1 routines need l1 or linf"
            ))),
        }
    }

    pub fn forward(self, p: Point2) -> Point2 {
        match self {
            RotatedFrame::Diagonal => Point2::new(p.x + p.y, p.x - p.y),
            RotatedFrame::Identity => p,
        }
    }

    pub fn inverse(self, q: Point2) -> Point2 {
        match self {
            RotatedFrame::Diagonal => Point2::new(0.5 * (q.x + q.y), 0.5 * (q.x - q.y)),
            RotatedFrame::Identity => q,
        }
    }
}

/// Chebyshev distance, the frame image of the l₁ / l∞ distance.
#[inline]
pub(crate) fn cheb(a: Point2, b: Point2) -> f64 {
    (a.x - b.x).abs().max((a.y - b.y).abs())
}

/// Axis-aligned rectangle in the Chebyshev frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub lo: Point2,
    pub hi: Point2,
}

impl Rect {
    pub fn spanning(a: Point2, b: Point2) -> Self {
        Rect {
            lo: Point2::new(a.x.min(b.x), a.y.min(b.y)),
            hi: Point2::new(a.x.max(b.x), a.y.max(b.y)),
        }
    }

    pub fn contains(&self, q: Point2, variant: Variant, eps: f64) -> bool {
        match variant {
            Variant::Closed => {
                q.x >= self.lo.x - eps
                    && q.x <= self.hi.x + eps
                    && q.y >= self.lo.y - eps
                    && q.y <= self.hi.y + eps
            }
            Variant::Open => {
                q.x > self.lo.x + eps
                    && q.x < self.hi.x - eps
                    && q.y > self.lo.y + eps
                    && q.y < self.hi.y - eps
            }
        }
    }

    pub fn corners(&self) -> [Point2; 4] {
        [
            self.lo,
            Point2::new(self.hi.x, self.lo.y),
            self.hi,
            Point2::new(self.lo.x, self.hi.y),
        ]
    }
}

/// One lens of an l₁ / l∞ family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L1Lens {
    /// The lens in the Chebyshev frame.
    pub rect: Rect,
    /// Disc centers (original coordinates) and common radius.
    pub c1: Point2,
    pub c2: Point2,
    pub radius: f64,
}

/// Canonical representatives of the lens family of a generator pair.
#[derive(Debug, Clone, PartialEq)]
pub struct LensFamilyL1 {
    pub metric: Metric,
    pub frame: RotatedFrame,
    pub generators: (Point2, Point2),
    pub beta: Beta,
    pub representatives: Vec<L1Lens>,
}

impl LensFamilyL1 {
    /// Membership of an original-frame point in representative `k`.
    pub fn contains(&self, k: usize, q: Point2, variant: Variant) -> bool {
        let (v1, v2) = self.generators;
        let eps = EPS_REL * self.metric.distance(v1, v2);
        self.representatives[k]
            .rect
            .contains(self.frame.forward(q), variant, eps)
    }

    /// The polygon of representative `k` in original coordinates.
    pub fn polygon(&self, k: usize) -> [Point2; 4] {
        self.representatives[k]
            .rect
            .corners()
            .map(|c| self.frame.inverse(c))
    }
}

/// Admissible centers of a `β ≥ 1` lens in dominant coordinates `(s, t)`,
/// where `s` is the axis of larger generator separation and `s1 ≤ s2`.
///
/// With `a = (2 − β)D/2` the first center sits at `s = s2 − a` with
/// `t = x ∈ i1`, the second at `s = s1 + a` with `t = y ∈ i2`, and
/// `|x − y| ≤ g`. The lens is `[s1, s2] × [max(x, y) − r, min(x, y) + r]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Family {
    pub swap: bool,
    pub s1: f64,
    pub t1: f64,
    pub s2: f64,
    pub t2: f64,
    pub d: f64,
    pub r: f64,
    pub a: f64,
    pub g: f64,
    pub i1: (f64, f64),
    pub i2: (f64, f64),
}

impl Family {
    /// `p`, `q` are frame points; `beta ≥ 1`, with ∞ read as 2.
    pub fn new(p: Point2, q: Point2, beta: f64) -> Self {
        let b = if beta.is_finite() { beta.max(1.0) } else { 2.0 };
        let swap = (q.y - p.y).abs() > (q.x - p.x).abs();
        let (mut a1, mut a2) = (to_dominant(p, swap), to_dominant(q, swap));
        if a1.0 > a2.0 {
            std::mem::swap(&mut a1, &mut a2);
        }
        let (s1, t1, s2, t2) = (a1.0, a1.1, a2.0, a2.1);
        let d = s2 - s1;
        let r = b * d / 2.0;
        let a = (2.0 - b) * d / 2.0;
        let g = (b - 1.0) * d;
        Family {
            swap,
            s1,
            t1,
            s2,
            t2,
            d,
            r,
            a,
            g,
            i1: ((t2 - a.abs()).max(t1 - r), (t2 + a.abs()).min(t1 + r)),
            i2: ((t1 - a.abs()).max(t2 - r), (t1 + a.abs()).min(t2 + r)),
        }
    }

    pub fn center1(&self, x: f64) -> Point2 {
        from_dominant((self.s2 - self.a, x), self.swap)
    }

    pub fn center2(&self, y: f64) -> Point2 {
        from_dominant((self.s1 + self.a, y), self.swap)
    }

    pub fn lens(&self, x: f64, y: f64) -> Rect {
        let lo = from_dominant((self.s1, x.max(y) - self.r), self.swap);
        let hi = from_dominant((self.s2, x.min(y) + self.r), self.swap);
        Rect::spanning(lo, hi)
    }

    /// Highest top and lowest bottom over all admissible lenses.
    pub fn t_extent(&self) -> (f64, f64) {
        (self.i1.0.max(self.i2.0) - self.r, self.i1.1.min(self.i2.1) + self.r)
    }

    /// Whether some admissible lens keeps every blocker with `t ≤ below`
    /// under it and every blocker with `t ≥ above` over it.
    pub fn admits_gap(&self, below: Option<f64>, above: Option<f64>, variant: Variant) -> bool {
        let eps = EPS_REL * self.d;
        let shift = match variant {
            Variant::Closed => eps,
            Variant::Open => -eps,
        };
        let lt = below.map_or(f64::NEG_INFINITY, |b| b + self.r + shift);
        let ht = above.map_or(f64::INFINITY, |b| b - self.r - shift);
        let slack = 1e-12 * self.d;
        let (i1, i2) = (self.i1, self.i2);
        // max(x, y) = x, min = y
        let case_a = diff_feasible((i1.0.max(lt), i1.1), (i2.0, i2.1.min(ht)), self.g, slack);
        // max(x, y) = y, min = x
        let case_b = diff_feasible((i2.0.max(lt), i2.1), (i1.0, i1.1.min(ht)), self.g, slack);
        case_a || case_b
    }
}

/// Whether `x ∈ hi_iv`, `y ∈ lo_iv` exist with `0 ≤ x − y ≤ g`.
fn diff_feasible(hi_iv: (f64, f64), lo_iv: (f64, f64), g: f64, slack: f64) -> bool {
    hi_iv.0 <= hi_iv.1 + slack
        && lo_iv.0 <= lo_iv.1 + slack
        && (hi_iv.0 - lo_iv.1).max(0.0) <= (hi_iv.1 - lo_iv.0).min(g) + slack
}

#[inline]
fn to_dominant(p: Point2, swap: bool) -> (f64, f64) {
    if swap {
        (p.y, p.x)
    } else {
        (p.x, p.y)
    }
}

#[inline]
fn from_dominant(st: (f64, f64), swap: bool) -> Point2 {
    if swap {
        Point2::new(st.1, st.0)
    } else {
        Point2::new(st.0, st.1)
    }
}

/// Box-lens centers for `β < 1`: both squares of radius `big_r` pass
/// through both frame points and meet exactly in their spanning box.
pub(crate) fn box_centers(p: Point2, q: Point2, big_r: f64) -> (Point2, Point2) {
    let (du, dw) = (q.x - p.x, q.y - p.y);
    let su = if du < 0.0 { -1.0 } else { 1.0 };
    let sw = if dw < 0.0 { -1.0 } else { 1.0 };
    let (a, b) = (du.abs(), dw.abs());
    let local = |x: f64, y: f64| Point2::new(p.x + su * x, p.y + sw * y);
    (local(big_r, b - big_r), local(a - big_r, big_r))
}

fn check_l1_beta(beta: Beta) -> Result<()> {
    match beta {
        Beta::Finite(b) if !(b >= 0.0) => Err(Error::InvalidBeta(format!("{b}"))),
        _ => Ok(()),
    }
}

/// Canonical lens representatives of `(v1, v2)` under l₁ or l∞.
///
/// `β < 1` (including 0) gives the spanning box in the rotated frame;
/// `1 ≤ β < 2` the two extremal lenses `N`, `N′` (one when they coincide);
/// `β ≥ 2` (including ∞) the `β = 2` lens, which every larger lens of the
/// pair contains and the smallest of them equals.
pub fn canonical_lenses_l1(metric: Metric, v1: Point2, v2: Point2, beta: Beta) -> Result<LensFamilyL1> {
    let frame = RotatedFrame::for_metric(metric)?;
    check_l1_beta(beta)?;
    let (p, q) = (frame.forward(v1), frame.forward(v2));
    let d = cheb(p, q);
    if d == 0.0 {
        return Err(Error::DegenerateGenerators);
    }
    let b = beta.value();
    let representatives = if b < 1.0 {
        let radius = d;
        let (c1, c2) = box_centers(p, q, radius);
        vec![L1Lens {
            rect: Rect::spanning(p, q),
            c1: frame.inverse(c1),
            c2: frame.inverse(c2),
            radius,
        }]
    } else {
        let f = Family::new(p, q, b.min(2.0));
        let mk = |x: f64, y: f64| L1Lens {
            rect: f.lens(x, y),
            c1: frame.inverse(f.center1(x)),
            c2: frame.inverse(f.center2(y)),
            radius: f.r,
        };
        let n = mk(f.i1.0, f.i2.0);
        let n2 = mk(f.i1.1, f.i2.1);
        if n.rect == n2.rect {
            vec![n]
        } else {
            vec![n, n2]
        }
    };
    Ok(LensFamilyL1 {
        metric,
        frame,
        generators: (v1, v2),
        beta,
        representatives,
    })
}

/// Frame images of the points and a global tie tolerance.
pub(crate) fn frame_points(ps: &PointSet, frame: RotatedFrame) -> (Vec<Point2>, f64) {
    let pts: Vec<Point2> = ps.points().iter().map(|&p| frame.forward(p)).collect();
    let eps = 4.0 * EPS_REL * crate::skeleton::bbox_extent(&pts);
    (pts, eps)
}

/// Point ids sorted along each frame axis.
pub(crate) struct AxisIndex {
    order: [Vec<usize>; 2],
    keys: [Vec<f64>; 2],
}

impl AxisIndex {
    pub fn new(pts: &[Point2]) -> Self {
        let build = |key: fn(&Point2) -> f64| {
            let mut order: Vec<usize> = (0..pts.len()).collect();
            order.sort_by(|&a, &b| key(&pts[a]).total_cmp(&key(&pts[b])));
            let keys = order.iter().map(|&i| key(&pts[i])).collect::<Vec<_>>();
            (order, keys)
        };
        let (ox, kx) = build(|p| p.x);
        let (oy, ky) = build(|p| p.y);
        AxisIndex { order: [ox, oy], keys: [kx, ky] }
    }

    pub fn order(&self, axis: usize) -> &[usize] {
        &self.order[axis]
    }

    /// Ids whose coordinate on `axis` lies in `[lo, hi]`.
    pub fn within(&self, axis: usize, lo: f64, hi: f64) -> &[usize] {
        let keys = &self.keys[axis];
        let a = keys.partition_point(|&k| k < lo);
        let b = keys.partition_point(|&k| k <= hi);
        &self.order[axis][a..b.max(a)]
    }

    /// Marks points sharing a coordinate (within `eps`) with another point.
    pub fn tied_flags(&self, eps: f64) -> Vec<bool> {
        let mut tied = vec![false; self.order[0].len()];
        for axis in 0..2 {
            for (w, k) in self.order[axis].windows(2).zip(self.keys[axis].windows(2)) {
                if k[1] - k[0] <= eps {
                    tied[w[0]] = true;
                    tied[w[1]] = true;
                }
            }
        }
        tied
    }
}

/// Direct decision for one pair from frame points, scanning only the points
/// in the pair's strip along the dominant axis.
pub(crate) fn pair_is_edge(pts: &[Point2], index: &AxisIndex, i: usize, j: usize, beta: f64, variant: Variant) -> bool {
    let (p, q) = (pts[i], pts[j]);
    let eps = EPS_REL * cheb(p, q);
    if beta < 1.0 {
        let rect = Rect::spanning(p, q);
        return !index
            .within(0, rect.lo.x - eps, rect.hi.x + eps)
            .iter()
            .any(|&k| k != i && k != j && rect.contains(pts[k], variant, eps));
    }
    let f = Family::new(p, q, beta);
    let in_strip = |s: f64| match variant {
        Variant::Closed => s >= f.s1 - eps && s <= f.s2 + eps,
        Variant::Open => s > f.s1 + eps && s < f.s2 - eps,
    };
    let mut ts: Vec<f64> = index
        .within(f.swap as usize, f.s1 - eps, f.s2 + eps)
        .iter()
        .filter(|&&k| k != i && k != j)
        .map(|&k| to_dominant(pts[k], f.swap))
        .filter(|&(s, _)| in_strip(s))
        .map(|(_, t)| t)
        .collect();
    ts.sort_by(f64::total_cmp);
    (0..=ts.len()).any(|k| {
        let below = k.checked_sub(1).map(|m| ts[m]);
        f.admits_gap(below, ts.get(k).copied(), variant)
    })
}

pub(crate) fn validate_sites(ps: &PointSet) -> Result<()> {
    if ps.len() < 2 {
        return Err(Error::TooFewSites {
            needed: 2,
            got: ps.len(),
        });
    }
    Ok(())
}

/// l₁ / l∞ β-skeleton by enumerating center pairs and testing membership
/// with the original metric.
///
/// For `1 ≤ β < 2` the emptiness of a lens only changes where the first
/// center crosses a critical value; each critical value and each midpoint
/// between consecutive ones is tried with the two extreme admissible second
/// centers.
pub fn l1_bruteforce(ps: &PointSet, metric: Metric, beta: Beta, variant: Variant) -> Result<SkeletonGraph> {
    let frame = RotatedFrame::for_metric(metric)?;
    check_l1_beta(beta)?;
    validate_sites(ps)?;
    let orig = ps.points();
    let pts: Vec<Point2> = orig.iter().map(|&p| frame.forward(p)).collect();
    let b = beta.value();
    let edges = crate::skeleton::filter_pairs(pts.len(), |i, j| {
        let d = metric.distance(orig[i], orig[j]);
        let eps = EPS_REL * d;
        let empty = |c1: Point2, c2: Point2, r: f64| {
            !orig.iter().enumerate().any(|(k, &o)| {
                k != i
                    && k != j
                    && variant.within(metric.distance(o, c1), r, eps)
                    && variant.within(metric.distance(o, c2), r, eps)
            })
        };
        if b < 1.0 {
            let big_r = if b > 0.0 { d / (2.0 * b) } else { d };
            let (c1, c2) = box_centers(pts[i], pts[j], big_r);
            return empty(frame.inverse(c1), frame.inverse(c2), big_r);
        }
        let f = Family::new(pts[i], pts[j], b);
        let (r, g) = (f.r, f.g);
        let mut crit = vec![f.i1.0, f.i1.1];
        for e in [f.i2.0, f.i2.1] {
            crit.extend([e - g, e + g]);
        }
        for (k, &o) in pts.iter().enumerate() {
            if k != i && k != j {
                let t = to_dominant(o, f.swap).1;
                crit.extend([t - r, t + r, t - r + g, t + r - g]);
            }
        }
        crit.retain(|&x| x >= f.i1.0 && x <= f.i1.1);
        crit.sort_by(f64::total_cmp);
        crit.dedup();
        let mids: Vec<f64> = crit.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        crit.into_iter().chain(mids).any(|x| {
            let (klo, khi) = (f.i2.0.max(x - g), f.i2.1.min(x + g));
            if klo > khi {
                return false;
            }
            let c1 = frame.inverse(f.center1(x));
            [klo, khi]
                .into_iter()
                .any(|y| empty(c1, frame.inverse(f.center2(y)), r))
        })
    });
    Ok(SkeletonGraph::new(
        pts.len(),
        edges,
        beta,
        Setting::Plane(metric),
        variant,
        Producer::L1BruteForce,
    ))
}

/// Pairs admitting an empty open l₁ / l∞ disc with both points on its
/// boundary. Every `G_β` with `β ≥ 1` is a subgraph.
///
/// An empty disc through both points can always be shrunk to a `β = 1`
/// lens, so this is the open `G_1`, computed by the sweep over all pairs in
/// O(n² log n).
pub fn l1_delaunay_candidates(ps: &PointSet, metric: Metric) -> Result<Vec<Edge>> {
    validate_sites(ps)?;
    let n = ps.len();
    let all: Vec<Edge> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let g = sweep_large_beta(ps, metric, Beta::Finite(1.0), Variant::Open, &all)?;
    Ok(g.edges.into_iter().collect())
}

pub(crate) fn normalize_candidates(n: usize, candidates: &[Edge]) -> Result<Vec<Edge>> {
    let mut out = candidates
        .iter()
        .map(|&(i, j)| {
            if i == j || i >= n || j >= n {
                Err(Error::InvalidCandidates(i, j))
            } else {
                Ok(edge(i, j))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Validates `MST ⊆ G_2 ⊆ G_{β_k} ⊆ … ⊆ G_{β_1} ⊆ DT` under l₁ / l∞ for
/// ascending betas in `[1, 2]`, using the sweep. The last link is against
/// the empty-disc candidate graph.
pub fn l1_chain_check(ps: &PointSet, metric: Metric, betas: &[f64]) -> Result<crate::skeleton::ChainReport> {
    crate::skeleton::check_betas_in_unit_interval(betas)?;
    validate_sites(ps)?;
    let cands = l1_delaunay_candidates(ps, metric)?;
    let layer = |b: f64| {
        let beta = Beta::Finite(b);
        sweep_large_beta(ps, metric, beta, Variant::default_for(beta), &cands)
    };
    let mst = crate::skeleton::emst(ps, metric)?;
    let g2 = layer(2.0)?;
    let layers = betas
        .iter()
        .map(|&b| layer(b).map(|g| (b, g)))
        .collect::<Result<Vec<_>>>()?;
    let dt = SkeletonGraph::new(
        ps.len(),
        cands,
        Beta::Finite(1.0),
        Setting::Plane(metric),
        Variant::Open,
        Producer::SweepLargeBeta,
    );
    let mut report = crate::skeleton::ChainReport::default();
    report.push(crate::skeleton::InclusionCheck::between("MST", "G[2]", &mst, &g2));
    let (b_max, top) = layers.last().expect("nonempty");
    report.push(crate::skeleton::InclusionCheck::between("G[2]", format!("G[{b_max}]"), &g2, top));
    for w in layers.windows(2).rev() {
        report.push(crate::skeleton::InclusionCheck::between(
            format!("G[{}]", w[1].0),
            format!("G[{}]", w[0].0),
            &w[1].1,
            &w[0].1,
        ));
    }
    report.push(crate::skeleton::InclusionCheck::between(
        format!("G[{}]", layers[0].0),
        "DT",
        &layers[0].1,
        &dt,
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pset(v: &[(f64, f64)]) -> PointSet {
        PointSet::new(v.iter().map(|&p| p.into()).collect()).unwrap()
    }

    #[test]
    fn frame_round_trip_and_distance() {
        let p = Point2::new(0.3, -1.7);
        for f in [RotatedFrame::Diagonal, RotatedFrame::Identity] {
            let q = f.inverse(f.forward(p));
            assert!((q - p).norm2() < 1e-15);
        }
        let (a, b) = (Point2::new(0.0, 0.0), Point2::new(3.0, 4.0));
        let f = RotatedFrame::Diagonal;
        assert_eq!(cheb(f.forward(a), f.forward(b)), 7.0);
    }

    #[test]
    fn box_family_for_small_beta() {
        let fam = canonical_lenses_l1(Metric::L1, Point2::new(0.0, 0.0), Point2::new(3.0, 1.0), Beta::Finite(0.5)).unwrap();
        assert_eq!(fam.representatives.len(), 1);
        let l = fam.representatives[0];
        assert_eq!(l.rect, Rect { lo: Point2::new(0.0, 0.0), hi: Point2::new(4.0, 2.0) });
        assert!(fam.contains(0, Point2::new(1.0, 0.5), Variant::Closed));
        assert!(!fam.contains(0, Point2::new(1.0, 1.5), Variant::Closed));
        for c in [l.c1, l.c2] {
            assert!((Metric::L1.distance(c, Point2::new(0.0, 0.0)) - l.radius).abs() < 1e-12);
            assert!((Metric::L1.distance(c, Point2::new(3.0, 1.0)) - l.radius).abs() < 1e-12);
        }
    }

    #[test]
    fn beta_two_lens_and_collapse() {
        let (v1, v2) = (Point2::new(0.0, 0.0), Point2::new(2.0, 0.0));
        let f2 = canonical_lenses_l1(Metric::L1, v1, v2, Beta::Finite(2.0)).unwrap();
        assert_eq!(f2.representatives.len(), 1);
        let l = f2.representatives[0];
        assert_eq!((l.c1, l.c2, l.radius), (v2, v1, 2.0));
        let f4 = canonical_lenses_l1(Metric::L1, v1, v2, Beta::Finite(4.0)).unwrap();
        assert_eq!(f4.representatives, f2.representatives);
        let finf = canonical_lenses_l1(Metric::L1, v1, v2, Beta::Infinity).unwrap();
        assert_eq!(finf.representatives, f2.representatives);
    }

    #[test]
    fn extremal_pair_for_mid_beta() {
        let (v1, v2) = (Point2::new(0.0, 0.0), Point2::new(3.0, 1.0));
        let fam = canonical_lenses_l1(Metric::L1, v1, v2, Beta::Finite(1.5)).unwrap();
        assert_eq!(fam.representatives.len(), 2);
        let d = 4.0;
        for l in &fam.representatives {
            assert!((l.radius - 3.0).abs() < 1e-12);
            assert!((Metric::L1.distance(v1, l.c2) - 0.25 * d).abs() < 1e-12);
            assert!((Metric::L1.distance(v2, l.c1) - 0.25 * d).abs() < 1e-12);
            assert!((Metric::L1.distance(l.c1, l.c2) - 0.5 * d).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let p = Point2::new(1.0, 1.0);
        assert_eq!(
            canonical_lenses_l1(Metric::L1, p, p, Beta::Finite(1.0)),
            Err(Error::DegenerateGenerators)
        );
        assert!(matches!(
            canonical_lenses_l1(Metric::L2, p, Point2::new(0.0, 0.0), Beta::Finite(1.0)),
            Err(Error::UnsupportedMetric(_))
        ));
    }

    #[test]
    fn brute_examples() {
        let g = l1_bruteforce(&pset(&[(0.0, 0.0), (3.0, 1.0), (1.0, 0.5)]), Metric::L1, Beta::Finite(0.5), Variant::Closed).unwrap();
        assert_eq!(g.edges.iter().copied().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        let g = l1_bruteforce(&pset(&[(0.0, 0.0), (2.0, 0.0), (1.0, 0.5)]), Metric::L1, Beta::Finite(2.0), Variant::Closed).unwrap();
        assert!(!g.contains(0, 1));
        let g = l1_bruteforce(&pset(&[(0.0, 0.0), (2.0, 0.0)]), Metric::L1, Beta::Finite(2.0), Variant::Closed).unwrap();
        assert!(g.contains(0, 1));
    }

    #[test]
    fn candidates_examples() {
        let tri = pset(&[(0.0, 0.0), (1.0, 0.2), (0.4, 1.1)]);
        assert_eq!(l1_delaunay_candidates(&tri, Metric::L1).unwrap(), vec![(0, 1), (0, 2), (1, 2)]);
        let line = pset(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0), (4.0, 0.0)]);
        assert_eq!(
            l1_delaunay_candidates(&line, Metric::L1).unwrap(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn pair_test_agrees_with_brute_on_grid() {
        // integer grids are full of ties and exercise the explicit path
        let mut v = Vec::new();
        for x in 0..4 {
            for y in 0..3 {
                v.push((x as f64, (y * y) as f64));
            }
        }
        let ps = pset(&v);
        let pts: Vec<Point2> = ps.points().iter().map(|&p| RotatedFrame::Diagonal.forward(p)).collect();
        let index = AxisIndex::new(&pts);
        for b in [0.5, 1.0, 1.5, 2.0] {
            for var in [Variant::Open, Variant::Closed] {
                let brute = l1_bruteforce(&ps, Metric::L1, Beta::Finite(b), var).unwrap();
                for i in 0..pts.len() {
                    for j in i + 1..pts.len() {
                        assert_eq!(pair_is_edge(&pts, &index, i, j, b, var), brute.contains(i, j), "b={b} {var} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn brute_force_collapses_above_two() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(3..14);
            let v: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
            let ps = pset(&v);
            for m in [Metric::L1, Metric::Linf] {
                for var in [Variant::Open, Variant::Closed] {
                    let g2 = l1_bruteforce(&ps, m, Beta::Finite(2.0), var).unwrap().edges;
                    for b in [Beta::Finite(3.0), Beta::Finite(10.0), Beta::Infinity] {
                        assert_eq!(l1_bruteforce(&ps, m, b, var).unwrap().edges, g2, "{m} {var} {b}");
                    }
                }
            }
        }
    }
}
