//! β-skeletons of disjoint segment sites under l₂.
//!
//! A pair of segments is an edge when some choice of generator points, one
//! on each, spans a lens meeting no other segment. Generator parameters
//! are sampled on the grid `t = k/m, k = 0..=m` of the unit square; each
//! sampled lens is tested exactly. Grids nest under doubling, so a larger
//! resolution never loses an edge.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metric::{lens_construct, Beta, Lens, LensForm, Metric, Point2, Variant};
use crate::skeleton::{
    bbox_extent, chain_from_layers, check_betas_in_unit_interval, ChainReport, Edge, InclusionCheck,
    Producer, Setting, SkeletonGraph,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub p1: Point2,
    pub p2: Point2,
}

impl Segment {
    pub fn new(p1: Point2, p2: Point2) -> Self {
        Segment { p1, p2 }
    }

    /// `(1 − t)·p1 + t·p2`.
    pub fn at(&self, t: f64) -> Point2 {
        self.p1.lerp(self.p2, t)
    }

    pub fn length(&self) -> f64 {
        (self.p2 - self.p1).norm2()
    }

    /// Euclidean distance from `q` to the closed segment.
    pub fn distance_to(&self, q: Point2) -> f64 {
        let d = self.p2 - self.p1;
        let t = ((q - self.p1).dot(d) / d.dot(d)).clamp(0.0, 1.0);
        (q - self.at(t)).norm2()
    }
}

fn segments_touch(a: &Segment, b: &Segment, tol: f64) -> bool {
    let orient = |p: Point2, q: Point2, r: Point2| (q - p).cross(r - p);
    let (d1, d2) = (orient(a.p1, a.p2, b.p1), orient(a.p1, a.p2, b.p2));
    let (d3, d4) = (orient(b.p1, b.p2, a.p1), orient(b.p1, b.p2, a.p2));
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    a.distance_to(b.p1) <= tol
        || a.distance_to(b.p2) <= tol
        || b.distance_to(a.p1) <= tol
        || b.distance_to(a.p2) <= tol
}

/// Pairwise disjoint segments of positive length.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentSet {
    segments: Vec<Segment>,
}

impl SegmentSet {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        let ends: Vec<Point2> = segments.iter().flat_map(|s| [s.p1, s.p2]).collect();
        if ends.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::NonFinite);
        }
        let tol = 1e-12 * bbox_extent(&ends);
        for (i, s) in segments.iter().enumerate() {
            if s.length() <= tol {
                return Err(Error::DegenerateSegment(i));
            }
        }
        for i in 0..segments.len() {
            for j in i + 1..segments.len() {
                if segments_touch(&segments[i], &segments[j], tol) {
                    return Err(Error::IntersectingSegments(i, j));
                }
            }
        }
        Ok(SegmentSet { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }
}

/// Parameter interval of `s` inside the disc `(c, r)`, or `None`.
fn disc_interval(s: &Segment, c: Point2, r: f64) -> Option<(f64, f64)> {
    if r <= 0.0 {
        return None;
    }
    let d = s.p2 - s.p1;
    let f = s.p1 - c;
    let (a, b, k) = (d.dot(d), 2.0 * f.dot(d), f.dot(f) - r * r);
    let disc = b * b - 4.0 * a * k;
    if disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    // stable roots
    let q = -0.5 * (b + b.signum() * sq);
    let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q / a, k / q) };
    Some((r1.min(r2), r1.max(r2)))
}

/// Whether some point of `s` lies in the lens, with the lens's tie rule.
pub fn segment_intersects_lens(s: &Segment, lens: &Lens, variant: Variant) -> Result<bool> {
    if !lens.metric.is_euclidean() {
        return Err(Error::UnsupportedMetric(format!("segment sites need lp:2, got {}", lens.metric)));
    }
    let LensForm::TwoDiscs { c1, c2, radius } = lens.form else {
        return Err(Error::InvalidBeta(format!("segment lenses need 0 < beta < inf, got {}", lens.beta)));
    };
    let r = match variant {
        Variant::Closed => radius + lens.eps,
        Variant::Open => radius - lens.eps,
    };
    let (Some(i1), Some(i2)) = (disc_interval(s, c1, r), disc_interval(s, c2, r)) else {
        return Ok(false);
    };
    let (lo, hi) = (i1.0.max(i2.0), i1.1.min(i2.1));
    Ok(match variant {
        Variant::Closed => lo <= hi && lo <= 1.0 && hi >= 0.0,
        Variant::Open => lo < hi && lo < 1.0 && hi > 0.0,
    })
}

fn check_resolution(m: usize) -> Result<()> {
    if m < 2 {
        Err(Error::ResolutionTooSmall(m))
    } else {
        Ok(())
    }
}

fn check_segment_beta(beta: Beta) -> Result<f64> {
    match beta {
        Beta::Finite(b) if b > 0.0 => Ok(b),
        _ => Err(Error::InvalidBeta(format!("segment skeletons need 0 < beta < inf, got {beta}"))),
    }
}

/// Lens spanned by the generator points at `(t1, t2)` on segments `i`, `j`.
pub fn sample_lens(ss: &SegmentSet, i: usize, j: usize, beta: Beta, t1: f64, t2: f64) -> Result<Lens> {
    let s = ss.segments();
    lens_construct(Metric::L2, s[i].at(t1), s[j].at(t2), beta)
}

fn sample_blocked(ss: &SegmentSet, i: usize, j: usize, lens: &Lens, variant: Variant) -> bool {
    ss.segments()
        .iter()
        .enumerate()
        .any(|(k, s)| k != i && k != j && segment_intersects_lens(s, lens, variant).expect("euclidean two-disc lens"))
}

/// Blocked samples of one generator pair on the `(m + 1)²` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSquareCover {
    pub pair: Edge,
    pub resolution: usize,
    /// Row-major over `(k1, k2)`, `t1 = k1/m`, `t2 = k2/m`.
    pub covered: Vec<bool>,
}

impl ParamSquareCover {
    pub fn compute(ss: &SegmentSet, i: usize, j: usize, beta: Beta, variant: Variant, m: usize) -> Result<Self> {
        check_resolution(m)?;
        check_segment_beta(beta)?;
        let mut covered = Vec::with_capacity((m + 1) * (m + 1));
        for k1 in 0..=m {
            for k2 in 0..=m {
                let lens = sample_lens(ss, i, j, beta, k1 as f64 / m as f64, k2 as f64 / m as f64)?;
                covered.push(sample_blocked(ss, i, j, &lens, variant));
            }
        }
        Ok(ParamSquareCover {
            pair: (i, j),
            resolution: m,
            covered,
        })
    }

    pub fn is_covered(&self, k1: usize, k2: usize) -> bool {
        self.covered[k1 * (self.resolution + 1) + k2]
    }

    /// The unit square is fully covered iff the pair is not an edge.
    pub fn fully_covered(&self) -> bool {
        self.covered.iter().all(|&c| c)
    }
}

/// A segment skeleton with one certifying sample `(t1, t2)` per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentSkeleton {
    pub graph: SkeletonGraph,
    pub resolution: usize,
    /// Parameters on the lower- and higher-indexed segment of each edge.
    pub witnesses: BTreeMap<Edge, (f64, f64)>,
}

impl SegmentSkeleton {
    pub fn witness_lens(&self, ss: &SegmentSet, e: Edge) -> Option<Lens> {
        let &(t1, t2) = self.witnesses.get(&e)?;
        sample_lens(ss, e.0, e.1, self.graph.beta, t1, t2).ok()
    }

    /// Edges whose stored witness fails the exact test.
    pub fn invalid_witnesses(&self, ss: &SegmentSet) -> Vec<Edge> {
        self.witnesses
            .keys()
            .copied()
            .filter(|&e| match self.witness_lens(ss, e) {
                Some(l) => sample_blocked(ss, e.0, e.1, &l, self.graph.variant),
                None => true,
            })
            .collect()
    }
}

/// Grid-sampled segment β-skeleton; every reported edge carries a witness.
pub fn segment_beta_skeleton(ss: &SegmentSet, beta: Beta, variant: Variant, m: usize) -> Result<SegmentSkeleton> {
    check_resolution(m)?;
    check_segment_beta(beta)?;
    let n = ss.len();
    let pairs: Vec<Edge> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let found: Vec<(Edge, (f64, f64))> = pairs
        .into_par_iter()
        .filter_map(|(i, j)| {
            (0..=m)
                .flat_map(|k1| (0..=m).map(move |k2| (k1 as f64 / m as f64, k2 as f64 / m as f64)))
                .find(|&(t1, t2)| {
                    let lens = sample_lens(ss, i, j, beta, t1, t2).expect("disjoint segments");
                    !sample_blocked(ss, i, j, &lens, variant)
                })
                .map(|w| ((i, j), w))
        })
        .collect();
    let witnesses: BTreeMap<Edge, (f64, f64)> = found.into_iter().collect();
    Ok(SegmentSkeleton {
        graph: SkeletonGraph::new(
            n,
            witnesses.keys().copied(),
            beta,
            Setting::Segments,
            variant,
            Producer::SegmentGrid,
        ),
        resolution: m,
        witnesses,
    })
}

/// Checks that every edge at resolution `m` survives at `2m`.
pub fn refinement_check(ss: &SegmentSet, beta: Beta, variant: Variant, m: usize) -> Result<InclusionCheck> {
    let coarse = segment_beta_skeleton(ss, beta, variant, m)?;
    let fine = segment_beta_skeleton(ss, beta, variant, 2 * m)?;
    Ok(InclusionCheck::between(
        format!("G[m={m}]"),
        format!("G[m={}]", 2 * m),
        &coarse.graph,
        &fine.graph,
    ))
}

/// Smallest `λ ∈ (0, 1]` keeping `f(λ) ≤ 0`, for `f` convex with
/// `f(1) ≤ 0 < f(0)`.
fn shrink_factor(f: impl Fn(f64) -> f64) -> f64 {
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 {
            break;
        }
    }
    hi
}

/// The disc obtained from a Gabriel witness by two homotheties: about the
/// generator on `s1` until it touches `s2`, then about that contact point
/// until it touches `s1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomothetyDisc {
    pub center: Point2,
    pub radius: f64,
    /// Largest deviation from tangency to `s1` and `s2`.
    pub tangency_error: f64,
    /// `|c' − c| + r' − r`, non-positive when nested in the witness disc.
    pub containment_excess: f64,
    /// Whether the shrunk disc meets another segment.
    pub blocked: bool,
}

/// Applies the two homotheties to the `β = 1` witness of `e`.
pub fn homothety_disc(ss: &SegmentSet, sk: &SegmentSkeleton, e: Edge) -> Result<HomothetyDisc> {
    if sk.graph.beta != Beta::Finite(1.0) {
        return Err(Error::InvalidBeta("homothety check needs a beta = 1 skeleton".into()));
    }
    let &(t1, t2) = sk
        .witnesses
        .get(&e)
        .ok_or_else(|| Error::InvalidCandidates(e.0, e.1))?;
    let s = ss.segments();
    let (s1, s2) = (&s[e.0], &s[e.1]);
    let (q1, q2) = (s1.at(t1), s2.at(t2));
    let c = q1.lerp(q2, 0.5);
    let r = (q2 - q1).norm2() / 2.0;

    let lam = shrink_factor(|l| s2.distance_to(q1 + (c - q1) * l) - l * r);
    let (ca, ra) = (q1 + (c - q1) * lam, lam * r);
    let d = s2.p2 - s2.p1;
    let tp = ((ca - s2.p1).dot(d) / d.dot(d)).clamp(0.0, 1.0);
    let p2 = s2.at(tp);
    let mu = shrink_factor(|u| s1.distance_to(p2 + (ca - p2) * u) - u * ra);
    let (cb, rb) = (p2 + (ca - p2) * mu, mu * ra);

    let tangency_error = (s1.distance_to(cb) - rb).abs().max((s2.distance_to(cb) - rb).abs());
    let containment_excess = (cb - c).norm2() + rb - r;
    let tol = 1e-9 * r.max(f64::MIN_POSITIVE);
    let blocked = s
        .iter()
        .enumerate()
        .any(|(k, sk)| k != e.0 && k != e.1 && sk.distance_to(cb) <= rb - tol);
    Ok(HomothetyDisc {
        center: cb,
        radius: rb,
        tangency_error,
        containment_excess,
        blocked,
    })
}

/// Validates `G_2 ⊆ G_{β_k} ⊆ … ⊆ G_{β_1} ⊆ G_1` at resolution `m` for
/// ascending betas in `[1, 2]`.
pub fn chain_check_segments(ss: &SegmentSet, betas: &[f64], m: usize) -> Result<ChainReport> {
    check_betas_in_unit_interval(betas)?;
    let layer = |b: f64, v: Variant| segment_beta_skeleton(ss, Beta::Finite(b), v, m).map(|s| s.graph);
    let rng = layer(2.0, Variant::Open)?;
    let gg = layer(1.0, Variant::Closed)?;
    let layers = betas
        .iter()
        .map(|&b| layer(b, Variant::default_for(Beta::Finite(b))).map(|g| (b, g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(chain_from_layers(None, &rng, &layers, &gg, None))
}
