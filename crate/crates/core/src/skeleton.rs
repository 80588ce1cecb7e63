//! Point-set β-skeletons by direct lens testing, the classic proximity
//! graphs they sit between, and the inclusion-chain validator.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use spade::{DelaunayTriangulation, Triangulation};

use crate::error::{Error, Result};
use crate::metric::{lens_construct, Beta, Metric, Point2, Variant, EPS_REL};

pub type Edge = (usize, usize);

/// Orders the endpoints so that `i < j`.
#[inline]
pub fn edge(i: usize, j: usize) -> Edge {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// A validated set of distinct, finite points; ids are indices.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point2>,
}

impl PointSet {
    pub fn new(points: Vec<Point2>) -> Result<Self> {
        if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::NonFinite);
        }
        if let Some((i, j)) = find_coincident(&points) {
            return Err(Error::DuplicatePoints(i, j));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, i: usize) -> Point2 {
        self.points[i]
    }

    /// Euclidean diameter of the bounding box.
    pub fn extent(&self) -> f64 {
        bbox_extent(&self.points)
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.len() < needed {
            Err(Error::TooFewSites {
                needed,
                got: self.len(),
            })
        } else {
            Ok(())
        }
    }
}

pub(crate) fn bbox_extent(points: &[Point2]) -> f64 {
    let (mut lo, mut hi) = (Point2::new(f64::MAX, f64::MAX), Point2::new(f64::MIN, f64::MIN));
    for p in points {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    if points.is_empty() {
        0.0
    } else {
        (hi - lo).norm2()
    }
}

fn find_coincident(points: &[Point2]) -> Option<(usize, usize)> {
    let tol = EPS_REL * 1e-3 * bbox_extent(points);
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.total_cmp(&points[b].x));
    for (k, &a) in order.iter().enumerate() {
        for &b in &order[k + 1..] {
            if points[b].x - points[a].x > tol {
                break;
            }
            if (points[b] - points[a]).norm2() <= tol {
                return Some((a.min(b), a.max(b)));
            }
        }
    }
    None
}

/// The space the sites live in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Setting {
    Plane(Metric),
    Graph,
    Segments,
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Setting::Plane(m) => write!(f, "{m}"),
            Setting::Graph => f.write_str("graph"),
            Setting::Segments => f.write_str("segments"),
        }
    }
}

/// Which algorithm produced a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Producer {
    BruteForce,
    CircleBased,
    Delaunay,
    SpanningTree,
    L1BruteForce,
    SweepSmallBeta,
    SweepLargeBeta,
    WeightedLens,
    GraphDelaunay,
    SegmentGrid,
    EdgeFile,
}

impl fmt::Display for Producer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Producer::BruteForce => "brute",
            Producer::CircleBased => "circle-based",
            Producer::Delaunay => "delaunay",
            Producer::SpanningTree => "mst",
            Producer::L1BruteForce => "l1-brute",
            Producer::SweepSmallBeta => "sweep-small",
            Producer::SweepLargeBeta => "sweep-large",
            Producer::WeightedLens => "weighted-lens",
            Producer::GraphDelaunay => "graph-delaunay",
            Producer::SegmentGrid => "segment-grid",
            Producer::EdgeFile => "edge-file",
        })
    }
}

/// An undirected graph on `n_sites` sites, tagged with how it was made.
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonGraph {
    pub n_sites: usize,
    pub edges: BTreeSet<Edge>,
    pub beta: Beta,
    pub setting: Setting,
    pub variant: Variant,
    pub producer: Producer,
}

impl SkeletonGraph {
    pub fn new(
        n_sites: usize,
        edges: impl IntoIterator<Item = Edge>,
        beta: Beta,
        setting: Setting,
        variant: Variant,
        producer: Producer,
    ) -> Self {
        let edges = edges
            .into_iter()
            .map(|(i, j)| {
                assert!(i != j && i < n_sites && j < n_sites, "bad edge ({i}, {j})");
                edge(i, j)
            })
            .collect();
        Self {
            n_sites,
            edges,
            beta,
            setting,
            variant,
            producer,
        }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&edge(i, j))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges of `self` missing from `other`.
    pub fn missing_from(&self, other: &SkeletonGraph) -> Vec<Edge> {
        self.edges.difference(&other.edges).copied().collect()
    }

    pub fn is_subgraph_of(&self, other: &SkeletonGraph) -> bool {
        self.edges.is_subset(&other.edges)
    }
}

/// Runs `keep` over all unordered pairs, in parallel, and collects the kept
/// ones.
pub(crate) fn filter_pairs<F>(n: usize, keep: F) -> BTreeSet<Edge>
where
    F: Fn(usize, usize) -> bool + Sync,
{
    (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let keep = &keep;
            (i + 1..n).filter(move |&j| keep(i, j)).map(move |j| (i, j))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Lens-based β-skeleton by testing every pair against every other point.
pub fn beta_skeleton_bruteforce(
    ps: &PointSet,
    metric: Metric,
    beta: Beta,
    variant: Variant,
) -> Result<SkeletonGraph> {
    ps.require(2)?;
    if !matches!(metric, Metric::Lp(_)) {
        return Err(Error::UnsupportedMetric(format!(
            "{metric}: use the l1 skeleton routines"
        )));
    }
    let pts = ps.points();
    let edges = filter_pairs(pts.len(), |i, j| {
        let lens = lens_construct(metric, pts[i], pts[j], beta)
            .expect("distinct points give a valid lens");
        !pts.iter()
            .enumerate()
            .any(|(k, &q)| k != i && k != j && lens.contains(q, variant))
    });
    Ok(SkeletonGraph::new(
        pts.len(),
        edges,
        beta,
        Setting::Plane(metric),
        variant,
        Producer::BruteForce,
    ))
}

/// The closed 1-skeleton under l₂.
pub fn gabriel_graph(ps: &PointSet) -> Result<SkeletonGraph> {
    beta_skeleton_bruteforce(ps, Metric::L2, Beta::Finite(1.0), Variant::Closed)
}

/// The open 2-skeleton under l₂.
pub fn rng(ps: &PointSet) -> Result<SkeletonGraph> {
    beta_skeleton_bruteforce(ps, Metric::L2, Beta::Finite(2.0), Variant::Open)
}

/// Circle-based skeleton (union of the two discs) for `β ≥ 1`, Euclidean
/// only.
pub fn circle_based_skeleton(
    ps: &PointSet,
    metric: Metric,
    beta: Beta,
    variant: Variant,
) -> Result<SkeletonGraph> {
    if !metric.is_euclidean() {
        return Err(Error::UnsupportedMetric(format!(
            "circle-based lenses are only defined for lp:2, got {metric}"
        )));
    }
    let b = beta.value();
    if !(1.0..f64::INFINITY).contains(&b) {
        return Err(Error::InvalidBeta(format!(
            "circle-based skeleton needs 1 <= beta < inf, got {beta}"
        )));
    }
    ps.require(2)?;
    let pts = ps.points();
    let edges = filter_pairs(pts.len(), |i, j| {
        let (a, c) = (pts[i], pts[j]);
        let d = (c - a).norm2();
        let r = b * d / 2.0;
        let h = (r * r - d * d / 4.0).max(0.0).sqrt();
        let mid = a.lerp(c, 0.5);
        let n = (c - a).perp() * (1.0 / d);
        let (o1, o2) = (mid + n * h, mid + n * (-h));
        let eps = EPS_REL * d;
        !pts.iter().enumerate().any(|(k, &q)| {
            k != i
                && k != j
                && (variant.within((q - o1).norm2(), r, eps)
                    || variant.within((q - o2).norm2(), r, eps))
        })
    });
    Ok(SkeletonGraph::new(
        pts.len(),
        edges,
        beta,
        Setting::Plane(metric),
        variant,
        Producer::CircleBased,
    ))
}

/// Triangles of the Euclidean Delaunay triangulation, as index triples.
pub fn delaunay_triangles(ps: &PointSet) -> Result<Vec<[usize; 3]>> {
    ps.require(3)?;
    let dt = build_triangulation(ps.points());
    if dt.all_vertices_on_line() {
        return Err(Error::CollinearInput);
    }
    warn_cocircular(ps.points(), &dt);
    Ok(dt
        .inner_faces()
        .map(|f| f.vertices().map(|v| v.fix().index()))
        .collect())
}

fn build_triangulation(points: &[Point2]) -> DelaunayTriangulation<spade::Point2<f64>> {
    let mut dt = DelaunayTriangulation::<spade::Point2<f64>>::new();
    for p in points {
        // PointSet rules out duplicates, so vertex indices follow insertion order
        dt.insert(spade::Point2::new(p.x, p.y))
            .expect("finite coordinates");
    }
    debug_assert_eq!(dt.num_vertices(), points.len());
    dt
}

fn triangulation_edges(dt: &DelaunayTriangulation<spade::Point2<f64>>) -> Vec<Edge> {
    dt.undirected_edges()
        .map(|e| {
            let [a, b] = e.vertices();
            edge(a.fix().index(), b.fix().index())
        })
        .collect()
}

fn warn_cocircular(points: &[Point2], dt: &DelaunayTriangulation<spade::Point2<f64>>) {
    for e in dt.undirected_edges() {
        let h = e.as_directed();
        let (Some(f1), Some(f2)) = (h.face().as_inner(), h.rev().face().as_inner()) else {
            continue;
        };
        let tri = f1.vertices().map(|v| v.fix().index());
        let Some(opp) = f2
            .vertices()
            .map(|v| v.fix().index())
            .into_iter()
            .find(|v| !tri.contains(v))
        else {
            continue;
        };
        let t = tri.map(|i| points[i]);
        if incircle(t[0], t[1], t[2], points[opp]).abs() <= incircle_tolerance(&t, points[opp]) {
            log::warn!(
                "near co-circular points {:?} + {opp}: Delaunay edges are not unique",
                tri
            );
            return;
        }
    }
}

/// Positive when `d` is strictly inside the circumcircle of the
/// counter-clockwise triangle `a b c`.
pub fn incircle(a: Point2, b: Point2, c: Point2, d: Point2) -> f64 {
    let (ad, bd, cd) = (a - d, b - d, c - d);
    let det = ad.dot(ad) * bd.cross(cd) - bd.dot(bd) * ad.cross(cd) + cd.dot(cd) * ad.cross(bd);
    if (b - a).cross(c - a) >= 0.0 {
        det
    } else {
        -det
    }
}

fn incircle_tolerance(t: &[Point2; 3], d: Point2) -> f64 {
    let s = t
        .iter()
        .map(|&p| (p - d).norm2())
        .fold(0.0f64, f64::max);
    EPS_REL * s.powi(4)
}

/// Triangles whose circumcircle strictly contains another input point.
pub fn empty_circumcircle_violations(ps: &PointSet, tris: &[[usize; 3]]) -> Vec<(usize, usize)> {
    let pts = ps.points();
    let mut out = Vec::new();
    for (t, tri) in tris.iter().enumerate() {
        let v = tri.map(|i| pts[i]);
        for (k, &q) in pts.iter().enumerate() {
            if !tri.contains(&k) && incircle(v[0], v[1], v[2], q) > incircle_tolerance(&v, q) {
                out.push((t, k));
            }
        }
    }
    out
}

/// Euclidean Delaunay edge set.
pub fn delaunay(ps: &PointSet) -> Result<SkeletonGraph> {
    let tris = delaunay_triangles(ps)?;
    let edges = tris
        .iter()
        .flat_map(|t| [edge(t[0], t[1]), edge(t[1], t[2]), edge(t[0], t[2])]);
    Ok(SkeletonGraph::new(
        ps.len(),
        edges,
        Beta::Finite(1.0),
        Setting::Plane(Metric::L2),
        Variant::Closed,
        Producer::Delaunay,
    ))
}

/// Delaunay edges that also accept collinear input (consecutive points) and
/// two-point sets.
pub(crate) fn delaunay_edges_lenient(points: &[Point2]) -> Vec<Edge> {
    match points.len() {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => triangulation_edges(&build_triangulation(points)),
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Kruskal over the complete graph with weights `weight(i, j)`; ties go to
/// the lexicographically smaller pair.
pub(crate) fn complete_graph_mst(n: usize, weight: impl Fn(usize, usize) -> f64) -> Vec<Edge> {
    let mut all: Vec<(f64, usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (weight(i, j), i, j))
        .collect();
    all.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut uf = UnionFind::new(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    for (_, i, j) in all {
        if uf.union(i, j) {
            tree.push((i, j));
            if tree.len() + 1 == n {
                break;
            }
        }
    }
    tree
}

/// Minimum spanning tree of the complete graph weighted by `metric`.
pub fn emst(ps: &PointSet, metric: Metric) -> Result<SkeletonGraph> {
    ps.require(2)?;
    let pts = ps.points();
    let tree = complete_graph_mst(pts.len(), |i, j| metric.distance(pts[i], pts[j]));
    Ok(SkeletonGraph::new(
        pts.len(),
        tree,
        Beta::Finite(2.0),
        Setting::Plane(metric),
        Variant::Open,
        Producer::SpanningTree,
    ))
}

/// One `subset ⊆ superset` check of an inclusion chain.
#[derive(Debug, Clone, PartialEq)]
pub struct InclusionCheck {
    pub subset: String,
    pub superset: String,
    pub subset_edges: usize,
    pub violations: Vec<Edge>,
    /// Set for equality checks, where a violation may sit on either side.
    pub two_sided: bool,
}

impl InclusionCheck {
    pub fn between(
        subset: impl Into<String>,
        superset: impl Into<String>,
        a: &SkeletonGraph,
        b: &SkeletonGraph,
    ) -> Self {
        Self {
            subset: subset.into(),
            superset: superset.into(),
            subset_edges: a.edge_count(),
            violations: a.missing_from(b),
            two_sided: false,
        }
    }

    /// Two-sided comparison rendered as one check: every edge present in
    /// exactly one of the graphs is a violation.
    pub fn equality(
        left: impl Into<String>,
        right: impl Into<String>,
        a: &SkeletonGraph,
        b: &SkeletonGraph,
    ) -> Self {
        let violations = a.edges.symmetric_difference(&b.edges).copied().collect();
        Self {
            subset: left.into(),
            superset: right.into(),
            subset_edges: a.edge_count(),
            violations,
            two_sided: true,
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Result of an inclusion-chain or equivalence suite.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ChainReport {
    pub checks: Vec<InclusionCheck>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(InclusionCheck::holds)
    }

    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }

    pub fn push(&mut self, check: InclusionCheck) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: ChainReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for ChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let rel = if c.two_sided { "==" } else { "<=" };
            if c.holds() {
                writeln!(f, "ok        {} {rel} {} ({} edges)", c.subset, c.superset, c.subset_edges)?;
            } else {
                write!(
                    f,
                    "VIOLATION {} {rel} {} ({} of {} edges):",
                    c.subset,
                    c.superset,
                    c.violations.len(),
                    c.subset_edges
                )?;
                for (i, j) in &c.violations {
                    write!(f, " ({i},{j})")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn check_betas_in_unit_interval(betas: &[f64]) -> Result<()> {
    let ok = !betas.is_empty()
        && betas.iter().all(|b| (1.0..=2.0).contains(b))
        && betas.windows(2).all(|w| w[0] <= w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidBeta(format!(
            "chain betas must be ascending within [1, 2], got {betas:?}"
        )))
    }
}

/// Builds the generic `MST ⊆ RNG ⊆ G_{β_k} ⊆ … ⊆ G_{β_1} ⊆ GG ⊆ DT` report
/// from already-computed layers. `layers` holds `(β, G_β)` in ascending β.
pub(crate) fn chain_from_layers(
    mst: Option<&SkeletonGraph>,
    rng: &SkeletonGraph,
    layers: &[(f64, SkeletonGraph)],
    gg: &SkeletonGraph,
    top: Option<(&str, &SkeletonGraph)>,
) -> ChainReport {
    let mut report = ChainReport::default();
    if let Some(mst) = mst {
        report.push(InclusionCheck::between("MST", "RNG", mst, rng));
    }
    let name = |b: f64| format!("G[{b}]");
    let (last_beta, last) = layers.last().expect("at least one beta");
    report.push(InclusionCheck::between("RNG", name(*last_beta), rng, last));
    for w in layers.windows(2).rev() {
        let ((b_lo, g_lo), (b_hi, g_hi)) = (&w[0], &w[1]);
        report.push(InclusionCheck::between(name(*b_hi), name(*b_lo), g_hi, g_lo));
    }
    let (first_beta, first) = &layers[0];
    report.push(InclusionCheck::between(name(*first_beta), "GG", first, gg));
    if let Some((top_name, top)) = top {
        report.push(InclusionCheck::between("GG", top_name, gg, top));
    }
    report
}

/// Validates `MST ⊆ RNG ⊆ G_{β'} ⊆ G_β ⊆ GG ⊆ DT` under l₂ for the given
/// ascending betas in `[1, 2]`. Each `G_β` uses [`Variant::default_for`].
pub fn inclusion_chain_check(ps: &PointSet, betas: &[f64]) -> Result<ChainReport> {
    check_betas_in_unit_interval(betas)?;
    ps.require(2)?;
    let mst = emst(ps, Metric::L2)?;
    let rng_g = rng(ps)?;
    let gg = gabriel_graph(ps)?;
    let layers = betas
        .iter()
        .map(|&b| {
            let beta = Beta::Finite(b);
            beta_skeleton_bruteforce(ps, Metric::L2, beta, Variant::default_for(beta)).map(|g| (b, g))
        })
        .collect::<Result<Vec<_>>>()?;
    let dt = SkeletonGraph::new(
        ps.len(),
        delaunay_edges_lenient(ps.points()),
        Beta::Finite(1.0),
        Setting::Plane(Metric::L2),
        Variant::Closed,
        Producer::Delaunay,
    );
    Ok(chain_from_layers(Some(&mst), &rng_g, &layers, &gg, Some(("DT", &dt))))
}
