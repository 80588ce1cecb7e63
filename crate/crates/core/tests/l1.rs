mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use proxiskel::gen::{random_points, rng_from_seed};
use proxiskel::l1::{canonical_lenses_l1, l1_bruteforce, l1_delaunay_candidates, sweep_large_beta, sweep_small_beta};
use proxiskel::skeleton::emst;
use proxiskel::{Beta, Edge, Metric, Point2, PointSet, Variant};

fn p(x: f64, y: f64) -> Point2 {
    Point2::new(x, y)
}

fn pset(v: &[(f64, f64)]) -> PointSet {
    PointSet::new(v.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
}

fn l1(a: Point2, b: Point2) -> f64 {
    (a.x - b.x).abs() + (a.y - b.y).abs()
}

/// Chebyshev image: l1 becomes max-norm after `u = x + y, w = x − y`.
fn frame(metric: Metric, q: Point2) -> Point2 {
    match metric {
        Metric::L1 => p(q.x + q.y, q.x - q.y),
        _ => q,
    }
}

fn cheb(a: Point2, b: Point2) -> f64 {
    (a.x - b.x).abs().max((a.y - b.y).abs())
}

/// Axis-aligned box `[x0, x1] × [y0, y1]`; sides of squares are boxes of
/// zero thickness.
#[derive(Clone, Copy, Debug)]
struct Box2 {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

fn sides(c: Point2, r: f64) -> [Box2; 4] {
    let (l, h, b, t) = (c.x - r, c.x + r, c.y - r, c.y + r);
    [
        Box2 { x0: l, x1: h, y0: b, y1: b },
        Box2 { x0: l, x1: h, y0: t, y1: t },
        Box2 { x0: l, x1: l, y0: b, y1: t },
        Box2 { x0: h, x1: h, y0: b, y1: t },
    ]
}

fn meet(a: Box2, b: Box2, tol: f64) -> Option<Box2> {
    let m = Box2 { x0: a.x0.max(b.x0), x1: a.x1.min(b.x1), y0: a.y0.max(b.y0), y1: a.y1.min(b.y1) };
    (m.x0 <= m.x1 + tol && m.y0 <= m.y1 + tol).then(|| Box2 { x0: m.x0.min(m.x1), x1: m.x0.max(m.x1), y0: m.y0.min(m.y1), y1: m.y0.max(m.y1) })
}

/// Pieces of `{c : |c − a| = ra, |c − b| = rb}` in the max-norm.
fn sphere_meet(a: Point2, ra: f64, b: Point2, rb: f64, tol: f64) -> Vec<Box2> {
    let mut out = Vec::new();
    for s in sides(a, ra) {
        for t in sides(b, rb) {
            out.extend(meet(s, t, tol));
        }
    }
    out
}

fn samples(b: Box2, k: usize) -> impl Iterator<Item = Point2> {
    (0..=k).map(move |i| {
        let f = i as f64 / k as f64;
        p(b.x0 + f * (b.x1 - b.x0), b.y0 + f * (b.y1 - b.y0))
    })
}

/// Pairs certified by an explicitly sampled empty lens of the l1 family.
/// Centers are found in the Chebyshev frame from the distance conditions
/// alone; an empty sampled lens proves the edge.
fn sampled_certified(pts: &[Point2], metric: Metric, beta: f64, variant: Variant) -> BTreeSet<Edge> {
    let f: Vec<Point2> = pts.iter().map(|&q| frame(metric, q)).collect();
    let mut out = BTreeSet::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let (a, b) = (f[i], f[j]);
            let d = cheb(a, b);
            let (r, rho, g) = (beta * d / 2.0, (2.0 - beta) * d / 2.0, (beta - 1.0) * d);
            let tol = 1e-9 * d;
            let eps = 1e-9 * d;
            let empty = |c1: Point2, c2: Point2| {
                let (x0, x1) = (c1.x.max(c2.x) - r, c1.x.min(c2.x) + r);
                let (y0, y1) = (c1.y.max(c2.y) - r, c1.y.min(c2.y) + r);
                let slack = match variant {
                    Variant::Closed => 2.0 * eps,
                    Variant::Open => 0.0,
                };
                !f.iter().enumerate().any(|(k, q)| {
                    k != i && k != j && q.x > x0 - slack && q.x < x1 + slack && q.y > y0 - slack && q.y < y1 + slack
                })
            };
            let s1 = sphere_meet(a, r, b, rho, tol);
            let s2 = sphere_meet(b, r, a, rho, tol);
            let found = s1.iter().flat_map(|&piece| samples(piece, 48)).any(|c1| {
                s2.iter().any(|&piece| {
                    sides(c1, g)
                        .into_iter()
                        .filter_map(|side| meet(piece, side, tol))
                        .flat_map(|m| samples(m, 4))
                        .any(|c2| empty(c1, c2))
                })
            });
            if found {
                out.insert((i, j));
            }
        }
    }
    out
}

fn box_oracle(pts: &[Point2], metric: Metric, variant: Variant) -> BTreeSet<Edge> {
    let f: Vec<Point2> = pts.iter().map(|&q| frame(metric, q)).collect();
    let mut out = BTreeSet::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let eps = 1e-9 * cheb(f[i], f[j]);
            let (x0, x1) = (f[i].x.min(f[j].x), f[i].x.max(f[j].x));
            let (y0, y1) = (f[i].y.min(f[j].y), f[i].y.max(f[j].y));
            let inside = |q: &Point2| match variant {
                Variant::Closed => q.x >= x0 - eps && q.x <= x1 + eps && q.y >= y0 - eps && q.y <= y1 + eps,
                Variant::Open => q.x > x0 + eps && q.x < x1 - eps && q.y > y0 + eps && q.y < y1 - eps,
            };
            if !f.iter().enumerate().any(|(k, q)| k != i && k != j && inside(q)) {
                out.insert((i, j));
            }
        }
    }
    out
}

fn set(v: &[Edge]) -> BTreeSet<Edge> {
    v.iter().copied().collect()
}

#[test]
fn small_beta_lens_is_the_diagonal_rectangle() {
    let (v1, v2) = (p(0.0, 0.0), p(3.0, 1.0));
    let beta = 0.5;
    let fam = canonical_lenses_l1(Metric::L1, v1, v2, Beta::Finite(beta)).unwrap();
    assert_eq!(fam.representatives.len(), 1);
    let rep = fam.representatives[0];
    let r = l1(v1, v2) / (2.0 * beta);
    assert!((rep.radius - r).abs() < 1e-12);
    for c in [rep.c1, rep.c2] {
        assert!((l1(c, v1) - r).abs() < 1e-12 && (l1(c, v2) - r).abs() < 1e-12);
    }
    // sides along (1, 1) and (1, −1) with v1, v2 at opposite corners
    let e = v2 - v1;
    let (eu, ew) = (e.x + e.y, e.x - e.y);
    for x in -8..=14 {
        for y in -8..=8 {
            let q = p(x as f64 / 2.0, y as f64 / 2.0);
            let (u, w) = (q.x - v1.x + q.y - v1.y, q.x - v1.x - q.y + v1.y);
            let rect = (0.0..=eu).contains(&u) && (0.0..=ew).contains(&w);
            let discs = l1(q, rep.c1) <= r && l1(q, rep.c2) <= r;
            assert_eq!(rect, discs, "{q:?}");
            assert_eq!(fam.contains(0, q, Variant::Closed), rect, "{q:?}");
        }
    }
    // not the set of l1-between points: (0, 0.5) is between v1 and v2 but
    // outside, (2, 2) inside but not between
    assert!(!fam.contains(0, p(0.0, 0.5), Variant::Closed));
    assert!(fam.contains(0, p(2.0, 2.0), Variant::Closed));
}

#[test]
fn two_and_above_share_one_lens() {
    let (v1, v2) = (p(0.0, 0.0), p(2.0, 0.0));
    let two = canonical_lenses_l1(Metric::L1, v1, v2, Beta::Finite(2.0)).unwrap();
    assert_eq!(two.representatives.len(), 1);
    let l = two.representatives[0];
    assert!((l.c1 - v2).norm2() < 1e-12 && (l.c2 - v1).norm2() < 1e-12);
    assert!((l.radius - 2.0).abs() < 1e-12);
    let four = canonical_lenses_l1(Metric::L1, v1, v2, Beta::Finite(4.0)).unwrap();
    assert_eq!(four.representatives, two.representatives);
}

/// Pixels of `N ∪ N′` against the β = 2 lens `{q : d(q, v1) ≤ d, d(q, v2) ≤ d}`,
/// at pixel size `1e-3·d`; mismatches must sit within a pixel of a lens
/// boundary. Returns the number of pixels where both lenses hold.
fn union_check(metric: Metric, v1: Point2, v2: Point2, beta: f64) -> usize {
    let fam = canonical_lenses_l1(metric, v1, v2, Beta::Finite(beta)).unwrap();
    assert_eq!(fam.representatives.len(), 2, "{v1:?} {v2:?} {beta}");
    let dist = |a: Point2, b: Point2| metric.distance(a, b);
    let d = dist(v1, v2);
    let h = 1e-3 * d;
    let near_edge = |q: Point2| {
        let lens_edges = (dist(q, v1) - d).abs().min((dist(q, v2) - d).abs()) <= 2.0 * h;
        let rep_edges = fam.representatives.iter().any(|rep| {
            let f = frame(metric, q);
            let r = rep.rect;
            let (dx, dy) = ((f.x - r.lo.x).abs().min((f.x - r.hi.x).abs()), (f.y - r.lo.y).abs().min((f.y - r.hi.y).abs()));
            dx.min(dy) <= 2.0 * h
        });
        lens_edges || rep_edges
    };
    let (lo, hi) = (p(v1.x.min(v2.x) - d, v1.y.min(v2.y) - d), p(v1.x.max(v2.x) + d, v1.y.max(v2.y) + d));
    let (nx, ny) = (((hi.x - lo.x) / h) as usize, ((hi.y - lo.y) / h) as usize);
    let mut both = 0;
    for ix in 0..=nx {
        for iy in 0..=ny {
            let q = p(lo.x + (ix as f64 + 0.5) * h, lo.y + (iy as f64 + 0.5) * h);
            let (a, b) = (fam.contains(0, q, Variant::Closed), fam.contains(1, q, Variant::Closed));
            let n2 = dist(q, v1) <= d && dist(q, v2) <= d;
            if (a || b) != n2 {
                assert!(near_edge(q), "pixel {q:?} union={} n2={n2}", a || b);
            }
            both += (a && b) as usize;
        }
    }
    both
}

#[test]
fn mid_beta_family_covers_the_two_lens() {
    assert!(union_check(Metric::L1, p(0.0, 0.0), p(3.0, 1.0), 1.5) > 0);
}

#[test]
fn small_beta_sweep_examples() {
    let two = pset(&[(0.0, 0.0), (3.0, 1.0)]);
    assert_eq!(sweep_small_beta(&two, Metric::L1, Beta::Finite(0.5), Variant::Closed).unwrap().edges, set(&[(0, 1)]));
    let three = pset(&[(0.0, 0.0), (3.0, 1.0), (1.0, 0.5)]);
    let g = sweep_small_beta(&three, Metric::L1, Beta::Finite(0.5), Variant::Closed).unwrap();
    assert_eq!(g.edges, set(&[(0, 2), (1, 2)]));
    assert_eq!(g.edges, box_oracle(three.points(), Metric::L1, Variant::Closed));
    let ps = random_points(&mut rng_from_seed(40), 40);
    for metric in [Metric::L1, Metric::Linf] {
        for v in [Variant::Open, Variant::Closed] {
            let g = sweep_small_beta(&ps, metric, Beta::Finite(0.5), v).unwrap();
            assert_eq!(g.edges, box_oracle(ps.points(), metric, v));
        }
    }
}

#[test]
fn large_beta_sweep_examples() {
    let two = pset(&[(0.0, 0.0), (2.0, 0.0)]);
    assert!(sweep_large_beta(&two, Metric::L1, Beta::Finite(2.0), Variant::Closed, &[(0, 1)]).unwrap().contains(0, 1));
    let three = pset(&[(0.0, 0.0), (2.0, 0.0), (1.0, 0.5)]);
    assert!(l1(p(1.0, 0.5), p(0.0, 0.0)) <= 2.0 && l1(p(1.0, 0.5), p(2.0, 0.0)) <= 2.0);
    let cands = l1_delaunay_candidates(&three, Metric::L1).unwrap();
    assert!(!sweep_large_beta(&three, Metric::L1, Beta::Finite(2.0), Variant::Closed, &cands).unwrap().contains(0, 1));
}

#[test]
fn candidate_examples() {
    let tri = pset(&[(0.0, 0.0), (3.0, 1.0), (1.0, 2.5)]);
    assert_eq!(l1_delaunay_candidates(&tri, Metric::L1).unwrap().len(), 3);
    // every disc touching two non-adjacent points of the row holds the
    // points between them, since the row runs along a diagonal of the
    // l1 disc
    let row = pset(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0), (4.0, 0.0)]);
    let c: BTreeSet<Edge> = l1_delaunay_candidates(&row, Metric::L1).unwrap().into_iter().collect();
    assert_eq!(c, set(&[(0, 1), (1, 2), (2, 3), (3, 4)]));
    for seed in 0..20 {
        let ps = random_points(&mut rng_from_seed(4000 + seed), 40);
        assert!(l1_delaunay_candidates(&ps, Metric::L1).unwrap().len() <= 3 * 40 - 6);
    }
}

#[test]
fn sampled_lenses_certify_brute_force_edges() {
    let mut certified = 0;
    let mut total = 0;
    for seed in 0..30 {
        let ps = random_points(&mut rng_from_seed(6000 + seed), 25);
        for metric in [Metric::L1, Metric::Linf] {
            for b in [1.0, 1.3, 1.7, 2.0] {
                for v in [Variant::Open, Variant::Closed] {
                    let brute = l1_bruteforce(&ps, metric, Beta::Finite(b), v).unwrap().edges;
                    let oracle = sampled_certified(ps.points(), metric, b, v);
                    assert!(oracle.is_subset(&brute), "seed {seed} {metric} b={b} {v}: {:?}", oracle.difference(&brute).collect::<Vec<_>>());
                    certified += oracle.len();
                    total += brute.len();
                }
            }
        }
    }
    // sampling finds a lens for nearly every edge
    assert!(certified * 100 >= 97 * total, "{certified} of {total}");
}

fn point_set(max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec((0.0..1.0f64, 0.0..1.0f64), 3..max)
        .prop_filter_map("distinct points", |v| PointSet::new(v.into_iter().map(|(x, y)| p(x, y)).collect()).ok())
}

/// Points on a small integer grid, so coordinate ties are everywhere.
fn grid_set(max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::btree_set((0..6i32, 0..6i32), 3..max)
        .prop_map(|s| PointSet::new(s.into_iter().map(|(x, y)| p(x as f64, y as f64)).collect()).unwrap())
}

fn metric() -> impl Strategy<Value = Metric> {
    prop_oneof![Just(Metric::L1), Just(Metric::Linf)]
}

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![Just(Variant::Open), Just(Variant::Closed)]
}

proptest! {
    #[test]
    fn small_beta_results_do_not_depend_on_beta(ps in point_set(40), m in metric(), v in variant(), b1 in 0.0..1.0f64, b2 in 0.0..1.0f64) {
        let g1 = sweep_small_beta(&ps, m, Beta::Finite(b1), v).unwrap();
        let g2 = sweep_small_beta(&ps, m, Beta::Finite(b2), v).unwrap();
        prop_assert_eq!(&g1.edges, &g2.edges);
        prop_assert_eq!(&g1.edges, &box_oracle(ps.points(), m, v));
    }

    #[test]
    fn large_beta_results_collapse_from_two(ps in point_set(30), m in metric(), v in variant(), b in 2.0..50.0f64) {
        let cands = l1_delaunay_candidates(&ps, m).unwrap();
        let g2 = sweep_large_beta(&ps, m, Beta::Finite(2.0), v, &cands).unwrap();
        let gb = sweep_large_beta(&ps, m, Beta::Finite(b), v, &cands).unwrap();
        let ginf = sweep_large_beta(&ps, m, Beta::Infinity, v, &cands).unwrap();
        prop_assert_eq!(&g2.edges, &gb.edges);
        prop_assert_eq!(&g2.edges, &ginf.edges);
    }

    #[test]
    fn edges_shrink_up_to_two(ps in point_set(30), m in metric(), v in variant(), b in 1.0..2.0f64, step in 0.0..1.0f64) {
        let b2 = b + step * (2.0 - b);
        let cands = l1_delaunay_candidates(&ps, m).unwrap();
        let g = sweep_large_beta(&ps, m, Beta::Finite(b), v, &cands).unwrap();
        let g2 = sweep_large_beta(&ps, m, Beta::Finite(b2), v, &cands).unwrap();
        prop_assert!(g2.is_subgraph_of(&g), "{:?}", g2.missing_from(&g));
        let two = sweep_large_beta(&ps, m, Beta::Finite(2.0), Variant::Open, &cands).unwrap();
        prop_assert!(emst(&ps, m).unwrap().is_subgraph_of(&two));
    }

    #[test]
    fn sweeps_match_brute_force_on_grids(ps in grid_set(20), m in metric(), v in variant(), b in prop_oneof![Just(0.5), Just(1.0), Just(1.25), Just(1.5), Just(2.0), Just(3.0)]) {
        let brute = l1_bruteforce(&ps, m, Beta::Finite(b), v).unwrap();
        let sweep = if b < 1.0 {
            sweep_small_beta(&ps, m, Beta::Finite(b), v).unwrap()
        } else {
            let cands = l1_delaunay_candidates(&ps, m).unwrap();
            sweep_large_beta(&ps, m, Beta::Finite(b), v, &cands).unwrap()
        };
        prop_assert_eq!(&sweep.edges, &brute.edges);
        let oracle = sampled_certified(ps.points(), m, b.max(1.0), v);
        if b >= 1.0 {
            prop_assert!(oracle.is_subset(&brute.edges));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_lenses_cover_the_two_lens(x in -3.0..3.0f64, y in -3.0..3.0f64, b in 1.05..1.95f64, m in metric()) {
        let v2 = p(x, y);
        let f = frame(m, v2);
        prop_assume!(f.x.abs() > 0.05 && f.y.abs() > 0.05 && (f.x.abs() - f.y.abs()).abs() > 0.05);
        prop_assert!(union_check(m, p(0.0, 0.0), v2, b) > 0);
    }
}
