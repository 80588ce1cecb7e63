//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::WeightedGraph;
use crate::metric::Point2;
use crate::segments::{Segment, SegmentSet};
use crate::skeleton::PointSet;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points uniform in the unit square.
pub fn random_points(rng: &mut impl Rng, n: usize) -> PointSet {
    loop {
        let pts: Vec<Point2> = (0..n).map(|_| Point2::new(rng.gen(), rng.gen())).collect();
        if let Ok(ps) = PointSet::new(pts) {
            return ps;
        }
    }
}

/// Dyadic rational `1 + 9k / 2²⁰` with `k` uniform, so in `[1, 10]`. Sums
/// of such weights are exact in `f64`, and distance ties between distinct
/// paths are rare.
pub fn random_weight(rng: &mut impl Rng) -> f64 {
    const DEN: u32 = 1 << 20;
    1.0 + 9.0 * rng.gen_range(0..=DEN) as f64 / DEN as f64
}

/// A connected graph without bridges on `n ≥ 3` vertices: a random
/// Hamiltonian cycle plus each other pair with probability `density`.
/// `n_sites` distinct vertices are drawn as sites. Vertices get random
/// drawing positions.
pub fn random_graph(rng: &mut impl Rng, n: usize, n_sites: usize, density: f64) -> WeightedGraph {
    assert!(n >= 3 && (1..=n).contains(&n_sites));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut has = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for k in 0..n {
        let (a, b) = (order[k], order[(k + 1) % n]);
        has[a][b] = true;
        has[b][a] = true;
        edges.push((a.min(b), a.max(b), random_weight(rng)));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !has[a][b] && rng.gen_bool(density) {
                edges.push((a, b, random_weight(rng)));
            }
        }
    }
    let mut sites: Vec<usize> = (0..n).collect();
    sites.shuffle(rng);
    sites.truncate(n_sites);
    sites.sort_unstable();
    let coords = (0..n).map(|_| Point2::new(rng.gen(), rng.gen())).collect();
    WeightedGraph::new(n, sites, edges)
        .and_then(|g| g.with_coordinates(coords))
        .expect("generated graph is valid")
}

/// `k` pairwise disjoint segments in the unit square with lengths in
/// `[0.05, 0.35]`.
pub fn random_segments(rng: &mut impl Rng, k: usize) -> SegmentSet {
    let mut segs: Vec<Segment> = Vec::with_capacity(k);
    while segs.len() < k {
        let p = Point2::new(rng.gen(), rng.gen());
        let th: f64 = rng.gen_range(0.0..std::f64::consts::PI);
        let len = rng.gen_range(0.05..0.35);
        let q = p + Point2::new(th.cos(), th.sin()) * len;
        if !(0.0..=1.0).contains(&q.x) || !(0.0..=1.0).contains(&q.y) {
            continue;
        }
        segs.push(Segment::new(p, q));
        if SegmentSet::new(segs.clone()).is_err() {
            segs.pop();
        }
    }
    SegmentSet::new(segs).expect("segments are disjoint")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generators_repeat() {
        let a = random_points(&mut rng_from_seed(5), 20);
        let b = random_points(&mut rng_from_seed(5), 20);
        assert_eq!(a, b);
        let g = random_graph(&mut rng_from_seed(1), 8, 5, 0.2);
        assert_eq!(g.n_sites(), 5);
        assert!(g.edges.iter().all(|e| (1.0..=10.0).contains(&e.2)));
        assert_eq!(random_segments(&mut rng_from_seed(2), 6).len(), 6);
    }
}
