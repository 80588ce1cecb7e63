use rayon::prelude::*;

use super::{apsp, graphpoint_distance, point_distance, DistanceIndex, GraphPoint, WeightedGraph};
use crate::error::{Error, Result};
use crate::metric::{Beta, Variant};
use crate::skeleton::{Edge, Producer, Setting, SkeletonGraph};

/// Which disc a candidate center can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CenterRole {
    /// `d(c, u1) = βD/2` and `d(c, u2) = |β − 2|D/2`.
    First,
    /// The same with `u1` and `u2` exchanged.
    Second,
}

/// Points `t` on edge `id` where the tent distance to `u` equals `target`.
fn tent_roots(g: &WeightedGraph, idx: &DistanceIndex, id: usize, u: usize, target: f64, eps: f64) -> Vec<f64> {
    let (a, b, w) = g.edges[id];
    let mut roots = Vec::with_capacity(2);
    for t in [(target - idx.get(a, u)) / w, (w + idx.get(b, u) - target) / w] {
        let t = if (-eps / w..0.0).contains(&t) {
            0.0
        } else if t > 1.0 && t <= 1.0 + eps / w {
            1.0
        } else {
            t
        };
        if (0.0..=1.0).contains(&t) {
            let f = graphpoint_distance(g, idx, GraphPoint::EdgePoint { edge: id, t }, u);
            if (f - target).abs() <= eps {
                roots.push(t);
            }
        }
    }
    roots
}

/// Graph points `c` with `d(c, u) = ru` and `d(c, v) = rv`, deduplicated,
/// edge endpoints reported as vertices.
fn points_at(g: &WeightedGraph, idx: &DistanceIndex, u: usize, ru: f64, v: usize, rv: f64) -> Vec<GraphPoint> {
    let eps = g.eps();
    let mut out: Vec<GraphPoint> = Vec::new();
    for id in 0..g.edges.len() {
        for t in tent_roots(g, idx, id, u, ru, eps) {
            let p = GraphPoint::EdgePoint { edge: id, t }.normalized(g);
            if (graphpoint_distance(g, idx, p, v) - rv).abs() > eps {
                continue;
            }
            let dup = out.iter().any(|&q| match (p, q) {
                (GraphPoint::Vertex(x), GraphPoint::Vertex(y)) => x == y,
                (GraphPoint::EdgePoint { edge: e1, t: t1 }, GraphPoint::EdgePoint { edge: e2, t: t2 }) => {
                    e1 == e2 && ((t1 - t2) * g.edges[e1].2).abs() <= eps
                }
                _ => false,
            });
            if !dup {
                out.push(p);
            }
        }
    }
    out
}

fn check_beta(beta: Beta) -> Result<f64> {
    match beta {
        Beta::Finite(b) if b >= 1.0 => Ok(b),
        _ => Err(Error::BetaOutOfRange {
            beta: beta.value(),
            reason: "weighted-graph lenses need 1 <= beta < inf".into(),
        }),
    }
}

/// Every potential disc center of the lens of vertices `(u1, u2)`, tagged
/// with the disc it can carry.
pub fn candidate_centers(
    g: &WeightedGraph,
    idx: &DistanceIndex,
    u1: usize,
    u2: usize,
    beta: Beta,
) -> Result<Vec<(GraphPoint, CenterRole)>> {
    let b = check_beta(beta)?;
    if u1 == u2 {
        return Err(Error::DegenerateGenerators);
    }
    let d = idx.get(u1, u2);
    let (r1, r2) = (b * d / 2.0, (b - 2.0).abs() * d / 2.0);
    let first = points_at(g, idx, u1, r1, u2, r2).into_iter().map(|p| (p, CenterRole::First));
    let second = points_at(g, idx, u2, r1, u1, r2).into_iter().map(|p| (p, CenterRole::Second));
    Ok(first.chain(second).collect())
}

enum PairOutcome {
    Edge,
    NoEdge,
    Undefined,
}

fn decide_pair(
    g: &WeightedGraph,
    idx: &DistanceIndex,
    k: usize,
    l: usize,
    b: f64,
    variant: Variant,
    bound: f64,
) -> PairOutcome {
    let eps = g.eps();
    if b > bound + eps {
        return PairOutcome::Undefined;
    }
    let (u1, u2) = (g.sites[k], g.sites[l]);
    let d = idx.get(u1, u2);
    let r = b * d / 2.0;
    let rr = (b - 2.0).abs() * d / 2.0;
    let c1s = points_at(g, idx, u1, r, u2, rr);
    let c2s = points_at(g, idx, u2, r, u1, rr);
    let others: Vec<usize> = g
        .sites
        .iter()
        .enumerate()
        .filter(|&(m, _)| m != k && m != l)
        .map(|(_, &s)| s)
        .collect();
    let mut any_lens = false;
    for &c1 in &c1s {
        for &c2 in &c2s {
            if (point_distance(g, idx, c1, c2) - (b - 1.0) * d).abs() > eps {
                continue;
            }
            any_lens = true;
            let blocked = others.iter().any(|&s| {
                variant.within(graphpoint_distance(g, idx, c1, s), r, eps)
                    && variant.within(graphpoint_distance(g, idx, c2, s), r, eps)
            });
            if !blocked {
                return PairOutcome::Edge;
            }
        }
    }
    if any_lens {
        PairOutcome::NoEdge
    } else {
        PairOutcome::Undefined
    }
}

/// Min total length of two edge-disjoint `s`–`t` paths: min-cost flow of
/// two units with unit arc capacities and Bellman–Ford augmentation.
fn two_disjoint_paths(g: &WeightedGraph, s: usize, t: usize) -> Option<f64> {
    struct Arc {
        to: usize,
        cap: i32,
        cost: f64,
        rev: usize,
    }
    let n = g.n_vertices;
    let mut arcs: Vec<Vec<Arc>> = (0..n).map(|_| Vec::new()).collect();
    let add = |arcs: &mut Vec<Vec<Arc>>, a: usize, b: usize, w: f64| {
        let (ra, rb) = (arcs[b].len(), arcs[a].len());
        arcs[a].push(Arc { to: b, cap: 1, cost: w, rev: ra });
        arcs[b].push(Arc { to: a, cap: 0, cost: -w, rev: rb });
    };
    for &(a, b, w) in &g.edges {
        add(&mut arcs, a, b, w);
        add(&mut arcs, b, a, w);
    }
    let tol = 1e-12 * g.max_weight();
    let mut total = 0.0;
    for _ in 0..2 {
        let mut dist = vec![f64::INFINITY; n];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        dist[s] = 0.0;
        for _ in 0..n {
            let mut changed = false;
            for v in 0..n {
                if dist[v].is_infinite() {
                    continue;
                }
                for (k, arc) in arcs[v].iter().enumerate() {
                    if arc.cap > 0 && dist[v] + arc.cost < dist[arc.to] - tol {
                        dist[arc.to] = dist[v] + arc.cost;
                        prev[arc.to] = Some((v, k));
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if dist[t].is_infinite() {
            return None;
        }
        total += dist[t];
        let mut v = t;
        while let Some((u, k)) = prev[v] {
            arcs[u][k].cap -= 1;
            let rev = arcs[u][k].rev;
            arcs[v][rev].cap += 1;
            v = u;
        }
    }
    Some(total)
}

/// Shortest closed walk through each site pair that reuses no edge, keyed
/// by site indices; `None` when a bridge separates the pair.
pub fn pair_cycle_lengths(g: &WeightedGraph) -> Vec<(Edge, Option<f64>)> {
    let m = g.n_sites();
    let pairs: Vec<Edge> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    pairs
        .into_par_iter()
        .map(|(i, j)| ((i, j), two_disjoint_paths(g, g.sites[i], g.sites[j])))
        .collect()
}

/// Largest β for which every site pair admits a lens:
/// `min (cycle / 2D) + 1` over site pairs.
pub fn beta_bound(g: &WeightedGraph) -> Result<f64> {
    let idx = apsp(g)?;
    let cycles = pair_cycle_lengths(g);
    let bridged: Vec<Edge> = cycles
        .iter()
        .filter(|(_, c)| c.is_none())
        .map(|&((i, j), _)| (g.sites[i], g.sites[j]))
        .collect();
    if !bridged.is_empty() {
        return Err(Error::NoCycle(bridged));
    }
    Ok(cycles
        .iter()
        .map(|&((i, j), c)| c.unwrap() / (2.0 * idx.get(g.sites[i], g.sites[j])) + 1.0)
        .fold(f64::INFINITY, f64::min))
}

/// A weighted skeleton plus the site pairs whose lens is undefined at this β.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSkeleton {
    pub graph: SkeletonGraph,
    /// Site pairs above their own validity bound or without any admissible
    /// center pair; treated as non-edges.
    pub undefined: Vec<Edge>,
}

impl WeightedSkeleton {
    pub fn is_partial(&self) -> bool {
        !self.undefined.is_empty()
    }

    /// The graph, or `BetaOutOfRange` when some pair was undefined.
    pub fn strict(self) -> Result<SkeletonGraph> {
        if self.is_partial() {
            Err(Error::BetaOutOfRange {
                beta: self.graph.beta.value(),
                reason: format!("lens undefined for site pairs {:?}", self.undefined),
            })
        } else {
            Ok(self.graph)
        }
    }
}

/// `G_β` on the sites of `g`: a pair is an edge iff some admissible center
/// pair spans a lens holding no other site.
///
/// Pairs with no cycle through them keep the bound 2, since centers on the
/// shortest path always exist for `β ≤ 2`.
pub fn weighted_beta_skeleton(g: &WeightedGraph, beta: Beta, variant: Variant) -> Result<WeightedSkeleton> {
    let b = check_beta(beta)?;
    let idx = apsp(g)?;
    let m = g.n_sites();
    let bounds: Vec<(Edge, f64)> = if b > 2.0 {
        pair_cycle_lengths(g)
            .into_iter()
            .map(|((i, j), c)| {
                let d = idx.get(g.sites[i], g.sites[j]);
                ((i, j), c.map_or(2.0, |c| c / (2.0 * d) + 1.0))
            })
            .collect()
    } else {
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| ((i, j), 2.0)))
            .collect()
    };
    let outcomes: Vec<(Edge, PairOutcome)> = bounds
        .into_par_iter()
        .map(|((i, j), bound)| ((i, j), decide_pair(g, &idx, i, j, b, variant, bound)))
        .collect();
    let mut edges = Vec::new();
    let mut undefined = Vec::new();
    for (e, o) in outcomes {
        match o {
            PairOutcome::Edge => edges.push(e),
            PairOutcome::NoEdge => {}
            PairOutcome::Undefined => undefined.push(e),
        }
    }
    Ok(WeightedSkeleton {
        graph: SkeletonGraph::new(m, edges, beta, Setting::Graph, variant, Producer::WeightedLens),
        undefined,
    })
}

/// Support for `0 < β < 1` lenses of one site pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PairAdvisory {
    pub pair: Edge,
    pub distance: f64,
    /// `D(1 + 1/β)`, the cycle length a lens needs.
    pub required_cycle: f64,
    pub shortest_cycle: Option<f64>,
    /// Whether points at distance `D/(2β)` from both sites exist.
    pub supported: bool,
}

/// Per-pair report on whether `0 < β < 1` lenses can exist; such β are not
/// computed.
pub fn small_beta_advisory(g: &WeightedGraph, beta: f64) -> Result<Vec<PairAdvisory>> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::InvalidBeta(format!("advisory needs 0 < beta < 1, got {beta}")));
    }
    let idx = apsp(g)?;
    Ok(pair_cycle_lengths(g)
        .into_iter()
        .map(|((i, j), cyc)| {
            let (u, v) = (g.sites[i], g.sites[j]);
            let d = idx.get(u, v);
            let r = d / (2.0 * beta);
            PairAdvisory {
                pair: (i, j),
                distance: d,
                required_cycle: d * (1.0 + 1.0 / beta),
                shortest_cycle: cyc,
                supported: !points_at(g, &idx, u, r, v, r).is_empty(),
            }
        })
        .collect())
}
