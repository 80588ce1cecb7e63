//! β-skeletons on a subset `U` of the vertices of a connected, positively
//! weighted graph under the shortest-path metric.
//!
//! Points of the graph are vertices or interior points of edges. Along an
//! edge the distance to a fixed vertex is a tent: it rises with slope `w`
//! from one endpoint and falls with slope `w` toward the other, so every
//! question reduces to intersecting linear pieces.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metric::Point2;

mod classic;
mod lens;

pub use classic::{graph_delaunay, graph_mst, weighted_chain_check};
pub use lens::{
    beta_bound, candidate_centers, pair_cycle_lengths, small_beta_advisory, weighted_beta_skeleton,
    CenterRole, PairAdvisory, WeightedSkeleton,
};

/// Relative tolerance for weighted-graph comparisons, scaled by the largest
/// edge weight.
pub const EPS_W_REL: f64 = 1e-9;

/// Undirected weighted graph with a distinguished vertex subset (the
/// sites). Site `k` of every derived skeleton is vertex `sites[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    pub n_vertices: usize,
    pub sites: Vec<usize>,
    pub edges: Vec<(usize, usize, f64)>,
    /// Drawing positions only; never used metrically.
    pub coordinates: Option<Vec<Point2>>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl WeightedGraph {
    pub fn new(n_vertices: usize, sites: Vec<usize>, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        let mut g = WeightedGraph {
            n_vertices,
            sites,
            edges,
            coordinates: None,
            adjacency: Vec::new(),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn with_coordinates(mut self, coordinates: Vec<Point2>) -> Result<Self> {
        if coordinates.len() != self.n_vertices {
            return Err(Error::InvalidGraph(format!(
                "{} coordinates for {} vertices",
                coordinates.len(),
                self.n_vertices
            )));
        }
        self.coordinates = Some(coordinates);
        Ok(self)
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.n_vertices;
        if self.sites.is_empty() {
            return Err(Error::InvalidGraph("no sites".into()));
        }
        let mut seen = vec![false; n];
        for &s in &self.sites {
            if s >= n {
                return Err(Error::InvalidGraph(format!("site {s} is not a vertex")));
            }
            if std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidGraph(format!("site {s} listed twice")));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(a, b, w)) in self.edges.iter().enumerate() {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidGraph(format!("bad edge ({a}, {b})")));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) has weight {w}")));
            }
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        if let Some(c) = &self.coordinates {
            if c.len() != n {
                return Err(Error::InvalidGraph("coordinate count mismatch".into()));
            }
        }
        self.adjacency = adj;
        if n > 0 && !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n_vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.adjacency[v] {
                if !std::mem::replace(&mut seen[u], true) {
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn n_sites(&self) -> usize {
        self.sites.len()
    }

    pub fn max_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.2).fold(0.0, f64::max)
    }

    /// Absolute comparison tolerance `ε_w`.
    pub fn eps(&self) -> f64 {
        EPS_W_REL * self.max_weight().max(f64::MIN_POSITIVE)
    }
}

/// A vertex or a point on an edge at fraction `t` of its weight from the
/// edge's first endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphPoint {
    Vertex(usize),
    EdgePoint { edge: usize, t: f64 },
}

impl GraphPoint {
    /// Maps edge points at `t ∈ {0, 1}` to the endpoint vertex.
    pub fn normalized(self, g: &WeightedGraph) -> GraphPoint {
        match self {
            GraphPoint::EdgePoint { edge, t } if t <= 0.0 => GraphPoint::Vertex(g.edges[edge].0),
            GraphPoint::EdgePoint { edge, t } if t >= 1.0 => GraphPoint::Vertex(g.edges[edge].1),
            p => p,
        }
    }
}

/// Vertex-to-vertex shortest-path distances.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceIndex {
    n: usize,
    d: Vec<f64>,
}

impl DistanceIndex {
    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.d[u * self.n + v]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

fn dijkstra(g: &WeightedGraph, source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; g.n_vertices];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Reverse((OrdF64(0.0), source)));
    while let Some(Reverse((OrdF64(d), v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &(u, id) in g.neighbors(v) {
            let nd = d + g.edges[id].2;
            if nd < dist[u] {
                dist[u] = nd;
                heap.push(Reverse((OrdF64(nd), u)));
            }
        }
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct OrdF64(f64);

impl Eq for OrdF64 {}

impl PartialOrd for OrdF64 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdF64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// All-pairs shortest paths by Dijkstra from every vertex.
pub fn apsp(g: &WeightedGraph) -> Result<DistanceIndex> {
    let n = g.n_vertices;
    let rows: Vec<Vec<f64>> = (0..n).into_par_iter().map(|s| dijkstra(g, s)).collect();
    if rows.iter().flatten().any(|d| d.is_infinite()) {
        return Err(Error::DisconnectedGraph);
    }
    Ok(DistanceIndex {
        n,
        d: rows.into_iter().flatten().collect(),
    })
}

/// Shortest-path distance from a graph point to vertex `u`.
pub fn graphpoint_distance(g: &WeightedGraph, idx: &DistanceIndex, p: GraphPoint, u: usize) -> f64 {
    match p {
        GraphPoint::Vertex(v) => idx.get(v, u),
        GraphPoint::EdgePoint { edge, t } => {
            let (a, b, w) = g.edges[edge];
            (t * w + idx.get(a, u)).min((1.0 - t) * w + idx.get(b, u))
        }
    }
}

/// Shortest-path distance between two graph points.
pub fn point_distance(g: &WeightedGraph, idx: &DistanceIndex, p: GraphPoint, q: GraphPoint) -> f64 {
    match p {
        GraphPoint::Vertex(v) => graphpoint_distance(g, idx, q, v),
        GraphPoint::EdgePoint { edge, t } => {
            let (a, b, w) = g.edges[edge];
            let via = (t * w + graphpoint_distance(g, idx, q, a))
                .min((1.0 - t) * w + graphpoint_distance(g, idx, q, b));
            match q {
                GraphPoint::EdgePoint { edge: e2, t: s } if e2 == edge => via.min((t - s).abs() * w),
                _ => via,
            }
        }
    }
}
