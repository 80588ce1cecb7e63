use rayon::prelude::*;

use super::{apsp, graphpoint_distance, weighted_beta_skeleton, GraphPoint, WeightedGraph};
use crate::error::Result;
use crate::metric::{Beta, Variant};
use crate::skeleton::{
    chain_from_layers, check_betas_in_unit_interval, complete_graph_mst, edge, ChainReport, Edge, Producer,
    Setting, SkeletonGraph,
};

/// MST of the complete graph on the sites weighted by shortest-path
/// distance; ties go to the lexicographically smaller site pair.
pub fn graph_mst(g: &WeightedGraph) -> Result<SkeletonGraph> {
    let idx = apsp(g)?;
    let tree = complete_graph_mst(g.n_sites(), |i, j| idx.get(g.sites[i], g.sites[j]));
    Ok(SkeletonGraph::new(
        g.n_sites(),
        tree,
        Beta::Finite(2.0),
        Setting::Graph,
        Variant::Open,
        Producer::SpanningTree,
    ))
}

/// Delaunay graph of the sites: a pair is an edge iff some graph point is
/// strictly closer to both than to every other site.
///
/// Along an edge the margin between the second and third nearest site is
/// piecewise linear with breakpoints among the crossings of the rising and
/// falling tent pieces, so testing those points (and the endpoints) is
/// exact.
pub fn graph_delaunay(g: &WeightedGraph) -> Result<SkeletonGraph> {
    let idx = apsp(g)?;
    let m = g.n_sites();
    let eps = g.eps();
    let edges: Vec<Edge> = (0..g.edges.len())
        .into_par_iter()
        .flat_map_iter(|id| {
            let (a, b, w) = g.edges[id];
            let mut ts = vec![0.0, 1.0];
            for &u in &g.sites {
                for &v in &g.sites {
                    let t = (w + idx.get(b, v) - idx.get(a, u)) / (2.0 * w);
                    if (0.0..=1.0).contains(&t) {
                        ts.push(t);
                    }
                }
            }
            let mut found = Vec::new();
            let mut dist: Vec<(f64, usize)> = Vec::with_capacity(m);
            for t in ts {
                let p = GraphPoint::EdgePoint { edge: id, t };
                dist.clear();
                dist.extend((0..m).map(|k| (graphpoint_distance(g, &idx, p, g.sites[k]), k)));
                dist.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
                if m >= 2 && (m == 2 || dist[2].0 - dist[1].0 > eps) {
                    found.push(edge(dist[0].1, dist[1].1));
                }
            }
            found
        })
        .collect();
    Ok(SkeletonGraph::new(
        m,
        edges,
        Beta::Finite(1.0),
        Setting::Graph,
        Variant::Closed,
        Producer::GraphDelaunay,
    ))
}

/// Validates `MST ⊆ RNG ⊆ G_{β_k} ⊆ … ⊆ G_{β_1} ⊆ GG ⊆ DG` on the sites for
/// ascending betas in `[1, 2]`. Each `G_β` uses [`Variant::default_for`].
pub fn weighted_chain_check(g: &WeightedGraph, betas: &[f64]) -> Result<ChainReport> {
    check_betas_in_unit_interval(betas)?;
    let layer = |b: f64, v: Variant| weighted_beta_skeleton(g, Beta::Finite(b), v).map(|s| s.graph);
    let mst = graph_mst(g)?;
    let rng = layer(2.0, Variant::Open)?;
    let gg = layer(1.0, Variant::Closed)?;
    let layers = betas
        .iter()
        .map(|&b| layer(b, Variant::default_for(Beta::Finite(b))).map(|s| (b, s)))
        .collect::<Result<Vec<_>>>()?;
    let dg = graph_delaunay(g)?;
    Ok(chain_from_layers(Some(&mst), &rng, &layers, &gg, Some(("DG", &dg))))
}

#[cfg(test)]
mod tests {
    use super::super::tests::triangle;
    use super::*;

    #[test]
    fn delaunay_examples() {
        let g = triangle();
        assert_eq!(graph_delaunay(&g).unwrap().edge_count(), 3);
        let two = WeightedGraph::new(3, vec![0, 2], vec![(0, 1, 1.0), (1, 2, 4.0)]).unwrap();
        assert!(graph_delaunay(&two).unwrap().contains(0, 1));
        let path = WeightedGraph::new(3, vec![0, 1, 2], vec![(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let dg = graph_delaunay(&path).unwrap();
        assert_eq!(dg.edges.iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn mst_examples() {
        let path = WeightedGraph::new(4, vec![0, 1, 2, 3], vec![(0, 1, 1.0), (1, 2, 2.0), (2, 3, 1.5)]).unwrap();
        let t = graph_mst(&path).unwrap();
        assert_eq!(t.edges.iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(graph_mst(&triangle()).unwrap().edge_count(), 2);
    }

    #[test]
    fn chain_examples() {
        assert!(weighted_chain_check(&triangle(), &[1.0, 1.5, 2.0]).unwrap().holds());
        let two = WeightedGraph::new(2, vec![0, 1], vec![(0, 1, 3.0)]).unwrap();
        assert!(weighted_chain_check(&two, &[1.0, 2.0]).unwrap().holds());
    }
}
