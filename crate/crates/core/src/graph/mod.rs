//! Graph representation, text formats, generators and structural algorithms.

mod format;
pub mod generators;
mod structure;
mod vertex_set;

pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use structure::{
    blocks, induced_is_one_factor, induced_subgraph, is_bipartite, line_graph, Bipartition,
    BlockDecomposition, BlockKind, DegreeProfile, LineGraph,
};
pub use vertex_set::{Members, VertexSet, MAX_ORDER};

use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and each vertex also carries its neighborhood
/// as a bit mask, which is what the subset searches work on.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>,
    m: usize,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(Error::Unsupported(format!(
                "graphs are limited to {MAX_ORDER} vertices, got {n}"
            )));
        }
        let mut masks = vec![0u64; n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            if masks[u] >> v & 1 == 1 {
                return Err(Error::domain(format!("duplicate edge ({u},{v})")));
            }
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
            m += 1;
        }
        let adj = masks.iter().map(|&mk| VertexSet::from_bits(n, mk).to_vec()).collect();
        Ok(Graph { adj, masks, m, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.masks[v]
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.order(), self.masks[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.masks[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let min = self.min_degree();
        let max = self.max_degree();
        DegreeProfile { min, max, regular: (min == max).then_some(min) }
    }

    /// Common degree when every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        self.degree_profile().regular
    }

    pub fn is_cubic(&self) -> bool {
        self.order() > 0 && self.regular_degree() == Some(3)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.masks[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == vertex_set::full_mask(n)
    }

    /// Fails with [`Error::Disconnected`] unless the graph is connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}

// Labels are not part of the structure.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.masks == other.masks
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.order())
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_invariants() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(g.neighbors(2), &[0, 1, 3]);
        let degree_sum: usize = (0..4).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.size());
        for v in 0..4 {
            for &u in g.neighbors(v) {
                assert!(g.neighbors(u).contains(&v));
            }
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::Domain(_))));
        assert!(matches!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::Domain(_))));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::Domain(_))));
        assert!(matches!(Graph::from_edges(65, []), Err(Error::Unsupported(_))));
    }

    #[test]
    fn connectivity_and_degrees() {
        let k4 = generators::complete(4);
        assert!(k4.is_connected());
        assert_eq!(k4.degree_profile(), DegreeProfile { min: 3, max: 3, regular: Some(3) });

        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.require_connected(), Err(Error::Disconnected));

        let star = generators::complete_bipartite(1, 3);
        assert_eq!(star.degree_profile(), DegreeProfile { min: 1, max: 3, regular: None });
    }
}
