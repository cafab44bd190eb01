//! Simple undirected graphs on at most 64 densely indexed vertices.
//!
//! Graphs are immutable once built. Adjacency is kept as one bitmask per
//! vertex, which keeps cover predicates down to a handful of word operations.

mod corpus;
mod family;
mod generators;
mod io;
mod vertex_set;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

pub use corpus::{all_graphs, connected_graphs};
pub use family::FamilySpec;
pub use generators::*;
pub use io::{parse_edge_list, to_edge_list};
pub use vertex_set::VertexSet;

pub type Vertex = usize;

/// Upper bound on vertex count imposed by the bitmask representation.
pub const MAX_VERTICES: usize = 64;

/// Serializes as `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair with `u < v`.
    edges: Vec<(Vertex, Vertex)>,
    #[serde(skip)]
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adjacency = vec![VertexSet::EMPTY; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adjacency[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adjacency[u].contains(v)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.span() <= self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: s.span() - 1,
                n: self.n,
            })
        }
    }

    /// The empty graph counts as disconnected; `K_1` is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adjacency[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen.len() == self.n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances. Fails on disconnected graphs.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        self.require_connected()?;
        Ok((0..self.n)
            .map(|s| {
                self.distances_from(s)
                    .into_iter()
                    .map(Option::unwrap)
                    .collect()
            })
            .collect())
    }

    /// Diameter of a connected graph, `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let m = self.distance_matrix().ok()?;
        Some(m.iter().flatten().copied().max().unwrap_or(0))
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::new(65, []),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::new(4, [(0, 1), (2, 1), (3, 0)]).unwrap();
        for u in 0..4 {
            for v in g.neighbors(u) {
                assert!(g.is_adjacent(v, u));
            }
        }
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn connectivity_and_diameter() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), None);
        assert!(matches!(g.distance_matrix(), Err(Error::Disconnected)));
        let k1 = Graph::new(1, []).unwrap();
        assert!(k1.is_connected());
        assert_eq!(k1.diameter(), Some(0));
        assert!(!Graph::new(0, []).unwrap().is_connected());
    }
}
