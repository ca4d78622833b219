//! Finite simple graphs over non-negative integer vertex labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller label first.
/// Loops are rejected at construction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(u32, u32);

impl Edge {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidArguments(format!("loop at vertex {a}")));
        }
        Ok(if a < b { Edge(a, b) } else { Edge(b, a) })
    }

    pub fn lo(&self) -> u32 {
        self.0
    }

    pub fn hi(&self) -> u32 {
        self.1
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.0, self.1)
    }

    pub fn touches(&self, v: u32) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// A finite simple graph: explicit vertex set plus a set of unordered pairs.
///
/// Invariants: no loops, no duplicate edges, and both endpoints of every
/// edge are members of the vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertices: BTreeSet<u32>,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Graph with the given vertices and no edges.
    pub fn empty<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        Graph {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        }
    }

    /// The complete graph K_n on labels `1..=n`.
    pub fn complete(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArguments(
                "complete graph needs n >= 1".into(),
            ));
        }
        let mut edges = BTreeSet::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                edges.insert(Edge(u, v));
            }
        }
        Ok(Graph {
            vertices: (1..=n).collect(),
            edges,
        })
    }

    /// Graph with an explicit vertex set; every edge endpoint must be listed.
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = u32>,
        E: IntoIterator<Item = (u32, u32)>,
    {
        let vertices: BTreeSet<u32> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let e = Edge::new(a, b)?;
            if !vertices.contains(&e.0) || !vertices.contains(&e.1) {
                return Err(Error::InvalidArguments(format!(
                    "edge ({a},{b}) has an endpoint outside the vertex set"
                )));
            }
            set.insert(e);
        }
        Ok(Graph {
            vertices,
            edges: set,
        })
    }

    /// Graph whose vertex set is inferred from the edge list.
    pub fn of_edges<E: IntoIterator<Item = (u32, u32)>>(edges: E) -> Result<Self> {
        let mut set = BTreeSet::new();
        let mut vertices = BTreeSet::new();
        for (a, b) in edges {
            let e = Edge::new(a, b)?;
            vertices.insert(e.0);
            vertices.insert(e.1);
            set.insert(e);
        }
        Ok(Graph {
            vertices,
            edges: set,
        })
    }

    /// Inserts an edge, adding endpoints to the vertex set as needed.
    pub fn insert_edge(&mut self, a: u32, b: u32) -> Result<()> {
        let e = Edge::new(a, b)?;
        self.vertices.insert(e.0);
        self.vertices.insert(e.1);
        self.edges.insert(e);
        Ok(())
    }

    pub fn vertex_set(&self) -> &BTreeSet<u32> {
        &self.vertices
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_no_edges(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// True when every pair of distinct vertices is an edge.
    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// Union over a common vertex universe.
    pub fn union(&self, other: &Graph) -> Graph {
        Graph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    pub fn is_edge_disjoint(&self, other: &Graph) -> bool {
        self.edges.intersection(&other.edges).next().is_none()
    }

    /// Subgraph induced by the kept vertices.
    pub fn induced(&self, keep: &BTreeSet<u32>) -> Graph {
        Graph {
            vertices: self.vertices.intersection(keep).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| keep.contains(&e.0) && keep.contains(&e.1))
                .copied()
                .collect(),
        }
    }

    /// Applies an injective relabeling. Every vertex must be mapped and no
    /// two vertices may collide.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Graph> {
        let mut vertices = BTreeSet::new();
        for v in &self.vertices {
            let w = *map.get(v).ok_or_else(|| {
                Error::InvalidArguments(format!("relabeling does not map vertex {v}"))
            })?;
            if !vertices.insert(w) {
                return Err(Error::InvalidArguments(format!(
                    "relabeling is not injective at image {w}"
                )));
            }
        }
        let mut edges = BTreeSet::new();
        for e in &self.edges {
            edges.insert(Edge::new(map[&e.0], map[&e.1])?);
        }
        Ok(Graph { vertices, edges })
    }

    pub fn sorted_edges(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_normalizes_and_rejects_loops() {
        let e = Edge::new(5, 2).unwrap();
        assert_eq!(e.endpoints(), (2, 5));
        assert!(Edge::new(3, 3).is_err());
    }

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::complete(6).unwrap().edge_count(), 15);
        assert!(Graph::complete(0).is_err());
    }

    #[test]
    fn from_edges_checks_vertex_membership() {
        assert!(Graph::from_edges(1..=3, [(1, 4)]).is_err());
        let g = Graph::from_edges(1..=3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.vertex_count(), 3);
    }

    #[test]
    fn induced_and_union() {
        let g = Graph::complete(4).unwrap();
        let keep: BTreeSet<u32> = [1, 2, 3].into_iter().collect();
        let h = g.induced(&keep);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.vertex_count(), 3);

        let a = Graph::of_edges([(1, 2)]).unwrap();
        let b = Graph::of_edges([(2, 3)]).unwrap();
        let u = a.union(&b);
        assert_eq!(u.edge_count(), 2);
        assert!(a.is_edge_disjoint(&b));
        assert!(!u.is_edge_disjoint(&a));
    }

    #[test]
    fn relabel_requires_injectivity() {
        let g = Graph::of_edges([(1, 2), (2, 3)]).unwrap();
        let map: BTreeMap<u32, u32> = [(1, 7), (2, 8), (3, 9)].into_iter().collect();
        let h = g.relabel(&map).unwrap();
        assert!(h.contains_edge(Edge::new(7, 8).unwrap()));
        let bad: BTreeMap<u32, u32> = [(1, 7), (2, 7), (3, 9)].into_iter().collect();
        assert!(g.relabel(&bad).is_err());
    }
}
