//! Immutable simple undirected graphs on vertices `0..n`.
//!
//! Edits return new graphs and never renumber vertices, so role names handed
//! out by the family constructors stay valid across `add_edge`/`remove_edge`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degree sequence sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::EdgeExists(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    /// `G + uv`.
    pub fn add_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// `G - uv`. The result may be disconnected.
    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        let i = g.adj[u]
            .binary_search(&v)
            .map_err(|_| Error::EdgeAbsent(u.min(v), u.max(v)))?;
        g.adj[u].remove(i);
        let j = g.adj[v].binary_search(&u).expect("adjacency is symmetric");
        g.adj[v].remove(j);
        g.edge_count -= 1;
        Ok(g)
    }

    /// Appends `count` isolated vertices; existing labels are kept.
    pub(crate) fn with_new_vertices(&self, count: usize) -> Graph {
        let mut g = self.clone();
        g.adj.extend(std::iter::repeat_with(Vec::new).take(count));
        g
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n() && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.edge_count == self.n() && self.is_connected()
    }

    /// Vertices on the unique cycle of a unicyclic graph, found by peeling
    /// leaves. Empty for graphs without a cycle.
    pub fn cycle_vertices(&self) -> Vec<Vertex> {
        let mut deg = self.degrees();
        let mut removed = vec![false; self.n()];
        let mut stack: Vec<Vertex> = (0..self.n()).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        (0..self.n()).filter(|&v| !removed[v]).collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph {
            adj,
            edge_count: n * (n - 1) / 2 - self.edge_count,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: perm.len() });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadParams(format!("{perm:?} is not a permutation")));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (u, nbrs) in self.adj.iter().enumerate() {
            adj[perm[u]] = nbrs.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count: self.edge_count,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        path(n).add_edge(n - 1, 0).unwrap()
    }

    #[test]
    fn add_edge_completes_triangle() {
        let g = path(3).add_edge(0, 2).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn chord_in_c4() {
        let g = cycle(4).add_edge(0, 2).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degrees(), vec![3, 2, 3, 2]);
    }

    #[test]
    fn edit_errors() {
        assert_eq!(path(2).add_edge(0, 1), Err(Error::EdgeExists(0, 1)));
        assert_eq!(path(2).add_edge(1, 0), Err(Error::EdgeExists(0, 1)));
        assert_eq!(path(2).add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(
            path(2).add_edge(0, 2),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(path(3).remove_edge(0, 2), Err(Error::EdgeAbsent(0, 2)));
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn remove_edge_from_cycles() {
        assert_eq!(cycle(3).remove_edge(0, 1).unwrap().edges().count(), 2);
        let p = cycle(4).remove_edge(0, 1).unwrap();
        assert!(p.is_tree());
        assert_eq!(p.degree_sequence(), vec![2, 2, 1, 1]);
        let split = path(2).remove_edge(0, 1).unwrap();
        assert!(!split.is_connected());
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn unicyclic_predicate() {
        assert!(cycle(4).is_unicyclic());
        assert!(!path(4).is_unicyclic());
        let disjoint = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]);
        assert!(!disjoint.unwrap().is_unicyclic());
    }

    #[test]
    fn cycle_vertices_of_tadpole() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.cycle_vertices(), vec![0, 1, 2]);
        assert!(path(5).cycle_vertices().is_empty());
    }

    #[test]
    fn complement_of_p4_is_p4() {
        let c = path(4).complement();
        assert_eq!(c.edge_count(), 3);
        assert!(c.is_tree());
        assert_eq!(c.degree_sequence(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn relabel_rejects_non_permutation() {
        assert!(path(3).relabel(&[0, 0, 1]).is_err());
        assert!(path(3).relabel(&[0, 1]).is_err());
        let g = path(3).relabel(&[2, 0, 1]).unwrap();
        assert!(g.has_edge(2, 0) && g.has_edge(0, 1) && !g.has_edge(2, 1));
    }
}
