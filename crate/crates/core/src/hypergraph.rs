//! The k-uniform hypergraph model.
//!
//! Vertices are dense ids `0..n`. Edges are stored as strictly increasing
//! k-tuples and the edge list is kept in lexicographic order, so two
//! hypergraphs built from the same edge set compare equal regardless of the
//! order the edges were supplied in.

use std::collections::{HashMap, VecDeque};
use std::ops::Deref;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a normalized hypergraph, rejecting malformed input.
    ///
    /// Every vertex must lie in at least one edge unless the graph is the
    /// single-vertex graph with no edges.
    pub fn new(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadParams(format!("k must be at least 2, got {k}")));
        }
        if n == 0 {
            return Err(Error::BadParams(
                "a hypergraph needs at least one vertex".into(),
            ));
        }
        let mut edges = edges;
        for (i, edge) in edges.iter_mut().enumerate() {
            if edge.len() != k {
                return Err(Error::EdgeWrongSize {
                    edge: i,
                    found: edge.len(),
                    expected: k,
                });
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge {
                    edge: i,
                    vertex: w[0],
                });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }

        let mut incidence = vec![Vec::new(); n];
        for (i, edge) in edges.iter().enumerate() {
            for &v in edge {
                incidence[v].push(i);
            }
        }
        if n > 1 {
            if let Some(v) = incidence.iter().position(Vec::is_empty) {
                return Err(Error::IsolatedVertex(v));
            }
        }
        Ok(Hypergraph {
            k,
            n,
            edges,
            incidence,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&[usize]> {
        self.edges
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::EdgeOutOfRange(index))
    }

    /// Indices of the edges containing `v`, in increasing order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    /// Degrees indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, sorted_edge: &[usize]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(sorted_edge))
            .is_ok()
    }

    pub fn edge_contains(&self, index: usize, v: usize) -> bool {
        self.edges[index].binary_search(&v).is_ok()
    }

    /// Applies `perm` (old id -> new id) to every vertex.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                found: perm.len(),
                expected: self.n,
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        Hypergraph::new(self.k, self.n, edges)
    }

    fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &e in &self.incidence[u] {
                for &w in &self.edges[e] {
                    if dist[w].is_none() {
                        dist[w] = Some(du + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    /// Shortest path length (in edges) from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        Ok(self.bfs_distances(source))
    }

    /// Length of a shortest path between `u` and `v`, or `None` when they lie
    /// in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &e in &self.incidence[u] {
                    for &w in &self.edges[e] {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
            }
        }
        count
    }

    /// Edges whose vertices all have degree one except exactly one.
    ///
    /// The single-edge graph has no vertex of degree two or more; its lone
    /// edge is reported as pendent so that every supertree has one.
    pub fn pendent_edges(&self) -> Vec<usize> {
        if self.m() == 1 {
            return vec![0];
        }
        (0..self.m())
            .filter(|&i| {
                self.edges[i]
                    .iter()
                    .filter(|&&v| self.incidence[v].len() >= 2)
                    .count()
                    == 1
            })
            .collect()
    }

    /// Degree-one vertices of edge `index`.
    pub fn pendent_vertices_of(&self, index: usize) -> Vec<usize> {
        self.edges[index]
            .iter()
            .copied()
            .filter(|&v| self.incidence[v].len() == 1)
            .collect()
    }
}

/// A hypergraph verified to be connected and acyclic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Supertree {
    host: Hypergraph,
}

impl Supertree {
    /// Certifies `g` as a supertree.
    ///
    /// Connectivity together with `n = m(k-1) + 1` characterizes supertrees;
    /// the pairwise intersection bound is checked as well.
    pub fn new(g: Hypergraph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        if g.n() != g.m() * (g.k() - 1) + 1 {
            return Err(Error::HasCycle);
        }
        let mut shared: HashMap<usize, usize> = HashMap::new();
        for (i, e) in g.edges().iter().enumerate() {
            shared.clear();
            for &v in e {
                for &f in g.incident_edges(v) {
                    if f > i {
                        let c = shared.entry(f).or_insert(0);
                        *c += 1;
                        if *c > 1 {
                            return Err(Error::HasCycle);
                        }
                    }
                }
            }
        }
        Ok(Supertree { host: g })
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn into_inner(self) -> Hypergraph {
        self.host
    }
}

impl Deref for Supertree {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.host
    }
}

pub fn validate_supertree(g: &Hypergraph) -> Result<Supertree> {
    Supertree::new(g.clone())
}

#[derive(Serialize, Deserialize)]
struct Repr<E> {
    k: usize,
    n: usize,
    edges: E,
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            k: self.k,
            n: self.n,
            edges: &self.edges,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = Repr::<Vec<Vec<usize>>>::deserialize(deserializer)?;
        Hypergraph::new(repr.k, repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Supertree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.host.serialize(serializer)
    }
}
