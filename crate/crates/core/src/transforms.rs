//! Rewriting operations on uniform hypergraphs: edge moving, edge releasing
//! and 2-switching.
//!
//! Edges are addressed by their index in the input's sorted edge list. The
//! output is renormalized, so those indices do not carry over to it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Supertree};

/// Moves edge `e_i` off vertex `v_i` onto `target` for every relocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMove {
    pub target: usize,
    /// `(edge index, pivot vertex)` pairs.
    pub relocations: Vec<(usize, usize)>,
}

/// Exchanges `u_set` (inside edge `e`) with `v_set` (inside edge `f`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSwitchSpec {
    pub e: usize,
    pub f: usize,
    #[serde(rename = "U1")]
    pub u_set: Vec<usize>,
    #[serde(rename = "V1")]
    pub v_set: Vec<usize>,
}

fn rebuild(g: &Hypergraph, edges: Vec<Vec<usize>>) -> Result<Hypergraph> {
    Hypergraph::new(g.k(), g.n(), edges).map_err(|err| match err {
        Error::DuplicateEdge(_) => Error::ResultHasDuplicateEdge,
        other => other,
    })
}

/// Replaces each `e_i` by `(e_i \ {v_i}) + {target}`.
///
/// The result may be disconnected; a vertex left in no edge is reported as
/// `IsolatedVertex`.
pub fn move_edges(g: &Hypergraph, spec: &EdgeMove) -> Result<Hypergraph> {
    if spec.relocations.is_empty() {
        return Err(Error::BadParams(
            "an edge move needs at least one edge".into(),
        ));
    }
    if spec.target >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: spec.target,
            n: g.n(),
        });
    }
    let mut edges = g.edges().to_vec();
    let mut touched = vec![false; g.m()];
    for &(e, pivot) in &spec.relocations {
        if e >= g.m() {
            return Err(Error::EdgeOutOfRange(e));
        }
        if std::mem::replace(&mut touched[e], true) {
            return Err(Error::BadParams(format!("edge {e} is relocated twice")));
        }
        if g.edge_contains(e, spec.target) {
            return Err(Error::TargetInsideEdge {
                target: spec.target,
                edge: e,
            });
        }
        if !g.edge_contains(e, pivot) {
            return Err(Error::PivotNotInEdge { pivot, edge: e });
        }
        for v in edges[e].iter_mut() {
            if *v == pivot {
                *v = spec.target;
            }
        }
    }
    rebuild(g, edges)
}

/// The edge move performed by releasing edge `e` at `u`: every other edge
/// meeting `e` away from `u` is moved onto `u`.
pub fn release_move(t: &Supertree, e: usize, u: usize) -> Result<EdgeMove> {
    let edge = t.edge(e)?;
    if !edge.contains(&u) {
        return Err(Error::VertexNotInEdge { vertex: u, edge: e });
    }
    if t.pendent_edges().contains(&e) {
        return Err(Error::PendentEdge(e));
    }
    let relocations: Vec<(usize, usize)> = edge
        .iter()
        .filter(|&&w| w != u)
        .flat_map(|&w| {
            t.incident_edges(w)
                .iter()
                .filter(move |&&f| f != e)
                .map(move |&f| (f, w))
        })
        .collect();
    if relocations.is_empty() {
        return Err(Error::NoAdjacentEdges(e));
    }
    Ok(EdgeMove {
        target: u,
        relocations,
    })
}

pub fn edge_release(t: &Supertree, e: usize, u: usize) -> Result<Supertree> {
    let spec = release_move(t, e, u)?;
    Supertree::new(move_edges(t, &spec)?)
}

/// Replaces `e, f` by `(e \ U1) + V1` and `(f \ V1) + U1`. Degrees are unchanged.
pub fn two_switch(g: &Hypergraph, spec: &TwoSwitchSpec) -> Result<Hypergraph> {
    let e = g.edge(spec.e)?;
    let f = g.edge(spec.f)?;
    if spec.e == spec.f {
        return Err(Error::BadParams(
            "a 2-switch needs two distinct edges".into(),
        ));
    }
    let r = spec.u_set.len();
    if r != spec.v_set.len() || r == 0 || r >= g.k() {
        return Err(Error::BadParams(format!(
            "switched sets must share a size in 1..{}, got {} and {}",
            g.k(),
            r,
            spec.v_set.len()
        )));
    }
    for (set, edge, index) in [(&spec.u_set, e, spec.e), (&spec.v_set, f, spec.f)] {
        let mut sorted = set.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != set.len() {
            return Err(Error::BadParams("switched set repeats a vertex".into()));
        }
        if let Some(&vertex) = set.iter().find(|v| !edge.contains(v)) {
            return Err(Error::VertexNotInEdge {
                vertex,
                edge: index,
            });
        }
    }

    let swap = |from: &[usize], out: &[usize], into: &[usize]| -> Result<Vec<usize>> {
        let mut result: Vec<usize> = from
            .iter()
            .copied()
            .filter(|v| !out.contains(v))
            .chain(into.iter().copied())
            .collect();
        result.sort_unstable();
        result.dedup();
        if result.len() == g.k() {
            Ok(result)
        } else {
            Err(Error::OverlapViolation)
        }
    };
    let e_new = swap(e, &spec.u_set, &spec.v_set)?;
    let f_new = swap(f, &spec.v_set, &spec.u_set)?;
    for candidate in [&e_new, &f_new] {
        if g.has_edge(candidate) {
            return Err(Error::ResultEdgeExists(candidate.clone()));
        }
    }
    if e_new == f_new {
        return Err(Error::ResultEdgeExists(e_new));
    }

    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, edge)| {
            if i == spec.e {
                e_new.clone()
            } else if i == spec.f {
                f_new.clone()
            } else {
                edge.clone()
            }
        })
        .collect();
    rebuild(g, edges)
}
