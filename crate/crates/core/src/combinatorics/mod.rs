//! Exact independence and matching numbers, degree sequences and
//! BFS-orderings of supertrees.
//!
//! Both solvers are depth-first branch and bound over 64-bit masks. They
//! branch on the lowest remaining candidate and try "include" first, so the
//! first optimum found is the lexicographically smallest one; later ties
//! never replace it.

mod bfs;

pub use bfs::{check_bfs_ordering, find_bfs_ordering, BfsLayout, BfsViolation};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Supertree};

pub const DEFAULT_MAX_VERTICES: usize = 40;
pub const DEFAULT_MAX_EDGES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub beta: usize,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingResult {
    pub mu: usize,
    pub witness: Vec<usize>,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

fn to_list(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

struct IndependentSets {
    conflict: Vec<u64>,
    edge_masks: Vec<u64>,
    incidence: Vec<Vec<usize>>,
    /// Each mask must meet the chosen set.
    required: Vec<u64>,
    best: u64,
    best_size: usize,
    found: bool,
}

impl IndependentSets {
    fn new(g: &Hypergraph, required: Vec<u64>) -> Self {
        let edge_masks: Vec<u64> = g
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        let conflict = (0..g.n())
            .map(|v| {
                g.incident_edges(v)
                    .iter()
                    .fold(0u64, |acc, &e| acc | edge_masks[e])
                    & !(1u64 << v)
            })
            .collect();
        IndependentSets {
            conflict,
            edge_masks,
            incidence: (0..g.n()).map(|v| g.incident_edges(v).to_vec()).collect(),
            required,
            best: 0,
            best_size: 0,
            found: false,
        }
    }

    /// Greedy cover of `candidates` by edges; an independent set takes at
    /// most one vertex from each.
    fn cover_bound(&self, mut candidates: u64) -> usize {
        let mut groups = 0;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            let widest = self.incidence[v]
                .iter()
                .map(|&e| self.edge_masks[e] & candidates)
                .max_by_key(|m| m.count_ones())
                .unwrap_or(1u64 << v);
            candidates &= !(widest | 1u64 << v);
            groups += 1;
        }
        groups
    }

    fn feasible(&self, chosen: u64, candidates: u64) -> bool {
        self.required
            .iter()
            .all(|&r| r & chosen != 0 || r & candidates != 0)
    }

    fn search(&mut self, chosen: u64, candidates: u64) {
        if !self.feasible(chosen, candidates) {
            return;
        }
        let size = chosen.count_ones() as usize;
        if candidates == 0 {
            if !self.found || size > self.best_size {
                self.best = chosen;
                self.best_size = size;
                self.found = true;
            }
            return;
        }
        if self.found && size + self.cover_bound(candidates) <= self.best_size {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        self.search(chosen | bit, candidates & !bit & !self.conflict[v]);
        self.search(chosen, candidates & !bit);
    }
}

fn check_vertex_cap(g: &Hypergraph, cap: usize) -> Result<()> {
    if g.n() > cap.min(64) {
        return Err(Error::InstanceTooLarge(format!(
            "{} vertices exceeds the limit of {}",
            g.n(),
            cap.min(64)
        )));
    }
    Ok(())
}

pub fn independence_number(g: &Hypergraph) -> Result<IndependenceResult> {
    independence_number_capped(g, DEFAULT_MAX_VERTICES)
}

/// Exact maximum independent set; the witness is the lexicographically
/// smallest optimum.
pub fn independence_number_capped(
    g: &Hypergraph,
    max_vertices: usize,
) -> Result<IndependenceResult> {
    check_vertex_cap(g, max_vertices)?;
    let mut solver = IndependentSets::new(g, Vec::new());
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    solver.search(0, all);
    Ok(IndependenceResult {
        beta: solver.best_size,
        witness: to_list(solver.best),
    })
}

/// A maximum-size independent set among those holding a degree-one vertex
/// of every pendent edge.
///
/// Such a set always exists (one pendent vertex per pendent edge is already
/// independent); whether it reaches the unconstrained optimum is what the
/// pendent-vertex lemma for supertrees asserts, and callers compare against
/// [`independence_number`] to check it.
pub fn pendant_friendly_mis(t: &Supertree) -> Result<IndependenceResult> {
    check_vertex_cap(t, DEFAULT_MAX_VERTICES)?;
    if t.m() == 0 {
        return Ok(IndependenceResult {
            beta: 1,
            witness: vec![0],
        });
    }
    let required = t
        .pendent_edges()
        .into_iter()
        .map(|e| {
            t.pendent_vertices_of(e)
                .into_iter()
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect();
    let mut solver = IndependentSets::new(t, required);
    solver.search(0, (1u64 << t.n()) - 1);
    debug_assert!(solver.found);
    Ok(IndependenceResult {
        beta: solver.best_size,
        witness: to_list(solver.best),
    })
}

struct Matchings {
    conflict: Vec<u64>,
    /// Edges through each vertex, as masks over edge indices.
    stars: Vec<u64>,
    edges: Vec<Vec<usize>>,
    best: u64,
    best_size: usize,
}

impl Matchings {
    /// Greedy cover of `candidates` by vertex stars; a matching uses at most
    /// one edge of each.
    fn star_bound(&self, mut candidates: u64) -> usize {
        let mut groups = 0;
        while candidates != 0 {
            let e = candidates.trailing_zeros() as usize;
            let widest = self.edges[e]
                .iter()
                .map(|&v| self.stars[v] & candidates)
                .max_by_key(|m| m.count_ones())
                .unwrap();
            candidates &= !widest;
            groups += 1;
        }
        groups
    }

    fn search(&mut self, chosen: u64, candidates: u64) {
        let size = chosen.count_ones() as usize;
        if size > self.best_size {
            self.best = chosen;
            self.best_size = size;
        }
        if candidates == 0 || size + self.star_bound(candidates) <= self.best_size {
            return;
        }
        let e = candidates.trailing_zeros() as usize;
        let bit = 1u64 << e;
        self.search(chosen | bit, candidates & !bit & !self.conflict[e]);
        self.search(chosen, candidates & !bit);
    }
}

pub fn matching_number(g: &Hypergraph) -> Result<MatchingResult> {
    matching_number_capped(g, DEFAULT_MAX_EDGES)
}

/// Exact maximum matching; the witness is the lexicographically smallest
/// optimal set of edge indices.
pub fn matching_number_capped(g: &Hypergraph, max_edges: usize) -> Result<MatchingResult> {
    if g.m() > max_edges.min(64) {
        return Err(Error::InstanceTooLarge(format!(
            "{} edges exceeds the limit of {}",
            g.m(),
            max_edges.min(64)
        )));
    }
    let stars: Vec<u64> = (0..g.n())
        .map(|v| {
            g.incident_edges(v)
                .iter()
                .fold(0u64, |acc, &e| acc | 1 << e)
        })
        .collect();
    let conflict = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| e.iter().fold(0u64, |acc, &v| acc | stars[v]) & !(1u64 << i))
        .collect();
    let mut solver = Matchings {
        conflict,
        stars,
        edges: g.edges().to_vec(),
        best: 0,
        best_size: 0,
    };
    let all = if g.m() == 64 {
        u64::MAX
    } else {
        (1u64 << g.m()) - 1
    };
    solver.search(0, all);
    Ok(MatchingResult {
        mu: solver.best_size,
        witness: to_list(solver.best),
    })
}

/// Non-increasing degree list of a k-uniform hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    k: usize,
    entries: Vec<usize>,
}

impl Serialize for DegreeSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl DegreeSequence {
    /// Sorts `entries` into non-increasing order and checks that they are
    /// positive and sum to a multiple of `k`.
    pub fn new(k: usize, mut entries: Vec<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadParams(format!("k must be at least 2, got {k}")));
        }
        if entries.is_empty() {
            return Err(Error::InfeasibleSequence("empty sequence".into()));
        }
        if entries.contains(&0) {
            return Err(Error::InfeasibleSequence("degrees must be positive".into()));
        }
        let total: usize = entries.iter().sum();
        if !total.is_multiple_of(k) {
            return Err(Error::InfeasibleSequence(format!(
                "degree sum {total} is not a multiple of k = {k}"
            )));
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { k, entries })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.entries.iter().sum::<usize>() / self.k
    }

    pub fn is_supertree_feasible(&self) -> bool {
        let m = self.edge_count();
        m >= 1 && self.len() == m * (self.k - 1) + 1
    }

    pub fn require_supertree_feasible(&self) -> Result<()> {
        if self.is_supertree_feasible() {
            Ok(())
        } else {
            Err(Error::InfeasibleSequence(format!(
                "{} vertices cannot carry {} edges of size {} in a supertree",
                self.len(),
                self.edge_count(),
                self.k
            )))
        }
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn degree_sequence(g: &Hypergraph) -> DegreeSequence {
    let mut entries = g.degrees();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    DegreeSequence { k: g.k(), entries }
}
