//! All non-isomorphic k-uniform supertrees with m edges.
//!
//! Every supertree with m+1 edges arises from one with m edges by hanging a
//! new edge of k−1 fresh vertices on some vertex, so growing level by level
//! from a single edge and keeping one graph per canonical form is complete.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::combinatorics::{
    degree_sequence, independence_number_capped, matching_number_capped, DegreeSequence,
};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Supertree};

/// Largest vertex count enumerated unless the caller raises it.
pub const DEFAULT_GUARD: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    #[default]
    None,
    Beta(usize),
    Mu(usize),
    DegreeSequence(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationQuery {
    pub m: usize,
    pub k: usize,
    #[serde(default)]
    pub filter: Filter,
    /// Maximum vertex count m(k−1)+1.
    pub guard: usize,
    /// Try anchors from the highest vertex down when growing.
    #[serde(default)]
    pub reverse_anchors: bool,
}

impl EnumerationQuery {
    pub fn new(m: usize, k: usize) -> Self {
        EnumerationQuery {
            m,
            k,
            filter: Filter::None,
            guard: DEFAULT_GUARD,
            reverse_anchors: false,
        }
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn with_guard(mut self, guard: usize) -> Self {
        self.guard = guard;
        self
    }

    pub fn reversed(mut self) -> Self {
        self.reverse_anchors = true;
        self
    }

    pub fn check(&self) -> Result<()> {
        if self.m < 1 || self.k < 2 {
            return Err(Error::BadParams(format!(
                "need m >= 1 and k >= 2, got m = {}, k = {}",
                self.m, self.k
            )));
        }
        let n = self.m * (self.k - 1) + 1;
        if n > self.guard {
            return Err(Error::InstanceTooLarge(format!(
                "m = {}, k = {} gives {n} vertices, above the guard of {}",
                self.m, self.k, self.guard
            )));
        }
        Ok(())
    }
}

fn grow(g: &Hypergraph, reverse: bool) -> Vec<Hypergraph> {
    let (k, n) = (g.k(), g.n());
    let mut anchors: Vec<usize> = (0..n).collect();
    if reverse {
        anchors.reverse();
    }
    anchors
        .into_iter()
        .map(|v| {
            let mut edges = g.edges().to_vec();
            let mut edge = vec![v];
            edge.extend(n..n + k - 1);
            edges.push(edge);
            Hypergraph::new(k, n + k - 1, edges).expect("grown graph is well formed")
        })
        .collect()
}

/// Keeps the first graph seen for each form, sorted by form.
fn dedupe(mut graphs: Vec<(CanonicalForm, Hypergraph)>) -> Vec<(CanonicalForm, Hypergraph)> {
    graphs.sort_by(|a, b| a.0.cmp(&b.0));
    graphs.dedup_by(|later, earlier| later.0 == earlier.0);
    graphs
}

/// One `(form, representative)` per isomorphism class, sorted by form,
/// before any filter.
fn all_classes(query: &EnumerationQuery) -> Result<Vec<(CanonicalForm, Hypergraph)>> {
    query.check()?;
    let first: Vec<usize> = (0..query.k).collect();
    let single = Hypergraph::new(query.k, query.k, vec![first])?;
    let mut level = vec![(canonical_form(&single), single)];
    for _ in 1..query.m {
        let children: Vec<(CanonicalForm, Hypergraph)> = level
            .par_iter()
            .flat_map_iter(|(_, g)| grow(g, query.reverse_anchors))
            .map(|child| (canonical_form(&child), child))
            .collect();
        level = dedupe(children);
    }
    Ok(level)
}

fn keep(g: &Hypergraph, filter: &Filter) -> Result<bool> {
    Ok(match filter {
        Filter::None => true,
        Filter::Beta(b) => independence_number_capped(g, 64)?.beta == *b,
        Filter::Mu(u) => matching_number_capped(g, 64)?.mu == *u,
        Filter::DegreeSequence(pi) => degree_sequence(g).entries() == &pi[..],
    })
}

/// Like [`enumerate_supertrees`], paired with each graph's canonical form.
pub fn enumerate_classes(query: &EnumerationQuery) -> Result<Vec<(CanonicalForm, Supertree)>> {
    let filter = match &query.filter {
        Filter::DegreeSequence(pi) => {
            Filter::DegreeSequence(DegreeSequence::new(query.k, pi.clone())?.entries().to_vec())
        }
        other => other.clone(),
    };
    let classes = all_classes(query)?;
    let kept: Vec<Option<(CanonicalForm, Supertree)>> = classes
        .into_par_iter()
        .map(|(form, g)| {
            Ok(if keep(&g, &filter)? {
                Some((form, Supertree::new(g)?))
            } else {
                None
            })
        })
        .collect::<Result<_>>()?;
    Ok(kept.into_iter().flatten().collect())
}

/// One supertree per isomorphism class matching the query, sorted by
/// canonical form.
pub fn enumerate_supertrees(query: &EnumerationQuery) -> Result<Vec<Supertree>> {
    Ok(enumerate_classes(query)?
        .into_iter()
        .map(|(_, t)| t)
        .collect())
}

pub fn count_supertrees(m: usize, k: usize) -> Result<usize> {
    Ok(all_classes(&EnumerationQuery::new(m, k))?.len())
}
