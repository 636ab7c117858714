use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Supertree;

const MAX_SEARCH_VERTICES: usize = 64;

/// First condition an ordering breaks, reported on the offending pair of
/// vertices (or edge for contiguity).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum BfsViolation {
    Height { before: usize, after: usize },
    Degree { before: usize, after: usize },
    Parent { before: usize, after: usize },
    Contiguity { edge: usize, intruder: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BfsLayout {
    pub order: Vec<usize>,
    /// Distance from `order[0]`, indexed by vertex.
    pub heights: Vec<usize>,
    pub violation: Option<BfsViolation>,
}

impl BfsLayout {
    pub fn is_bfs(&self) -> bool {
        self.violation.is_none()
    }
}

/// Rooted structure of a supertree: each edge's vertex nearest the root is
/// its anchor, and every other vertex hangs off exactly one anchor.
struct Rooted {
    heights: Vec<usize>,
    anchors: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
}

impl Rooted {
    fn new(t: &Supertree, root: usize) -> Result<Self> {
        let heights: Vec<usize> = t
            .distances_from(root)?
            .into_iter()
            .map(|d| d.ok_or(Error::NotConnected))
            .collect::<Result<_>>()?;
        let anchors: Vec<usize> = t
            .edges()
            .iter()
            .map(|e| *e.iter().min_by_key(|&&v| heights[v]).unwrap())
            .collect();
        let mut parent_edge = vec![None; t.n()];
        for (i, e) in t.edges().iter().enumerate() {
            for &v in e.iter().filter(|&&v| v != anchors[i]) {
                parent_edge[v] = Some(i);
            }
        }
        Ok(Rooted {
            heights,
            anchors,
            parent_edge,
        })
    }

    fn parent(&self, v: usize) -> Option<usize> {
        self.parent_edge[v].map(|e| self.anchors[e])
    }
}

/// Checks whether `order` (a permutation of the vertices, root first) is a
/// BFS-ordering. Parents are compared non-strictly: siblings share a parent
/// and satisfy the parent condition.
pub fn check_bfs_ordering(t: &Supertree, order: &[usize]) -> Result<BfsLayout> {
    let n = t.n();
    let mut pos = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        pos[v] = i;
    }
    let rooted = Rooted::new(t, order[0])?;
    let h = &rooted.heights;
    let deg = t.degrees();

    let pairs = || order.windows(2).map(|w| (w[0], w[1]));
    let violation = pairs()
        .find(|&(a, b)| h[a] > h[b])
        .map(|(before, after)| BfsViolation::Height { before, after })
        .or_else(|| {
            pairs()
                .find(|&(a, b)| deg[a] < deg[b])
                .map(|(before, after)| BfsViolation::Degree { before, after })
        })
        .or_else(|| {
            order[1..]
                .windows(2)
                .find(|w| pos[rooted.parent(w[0]).unwrap()] > pos[rooted.parent(w[1]).unwrap()])
                .map(|w| BfsViolation::Parent {
                    before: w[0],
                    after: w[1],
                })
        })
        .or_else(|| {
            t.edges().iter().enumerate().find_map(|(i, e)| {
                let mut spots: Vec<usize> = e
                    .iter()
                    .filter(|&&v| v != rooted.anchors[i])
                    .map(|&v| pos[v])
                    .collect();
                spots.sort_unstable();
                let (lo, hi) = (spots[0], spots[spots.len() - 1]);
                (hi - lo + 1 != spots.len()).then(|| {
                    let intruder = (lo..=hi)
                        .map(|p| order[p])
                        .find(|v| !e.contains(v))
                        .unwrap();
                    BfsViolation::Contiguity { edge: i, intruder }
                })
            })
        });

    Ok(BfsLayout {
        order: order.to_vec(),
        heights: rooted.heights,
        violation,
    })
}

/// Searches for a BFS-ordering. Returns `None` when the supertree has none.
///
/// Every root of maximum degree is tried. Within a layer the child edges of
/// each parent, and the vertices of each edge, are ordered by backtracking
/// under the degree condition; alternatives whose rooted subtrees are
/// isomorphic are tried only once.
pub fn find_bfs_ordering(t: &Supertree) -> Result<Option<BfsLayout>> {
    if t.n() > MAX_SEARCH_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "{} vertices exceeds the limit of {}",
            t.n(),
            MAX_SEARCH_VERTICES
        )));
    }
    let deg = t.degrees();
    let top = deg.iter().copied().max().unwrap_or(0);
    for root in (0..t.n()).filter(|&v| deg[v] == top) {
        let mut search = Search::new(t, root)?;
        search.order.push(root);
        if search.layer(vec![root]) {
            let layout = check_bfs_ordering(t, &search.order)?;
            debug_assert!(layout.is_bfs(), "{:?}", layout.violation);
            return Ok(Some(layout));
        }
    }
    Ok(None)
}

struct Search<'a> {
    t: &'a Supertree,
    deg: Vec<usize>,
    anchors: Vec<usize>,
    child_edges: Vec<Vec<usize>>,
    vertex_code: Vec<u32>,
    edge_code: Vec<u32>,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(t: &'a Supertree, root: usize) -> Result<Self> {
        let rooted = Rooted::new(t, root)?;
        let mut child_edges = vec![Vec::new(); t.n()];
        for (i, &a) in rooted.anchors.iter().enumerate() {
            child_edges[a].push(i);
        }

        // Interned rooted-subtree codes, deepest vertices first.
        let mut by_depth: Vec<usize> = (0..t.n()).collect();
        by_depth.sort_by_key(|&v| std::cmp::Reverse(rooted.heights[v]));
        let mut table: HashMap<(bool, Vec<u32>), u32> = HashMap::new();
        let mut intern = |key: (bool, Vec<u32>)| {
            let next = table.len() as u32;
            *table.entry(key).or_insert(next)
        };
        let mut vertex_code = vec![0u32; t.n()];
        let mut edge_code = vec![0u32; t.m()];
        for &v in &by_depth {
            let mut kids: Vec<u32> = child_edges[v]
                .iter()
                .map(|&e| {
                    let mut members: Vec<u32> = t.edges()[e]
                        .iter()
                        .filter(|&&w| w != v)
                        .map(|&w| vertex_code[w])
                        .collect();
                    members.sort_unstable();
                    edge_code[e] = intern((true, members));
                    edge_code[e]
                })
                .collect();
            kids.sort_unstable();
            vertex_code[v] = intern((false, kids));
        }

        Ok(Search {
            t,
            deg: t.degrees(),
            anchors: rooted.anchors,
            child_edges,
            vertex_code,
            edge_code,
            order: Vec::new(),
        })
    }

    fn layer(&mut self, layer: Vec<usize>) -> bool {
        let mut next = Vec::new();
        self.parent(&layer, 0, &mut next)
    }

    fn parent(&mut self, layer: &[usize], i: usize, next: &mut Vec<usize>) -> bool {
        if i == layer.len() {
            return next.is_empty() || self.layer(next.clone());
        }
        let edges = self.child_edges[layer[i]].clone();
        self.edges(layer, i, edges, next)
    }

    fn edges(
        &mut self,
        layer: &[usize],
        i: usize,
        remaining: Vec<usize>,
        next: &mut Vec<usize>,
    ) -> bool {
        if remaining.is_empty() {
            return self.parent(layer, i + 1, next);
        }
        let mut tried = HashSet::new();
        for idx in 0..remaining.len() {
            let e = remaining[idx];
            if !tried.insert(self.edge_code[e]) {
                continue;
            }
            let mut rest = remaining.clone();
            rest.remove(idx);
            let members: Vec<usize> = self.t.edges()[e]
                .iter()
                .copied()
                .filter(|&w| w != self.anchors[e])
                .collect();
            for arrangement in self.arrangements(&members) {
                let last = *self.order.last().unwrap();
                if self.deg[arrangement[0]] > self.deg[last] {
                    continue;
                }
                let (olen, nlen) = (self.order.len(), next.len());
                self.order.extend_from_slice(&arrangement);
                next.extend_from_slice(&arrangement);
                if self.edges(layer, i, rest.clone(), next) {
                    return true;
                }
                self.order.truncate(olen);
                next.truncate(nlen);
            }
        }
        false
    }

    /// Degree-non-increasing orderings of `members`, one per distinct
    /// sequence of subtree codes.
    fn arrangements(&self, members: &[usize]) -> Vec<Vec<usize>> {
        fn extend(
            s: &Search,
            pool: &mut Vec<usize>,
            cur: &mut Vec<usize>,
            seen: &mut HashSet<Vec<u32>>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if pool.is_empty() {
                if seen.insert(cur.iter().map(|&v| s.vertex_code[v]).collect()) {
                    out.push(cur.clone());
                }
                return;
            }
            for j in 0..pool.len() {
                let v = pool[j];
                if cur.last().is_some_and(|&u| s.deg[u] < s.deg[v]) {
                    continue;
                }
                pool.remove(j);
                cur.push(v);
                extend(s, pool, cur, seen, out);
                cur.pop();
                pool.insert(j, v);
            }
        }
        let mut out = Vec::new();
        extend(
            self,
            &mut members.to_vec(),
            &mut Vec::new(),
            &mut HashSet::new(),
            &mut out,
        );
        out
    }
}
