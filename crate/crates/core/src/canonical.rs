//! Canonical labeling of uniform hypergraphs.
//!
//! Work happens on the bipartite incidence graph: one node per vertex, one
//! node per edge. When that graph is a forest (every component is a
//! supertree) the labeling comes from rooted tree codes at the component
//! centers, which is linear-ish and immune to the huge automorphism groups of
//! star-like supertrees. Otherwise an individualization-refinement search
//! explores every leaf of the search tree and keeps the smallest relabeled
//! edge list. The second route has no automorphism pruning and is meant for
//! small cyclic inputs.
//!
//! In both routes the canonical form is the byte encoding of the relabeled
//! hypergraph itself, so equal forms mean equal relabeled graphs and hence
//! isomorphic inputs.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn encode(k: usize, n: usize, edges: &[Vec<usize>]) -> Self {
        let mut bytes = Vec::with_capacity(4 * (3 + edges.len() * k));
        let mut push = |x: usize| bytes.extend_from_slice(&(x as u32).to_be_bytes());
        push(k);
        push(n);
        push(edges.len());
        for e in edges {
            for &v in e {
                push(v);
            }
        }
        CanonicalForm(bytes)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A permutation `old id -> new id` such that relabeling by it yields the
/// same hypergraph for every member of an isomorphism class.
pub fn canonical_labeling(g: &Hypergraph) -> Vec<usize> {
    let incidence = Incidence::new(g);
    if incidence.is_forest(g) {
        forest_labeling(g, &incidence)
    } else {
        search_labeling(g, &incidence)
    }
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Hypergraph) -> Hypergraph {
    g.relabel(&canonical_labeling(g))
        .expect("a permutation preserves validity")
}

pub fn canonical_form(g: &Hypergraph) -> CanonicalForm {
    let c = canonical_graph(g);
    CanonicalForm::encode(c.k(), c.n(), c.edges())
}

pub fn are_isomorphic(g: &Hypergraph, h: &Hypergraph) -> bool {
    if g.k() != h.k() || g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

/// Incidence graph adjacency. Nodes `0..n` are vertices, `n..n+m` edges.
struct Incidence {
    adj: Vec<Vec<usize>>,
    n: usize,
}

impl Incidence {
    fn new(g: &Hypergraph) -> Self {
        let n = g.n();
        let mut adj = vec![Vec::new(); n + g.m()];
        for (i, e) in g.edges().iter().enumerate() {
            for &v in e {
                adj[v].push(n + i);
                adj[n + i].push(v);
            }
        }
        Incidence { adj, n }
    }

    fn is_forest(&self, g: &Hypergraph) -> bool {
        g.m() * g.k() + g.component_count() == self.adj.len()
    }

    fn is_vertex(&self, node: usize) -> bool {
        node < self.n
    }
}

fn forest_labeling(g: &Hypergraph, inc: &Incidence) -> Vec<usize> {
    let total = inc.adj.len();
    let mut component = vec![usize::MAX; total];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for s in 0..total {
        if component[s] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut nodes = vec![s];
        component[s] = id;
        let mut i = 0;
        while i < nodes.len() {
            let u = nodes[i];
            i += 1;
            for &w in &inc.adj[u] {
                if component[w] == usize::MAX {
                    component[w] = id;
                    nodes.push(w);
                }
            }
        }
        members.push(nodes);
    }

    // (code, root) per component, rooted at the center with the smaller code.
    let mut rooted: Vec<(Vec<u8>, usize)> = members
        .iter()
        .map(|nodes| {
            centers(inc, nodes)
                .into_iter()
                .map(|c| (rooted_code(inc, c), c))
                .min()
                .expect("every component has a center")
        })
        .collect();
    rooted.sort();

    let mut perm = vec![usize::MAX; g.n()];
    let mut next = 0;
    for (_, root) in &rooted {
        let order = sorted_bfs(inc, *root);
        for node in order {
            if inc.is_vertex(node) {
                perm[node] = next;
                next += 1;
            }
        }
    }
    perm
}

/// One or two centers of the tree spanned by `nodes`, found by peeling leaves.
fn centers(inc: &Incidence, nodes: &[usize]) -> Vec<usize> {
    if nodes.len() <= 2 {
        return nodes.to_vec();
    }
    let mut degree: Vec<usize> = vec![0; inc.adj.len()];
    for &u in nodes {
        degree[u] = inc.adj[u].len();
    }
    let mut layer: Vec<usize> = nodes.iter().copied().filter(|&u| degree[u] <= 1).collect();
    let mut remaining = nodes.len();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in &inc.adj[leaf] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn parents_and_order(inc: &Incidence, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; inc.adj.len()];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in &inc.adj[u] {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    (parent, order)
}

fn subtree_codes(inc: &Incidence, root: usize) -> (Vec<usize>, Vec<usize>, Vec<Vec<u8>>) {
    let (parent, order) = parents_and_order(inc, root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); inc.adj.len()];
    for &u in order.iter().rev() {
        let mut children: Vec<&Vec<u8>> = inc.adj[u]
            .iter()
            .filter(|&&w| parent[w] == u && w != root)
            .map(|&w| &codes[w])
            .collect();
        children.sort();
        let (open, close) = if inc.is_vertex(u) {
            (b'(', b')')
        } else {
            (b'[', b']')
        };
        let mut code = vec![open];
        for c in children {
            code.extend_from_slice(c);
        }
        code.push(close);
        codes[u] = code;
    }
    (parent, order, codes)
}

fn rooted_code(inc: &Incidence, root: usize) -> Vec<u8> {
    let (_, _, mut codes) = subtree_codes(inc, root);
    std::mem::take(&mut codes[root])
}

/// Breadth-first order from `root` with siblings visited in code order.
fn sorted_bfs(inc: &Incidence, root: usize) -> Vec<usize> {
    let (parent, _, codes) = subtree_codes(inc, root);
    let mut order = Vec::new();
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        let mut children: Vec<usize> = inc.adj[u]
            .iter()
            .copied()
            .filter(|&w| parent[w] == u && w != root)
            .collect();
        children.sort_by(|&a, &b| codes[a].cmp(&codes[b]));
        queue.extend(children);
    }
    order
}

/// Refines `colors` to the coarsest equitable partition finer than it.
/// Colors are renumbered by rank of their signature, so the result depends
/// only on the isomorphism type of the colored graph.
fn refine(inc: &Incidence, colors: &mut [usize]) {
    let mut classes = {
        let mut c = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..colors.len())
            .map(|u| {
                let mut around: Vec<usize> = inc.adj[u].iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[u], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        for (u, sig) in signatures.iter().enumerate() {
            colors[u] = distinct.binary_search(&sig).unwrap();
        }
        if distinct.len() == classes {
            return;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Hypergraph,
    inc: &'a Incidence,
    best: Option<(Vec<Vec<usize>>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, mut colors: Vec<usize>) {
        refine(self.inc, &mut colors);
        let n = self.inc.n;
        let mut count = vec![0usize; colors.len()];
        for &c in &colors[..n] {
            count[c] += 1;
        }
        let target = (0..n).map(|v| colors[v]).filter(|&c| count[c] >= 2).min();
        match target {
            None => self.leaf(&colors),
            Some(cell) => {
                for v in (0..n).filter(|&v| colors[v] == cell) {
                    let split: Vec<usize> = colors
                        .iter()
                        .enumerate()
                        .map(|(u, &c)| {
                            if c == cell && u != v {
                                2 * c + 1
                            } else {
                                2 * c
                            }
                        })
                        .collect();
                    self.run(split);
                }
            }
        }
    }

    fn leaf(&mut self, colors: &[usize]) {
        let n = self.inc.n;
        let mut by_color: Vec<usize> = (0..n).collect();
        by_color.sort_by_key(|&v| colors[v]);
        let mut perm = vec![0; n];
        for (new, &old) in by_color.iter().enumerate() {
            perm[old] = new;
        }
        let mut edges: Vec<Vec<usize>> = self
            .g
            .edges()
            .iter()
            .map(|e| {
                let mut r: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                r.sort_unstable();
                r
            })
            .collect();
        edges.sort_unstable();
        if self.best.as_ref().is_none_or(|(b, _)| edges < *b) {
            self.best = Some((edges, perm));
        }
    }
}

fn search_labeling(g: &Hypergraph, inc: &Incidence) -> Vec<usize> {
    let colors: Vec<usize> = (0..inc.adj.len())
        .map(|u| usize::from(!inc.is_vertex(u)))
        .collect();
    let mut search = Search { g, inc, best: None };
    search.run(colors);
    search.best.expect("search reaches at least one leaf").1
}
