//! Builders for the hyperstar S_{m,k}, the families T_{m,k,β} and
//! H_{m,k,μ}, and the BFS-supertree G_π of a degree sequence.
//!
//! Vertex 0 is always the star center (or the root of G_π). Loaded edges are
//! the lowest-numbered edges of the core star.

use serde::{Deserialize, Serialize};

use crate::combinatorics::DegreeSequence;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Supertree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub m: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
}

impl FamilyParams {
    pub fn t(m: usize, k: usize, beta: usize) -> Self {
        FamilyParams {
            m,
            k,
            beta: Some(beta),
            mu: None,
        }
    }

    pub fn h(m: usize, k: usize, mu: usize) -> Self {
        FamilyParams {
            m,
            k,
            beta: None,
            mu: Some(mu),
        }
    }
}

fn check_mk(m: usize, k: usize) -> Result<()> {
    if m < 1 || k < 2 {
        return Err(Error::BadParams(format!(
            "need m >= 1 and k >= 2, got m = {m}, k = {k}"
        )));
    }
    Ok(())
}

/// Feasible independence numbers of supertrees with `m` edges of size `k`.
pub fn beta_range(m: usize, k: usize) -> (usize, usize) {
    ((m * (k - 1) + 1).div_ceil(k), m)
}

/// Feasible matching numbers of supertrees with `m` edges of size `k`.
pub fn mu_range(m: usize, k: usize) -> (usize, usize) {
    (1, (m * (k - 1) + 1) / k)
}

/// Edge list builder handing out fresh vertex labels in order.
struct Builder {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Builder {
    fn new(k: usize) -> Self {
        Builder {
            k,
            n: 1,
            edges: Vec::new(),
        }
    }

    /// Adds an edge of `anchor` and k−1 new vertices; returns the new ones.
    fn attach(&mut self, anchor: usize) -> Vec<usize> {
        let fresh: Vec<usize> = (self.n..self.n + self.k - 1).collect();
        self.n += self.k - 1;
        let mut edge = vec![anchor];
        edge.extend(&fresh);
        self.edges.push(edge);
        fresh
    }

    fn star(k: usize, m: usize) -> (Self, Vec<Vec<usize>>) {
        let mut b = Builder::new(k);
        let leaves = (0..m).map(|_| b.attach(0)).collect();
        (b, leaves)
    }

    fn finish(self) -> Result<Supertree> {
        Supertree::new(Hypergraph::new(self.k, self.n, self.edges)?)
    }
}

pub fn hyperstar(m: usize, k: usize) -> Result<Supertree> {
    check_mk(m, k)?;
    Builder::star(k, m).0.finish()
}

/// T_{m,k,β}: the star S_{(k−1)β−(k−2)m,k} with a pendent edge hung on
/// every pendent vertex of m−β of its edges.
pub fn t_supertree(params: &FamilyParams) -> Result<Supertree> {
    let FamilyParams { m, k, .. } = *params;
    check_mk(m, k)?;
    let beta = params
        .beta
        .ok_or_else(|| Error::BadParams("the T family needs beta".into()))?;
    let (lo, hi) = beta_range(m, k);
    if beta < lo || beta > hi {
        return Err(Error::BetaOutOfRange { beta, lo, hi });
    }
    let core = (k - 1) * beta - (k - 2) * m;
    let (mut b, leaves) = Builder::star(k, core);
    for edge_leaves in &leaves[..m - beta] {
        for &v in edge_leaves {
            b.attach(v);
        }
    }
    b.finish()
}

/// H_{m,k,μ}: the star S_{m−μ+1,k} with μ−1 pendent edges hung on distinct
/// pendent vertices, filling its edges one at a time.
pub fn h_supertree(params: &FamilyParams) -> Result<Supertree> {
    let FamilyParams { m, k, .. } = *params;
    check_mk(m, k)?;
    let mu = params
        .mu
        .ok_or_else(|| Error::BadParams("the H family needs mu".into()))?;
    let (lo, hi) = mu_range(m, k);
    if mu < lo || mu > hi {
        return Err(Error::MuOutOfRange { mu, lo, hi });
    }
    let (mut b, leaves) = Builder::star(k, m - mu + 1);
    for &v in leaves.iter().flatten().take(mu - 1) {
        b.attach(v);
    }
    b.finish()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub index: usize,
    /// Edges hanging into this layer from the one above.
    pub edges_in: usize,
    pub vertices: usize,
    pub degree_sum: usize,
}

/// Layered construction of G_π. `labels[v] = (a, i, j)` names vertex `v` as
/// the j-th vertex of the i-th edge entering layer a (all 1-based except a;
/// the root is (0, 1, 1)).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerPlan {
    pub k: usize,
    pub degrees: Vec<usize>,
    pub layers: Vec<Layer>,
    pub labels: Vec<(usize, usize, usize)>,
    pub edges: Vec<Vec<usize>>,
}

/// Lays out G_π breadth first: vertices are processed in creation order,
/// vertex p receives degree d_p, and hangs d_p − 1 new edges (d_0 for the
/// root) into the next layer.
pub fn layer_plan(pi: &DegreeSequence) -> Result<LayerPlan> {
    pi.require_supertree_feasible()?;
    let k = pi.k();
    let d = pi.entries();
    let n = d.len();
    let mut b = Builder::new(k);
    let mut labels = vec![(0, 1, 1)];
    let mut layers = vec![Layer {
        index: 0,
        edges_in: 0,
        vertices: 1,
        degree_sum: d[0],
    }];
    let mut layer_start = 0;
    while layer_start < b.n {
        let layer_end = b.n;
        let a = layers.len();
        let mut edges_in = 0;
        for p in layer_start..layer_end {
            let hang = if p == 0 { d[0] } else { d[p] - 1 };
            for _ in 0..hang {
                if b.n + k - 1 > n {
                    return Err(Error::InfeasibleSequence(format!(
                        "sequence {pi} runs out of vertices in layer {a}"
                    )));
                }
                edges_in += 1;
                for j in 1..k {
                    labels.push((a, edges_in, j));
                }
                b.attach(p);
            }
        }
        if edges_in > 0 {
            let vertices = (k - 1) * edges_in;
            layers.push(Layer {
                index: a,
                edges_in,
                vertices,
                degree_sum: d[layer_end..layer_end + vertices].iter().sum(),
            });
        }
        layer_start = layer_end;
    }
    if b.n != n {
        return Err(Error::InfeasibleSequence(format!(
            "sequence {pi} places only {} of {n} vertices",
            b.n
        )));
    }
    Ok(LayerPlan {
        k,
        degrees: d.to_vec(),
        layers,
        labels,
        edges: b.edges,
    })
}

/// G_π. Its vertex labels 0, 1, … follow the construction, which is a
/// BFS-ordering.
pub fn bfs_supertree(pi: &DegreeSequence) -> Result<Supertree> {
    let plan = layer_plan(pi)?;
    let t = Supertree::new(Hypergraph::new(plan.k, plan.degrees.len(), plan.edges)?)?;
    debug_assert_eq!(crate::combinatorics::degree_sequence(&t), *pi);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{
        check_bfs_ordering, degree_sequence, independence_number, matching_number,
    };

    #[test]
    fn stars() {
        assert_eq!(hyperstar(1, 3).unwrap().edges(), &[vec![0, 1, 2]]);
        let s = hyperstar(3, 3).unwrap();
        assert_eq!(degree_sequence(&s).entries(), &[3, 1, 1, 1, 1, 1, 1]);
        let k2 = hyperstar(4, 2).unwrap();
        assert_eq!(k2.n(), 5);
        assert_eq!(k2.degree(0).unwrap(), 4);
        assert!(matches!(hyperstar(0, 3), Err(Error::BadParams(_))));
        assert!(matches!(hyperstar(2, 1), Err(Error::BadParams(_))));
    }

    #[test]
    fn t_family_shapes() {
        // four-edge core star, two edges carrying two pendent edges each
        let t = t_supertree(&FamilyParams::t(8, 3, 6)).unwrap();
        assert_eq!(t.m(), 8);
        assert_eq!(t.degree(0).unwrap(), 4);
        assert_eq!(degree_sequence(&t).entries()[..5], [4, 2, 2, 2, 2]);
        assert_eq!(independence_number(&t).unwrap().beta, 6);

        let t = t_supertree(&FamilyParams::t(5, 4, 4)).unwrap();
        assert_eq!(t.m(), 5);
        assert_eq!(t.degree(0).unwrap(), 2);
        assert_eq!(independence_number(&t).unwrap().beta, 4);

        assert_eq!(
            t_supertree(&FamilyParams::t(3, 3, 1)),
            Err(Error::BetaOutOfRange {
                beta: 1,
                lo: 3,
                hi: 3
            })
        );
    }

    #[test]
    fn h_family_shapes() {
        let h = h_supertree(&FamilyParams::h(12, 3, 8)).unwrap();
        assert_eq!(h.m(), 12);
        assert_eq!(matching_number(&h).unwrap().mu, 8);
        let h = h_supertree(&FamilyParams::h(7, 4, 5)).unwrap();
        let mut expected = vec![3, 2, 2, 2, 2];
        expected.resize(22, 1);
        assert_eq!(degree_sequence(&h).entries(), &expected[..]);
        assert_eq!(matching_number(&h).unwrap().mu, 5);
        assert!(matches!(
            h_supertree(&FamilyParams::h(3, 3, 3)),
            Err(Error::MuOutOfRange {
                mu: 3,
                lo: 1,
                hi: 2
            })
        ));
    }

    #[test]
    fn layer_plan_of_two_twos() {
        let pi = DegreeSequence::new(3, vec![2, 2, 1, 1, 1, 1, 1]).unwrap();
        let plan = layer_plan(&pi).unwrap();
        let counts: Vec<(usize, usize, usize)> = plan
            .layers
            .iter()
            .map(|l| (l.edges_in, l.vertices, l.degree_sum))
            .collect();
        assert_eq!(counts, vec![(0, 1, 2), (2, 4, 5), (1, 2, 2)]);
        assert_eq!(plan.labels[5], (2, 1, 1));
        let g = bfs_supertree(&pi).unwrap();
        assert_eq!(degree_sequence(&g), pi);
        let order: Vec<usize> = (0..g.n()).collect();
        assert!(check_bfs_ordering(&g, &order).unwrap().is_bfs());
    }

    #[test]
    fn infeasible_sequences() {
        let pi = DegreeSequence::new(3, vec![1, 1, 1, 1, 1, 1]).unwrap();
        assert!(matches!(
            bfs_supertree(&pi),
            Err(Error::InfeasibleSequence(_))
        ));
    }
}
