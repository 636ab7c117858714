//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

pub mod lemmas;

use hyperspec::{Hypergraph, Supertree};
use rand::seq::SliceRandom;
use rand::Rng;

/// ρ_α by a dense power method over all index tuples of the adjacency
/// tensor, with entries 1/(k−1)! on each permutation of an edge.
pub fn dense_rho(g: &Hypergraph, alpha: f64) -> f64 {
    let (n, k) = (g.n(), g.k());
    let mut tensor = vec![0.0f64; n.pow(k as u32)];
    let fact: f64 = (1..k).map(|i| i as f64).product();
    let index = |t: &[usize]| t.iter().fold(0, |acc, &v| acc * n + v);
    for e in g.edges() {
        for p in permutations(e) {
            tensor[index(&p)] = 1.0 / fact;
        }
    }
    let deg: Vec<f64> = (0..n).map(|v| g.degree(v).unwrap() as f64).collect();

    let apply = |x: &[f64]| -> Vec<f64> {
        let mut y = vec![0.0; n];
        let mut tuple = vec![0usize; k];
        for flat in 0..tensor.len() {
            let a = tensor[flat];
            if a == 0.0 {
                continue;
            }
            let mut rest = flat;
            for slot in (0..k).rev() {
                tuple[slot] = rest % n;
                rest /= n;
            }
            let prod: f64 = tuple[1..].iter().map(|&v| x[v]).product();
            y[tuple[0]] += a * prod;
        }
        for i in 0..n {
            y[i] = alpha * deg[i] * x[i].powi(k as i32 - 1) + (1.0 - alpha) * y[i];
        }
        y
    };

    // sum-normalized, always shifted by the identity tensor
    let mut x = vec![1.0 / n as f64; n];
    for _ in 0..200_000 {
        let y = apply(&x);
        let ratios: Vec<f64> = (0..n).map(|i| y[i] / x[i].powi(k as i32 - 1)).collect();
        let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if hi - lo < 1e-12 {
            return 0.5 * (lo + hi);
        }
        let mut next: Vec<f64> = (0..n)
            .map(|i| (y[i] + x[i].powi(k as i32 - 1)).powf(1.0 / (k - 1) as f64))
            .collect();
        let s: f64 = next.iter().sum();
        next.iter_mut().for_each(|v| *v /= s);
        x = next;
    }
    panic!("dense oracle did not converge");
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Isomorphism by trying every degree-preserving vertex bijection.
pub fn brute_isomorphic(g: &Hypergraph, h: &Hypergraph) -> bool {
    if g.k() != h.k() || g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; g.n()];
    extend_map(g, h, 0, &mut map, &mut used)
}

fn extend_map(
    g: &Hypergraph,
    h: &Hypergraph,
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == g.n() {
        return g.edges().iter().all(|e| {
            let mut image: Vec<usize> = e.iter().map(|&u| map[u]).collect();
            image.sort_unstable();
            h.has_edge(&image)
        });
    }
    let dv = g.degree(v).unwrap();
    for w in 0..h.n() {
        if used[w] || h.degree(w).unwrap() != dv {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_map(g, h, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

pub fn relabel_randomly<R: Rng>(g: &Hypergraph, rng: &mut R) -> Hypergraph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

/// A random supertree grown by hanging edges on uniformly chosen vertices,
/// then randomly relabeled.
pub fn random_supertree<R: Rng>(m: usize, k: usize, rng: &mut R) -> Supertree {
    let mut n = k;
    let mut edges = vec![(0..k).collect::<Vec<_>>()];
    for _ in 1..m {
        let anchor = rng.gen_range(0..n);
        let mut e = vec![anchor];
        e.extend(n..n + k - 1);
        n += k - 1;
        edges.push(e);
    }
    let g = Hypergraph::new(k, n, edges).unwrap();
    Supertree::new(relabel_randomly(&g, rng)).unwrap()
}

/// Unlabeled trees on 1..=max_n vertices from the rooted-tree recurrence
/// and Otter's dissimilarity formula.
pub fn unlabeled_tree_counts(max_n: usize) -> Vec<u64> {
    // r[n]: rooted trees with n vertices
    let mut r = vec![0u64; max_n + 1];
    if max_n >= 1 {
        r[1] = 1;
    }
    for n in 2..=max_n {
        let mut total = 0u64;
        for i in 1..n {
            let s: u64 = (1..=i)
                .filter(|d| i % d == 0)
                .map(|d| d as u64 * r[d])
                .sum();
            total += s * r[n - i];
        }
        r[n] = total / (n as u64 - 1);
    }
    (1..=max_n)
        .map(|n| {
            let pairs: u64 = (1..n).map(|i| r[i] * r[n - i]).sum();
            let half = if n % 2 == 0 { r[n / 2] } else { 0 };
            r[n] - (pairs - half) / 2
        })
        .collect()
}

/// All labeled trees on n vertices (as 2-uniform hypergraphs) by decoding
/// every Prüfer sequence.
pub fn labeled_trees(n: usize) -> Vec<Hypergraph> {
    if n == 1 {
        return vec![Hypergraph::new(2, 1, vec![]).unwrap()];
    }
    if n == 2 {
        return vec![Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            let mut degree = vec![1usize; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::new();
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push(vec![leaf.min(s), leaf.max(s)]);
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push(rest);
            Hypergraph::new(2, n, edges).unwrap()
        })
        .collect()
}

/// Representatives of the isomorphism classes of `graphs`, by brute force.
pub fn brute_classes(graphs: &[Hypergraph]) -> Vec<Hypergraph> {
    let mut reps: Vec<Hypergraph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| brute_isomorphic(r, g)) {
            reps.push(g.clone());
        }
    }
    reps
}

/// Maximum independent set size by checking every vertex subset.
pub fn naive_beta(g: &Hypergraph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| {
            g.edges()
                .iter()
                .all(|e| e.iter().filter(|&&v| s >> v & 1 == 1).count() <= 1)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Maximum matching size by checking every edge subset.
pub fn naive_mu(g: &Hypergraph) -> usize {
    let m = g.m();
    (0u32..1 << m)
        .filter(|&s| {
            let mut seen = vec![false; g.n()];
            (0..m).filter(|i| s >> i & 1 == 1).all(|i| {
                g.edges()[i]
                    .iter()
                    .all(|&v| !std::mem::replace(&mut seen[v], true))
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn star(m: usize, k: usize) -> Hypergraph {
    let edges = (0..m)
        .map(|i| {
            let mut e = vec![0];
            e.extend(1 + i * (k - 1)..1 + (i + 1) * (k - 1));
            e
        })
        .collect();
    Hypergraph::new(k, m * (k - 1) + 1, edges).unwrap()
}
