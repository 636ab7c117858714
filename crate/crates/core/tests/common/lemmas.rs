//! Random instances satisfying the hypotheses of the edge-moving,
//! edge-releasing and 2-switch monotonicity lemmas.

use hyperspec::{
    alpha_spectral_radius, edge_release, move_edges, two_switch, Alpha, EdgeMove, Hypergraph,
    PerronResult, SolverOptions, Supertree, TwoSwitchSpec,
};
use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::random_supertree;

pub const ALPHAS: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

#[derive(Debug)]
pub struct Trial {
    pub before: Hypergraph,
    pub after: Hypergraph,
    pub alpha: f64,
    pub rho_before: f64,
    pub rho_after: f64,
    /// For a 2-switch: x_{U1} − x_{V1}.
    pub lead: f64,
    /// For a 2-switch: (1−α)k(x_{U1}−x_{V1})(x_{V2}−x_{U2}).
    pub predicted_gain: f64,
    /// For a 2-switch: Rayleigh quotient of the new graph at the old vector.
    pub rayleigh_after: f64,
}

impl Trial {
    pub fn gain(&self) -> f64 {
        self.rho_after - self.rho_before
    }
}

pub fn perron(g: &Hypergraph, alpha: f64) -> PerronResult {
    alpha_spectral_radius(g, Alpha::new(alpha).unwrap(), &SolverOptions::default())
        .unwrap()
        .require_converged()
        .unwrap()
}

fn base(rng: &mut ChaCha8Rng, min_m: usize) -> (Supertree, f64, PerronResult) {
    let k = rng.gen_range(3..=4);
    let m = rng.gen_range(min_m..=6);
    let t = random_supertree(m, k, rng);
    let alpha = *ALPHAS.choose(rng).unwrap();
    let x = perron(&t, alpha);
    (t, alpha, x)
}

fn finish(before: &Hypergraph, after: Hypergraph, alpha: f64, x: &PerronResult) -> Trial {
    let rho_after = perron(&after, alpha).rho;
    Trial {
        before: before.clone(),
        after,
        alpha,
        rho_before: x.rho,
        rho_after,
        lead: 0.0,
        predicted_gain: 0.0,
        rayleigh_after: f64::NAN,
    }
}

/// Moves r ≥ 1 edges onto a vertex u whose Perron entry is at least that
/// of every pivot; only connected results are returned.
pub fn edge_move_trial(rng: &mut ChaCha8Rng) -> Trial {
    loop {
        let (t, alpha, x) = base(rng, 2);
        let u = rng.gen_range(0..t.n());
        let xu = x.vector[u];
        let eligible: Vec<(usize, usize)> = (0..t.m())
            .filter(|&e| !t.edge_contains(e, u))
            .filter_map(|e| {
                t.edges()[e]
                    .iter()
                    .copied()
                    .filter(|&v| x.vector[v] <= xu)
                    .choose(rng)
                    .map(|v| (e, v))
            })
            .collect();
        if eligible.is_empty() {
            continue;
        }
        let r = rng.gen_range(1..=eligible.len().min(3));
        let relocations: Vec<(usize, usize)> = eligible.choose_multiple(rng, r).copied().collect();
        let spec = EdgeMove {
            target: u,
            relocations,
        };
        match move_edges(&t, &spec) {
            Ok(g) if g.is_connected() => return finish(&t, g, alpha, &x),
            _ => continue,
        }
    }
}

/// Releases a random non-pendent edge at a random vertex of it.
pub fn edge_release_trial(rng: &mut ChaCha8Rng) -> Trial {
    loop {
        let (t, alpha, x) = base(rng, 3);
        let pendent = t.pendent_edges();
        let Some(e) = (0..t.m()).filter(|e| !pendent.contains(e)).choose(rng) else {
            continue;
        };
        let u = *t.edges()[e].choose(rng).unwrap();
        let released = edge_release(&t, e, u).unwrap();
        return finish(&t, released.into_inner(), alpha, &x);
    }
}

/// A 2-switch with x_{U1} ≥ x_{V1} and x_{U2} ≤ x_{V2}; only connected
/// results are returned.
pub fn two_switch_trial(rng: &mut ChaCha8Rng) -> Trial {
    loop {
        let (t, alpha, x) = base(rng, 2);
        let k = t.k();
        let e = rng.gen_range(0..t.m());
        let f = rng.gen_range(0..t.m());
        if e == f {
            continue;
        }
        let r = rng.gen_range(1..k);
        let mut ev = t.edges()[e].clone();
        let mut fv = t.edges()[f].clone();
        ev.shuffle(rng);
        fv.shuffle(rng);
        let (u1, u2) = ev.split_at(r);
        let (v1, v2) = fv.split_at(r);
        let prod = |s: &[usize]| s.iter().map(|&v| x.vector[v]).product::<f64>();
        let (pu1, pu2, pv1, pv2) = (prod(u1), prod(u2), prod(v1), prod(v2));
        if pu1 < pv1 || pu2 > pv2 {
            continue;
        }
        let spec = TwoSwitchSpec {
            e,
            f,
            u_set: u1.to_vec(),
            v_set: v1.to_vec(),
        };
        let Ok(g) = two_switch(&t, &spec) else {
            continue;
        };
        if !g.is_connected() {
            continue;
        }
        let mut trial = finish(&t, g, alpha, &x);
        trial.lead = pu1 - pv1;
        trial.predicted_gain = (1.0 - alpha) * k as f64 * (pu1 - pv1) * (pv2 - pu2);
        trial.rayleigh_after =
            hyperspec::rayleigh(&trial.after, Alpha::new(alpha).unwrap(), &x.vector).unwrap();
        return trial;
    }
}
