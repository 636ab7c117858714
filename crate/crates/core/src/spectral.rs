//! The operator `A_alpha = alpha * D + (1 - alpha) * A` of a uniform
//! hypergraph, applied without materializing the order-k tensor, and a
//! power iteration for its Perron pair.
//!
//! For a positive vector `x` the ratios `(A_alpha x)_v / x_v^(k-1)` enclose
//! the spectral radius from both sides (Collatz-Wielandt), so the solver
//! stops on the width of that bracket rather than on vector movement.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Products over more than this many incidences use compensated summation.
const COMPENSATION_THRESHOLD: usize = 10_000;

/// Weight of the degree tensor, restricted to `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(Error::AlphaOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Alpha::new(value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Bracket width at which the iteration stops.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Diagonal shift added during iteration. `None` picks 1 for `alpha = 0`
    /// and 0 otherwise.
    pub shift: Option<f64>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tolerance: 1e-10,
            max_iterations: 1_000_000,
            shift: None,
        }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::BadParams(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::BadParams("max_iterations must be at least 1".into()));
        }
        if let Some(s) = self.shift {
            if !(s >= 0.0 && s.is_finite()) {
                return Err(Error::BadParams(format!(
                    "shift must be non-negative, got {s}"
                )));
            }
        }
        Ok(())
    }

    pub fn shift_for(&self, alpha: Alpha) -> f64 {
        self.shift
            .unwrap_or(if alpha.value() == 0.0 { 1.0 } else { 0.0 })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerronResult {
    pub rho: f64,
    /// Collatz-Wielandt bounds `[lower, upper]` on the Perron root.
    pub bracket: [f64; 2],
    /// Positive eigenvector estimate with unit k-norm.
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl PerronResult {
    /// Turns a non-converged result into `MaxIterationsExceeded`.
    pub fn require_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::MaxIterationsExceeded {
                iterations: self.iterations,
                width: self.bracket[1] - self.bracket[0],
            })
        }
    }
}

fn check_vector(g: &Hypergraph, x: &[f64]) -> Result<()> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch {
            found: x.len(),
            expected: g.n(),
        });
    }
    match x.iter().position(|&v| !(v > 0.0 && v.is_finite())) {
        Some(index) => Err(Error::NonPositiveVector { index }),
        None => Ok(()),
    }
}

/// Neumaier-compensated accumulator.
#[derive(Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.carry += (self.sum - t) + value;
        } else {
            self.carry += (value - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(self) -> f64 {
        self.sum + self.carry
    }
}

/// Writes `(1 - alpha) * sum_{e contains v} x_{e \ v}` into `out`.
fn adjacency_part(g: &Hypergraph, x: &[f64], out: &mut [f64]) {
    let k = g.k();
    let mut prefix = vec![1.0; k + 1];
    let mut suffix = vec![1.0; k + 1];
    let compensate = g.m() * k > COMPENSATION_THRESHOLD;
    let mut acc = if compensate {
        vec![Compensated::default(); g.n()]
    } else {
        Vec::new()
    };
    out.iter_mut().for_each(|o| *o = 0.0);
    for e in g.edges() {
        for i in 0..k {
            prefix[i + 1] = prefix[i] * x[e[i]];
        }
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1] * x[e[i]];
        }
        for (i, &v) in e.iter().enumerate() {
            let others = prefix[i] * suffix[i + 1];
            if compensate {
                acc[v].add(others);
            } else {
                out[v] += others;
            }
        }
    }
    if compensate {
        for (o, a) in out.iter_mut().zip(acc) {
            *o = a.total();
        }
    }
}

fn apply_unchecked(g: &Hypergraph, alpha: Alpha, x: &[f64], out: &mut [f64]) {
    let a = alpha.value();
    let pow = (g.k() - 1) as i32;
    adjacency_part(g, x, out);
    for (v, o) in out.iter_mut().enumerate() {
        let d = g.incident_edges(v).len() as f64;
        *o = a * d * x[v].powi(pow) + (1.0 - a) * *o;
    }
}

/// Entry `v` is `alpha d(v) x_v^(k-1) + (1 - alpha) sum_{e contains v} prod_{u in e, u != v} x_u`.
pub fn apply_a_alpha(g: &Hypergraph, alpha: Alpha, x: &[f64]) -> Result<Vec<f64>> {
    check_vector(g, x)?;
    let mut out = vec![0.0; g.n()];
    apply_unchecked(g, alpha, x, &mut out);
    Ok(out)
}

/// `x^T (A_alpha x)` written edge by edge; requires a positive k-unit vector.
pub fn rayleigh(g: &Hypergraph, alpha: Alpha, x: &[f64]) -> Result<f64> {
    check_vector(g, x)?;
    let k = g.k();
    let norm: f64 = x.iter().map(|v| v.powi(k as i32)).sum();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitVector(norm));
    }
    let a = alpha.value();
    let mut total = Compensated::default();
    for e in g.edges() {
        let powers: f64 = e.iter().map(|&v| x[v].powi(k as i32)).sum();
        let product: f64 = e.iter().map(|&v| x[v]).product();
        total.add(a * powers + (1.0 - a) * k as f64 * product);
    }
    Ok(total.total())
}

/// `max_v |(A_alpha x)_v - rho x_v^(k-1)|`.
pub fn residual(g: &Hypergraph, alpha: Alpha, rho: f64, x: &[f64]) -> Result<f64> {
    check_vector(g, x)?;
    let mut y = vec![0.0; g.n()];
    apply_unchecked(g, alpha, x, &mut y);
    let pow = (g.k() - 1) as i32;
    Ok(y.iter()
        .zip(x)
        .map(|(yv, xv)| (yv - rho * xv.powi(pow)).abs())
        .fold(0.0, f64::max))
}

fn normalize(x: &mut [f64], k: usize) {
    let norm: f64 = x
        .iter()
        .map(|v| v.powi(k as i32))
        .sum::<f64>()
        .powf(1.0 / k as f64);
    x.iter_mut().for_each(|v| *v /= norm);
}

fn bracket(y: &[f64], x: &[f64], pow: i32) -> (f64, f64) {
    y.iter()
        .zip(x)
        .map(|(yv, xv)| yv / xv.powi(pow))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r), hi.max(r))
        })
}

/// Perron pair of `A_alpha(g)` by the shifted nonnegative-tensor power method.
///
/// Each step maps `x` to `(A_alpha x + shift x^[k-1])^[1/(k-1)]` and rescales
/// to unit k-norm. The reported `rho` is the midpoint of the final bracket.
/// When the iteration budget runs out the tightest bracket seen is returned
/// with `converged = false`.
pub fn alpha_spectral_radius(
    g: &Hypergraph,
    alpha: Alpha,
    opts: &SolverOptions,
) -> Result<PerronResult> {
    let uniform = vec![(g.n() as f64).powf(-1.0 / g.k() as f64); g.n()];
    alpha_spectral_radius_from(g, alpha, opts, &uniform)
}

/// As [`alpha_spectral_radius`], starting from the positive vector `start`
/// (rescaled to unit k-norm) instead of the uniform one.
pub fn alpha_spectral_radius_from(
    g: &Hypergraph,
    alpha: Alpha,
    opts: &SolverOptions,
    start: &[f64],
) -> Result<PerronResult> {
    opts.validate()?;
    check_vector(g, start)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    let k = g.k();
    if g.m() == 0 {
        return Ok(PerronResult {
            rho: 0.0,
            bracket: [0.0, 0.0],
            vector: vec![1.0],
            residual: 0.0,
            iterations: 0,
            converged: true,
        });
    }
    let pow = (k - 1) as i32;
    let root = 1.0 / (k - 1) as f64;
    let shift = opts.shift_for(alpha);

    let mut x = start.to_vec();
    normalize(&mut x, k);
    let mut y = vec![0.0; n];
    let mut best: Option<(f64, f64, Vec<f64>)> = None;
    let mut iterations = 0;
    loop {
        apply_unchecked(g, alpha, &x, &mut y);
        let (lo, hi) = bracket(&y, &x, pow);
        let width = hi - lo;
        if width <= opts.tolerance {
            let rho = 0.5 * (lo + hi);
            let residual = residual(g, alpha, rho, &x)?;
            return Ok(PerronResult {
                rho,
                bracket: [lo, hi],
                vector: x,
                residual,
                iterations,
                converged: true,
            });
        }
        if best.as_ref().is_none_or(|(l, h, _)| width < h - l) {
            best = Some((lo, hi, x.clone()));
        }
        if iterations == opts.max_iterations {
            break;
        }
        for (xv, yv) in x.iter_mut().zip(&y) {
            let next = yv + shift * xv.powi(pow);
            *xv = if pow == 1 { next } else { next.powf(root) };
        }
        normalize(&mut x, k);
        iterations += 1;
    }
    let (lo, hi, vector) = best.expect("at least one bracket is evaluated");
    let rho = 0.5 * (lo + hi);
    let residual = residual(g, alpha, rho, &vector)?;
    Ok(PerronResult {
        rho,
        bracket: [lo, hi],
        vector,
        residual,
        iterations,
        converged: false,
    })
}
