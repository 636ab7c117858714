//! Exhaustive checks that the T, G_π and H constructions are the unique
//! α-spectral maximizers within their classes at small sizes.
//!
//! A class is enumerated once per scale; ρ_α is solved once per class member
//! and α, then shared by every parameter value the member belongs to.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonical_form, CanonicalForm};
use crate::combinatorics::{
    degree_sequence, independence_number_capped, matching_number_capped, DegreeSequence,
};
use crate::constructions::{
    beta_range, bfs_supertree, h_supertree, mu_range, t_supertree, FamilyParams,
};
use crate::enumeration::{enumerate_classes, EnumerationQuery, DEFAULT_GUARD};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Supertree};
use crate::spectral::{alpha_spectral_radius, Alpha, SolverOptions};

pub const DEFAULT_MARGIN: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Independence,
    DegreeSequence,
    Matching,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub solver: SolverOptions,
    /// A champion must beat the runner-up by more than this to count as unique.
    pub margin: f64,
    pub guard: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            solver: SolverOptions::default(),
            margin: DEFAULT_MARGIN,
            guard: DEFAULT_GUARD,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportParams {
    pub m: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<DegreeSequence>,
    pub alpha: Alpha,
}

impl ReportParams {
    /// Short `name=value` label of the fixed parameter.
    pub fn label(&self) -> String {
        match (&self.beta, &self.mu, &self.pi) {
            (Some(b), _, _) => format!("beta={b}"),
            (_, Some(u), _) => format!("mu={u}"),
            (_, _, Some(pi)) => format!("pi={pi}"),
            _ => String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    pub form: CanonicalForm,
    pub rho: f64,
    pub graph: Hypergraph,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub theorem: Theorem,
    pub params: ReportParams,
    pub class_size: usize,
    pub champion: Candidate,
    pub predicted: Candidate,
    pub runner_up: Option<Candidate>,
    /// Champion ρ minus runner-up ρ; absent for a one-member class.
    pub gap: Option<f64>,
    pub matches_prediction: bool,
    /// The gap is positive but no larger than the margin.
    pub ambiguous: bool,
    pub unique: bool,
    pub margin: f64,
    pub tolerance: f64,
}

impl ExtremalReport {
    pub const CSV_HEADER: [&'static str; 8] = [
        "m",
        "k",
        "param",
        "alpha",
        "class_size",
        "champion_rho",
        "gap",
        "unique",
    ];

    pub fn csv_row(&self) -> [String; 8] {
        [
            self.params.m.to_string(),
            self.params.k.to_string(),
            self.params.label(),
            self.params.alpha.value().to_string(),
            self.class_size.to_string(),
            self.champion.rho.to_string(),
            self.gap.map(|g| g.to_string()).unwrap_or_default(),
            self.unique.to_string(),
        ]
    }
}

/// One isomorphism class with the invariants the theorems condition on.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub form: CanonicalForm,
    pub tree: Supertree,
    pub beta: usize,
    pub mu: usize,
    pub degrees: DegreeSequence,
}

/// Every supertree class at one (m, k).
#[derive(Debug, Clone)]
pub struct Catalog {
    pub m: usize,
    pub k: usize,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn build(m: usize, k: usize, guard: usize) -> Result<Self> {
        let classes = enumerate_classes(&EnumerationQuery::new(m, k).with_guard(guard))?;
        let entries = classes
            .into_par_iter()
            .map(|(form, tree)| {
                Ok(CatalogEntry {
                    beta: independence_number_capped(&tree, 64)?.beta,
                    mu: matching_number_capped(&tree, 64)?.mu,
                    degrees: degree_sequence(&tree),
                    form,
                    tree,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Catalog { m, k, entries })
    }

    /// Degree sequences realized at this scale, in sorted order.
    pub fn degree_sequences(&self) -> Vec<DegreeSequence> {
        let set: BTreeSet<&DegreeSequence> = self.entries.iter().map(|e| &e.degrees).collect();
        set.into_iter().cloned().collect()
    }

    /// ρ_α of every entry, in entry order.
    pub fn solve(&self, alpha: Alpha, opts: &SolverOptions) -> Result<Vec<f64>> {
        self.entries
            .par_iter()
            .map(|e| {
                Ok(alpha_spectral_radius(&e.tree, alpha, opts)?
                    .require_converged()?
                    .rho)
            })
            .collect()
    }
}

fn candidate(entry: &CatalogEntry, rho: f64) -> Candidate {
    Candidate {
        form: entry.form.clone(),
        rho,
        graph: entry.tree.host().clone(),
    }
}

/// Ranks `members` (catalog indices) by ρ and compares the best with `predicted`.
fn assess(
    theorem: Theorem,
    params: ReportParams,
    catalog: &Catalog,
    rhos: &[f64],
    members: &[usize],
    predicted: Supertree,
    opts: &VerifyOptions,
) -> Result<ExtremalReport> {
    if members.is_empty() {
        return Err(Error::EmptyClass);
    }
    // Ties keep the earlier (smaller) canonical form on top.
    let mut ranked = members.to_vec();
    ranked.sort_by(|&a, &b| rhos[b].total_cmp(&rhos[a]).then(a.cmp(&b)));
    let champion = candidate(&catalog.entries[ranked[0]], rhos[ranked[0]]);
    let runner_up = ranked
        .get(1)
        .map(|&i| candidate(&catalog.entries[i], rhos[i]));

    let predicted_form = canonical_form(&predicted);
    let predicted_rho = match members
        .iter()
        .find(|&&i| catalog.entries[i].form == predicted_form)
    {
        Some(&i) => rhos[i],
        None => {
            alpha_spectral_radius(&predicted, params.alpha, &opts.solver)?
                .require_converged()?
                .rho
        }
    };
    let predicted = Candidate {
        form: predicted_form,
        rho: predicted_rho,
        graph: predicted.into_inner(),
    };

    let gap = runner_up.as_ref().map(|r| champion.rho - r.rho);
    let matches_prediction = champion.form == predicted.form;
    let separated = gap.is_none_or(|g| g > opts.margin);
    Ok(ExtremalReport {
        theorem,
        params,
        class_size: members.len(),
        champion,
        predicted,
        runner_up,
        gap,
        matches_prediction,
        ambiguous: !separated,
        unique: matches_prediction && separated,
        margin: opts.margin,
        tolerance: opts.solver.tolerance,
    })
}

fn params(m: usize, k: usize, alpha: Alpha) -> ReportParams {
    ReportParams {
        m,
        k,
        beta: None,
        mu: None,
        pi: None,
        alpha,
    }
}

fn independence_report(
    catalog: &Catalog,
    rhos: &[f64],
    beta: usize,
    alpha: Alpha,
    opts: &VerifyOptions,
) -> Result<ExtremalReport> {
    let (m, k) = (catalog.m, catalog.k);
    let members: Vec<usize> = (0..catalog.entries.len())
        .filter(|&i| catalog.entries[i].beta == beta)
        .collect();
    if members.is_empty() {
        return Err(Error::EmptyClass);
    }
    let predicted = t_supertree(&FamilyParams::t(m, k, beta))?;
    let p = ReportParams {
        beta: Some(beta),
        ..params(m, k, alpha)
    };
    assess(
        Theorem::Independence,
        p,
        catalog,
        rhos,
        &members,
        predicted,
        opts,
    )
}

fn matching_report(
    catalog: &Catalog,
    rhos: &[f64],
    mu: usize,
    alpha: Alpha,
    opts: &VerifyOptions,
) -> Result<ExtremalReport> {
    let (m, k) = (catalog.m, catalog.k);
    let members: Vec<usize> = (0..catalog.entries.len())
        .filter(|&i| catalog.entries[i].mu == mu)
        .collect();
    if members.is_empty() {
        return Err(Error::EmptyClass);
    }
    let predicted = h_supertree(&FamilyParams::h(m, k, mu))?;
    let p = ReportParams {
        mu: Some(mu),
        ..params(m, k, alpha)
    };
    assess(
        Theorem::Matching,
        p,
        catalog,
        rhos,
        &members,
        predicted,
        opts,
    )
}

fn degree_report(
    catalog: &Catalog,
    rhos: &[f64],
    pi: &DegreeSequence,
    alpha: Alpha,
    opts: &VerifyOptions,
) -> Result<ExtremalReport> {
    let members: Vec<usize> = (0..catalog.entries.len())
        .filter(|&i| catalog.entries[i].degrees == *pi)
        .collect();
    if members.is_empty() {
        return Err(Error::EmptyClass);
    }
    let predicted = bfs_supertree(pi)?;
    let p = ReportParams {
        pi: Some(pi.clone()),
        ..params(catalog.m, catalog.k, alpha)
    };
    assess(
        Theorem::DegreeSequence,
        p,
        catalog,
        rhos,
        &members,
        predicted,
        opts,
    )
}

/// Solves only the members of one class rather than the whole catalog.
fn class_rhos(
    catalog: &Catalog,
    keep: impl Fn(&CatalogEntry) -> bool + Sync,
    alpha: Alpha,
    opts: &SolverOptions,
) -> Result<Vec<f64>> {
    catalog
        .entries
        .par_iter()
        .map(|e| {
            if keep(e) {
                Ok(alpha_spectral_radius(&e.tree, alpha, opts)?
                    .require_converged()?
                    .rho)
            } else {
                Ok(f64::NAN)
            }
        })
        .collect()
}

pub fn verify_independence_extremal(
    m: usize,
    k: usize,
    beta: usize,
    alpha: Alpha,
    opts: &VerifyOptions,
) -> Result<ExtremalReport> {
    let catalog = Catalog::build(m, k, opts.guard)?;
    let rhos = class_rhos(&catalog, |e| e.beta == beta, alpha, &opts.solver)?;
    independence_report(&catalog, &rhos, beta, alpha, opts)
}

pub fn verify_matching_extremal(
    m: usize,
    k: usize,
    mu: usize,
    alpha: Alpha,
    opts: &VerifyOptions,
) -> Result<ExtremalReport> {
    let catalog = Catalog::build(m, k, opts.guard)?;
    let rhos = class_rhos(&catalog, |e| e.mu == mu, alpha, &opts.solver)?;
    matching_report(&catalog, &rhos, mu, alpha, opts)
}

pub fn verify_degree_sequence_extremal(
    pi: &DegreeSequence,
    alpha: Alpha,
    opts: &VerifyOptions,
) -> Result<ExtremalReport> {
    pi.require_supertree_feasible()?;
    let catalog = Catalog::build(pi.edge_count(), pi.k(), opts.guard)?;
    let rhos = class_rhos(&catalog, |e| e.degrees == *pi, alpha, &opts.solver)?;
    degree_report(&catalog, &rhos, pi, alpha, opts)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub alphas: Vec<f64>,
    pub scales: Vec<(usize, usize)>,
    pub reports: Vec<ExtremalReport>,
    pub all_unique: bool,
    /// What the sweep does and does not establish.
    pub scope: String,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &ExtremalReport> {
        self.reports.iter().filter(|r| !r.unique)
    }
}

pub fn scope_note(alphas: &[f64], scales: &[(usize, usize)]) -> String {
    let a: Vec<String> = alphas.iter().map(f64::to_string).collect();
    let s: Vec<String> = scales
        .iter()
        .map(|(m, k)| format!("(m={m},k={k})"))
        .collect();
    format!(
        "Checked only at alpha in {{{}}} and scales {{{}}}. The extremal statements cover every \
         alpha in [0,1) and every m; other values are not certified by this run.",
        a.join(", "),
        s.join(", ")
    )
}

/// Which theorems a sweep runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremSet {
    pub independence: bool,
    pub degree_sequence: bool,
    pub matching: bool,
}

impl TheoremSet {
    pub const ALL: TheoremSet = TheoremSet {
        independence: true,
        degree_sequence: true,
        matching: true,
    };

    pub fn only(theorem: Theorem) -> Self {
        TheoremSet {
            independence: theorem == Theorem::Independence,
            degree_sequence: theorem == Theorem::DegreeSequence,
            matching: theorem == Theorem::Matching,
        }
    }
}

/// Every feasible β, π and μ at each scale, for each α.
pub fn sweep(
    alphas: &[f64],
    scales: &[(usize, usize)],
    opts: &VerifyOptions,
) -> Result<SweepReport> {
    sweep_theorems(alphas, scales, TheoremSet::ALL, opts)
}

pub fn sweep_theorems(
    alphas: &[f64],
    scales: &[(usize, usize)],
    which: TheoremSet,
    opts: &VerifyOptions,
) -> Result<SweepReport> {
    let grid: Vec<Alpha> = alphas
        .iter()
        .map(|&a| Alpha::new(a))
        .collect::<Result<_>>()?;
    for &(m, k) in scales {
        EnumerationQuery::new(m, k).with_guard(opts.guard).check()?;
    }
    let mut reports = Vec::new();
    if !grid.is_empty() {
        for &(m, k) in scales {
            let catalog = Catalog::build(m, k, opts.guard)?;
            let sequences = catalog.degree_sequences();
            for &alpha in &grid {
                let rhos = catalog.solve(alpha, &opts.solver)?;
                if which.independence {
                    let (lo, hi) = beta_range(m, k);
                    for beta in lo..=hi {
                        reports.push(independence_report(&catalog, &rhos, beta, alpha, opts)?);
                    }
                }
                if which.degree_sequence {
                    for pi in &sequences {
                        reports.push(degree_report(&catalog, &rhos, pi, alpha, opts)?);
                    }
                }
                if which.matching {
                    let (lo, hi) = mu_range(m, k);
                    for mu in lo..=hi {
                        reports.push(matching_report(&catalog, &rhos, mu, alpha, opts)?);
                    }
                }
            }
        }
    }
    Ok(SweepReport {
        alphas: alphas.to_vec(),
        scales: scales.to_vec(),
        all_unique: reports.iter().all(|r| r.unique),
        reports,
        scope: scope_note(alphas, scales),
    })
}
