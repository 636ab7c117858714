use std::fmt;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use hyperspec::enumeration::DEFAULT_GUARD;
use hyperspec::verify::{scope_note, sweep_theorems, TheoremSet};
use hyperspec::{
    alpha_spectral_radius, bfs_supertree, edge_release, enumerate_supertrees, h_supertree,
    hyperstar, move_edges, parse_hypergraph, t_supertree, to_json, to_plain, two_switch,
    verify_degree_sequence_extremal, verify_independence_extremal, verify_matching_extremal, Alpha,
    DegreeSequence, EdgeMove, EnumerationQuery, Error, ExtremalReport, FamilyParams, Filter,
    Hypergraph, SolverOptions, Supertree, SweepReport, Theorem, TwoSwitchSpec, VerifyOptions,
};

use crate::args::{
    Cli, Command, Construct, EnumerateArgs, GraphFormat, ReportFormat, RhoArgs, SolverArgs,
    Transform, Verify, VerifyCommon,
};

/// Bad command-line input that clap could not catch (exit 1).
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// A verification row came out non-unique (exit 4).
#[derive(Debug)]
pub struct Falsified {
    pub failures: usize,
    pub counterexamples: Option<PathBuf>,
}

impl fmt::Display for Falsified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} report row(s) are not unique", self.failures)?;
        if let Some(path) = &self.counterexamples {
            write!(f, "; see {}", path.display())?;
        }
        Ok(())
    }
}

impl std::error::Error for Falsified {}

pub fn run(cli: Cli) -> Result<()> {
    let out = cli.output.as_deref();
    match cli.command {
        Command::Rho(args) => rho(args, out),
        Command::Construct(c) => construct(c, out),
        Command::Transform(t) => transform(t, out),
        Command::Enumerate(args) => enumerate(args, out),
        Command::Verify(v) => verify(v, out),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `-` reads stdin, text starting with `{` or `[` is taken literally, and
/// anything else is a file path.
fn read_source(source: &str) -> Result<String> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else if source.trim_start().starts_with(['{', '[']) {
        Ok(source.to_string())
    } else {
        fs::read_to_string(source).map_err(|e| Usage(format!("cannot read {source}: {e}")).into())
    }
}

fn read_graph(source: &str) -> Result<Hypergraph> {
    Ok(parse_hypergraph(&read_source(source)?)?)
}

fn read_spec<T: serde::de::DeserializeOwned>(source: &str) -> Result<T> {
    serde_json::from_str(&read_source(source)?).map_err(|e| Error::Parse(e.to_string()).into())
}

fn render_graph(g: &Hypergraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => to_json(g) + "\n",
        GraphFormat::Plain => to_plain(g),
    }
}

fn solver_options(args: &SolverArgs) -> SolverOptions {
    SolverOptions {
        tolerance: args.tolerance,
        max_iterations: args.max_iterations,
        shift: args.shift,
    }
}

fn guard() -> Result<usize> {
    match std::env::var("HYPERSPEC_GUARD") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Usage(format!("HYPERSPEC_GUARD must be a vertex count, got {v:?}")).into()
        }),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn rho(args: RhoArgs, out: Option<&Path>) -> Result<()> {
    let g = read_graph(&args.input)?;
    let result = alpha_spectral_radius(&g, Alpha::new(args.alpha)?, &solver_options(&args.solver))?;
    emit(out, &(serde_json::to_string_pretty(&result)? + "\n"))?;
    result.require_converged()?;
    Ok(())
}

fn construct(c: Construct, out: Option<&Path>) -> Result<()> {
    let (t, format): (Supertree, GraphFormat) = match c {
        Construct::Star { m, k, format } => (hyperstar(m, k)?, format),
        Construct::T { m, k, beta, format } => (t_supertree(&FamilyParams::t(m, k, beta))?, format),
        Construct::H { m, k, mu, format } => (h_supertree(&FamilyParams::h(m, k, mu))?, format),
        Construct::Bfs { k, pi, format } => (bfs_supertree(&DegreeSequence::new(k, pi)?)?, format),
    };
    emit(out, &render_graph(&t, format))
}

fn transform(t: Transform, out: Option<&Path>) -> Result<()> {
    let (g, format) = match t {
        Transform::Move {
            input,
            spec,
            format,
        } => {
            let spec: EdgeMove = read_spec(&spec)?;
            (move_edges(&read_graph(&input)?, &spec)?, format)
        }
        Transform::Release {
            input,
            edge,
            at,
            format,
        } => {
            let tree = Supertree::new(read_graph(&input)?)?;
            (edge_release(&tree, edge, at)?.into_inner(), format)
        }
        Transform::Switch {
            input,
            spec,
            format,
        } => {
            let spec: TwoSwitchSpec = read_spec(&spec)?;
            (two_switch(&read_graph(&input)?, &spec)?, format)
        }
    };
    emit(out, &render_graph(&g, format))
}

fn parse_filter(text: &str) -> Result<Filter> {
    let bad = || {
        Usage(format!(
            "filter must be beta=B, mu=U or pi=d0,d1,..., got {text:?}"
        ))
    };
    let (key, value) = text.split_once('=').ok_or_else(bad)?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    Ok(match key.trim() {
        "beta" => Filter::Beta(num(value)?),
        "mu" => Filter::Mu(num(value)?),
        "pi" => Filter::DegreeSequence(value.split(',').map(num).collect::<Result<_, _>>()?),
        _ => return Err(bad().into()),
    })
}

fn enumerate(args: EnumerateArgs, out: Option<&Path>) -> Result<()> {
    let mut query = EnumerationQuery::new(args.m, args.k).with_guard(guard()?);
    if let Some(f) = &args.filter {
        query = query.with_filter(parse_filter(f)?);
    }
    if args.reverse_anchors {
        query = query.reversed();
    }
    let trees = enumerate_supertrees(&query)?;
    if args.count {
        emit(out, &format!("{}\n", trees.len()))
    } else {
        let graphs: Vec<&Hypergraph> = trees.iter().map(|t| t.host()).collect();
        emit(out, &(serde_json::to_string(&graphs)? + "\n"))
    }
}

fn verify_options(common: &VerifyCommon) -> Result<VerifyOptions> {
    Ok(VerifyOptions {
        solver: solver_options(&common.solver),
        margin: common.margin,
        guard: guard()?,
    })
}

fn collect(
    common: &VerifyCommon,
    scales: Vec<(usize, usize)>,
    mut one: impl FnMut(Alpha) -> hyperspec::Result<ExtremalReport>,
) -> Result<SweepReport> {
    let reports = common
        .alpha
        .iter()
        .map(|&a| one(Alpha::new(a)?))
        .collect::<hyperspec::Result<Vec<_>>>()?;
    Ok(SweepReport {
        alphas: common.alpha.clone(),
        all_unique: reports.iter().all(|r| r.unique),
        scope: scope_note(&common.alpha, &scales),
        scales,
        reports,
    })
}

fn verify(v: Verify, out: Option<&Path>) -> Result<()> {
    let (report, common) = match v {
        Verify::Independence { m, k, beta, common } => {
            let opts = verify_options(&common)?;
            let report = match beta {
                Some(b) => collect(&common, vec![(m, k)], |a| {
                    verify_independence_extremal(m, k, b, a, &opts)
                })?,
                None => sweep_theorems(
                    &common.alpha,
                    &[(m, k)],
                    TheoremSet::only(Theorem::Independence),
                    &opts,
                )?,
            };
            (report, common)
        }
        Verify::Matching { m, k, mu, common } => {
            let opts = verify_options(&common)?;
            let report = match mu {
                Some(u) => collect(&common, vec![(m, k)], |a| {
                    verify_matching_extremal(m, k, u, a, &opts)
                })?,
                None => sweep_theorems(
                    &common.alpha,
                    &[(m, k)],
                    TheoremSet::only(Theorem::Matching),
                    &opts,
                )?,
            };
            (report, common)
        }
        Verify::DegreeSequence { k, pi, m, common } => {
            let opts = verify_options(&common)?;
            let report = match (pi, m) {
                (Some(pi), _) => {
                    let pi = DegreeSequence::new(k, pi)?;
                    pi.require_supertree_feasible()?;
                    let scale = (pi.edge_count(), k);
                    collect(&common, vec![scale], |a| {
                        verify_degree_sequence_extremal(&pi, a, &opts)
                    })?
                }
                (None, Some(m)) => sweep_theorems(
                    &common.alpha,
                    &[(m, k)],
                    TheoremSet::only(Theorem::DegreeSequence),
                    &opts,
                )?,
                (None, None) => return Err(Usage("give --pi or --m".into()).into()),
            };
            (report, common)
        }
        Verify::Sweep { scales, common } => {
            let opts = verify_options(&common)?;
            (
                sweep_theorems(&common.alpha, &scales, TheoremSet::ALL, &opts)?,
                common,
            )
        }
    };

    let counterexamples = match &common.out {
        Some(dir) => Some(write_report_dir(dir, &report)?),
        None => None,
    };
    let text = match common.format {
        ReportFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
        ReportFormat::Csv => csv_table(&report.reports)?,
    };
    emit(out, &text)?;
    if report.all_unique {
        Ok(())
    } else {
        Err(Falsified {
            failures: report.failures().count(),
            counterexamples,
        }
        .into())
    }
}

fn csv_table(reports: &[ExtremalReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(ExtremalReport::CSV_HEADER)?;
    for r in reports {
        w.write_record(r.csv_row())?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Writes the three report files and returns the counterexample path.
fn write_report_dir(dir: &Path, report: &SweepReport) -> Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    fs::write(
        dir.join("report.json"),
        serde_json::to_string_pretty(report)? + "\n",
    )?;
    fs::write(dir.join("report.csv"), csv_table(&report.reports)?)?;
    let failures: Vec<&ExtremalReport> = report.failures().collect();
    let path = dir.join("counterexamples.json");
    fs::write(&path, serde_json::to_string_pretty(&failures)? + "\n")?;
    Ok(path)
}
