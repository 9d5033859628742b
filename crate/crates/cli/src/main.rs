//! `srg`: exact-arithmetic toolkit for strongly regular graphs.
//!
//! Exit codes: 0 on success, 1 on a check/verification failure (infeasible
//! parameters, certificate failure, counterexample, budget exhaustion), 2 on
//! usage or IO errors.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use srg_cli::report::{self as rpt};
use srg_core::certs::{self, PsdOutcome};
use srg_core::classify::{self, BatchOptions, ChiValue, TypeOutcome};
use srg_core::fixtures;
use srg_core::graphs::{encode_graph6, parse_graph6, Graph};
use srg_core::homs::{self, BetaCase, CoreStrategy, HomKind, HullStrategy, SearchMode, Strategy};
use srg_core::params::{self, SrgParams};
use srg_core::solvers;

#[derive(Parser)]
#[command(
    name = "srg",
    version,
    about = "Exact toolkit for strongly regular graphs"
)]
struct Cli {
    /// Node budget for backtracking searches (deterministic, not wall clock).
    #[arg(long, global = true, default_value_t = 1u64 << 28)]
    budget: u64,
    /// Worker threads for parallel phases.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, multiplicities, complement, cosines, and bounds of (n,k,lambda,mu).
    Params {
        n: u32,
        k: u32,
        lambda: u32,
        mu: u32,
    },
    /// Verify strong regularity of a graph6 file combinatorially.
    Verify { file: PathBuf },
    /// Exact spectral certificates: projector identities, PSD, theta pair.
    Cert { file: PathBuf },
    /// Theta primal/dual witness pair and value.
    Theta { file: PathBuf },
    /// Exact clique / coclique / chromatic number.
    Solve {
        file: PathBuf,
        #[arg(long)]
        clique: bool,
        #[arg(long)]
        coclique: bool,
        #[arg(long)]
        chromatic: bool,
    },
    /// Homomorphism search between two graphs.
    Hom {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, conflicts_with_all = ["enumerate", "count"])]
        first: bool,
        #[arg(long, conflicts_with = "count")]
        enumerate: bool,
        #[arg(long)]
        count: bool,
        /// Search without structural assumptions (oracle mode).
        #[arg(long)]
        oracle: bool,
    },
    /// Core test: spectral fast path and/or exhaustive endomorphism search.
    Core {
        file: PathBuf,
        #[arg(long, conflicts_with = "both")]
        exhaustive: bool,
        /// Run both paths and require agreement.
        #[arg(long)]
        both: bool,
    },
    /// Hull of a graph: vertices adjacent iff no endomorphism identifies them.
    Hull {
        file: PathBuf,
        #[arg(long)]
        bruteforce: bool,
    },
    /// Oracle-mode verification that all homomorphisms classify as
    /// isomorphisms or colorings.
    Theorem { source: PathBuf, target: PathBuf },
    /// Classify every graph of a graph6 catalog by type A/B/C/X.
    Classify {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "OUT")]
        json_out: Option<PathBuf>,
        /// Also run the exhaustive pseudocore verification per entry.
        #[arg(long)]
        verify_pseudocore: bool,
    },
    /// Hasse diagram of the homomorphism order of a catalog (DOT format).
    Hasse {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a named fixture as graph6.
    Fixture {
        /// petersen | rook4 | shrikhande | clebsch | c5 | paley(q)
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Exit 1: a check failed. Exit 2: usage or IO.
enum CliError {
    Check(String),
    Usage(String),
}

impl CliError {
    fn check(e: impl Display) -> CliError {
        CliError::Check(e.to_string())
    }

    fn usage(e: impl Display) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // Ignore the error when a pool already exists (repeated dispatch in
    // tests).
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Check(msg)) => {
            eprintln!("srg: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("srg: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let first_line = bytes
        .split(|&b| b == b'\n')
        .find(|line| !line.is_empty())
        .ok_or_else(|| CliError::usage(format!("{} is empty", path.display())))?;
    parse_graph6(first_line).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn write_or_print(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(CliError::usage)?;
    println!("{text}");
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Params { n, k, lambda, mu } => cmd_params(cli, *n, *k, *lambda, *mu),
        Command::Verify { file } => cmd_verify(cli, file),
        Command::Cert { file } => cmd_cert(cli, file),
        Command::Theta { file } => cmd_theta(cli, file),
        Command::Solve {
            file,
            clique,
            coclique,
            chromatic,
        } => cmd_solve(cli, file, *clique, *coclique, *chromatic),
        Command::Hom {
            source,
            target,
            first,
            enumerate,
            count,
            oracle,
        } => {
            let mode = if *count {
                SearchMode::Count
            } else if *enumerate {
                SearchMode::Enumerate
            } else {
                let _ = first;
                SearchMode::First
            };
            cmd_hom(cli, source, target, mode, *oracle)
        }
        Command::Core {
            file,
            exhaustive,
            both,
        } => {
            let strategy = if *both {
                CoreStrategy::Both
            } else if *exhaustive {
                CoreStrategy::Exhaustive
            } else {
                CoreStrategy::Auto
            };
            cmd_core(cli, file, strategy)
        }
        Command::Hull { file, bruteforce } => cmd_hull(cli, file, *bruteforce),
        Command::Theorem { source, target } => cmd_theorem(cli, source, target),
        Command::Classify {
            file,
            dot,
            json_out,
            verify_pseudocore,
        } => cmd_classify(
            cli,
            file,
            dot.as_ref(),
            json_out.as_ref(),
            *verify_pseudocore,
        ),
        Command::Hasse { file, output } => cmd_hasse(cli, file, output.as_ref()),
        Command::Fixture { name, output } => cmd_fixture(cli, name, output.as_ref()),
    }
}

fn cmd_params(cli: &Cli, n: u32, k: u32, lambda: u32, mu: u32) -> Result<(), CliError> {
    let p = SrgParams::new(n, k, lambda, mu);
    let feasibility = params::check_feasible(&p);
    if !feasibility.feasible {
        let violation = feasibility
            .violation
            .map(|v| v.to_string())
            .unwrap_or_default();
        if cli.json {
            emit_json(&rpt::ParamsReport {
                n,
                k,
                lambda,
                mu,
                feasible: false,
                violation: Some(violation.clone()),
                spectrum: None,
            })?;
        }
        return Err(CliError::check(format!("{p} infeasible: {violation}")));
    }
    let spec = params::spectrum(&p).expect("feasible");
    let (comp, comp_spec) = params::complement_params(&p).expect("feasible");
    let cosines = params::cosines(&p).ok();
    let hoffman = params::hoffman_bound(&p).expect("feasible");
    let ratio = params::ratio_bound(&p).expect("feasible");
    if cli.json {
        emit_json(&rpt::ParamsReport {
            n,
            k,
            lambda,
            mu,
            feasible: true,
            violation: None,
            spectrum: Some(rpt::SpectrumReport {
                primitive: p.is_primitive(),
                theta: spec.theta.to_string(),
                tau: spec.tau.to_string(),
                m_theta: spec.m_theta,
                m_tau: spec.m_tau,
                complement: [comp.n, comp.k, comp.lambda, comp.mu],
                complement_theta: comp_spec.theta.to_string(),
                complement_tau: comp_spec.tau.to_string(),
                alpha: cosines.as_ref().map(|c| c.alpha.to_string()),
                beta: cosines.as_ref().map(|c| c.beta.to_string()),
                hoffman_bound: hoffman.to_string(),
                hoffman_bound_integer: hoffman.is_integer(),
                ratio_bound: ratio.to_string(),
            }),
        })?;
        return Ok(());
    }
    println!(
        "parameters      {p} {}",
        if p.is_primitive() {
            "(primitive)"
        } else {
            "(imprimitive)"
        }
    );
    println!("eigenvalues     theta = {}  tau = {}", spec.theta, spec.tau);
    println!(
        "multiplicities  m_theta = {}  m_tau = {}",
        spec.m_theta, spec.m_tau
    );
    println!(
        "complement      {comp}  theta = {}  tau = {}",
        comp_spec.theta, comp_spec.tau
    );
    match cosines {
        Some(c) => println!("cosines         alpha = {}  beta = {}", c.alpha, c.beta),
        None => println!("cosines         (imprimitive: undefined)"),
    }
    println!(
        "hoffman bound   {hoffman} {}",
        if hoffman.is_integer() {
            "(integer)"
        } else {
            "(non-integer)"
        }
    );
    println!("ratio bound     {ratio}");
    Ok(())
}

fn cmd_verify(cli: &Cli, file: &Path) -> Result<(), CliError> {
    let g = load_graph(file)?;
    let report = g.verify_srg();
    let n2 = g.check_n2_connected().iter().all(|&ok| ok);
    let out = rpt::VerifyReport {
        n: g.vertex_count(),
        is_srg: report.is_srg(),
        primitive: report.primitive,
        params: report.params.map(|p| [p.n, p.k, p.lambda, p.mu]),
        failure: report.failure.as_ref().map(|f| f.to_string()),
        n2_connected: n2,
    };
    if cli.json {
        emit_json(&out)?;
    } else if let Some(p) = report.params {
        println!(
            "strongly regular {p} {}; second neighborhoods connected: {n2}",
            if report.primitive {
                "(primitive)"
            } else {
                "(imprimitive)"
            }
        );
    }
    match report.failure {
        None => Ok(()),
        Some(f) => Err(CliError::check(format!("not strongly regular: {f}"))),
    }
}

fn theta_report(g: &Graph) -> Result<rpt::ThetaReport, CliError> {
    let cert = certs::theta_witnesses(g).map_err(CliError::check)?;
    Ok(rpt::ThetaReport {
        value: cert.value.to_string(),
        primal_feasible: true,
        dual_feasible: true,
        dual_objective: cert.dual.sum().to_string(),
        complementary_slackness_zero: true,
    })
}

fn cmd_cert(cli: &Cli, file: &Path) -> Result<(), CliError> {
    let g = load_graph(file)?;
    let report = g.verify_srg();
    let p = report
        .primitive_params()
        .ok_or_else(|| CliError::check("input is not a primitive strongly regular graph"))?;
    certs::check_projector_identities(&g).map_err(CliError::check)?;
    let e_g = certs::cosine_matrix(&g).map_err(CliError::check)?;
    let psd = certs::ldlt_psd(&e_g).map_err(CliError::check)?;
    if let PsdOutcome::NotPsd { .. } = psd {
        return Err(CliError::check(
            "cosine matrix is not positive semidefinite",
        ));
    }
    let theta = theta_report(&g)?;
    let out = rpt::CertReport {
        params: [p.n, p.k, p.lambda, p.mu],
        projector_identities: true,
        cosine_matrix_psd: true,
        theta,
    };
    if cli.json {
        emit_json(&out)?;
    } else {
        println!("parameters {p}");
        println!("projector identities: ok (exact)");
        println!("cosine matrix PSD: ok (exact LDL^T)");
        println!(
            "theta: value = {}, dual objective = {}, tr(MB) = 0",
            out.theta.value, out.theta.dual_objective
        );
    }
    Ok(())
}

fn cmd_theta(cli: &Cli, file: &Path) -> Result<(), CliError> {
    let g = load_graph(file)?;
    let out = theta_report(&g)?;
    if cli.json {
        emit_json(&out)?;
    } else {
        println!("theta value (Hoffman bound): {}", out.value);
        println!("primal feasible: {}", out.primal_feasible);
        println!(
            "dual feasible: {}, objective {}",
            out.dual_feasible, out.dual_objective
        );
        println!("tr(MB) = 0: {}", out.complementary_slackness_zero);
    }
    Ok(())
}

fn cmd_solve(
    cli: &Cli,
    file: &Path,
    clique: bool,
    coclique: bool,
    chromatic: bool,
) -> Result<(), CliError> {
    let g = load_graph(file)?;
    let all = !clique && !coclique && !chromatic;
    // Always use the branch-parallel decomposition: the merge is in fixed
    // branch order, so output bytes do not depend on --threads.
    let parallel = true;
    let mut out = rpt::SolveReport {
        clique: None,
        coclique: None,
        chromatic: None,
    };
    if clique || all {
        let r = solvers::max_clique_with(&g, cli.budget, parallel).map_err(CliError::check)?;
        out.clique = Some(rpt::CliqueReport {
            size: r.size,
            witness: r.witness,
            delsarte: r.is_delsarte,
        });
    }
    if coclique || all {
        let r = solvers::max_clique_with(&g.complement(), cli.budget, parallel)
            .map_err(CliError::check)?;
        out.coclique = Some(rpt::CliqueReport {
            size: r.size,
            witness: r.witness,
            delsarte: r.is_delsarte,
        });
    }
    if chromatic || all {
        let r = solvers::chromatic_number(&g, cli.budget).map_err(CliError::check)?;
        out.chromatic = Some(rpt::ChromaticReport {
            chromatic: r.chromatic,
            classes: r.classes,
            hoffman: r.is_hoffman,
        });
    }
    if cli.json {
        emit_json(&out)?;
        return Ok(());
    }
    if let Some(c) = &out.clique {
        println!(
            "clique number    {} {} witness {:?}",
            c.size,
            if c.delsarte { "(Delsarte)" } else { "" },
            c.witness
        );
    }
    if let Some(c) = &out.coclique {
        println!(
            "coclique number  {} {} witness {:?}",
            c.size,
            if c.delsarte { "(Delsarte)" } else { "" },
            c.witness
        );
    }
    if let Some(c) = &out.chromatic {
        println!(
            "chromatic number {} {}",
            c.chromatic,
            if c.hoffman { "(Hoffman coloring)" } else { "" }
        );
        for (i, class) in c.classes.iter().enumerate() {
            println!("  class {i}: {class:?}");
        }
    }
    Ok(())
}

fn kind_name(kind: HomKind) -> &'static str {
    match kind {
        HomKind::IsoOntoInducedSubgraph => "isomorphism",
        HomKind::Coloring => "coloring",
        HomKind::Other => "other",
    }
}

fn cmd_hom(
    cli: &Cli,
    source: &Path,
    target: &Path,
    mode: SearchMode,
    oracle: bool,
) -> Result<(), CliError> {
    let g = load_graph(source)?;
    let h = load_graph(target)?;
    let strategy = if oracle {
        Strategy::Oracle
    } else {
        Strategy::Fast
    };
    let result = homs::find_homs(&g, &h, mode, strategy, cli.budget).map_err(CliError::check)?;
    let out = rpt::HomReport {
        mode: match mode {
            SearchMode::First => "first",
            SearchMode::Enumerate => "enumerate",
            SearchMode::Count => "count",
        }
        .to_string(),
        count: result.count,
        complete: result.complete,
        homs: result
            .homs
            .iter()
            .map(|h| rpt::HomEntry {
                map: h.map.clone(),
                kind: kind_name(h.kind).to_string(),
            })
            .collect(),
    };
    if cli.json {
        emit_json(&out)?;
    } else {
        println!(
            "homomorphisms found: {} (complete: {})",
            out.count, out.complete
        );
        for hom in &out.homs {
            println!("{} {:?}", hom.kind, hom.map);
        }
    }
    if !result.complete {
        return Err(CliError::check("search budget exhausted; results partial"));
    }
    Ok(())
}

fn cmd_core(cli: &Cli, file: &Path, strategy: CoreStrategy) -> Result<(), CliError> {
    let g = load_graph(file)?;
    let report = homs::is_core(&g, strategy, cli.budget).map_err(CliError::check)?;
    let out = rpt::CoreCliReport {
        is_core: report.is_core,
        fast_path: report.fast_path,
        exhaustive_path: report.exhaustive_path,
        witness: report.witness.as_ref().map(|w| rpt::HomEntry {
            map: w.map.clone(),
            kind: kind_name(w.kind).to_string(),
        }),
    };
    if cli.json {
        emit_json(&out)?;
    } else {
        println!("core: {}", out.is_core);
        if let Some(w) = &out.witness {
            println!("proper endomorphism ({}) {:?}", w.kind, w.map);
        }
    }
    Ok(())
}

fn cmd_hull(cli: &Cli, file: &Path, bruteforce: bool) -> Result<(), CliError> {
    let g = load_graph(file)?;
    let strategy = if bruteforce || !g.verify_srg().primitive {
        HullStrategy::BruteForce
    } else {
        HullStrategy::PseudocoreFast
    };
    let result = homs::hull(&g, strategy, cli.budget).map_err(CliError::check)?;
    let n = result.hull.vertex_count();
    let out = rpt::HullReport {
        n,
        strategy: match strategy {
            HullStrategy::BruteForce => "bruteforce",
            HullStrategy::PseudocoreFast => "pseudocore-fast",
        }
        .to_string(),
        base_edges: result.base.edge_count(),
        hull_edges: result.hull.edge_count(),
        hull_is_complete: result.hull.edge_count() == n * (n - 1) / 2,
        hull_equals_base: result.hull == result.base,
        hull_graph6: encode_graph6(&result.hull),
    };
    if cli.json {
        emit_json(&out)?;
    } else {
        println!(
            "hull ({}) edges {} -> {}; complete: {}, unchanged: {}",
            out.strategy,
            out.base_edges,
            out.hull_edges,
            out.hull_is_complete,
            out.hull_equals_base
        );
        println!("{}", out.hull_graph6);
    }
    Ok(())
}

fn cmd_theorem(cli: &Cli, source: &Path, target: &Path) -> Result<(), CliError> {
    let g = load_graph(source)?;
    let h = load_graph(target)?;
    let report = homs::verify_main_theorem(&g, &h, cli.budget).map_err(CliError::check)?;
    let out = rpt::TheoremCliReport {
        case: match report.case {
            BetaCase::SourceLarger => "beta > beta'",
            BetaCase::Equal => "beta = beta'",
            BetaCase::TargetLarger => "beta < beta'",
        }
        .to_string(),
        total: report.total,
        isomorphisms: report.isomorphisms,
        colorings: report.colorings,
        others: report.others,
        product_lemma_checked: report.product_lemma_checked,
    };
    if cli.json {
        emit_json(&out)?;
    } else {
        println!(
            "case {}: {} homomorphisms = {} isomorphisms + {} colorings + {} other",
            out.case, out.total, out.isomorphisms, out.colorings, out.others
        );
        println!(
            "product lemma verified on {} maps",
            out.product_lemma_checked
        );
    }
    Ok(())
}

fn classify_entry(entry: &classify::CatalogEntry) -> rpt::ClassifyEntry {
    let (omega, chi, bound, tag) = match &entry.outcome {
        TypeOutcome::Determined(t) => (
            Some(t.omega),
            match t.chi {
                ChiValue::Exact(v) => rpt::ChiReport::Exact(v),
                ChiValue::Bracket { lo, hi } => rpt::ChiReport::Bracket([lo, hi]),
            },
            t.bound.to_string(),
            Some(t.tag.to_string()),
        ),
        TypeOutcome::Undetermined {
            omega,
            chi_lo,
            chi_hi,
            bound,
            ..
        } => (
            *omega,
            rpt::ChiReport::Bracket([*chi_lo, *chi_hi]),
            bound.to_string(),
            None,
        ),
    };
    rpt::ClassifyEntry {
        id: entry.id.clone(),
        n: entry.params.n,
        k: entry.params.k,
        lambda: entry.params.lambda,
        mu: entry.params.mu,
        omega,
        chi,
        bound,
        type_tag: tag,
        core: entry.core,
    }
}

fn cmd_classify(
    cli: &Cli,
    file: &Path,
    dot: Option<&PathBuf>,
    json_out: Option<&PathBuf>,
    verify_pseudocore: bool,
) -> Result<(), CliError> {
    let text = fs::read(file)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", file.display())))?;
    let report = classify::batch_classify(
        &text,
        BatchOptions {
            budget: cli.budget,
            verify_pseudocore,
        },
    );
    let out = rpt::ClassifyReport {
        entries: report.entries.iter().map(classify_entry).collect(),
        skipped: report
            .skipped
            .iter()
            .map(|s| rpt::SkippedEntry {
                line: s.line,
                reason: s.reason.clone(),
            })
            .collect(),
        histogram: rpt::Histogram {
            a: report.histogram.a,
            b: report.histogram.b,
            c: report.histogram.c,
            x: report.histogram.x,
            undetermined: report.histogram.undetermined,
        },
    };
    let json_text = serde_json::to_string_pretty(&out).map_err(CliError::usage)?;
    if let Some(path) = json_out {
        fs::write(path, &json_text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = dot {
        let dot_text = classify::hasse_dot(&report.entries).map_err(CliError::check)?;
        fs::write(path, dot_text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if cli.json {
        println!("{json_text}");
    } else {
        for entry in &out.entries {
            let tag = entry.type_tag.clone().unwrap_or_else(|| "?".to_string());
            let chi = match &entry.chi {
                rpt::ChiReport::Exact(v) => v.to_string(),
                rpt::ChiReport::Bracket([lo, hi]) => format!("[{lo},{hi}]"),
            };
            println!(
                "{}: ({},{},{},{}) type {} omega={} chi={} bound={} core={}",
                entry.id,
                entry.n,
                entry.k,
                entry.lambda,
                entry.mu,
                tag,
                entry
                    .omega
                    .map(|o| o.to_string())
                    .unwrap_or_else(|| "?".into()),
                chi,
                entry.bound,
                entry
                    .core
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "?".into()),
            );
        }
        for s in &out.skipped {
            println!("line {}: skipped ({})", s.line, s.reason);
        }
        let h = &out.histogram;
        println!(
            "types: A={} B={} C={} X={} undetermined={}",
            h.a, h.b, h.c, h.x, h.undetermined
        );
    }
    Ok(())
}

fn cmd_hasse(cli: &Cli, file: &Path, output: Option<&PathBuf>) -> Result<(), CliError> {
    let text = fs::read(file)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", file.display())))?;
    let report = classify::batch_classify(
        &text,
        BatchOptions {
            budget: cli.budget,
            verify_pseudocore: false,
        },
    );
    let dot = classify::hasse_dot(&report.entries).map_err(CliError::check)?;
    write_or_print(output, &dot)
}

fn cmd_fixture(cli: &Cli, name: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    let g = fixtures::by_name(name).map_err(CliError::usage)?;
    let line = encode_graph6(&g);
    let report = g.verify_srg();
    let p = report.params.expect("all fixtures are strongly regular");
    if cli.json {
        emit_json(&rpt::FixtureReport {
            name: name.to_string(),
            n: g.vertex_count(),
            graph6: line,
            params: [p.n, p.k, p.lambda, p.mu],
        })
    } else {
        write_or_print(output, &format!("{line}\n"))
    }
}
