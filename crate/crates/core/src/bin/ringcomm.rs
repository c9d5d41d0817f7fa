//! Command-line front end.
//!
//! Exit codes: 0 success, 1 claim or verdict failure, 2 input error, 3 internal
//! inconsistency, 4 search budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ringcomm::commutators::{
    center, commutator_subgroup, pr_bruteforce, pr_formula, pr_spectrum, pr_spectrum_bruteforce,
};
use ringcomm::graph::{build_graph, export_dot, verify_edge_identity, EdgeCase};
use ringcomm::isoclinism::{
    find_isoclinism_with_budget, verify_invariance, IsoclinismOutcome, DEFAULT_NODE_BUDGET,
};
use ringcomm::probability::format_fraction;
use ringcomm::ringfile::{parse_ring_file, serialize_ring};
use ringcomm::verify::verify_ring;
use ringcomm::{catalog, Error, FiniteRing};

#[derive(Parser)]
#[command(name = "ringcomm", version, about = "Generalized commuting probability of finite rings")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a ring file, then summarize it.
    Validate { path: PathBuf },
    /// Print Pr_r for one element or the whole spectrum.
    Prob {
        path: PathBuf,
        /// Target commutator value, e.g. `1,0`.
        #[arg(long = "r", conflicts_with = "all", required_unless_present = "all")]
        r: Option<String>,
        /// Print Pr_r for every r and the total.
        #[arg(long)]
        all: bool,
    },
    /// Run every claim check and report pass/fail/skipped per claim id.
    Verify { path: PathBuf },
    /// Build the r-noncommuting graph, check the edge-count identity, optionally write DOT.
    Graph {
        path: PathBuf,
        #[arg(long = "r")]
        r: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Search for a Z-isoclinism and check invariance of the spectrum.
    Isoclinic {
        first: PathBuf,
        second: PathBuf,
        /// Maximum number of search nodes.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Write the ring file of the direct product.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Write a catalog ring (E4, zero_ring(n), cyclic_ring(n), triangular(n,s), full_matrix(n,s)).
    Catalog {
        spec: String,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Verdict(String),
    Input(String),
    Internal(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SearchBudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn load(path: &Path) -> Result<FiniteRing, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_ring_file(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn validate(path: &Path) -> CmdResult {
    let ring = load(path)?;
    println!(
        "order {}, {}, |Z|={}, |[R,R]|={}",
        ring.order(),
        if ring.is_commutative() { "commutative" } else { "non-commutative" },
        center(&ring).len(),
        commutator_subgroup(&ring).len()
    );
    Ok(())
}

fn prob(path: &Path, r: Option<&str>, all: bool) -> CmdResult {
    let ring = load(path)?;
    if all {
        let formula = pr_spectrum(&ring)?;
        let brute = pr_spectrum_bruteforce(&ring)?;
        if formula != brute {
            return Err(Failure::Internal(
                "formula and brute-force spectra disagree".to_string(),
            ));
        }
        for (r, p) in formula.entries() {
            println!("{r} {p}");
        }
        println!("sum {}", format_fraction(&formula.sum()));
        return Ok(());
    }
    let r = ring.parse_element(r.expect("clap enforces --r or --all"))?;
    let formula = pr_formula(&ring, &r)?;
    let brute = pr_bruteforce(&ring, &r)?;
    if formula != brute {
        return Err(Failure::Internal(format!(
            "Pr_{r}: formula {formula} but brute force {brute}"
        )));
    }
    println!("{r} {formula}");
    Ok(())
}

fn verify(path: &Path) -> CmdResult {
    let ring = load(path)?;
    let report = verify_ring(&ring, &path.display().to_string())?;
    print!("{}", report.render());
    let failed = report.failures().next().map(|c| format!("claim {} failed: {}", c.id, c.detail));
    match failed {
        None => Ok(()),
        Some(message) => Err(Failure::Verdict(message)),
    }
}

fn graph(path: &Path, r: &str, dot: Option<&Path>) -> CmdResult {
    let ring = load(path)?;
    let r = ring.parse_element(r)?;
    let g = build_graph(&ring, &r)?;
    if let Some(dot) = dot {
        write(dot, &export_dot(&g))?;
    }
    let report = verify_edge_identity(&ring, &r)?;
    let case = match report.case {
        EdgeCase::Zero => "P2.7a",
        EdgeCase::Involutive => "P2.7b-even",
        EdgeCase::Generic => "P2.7b-odd",
    };
    println!("edges {}", g.edge_count());
    println!(
        "identity {case} {}: Pr_r={} from_edges={}",
        if report.holds { "pass" } else { "fail" },
        report.pr_r,
        format_fraction(&report.from_edges)
    );
    if report.holds {
        Ok(())
    } else {
        Err(Failure::Verdict(format!("{case} identity fails")))
    }
}

fn isoclinic(first: &Path, second: &Path, budget: u64) -> CmdResult {
    let (r1, r2) = (load(first)?, load(second)?);
    let witness = match find_isoclinism_with_budget(&r1, &r2, budget)? {
        IsoclinismOutcome::NotIsoclinic(reason) => {
            println!("NotIsoclinic ({reason})");
            return Err(Failure::Verdict("rings are not Z-isoclinic".to_string()));
        }
        IsoclinismOutcome::Isoclinic(w) => w,
    };
    print!("{}", witness.serialize());
    let report = verify_invariance(&r1, &r2, &witness)?;
    println!("invariance:");
    for e in &report.entries {
        println!(
            "  Pr_{}(R1) = {}  Pr_{}(R2) = {}  {}",
            e.r,
            e.left,
            e.beta_r,
            e.right,
            if e.left == e.right { "equal" } else { "DIFFERENT" }
        );
    }
    println!(
        "central indices {} {}",
        report.central_indices.0, report.central_indices.1
    );
    if report.holds() {
        println!("result: isoclinic, invariance pass");
        Ok(())
    } else {
        println!("result: isoclinic, invariance FAIL");
        Err(Failure::Verdict("invariance check failed".to_string()))
    }
}

fn product(first: &Path, second: &Path, out: &Path) -> CmdResult {
    let ring = load(first)?.direct_product(&load(second)?)?;
    write(out, &serialize_ring(&ring))?;
    println!("order {}", ring.order());
    Ok(())
}

fn catalog_cmd(spec: &str, out: Option<&Path>) -> CmdResult {
    let text = serialize_ring(&catalog::from_spec(spec)?);
    match out {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = match &args.command {
        Command::Validate { path } => validate(path),
        Command::Prob { path, r, all } => prob(path, r.as_deref(), *all),
        Command::Verify { path } => verify(path),
        Command::Graph { path, r, dot } => graph(path, r, dot.as_deref()),
        Command::Isoclinic {
            first,
            second,
            budget,
        } => isoclinic(first, second, *budget),
        Command::Product { first, second, out } => product(first, second, out),
        Command::Catalog { spec, out } => catalog_cmd(spec, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Verdict(m) => (1, m),
                Failure::Input(m) => (2, m),
                Failure::Internal(m) => (3, format!("internal inconsistency: {m}")),
                Failure::Budget(m) => (4, m),
            };
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
