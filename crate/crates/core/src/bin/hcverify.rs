use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hypercomplex::catalog::{catalog, CATALOG_NAMES};
use hypercomplex::instance::{parse_instance, Instance};
use hypercomplex::report::{run_report, Suite, VerificationReport};

/// Exact verification of hypercomplex, HKT and Obata-holonomy properties of
/// left-invariant structures on Lie algebras.
#[derive(Parser)]
#[command(name = "hcverify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Target {
    /// Instance JSON file, or `catalog:<name>` for a built-in entry.
    input: String,
    /// Write the machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Structure suite: Jacobi, quaternion relations, integrability, abelian condition.
    Verify(Target),
    /// HKT suite: metric and Omega, J-positivity, del Omega = 0.
    Hkt(Target),
    /// Obata connection: existence, uniqueness, torsion and parallelism.
    Obata(Target),
    /// Curvature, holonomy algebra, canonical bundle and sl(n, H) membership.
    Holonomy(Target),
    /// Dolbeault operators, bicomplex, sl(2) triple, Laplacian experiment.
    Lefschetz(Target),
    /// Every suite.
    Report(Target),
    /// Built-in instances.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entry names.
    List,
    /// Print an entry in the instance file format.
    Show { name: String },
}

fn load(input: &str) -> hypercomplex::Result<Instance> {
    match input.strip_prefix("catalog:") {
        Some(name) => catalog(name),
        None => parse_instance(Path::new(input)),
    }
}

fn run(target: &Target, suites: &[Suite]) -> ExitCode {
    let inst = match load(&target.input) {
        Ok(inst) => inst,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = run_report(&inst, suites, target.seed);
    print!("{}", report.to_text());
    if let Some(path) = &target.json {
        if let Err(e) = write_json(&report, path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn write_json(report: &VerificationReport, path: &Path) -> hypercomplex::Result<()> {
    std::fs::write(path, report.to_json()?)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(t) => run(t, &[Suite::Structure]),
        Command::Hkt(t) => run(t, &[Suite::Hkt]),
        Command::Obata(t) => run(t, &[Suite::Obata]),
        Command::Holonomy(t) => run(t, &[Suite::Holonomy]),
        Command::Lefschetz(t) => run(t, &[Suite::Lefschetz]),
        Command::Report(t) => run(t, &Suite::ALL),
        Command::Catalog { action: CatalogAction::List } => {
            for name in CATALOG_NAMES {
                let inst = catalog(name).expect("catalog entries are valid");
                println!("{name:<12} dim {:<3} {}", inst.algebra.dim(), inst.description);
            }
            ExitCode::SUCCESS
        }
        Command::Catalog { action: CatalogAction::Show { name } } => match catalog(name).and_then(|i| i.to_json()) {
            Ok(text) => {
                println!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
