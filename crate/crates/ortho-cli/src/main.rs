//! `ortho`: load instance files, verify product axioms, compute neutral
//! parts, quotients, absolute values and adjoints, classify operators, and
//! drive the theorem property suites.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse
//! error, 3 unsupported instance.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use ortho_core::demos;
use ortho_core::error::Error;
use ortho_core::fixtures;
use ortho_core::instance::InstanceFile;
use ortho_core::operator::{adjoint, classify, AdjointResult};
use ortho_core::product::OrthoProduct;
use ortho_core::report::{CheckResult, Report};
use ortho_core::suites::{builtin_checks, file_checks, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "ortho",
    version,
    about = "Exact computations on finite-dimensional vector lattices: orthosymmetric \
             products, multiplication operators, adjoints, and operator classification"
)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify product axioms; report neutral parts and definiteness.
    Verify {
        /// Instance file ("-" reads stdin).
        path: PathBuf,
    },
    /// Classify a named operator.
    Classify {
        path: PathBuf,
        /// Operator name within the instance file.
        name: String,
        /// Product names on the domain and codomain, enabling the
        /// adjoint-based flags.
        #[arg(long, num_args = 2, value_names = ["PL", "PM"])]
        products: Option<Vec<String>>,
    },
    /// Solve the adjoint equation for a named operator.
    Adjoint {
        path: PathBuf,
        name: String,
        #[arg(long, num_args = 2, value_names = ["PL", "PM"])]
        products: Vec<String>,
    },
    /// Absolute value |T| of a named operator.
    Abs { path: PathBuf, name: String },
    /// Quotient a named product by its neutral part.
    Quotient {
        path: PathBuf,
        /// Product name within the instance file.
        name: String,
    },
    /// Run the theorem property suites against a file or built-in
    /// generated instances.
    Theorems {
        /// Instance file with products to check.
        path: Option<PathBuf>,
        /// Generate seeded random instances instead of reading a file.
        #[arg(long)]
        builtin: bool,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Instances per product-level suite; the operator suites scale
        /// with it (5/2x for the homomorphism characterization, 1/2x for
        /// the corollaries).
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Largest generated instance dimension.
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
    },
    /// Floating-point demonstrations (approximate by nature): `integ` or
    /// `oscillation`.
    Demo { name: String },
    /// Fixture catalog utilities.
    Fixtures {
        #[command(subcommand)]
        command: FixturesCommand,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// Print a named fixture as an instance file: euclidean, lex2, diag,
    /// kaplan, no-adjoint, multi-adjoint, selfadjoint-2x2, latticehom-3x3.
    Export {
        name: String,
        /// Dimension or weight arguments, fixture dependent.
        args: Vec<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match dispatch(&cli.command) {
        Ok(Output::Report(report)) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            report.exit_code()
        }
        Ok(Output::Raw(text)) => {
            print!("{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Unsupported(_) | Error::BoundExceeded { .. } => 3,
                _ => 2,
            }
        }
    }
}

enum Output {
    Report(Report),
    Raw(String),
}

fn read_instance(path: &PathBuf) -> Result<InstanceFile, Error> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?
    };
    InstanceFile::from_json(&text)
}

/// Loads and verifies a named product, mapping axiom failures to an error
/// so commands that require valid products fail with a clear message.
fn verified_product(file: &InstanceFile, name: &str) -> Result<OrthoProduct, Error> {
    let mut p = file.product(name)?;
    let report = p.verify()?;
    if !report.all_ok() {
        let witness = report
            .witnesses
            .first()
            .map(|w| format!(": {w}"))
            .unwrap_or_default();
        return Err(Error::Unsupported(format!(
            "product {name:?} fails the axioms{witness}"
        )));
    }
    Ok(p)
}

fn dispatch(command: &Command) -> Result<Output, Error> {
    match command {
        Command::Verify { path } => cmd_verify(path),
        Command::Classify {
            path,
            name,
            products,
        } => cmd_classify(path, name, products.as_deref()),
        Command::Adjoint {
            path,
            name,
            products,
        } => cmd_adjoint(path, name, products),
        Command::Abs { path, name } => cmd_abs(path, name),
        Command::Quotient { path, name } => cmd_quotient(path, name),
        Command::Theorems {
            path,
            builtin,
            seed,
            cases,
            max_dim,
        } => cmd_theorems(path.as_ref(), *builtin, *seed, *cases, *max_dim),
        Command::Demo { name } => cmd_demo(name),
        Command::Fixtures {
            command: FixturesCommand::Export { name, args },
        } => Ok(Output::Raw(
            fixtures::export_instance(name, args)?.to_json(),
        )),
    }
}

fn cmd_verify(path: &PathBuf) -> Result<Output, Error> {
    let file = read_instance(path)?;
    if file.products.is_empty() {
        return Err(Error::Parse("instance file contains no products".into()));
    }
    let mut report = Report::new(format!("verify {}", path.display()));
    for (name, def) in &file.products {
        let mut p = def.to_product()?;
        let axioms = match p.verify() {
            Ok(r) => r,
            Err(e) => {
                report.push(CheckResult::unsupported(
                    format!("{name}.axioms"),
                    e.to_string(),
                ));
                continue;
            }
        };
        for (check, ok, axiom) in [
            (
                "positivity",
                axioms.positivity_ok,
                ortho_core::product::Axiom::Positivity,
            ),
            (
                "orthosymmetry",
                axioms.orthosymmetry_ok,
                ortho_core::product::Axiom::Orthosymmetry,
            ),
            (
                "symmetry",
                axioms.symmetry_ok,
                ortho_core::product::Axiom::Symmetry,
            ),
        ] {
            let full = format!("{name}.{check}");
            if ok {
                report.push(CheckResult::pass(full, ""));
            } else {
                let witness = axioms
                    .witnesses
                    .iter()
                    .find(|w| w.axiom == axiom)
                    .map(|w| w.to_string())
                    .unwrap_or_default();
                report.push(CheckResult::fail(full, witness));
            }
        }
        if axioms.all_ok() {
            let neutral = p.neutral_basis()?;
            let basis: Vec<String> = neutral.basis.iter().map(|b| b.to_string()).collect();
            report.push(CheckResult::pass(
                format!("{name}.neutral"),
                format!("dim={}, basis=[{}]", neutral.dim(), basis.join(", ")),
            ));
            report.push(CheckResult::pass(
                format!("{name}.definite"),
                format!("{}", p.is_definite()?),
            ));
        }
    }
    Ok(Output::Report(report))
}

fn cmd_classify(path: &PathBuf, name: &str, products: Option<&[String]>) -> Result<Output, Error> {
    let file = read_instance(path)?;
    let t = file.operator(name)?;
    let loaded;
    let pair = match products {
        Some([pl, pm]) => {
            loaded = (verified_product(&file, pl)?, verified_product(&file, pm)?);
            Some((&loaded.0, &loaded.1))
        }
        Some(_) => return Err(Error::Parse("--products takes exactly two names".into())),
        None => None,
    };
    let c = classify(&t, pair)?;
    let mut report = Report::new(format!("classify {} {name}", path.display()));
    let flag =
        |label: &str, value: bool| CheckResult::pass(format!("{name}.{label}"), format!("{value}"));
    report.push(flag("positive", c.positive));
    report.push(flag("lattice_hom", c.lattice_hom));
    report.push(flag("orthomorphism", c.orthomorphism));
    report.push(flag("interval_preserving", c.interval_preserving));
    report.push(flag("normal", c.normal));
    match c.selfadjoint {
        Some(v) => report.push(flag("selfadjoint", v)),
        None => report.push(CheckResult::pass(
            format!("{name}.selfadjoint"),
            "not determined (no products supplied or no adjoint)",
        )),
    }
    if let Some((pl, pm)) = pair {
        let kind = adjoint(pl, pm, &t)?.kind();
        report.push(CheckResult::pass(format!("{name}.adjoint"), kind));
    }
    Ok(Output::Report(report))
}

fn cmd_adjoint(path: &PathBuf, name: &str, products: &[String]) -> Result<Output, Error> {
    let file = read_instance(path)?;
    let t = file.operator(name)?;
    let [pl_name, pm_name] = products else {
        return Err(Error::Parse("--products takes exactly two names".into()));
    };
    let pl = verified_product(&file, pl_name)?;
    let pm = verified_product(&file, pm_name)?;
    let mut report = Report::new(format!("adjoint {} {name}", path.display()));
    match adjoint(&pl, &pm, &t)? {
        AdjointResult::NoAdjoint => {
            report.push(CheckResult::pass(
                format!("{name}.adjoint"),
                "no-adjoint (the defining equations are inconsistent)",
            ));
        }
        AdjointResult::Unique(s) => {
            report.push(CheckResult::pass(format!("{name}.adjoint"), "unique"));
            report.push(CheckResult::pass(
                format!("{name}.adjoint.matrix"),
                s.to_string(),
            ));
        }
        AdjointResult::Family {
            particular,
            homogeneous_basis,
        } => {
            report.push(CheckResult::pass(
                format!("{name}.adjoint"),
                format!("family (homogeneous dimension {})", homogeneous_basis.len()),
            ));
            report.push(CheckResult::pass(
                format!("{name}.adjoint.particular"),
                particular.to_string(),
            ));
            for (i, h) in homogeneous_basis.iter().enumerate() {
                report.push(CheckResult::pass(
                    format!("{name}.adjoint.homogeneous[{i}]"),
                    h.to_string(),
                ));
            }
        }
    }
    Ok(Output::Report(report))
}

fn cmd_abs(path: &PathBuf, name: &str) -> Result<Output, Error> {
    let file = read_instance(path)?;
    let t = file.operator(name)?;
    let abs = t.rk_abs()?;
    let mut report = Report::new(format!("abs {} {name}", path.display()));
    report.push(CheckResult::pass(format!("|{name}|"), abs.to_string()));
    Ok(Output::Report(report))
}

fn cmd_quotient(path: &PathBuf, name: &str) -> Result<Output, Error> {
    let file = read_instance(path)?;
    let p = verified_product(&file, name)?;
    let neutral = p.neutral_basis()?;
    let q = p.quotient()?;
    let mut report = Report::new(format!("quotient {} {name}", path.display()));
    let basis: Vec<String> = neutral.basis.iter().map(|b| b.to_string()).collect();
    report.push(CheckResult::pass(
        format!("{name}.neutral"),
        format!("dim={}, basis=[{}]", neutral.dim(), basis.join(", ")),
    ));
    let complement: Vec<String> = q.complement_indices.iter().map(usize::to_string).collect();
    report.push(CheckResult::pass(
        format!("{name}.complement"),
        format!("indices=[{}]", complement.join(", ")),
    ));
    report.push(CheckResult::pass(
        format!("{name}.quotient.dim"),
        q.induced.domain().dim().to_string(),
    ));
    report.push(CheckResult::pass(
        format!("{name}.quotient.definite"),
        format!("{}", q.induced.is_definite()?),
    ));
    Ok(Output::Report(report))
}

fn cmd_theorems(
    path: Option<&PathBuf>,
    builtin: bool,
    seed: u64,
    cases: usize,
    max_dim: usize,
) -> Result<Output, Error> {
    let cfg = SuiteConfig {
        seed,
        cases,
        max_dim,
    };
    let mut report = Report::new(format!(
        "theorems (seed={seed}, cases={cases}, max-dim={max_dim})"
    ));
    match (path, builtin) {
        (None, false) => {
            return Err(Error::Parse(
                "theorems needs an instance file or --builtin".into(),
            ))
        }
        (Some(_), true) => {
            return Err(Error::Parse(
                "theorems takes either an instance file or --builtin, not both".into(),
            ))
        }
        (Some(p), false) => {
            let file = read_instance(p)?;
            if file.products.is_empty() {
                return Err(Error::Parse("instance file contains no products".into()));
            }
            report.extend(file_checks(&file, &cfg)?);
        }
        (None, true) => report.extend(builtin_checks(&cfg)),
    }
    Ok(Output::Report(report))
}

fn cmd_demo(name: &str) -> Result<Output, Error> {
    let demo = match name {
        "integ" => demos::demo_integ(),
        "oscillation" => demos::demo_oscillation(),
        _ => {
            return Err(Error::Parse(format!(
                "unknown demo {name:?}; known: integ, oscillation"
            )))
        }
    };
    let mut report = Report::new(format!("demo {name} (floating point, non-exact)"));
    for (label, value) in &demo.observations {
        report.push(CheckResult::pass(label.clone(), format!("{value:.9}")));
    }
    let verdict_name = format!("{}.pass", demo.name);
    report.push(if demo.pass {
        CheckResult::pass(verdict_name, format!("tolerance={:e}", demo.tolerance))
    } else {
        CheckResult::fail(verdict_name, format!("tolerance={:e}", demo.tolerance))
    });
    Ok(Output::Report(report))
}
