use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use spectra_core::constructions::{
    catalog, circle_group, commutator_ring, construct_n, direct_product_group, direct_product_ring,
    malcev_group,
};
use spectra_core::json::{self, spectrum_value};
use spectra_core::probability::{pr_c_group, pr_c_group_class_count, pr_f_ring};
use spectra_core::spectrum::{
    enumerate_bilinear_rings, enumerate_general_rings, BilinearFamilySpec, RingFilter,
};
use spectra_core::structure::{
    center_group, is_antisymmetric, is_strongly_antisymmetric, lower_central_series,
    parity_and_p_group, parity_and_p_ring, ring_powers, NilpotencyReport, OrderInfo,
};
use spectra_core::verify::{run_suite, Suite};
use spectra_core::{Caps, CatalogName, FiniteRing, PolySpec, Structure};

#[derive(Parser)]
#[command(
    name = "spectra",
    version,
    about = "Commuting and annihilating probabilities of finite groups and rings"
)]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// largest order a construction may produce
    #[arg(long, global = true)]
    order_cap: Option<usize>,
    /// largest ring order for general enumeration
    #[arg(long, global = true)]
    general_cap: Option<usize>,
    /// largest ring order for bilinear families
    #[arg(long, global = true)]
    bilinear_cap: Option<usize>,
    /// largest number of candidates an enumeration may visit
    #[arg(long, global = true)]
    budget: Option<u128>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            order_cap: self.order_cap.unwrap_or(d.order_cap),
            general_order_cap: self.general_cap.unwrap_or(d.general_order_cap),
            bilinear_order_cap: self.bilinear_cap.unwrap_or(d.bilinear_order_cap),
            candidate_budget: self.budget.unwrap_or(d.candidate_budget),
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// catalog name, e.g. symmetric:3 or ut3:2
    #[arg(long)]
    catalog: Option<String>,
    /// JSON document to read
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct SecondSource {
    /// second operand of `product`, as a catalog name
    #[arg(long)]
    catalog2: Option<String>,
    /// second operand of `product`, as a JSON document
    #[arg(long)]
    input2: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Group,
    Ring,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupMethod {
    Brute,
    ClassCount,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Nring,
    Circle,
    Commring,
    Malcev,
    Product,
}

#[derive(Subcommand)]
enum Command {
    /// Print Pr_c of a group or Pr_f of a ring as a reduced fraction
    Prob {
        #[command(flatten)]
        source: Source,
        /// expected kind of the input
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// coefficients a,b of a*xy + b*yx (rings only)
        #[arg(long, default_value = "1,-1", allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value = "brute")]
        method: GroupMethod,
    },
    /// Apply a construction and write the resulting document
    Construct {
        #[arg(long, value_enum)]
        op: Op,
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        second: SecondSource,
        /// output file; stdout when absent
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print order, parity, center, nilpotency and antisymmetry data
    Analyze {
        #[command(flatten)]
        source: Source,
    },
    /// Run a verification suite
    Verify {
        /// suite name, or `all`
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// print the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print the spectrum of an enumerated family
    Enumerate {
        /// invariants for a general enumeration, e.g. 2,2
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["v", "w"])]
        general: Option<Vec<u64>>,
        /// invariants of V for a bilinear family
        #[arg(long, value_delimiter = ',', requires = "w")]
        v: Option<Vec<u64>>,
        /// invariants of W for a bilinear family
        #[arg(long, value_delimiter = ',')]
        w: Option<Vec<u64>>,
        #[arg(long)]
        alternating: bool,
        /// e.g. associative, antisymmetric, nilpotent, class<=3
        #[arg(long = "filter")]
        filters: Vec<String>,
        #[arg(long, default_value = "1,-1", allow_hyphen_values = true)]
        poly: String,
    },
    /// List catalog names, or print one entry as JSON
    Catalog { name: Option<String> },
}

fn load(source: &Source) -> Result<Structure> {
    load_one(source.catalog.as_deref(), source.input.as_deref())
}

fn load_one(name: Option<&str>, path: Option<&Path>) -> Result<Structure> {
    match (name, path) {
        (Some(name), _) => Ok(catalog::catalog(&name.parse::<CatalogName>()?)?),
        (None, Some(path)) => Ok(json::load(path)?),
        (None, None) => bail!("no input given"),
    }
}

fn expect_ring(s: Structure, what: &str) -> Result<FiniteRing> {
    match s {
        Structure::Ring(r) => Ok(r),
        Structure::Group(_) => bail!("{what} needs a ring, got a group"),
    }
}

fn print_series(kind: &str, report: &NilpotencyReport) {
    let sizes: Vec<String> = report.series.iter().map(|m| m.size().to_string()).collect();
    println!("nilpotency class: {}", report.class);
    println!("{kind}: {}", sizes.join(" "));
}

fn print_order(info: OrderInfo) {
    println!("order: {}", info.order);
    println!("odd: {}", info.is_odd);
    match info.prime_power {
        Some((p, e)) => println!("prime power: {p}^{e}"),
        None => println!("prime power: no"),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let caps = cli.caps.caps();
    match cli.command {
        Command::Prob {
            source,
            kind,
            poly,
            method,
        } => {
            let s = load(&source)?;
            match (kind, &s) {
                (Some(Kind::Group), Structure::Ring(_)) => bail!("expected a group, got a ring"),
                (Some(Kind::Ring), Structure::Group(_)) => bail!("expected a ring, got a group"),
                _ => {}
            }
            let value = match s {
                Structure::Group(g) => match method {
                    GroupMethod::Brute => pr_c_group(&g).value,
                    GroupMethod::ClassCount => pr_c_group_class_count(&g).value,
                },
                Structure::Ring(r) => pr_f_ring(&r, poly.parse::<PolySpec>()?).value,
            };
            println!("{value}");
        }
        Command::Construct {
            op,
            source,
            second,
            output,
        } => {
            let s = load(&source)?;
            let out = match op {
                Op::Nring => Structure::Ring(construct_n(&expect_ring(s, "nring")?, &caps)?),
                Op::Circle => Structure::Group(circle_group(&expect_ring(s, "circle")?)?),
                Op::Malcev => Structure::Group(malcev_group(&expect_ring(s, "malcev")?, &caps)?),
                Op::Commring => match s {
                    Structure::Group(g) => Structure::Ring(commutator_ring(&g)?),
                    Structure::Ring(_) => bail!("commring needs a group, got a ring"),
                },
                Op::Product => {
                    let t = load_one(second.catalog2.as_deref(), second.input2.as_deref())
                        .context("product needs --catalog2 or --input2")?;
                    match (s, t) {
                        (Structure::Group(a), Structure::Group(b)) => {
                            Structure::Group(direct_product_group(&a, &b, &caps)?)
                        }
                        (Structure::Ring(a), Structure::Ring(b)) => {
                            Structure::Ring(direct_product_ring(&a, &b, &caps)?)
                        }
                        _ => bail!("product needs two groups or two rings"),
                    }
                }
            };
            match output {
                Some(path) => json::save(&path, &out)?,
                None => println!("{}", json::to_canonical_json(&out)),
            }
        }
        Command::Analyze { source } => match load(&source)? {
            Structure::Group(g) => {
                println!("type: group");
                print_order(parity_and_p_group(&g));
                println!("abelian: {}", g.is_abelian());
                println!("center: {}", center_group(&g).size());
                print_series("lower central series", &lower_central_series(&g));
            }
            Structure::Ring(r) => {
                println!("type: ring");
                print_order(parity_and_p_ring(&r));
                let center = r
                    .elements()
                    .filter(|&z| r.elements().all(|x| r.mul(z, x) == r.mul(x, z)))
                    .count();
                println!("center: {center}");
                println!("associative: {}", r.is_associative());
                println!("commutative: {}", r.is_commutative());
                println!("antisymmetric: {}", is_antisymmetric(&r));
                println!("strongly antisymmetric: {}", is_strongly_antisymmetric(&r));
                print_series("powers", &ring_powers(&r));
            }
        },
        Command::Verify { suite, seed, json } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut passed = true;
            for s in suites {
                let report = run_suite(s, seed, &caps)?;
                if json {
                    println!("{}", report.to_json());
                } else {
                    print!("{report}");
                }
                passed &= report.passed();
            }
            return Ok(passed);
        }
        Command::Enumerate {
            general,
            v,
            w,
            alternating,
            filters,
            poly,
        } => {
            let poly: PolySpec = poly.parse()?;
            let filters = filters
                .iter()
                .map(|f| f.parse::<RingFilter>())
                .collect::<Result<Vec<_>, _>>()?;
            let search = match (general, w) {
                (Some(inv), _) => enumerate_general_rings(&inv, &filters, &caps)?,
                (None, Some(w)) => {
                    let spec = BilinearFamilySpec {
                        v_invariants: v.unwrap_or_default(),
                        w_invariants: w,
                        alternating,
                    };
                    enumerate_bilinear_rings(&spec, &caps)?.with_filters(&filters)
                }
                (None, None) => bail!("enumerate needs --general or --v/--w"),
            };
            println!("{}", spectrum_value(&search.spectrum(poly)?));
        }
        Command::Catalog { name } => match name {
            Some(name) => {
                let s = catalog::catalog(&name.parse::<CatalogName>()?)?;
                println!("{}", json::to_canonical_json(&s));
            }
            None => {
                for line in [
                    "cyclic:n        group  Z_n",
                    "dihedral:n      group  symmetries of the n-gon, order 2n",
                    "quaternion8     group  Q8",
                    "symmetric:n     group  S_n, n <= 5",
                    "heisenberg:p    group  unitriangular 3x3 over F_p",
                    "klein4          group  Z_2 x Z_2",
                    "zn:n            ring   Z_n",
                    "null:d1,..,dk   ring   zero multiplication",
                    "ut3:p           ring   strictly upper triangular 3x3 over F_p",
                    "matrix2:p       ring   M_2(F_p)",
                ] {
                    println!("{line}");
                }
            }
        },
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("SPECTRA_THREADS")
        .ok()
        .and_then(|t| t.parse().ok())
    {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
