//! `ktab`: expansions of weighted tableau families in the Schur,
//! stable Grothendieck (G) and dual stable Grothendieck (g) bases,
//! with counting, identity checks and the elegant-filling bijections.
//!
//! Output is deterministic: canonical JSON by default, aligned text
//! with `--format table`.  Exit codes: 0 success, 1 verification
//! failure, 2 usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ktableaux::elegant::{filling_to_rpp, filling_to_svt, rpp_to_filling, svt_to_filling};
use ktableaux::engine::{class_signed_sum, hall_littlewood_coefficient_sum, TableauModel};
use ktableaux::enumerate_elegant;
use ktableaux::symfun::SymFunc;
use ktableaux::tableau::{enumerate_ssyt, enumerate_ssyt_bounded};
use ktableaux::{
    enumerate_rpp, enumerate_rpp_bounded, enumerate_svt, enumerate_svt_by_content, ElegantFilling,
    Evaluation, IntPoly, Partition, Permutation, ReversePlanePartition, SetValuedTableau, Tableau,
};

#[derive(Parser)]
#[command(
    name = "ktab",
    version,
    about = "Schur / Grothendieck expansions of tableau families"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Hl,
    Lr,
    #[value(name = "macdonald-q1")]
    MacdonaldQ1,
    Stanley,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    /// Schur basis.
    S,
    /// Dual stable Grothendieck basis (signed, exact).
    G,
    /// Stable Grothendieck basis (truncated at the cutoff).
    #[value(name = "G")]
    BigG,
}

#[derive(Args)]
struct FamilyArgs {
    /// Tableau family.
    #[arg(long, value_enum)]
    family: Family,
    /// Partition, comma-separated parts (empty string for the empty partition).
    #[arg(long)]
    mu: Option<String>,
    /// Second partition for the product family.
    #[arg(long)]
    nu: Option<String>,
    /// Permutation in one-line notation.
    #[arg(long)]
    sigma: Option<String>,
    /// Model file (JSON) for the file family.
    #[arg(long)]
    model: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountObject {
    Ssyt,
    Svt,
    Rpp,
    Elegant,
    #[value(name = "strict-elegant")]
    StrictElegant,
    #[value(name = "svt-by-content")]
    SvtByContent,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityCheck {
    #[value(name = "class-sum")]
    ClassSum,
    #[value(name = "hl-sum")]
    HlSum,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionMap {
    #[value(name = "svt-to-filling")]
    SvtToFilling,
    #[value(name = "filling-to-svt")]
    FillingToSvt,
    #[value(name = "rpp-to-filling")]
    RppToFilling,
    #[value(name = "filling-to-rpp")]
    FillingToRpp,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a tableau family in the s, g or G basis.
    Expand {
        #[command(flatten)]
        family: FamilyArgs,
        /// Target basis.
        #[arg(long, value_enum)]
        basis: BasisArg,
        /// Shape-size cutoff for G expansions (default: content size + 3).
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Cross-check the three expansions through the monomial oracle.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Number of variables for the monomial oracle.
        #[arg(long)]
        vars: usize,
        /// Maximum monomial degree compared.
        #[arg(long)]
        deg: usize,
        /// Shape-size cutoff for the G expansion (default: deg).
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Count tableaux or fillings.
    Count {
        /// What to count.
        #[arg(long, value_enum)]
        object: CountObject,
        #[arg(long)]
        shape: Option<String>,
        /// Evaluation (letter multiplicities), comma-separated.
        #[arg(long)]
        ev: Option<String>,
        #[arg(long)]
        max_letter: Option<usize>,
        /// Outer and inner shapes for elegant fillings.
        #[arg(long)]
        outer: Option<String>,
        #[arg(long)]
        inner: Option<String>,
        /// Total element count for svt-by-content.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Check the signed-sum identities; exit 1 when they fail.
    Identity {
        #[arg(long, value_enum)]
        check: IdentityCheck,
        /// Tableau file (JSON rows) for class-sum.
        #[arg(long)]
        tableau: Option<PathBuf>,
        /// Partition for hl-sum.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Apply the elegant-filling bijections.
    Bijection {
        #[arg(long, value_enum)]
        map: BijectionMap,
        /// Target tableau file (JSON rows).
        #[arg(long)]
        tableau: PathBuf,
        /// Input object file (JSON).
        #[arg(long)]
        input: PathBuf,
    },
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| anyhow!("bad integer {p:?}: {e}"))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition> {
    Ok(Partition::new(parse_parts(s)?)?)
}

fn required_partition(opt: &Option<String>, flag: &str) -> Result<Partition> {
    let s = opt
        .as_ref()
        .ok_or_else(|| anyhow!("--{flag} is required here"))?;
    parse_partition(s)
}

fn build_model(args: &FamilyArgs) -> Result<TableauModel> {
    let model = match args.family {
        Family::Hl => TableauModel::hall_littlewood(&required_partition(&args.mu, "mu")?)?,
        Family::Lr => {
            let mu = required_partition(&args.mu, "mu")?;
            let nu = match &args.nu {
                Some(s) => parse_partition(s)?,
                None => Partition::empty(),
            };
            TableauModel::lr_product(&mu, &nu)?
        }
        Family::MacdonaldQ1 => TableauModel::macdonald_q1(&required_partition(&args.mu, "mu")?)?,
        Family::Stanley => {
            let s = args
                .sigma
                .as_ref()
                .ok_or_else(|| anyhow!("--sigma is required for the stanley family"))?;
            let sigma = Permutation::new(parse_parts(s)?)?;
            TableauModel::stanley(&sigma)?
        }
        Family::File => {
            let path = args
                .model
                .as_ref()
                .ok_or_else(|| anyhow!("--model is required for the file family"))?;
            TableauModel::from_json_file(path)
                .with_context(|| format!("reading model {}", path.display()))?
        }
    };
    Ok(model)
}

fn render_symfunc(f: &SymFunc, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(f).expect("serializable");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut out = format!("basis {}", f.basis().tag());
            if let Some(d) = f.cutoff() {
                out.push_str(&format!(" (cutoff {d})"));
            }
            out.push('\n');
            let width = f
                .terms()
                .map(|(p, _)| p.to_string().len())
                .max()
                .unwrap_or(2);
            for (p, c) in f.terms() {
                out.push_str(&format!("{:width$}  {}\n", p.to_string(), c));
            }
            out
        }
    }
}

fn read_json_file<T: serde::de::DeserializeOwned>(path: &PathBuf, what: &str) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {what} {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {what} {}", path.display()))
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Expand {
            family,
            basis,
            cutoff,
        } => {
            let model = build_model(family)?;
            let f = match basis {
                BasisArg::S => model.schur_expansion(),
                BasisArg::G => model.dual_expansion(),
                BasisArg::BigG => {
                    let d = cutoff.unwrap_or(model.content_size() + 3);
                    model.grothendieck_expansion(d)?
                }
            };
            print!("{}", render_symfunc(&f, cli.format));
            Ok(0)
        }
        Command::Verify {
            family,
            vars,
            deg,
            cutoff,
        } => {
            let model = build_model(family)?;
            let report = model.verify(*vars, *deg, cutoff.unwrap_or(*deg))?;
            if report.is_ok() {
                match cli.format {
                    Format::Json => println!("{}", serde_json::json!({"ok": true})),
                    Format::Table => println!("OK"),
                }
                Ok(0)
            } else {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
                Ok(1)
            }
        }
        Command::Count {
            object,
            shape,
            ev,
            max_letter,
            outer,
            inner,
            size,
        } => {
            let count = match object {
                CountObject::Ssyt => {
                    let shape = required_partition(shape, "shape")?;
                    match (ev, max_letter) {
                        (Some(e), None) => {
                            enumerate_ssyt(&shape, &Evaluation::new(parse_parts(e)?)).len()
                        }
                        (None, Some(l)) => enumerate_ssyt_bounded(&shape, *l).len(),
                        _ => return Err(anyhow!("give exactly one of --ev and --max-letter")),
                    }
                }
                CountObject::Svt => {
                    let shape = required_partition(shape, "shape")?;
                    let e = ev.as_ref().ok_or_else(|| anyhow!("--ev is required"))?;
                    enumerate_svt(&shape, &Evaluation::new(parse_parts(e)?)).len()
                }
                CountObject::Rpp => {
                    let shape = required_partition(shape, "shape")?;
                    match (ev, max_letter) {
                        (Some(e), None) => {
                            enumerate_rpp(&shape, &Evaluation::new(parse_parts(e)?)).len()
                        }
                        (None, Some(l)) => enumerate_rpp_bounded(&shape, *l).len(),
                        _ => return Err(anyhow!("give exactly one of --ev and --max-letter")),
                    }
                }
                CountObject::Elegant | CountObject::StrictElegant => {
                    let outer = required_partition(outer, "outer")?;
                    let inner = required_partition(inner, "inner")?;
                    let strict = matches!(object, CountObject::StrictElegant);
                    enumerate_elegant(&outer, &inner, strict).len()
                }
                CountObject::SvtByContent => {
                    let n = size.ok_or_else(|| anyhow!("--size is required"))?;
                    let l = max_letter.ok_or_else(|| anyhow!("--max-letter is required"))?;
                    enumerate_svt_by_content(n, l).len()
                }
            };
            match cli.format {
                Format::Json => println!("{}", serde_json::json!({ "count": count })),
                Format::Table => println!("{count}"),
            }
            Ok(0)
        }
        Command::Identity { check, tableau, mu } => {
            let (label, value, expected) = match check {
                IdentityCheck::ClassSum => {
                    let path = tableau
                        .as_ref()
                        .ok_or_else(|| anyhow!("--tableau is required for class-sum"))?;
                    let t: Tableau = read_json_file(path, "tableau")?;
                    let expected = if t.shape().rows() <= 1 {
                        IntPoly::one()
                    } else {
                        IntPoly::zero()
                    };
                    ("class-sum", class_signed_sum(&t), expected)
                }
                IdentityCheck::HlSum => {
                    let mu = required_partition(mu, "mu")?;
                    let expected = IntPoly::monomial(mu.n_statistic());
                    ("hl-sum", hall_littlewood_coefficient_sum(&mu)?, expected)
                }
            };
            let ok = value == expected;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "check": label,
                        "value": value.coeffs(),
                        "expected": expected.coeffs(),
                        "ok": ok,
                    })
                ),
                Format::Table => println!(
                    "{label}: value {value}, expected {expected}: {}",
                    if ok { "OK" } else { "MISMATCH" }
                ),
            }
            Ok(u8::from(!ok))
        }
        Command::Bijection {
            map,
            tableau,
            input,
        } => {
            let t: Tableau = read_json_file(tableau, "tableau")?;
            let rendered = match map {
                BijectionMap::SvtToFilling => {
                    let s: SetValuedTableau = read_json_file(input, "set-valued tableau")?;
                    serde_json::to_string(&svt_to_filling(&t, &s)?)
                }
                BijectionMap::FillingToSvt => {
                    let f: ElegantFilling = read_json_file(input, "filling")?;
                    serde_json::to_string(&filling_to_svt(&t, &f)?)
                }
                BijectionMap::RppToFilling => {
                    let r: ReversePlanePartition = read_json_file(input, "plane partition")?;
                    serde_json::to_string(&rpp_to_filling(&t, &r)?)
                }
                BijectionMap::FillingToRpp => {
                    let f: ElegantFilling = read_json_file(input, "filling")?;
                    serde_json::to_string(&filling_to_rpp(&t, &f)?)
                }
            }
            .expect("serializable");
            println!("{rendered}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": format!("{e:#}") }));
            ExitCode::from(2)
        }
    }
}
