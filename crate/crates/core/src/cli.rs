//! Command-line front end. [`run`] parses argv, dispatches, and writes the
//! result to the given stream; the binary is a thin wrapper around it.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::check::{self, Suite};
use crate::error::{Error, Result};
use crate::kostka::{KostkaCalculator, KostkaOptions, DEFAULT_MAX_RANK};
use crate::orbits::{self, OrbitLabel};
use crate::partfn::{l_oracle, PartitionEngine, DEFAULT_ORACLE_BOUND};
use crate::rootdata::{odd_positive_roots, DominantWeightPair, WeightJson, WeightVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LIMIT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "osp-kostka", version, about = "Super Kostka polynomials and orbit combinatorics for osp(2n+1|2n)")]
struct Cli {
    /// Largest rank the tool will enumerate the Weyl group for.
    #[arg(long, global = true, env = "OSP_KOSTKA_MAX_RANK", default_value_t = DEFAULT_MAX_RANK)]
    max_rank: usize,

    /// Largest height the brute-force oracle accepts.
    #[arg(long, global = true, env = "OSP_KOSTKA_ORACLE_BOUND", default_value_t = DEFAULT_ORACLE_BOUND)]
    oracle_bound: i64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the odd positive roots with their heights.
    Roots {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The q-graded partition function L_α(q).
    Lpoly(LpolyArgs),
    /// The super Kostka polynomial K_{(λ₁,λ₀),(μ₁,μ₀)}(q).
    Kostka {
        #[command(flatten)]
        pair: PairArgs,
        /// Also print every surviving Weyl-pair term.
        #[arg(long)]
        expand: bool,
    },
    /// The IC-stalk Poincaré polynomial q^{-dim}·K(q^{-1}).
    Stalk {
        #[command(flatten)]
        pair: PairArgs,
        /// Dimension of the orbit labelled by μ.
        #[arg(long, allow_hyphen_values = true)]
        dim: i64,
    },
    /// Representative and stabilizer type for a label (θ, ζ).
    Orbit {
        #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
        theta: IntList,
        #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
        zeta: IntList,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The closure order on labels with bounded parts, as a Hasse diagram.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        bound: i64,
        #[arg(long, default_value_t = orbits::DEFAULT_LABEL_LIMIT)]
        label_limit: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Duality on signatures, and the self-dual signature of a partition.
    Dual {
        #[arg(long, value_parser = int_list, allow_hyphen_values = true, conflicts_with = "theta", required_unless_present = "theta")]
        sig: Option<IntList>,
        #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
        theta: Option<IntList>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the built-in identity checks.
    Check {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct LpolyArgs {
    #[arg(long, required_unless_present = "alpha")]
    n: Option<usize>,
    /// δ-side coordinates.
    #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
    delta: Option<IntList>,
    /// ε-side coordinates.
    #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
    eps: Option<IntList>,
    /// A weight as JSON, `{"n":1,"delta":[1],"eps":[1]}`, as printed by `roots`.
    #[arg(long, conflicts_with_all = ["n", "delta", "eps"])]
    alpha: Option<String>,
    /// Evaluate with the brute-force enumerator instead.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
    lam1: Option<IntList>,
    #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
    lam0: Option<IntList>,
    #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
    mu1: Option<IntList>,
    #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
    mu0: Option<IntList>,
    /// Worker threads for the Weyl-pair sum.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Debug)]
struct IntList(Vec<i64>);

fn int_list(s: &str) -> std::result::Result<IntList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<std::result::Result<_, _>>()
        .map(IntList)
}

/// Parse `argv` (program name first), run the command, write to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, ok)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_LIMIT;
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_LIMIT
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_limit() || matches!(e, Error::Internal(_)) {
                EXIT_LIMIT
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn only(format: Format, allowed: &[Format]) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Error::Parse(format!("format {format:?} is not available for this command").to_lowercase()))
    }
}

fn sized(n: usize, list: &Option<IntList>) -> Result<Vec<i64>> {
    match list {
        None => Ok(vec![0; n]),
        Some(IntList(v)) if v.len() == n => Ok(v.clone()),
        Some(IntList(v)) => Err(Error::LengthMismatch { expected: n, got: v.len() }),
    }
}

fn check_rank(n: usize, max_rank: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    if n > max_rank {
        return Err(Error::RankOverLimit { n, limit: max_rank });
    }
    Ok(())
}

impl PairArgs {
    fn pairs(&self, max_rank: usize) -> Result<(DominantWeightPair, DominantWeightPair)> {
        check_rank(self.n, max_rank)?;
        if self.jobs == 0 {
            return Err(Error::Parse("--jobs must be at least 1".into()));
        }
        only(self.format, &[Format::Json, Format::Text])?;
        let lam = DominantWeightPair::new(&sized(self.n, &self.lam1)?, &sized(self.n, &self.lam0)?)?;
        let mu = DominantWeightPair::new(&sized(self.n, &self.mu1)?, &sized(self.n, &self.mu0)?)?;
        Ok((lam, mu))
    }

    fn calculator(&self, max_rank: usize) -> Result<KostkaCalculator> {
        KostkaCalculator::new(self.n, KostkaOptions { jobs: self.jobs, max_rank })
    }
}

/// Returns the rendered output and whether the command succeeded; only
/// `check` can produce output together with a failure.
fn dispatch(cli: &Cli) -> Result<(String, bool)> {
    if cli.oracle_bound < 0 {
        return Err(Error::Parse("--oracle-bound must be nonnegative".into()));
    }
    let max_rank = cli.max_rank;
    let text = match &cli.command {
        Command::Roots { n, format } => {
            only(*format, &[Format::Json, Format::Text])?;
            check_rank(*n, max_rank)?;
            let sys = odd_positive_roots(*n)?;
            match format {
                Format::Json => {
                    let roots = sys
                        .roots()
                        .iter()
                        .map(|r| Ok(json!({"root": r.to_json()?, "height": sys.height().eval(r)?})))
                        .collect::<Result<Vec<_>>>()?;
                    line(json!({
                        "n": n,
                        "count": sys.len(),
                        "height": sys.height(),
                        "roots": roots,
                    }))
                }
                _ => {
                    let mut s = format!("{} odd positive roots, n = {n}\n", sys.len());
                    for (i, r) in sys.roots().iter().enumerate() {
                        s.push_str(&format!("{:>4}  {:<12} h = {}\n", i, r.to_string(), sys.height().eval(r)?));
                    }
                    s
                }
            }
        }
        Command::Lpoly(a) => {
            only(a.format, &[Format::Json, Format::Text])?;
            let alpha = match &a.alpha {
                Some(s) => {
                    let j: WeightJson =
                        serde_json::from_str(s).map_err(|e| Error::Parse(format!("--alpha: {e}")))?;
                    WeightVector::try_from(j)?
                }
                None => {
                    let n = a.n.expect("clap enforces --n without --alpha");
                    WeightVector::new(&sized(n, &a.delta)?, &sized(n, &a.eps)?)?
                }
            };
            check_rank(alpha.rank(), max_rank)?;
            let engine = PartitionEngine::new(alpha.rank())?;
            let p = if a.oracle {
                l_oracle(&alpha, engine.system(), cli.oracle_bound)?
            } else {
                engine.l_poly(&alpha)?
            };
            match a.format {
                Format::Json => line(to_json_value(&p)?),
                _ => format!("L_{{{alpha}}}(q) = {p}\n"),
            }
        }
        Command::Kostka { pair, expand } => {
            let (lam, mu) = pair.pairs(max_rank)?;
            let calc = pair.calculator(max_rank)?;
            let k = calc.kostka(&lam, &mu)?;
            let terms = if *expand {
                calc.expansion(&lam, &mu)?.into_iter().filter(|t| !t.value.is_zero()).collect()
            } else {
                Vec::new()
            };
            match pair.format {
                Format::Json if *expand => {
                    let rows: Vec<Value> = terms
                        .iter()
                        .map(|t| {
                            Ok(json!({
                                "w": t.w.to_string(),
                                "w0": t.w0.to_string(),
                                "sign": t.sign,
                                "argument": t.argument.to_json()?,
                                "value": t.value,
                            }))
                        })
                        .collect::<Result<_>>()?;
                    let mut v = to_json_value(&k)?;
                    v["terms"] = Value::Array(rows);
                    line(v)
                }
                Format::Json => line(to_json_value(&k)?),
                _ => {
                    let mut s = format!("K_{{{lam},{mu}}}(q) = {k}\n");
                    for t in &terms {
                        let sign = if t.sign > 0 { '+' } else { '-' };
                        s.push_str(&format!("  {sign} w = {}, w0 = {}: L_{{{}}} = {}\n", t.w, t.w0, t.argument, t.value));
                    }
                    s
                }
            }
        }
        Command::Stalk { pair, dim } => {
            let (lam, mu) = pair.pairs(max_rank)?;
            let p = pair.calculator(max_rank)?.stalk(&lam, &mu, *dim)?;
            match pair.format {
                Format::Json => line(to_json_value(&p)?),
                _ => format!("IC stalk at {mu} in closure of {lam}: {p}\n"),
            }
        }
        Command::Orbit { theta, zeta, format } => {
            only(*format, &[Format::Json, Format::Text])?;
            let label = OrbitLabel::new(&theta.0, &zeta.0)?;
            check_rank(label.rank(), usize::MAX)?;
            let rep = orbits::orbit_representative(&label);
            let levi = orbits::levi_type(&label);
            let bisig = label.bisignature();
            match format {
                Format::Json => line(json!({
                    "theta": label.theta(),
                    "zeta": label.zeta(),
                    "weight": {"lam1": label.dominant_pair().lam1(), "lam0": label.dominant_pair().lam0()},
                    "bisignature": {"lam": bisig.lam(), "nu": bisig.nu()},
                    "representative": {
                        "vector_exponents": rep.vector_exponents,
                        "lattice_exponents": rep.lattice_exponents,
                        "self_dual": rep.is_self_dual(),
                    },
                    "stabilizer_levi": levi.to_string(),
                })),
                _ => format!(
                    "label        {label}\nweight       {}\nbisignature  λ={:?} ν={:?}\nv exponents  {:?}\nL exponents  {:?}\nLevi         {levi}\n",
                    label.dominant_pair(),
                    bisig.lam(),
                    bisig.nu(),
                    rep.vector_exponents,
                    rep.lattice_exponents,
                ),
            }
        }
        Command::Poset { n, bound, label_limit, format } => {
            check_rank(*n, max_rank)?;
            let h = orbits::closure_hasse(*bound, *n, *label_limit)?;
            match format {
                Format::Json => line(h.to_json()),
                Format::Dot => h.to_dot(),
                Format::Text => {
                    let mut s = format!("{} labels, {} covering relations\n", h.labels.len(), h.edges.len());
                    for (a, b) in &h.edges {
                        s.push_str(&format!("{}  >  {}\n", h.labels[*a], h.labels[*b]));
                    }
                    s
                }
            }
        }
        Command::Dual { sig, theta, format } => {
            only(*format, &[Format::Json, Format::Text])?;
            let (input, dual, partition) = match (sig, theta) {
                (Some(IntList(s)), _) => {
                    let d = orbits::dual_signature(s)?;
                    // odd-length self-dual signatures have no partition
                    let p = orbits::selfdual_to_partition(s).ok();
                    (s.clone(), d, p)
                }
                (None, Some(IntList(t))) => {
                    let s = orbits::partition_to_selfdual(t)?;
                    (s.clone(), s, Some(t.clone()))
                }
                (None, None) => unreachable!("clap requires --sig or --theta"),
            };
            match format {
                Format::Json => line(json!({
                    "signature": input,
                    "dual": dual,
                    "self_dual": input == dual,
                    "partition": partition,
                })),
                _ => {
                    let mut s = format!("{input:?}* = {dual:?}\n");
                    match partition {
                        Some(p) => s.push_str(&format!("self-dual, partition {p:?}\n")),
                        None if input == dual => s.push_str("self-dual\n"),
                        None => {}
                    }
                    s
                }
            }
        }
        Command::Check { suite, format } => {
            only(*format, &[Format::Json, Format::Text])?;
            let rows = check::run_suite(suite.parse()?, cli.oracle_bound);
            let all = rows.iter().all(|r| r.passed);
            let text = match format {
                Format::Json => line(json!({"passed": all, "results": rows})),
                _ => {
                    let width = rows.iter().map(|r| r.name.chars().count()).max().unwrap_or(0);
                    let mut s = String::new();
                    for r in &rows {
                        let pad = width - r.name.chars().count();
                        s.push_str(&format!(
                            "{} {:<12} {}{}  {}\n",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.suite,
                            r.name,
                            " ".repeat(pad),
                            r.detail
                        ));
                    }
                    let failed = rows.iter().filter(|r| !r.passed).count();
                    s.push_str(&format!("{} checks, {failed} failed\n", rows.len()));
                    s
                }
            };
            return Ok((text, all));
        }
    };
    Ok((text, true))
}

fn to_json_value<T: serde::Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Internal(e.to_string()))
}
