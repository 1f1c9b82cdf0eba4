//! The `bruhat` command line: compute and cross-check minors, export path
//! graphs, print exchange matrices, run mutations and torus changes of
//! variables.
//!
//! Exit codes: 0 on success, 1 when computations disagree (or an exchange
//! relation fails to divide), 2 on bad arguments or I/O failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::closedform::{self, CVariant};
use crate::cluster::{self, ClusterError};
use crate::factorize::{self, TorusPoint};
use crate::laurent::LaurentPoly;
use crate::pathsum::{self, DrawablePath};
use crate::repb;
use crate::rootdata::{MinorSpec, Word};

#[derive(Debug, Parser)]
#[command(name = "bruhat", version, about = "Generalized minors on type B double Bruhat cells")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute Δ^L(k) (or Δ^G(k) with --g) by one or all methods.
    Minor {
        #[command(flatten)]
        word: WordArgs,
        /// Word position; negative values -1..-r select the initial minors.
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Method::Rep)]
        method: Method,
        #[arg(long = "c-variant", value_enum, default_value_t = CVariantArg::Theorem)]
        c_variant: CVariantArg,
        /// Include the torus factor (minor on the full cell).
        #[arg(long)]
        g: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Cross-check all methods over every (rank, length, k) in a range.
    Sweep {
        #[arg(long = "min-rank", default_value_t = 2)]
        min_rank: u32,
        #[arg(long = "max-rank", default_value_t = 4)]
        max_rank: u32,
        #[arg(long = "c-variant", value_enum, default_value_t = CVariantArg::Theorem)]
        c_variant: CVariantArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// List the paths of a minor, or draw them as a DOT graph.
    Paths {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// Also write the DOT graph to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Print the exchange matrix of the word.
    Bmatrix {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Mutate the initial seed of minors along the given directions.
    Mutate {
        #[command(flatten)]
        word: WordArgs,
        /// Directions, comma separated, applied left to right.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<i64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Evaluate the torus change of variables, or check its properties.
    Factor {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Test the inverse and the operator identity at random points.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// A point as JSON: {"a": [...], "y": {"Y_1_1": "2/3", ...}}.
        #[arg(long)]
        point: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[arg(long)]
    pub rank: u32,
    /// Length of the word 1..r 1..r ...
    #[arg(long, required_unless_present = "word")]
    pub length: Option<usize>,
    /// The word itself, comma separated; must be a prefix of (1..r)^r.
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Rep,
    Paths,
    Closed,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CVariantArg {
    Lemma,
    Theorem,
}

impl From<CVariantArg> for CVariant {
    fn from(v: CVariantArg) -> CVariant {
        match v {
            CVariantArg::Lemma => CVariant::Lemma,
            CVariantArg::Theorem => CVariant::Theorem,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) | Failure::Io(_) => 2,
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

impl WordArgs {
    fn resolve(&self) -> Result<Word, Failure> {
        let w = match (&self.word, self.length) {
            (Some(letters), _) => Word::from_letters(self.rank, letters).map_err(usage)?,
            (None, Some(n)) => Word::new(self.rank, n).map_err(usage)?,
            (None, None) => return Err(Failure::Usage("give --length or --word".into())),
        };
        if let (Some(_), Some(n)) = (&self.word, self.length) {
            if n != w.n {
                return Err(Failure::Usage(format!("--length {n} does not match the word length {}", w.n)));
            }
        }
        Ok(w)
    }
}

fn spec_for(word: &WordArgs, k: i64) -> Result<MinorSpec, Failure> {
    MinorSpec::new(word.resolve()?, k).map_err(usage)
}

fn poly_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(p.to_json()).expect("polynomials serialize")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

/// The three evaluations; `None` where a method does not apply.
fn evaluate(spec: &MinorSpec, method: Method, variant: CVariant) -> Vec<(&'static str, Option<LaurentPoly>)> {
    let want = |m: Method| method == m || method == Method::All;
    let mut out = Vec::new();
    if want(Method::Rep) {
        out.push(("rep", Some(repb::minor_l(spec))));
    }
    if want(Method::Paths) {
        let v = if spec.is_spin() { pathsum::spin_path_sum(spec) } else { pathsum::vector_path_sum(spec) };
        out.push(("paths", v.ok()));
    }
    if want(Method::Closed) {
        let v = if spec.is_spin() {
            closedform::thm2_minor(spec)
        } else {
            closedform::thm1_minor_with(spec, variant)
        };
        out.push(("closed", v.ok()));
    }
    out
}

fn all_match(results: &[(&str, Option<LaurentPoly>)]) -> bool {
    let vals: Vec<&LaurentPoly> = results.iter().filter_map(|(_, v)| v.as_ref()).collect();
    vals.windows(2).all(|w| w[0] == w[1])
}

fn cmd_minor(word: &WordArgs, k: i64, method: Method, variant: CVariant, g: bool, fmt: Format) -> Outcome {
    let spec = spec_for(word, k)?;
    let results = evaluate(&spec, method, variant);
    let torus = repb::torus_monomial(&crate::rootdata::u_leq_weight(&spec));
    let lift = |p: &LaurentPoly| if g { &torus * p } else { p.clone() };
    let Some(main) = results.iter().find_map(|(_, v)| v.as_ref()).map(lift) else {
        return Err(Failure::Usage(format!("{spec}: method not available (it needs k >= 1)")));
    };
    let ok = all_match(&results);
    let verdict = if ok { "MATCH" } else { "MISMATCH" };
    let text = match fmt {
        Format::Json => {
            let methods: serde_json::Map<String, Value> = results
                .iter()
                .map(|(name, v)| (name.to_string(), v.as_ref().map_or(Value::Null, |p| poly_json(&lift(p)))))
                .collect();
            let mut v = json!({
                "rank": spec.r(), "length": spec.n(), "k": spec.k,
                "cell": if g { "G" } else { "L" },
                "polynomial": poly_json(&main),
                "methods": methods,
            });
            if method == Method::All {
                v["verdict"] = json!(verdict);
            }
            pretty(&v)
        }
        Format::Text => {
            let mut s = format!("{main}\n");
            if method == Method::All {
                for (name, v) in &results {
                    match v {
                        Some(p) => s += &format!("{name}: {} terms\n", p.len()),
                        None => s += &format!("{name}: not applicable\n"),
                    }
                }
                s += &format!("{verdict}\n");
            }
            s
        }
        Format::Dot => return Err(Failure::Usage("minor has no dot output".into())),
    };
    Ok((text, ok))
}

/// One row of a sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub r: u32,
    pub n: usize,
    pub k: i64,
    pub d: u32,
    pub paths: u64,
    pub terms: usize,
    pub rep_paths: bool,
    pub rep_closed: bool,
}

impl SweepRow {
    pub fn ok(&self) -> bool {
        self.rep_paths && self.rep_closed
    }
}

/// Every spec with `k >= 1` and rank in the range, checked in parallel.
pub fn sweep_rows(min_rank: u32, max_rank: u32, variant: CVariant) -> Vec<SweepRow> {
    let specs: Vec<MinorSpec> = (min_rank.max(2)..=max_rank)
        .flat_map(|r| {
            (1..=(r * r) as usize).flat_map(move |n| {
                (1..=n as i64).map(move |k| MinorSpec::new(Word { r, n }, k).expect("in range"))
            })
        })
        .collect();
    specs
        .par_iter()
        .map(|spec| {
            let rep = repb::minor_l(spec);
            let (paths, via_paths) = if spec.is_spin() {
                let p = pathsum::enumerate_spin_paths(spec).expect("k >= 1");
                (p.len() as u64, pathsum::spin_path_sum(spec).expect("k >= 1"))
            } else {
                (
                    pathsum::count_vector_paths(spec).expect("k >= 1"),
                    pathsum::vector_path_sum(spec).expect("k >= 1"),
                )
            };
            let closed = if spec.is_spin() {
                closedform::thm2_minor(spec).expect("k >= 1")
            } else {
                closedform::thm1_minor_with(spec, variant).expect("k >= 1")
            };
            SweepRow {
                r: spec.r(),
                n: spec.n(),
                k: spec.k,
                d: spec.d(),
                paths,
                terms: rep.len(),
                rep_paths: rep == via_paths,
                rep_closed: rep == closed,
            }
        })
        .collect()
}

fn cmd_sweep(min_rank: u32, max_rank: u32, variant: CVariant, fmt: Format) -> Outcome {
    let rows = sweep_rows(min_rank, max_rank, variant);
    let ok = rows.iter().all(SweepRow::ok);
    let mark = |b: bool| if b { "MATCH" } else { "MISMATCH" };
    let text = match fmt {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|r| {
                    json!({"rank": r.r, "length": r.n, "k": r.k, "d": r.d, "paths": r.paths,
                           "terms": r.terms, "paths_verdict": mark(r.rep_paths),
                           "closed_verdict": mark(r.rep_closed)})
                })
                .collect(),
        )),
        Format::Text => {
            let mut s = format!("{:>2} {:>3} {:>3} {:>2} {:>7} {:>6}  {:<9} {:<9}\n", "r", "n", "k", "d", "paths", "terms", "vs-paths", "vs-closed");
            for r in &rows {
                s += &format!(
                    "{:>2} {:>3} {:>3} {:>2} {:>7} {:>6}  {:<9} {:<9}\n",
                    r.r, r.n, r.k, r.d, r.paths, r.terms, mark(r.rep_paths), mark(r.rep_closed)
                );
            }
            let bad = rows.iter().filter(|r| !r.ok()).count();
            s += &format!("{} specs, {} mismatches\n", rows.len(), bad);
            s
        }
        Format::Dot => return Err(Failure::Usage("sweep has no dot output".into())),
    };
    Ok((text, ok))
}

fn path_json<P: DrawablePath>(p: &P, label: &LaurentPoly) -> Value {
    let names: Vec<String> = p.vertices().into_iter().map(|(_, n)| n).collect();
    json!({"vertices": names, "edges": p.edges().iter().map(|e| e.to_string()).collect::<Vec<_>>(), "label": label.to_string()})
}

fn path_text<P: DrawablePath>(i: usize, p: &P, label: &LaurentPoly) -> String {
    let names: Vec<String> = p.vertices().into_iter().map(|(_, n)| n).collect();
    format!("p{}: {}  label {}\n", i + 1, names.join(" -> "), label)
}

fn render_paths<P: DrawablePath>(paths: &[P], labels: &[&LaurentPoly], fmt: Format) -> String {
    match fmt {
        Format::Dot => pathsum::export_dot(paths),
        Format::Json => pretty(&json!({
            "count": paths.len(),
            "paths": paths.iter().zip(labels).map(|(p, l)| path_json(p, l)).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s: String = paths.iter().zip(labels).enumerate().map(|(i, (p, l))| path_text(i, p, l)).collect();
            s += &format!("{} paths\n", paths.len());
            s
        }
    }
}

fn cmd_paths(word: &WordArgs, k: i64, dot: Option<&PathBuf>, fmt: Format) -> Outcome {
    let spec = spec_for(word, k)?;
    let (text, dot_text) = if spec.is_spin() {
        let paths = pathsum::enumerate_spin_paths(&spec).map_err(usage)?;
        let labels: Vec<&LaurentPoly> = paths.iter().map(|p| &p.label).collect();
        (render_paths(&paths, &labels, fmt), pathsum::export_dot(&paths))
    } else {
        let paths = pathsum::enumerate_vector_paths(&spec).map_err(usage)?;
        let labels: Vec<&LaurentPoly> = paths.iter().map(|p| &p.label).collect();
        (render_paths(&paths, &labels, fmt), pathsum::export_dot(&paths))
    };
    if let Some(path) = dot {
        std::fs::write(path, dot_text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok((text, true))
}

fn cmd_bmatrix(word: &WordArgs, fmt: Format) -> Outcome {
    let w = word.resolve()?;
    let b = cluster::build_bmatrix(&w);
    let d = cluster::find_symmetrizer(&b.principal_part());
    let text = match fmt {
        Format::Json => pretty(&json!({"matrix": b, "symmetrizer": d})),
        Format::Text => {
            let d = d.map_or("none".to_string(), |d| format!("{d:?}"));
            format!("{b}symmetrizer: {d}\n")
        }
        Format::Dot => return Err(Failure::Usage("bmatrix has no dot output".into())),
    };
    Ok((text, true))
}

fn cmd_mutate(word: &WordArgs, dirs: &[i64], fmt: Format) -> Outcome {
    let w = word.resolve()?;
    let mut seed = cluster::initial_seed(&w);
    let mut steps = Vec::new();
    for &k in dirs {
        seed = match cluster::exchange_step(&seed, k) {
            Ok(s) => s,
            Err(e @ ClusterError::BadDirection(_)) => return Err(usage(e)),
            Err(e) => return Err(Failure::Mismatch(e.to_string())),
        };
        steps.push((k, seed.cluster[&k].clone()));
    }
    let text = match fmt {
        Format::Json => pretty(&json!({
            "directions": dirs,
            "new_variables": steps.iter().map(|(k, p)| json!({"k": k, "value": poly_json(p)})).collect::<Vec<_>>(),
            "matrix": seed.exchange,
        })),
        Format::Text => {
            let mut s = String::new();
            for (k, p) in &steps {
                s += &format!("x'[{k}] = {p}\n");
            }
            s += &seed.exchange.to_string();
            s
        }
        Format::Dot => return Err(Failure::Usage("mutate has no dot output".into())),
    };
    Ok((text, true))
}

fn cmd_factor(word: &WordArgs, seed: u64, check: bool, trials: usize, point: Option<&PathBuf>, fmt: Format) -> Outcome {
    let w = word.resolve()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if check {
        let mut inverse_ok = true;
        let mut identity_ok = true;
        for _ in 0..trials {
            let p = TorusPoint::random(&w, &mut rng);
            let q = factorize::phi(&p, &w).map_err(usage)?;
            inverse_ok &= factorize::psi(&q, &w).map_err(usage)? == p;
            identity_ok &= factorize::operator_identity_holds(&p, &w).map_err(usage)?;
        }
        let word = |b: bool| if b { "OK" } else { "FAIL" };
        let ok = inverse_ok && identity_ok;
        let text = match fmt {
            Format::Json => pretty(&json!({"trials": trials, "inverse": word(inverse_ok), "operator_identity": word(identity_ok)})),
            _ => format!("phi/psi inverse: {}; operator identity: {}\n", word(inverse_ok), word(identity_ok)),
        };
        return Ok((text, ok));
    }
    let p = match point {
        Some(path) => {
            let raw = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let v: Value = serde_json::from_str(&raw).map_err(usage)?;
            TorusPoint::from_json(&v).map_err(usage)?
        }
        None => TorusPoint::random(&w, &mut rng),
    };
    let phi = factorize::phi(&p, &w).map_err(usage)?;
    let psi = factorize::psi(&p, &w).map_err(usage)?;
    let text = match fmt {
        Format::Json => pretty(&json!({"point": p.to_json(), "phi": phi.to_json(), "psi": psi.to_json()})),
        _ => format!("point: {}\nphi:   {}\npsi:   {}\n", p.to_json(), phi.to_json(), psi.to_json()),
    };
    Ok((text, true))
}

fn dispatch(cli: &Cli) -> Result<(String, bool, Option<PathBuf>), Failure> {
    let (res, out) = match &cli.command {
        Command::Minor { word, k, method, c_variant, g, out } => {
            (cmd_minor(word, *k, *method, (*c_variant).into(), *g, out.format), out)
        }
        Command::Sweep { min_rank, max_rank, c_variant, out } => {
            (cmd_sweep(*min_rank, *max_rank, (*c_variant).into(), out.format), out)
        }
        Command::Paths { word, k, dot, out } => (cmd_paths(word, *k, dot.as_ref(), out.format), out),
        Command::Bmatrix { word, out } => (cmd_bmatrix(word, out.format), out),
        Command::Mutate { word, k, out } => (cmd_mutate(word, k, out.format), out),
        Command::Factor { word, seed, check, trials, point, out } => {
            (cmd_factor(word, *seed, *check, *trials, point.as_ref(), out.format), out)
        }
    };
    let (text, ok) = res?;
    Ok((text, ok, out.out.clone()))
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, ok, dest)) => {
            let written = match dest {
                Some(path) => std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Io(m) | Failure::Mismatch(m) => m.clone(),
            };
            let _ = writeln!(stderr, "error: {msg}");
            f.code()
        }
    }
}
