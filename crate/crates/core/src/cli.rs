//! The `arithsim` command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 on computation
//! errors. Errors other than argument parsing are written to the error stream
//! as a JSON object `{"error": {"kind": ..., "message": ...}}`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::arith::factorize;
use crate::cyclic_orbits::{self, CyclicAction, OrbitError};
use crate::equivalence::{self, EquivalenceError, LocalDatum, NotionKind};
use crate::multiset::Multiset;
use crate::numfield::{self, FieldError, FieldFile, NumberFieldSpec};
use crate::permgroup::{GroupError, GroupFile, PermGroup, Permutation, DEFAULT_MAX_ORDER};
use crate::statistics::{self, PrimeStatus, SplittingStatistic, StatError};

#[derive(Debug, Parser)]
#[command(
    name = "arithsim",
    version,
    about = "Prime splitting, splitting statistics and Gassmann-style group tests"
)]
pub struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized sampling step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest group order the closure will enumerate.
    #[arg(long, global = true, env = "ARITHSIM_MAX_GROUP_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    pub max_group_order: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting type and (f, e) shape of a prime in a number field.
    Split {
        /// Field file: {"label": ..., "coeffs": [...], "alt": {...}}.
        field: PathBuf,
        /// The rational prime.
        #[arg(short = 'p', long = "prime")]
        p: u64,
    },
    /// Compare a splitting statistic of two fields at every prime up to a bound.
    Scan {
        /// First field file.
        #[arg(long)]
        f1: PathBuf,
        /// Second field file.
        #[arg(long)]
        f2: PathBuf,
        /// One of full, min, gcd, lcm, one, card, totram.
        #[arg(long)]
        stat: SplittingStatistic,
        /// Largest prime examined.
        #[arg(long)]
        pmax: u64,
    },
    /// Coefficients a_1..a_X of the Dirichlet series attached to a statistic.
    Dirichlet {
        /// Field file.
        field: PathBuf,
        /// One of full, min, gcd, lcm, one, card, totram.
        #[arg(long, default_value = "full")]
        stat: SplittingStatistic,
        /// Number of coefficients X.
        #[arg(long)]
        limit: u64,
    },
    /// Group-theoretic equivalence tests.
    Gassmann {
        #[command(subcommand)]
        command: GassmannCommand,
    },
    /// Local splitting type: orbit sizes of <c> on the double cosets I\G/H.
    LocalSplit {
        #[command(flatten)]
        group: GroupArg,
        /// Generators of the inertia subgroup I as a JSON list of image arrays ("[]" for trivial).
        #[arg(long)]
        inertia: String,
        /// The Frobenius lift c as a JSON image array.
        #[arg(long)]
        frobenius: String,
        /// Generators of H as a JSON list of image arrays.
        #[arg(long)]
        subgroup: String,
        /// Also print the orbit-count table, N values and orbit spectrum.
        #[arg(long)]
        explain: bool,
    },
    /// Recover the orbit sizes of a cyclic action from its orbit-count table.
    OrbitFormula {
        /// Order n of the cyclic group.
        #[arg(long)]
        n: u64,
        /// Generator action: a JSON image array, "regular", or "trivial:<k>".
        #[arg(long)]
        gen: String,
        /// Also verify the trace identity for every window (T, m).
        #[arg(long)]
        check_lemma_tr: bool,
    },
    /// Group utilities.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// Group file: {"degree": d, "generators": [[...], ...]}.
    #[arg(long)]
    pub group: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum GassmannCommand {
    /// Decide whether two subgroups are related under a notion of equivalence.
    Check {
        #[command(flatten)]
        group: GroupArg,
        /// Generators of H1 as a JSON list of image arrays.
        #[arg(long)]
        h1: String,
        /// Generators of H2 as a JSON list of image arrays.
        #[arg(long)]
        h2: String,
        /// One of arith, kronecker, weak-kronecker, ultra-coarse.
        #[arg(long)]
        notion: NotionKind,
        /// Also compare local splitting types on this many random local data (uses --seed).
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Order, conjugacy class sizes and Sylow subgroup orders.
    Info {
        /// Group file.
        file: PathBuf,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Computation { kind: &'static str, message: String },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Computation { .. } => 2,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            CliError::Usage(message) => json!({"error": {"kind": "Usage", "message": message}}),
            CliError::Computation { kind, message } => {
                json!({"error": {"kind": kind, "message": message}})
            }
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        let kind = match e {
            FieldError::NotPMaximal { .. } => "NotPMaximal",
            FieldError::ZeroModP(_) => "ZeroModP",
            FieldError::NotSquareFree(_) => "NotSquareFree",
            _ => return CliError::Usage(e.to_string()),
        };
        CliError::Computation {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<StatError> for CliError {
    fn from(e: StatError) -> Self {
        match e {
            StatError::Field(f) => f.into(),
            StatError::Multiset(m) => CliError::Computation {
                kind: "Multiset",
                message: m.to_string(),
            },
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::GroupTooLarge { .. } => CliError::Computation {
                kind: "GroupTooLarge",
                message: e.to_string(),
            },
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<OrbitError> for CliError {
    fn from(e: OrbitError) -> Self {
        match e {
            OrbitError::NonIntegerResult { .. } | OrbitError::NegativeCount { .. } => {
                CliError::Computation {
                    kind: "OrbitFormula",
                    message: e.to_string(),
                }
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<EquivalenceError> for CliError {
    fn from(e: EquivalenceError) -> Self {
        match e {
            EquivalenceError::Group(g) => g.into(),
            EquivalenceError::Orbit(o) => o.into(),
            EquivalenceError::InvalidDatum(_) => CliError::Usage(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_json());
            e.exit_code()
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_field(path: &Path) -> Result<NumberFieldSpec, CliError> {
    let file: FieldFile = read_json(path)?;
    Ok(NumberFieldSpec::try_from(file)?)
}

fn load_group(path: &Path, cap: usize) -> Result<PermGroup, CliError> {
    let file: GroupFile = read_json(path)?;
    Ok(file.build(cap)?)
}

fn parse_json_arg<T: serde::de::DeserializeOwned>(flag: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn parse_generators(flag: &str, text: &str, degree: usize) -> Result<Vec<Permutation>, CliError> {
    let gens: Vec<Permutation> = parse_json_arg(flag, text)?;
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(CliError::Usage(format!(
            "--{flag}: permutation of degree {} in a group of degree {degree}",
            bad.degree()
        )));
    }
    Ok(gens)
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Computation {
        kind: "Io",
        message: e.to_string(),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Split { field, p } => split(cli, out, field, *p),
        Command::Scan { f1, f2, stat, pmax } => scan(cli, out, f1, f2, *stat, *pmax),
        Command::Dirichlet { field, stat, limit } => dirichlet(cli, out, field, *stat, *limit),
        Command::Gassmann {
            command:
                GassmannCommand::Check {
                    group,
                    h1,
                    h2,
                    notion,
                    samples,
                },
        } => gassmann_check(cli, out, &group.group, h1, h2, *notion, *samples),
        Command::LocalSplit {
            group,
            inertia,
            frobenius,
            subgroup,
            explain,
        } => local_split(
            cli,
            out,
            &group.group,
            inertia,
            frobenius,
            subgroup,
            *explain,
        ),
        Command::OrbitFormula {
            n,
            gen,
            check_lemma_tr,
        } => orbit_formula(cli, out, *n, gen, *check_lemma_tr),
        Command::Group {
            command: GroupCommand::Info { file },
        } => group_info(cli, out, file),
    }
}

#[derive(Serialize)]
struct SplitReport<'a> {
    field: &'a str,
    polynomial: String,
    p: u64,
    splitting_type: Multiset,
    /// `(f, e)` pairs.
    shape: Vec<(u32, u32)>,
    unramified: bool,
}

fn split(cli: &Cli, out: &mut dyn Write, path: &Path, p: u64) -> Result<(), CliError> {
    let field = load_field(path)?;
    let (s, shape) = numfield::splitting_type(&field, p)?;
    if cli.json {
        return emit(
            out,
            &SplitReport {
                field: field.label(),
                polynomial: field.poly_for_prime(p).to_string(),
                p,
                unramified: shape.is_unramified(),
                splitting_type: s,
                shape: shape.pairs,
            },
        );
    }
    writeln!(out, "field: {} ({})", field.label(), field.poly()).map_err(io_error)?;
    writeln!(out, "p = {p}").map_err(io_error)?;
    writeln!(out, "S = {s}").map_err(io_error)?;
    writeln!(out, "shape = {shape}").map_err(io_error)?;
    Ok(())
}

fn scan(
    cli: &Cli,
    out: &mut dyn Write,
    f1: &Path,
    f2: &Path,
    stat: SplittingStatistic,
    pmax: u64,
) -> Result<(), CliError> {
    if pmax < 2 {
        return Err(CliError::Usage("--pmax must be at least 2".into()));
    }
    let field1 = load_field(f1)?;
    let field2 = load_field(f2)?;
    let report = statistics::scan(&field1, &field2, stat, pmax);
    if cli.json {
        return emit(out, &report);
    }
    let show = |v: &Option<Multiset>| v.as_ref().map_or("?".to_string(), |m| m.to_string());
    writeln!(out, "statistic {stat}, primes up to {pmax}").map_err(io_error)?;
    writeln!(
        out,
        "{:>8}  {:>16}  {:>16}  status",
        "p",
        field1.label(),
        field2.label()
    )
    .map_err(io_error)?;
    for r in report
        .records
        .iter()
        .filter(|r| r.status != PrimeStatus::Equal)
    {
        let status = serde_json::to_value(r.status).expect("status serializes");
        writeln!(
            out,
            "{:>8}  {:>16}  {:>16}  {}",
            r.p,
            show(&r.value1),
            show(&r.value2),
            status.as_str().unwrap_or_default()
        )
        .map_err(io_error)?;
    }
    writeln!(out, "exceptional primes: {:?}", report.exceptional_primes).map_err(io_error)?;
    writeln!(
        out,
        "indeterminate primes: {:?}",
        report.indeterminate_primes
    )
    .map_err(io_error)?;
    writeln!(out, "ramified superset: {:?}", report.ramified_superset).map_err(io_error)?;
    Ok(())
}

fn dirichlet(
    cli: &Cli,
    out: &mut dyn Write,
    path: &Path,
    stat: SplittingStatistic,
    limit: u64,
) -> Result<(), CliError> {
    if limit < 1 {
        return Err(CliError::Usage("--limit must be at least 1".into()));
    }
    let field = load_field(path)?;
    let coeffs = statistics::dirichlet_coefficients(&field, stat, limit)?;
    if cli.json {
        return emit(out, &coeffs);
    }
    for (i, a) in coeffs.coeffs.iter().enumerate() {
        writeln!(out, "{:>8}  {a}", i + 1).map_err(io_error)?;
    }
    Ok(())
}

fn gassmann_check(
    cli: &Cli,
    out: &mut dyn Write,
    group_path: &Path,
    h1: &str,
    h2: &str,
    notion: NotionKind,
    samples: usize,
) -> Result<(), CliError> {
    let g = load_group(group_path, cli.max_group_order)?;
    let h1 = g.subgroup(&parse_generators("h1", h1, g.degree())?)?;
    let h2 = g.subgroup(&parse_generators("h2", h2, g.degree())?)?;
    let holds = equivalence::check_notion(&g, &h1, &h2, notion);
    let conjugate = g.are_conjugate(&h1, &h2);
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let data = if samples > 0 {
        equivalence::sample_local_data(&g, samples, &mut rng)
    } else {
        Vec::new()
    };
    let disagreements = data
        .iter()
        .filter(|d| {
            equivalence::local_splitting_type(&g, d, &h1)
                != equivalence::local_splitting_type(&g, d, &h2)
        })
        .count();
    if cli.json {
        return emit(
            out,
            &json!({
                "group_order": g.order(),
                "h1_order": h1.order(),
                "h2_order": h2.order(),
                "notion": notion,
                "holds": holds,
                "conjugate": conjugate,
                "local_samples": data.len(),
                "local_disagreements": disagreements,
            }),
        );
    }
    writeln!(
        out,
        "|G| = {}, |H1| = {}, |H2| = {}",
        g.order(),
        h1.order(),
        h2.order()
    )
    .map_err(io_error)?;
    writeln!(out, "{notion}: {holds}").map_err(io_error)?;
    writeln!(out, "conjugate: {conjugate}").map_err(io_error)?;
    if !data.is_empty() {
        writeln!(
            out,
            "local splitting types differ on {disagreements} of {} sampled data",
            data.len()
        )
        .map_err(io_error)?;
    }
    Ok(())
}

fn local_split(
    cli: &Cli,
    out: &mut dyn Write,
    group_path: &Path,
    inertia: &str,
    frobenius: &str,
    subgroup: &str,
    explain: bool,
) -> Result<(), CliError> {
    let g = load_group(group_path, cli.max_group_order)?;
    let inertia = parse_generators("inertia", inertia, g.degree())?;
    let c: Permutation = parse_json_arg("frobenius", frobenius)?;
    let h = g.subgroup(&parse_generators("subgroup", subgroup, g.degree())?)?;
    let datum = LocalDatum::from_permutations(&g, &inertia, &c)?;
    let s = equivalence::local_splitting_type(&g, &datum, &h);
    if !explain {
        if cli.json {
            return emit(out, &json!({ "splitting_type": s }));
        }
        return writeln!(out, "S = {s}").map_err(io_error);
    }
    let formula = equivalence::local_splitting_via_formula(&g, &datum, &h)?;
    if cli.json {
        return emit(out, &json!({ "splitting_type": s, "formula": formula }));
    }
    writeln!(out, "S = {s}").map_err(io_error)?;
    writeln!(out, "{:>6}  {:>6}  {:>6}  {:>6}", "m", "M_m", "N_m", "a_m").map_err(io_error)?;
    for (&m, &count) in formula.table.counts() {
        writeln!(
            out,
            "{m:>6}  {count:>6}  {:>6}  {:>6}",
            formula.n_values[&m],
            formula.spectrum.get(m)
        )
        .map_err(io_error)?;
    }
    writeln!(out, "formula agrees: {}", formula.splitting_type == s).map_err(io_error)?;
    Ok(())
}

#[derive(Serialize)]
struct OrbitFormulaReport {
    n: u64,
    set_size: u64,
    table: BTreeMap<u64, u64>,
    n_values: BTreeMap<u64, u64>,
    spectrum: BTreeMap<u64, u64>,
    oracle: BTreeMap<u64, u64>,
    matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lemma_tr: Option<Vec<LemmaTrWindow>>,
}

#[derive(Serialize)]
struct LemmaTrWindow {
    t: u64,
    m: u64,
    holds: bool,
}

fn orbit_formula(
    cli: &Cli,
    out: &mut dyn Write,
    n: u64,
    gen: &str,
    check: bool,
) -> Result<(), CliError> {
    let action = CyclicAction::parse(n, gen)?;
    let table = cyclic_orbits::table_from_action(&action);
    let n_values = table
        .counts()
        .keys()
        .map(|&m| Ok((m, cyclic_orbits::n_value(&table, m)?)))
        .collect::<Result<BTreeMap<_, _>, OrbitError>>()?;
    let spectrum = cyclic_orbits::orbit_spectrum(&table)?;
    let oracle = cyclic_orbits::brute_force_spectrum(&action);
    let lemma_tr = if check {
        Some(
            cyclic_orbits::lemma_tr_pairs(n)
                .into_iter()
                .map(|(t, m)| {
                    Ok(LemmaTrWindow {
                        t,
                        m,
                        holds: cyclic_orbits::lemma_tr_check(&table, &spectrum, t, m)?,
                    })
                })
                .collect::<Result<Vec<_>, OrbitError>>()?,
        )
    } else {
        None
    };
    let report = OrbitFormulaReport {
        n,
        set_size: table.set_size(),
        table: table.counts().clone(),
        n_values,
        spectrum: spectrum.counts().clone(),
        oracle: oracle.counts().clone(),
        matches: spectrum == oracle,
        lemma_tr,
    };
    if cli.json {
        emit(out, &report)?;
    } else {
        let nonzero = |m: &BTreeMap<u64, u64>| {
            let parts: Vec<String> = m
                .iter()
                .filter(|(_, &a)| a > 0)
                .map(|(d, a)| format!("{d}:{a}"))
                .collect();
            format!("{{{}}}", parts.join(", "))
        };
        writeln!(out, "n = {n}, |S| = {}", report.set_size).map_err(io_error)?;
        writeln!(
            out,
            "{:>6}  {:>6}  {:>6}  {:>6}  {:>6}",
            "d", "M_d", "N_d", "a_d", "oracle"
        )
        .map_err(io_error)?;
        for (&d, &count) in &report.table {
            writeln!(
                out,
                "{d:>6}  {count:>6}  {:>6}  {:>6}  {:>6}",
                report.n_values[&d], report.spectrum[&d], report.oracle[&d]
            )
            .map_err(io_error)?;
        }
        writeln!(out, "spectrum: {}", nonzero(&report.spectrum)).map_err(io_error)?;
        writeln!(out, "oracle:   {}", nonzero(&report.oracle)).map_err(io_error)?;
        writeln!(out, "matches oracle: {}", report.matches).map_err(io_error)?;
        if let Some(windows) = &report.lemma_tr {
            let failed: Vec<_> = windows
                .iter()
                .filter(|w| !w.holds)
                .map(|w| (w.t, w.m))
                .collect();
            writeln!(
                out,
                "trace identity: {} windows, failures {:?}",
                windows.len(),
                failed
            )
            .map_err(io_error)?;
        }
    }
    let lemma_ok = report
        .lemma_tr
        .as_ref()
        .is_none_or(|w| w.iter().all(|w| w.holds));
    if !report.matches || !lemma_ok {
        return Err(CliError::Computation {
            kind: "OrbitFormula",
            message: "formula disagrees with the brute-force orbit count".into(),
        });
    }
    Ok(())
}

fn group_info(cli: &Cli, out: &mut dyn Write, path: &Path) -> Result<(), CliError> {
    let g = load_group(path, cli.max_group_order)?;
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    class_sizes.sort_unstable();
    let mut sylow_orders = BTreeMap::new();
    for (p, _) in factorize(g.order() as u64) {
        sylow_orders.insert(p, g.sylow_subgroup(p)?.order());
    }
    if cli.json {
        return emit(
            out,
            &json!({
                "degree": g.degree(),
                "order": g.order(),
                "class_sizes": class_sizes,
                "sylow_orders": sylow_orders,
            }),
        );
    }
    writeln!(out, "degree: {}", g.degree()).map_err(io_error)?;
    writeln!(out, "order: {}", g.order()).map_err(io_error)?;
    writeln!(out, "class sizes: {class_sizes:?}").map_err(io_error)?;
    for (p, order) in sylow_orders {
        writeln!(out, "Sylow {p}-subgroup order: {order}").map_err(io_error)?;
    }
    Ok(())
}
