//! Command-line front end.
//!
//! Subcommands:
//!
//! - `solve2 --q1 Q --costheta C [--json|--csv] [--simulate N --seed S]`
//! - `gain-grid --steps N --out PATH`
//! - `solve3 --costheta C [--json]`
//! - `feasible --input FILE [--witness] [--json]`
//!
//! Exit codes: 0 success, 1 negative verdict, 2 invalid input, 3 internal
//! cross-check failure.
//!
//! Ensemble files are JSON documents:
//!
//! ```json
//! { "dim": 2, "priors": [0.5, 0.5], "pure": true,
//!   "states": [ [[1, 0], [0, 0]], [[0.6, 0], [0.8, 0]] ] }
//! ```
//!
//! Complex numbers are `[re, im]` pairs. Pure states are vectors of `dim`
//! pairs. Mixed states are either `dim` rows of `dim` pairs or a flat
//! row-major list of `dim²` pairs.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::baselines::{self, gain_grid, separable_solution, GainCell};
use crate::ensemble::{
    check_unambiguous, is_comparable, witness_pattern_holds, witness_povm, witness_table,
    MixedEnsemble, Povm, PureEnsemble,
};
use crate::error::Error;
use crate::hermlin::{c64, ComplexMatrix, ComplexVector, HermitianOperator};
use crate::montecarlo::{exact_success, simulate_parallel, SimConfig, SimReport};
use crate::solver2oo2::{self, assemble_povm, TwoTwoInstance};
use crate::solver2oo3::{p_opt3, separable_heuristic};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CROSSCHECK: i32 = 3;

/// Simulation deviation (in standard errors) that counts as a mismatch.
pub const SIM_MISMATCH_SIGMAS: f64 = 5.0;

/// CSV header of the gain map.
pub const GAIN_GRID_HEADER: &str = "q1,cos_theta,p_opt,p_sep,gain,star,doublestar";

#[derive(Debug, Parser)]
#[command(
    name = "qcompare",
    version,
    about = "Unambiguous quantum state comparison"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal and separable comparison of two states drawn from two pure states.
    Solve2(Solve2Args),
    /// Gain map P_opt − P_sep over (q1, cos θ) as CSV.
    GainGrid(GainGridArgs),
    /// Equal-overlap, equal-prior two-out-of-three comparison.
    Solve3(Solve3Args),
    /// Feasibility of unambiguous comparison for an ensemble file.
    Feasible(FeasibleArgs),
}

#[derive(Debug, Args)]
pub struct Solve2Args {
    #[arg(long)]
    pub q1: f64,
    #[arg(long)]
    pub costheta: f64,
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
    /// Monte Carlo trials for a cross-check of both measurements.
    #[arg(long)]
    pub simulate: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub shards: u32,
    /// Accept cos θ ∈ {0, 1} and report one-sided limits (no POVM).
    #[arg(long)]
    pub allow_limit: bool,
}

#[derive(Debug, Args)]
pub struct GainGridArgs {
    #[arg(long)]
    pub steps: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct Solve3Args {
    #[arg(long)]
    pub costheta: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct FeasibleArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Also print the witness measurement when feasible.
    #[arg(long)]
    pub witness: bool,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let result = match &cli.command {
        Command::Solve2(a) => cmd_solve2(a, out),
        Command::GainGrid(a) => cmd_gain_grid(a, out),
        Command::Solve3(a) => cmd_solve3(a, out),
        Command::Feasible(a) => cmd_feasible(a, out),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

/// Error carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ReductionCheck(_) => EXIT_CROSSCHECK,
            _ => EXIT_INVALID,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::invalid(format!("I/O: {e}"))
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Rounds to 12 significant digits for JSON and CSV output.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Six significant digits for human-readable output.
pub fn human(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-4..6).contains(&magnitude) {
        let decimals = (5 - magnitude).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.5e}")
    }
}

fn human_complex(z: num_complex::Complex64) -> String {
    if z.im == 0.0 {
        human(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", human(z.re), human(-z.im))
    } else {
        format!("{}+{}i", human(z.re), human(z.im))
    }
}

fn matrix_json(m: &ComplexMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| {
                Value::Array(
                    (0..m.ncols())
                        .map(|j| json!([sig12(m[(i, j)].re), sig12(m[(i, j)].im)]))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn povm_json(povm: &Povm) -> Value {
    let mut map = serde_json::Map::new();
    for (label, f) in povm.elements() {
        map.insert(label.to_string(), matrix_json(f.matrix()));
    }
    Value::Object(map)
}

fn write_matrix(out: &mut dyn Write, name: &str, m: &ComplexMatrix) -> std::io::Result<()> {
    writeln!(out, "  {name} =")?;
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|j| format!("{:>12}", human_complex(m[(i, j)])))
            .collect();
        writeln!(out, "    [{} ]", row.join(" "))?;
    }
    Ok(())
}

fn sim_json(report: &SimReport, target: f64) -> Value {
    json!({
        "trials": report.trials,
        "conclusive": report.conclusive,
        "error_count": report.error_count,
        "empirical_p": sig12(report.empirical_p),
        "std_error": sig12(report.std_error),
        "exact_p": sig12(target),
        "deviation_sigmas": sig12(report.deviation_sigmas(target)),
    })
}

fn branch_name(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "else"
    }
}

pub fn cmd_solve2(args: &Solve2Args, out: &mut dyn Write) -> CmdResult {
    let (q1, c) = (args.q1, args.costheta);
    let interior = c > 0.0 && c < 1.0;
    if args.allow_limit && !interior {
        return solve2_limit(args, out);
    }
    let instance = TwoTwoInstance::new(q1, c)?;
    let opt = assemble_povm(&instance)?;
    let sep = separable_solution(&instance)?;
    let gain = opt.p_opt - sep.p_sep;
    let ens = instance.ensemble().to_mixed();

    let mut sims = Vec::new();
    if let Some(trials) = args.simulate {
        for (name, povm) in [("optimal", &opt.povm), ("separable", &sep.povm)] {
            let exact = exact_success(povm, &ens, 2)?;
            let config = SimConfig::new(povm.clone(), ens.clone(), 2, trials, args.seed)
                .with_shards(args.shards);
            let report = simulate_parallel(&config)?;
            sims.push((name, exact, report));
        }
    }

    if args.json {
        let mut doc = json!({
            "q1": sig12(q1),
            "cos_theta": sig12(c),
            "p_opt": sig12(opt.p_opt),
            "branch": branch_name(opt.branch.holds()),
            "p_sep": sig12(sep.p_sep),
            "doublestar": branch_name(sep.branch.holds()),
            "gain": sig12(gain),
            "alpha": sig12(opt.alpha),
            "beta": sig12(opt.beta),
            "n_plus": sig12(opt.n_plus()),
            "n_minus": sig12(opt.n_minus()),
            "povm": povm_json(&opt.povm),
            "separable_povm": povm_json(&sep.povm),
        });
        if !sims.is_empty() {
            let mut sim = serde_json::Map::new();
            for (name, exact, report) in &sims {
                sim.insert((*name).into(), sim_json(report, *exact));
            }
            doc["simulation"] = Value::Object(sim);
        }
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serialisable")
        )?;
    } else if args.csv {
        writeln!(out, "field,value")?;
        let scalars = [
            ("q1", q1),
            ("cos_theta", c),
            ("p_opt", opt.p_opt),
            ("p_sep", sep.p_sep),
            ("gain", gain),
            ("alpha", opt.alpha),
            ("beta", opt.beta),
        ];
        for (k, v) in scalars {
            writeln!(out, "{k},{}", sig12(v))?;
        }
        writeln!(out, "branch,{}", branch_name(opt.branch.holds()))?;
        writeln!(out, "doublestar,{}", branch_name(sep.branch.holds()))?;
        for (label, f) in opt.povm.elements() {
            let m = f.matrix();
            for i in 0..m.nrows() {
                for j in 0..m.ncols() {
                    writeln!(out, "{label}[{i}][{j}].re,{}", sig12(m[(i, j)].re))?;
                    writeln!(out, "{label}[{i}][{j}].im,{}", sig12(m[(i, j)].im))?;
                }
            }
        }
        for (name, exact, report) in &sims {
            writeln!(out, "sim.{name}.empirical_p,{}", sig12(report.empirical_p))?;
            writeln!(out, "sim.{name}.std_error,{}", sig12(report.std_error))?;
            writeln!(out, "sim.{name}.exact_p,{}", sig12(*exact))?;
            writeln!(out, "sim.{name}.error_count,{}", report.error_count)?;
        }
    } else {
        writeln!(out, "two-out-of-two comparison")?;
        writeln!(out, "  q1          {}", human(q1))?;
        writeln!(out, "  cos_theta   {}", human(c))?;
        writeln!(
            out,
            "  p_opt       {}  (condition (*) {})",
            human(opt.p_opt),
            branch_name(opt.branch.holds())
        )?;
        writeln!(
            out,
            "  p_sep       {}  (condition (**) {})",
            human(sep.p_sep),
            branch_name(sep.branch.holds())
        )?;
        writeln!(out, "  gain        {}", human(gain))?;
        writeln!(out, "  alpha       {}", human(opt.alpha))?;
        writeln!(out, "  beta        {}", human(opt.beta))?;
        writeln!(out, "optimal measurement")?;
        for (label, f) in opt.povm.elements() {
            write_matrix(out, &label.to_string(), f.matrix())?;
        }
        for (name, exact, report) in &sims {
            writeln!(
                out,
                "simulation ({name}): p = {} ± {} over {} trials, exact {}, errors {}",
                human(report.empirical_p),
                human(report.std_error),
                report.trials,
                human(*exact),
                report.error_count
            )?;
        }
    }

    for (name, exact, report) in &sims {
        if report.error_count > 0 || report.deviation_sigmas(*exact) > SIM_MISMATCH_SIGMAS {
            return Err(Failure {
                code: EXIT_CROSSCHECK,
                message: format!(
                    "{name} simulation disagrees: p = {} vs exact {} ({} errors)",
                    report.empirical_p, exact, report.error_count
                ),
            });
        }
    }
    Ok(EXIT_OK)
}

fn solve2_limit(args: &Solve2Args, out: &mut dyn Write) -> CmdResult {
    if args.simulate.is_some() {
        return Err(Failure::invalid("simulation needs 0 < cos(theta) < 1"));
    }
    let (p_opt, branch) = solver2oo2::p_opt_limit(args.q1, args.costheta)?;
    let (p_sep, sep_branch) = baselines::p_sep_limit(args.q1, args.costheta)?;
    if args.json {
        let doc = json!({
            "q1": sig12(args.q1),
            "cos_theta": sig12(args.costheta),
            "limit": true,
            "p_opt": sig12(p_opt),
            "branch": branch_name(branch.holds()),
            "p_sep": sig12(p_sep),
            "doublestar": branch_name(sep_branch.holds()),
            "gain": sig12(p_opt - p_sep),
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serialisable")
        )?;
    } else {
        writeln!(out, "two-out-of-two comparison (one-sided limit)")?;
        writeln!(out, "  p_opt       {}", human(p_opt))?;
        writeln!(out, "  p_sep       {}", human(p_sep))?;
        writeln!(out, "  gain        {}", human(p_opt - p_sep))?;
    }
    Ok(EXIT_OK)
}

/// Writes the gain map as CSV.
pub fn write_gain_grid(cells: &[GainCell], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{GAIN_GRID_HEADER}")?;
    for c in cells {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            sig12(c.q1),
            sig12(c.cos_theta),
            sig12(c.p_opt),
            sig12(c.p_sep),
            sig12(c.gain),
            u8::from(c.star),
            u8::from(c.doublestar)
        )?;
    }
    Ok(())
}

pub fn cmd_gain_grid(args: &GainGridArgs, out: &mut dyn Write) -> CmdResult {
    let cells = gain_grid(args.steps, args.steps)?;
    let mut buffer = Vec::with_capacity(cells.len() * 64);
    write_gain_grid(&cells, &mut buffer)?;
    fs::write(&args.out, buffer)
        .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", args.out.display())))?;
    let best = cells
        .iter()
        .max_by(|a, b| a.gain.total_cmp(&b.gain))
        .expect("grid is non-empty");
    writeln!(
        out,
        "wrote {} rows to {}; max gain {} at q1 = {}, cos_theta = {}",
        cells.len(),
        args.out.display(),
        human(best.gain),
        human(best.q1),
        human(best.cos_theta)
    )?;
    Ok(EXIT_OK)
}

pub fn cmd_solve3(args: &Solve3Args, out: &mut dyn Write) -> CmdResult {
    let report = p_opt3(args.costheta)?;
    let heuristic = separable_heuristic(args.costheta)?;
    if args.json {
        let doc = json!({
            "cos_theta": sig12(report.cos_theta),
            "dim_h_prime": report.dim_h_prime,
            "dim_kcap_a": report.dim_kcap_a,
            "dim_kcap_b": report.dim_kcap_b,
            "region_ok": report.region_ok,
            "p_opt": report.p_opt.map(sig12),
            "boundary": sig12(report.boundary),
            "separable_heuristic": sig12(heuristic),
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serialisable")
        )?;
    } else {
        writeln!(
            out,
            "two-out-of-three comparison (equal overlap, equal priors)"
        )?;
        writeln!(out, "  cos_theta   {}", human(report.cos_theta))?;
        writeln!(
            out,
            "  dims        H' = {}, K_a = {}, K_b = {}",
            report.dim_h_prime, report.dim_kcap_a, report.dim_kcap_b
        )?;
        writeln!(out, "  boundary    {}", human(report.boundary))?;
        writeln!(out, "  region_ok   {}", report.region_ok)?;
        match report.p_opt {
            Some(p) => writeln!(out, "  p_opt       {}", human(p))?,
            None => writeln!(
                out,
                "  p_opt       not available outside the closed-form region"
            )?,
        }
        writeln!(out, "  separable   {} (heuristic)", human(heuristic))?;
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleFile {
    pub dim: usize,
    pub priors: Vec<f64>,
    pub states: Vec<Value>,
    #[serde(default)]
    pub pure: bool,
}

/// A parsed ensemble file.
#[derive(Clone, Debug)]
pub enum LoadedEnsemble {
    Pure(PureEnsemble),
    Mixed(MixedEnsemble),
}

impl LoadedEnsemble {
    pub fn to_mixed(&self) -> MixedEnsemble {
        match self {
            LoadedEnsemble::Pure(p) => p.to_mixed(),
            LoadedEnsemble::Mixed(m) => m.clone(),
        }
    }
}

fn parse_complex(v: &Value, at: &str) -> Result<num_complex::Complex64, Error> {
    match v {
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64();
            let im = pair[1].as_f64();
            match (re, im) {
                (Some(re), Some(im)) => Ok(c64(re, im)),
                _ => Err(Error::Parse(format!(
                    "{at}: [re, im] entries must be numbers"
                ))),
            }
        }
        _ => Err(Error::Parse(format!("{at}: expected an [re, im] pair"))),
    }
}

fn parse_list<'a>(v: &'a Value, at: &str) -> Result<&'a Vec<Value>, Error> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{at}: expected a list")))
}

/// Parses and validates an ensemble document.
pub fn parse_ensemble(text: &str) -> Result<LoadedEnsemble, Error> {
    let file: EnsembleFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("ensemble file: {e}")))?;
    let d = file.dim;
    if d == 0 {
        return Err(Error::Parse("dim: must be positive".into()));
    }
    if file.states.len() != file.priors.len() {
        return Err(Error::Parse(format!(
            "states: {} entries but priors has {}",
            file.states.len(),
            file.priors.len()
        )));
    }
    let context = |i: usize, e: Error| match e {
        Error::Parse(m) => Error::Parse(m),
        other => Error::Parse(format!("states[{i}]: {other}")),
    };
    if file.pure {
        let mut states = Vec::new();
        for (i, s) in file.states.iter().enumerate() {
            let at = format!("states[{i}]");
            let entries = parse_list(s, &at)?;
            if entries.len() != d {
                return Err(Error::Parse(format!(
                    "{at}: expected {d} amplitudes, found {}",
                    entries.len()
                )));
            }
            let amps = entries
                .iter()
                .enumerate()
                .map(|(k, z)| parse_complex(z, &format!("{at}[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            states.push(ComplexVector::from_vec(amps));
        }
        PureEnsemble::new(states, file.priors)
            .map(LoadedEnsemble::Pure)
            .map_err(|e| Error::Parse(e.to_string()))
    } else {
        let mut states = Vec::new();
        for (i, s) in file.states.iter().enumerate() {
            let at = format!("states[{i}]");
            let entries = parse_list(s, &at)?;
            let flat: Vec<num_complex::Complex64> = if entries.len() == d * d
                && entries.iter().all(|e| {
                    e.as_array()
                        .is_some_and(|p| p.len() == 2 && !p[0].is_array())
                }) {
                entries
                    .iter()
                    .enumerate()
                    .map(|(k, z)| parse_complex(z, &format!("{at}[{k}]")))
                    .collect::<Result<_, _>>()?
            } else if entries.len() == d {
                let mut flat = Vec::with_capacity(d * d);
                for (r, row) in entries.iter().enumerate() {
                    let row = parse_list(row, &format!("{at}[{r}]"))?;
                    if row.len() != d {
                        return Err(Error::Parse(format!(
                            "{at}[{r}]: expected {d} entries, found {}",
                            row.len()
                        )));
                    }
                    for (k, z) in row.iter().enumerate() {
                        flat.push(parse_complex(z, &format!("{at}[{r}][{k}]"))?);
                    }
                }
                flat
            } else {
                return Err(Error::Parse(format!(
                    "{at}: expected {d} rows or {} entries",
                    d * d
                )));
            };
            let m = ComplexMatrix::from_row_slice(d, d, &flat);
            states.push(HermitianOperator::from_matrix(m).map_err(|e| context(i, e))?);
        }
        MixedEnsemble::new(states, file.priors)
            .map(LoadedEnsemble::Mixed)
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn load_ensemble(path: &Path) -> Result<LoadedEnsemble, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_ensemble(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

pub fn cmd_feasible(args: &FeasibleArgs, out: &mut dyn Write) -> CmdResult {
    let ens = load_ensemble(&args.input)?.to_mixed();
    let report = is_comparable(&ens)?;
    let witness = if report.comparable && args.witness {
        let povm = witness_povm(&ens)?;
        let table = witness_table(&povm, &ens);
        if !witness_pattern_holds(&table) {
            return Err(Failure {
                code: EXIT_CROSSCHECK,
                message: "witness measurement fails the diagonal pattern".into(),
            });
        }
        let exact = exact_success(&povm, &ens, 1)?;
        Some((povm, table, exact))
    } else {
        None
    };

    if args.json {
        let mut doc = json!({
            "comparable": report.comparable,
            "states": report.states.iter().map(|s| json!({
                "index": s.index,
                "rank": s.rank,
                "others_dim": s.others_dim,
                "residual": sig12(s.residual),
                "contained": s.contained,
            })).collect::<Vec<_>>(),
        });
        if let Some((povm, table, exact)) = &witness {
            doc["witness"] = json!({
                "povm": povm_json(povm),
                "table": table.iter().map(|r| r.iter().map(|&t| sig12(t)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "identification_p": sig12(*exact),
            });
        }
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serialisable")
        )?;
    } else {
        for s in &report.states {
            writeln!(
                out,
                "state {}: rank {}, others span {}, residual {} -> {}",
                s.index + 1,
                s.rank,
                s.others_dim,
                human(s.residual),
                if s.contained {
                    "contained"
                } else {
                    "not contained"
                }
            )?;
        }
        writeln!(
            out,
            "comparable: {}",
            if report.comparable { "yes" } else { "no" }
        )?;
        if let Some((povm, table, exact)) = &witness {
            writeln!(out, "witness measurement")?;
            for (label, f) in povm.elements() {
                write_matrix(out, &label.to_string(), f.matrix())?;
            }
            writeln!(out, "  tr(F_i pi_j):")?;
            for row in table {
                let cells: Vec<String> = row.iter().map(|&t| format!("{:>12}", human(t))).collect();
                writeln!(out, "    [{} ]", cells.join(" "))?;
            }
            writeln!(out, "  identification probability {}", human(*exact))?;
        }
    }
    Ok(if report.comparable {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

/// Unambiguity check of an ensemble file against a comparison POVM; used by
/// tests and examples.
pub fn povm_is_unambiguous(povm: &Povm, ens: &MixedEnsemble, copies: usize) -> bool {
    check_unambiguous(povm, ens, copies).is_ok_and(|r| r.passed)
}
