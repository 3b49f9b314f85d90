//! `ydtwist`: exact computation of simple Yetter-Drinfeld modules for the
//! restricted two-parameter quantum Borel algebras of type sl_3, with
//! cocycle-twist comparisons and closed-form cross-checks.
//!
//! All output is deterministic: identical inputs produce byte-identical
//! output regardless of `--jobs`. Errors are reported as structured JSON
//! objects with stable codes and a nonzero exit status.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::process::ExitCode;

use ydtwist_core::borel::{BorelAlgebra, BorelParams, GroupLike};
use ydtwist_core::closedform;
use ydtwist_core::cyclotomic::CycScalar;
use ydtwist_core::radford::{self, Character, SimpleModuleReport};
use ydtwist_core::twist::{self, TwistError};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "ydtwist",
    version,
    about = "Simple Yetter-Drinfeld modules of restricted two-parameter quantum Borel algebras (sl_3) and their cocycle twists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one simple module H ⊳_β g: dimension, block ranks, basis
    Module(ModuleArgs),
    /// Compute all ell^4 simple modules and the dimension multiset
    Sweep(SweepArgs),
    /// List the one-dimensional modules (g, β) in closed form
    Onedim(OnedimArgs),
    /// Verify the cocycle twist from (ell,y,z) to (ell,y2,z2):
    /// presentation relations and all per-pair dimension equalities
    TwistCheck(TwistCheckArgs),
    /// Compare closed-form predicted dimensions against computed ones
    FormulaCheck(FormulaCheckArgs),
    /// Validate parameters and report derived data
    Validate(ValidateArgs),
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// Order of the root of unity q
    #[arg(long)]
    ell: i64,
    /// Exponent y with r = q^y
    #[arg(long)]
    y: i64,
    /// Exponent z with s = q^z
    #[arg(long)]
    z: i64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Grouplike element exponents, as D1,D2
    #[arg(long, value_parser = parse_pair)]
    g: (i64, i64),
    /// Character exponents, as B1,B2
    #[arg(long, value_parser = parse_pair)]
    beta: (i64, i64),
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
    /// Worker threads (0 = auto)
    #[arg(long, env = "YDTWIST_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct OnedimArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
}

#[derive(Args)]
struct TwistCheckArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Target exponent y' with r' = q^y'
    #[arg(long)]
    y2: i64,
    /// Target exponent z' with s' = q^z'
    #[arg(long)]
    z2: i64,
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
    #[arg(long, env = "YDTWIST_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct FormulaCheckArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
    #[arg(long, env = "YDTWIST_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected two comma-separated integers, got '{s}'"));
    }
    let a = parts[0]
        .trim()
        .parse()
        .map_err(|e| format!("bad integer '{}': {e}", parts[0]))?;
    let b = parts[1]
        .trim()
        .parse()
        .map_err(|e| format!("bad integer '{}': {e}", parts[1]))?;
    Ok((a, b))
}

/// A failure that terminates the command with a structured report.
struct CmdError {
    code: &'static str,
    message: String,
}

impl CmdError {
    fn new(code: &'static str, message: impl Into<String>) -> CmdError {
        CmdError {
            code,
            message: message.into(),
        }
    }
}

fn emit_error(err: &CmdError) {
    let obj = json!({
        "schema": SCHEMA,
        "error": { "code": err.code, "message": err.message },
    });
    println!("{}", serde_json::to_string_pretty(&obj).unwrap());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Module(args) => cmd_module(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Onedim(args) => cmd_onedim(args),
        Command::TwistCheck(args) => cmd_twist_check(args),
        Command::FormulaCheck(args) => cmd_formula_check(args),
        Command::Validate(args) => cmd_validate(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            emit_error(&err);
            ExitCode::from(2)
        }
    }
}

fn validated_params(p: &ParamArgs) -> Result<BorelParams, CmdError> {
    BorelParams::new(p.ell, p.y, p.z)
        .map_err(|e| CmdError::new("invalid-params", e.to_string()))
}

/// Runs `f` in a dedicated rayon pool when a thread count is requested;
/// output ordering never depends on the pool shape.
fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, CmdError> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CmdError::new("invalid-params", format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn scalar_json(c: &CycScalar) -> Value {
    Value::Array(
        c.coords()
            .iter()
            .map(|q| Value::String(format!("{}/{}", q.numer(), q.denom())))
            .collect(),
    )
}

fn module_json(params: &BorelParams, report: &SimpleModuleReport) -> Value {
    let blocks: Vec<Value> = report
        .blocks
        .iter()
        .map(|(idx, rank)| json!({ "u": idx.u, "v": idx.v, "rank": rank }))
        .collect();
    let basis: Vec<Value> = report
        .basis
        .iter()
        .map(|elem| {
            Value::Array(
                elem.terms()
                    .map(|(mono, coeff)| {
                        json!({
                            "monomial": [mono.k, mono.t, mono.m, mono.a, mono.b],
                            "coeff": scalar_json(coeff),
                        })
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "ell": params.ell(),
        "y": params.y(),
        "z": params.z(),
        "g": [report.g.d1, report.g.d2],
        "beta": [report.beta.b1, report.beta.b2],
        "dimension": report.dimension,
        "blocks": blocks,
        "basis": basis,
    })
}

fn cmd_module(args: ModuleArgs) -> Result<ExitCode, CmdError> {
    let params = validated_params(&args.params)?;
    let algebra = BorelAlgebra::new(params);
    let g = GroupLike::new(params.ell(), args.g.0, args.g.1);
    let beta = Character::new(params.ell(), args.beta.0, args.beta.1);
    let report = radford::simple_module(&algebra, beta, g)
        .map_err(|e| CmdError::new("internal-consistency", e.to_string()))?;
    match args.output.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&module_json(&params, &report)).unwrap()
            );
        }
        OutputFormat::Csv => {
            println!("d1,d2,b1,b2,dimension");
            println!(
                "{},{},{},{},{}",
                report.g.d1, report.g.d2, report.beta.b1, report.beta.b2, report.dimension
            );
        }
        OutputFormat::Text => {
            println!(
                "H_(q^{},q^{}) with ell = {}: module at g = {} beta = {}",
                params.y(),
                params.z(),
                params.ell(),
                report.g,
                report.beta
            );
            println!("dimension: {}", report.dimension);
            println!("blocks (u, v, rank):");
            for (idx, rank) in &report.blocks {
                println!("  ({}, {}, {})", idx.u, idx.v, rank);
            }
            println!("basis:");
            for elem in &report.basis {
                println!("  {elem}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode, CmdError> {
    let params = validated_params(&args.params)?;
    let algebra = BorelAlgebra::new(params);
    let sweep = with_jobs(args.jobs, || radford::sweep(&algebra))?
        .map_err(|e| CmdError::new("internal-consistency", e.to_string()))?;
    match args.output.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            println!("d1,d2,b1,b2,dimension");
            for r in &sweep.reports {
                println!(
                    "{},{},{},{},{}",
                    r.g.d1, r.g.d2, r.beta.b1, r.beta.b2, r.dimension
                );
            }
            println!("# multiset: {}", sweep.multiset_summary());
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = sweep
                .reports
                .iter()
                .map(|r| json!([r.g.d1, r.g.d2, r.beta.b1, r.beta.b2, r.dimension]))
                .collect();
            let multiset: Vec<Value> = sweep
                .multiset
                .iter()
                .map(|(dim, count)| json!({ "dimension": dim, "count": count }))
                .collect();
            let obj = json!({
                "schema": SCHEMA,
                "ell": params.ell(),
                "y": params.y(),
                "z": params.z(),
                "columns": ["d1", "d2", "b1", "b2", "dimension"],
                "rows": rows,
                "multiset": multiset,
                "summary": sweep.multiset_summary(),
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        OutputFormat::Text => {
            println!(
                "sweep of H_(q^{},q^{}), ell = {}: {} modules",
                params.y(),
                params.z(),
                params.ell(),
                sweep.reports.len()
            );
            println!("dimension multiset: {}", sweep.multiset_summary());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_onedim(args: OnedimArgs) -> Result<ExitCode, CmdError> {
    let params = validated_params(&args.params)?;
    let list = closedform::one_dim_modules(&params);
    match args.output.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            println!("d1,d2,b1,b2");
            for (g, beta) in &list {
                println!("{},{},{},{}", g.d1, g.d2, beta.b1, beta.b2);
            }
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = list
                .iter()
                .map(|(g, b)| json!([g.d1, g.d2, b.b1, b.b2]))
                .collect();
            let obj = json!({
                "schema": SCHEMA,
                "ell": params.ell(),
                "y": params.y(),
                "z": params.z(),
                "columns": ["d1", "d2", "b1", "b2"],
                "count": list.len(),
                "rows": rows,
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        OutputFormat::Text => {
            println!(
                "one-dimensional modules of H_(q^{},q^{}), ell = {}: {} total",
                params.y(),
                params.z(),
                params.ell(),
                list.len()
            );
            for (g, beta) in &list {
                println!("  g = {g}, beta = {beta}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_twist_check(args: TwistCheckArgs) -> Result<ExitCode, CmdError> {
    let source = validated_params(&args.params)?;
    let target = BorelParams::new(args.params.ell, args.y2, args.z2)
        .map_err(|e| CmdError::new("invalid-params", format!("target parameters: {e}")))?;
    let format = args.output.unwrap_or(OutputFormat::Text);

    let sigma = match twist::sigma_for_pair(&source, &target) {
        Ok(sigma) => sigma,
        Err(TwistError::IncompatibleParameters { reason }) => {
            match format {
                OutputFormat::Json | OutputFormat::Csv => {
                    let obj = json!({
                        "schema": SCHEMA,
                        "status": "incompatible",
                        "code": "incompatible-parameters",
                        "reason": reason,
                    });
                    println!("{}", serde_json::to_string_pretty(&obj).unwrap());
                }
                OutputFormat::Text => {
                    println!("status: incompatible");
                    println!("reason: {reason}");
                }
            }
            return Ok(ExitCode::from(2));
        }
        Err(e) => return Err(CmdError::new("internal-consistency", e.to_string())),
    };

    let presentation = twist::check_twisted_presentation(&source, &target)
        .map_err(|e| CmdError::new("internal-consistency", e.to_string()))?;
    let correspondence = with_jobs(args.jobs, || {
        twist::twist_correspondence_check(&source, &target)
    })?
    .map_err(|e| CmdError::new("internal-consistency", e.to_string()))?;

    let matched = correspondence
        .comparisons
        .iter()
        .filter(|c| c.matches())
        .count();
    let total = correspondence.comparisons.len();
    let all_pass = presentation.all_passed() && correspondence.all_match();

    match format {
        OutputFormat::Json | OutputFormat::Csv => {
            let checks: Vec<Value> = presentation
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed }))
                .collect();
            let mismatches: Vec<Value> = correspondence
                .mismatches()
                .map(|c| {
                    json!({
                        "g": [c.g.d1, c.g.d2],
                        "beta": [c.beta.b1, c.beta.b2],
                        "beta_twisted": [c.beta_twisted.b1, c.beta_twisted.b2],
                        "dim_source": c.dim_source,
                        "dim_target": c.dim_target,
                    })
                })
                .collect();
            let obj = json!({
                "schema": SCHEMA,
                "status": if all_pass { "pass" } else { "fail" },
                "a12": sigma.a12(),
                "presentation": checks,
                "pairs_total": total,
                "pairs_equal": matched,
                "mismatches": mismatches,
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        OutputFormat::Text => {
            println!(
                "twist (ell={}): (y,z)=({},{}) -> (y',z')=({},{}), a12 = {}",
                source.ell(),
                source.y(),
                source.z(),
                target.y(),
                target.z(),
                sigma.a12()
            );
            for c in &presentation.checks {
                println!("  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
            }
            println!("  dimension equalities: {matched}/{total}");
            println!("status: {}", if all_pass { "pass" } else { "fail" });
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_formula_check(args: FormulaCheckArgs) -> Result<ExitCode, CmdError> {
    let params = validated_params(&args.params)?;
    // surface precondition failures before sweeping
    if let Err(e) =
        closedform::m_parameters(&GroupLike::identity(), &Character::trivial(), &params)
    {
        return Err(CmdError::new("formula-not-applicable", e.to_string()));
    }
    let algebra = BorelAlgebra::new(params);
    let sweep = with_jobs(args.jobs, || radford::sweep(&algebra))?
        .map_err(|e| CmdError::new("internal-consistency", e.to_string()))?;
    let rows: Vec<(GroupLike, Character, u64, usize)> = sweep
        .reports
        .iter()
        .map(|r| {
            let predicted = closedform::predicted_dimension(&r.g, &r.beta, &params)
                .expect("preconditions checked above");
            (r.g, r.beta, predicted, r.dimension)
        })
        .collect();
    let equal = rows
        .iter()
        .filter(|(_, _, p, c)| *p == *c as u64)
        .count();
    let total = rows.len();
    let all_equal = equal == total;

    match args.output.unwrap_or(OutputFormat::Text) {
        OutputFormat::Csv => {
            println!("d1,d2,b1,b2,predicted,computed,equal");
            for (g, beta, predicted, computed) in &rows {
                println!(
                    "{},{},{},{},{},{},{}",
                    g.d1,
                    g.d2,
                    beta.b1,
                    beta.b2,
                    predicted,
                    computed,
                    predicted == &(*computed as u64)
                );
            }
            println!("# equal: {equal}/{total}");
        }
        OutputFormat::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|(g, beta, predicted, computed)| {
                    json!([g.d1, g.d2, beta.b1, beta.b2, predicted, computed])
                })
                .collect();
            let obj = json!({
                "schema": SCHEMA,
                "ell": params.ell(),
                "y": params.y(),
                "z": params.z(),
                "columns": ["d1", "d2", "b1", "b2", "predicted", "computed"],
                "rows": json_rows,
                "pairs_total": total,
                "pairs_equal": equal,
                "status": if all_equal { "pass" } else { "fail" },
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        OutputFormat::Text => {
            println!(
                "closed-form cross-check for H_(q^{},q^{}), ell = {}",
                params.y(),
                params.z(),
                params.ell()
            );
            println!("  predicted = computed for {equal}/{total} pairs");
            println!("status: {}", if all_equal { "pass" } else { "fail" });
        }
    }
    Ok(if all_equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_validate(args: ValidateArgs) -> Result<ExitCode, CmdError> {
    let params = validated_params(&args.params)?;
    let ell = params.ell();
    let order = |e: u32| {
        let g = num_gcd(e, ell);
        ell / g
    };
    let gcd_ok = closedform::gcd_condition(&params);
    match args.output.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json | OutputFormat::Csv => {
            let obj = json!({
                "schema": SCHEMA,
                "valid": true,
                "ell": ell,
                "y": params.y(),
                "z": params.z(),
                "r_order": order(params.y()),
                "s_order": order(params.z()),
                "gcd_condition": gcd_ok,
                "algebra_dimension": (ell as u64).pow(5),
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        OutputFormat::Text => {
            println!(
                "parameters valid: ell = {ell}, r = q^{}, s = q^{}",
                params.y(),
                params.z()
            );
            println!(
                "orders: |r| = {}, |s| = {}, lcm = {ell}",
                order(params.y()),
                order(params.z())
            );
            println!("algebra dimension: {}", (ell as u64).pow(5));
            println!(
                "Drinfeld-double gcd condition: {}",
                if gcd_ok { "holds" } else { "fails" }
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if a == 0 {
        b
    } else {
        num_gcd(b % a, a)
    }
}
