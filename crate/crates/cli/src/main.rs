//! Command-line surface: construct the family ideals, run exact ideal
//! algebra on ideal files or inline `gen:` specs, and drive the
//! verification suite.
//!
//! Exit codes: 0 success, 1 negative answer, 2 usage or parse error,
//! 3 exhausted computation budget.

use clap::{Args, Parser, Subcommand};
use mmcalc::error::AlgebraError;
use mmcalc::files::{parse_field, read_ideal, write_ideal, write_ideal_to_path};
use mmcalc::groebner::Config;
use mmcalc::ideal::Ideal;
use mmcalc::mayr_meyer::{
    auto_field, block_ideal, build_component, build_j, build_j_long, build_l,
    build_min_intersection, build_p, build_p_minus4, build_pr_intersection_formula, build_prime,
    Block, LVariant, MMParams, PrimeLabel,
};
use mmcalc::ring::{parse_poly, Field, MonomialOrder, Polynomial};
use mmcalc::verify::{run_full_suite, run_suite, CheckCtx};
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mmcalc", version, about = "Exact algebra on the Mayr-Meyer ideal families")]
struct Cli {
    /// Step budget for basis computations (also via MM_BUDGET_STEPS).
    #[arg(long, global = true)]
    steps: Option<u64>,
    /// Coefficient growth guard in bits.
    #[arg(long, global = true)]
    coeff_bits: Option<u64>,
    /// Saturation stabilization cap.
    #[arg(long, global = true)]
    sat_cap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    d: u32,
    /// Coefficient field: `q`, `gf:<p>`, or `auto`.
    #[arg(long, default_value = "auto")]
    field: String,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a named ideal and print or save it.
    Gen {
        /// Family spec: Jl | J | p:<r> | P:<label> | comp:<label> | p4 |
        /// minint | prfml:<r> | C:<r> | D:<r> | B:<r> | E | F | E3 | L:<1|2|3>.
        /// Labels: P0, Pm1..Pm3, Pm4-<digits>, r<r>,a=<root>,b=<root>.
        family: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Output file (stdout when absent).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Reduced Groebner basis of an ideal.
    Gb {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "grevlex")]
        order: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Is a polynomial a member of an ideal?
    Member {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
    },
    /// Express a member polynomial over the ideal's generators.
    Certify {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
    },
    /// Intersection of two ideals.
    Intersect {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Colon ideal I : f.
    Quotient {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Saturation I : f^infinity with its stabilization exponent.
    Saturate {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Eliminate variables from an ideal.
    Eliminate {
        #[arg(long)]
        ideal: String,
        /// Comma-separated variable names.
        #[arg(long)]
        vars: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Krull dimension and height.
    Dim {
        #[arg(long)]
        ideal: String,
    },
    /// Does ideal `a` contain ideal `b`?
    Contains {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Are two ideals equal?
    Equal {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Run the verification suite.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// `default` caps the instance at n = 2; `extended` allows larger runs.
        #[arg(long, default_value = "default")]
        profile: String,
        /// Comma-separated check ids to run (all when absent).
        #[arg(long)]
        only: Option<String>,
        /// Where to write the JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads for independent checks.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = Config::default();
    if let Ok(env_steps) = std::env::var("MM_BUDGET_STEPS") {
        if let Ok(v) = env_steps.parse::<u64>() {
            cfg.step_budget = v;
        }
    }
    if let Some(v) = cli.steps {
        cfg.step_budget = v;
    }
    if let Some(v) = cli.coeff_bits {
        cfg.coeff_bit_limit = v;
    }
    if let Some(v) = cli.sat_cap {
        cfg.saturation_cap = v;
    }
    match run(cli.command, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &AlgebraError) -> ExitCode {
    match e {
        AlgebraError::NotMember => ExitCode::from(1),
        AlgebraError::StepBudgetExceeded { .. }
        | AlgebraError::CoefficientBlowup { .. }
        | AlgebraError::SaturationCapExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn resolve_field(text: &str, d: u32) -> Result<Field, AlgebraError> {
    if text == "auto" {
        Ok(auto_field(d))
    } else {
        parse_field(text)
    }
}

fn parse_order(text: &str) -> Result<MonomialOrder, AlgebraError> {
    match text {
        "grevlex" => Ok(MonomialOrder::Grevlex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(AlgebraError::InvalidParams(format!(
            "unknown order `{other}` (grevlex or lex)"
        ))),
    }
}

/// Parses a prime/component label: P0, Pm1..Pm3, Pm4-<digits>, or
/// r<r>,a=<root>,b=<root> with root values in the parameter field.
fn parse_label(text: &str, params: &MMParams) -> Result<PrimeLabel, AlgebraError> {
    match text {
        "P0" => return Ok(PrimeLabel::P0),
        "Pm1" => return Ok(PrimeLabel::Pm1),
        "Pm2" => return Ok(PrimeLabel::Pm2),
        "Pm3" => return Ok(PrimeLabel::Pm3),
        _ => {}
    }
    if let Some(digits) = text.strip_prefix("Pm4-") {
        let mut mask = 0u8;
        for ch in digits.chars() {
            match ch {
                '1'..='4' => mask |= 1 << (ch as u8 - b'1'),
                _ => {
                    return Err(AlgebraError::InvalidLabel(format!(
                        "Pm4 members must be digits 1..4, got `{ch}`"
                    )))
                }
            }
        }
        return Ok(PrimeLabel::Pm4 { mask });
    }
    if let Some(rest) = text.strip_prefix('r') {
        let mut r = None;
        let mut a = None;
        let mut b = None;
        for (k, part) in rest.split(',').enumerate() {
            if k == 0 {
                r = Some(part.parse::<u32>().map_err(|_| {
                    AlgebraError::InvalidLabel(format!("bad level in `{text}`"))
                })?);
            } else if let Some(v) = part.strip_prefix("a=") {
                a = Some(v.parse::<i64>().map_err(|_| {
                    AlgebraError::InvalidLabel(format!("bad root `{v}`"))
                })?);
            } else if let Some(v) = part.strip_prefix("b=") {
                b = Some(v.parse::<i64>().map_err(|_| {
                    AlgebraError::InvalidLabel(format!("bad root `{v}`"))
                })?);
            } else {
                return Err(AlgebraError::InvalidLabel(format!(
                    "unexpected label part `{part}`"
                )));
            }
        }
        let (r, a, b) = match (r, a, b) {
            (Some(r), Some(a), Some(b)) => (r, a, b),
            _ => {
                return Err(AlgebraError::InvalidLabel(format!(
                    "label `{text}` needs r, a= and b="
                )))
            }
        };
        let roots = params.roots()?;
        let field = params.field;
        let find = |v: i64| {
            let scalar = field.scalar_from_i64(v);
            roots.iter().position(|root| *root == scalar).ok_or_else(|| {
                AlgebraError::InvalidLabel(format!("{v} is not a {}-th root of unity", params.dprime))
            })
        };
        return Ok(PrimeLabel::Pr {
            r,
            alpha: find(a)?,
            beta: find(b)?,
        });
    }
    Err(AlgebraError::InvalidLabel(text.to_string()))
}

fn build_family(family: &str, params: &MMParams) -> Result<Ideal, AlgebraError> {
    let take = |prefix: &str| family.strip_prefix(prefix).map(str::to_string);
    match family {
        "Jl" => return Ok(build_j_long(params)),
        "J" => return Ok(build_j(params)),
        "p4" => return Ok(build_p_minus4(params)),
        "minint" => return build_min_intersection(params),
        "E" => return block_ideal(Block::E, params),
        "F" => return block_ideal(Block::F, params),
        "E3" => return block_ideal(Block::E3, params),
        _ => {}
    }
    let num = |text: &str| {
        text.parse::<u32>()
            .map_err(|_| AlgebraError::InvalidLabel(format!("bad index in `{family}`")))
    };
    if let Some(r) = take("p:") {
        return build_p(num(&r)?, params);
    }
    if let Some(label) = take("P:") {
        return build_prime(parse_label(&label, params)?, params);
    }
    if let Some(label) = take("comp:") {
        return build_component(parse_label(&label, params)?, params);
    }
    if let Some(r) = take("prfml:") {
        return build_pr_intersection_formula(num(&r)?, params);
    }
    if let Some(r) = take("C:") {
        return block_ideal(Block::C(num(&r)?), params);
    }
    if let Some(r) = take("D:") {
        return block_ideal(Block::D(num(&r)?), params);
    }
    if let Some(r) = take("B:") {
        return block_ideal(Block::B(num(&r)?), params);
    }
    if let Some(v) = take("L:") {
        let variant = match v.as_str() {
            "1" => LVariant::LPrime,
            "2" => LVariant::LDoublePrime,
            "3" => LVariant::LTriplePrime,
            other => {
                return Err(AlgebraError::InvalidLabel(format!(
                    "L variant must be 1, 2 or 3, got `{other}`"
                )))
            }
        };
        return build_l(variant, params);
    }
    Err(AlgebraError::InvalidLabel(format!(
        "unknown family `{family}`"
    )))
}

/// Loads an ideal from a file path or an inline `gen:<family>@n=..,d=..`
/// spec.
fn load_ideal(spec: &str) -> Result<Ideal, AlgebraError> {
    if let Some(rest) = spec.strip_prefix("gen:") {
        let (family, args) = rest.split_once('@').ok_or_else(|| {
            AlgebraError::InvalidParams(format!(
                "inline spec `{spec}` needs the form gen:<family>@n=..,d=..[,field=..]"
            ))
        })?;
        let mut n = None;
        let mut d = None;
        let mut field_text = "auto".to_string();
        for part in args.split(',') {
            if let Some(v) = part.strip_prefix("n=") {
                n = Some(v.parse::<u32>().map_err(|_| {
                    AlgebraError::InvalidParams(format!("bad n in `{spec}`"))
                })?);
            } else if let Some(v) = part.strip_prefix("d=") {
                d = Some(v.parse::<u32>().map_err(|_| {
                    AlgebraError::InvalidParams(format!("bad d in `{spec}`"))
                })?);
            } else if let Some(v) = part.strip_prefix("field=") {
                field_text = v.to_string();
            } else if part.starts_with("a=") || part.starts_with("b=") {
                // Root selectors belong to the family label, not the params.
                continue;
            } else {
                return Err(AlgebraError::InvalidParams(format!(
                    "unexpected spec part `{part}`"
                )));
            }
        }
        let (n, d) = match (n, d) {
            (Some(n), Some(d)) => (n, d),
            _ => {
                return Err(AlgebraError::InvalidParams(format!(
                    "inline spec `{spec}` needs n= and d="
                )))
            }
        };
        let field = resolve_field(&field_text, d)?;
        let params = MMParams::new(n, d, field)?;
        build_family(family, &params)
    } else {
        let file = std::fs::File::open(spec)?;
        read_ideal(std::io::BufReader::new(file))
    }
}

fn parse_in_ring(text: &str, ideal: &Ideal) -> Result<Polynomial, AlgebraError> {
    parse_poly(text, ideal.ring())
}

fn emit_ideal(ideal: &Ideal, out: Option<&PathBuf>) -> Result<(), AlgebraError> {
    match out {
        Some(path) => write_ideal_to_path(path, ideal),
        None => {
            let mut stdout = std::io::stdout().lock();
            write_ideal(&mut stdout, ideal)?;
            Ok(())
        }
    }
}

fn run(command: Command, cfg: &Config) -> Result<ExitCode, AlgebraError> {
    match command {
        Command::Gen { family, params, out } => {
            let field = resolve_field(&params.field, params.d)?;
            let mm = MMParams::new(params.n, params.d, field)?;
            let ideal = build_family(&family, &mm)?;
            emit_ideal(&ideal, out.as_ref())?;
            let max_deg = ideal
                .gens()
                .iter()
                .filter_map(|g| g.total_degree())
                .max()
                .unwrap_or(0);
            eprintln!("generators: {}, max degree: {}", ideal.gens().len(), max_deg);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gb { ideal, order, out } => {
            let ideal = load_ideal(&ideal)?;
            let order = parse_order(&order)?;
            let gb = ideal.reduced_gb(order, cfg, false)?;
            let basis = Ideal::new(ideal.ring(), gb.elements.clone());
            emit_ideal(&basis, out.as_ref())?;
            eprintln!("basis elements: {}", gb.elements.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { ideal, poly } => {
            let ideal = load_ideal(&ideal)?;
            let f = parse_in_ring(&poly, &ideal)?;
            if ideal.member(&f, cfg)? {
                println!("member");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not member");
                Ok(ExitCode::from(1))
            }
        }
        Command::Certify { ideal, poly } => {
            let ideal = load_ideal(&ideal)?;
            let f = parse_in_ring(&poly, &ideal)?;
            let cert = ideal.lift_certificate(&f, cfg)?;
            for (q, g) in cert.cofactors.iter().zip(ideal.gens()) {
                if !q.is_zero() {
                    println!("({q}) * ({g})");
                }
            }
            println!("max cofactor degree: {}", cert.max_cofactor_degree);
            Ok(ExitCode::SUCCESS)
        }
        Command::Intersect { a, b, out } => {
            let a = load_ideal(&a)?;
            let b = load_ideal(&b)?;
            let meet = a.intersect(&b, cfg)?;
            emit_ideal(&meet, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { ideal, by, out } => {
            let ideal = load_ideal(&ideal)?;
            let f = parse_in_ring(&by, &ideal)?;
            let q = ideal.quotient(&f, cfg)?;
            emit_ideal(&q, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Saturate { ideal, by, out } => {
            let ideal = load_ideal(&ideal)?;
            let f = parse_in_ring(&by, &ideal)?;
            let (sat, k) = ideal.saturate(&f, cfg)?;
            emit_ideal(&sat, out.as_ref())?;
            println!("stabilization exponent: {k}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Eliminate { ideal, vars, out } => {
            let ideal = load_ideal(&ideal)?;
            let mut indices = Vec::new();
            for name in vars.split(',').filter(|v| !v.is_empty()) {
                let idx = ideal.ring().var_index(name).ok_or_else(|| {
                    AlgebraError::UnknownVariable {
                        name: name.to_string(),
                        pos: 0,
                    }
                })?;
                indices.push(idx);
            }
            let out_ideal = ideal.eliminate(&indices, cfg)?;
            emit_ideal(&out_ideal, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dim { ideal } => {
            let ideal = load_ideal(&ideal)?;
            let dim = ideal.dimension(cfg)?;
            let height = ideal.ring().nvars() - dim;
            println!("dim {dim}, height {height}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Contains { a, b } => {
            let a = load_ideal(&a)?;
            let b = load_ideal(&b)?;
            if a.contains(&b, cfg)? {
                println!("contains");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("does not contain");
                Ok(ExitCode::from(1))
            }
        }
        Command::Equal { a, b } => {
            let a = load_ideal(&a)?;
            let b = load_ideal(&b)?;
            if a.equal(&b, cfg)? {
                println!("equal");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not equal");
                Ok(ExitCode::from(1))
            }
        }
        Command::Verify {
            params,
            profile,
            only,
            report,
            jobs,
        } => {
            match profile.as_str() {
                "default" => {
                    if params.n > 2 {
                        return Err(AlgebraError::InvalidParams(
                            "n > 2 may run long; pass --profile extended to allow it".into(),
                        ));
                    }
                }
                "extended" => {}
                other => {
                    return Err(AlgebraError::InvalidParams(format!(
                        "unknown profile `{other}`"
                    )))
                }
            }
            let field = resolve_field(&params.field, params.d)?;
            let mm = MMParams::new(params.n, params.d, field)?;
            let ctx = CheckCtx::new(mm, cfg.clone())?;
            let suite = match only {
                Some(list) => {
                    let selection: Vec<String> =
                        list.split(',').map(|t| t.trim().to_string()).collect();
                    run_suite(&ctx, &selection, jobs)?
                }
                None => run_full_suite(&ctx, jobs)?,
            };
            if let Some(path) = report {
                let mut f = std::fs::File::create(path)?;
                serde_json::to_writer_pretty(&mut f, &suite.to_json())
                    .map_err(|e| AlgebraError::File(e.to_string()))?;
                writeln!(f).ok();
            } else {
                println!("{}", serde_json::to_string_pretty(&suite.to_json()).unwrap());
            }
            print!("{}", suite.text_summary());
            Ok(if suite.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
