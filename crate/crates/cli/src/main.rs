//! Command-line front end: every library operation behind a subcommand with
//! machine-readable output.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when a result is validly
//! empty (an enumeration with no admissible subgroup, or a certificate that
//! finds a candidate and therefore cannot certify smoothness). Errors go to
//! stderr as one line of JSON `{code, message}`.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pdelliptic_core::classify::{classify, ClassifyOutcome, Recipe, RecipeKind};
use pdelliptic_core::cmorders::enumerate_degree2;
use pdelliptic_core::configs::{scenario_witness_line, validate_ex1, IsogenyDatum, Scenario};
use pdelliptic_core::geom::{
    enumerate_lines, enumerate_points, isotropic_line_stats, line_census, DEFAULT_ENUM_BOUND,
};
use pdelliptic_core::surface::{smoothness_certificate, Verdict};
use pdelliptic_core::{alpha, Error};

mod render;
use render::{Format, Output, Value};

#[derive(Parser)]
#[command(
    name = "pdelliptic",
    version,
    about = "Exact tables and certificates for elliptic configurations on genus-2 curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Point, line and isotropic-line counts for P^3(F_p).
    Geom {
        /// The prime modulus.
        #[arg(long)]
        p: u64,
        /// Report the isotropic-line census instead of the basic counts.
        #[arg(long, conflicts_with = "list")]
        stats: bool,
        /// List every line with its canonical basis and isotropy flag.
        #[arg(long)]
        list: bool,
    },
    /// Anti-symplectic torsion isomorphisms for a prime p.
    Antisym {
        #[arg(long)]
        p: u64,
        /// Report the count only (the default).
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// List every matrix in canonical order.
        #[arg(long)]
        list: bool,
    },
    /// Classify (p, d, m) into construction recipes.
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        /// The twisting number.
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// The bi-tri-elliptic case: classification at p = 2, d = 3.
    Bitri {
        #[arg(long, allow_negative_numbers = true, conflicts_with = "all")]
        m: Option<i64>,
        /// Tabulate every twisting number from 1 to 6.
        #[arg(long)]
        all: bool,
    },
    /// Build the torsion-level scenario for one construction recipe.
    Construct {
        /// Which construction: ex1 (degree sum pd), exp (degree sum d),
        /// exp2 (degree sum d/p).
        #[arg(long, value_enum)]
        example: ExampleArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        deg_phi: u64,
        #[arg(long)]
        deg_phi_prime: u64,
        /// Override the witness line with one of the p = 2 case labels.
        #[arg(long, value_enum)]
        scenario: Option<ScenarioArg>,
        /// Report the count only (the default).
        #[arg(long, conflicts_with = "witness")]
        count: bool,
        /// Include the witness line and a sample subgroup.
        #[arg(long)]
        witness: bool,
    },
    /// The ten degree-2 endomorphism classes of elliptic curves.
    Endos {
        /// Emit the full table instead of the summary.
        #[arg(long)]
        table: bool,
    },
    /// Smoothness certificate for the twisting-number-1 construction.
    Smooth {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        /// Include the candidate tuples in the report.
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ExampleArg {
    Ex1,
    Exp,
    Exp2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ScenarioArg {
    BothOdd,
    BothEven,
    EqualLine,
    CoplanarDistinct,
}

impl From<ScenarioArg> for Scenario {
    fn from(s: ScenarioArg) -> Scenario {
        match s {
            ScenarioArg::BothOdd => Scenario::BothOdd,
            ScenarioArg::BothEven => Scenario::BothEven,
            ScenarioArg::EqualLine => Scenario::EqualLine,
            ScenarioArg::CoplanarDistinct => Scenario::CoplanarDistinct,
        }
    }
}

#[derive(Debug)]
struct CliError {
    code: &'static str,
    message: String,
}

impl CliError {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self::new("invalid_input", message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidModulus(_) => "invalid_modulus",
            Error::ModulusMismatch { .. } => "modulus_mismatch",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::DegenerateSpan => "degenerate_span",
            Error::NotAnIsomorphism => "not_an_isomorphism",
            Error::NotAGraph => "not_a_graph",
            Error::InvalidWitness(_) => "invalid_witness",
            Error::Inconsistent(_) => "inconsistent",
            Error::UnsupportedPairing => "unsupported_pairing",
            Error::OutOfScope(_) => "out_of_scope",
            Error::InvalidRecipe(_) => "invalid_recipe",
            Error::InvalidEndo(_) => "invalid_endo",
            Error::InvalidClass(_) => "invalid_class",
        };
        CliError::new(code, e.to_string())
    }
}

/// Hard cap on numeric inputs so derived quantities stay far from overflow
/// whatever the combination.
const INPUT_CAP: u64 = 1_000_000;

fn check_cap(name: &str, value: u64) -> Result<(), CliError> {
    if value > INPUT_CAP {
        return Err(CliError::invalid(format!(
            "{name} = {value} exceeds the supported range (max {INPUT_CAP})"
        )));
    }
    Ok(())
}

fn check_enum_prime(p: u64) -> Result<(), CliError> {
    check_cap("p", p)?;
    if p > DEFAULT_ENUM_BOUND {
        return Err(CliError::new(
            "bound_exceeded",
            Error::BoundExceeded {
                p,
                bound: DEFAULT_ENUM_BOUND,
            }
            .to_string(),
        ));
    }
    Ok(())
}

fn recipe_table(recipes: &[Recipe]) -> Output {
    Output::Table {
        columns: vec!["kind", "p", "d", "m", "nu", "deg_phi", "deg_phi_prime"],
        rows: recipes
            .iter()
            .map(|r| {
                vec![
                    Value::Str(r.kind.to_string()),
                    r.p.into(),
                    r.d.into(),
                    r.m.into(),
                    r.nu.into(),
                    r.deg_phi.into(),
                    r.deg_phi_prime.into(),
                ]
            })
            .collect(),
    }
}

/// The full line list and the point-by-point census are materialized, so the
/// interactive forms get a tighter cap than the streaming counts.
const EXHAUSTIVE_CAP: u64 = 13;

fn check_exhaustive_prime(p: u64) -> Result<(), CliError> {
    check_cap("p", p)?;
    if p > EXHAUSTIVE_CAP {
        return Err(CliError::invalid(format!(
            "the census and listing forms are supported up to p = {EXHAUSTIVE_CAP}; \
             the plain counts go up to p = {DEFAULT_ENUM_BOUND}"
        )));
    }
    Ok(())
}

fn run_geom(p: u64, stats: bool, list: bool) -> Result<(Output, bool), CliError> {
    check_enum_prime(p)?;
    if list {
        check_exhaustive_prime(p)?;
        let lines = enumerate_lines(p)?;
        let rows = lines
            .iter()
            .enumerate()
            .map(|(i, l)| {
                vec![
                    Value::U64(i as u64),
                    Value::Str(l.to_string()),
                    Value::Bool(l.is_isotropic()),
                ]
            })
            .collect();
        return Ok((
            Output::Table {
                columns: vec!["index", "line", "isotropic"],
                rows,
            },
            false,
        ));
    }
    if stats {
        check_exhaustive_prime(p)?;
        let st = isotropic_line_stats(p)?;
        return Ok((
            Output::Record(vec![
                ("p", p.into()),
                ("total", st.total.into()),
                ("through_any_point", st.through_any_point.into()),
                ("meeting_isotropic_line", st.meeting_isotropic_line.into()),
                (
                    "meeting_non_isotropic_line",
                    st.meeting_non_isotropic_line.into(),
                ),
            ]),
            false,
        ));
    }
    let points = enumerate_points(p)?.len() as u64;
    let (lines, isotropic) = line_census(p)?;
    Ok((
        Output::Record(vec![
            ("p", p.into()),
            ("points", points.into()),
            ("lines", lines.into()),
            ("isotropic_lines", isotropic.into()),
        ]),
        false,
    ))
}

fn run_antisym(p: u64, list: bool) -> Result<(Output, bool), CliError> {
    check_enum_prime(p)?;
    let maps = alpha::enumerate_antisymplectic(p)?;
    if list {
        let rows = maps
            .iter()
            .enumerate()
            .map(|(i, m)| vec![Value::U64(i as u64), Value::Str(m.to_string())])
            .collect();
        Ok((
            Output::Table {
                columns: vec!["index", "matrix"],
                rows,
            },
            false,
        ))
    } else {
        Ok((
            Output::Record(vec![("p", p.into()), ("count", (maps.len() as u64).into())]),
            false,
        ))
    }
}

fn run_classify(p: u64, d: u64, m: i64) -> Result<(Output, bool), CliError> {
    check_cap("p", p)?;
    check_cap("d", d)?;
    check_cap("m", m.unsigned_abs())?;
    match classify(p, d, m) {
        ClassifyOutcome::Invalid(reason) => Err(CliError::invalid(reason.to_string())),
        ClassifyOutcome::Trivial => Ok((
            Output::Record(vec![
                ("outcome", "trivial".into()),
                ("p", p.into()),
                ("d", d.into()),
                ("m", m.into()),
            ]),
            false,
        )),
        ClassifyOutcome::Recipes(recipes) => Ok((recipe_table(&recipes), false)),
    }
}

fn run_bitri(m: Option<i64>, all: bool) -> Result<(Output, bool), CliError> {
    if let Some(m) = m {
        return run_classify(2, 3, m);
    }
    if !all {
        return Err(CliError::invalid("pass either --m <m> or --all"));
    }
    let columns = vec!["m", "outcome", "kind", "nu", "deg_phi", "deg_phi_prime"];
    let mut rows = Vec::new();
    for m in 1..=6i64 {
        match classify(2, 3, m) {
            ClassifyOutcome::Recipes(recipes) => {
                for r in recipes {
                    rows.push(vec![
                        Value::I64(m),
                        "recipe".into(),
                        Value::Str(r.kind.to_string()),
                        r.nu.into(),
                        r.deg_phi.into(),
                        r.deg_phi_prime.into(),
                    ]);
                }
            }
            ClassifyOutcome::Trivial => rows.push(vec![
                Value::I64(m),
                "trivial".into(),
                Value::Null,
                Value::Null,
                Value::Null,
                Value::Null,
            ]),
            ClassifyOutcome::Invalid(reason) => return Err(CliError::invalid(reason.to_string())),
        }
    }
    Ok((Output::Table { columns, rows }, false))
}

fn build_recipe(example: ExampleArg, p: u64, iso: &IsogenyDatum) -> Result<Recipe, CliError> {
    match example {
        ExampleArg::Ex1 => {
            let sum = iso.sum();
            if !sum.is_multiple_of(p) {
                return Err(CliError::invalid(format!(
                    "deg φ + deg φ' = {sum} must be a multiple of p = {p}"
                )));
            }
            validate_ex1(p, sum / p, iso).map_err(|v| CliError::invalid(v.to_string()))
        }
        ExampleArg::Exp => Ok(Recipe {
            kind: RecipeKind::ExP,
            p,
            d: iso.sum(),
            m: p * iso.deg_phi,
            nu: p,
            deg_phi: iso.deg_phi,
            deg_phi_prime: iso.deg_phi_prime,
        }),
        ExampleArg::Exp2 => Ok(Recipe {
            kind: RecipeKind::ExP2,
            p,
            d: p * iso.sum(),
            m: p * p * iso.deg_phi,
            nu: p * p,
            deg_phi: iso.deg_phi,
            deg_phi_prime: iso.deg_phi_prime,
        }),
    }
}

fn run_construct(
    example: ExampleArg,
    p: u64,
    deg_phi: u64,
    deg_phi_prime: u64,
    scenario: Option<ScenarioArg>,
    witness: bool,
) -> Result<(Output, bool), CliError> {
    check_enum_prime(p)?;
    check_cap("deg-phi", deg_phi)?;
    check_cap("deg-phi-prime", deg_phi_prime)?;
    let iso = IsogenyDatum::new(deg_phi, deg_phi_prime)?;
    let recipe = build_recipe(example, p, &iso)?;
    let realized = match scenario {
        None => pdelliptic_core::classify::realize(&recipe)?,
        Some(arg) => {
            let scenario: Scenario = arg.into();
            if !scenario.matches_degrees(&iso) {
                return Err(CliError::invalid(format!(
                    "scenario {scenario} does not match the parities of ({deg_phi}, {deg_phi_prime})"
                )));
            }
            let t = scenario_witness_line(p, scenario)?;
            pdelliptic_core::classify::realize_with_line(&recipe, &t)?
        }
    };
    let mut fields = vec![
        ("example", Value::Str(recipe.kind.to_string())),
        ("p", recipe.p.into()),
        ("d", recipe.d.into()),
        ("m", recipe.m.into()),
        ("nu", recipe.nu.into()),
        ("deg_phi", recipe.deg_phi.into()),
        ("deg_phi_prime", recipe.deg_phi_prime.into()),
        ("rel_r", Value::Str(realized.rel_r.to_string())),
        ("rel_s", Value::Str(realized.rel_s.to_string())),
        ("h_count", realized.h_count.into()),
    ];
    if witness {
        fields.push(("t", Value::Str(realized.t.to_string())));
        match &realized.sample {
            Some(g) => {
                fields.push(("sample_h", Value::Str(g.line().to_string())));
                fields.push(("sample_alpha", Value::Str(g.alpha().to_string())));
            }
            None => {
                fields.push(("sample_h", Value::Null));
                fields.push(("sample_alpha", Value::Null));
            }
        }
    }
    let empty = realized.h_count == 0;
    Ok((Output::Record(fields), empty))
}

fn run_endos(table: bool) -> Result<(Output, bool), CliError> {
    let entries = enumerate_degree2();
    if !table {
        return Ok((
            Output::Record(vec![
                ("classes", (entries.len() as u64).into()),
                ("conjugate_pairs", 5u64.into()),
                ("orders", 3u64.into()),
            ]),
            false,
        ));
    }
    let rows = entries
        .iter()
        .map(|(xi, order, m)| {
            vec![
                Value::Str(order.name.to_string()),
                Value::Str(xi.description()),
                Value::I64(xi.trace()),
                Value::I64(*m),
            ]
        })
        .collect();
    Ok((
        Output::Table {
            columns: vec!["order", "xi_description", "trace", "m"],
            rows,
        },
        false,
    ))
}

fn run_smooth(n: u64, d: u64, witness: bool) -> Result<(Output, bool), CliError> {
    check_cap("n", n)?;
    check_cap("d", d)?;
    let report = smoothness_certificate(n, d)?;
    let fields = vec![
        ("n", report.n.into()),
        ("d", report.d.into()),
        ("r", report.r.into()),
        ("verdict", Value::Str(report.verdict.to_string())),
    ];
    let not_smooth = report.verdict == Verdict::CandidateFound;
    let output = if witness {
        Output::Nested {
            fields,
            key: "candidates",
            columns: vec!["a1", "b1", "nu1", "a2", "b2", "nu2"],
            rows: report
                .candidates
                .iter()
                .map(|c| {
                    vec![
                        c.first.a.into(),
                        c.first.b.into(),
                        c.first.nu.into(),
                        c.second.a.into(),
                        c.second.b.into(),
                        c.second.nu.into(),
                    ]
                })
                .collect(),
        }
    } else {
        let mut fields = fields;
        fields.push(("candidate_count", (report.candidates.len() as u64).into()));
        Output::Record(fields)
    };
    Ok((output, not_smooth))
}

fn dispatch(cli: &Cli) -> Result<(Output, bool), CliError> {
    match &cli.command {
        Command::Geom { p, stats, list } => run_geom(*p, *stats, *list),
        Command::Antisym { p, list, .. } => run_antisym(*p, *list),
        Command::Classify { p, d, m } => run_classify(*p, *d, *m),
        Command::Bitri { m, all } => run_bitri(*m, *all),
        Command::Construct {
            example,
            p,
            deg_phi,
            deg_phi_prime,
            scenario,
            witness,
            ..
        } => run_construct(*example, *p, *deg_phi, *deg_phi_prime, *scenario, *witness),
        Command::Endos { table } => run_endos(*table),
        Command::Smooth { n, d, witness } => run_smooth(*n, *d, *witness),
    }
}

fn report_error(err: &CliError) {
    let line = serde_json::json!({
        "code": err.code,
        "message": err.message,
    });
    eprintln!("{line}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            report_error(&CliError::new("usage", e.to_string().trim_end()));
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help and --version land here.
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match dispatch(&cli) {
        Ok((output, empty)) => {
            print!("{}", render::render(&output, cli.format));
            if empty {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            report_error(&err);
            ExitCode::from(1)
        }
    }
}
