//! `witten`: evaluate Witten zeta and L-functions, their moments, and run the
//! identity suite.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Number, Value};

use witten_core::finite::{
    exact_to_f64, format_exact, s3_table, tilde_z_m_bruteforce, tilde_z_m_s3_printed,
    witten_l_finite, witten_zeta_finite, z_m_bruteforce, z_m_s3_closed, SParameter,
};
use witten_core::moment::{
    coeff_closed, coeff_quadrature, coeff_sign_decomposition, condition_star_star,
    triple_to_lattice, z3_coefficients_budgeted, z3_series_budgeted, zm_quadrature,
};
use witten_core::product::{finite_diagonal, product_l_diag, DiagonalClass};
use witten_core::su2::{character, witten_l_su2_budgeted};
use witten_core::verify::{self, CheckKind, VerifyOptions};
use witten_core::zeta::{riemann_zeta_budgeted, DEFAULT_TOL};
use witten_core::{
    Budget, CharacterTable, Complex64, ComplexParameter, ConjugacyClassSU2, Error, EvalResult,
    QuadratureRule, TripleIndex,
};

const BUDGET_VAR: &str = "WITTEN_TERM_BUDGET";

#[derive(Parser)]
#[command(
    name = "witten",
    version,
    about = "Witten zeta functions, L-functions and their moments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Riemann zeta at s.
    Zeta {
        #[arg(long, allow_hyphen_values = true)]
        s: ComplexParameter,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// SU(2) character chi_n at angle theta.
    Character {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_theta)]
        theta: f64,
    },
    /// SU(2) L-function at angle theta.
    Lfun {
        #[arg(long, value_parser = parse_theta)]
        theta: f64,
        #[arg(long, allow_hyphen_values = true)]
        s: ComplexParameter,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Moment coefficient int chi_{n1} ... chi_{nk} for a comma-separated list.
    Coeff {
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        n: Vec<u64>,
    },
    /// m-th power moment of the SU(2) L-function by quadrature.
    Moment {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        s: ComplexParameter,
        #[arg(long, default_value_t = 1000)]
        trunc: u64,
    },
    /// Cubic-moment coefficients r(N) as a table, or the series value with --s.
    Series {
        #[arg(long)]
        max: u64,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<ComplexParameter>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Means over a finite group: S_3 by default, or a JSON character table.
    S3 {
        #[arg(long, allow_hyphen_values = true)]
        s: ComplexParameter,
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Character table document to use instead of S_3.
        #[arg(long)]
        table: Option<std::path::PathBuf>,
    },
    /// Diagonal-embedding identity zeta_G(s, (h,..,h)) = zeta_H(s, h)^m.
    Product {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        s: ComplexParameter,
        /// SU(2) angle; omit and pass --class for S_3.
        #[arg(long, value_parser = parse_theta)]
        theta: Option<f64>,
        /// S_3 class label (e, transposition, 3-cycle).
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value_t = 2000)]
        trunc: u64,
    },
    /// Run the identity suite and print a JSON report.
    Verify {
        /// Comma-separated suites to run.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Override every numeric threshold.
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Accepts plain numbers and multiples of pi such as `pi`, `pi/2`, `3pi/4`
/// or `2*pi/3`.
fn parse_theta(text: &str) -> Result<f64, String> {
    let t = text.trim().to_ascii_lowercase();
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (
            a.trim(),
            b.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad angle {text:?}: {e}"))?,
        ),
        None => (t.as_str(), 1.0),
    };
    let coeff = num
        .strip_suffix("pi")
        .map(|c| c.trim().trim_end_matches('*').trim())
        .ok_or_else(|| format!("bad angle {text:?}"))?;
    let coeff = if coeff.is_empty() {
        1.0
    } else {
        coeff
            .parse::<f64>()
            .map_err(|e| format!("bad angle {text:?}: {e}"))?
    };
    Ok(coeff * std::f64::consts::PI / den)
}

fn float(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(
            format!("{x:.16e}")
                .parse::<Number>()
                .expect("formatted float"),
        )
    } else {
        Value::Null
    }
}

fn complex(z: Complex64) -> Value {
    let mut map = Map::new();
    map.insert("re".into(), float(z.re));
    map.insert("im".into(), float(z.im));
    Value::Object(map)
}

fn eval(r: &EvalResult) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("value".into(), complex(r.value));
    map.insert("error_bound".into(), float(r.error_bound));
    map.insert("terms_used".into(), r.terms_used.into());
    map
}

fn record(command: &str, fields: Vec<(&str, Value)>) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("command".into(), command.into());
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    map
}

fn budget() -> Result<Budget, Error> {
    match std::env::var(BUDGET_VAR) {
        Ok(text) => {
            let n = text
                .trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("{BUDGET_VAR}={text:?}: {e}")))?;
            Ok(Budget {
                max_terms: n,
                max_norm: n,
            })
        }
        Err(_) => Ok(Budget::default()),
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_)
        | Error::Argument(_)
        | Error::Index { .. }
        | Error::InvalidTable(_)
        | Error::InsufficientRule { .. } => 2,
        Error::Domain(_) | Error::Pole | Error::NearSingular { .. } | Error::Precondition(_) => 3,
        Error::Resource { .. } => 4,
        Error::ToleranceUnreachable { .. } => 5,
        Error::IdentityViolation(_) => 1,
    }
}

/// Output of a subcommand: text for stdout and the process exit code.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn json(map: Map<String, Value>) -> Self {
        Self {
            text: serde_json::to_string_pretty(&Value::Object(map)).expect("serialisable") + "\n",
            code: 0,
        }
    }
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Zeta { s, tol } => {
            let r = riemann_zeta_budgeted(s, tol, &budget()?)?;
            let mut map = record("zeta", vec![("s", s.to_string().into())]);
            map.extend(eval(&r));
            Ok(Output::json(map))
        }
        Command::Character { n, theta } => {
            let value = character(n, ConjugacyClassSU2::new(theta)?)?;
            Ok(Output::json(record(
                "character",
                vec![
                    ("n", n.into()),
                    ("theta", float(theta)),
                    ("value", float(value)),
                ],
            )))
        }
        Command::Lfun { theta, s, tol } => {
            let r = witten_l_su2_budgeted(s, ConjugacyClassSU2::new(theta)?, tol, &budget()?)?;
            let mut map = record(
                "lfun",
                vec![("theta", float(theta)), ("s", s.to_string().into())],
            );
            map.extend(eval(&r));
            Ok(Output::json(map))
        }
        Command::Coeff { n } => coeff(n),
        Command::Moment { m, s, trunc } => {
            if m == 0 || trunc == 0 {
                return Err(Error::Argument("need m >= 1 and trunc >= 1".into()));
            }
            let rule = QuadratureRule::for_degree((m as u64 * (trunc - 1)) as usize);
            let r = zm_quadrature(s, m, trunc, &rule)?;
            let mut map = record(
                "moment",
                vec![
                    ("m", m.into()),
                    ("s", s.to_string().into()),
                    ("trunc", trunc.into()),
                ],
            );
            map.extend(eval(&r));
            Ok(Output::json(map))
        }
        Command::Series {
            max,
            s,
            tol,
            format,
        } => {
            if max < 1 {
                return Err(Error::Argument("--max must be >= 1".into()));
            }
            let budget = budget()?;
            if let Some(s) = s {
                let r = z3_series_budgeted(s, max, tol, &budget)?;
                let mut map = record(
                    "series",
                    vec![("s", s.to_string().into()), ("max_norm", max.into())],
                );
                map.extend(eval(&r));
                return Ok(Output::json(map));
            }
            let table = z3_coefficients_budgeted(max, &budget)?;
            let text = match format {
                Format::Csv => table.to_csv(),
                Format::Json => {
                    let rows: Vec<Value> = table
                        .iter_nonzero()
                        .map(|(n, r)| {
                            let mut row = Map::new();
                            row.insert("N".into(), n.into());
                            row.insert("r".into(), r.into());
                            Value::Object(row)
                        })
                        .collect();
                    serde_json::to_string_pretty(&Value::Array(rows)).expect("serialisable") + "\n"
                }
            };
            Ok(Output { text, code: 0 })
        }
        Command::S3 { s, m, table } => s3(s, m, table),
        Command::Product {
            m,
            s,
            theta,
            class,
            trunc,
        } => product(m, s, theta, class, trunc),
        Command::Verify { only, tol } => {
            let report = verify::run(&VerifyOptions { only, tol })?;
            let checks: Vec<Value> = report.checks.iter().map(check_json).collect();
            let mut map = Map::new();
            map.insert("checks".into(), Value::Array(checks));
            map.insert("passed".into(), report.passed().into());
            map.insert("summary".into(), report.summary().into());
            let mut out = Output::json(map);
            eprintln!("{}", report.summary());
            for failure in report.failures() {
                eprintln!("FAILED {}", failure.check_id);
            }
            out.code = if report.passed() { 0 } else { 1 };
            Ok(out)
        }
    }
}

fn check_json(c: &verify::Check) -> Value {
    let mut map = Map::new();
    map.insert("check_id".into(), c.check_id.clone().into());
    map.insert("suite".into(), c.suite.into());
    map.insert("kind".into(), c.kind.as_str().into());
    map.insert("lhs".into(), complex(c.lhs));
    map.insert("rhs".into(), complex(c.rhs));
    map.insert("difference".into(), float(c.difference));
    map.insert("bound".into(), float(c.bound));
    map.insert("pass".into(), c.pass.into());
    if let Some((l, r)) = &c.exact {
        map.insert("lhs_exact".into(), l.clone().into());
        map.insert("rhs_exact".into(), r.clone().into());
    }
    if let Some(note) = &c.note {
        map.insert("note".into(), note.clone().into());
    }
    if c.kind == CheckKind::Informational {
        map.insert("informational".into(), true.into());
    }
    Value::Object(map)
}

fn coeff(n: Vec<u64>) -> Result<Output, Error> {
    if n.len() < 2 {
        return Err(Error::Argument(
            "--n needs at least two comma-separated indices".into(),
        ));
    }
    let degree: u64 = n.iter().map(|&k| k.saturating_sub(1)).sum();
    let quadrature = coeff_quadrature(&n, &QuadratureRule::for_degree(degree as usize))?;
    let mut fields = vec![
        ("n", Value::from(n.clone())),
        ("quadrature", float(quadrature)),
    ];
    if let [a, b, c] = n[..] {
        let t = TripleIndex::new(a, b, c)?;
        fields.push(("closed", coeff_closed(&t).into()));
        fields.push(("sign_decomposition", coeff_sign_decomposition(&t).into()));
        fields.push(("condition", condition_star_star(&t).into()));
        if let Ok(l) = triple_to_lattice(&t) {
            fields.push(("lattice", Value::from(vec![l.m1, l.m2, l.m3])));
        }
    }
    Ok(Output::json(record("coeff", fields)))
}

/// Integer `s` is evaluated exactly; anything else in floating point.
fn integer_s(s: &ComplexParameter) -> Option<i64> {
    let re = s.re();
    (s.im() == 0.0 && re.fract() == 0.0 && re.abs() < 62.0).then_some(re as i64)
}

fn s3(s: ComplexParameter, m: u32, path: Option<std::path::PathBuf>) -> Result<Output, Error> {
    let builtin = path.is_none();
    let table = match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            CharacterTable::from_json(&text)?
        }
        None => s3_table(),
    };
    let mut fields = vec![
        ("s", Value::from(s.to_string())),
        ("m", m.into()),
        ("order", table.order().into()),
    ];
    match integer_s(&s) {
        Some(k) => {
            fields.push(("exact", true.into()));
            fields.extend(finite_fields(&table, &k, m, builtin, |q| {
                format_exact(q).into()
            })?);
        }
        None => {
            fields.push(("exact", false.into()));
            fields.extend(finite_fields(&table, &s, m, builtin, |z| complex(*z))?);
        }
    }
    Ok(Output::json(record("s3", fields)))
}

fn finite_fields<P: SParameter>(
    table: &CharacterTable,
    s: &P,
    m: u32,
    builtin: bool,
    show: impl Fn(&P::Value) -> Value,
) -> Result<Vec<(&'static str, Value)>, Error> {
    let mut l_values = Map::new();
    for (i, class) in table.classes().iter().enumerate() {
        l_values.insert(class.label.clone(), show(&witten_l_finite(table, s, i)?));
    }
    let mut fields = vec![
        ("zeta", show(&witten_zeta_finite(table, s))),
        ("l_values", Value::Object(l_values)),
        ("z_m", show(&z_m_bruteforce(table, s, m)?)),
    ];
    if builtin {
        fields.push(("z_m_closed", show(&z_m_s3_closed(s, m)?)));
    }
    fields.push(("tilde_z_m", show(&tilde_z_m_bruteforce(table, s, m)?)));
    if builtin {
        fields.push((
            "tilde_z_m_printed_formula",
            show(&tilde_z_m_s3_printed(s, m)?),
        ));
    }
    Ok(fields)
}

fn product(
    m: u32,
    s: ComplexParameter,
    theta: Option<f64>,
    class: Option<String>,
    trunc: u64,
) -> Result<Output, Error> {
    let table = s3_table();
    let (target, mut fields) = match (theta, class) {
        (Some(theta), None) => (
            DiagonalClass::Su2(ConjugacyClassSU2::new(theta)?),
            vec![("group", Value::from("su2")), ("theta", float(theta))],
        ),
        (None, Some(label)) => {
            let class_index = table
                .class_index(&label)
                .ok_or_else(|| Error::Argument(format!("unknown S_3 class {label:?}")))?;
            (
                DiagonalClass::Finite {
                    table: &table,
                    class_index,
                },
                vec![("group", Value::from("s3")), ("class", Value::from(label))],
            )
        }
        _ => {
            return Err(Error::Argument(
                "pass exactly one of --theta and --class".into(),
            ))
        }
    };
    fields.push(("m", m.into()));
    fields.push(("s", s.to_string().into()));
    if let (DiagonalClass::Finite { class_index, .. }, Some(k)) = (&target, integer_s(&s)) {
        let (tuple, power) = finite_diagonal(&table, &k, *class_index, m)?;
        fields.push(("tuple_sum_exact", format_exact(&tuple).into()));
        fields.push(("power_exact", format_exact(&power).into()));
        if tuple != power {
            return Err(Error::IdentityViolation(format!(
                "tuple sum {} != power {}",
                format_exact(&tuple),
                format_exact(&power)
            )));
        }
        fields.push(("value", float(exact_to_f64(&tuple))));
    }
    let p = product_l_diag(&target, m, s, trunc)?;
    fields.push(("tuple_sum", Value::Object(eval(&p.tuple_sum))));
    fields.push(("power", Value::Object(eval(&p.power))));
    fields.push(("agrees", p.agrees().into()));
    Ok(Output::json(record("product", fields)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
