use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dtrans::{
    decide, hermite_reduce, parse_ratfun, print, rational_antiderivative, solve_first_order,
    verify_verdict, ExprError, FirstOrderOde, Outcome, RatFun,
};
use serde::Serialize;

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Differential transcendence of solutions of Y'' = p Y' over Q(t)(x).
#[derive(Parser, Debug)]
#[command(name = "dtrans", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether solutions of Y'' = p Y' are d/dt-transcendental.
    /// Exit 0: transcendental, 1: not transcendental.
    Decide {
        /// Coefficient p, as an expression in x and t.
        #[arg(
            value_name = "P",
            allow_hyphen_values = true,
            conflicts_with = "p_flag",
            required_unless_present = "p_flag"
        )]
        p: Option<String>,
        #[arg(long = "p", value_name = "P", allow_hyphen_values = true)]
        p_flag: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find a rational solution of Y' + p Y = q. Exit 0: found, 1: none.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find a rational antiderivative of g. Exit 0: found, 1: none.
    Antiderivative {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Split g into a rational part and a remainder with squarefree
    /// denominator. Exit 0 when the remainder vanishes, 1 otherwise.
    Hermite {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct Solvability {
    solvable: bool,
    witness: Option<String>,
}

impl Solvability {
    fn new(w: Option<&RatFun>) -> Self {
        Solvability {
            solvable: w.is_some(),
            witness: w.map(print),
        }
    }
}

#[derive(Serialize)]
struct Group {
    #[serde(rename = "gal_M_over_L")]
    gal_m_over_l: &'static str,
    diagonal_constant: bool,
}

#[derive(Serialize)]
struct DecideRecord {
    command: &'static str,
    inputs: BTreeMap<&'static str, String>,
    cond1: Solvability,
    cond2: Solvability,
    outcome: &'static str,
    group: Group,
    witness_check: bool,
}

#[derive(Serialize)]
struct SolveRecord {
    command: &'static str,
    inputs: BTreeMap<&'static str, String>,
    result: Solvability,
    witness_check: bool,
}

#[derive(Serialize)]
struct HermiteParts {
    reduced: String,
    remainder: String,
    integrable: bool,
}

#[derive(Serialize)]
struct HermiteRecord {
    command: &'static str,
    inputs: BTreeMap<&'static str, String>,
    result: HermiteParts,
    witness_check: bool,
}

enum Failure {
    Input(String),
    Internal(String),
}

fn read_arg(name: &str, text: &str) -> Result<RatFun, Failure> {
    parse_ratfun(text).map_err(|e| match e {
        ExprError::Parse(p) => Failure::Input(format!("--{name} {text:?}: {p}")),
        ExprError::Eval(ev) => Failure::Input(format!("--{name} {text:?}: {ev}")),
    })
}

fn check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Internal(format!("{what} failed re-verification")))
    }
}

fn emit<T: Serialize>(format: Format, record: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(record).expect("records serialize")
        ),
        Format::Text => print!("{}", text()),
    }
}

fn or_none(w: Option<&RatFun>) -> String {
    w.map_or_else(|| "none".to_string(), print)
}

fn run_decide(p_text: &str, format: Format) -> Result<u8, Failure> {
    let p = read_arg("p", p_text)?;
    let v = decide(&p);
    check(verify_verdict(&v), "verdict")?;

    let record = DecideRecord {
        command: "decide",
        inputs: BTreeMap::from([("p", print(&p))]),
        cond1: Solvability::new(v.cond1.witness.as_ref()),
        cond2: Solvability::new(v.cond2.witness.as_ref()),
        outcome: v.outcome.as_str(),
        group: Group {
            gal_m_over_l: v.group.gal_m_over_l.as_str(),
            diagonal_constant: v.group.diagonal_constant,
        },
        witness_check: true,
    };
    emit(format, &record, || {
        let status = |s: bool| if s { "solvable" } else { "unsolvable" };
        format!(
            "p: {}\n\
             cond1 Y' = dp/dt: {}, witness {}\n\
             cond2 Y' + p*Y = 1: {}, witness {}\n\
             outcome: {}\n\
             Gal(M/L): {}\n\
             diagonal_constant: {}\n",
            record.inputs["p"],
            status(v.cond1.solvable),
            or_none(v.cond1.witness.as_ref()),
            status(v.cond2.solvable),
            or_none(v.cond2.witness.as_ref()),
            record.outcome,
            record.group.gal_m_over_l,
            record.group.diagonal_constant,
        )
    });
    Ok(if v.outcome == Outcome::Transcendental {
        EXIT_YES
    } else {
        EXIT_NO
    })
}

fn emit_solution(
    command: &'static str,
    inputs: BTreeMap<&'static str, String>,
    w: Option<&RatFun>,
    absent: &str,
    format: Format,
) -> u8 {
    let record = SolveRecord {
        command,
        inputs,
        result: Solvability::new(w),
        witness_check: true,
    };
    emit(format, &record, || match &record.result.witness {
        Some(s) => format!("{s}\n"),
        None => format!("{absent}\n"),
    });
    if w.is_some() {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn run_solve(p_text: &str, q_text: &str, format: Format) -> Result<u8, Failure> {
    let ode = FirstOrderOde::new(read_arg("p", p_text)?, read_arg("q", q_text)?);
    let y = solve_first_order(&ode);
    if let Some(y) = &y {
        check(ode.is_solution(y), "solution")?;
    }
    let inputs = BTreeMap::from([("p", print(&ode.p)), ("q", print(&ode.q))]);
    Ok(emit_solution(
        "solve",
        inputs,
        y.as_ref(),
        "no rational solution",
        format,
    ))
}

fn run_antiderivative(g_text: &str, format: Format) -> Result<u8, Failure> {
    let g = read_arg("g", g_text)?;
    let y = rational_antiderivative(&g);
    if let Some(y) = &y {
        check(y.d_dx() == g, "antiderivative")?;
    }
    let inputs = BTreeMap::from([("g", print(&g))]);
    Ok(emit_solution(
        "antiderivative",
        inputs,
        y.as_ref(),
        "no rational antiderivative",
        format,
    ))
}

fn run_hermite(g_text: &str, format: Format) -> Result<u8, Failure> {
    let g = read_arg("g", g_text)?;
    let h = hermite_reduce(&g);
    let remainder = h.remainder();
    let squarefree = h
        .rem_den
        .gcd(&h.rem_den.d_dx())
        .map_err(|e| Failure::Internal(e.to_string()))?;
    check(
        &h.reduced.d_dx() + &remainder == g && squarefree.is_constant(),
        "reduction",
    )?;

    let record = HermiteRecord {
        command: "hermite",
        inputs: BTreeMap::from([("g", print(&g))]),
        result: HermiteParts {
            reduced: print(&h.reduced),
            remainder: print(&remainder),
            integrable: h.is_integrable(),
        },
        witness_check: true,
    };
    emit(format, &record, || {
        format!(
            "reduced: {}\nremainder: {}\n",
            record.result.reduced, record.result.remainder
        )
    });
    Ok(if h.is_integrable() { EXIT_YES } else { EXIT_NO })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Decide { p, p_flag, format } => {
            let text = p.as_deref().or(p_flag.as_deref()).unwrap_or_default();
            run_decide(text, *format)
        }
        Command::Solve { p, q, format } => run_solve(p, q, *format),
        Command::Antiderivative { g, format } => run_antiderivative(g, *format),
        Command::Hermite { g, format } => run_hermite(g, *format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
