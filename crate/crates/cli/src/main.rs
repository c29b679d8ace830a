//! Command-line front end: parses the polynomial/derivation grammar,
//! dispatches every library operation, and emits key-sorted JSON.
//!
//! Exit codes: 0 success, 1 verification failure or domain error,
//! 2 usage error, 3 parse error in the polynomial grammar.

mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::process::ExitCode;
use wn_core::arith::{multi_gcd, MonomialOrder, Poly, Rat};
use wn_core::darboux::{find_darboux, simplicity_probe};
use wn_core::deriv::{
    bracket_span_coeffs, jacobian_potential, rank_over_a, verify_minor_identity,
};
use wn_core::grading::{graded_parts, mn_project};
use wn_core::ideals::{contains, is_invariant, normal_form, tangent_realizer, IdealGens};
use wn_core::parse::{parse_deriv, parse_poly};
use wn_core::sliso::phi;
use wn_core::subalg::{
    a_span, build_l, lie_closure, lk_member,
    lk_quotient_irreducibility_probe, maximality_probe, stabilizer_truncated, ClosureStatus,
};
use wn_core::{Deriv, WnError};

/// Caps above `WN_MAX_CAP` (default 12) are rejected as usage errors.
fn max_cap() -> usize {
    std::env::var("WN_MAX_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(12)
}

#[derive(Parser)]
#[command(name = "wn", version, about = "exact computations with polynomial derivations")]
struct Cli {
    /// Seed for the randomized verification suites (echoed in every report)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lie bracket of two derivations
    Bracket {
        #[arg(short)]
        n: usize,
        a: String,
        b: String,
    },
    /// Apply a derivation to a polynomial
    Apply {
        #[arg(short)]
        n: usize,
        deriv: String,
        poly: String,
    },
    /// Divergence of a derivation
    Div {
        #[arg(short)]
        n: usize,
        deriv: String,
    },
    /// Split a derivation into graded components
    Grade {
        #[arg(short)]
        n: usize,
        deriv: String,
    },
    /// Split a homogeneous component into its divergence-free part and its
    /// Euler multiple
    MnProject {
        #[arg(short)]
        n: usize,
        #[arg(short, long, allow_hyphen_values = true)]
        index: i64,
        deriv: String,
    },
    /// Rank of a family of derivations over the polynomial ring
    Rank {
        #[arg(short)]
        n: usize,
        #[arg(required = true)]
        derivs: Vec<String>,
    },
    /// Gcd of a list of polynomials
    Gcd {
        #[arg(short)]
        n: usize,
        #[arg(required = true)]
        polys: Vec<String>,
    },
    /// Reduced Groebner basis of an ideal
    Groebner {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Ideal membership with the normal form
    Member {
        #[arg(short)]
        n: usize,
        #[arg(long, required = true, num_args = 1..)]
        ideal: Vec<String>,
        poly: String,
    },
    /// Whether a derivation maps the ideal into itself
    Invariant {
        #[arg(short)]
        n: usize,
        #[arg(long, required = true, num_args = 1..)]
        ideal: Vec<String>,
        deriv: String,
    },
    /// A derivation realizing a tangent direction at an off-variety point
    Tangent {
        #[arg(short)]
        n: usize,
        #[arg(long, required = true, num_args = 1..)]
        ideal: Vec<String>,
        /// Comma-separated rational coordinates
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Comma-separated rational direction
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// 2x2 minor of the coefficient matrix of two derivations
    Minor {
        #[arg(short)]
        n: usize,
        a: String,
        b: String,
        #[arg(short)]
        i: usize,
        #[arg(short)]
        j: usize,
    },
    /// Derivative identities for all minors of a pair with [a,b] = mu1 a + mu2 b
    MinorIdentity {
        #[arg(short)]
        n: usize,
        a: String,
        b: String,
        #[arg(long)]
        mu1: String,
        #[arg(long)]
        mu2: String,
    },
    /// Polynomial coefficients writing [a,b] in the A-span of a, b
    SpanCoeffs {
        #[arg(short)]
        n: usize,
        a: String,
        b: String,
    },
    /// Lie closure of generators at a degree cap
    Closure {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        cap: usize,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Polynomial-ring span of the Lie closure at a degree cap
    ASpan {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        cap: usize,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Truncated stabilizer subalgebra of an ideal
    Stabilizer {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        cap: usize,
        #[arg(long, required = true, num_args = 1..)]
        ideal: Vec<String>,
    },
    /// Membership in the stabilizer L_k of (x_{k+1}, ..., x_n)
    LkMember {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        deriv: String,
    },
    /// Orbit probe for the irreducibility of W_n / L_k
    LkIrred {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        cap: usize,
    },
    /// The finite-dimensional maximal subalgebra W^[-1] + W^[0] + N_1
    #[command(name = "build-L")]
    BuildL {
        #[arg(short)]
        n: usize,
    },
    /// Adjoin a derivation to L and compare the closure with truncated W_n
    MaxProbe {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        cap: usize,
        deriv: String,
    },
    /// Image of an element of L in sl_{n+1}
    Phi {
        #[arg(short)]
        n: usize,
        deriv: String,
    },
    /// Run a named verification suite
    Verify {
        suite: suites::Suite,
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        imax: Option<i64>,
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        deg_f: Option<usize>,
        #[arg(long)]
        deg_cof: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Bounded search for Darboux polynomials
    Darboux {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        deriv: String,
        #[arg(long)]
        deg_f: usize,
        #[arg(long)]
        deg_cof: usize,
    },
    /// Darboux search reported as a simplicity probe
    SimpleProbe {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        deriv: String,
        #[arg(long, default_value_t = 3)]
        deg_f: usize,
        #[arg(long, default_value_t = 2)]
        deg_cof: usize,
    },
    /// Potential of a planar Jacobian derivation
    Potential {
        #[arg(short)]
        n: usize,
        deriv: String,
    },
}

/// Outcome of one dispatched command: the JSON payload plus whether a
/// verification it performed failed.
struct Outcome {
    value: Value,
    failed: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            failed: false,
        }
    }

    fn checked(value: Value, pass: bool) -> Self {
        Outcome {
            value,
            failed: !pass,
        }
    }
}

enum CmdError {
    /// Bad input text (exit 3).
    Parse(String),
    /// Domain error from the library (exit 1).
    Domain(String),
    /// Bad flag combination not caught by the parser (exit 2).
    Usage(String),
}

type CmdResult = Result<Outcome, CmdError>;

fn parse_err(e: WnError) -> CmdError {
    CmdError::Parse(e.to_string())
}

fn domain_err(e: WnError) -> CmdError {
    CmdError::Domain(e.to_string())
}

fn poly(s: &str, n: usize) -> Result<Poly, CmdError> {
    parse_poly(s, n).map_err(parse_err)
}

fn deriv(s: &str, n: usize) -> Result<Deriv, CmdError> {
    parse_deriv(s, n).map_err(parse_err)
}

fn polys(ss: &[String], n: usize) -> Result<Vec<Poly>, CmdError> {
    ss.iter().map(|s| poly(s, n)).collect()
}

fn derivs(ss: &[String], n: usize) -> Result<Vec<Deriv>, CmdError> {
    ss.iter().map(|s| deriv(s, n)).collect()
}

fn rat_list(s: &str, n: usize) -> Result<Vec<Rat>, CmdError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(CmdError::Parse(format!(
            "expected {n} comma-separated rationals, found {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<Rat>()
                .map_err(|_| CmdError::Parse(format!("bad rational `{p}`")))
        })
        .collect()
}

fn guard_cap(cap: usize) -> Result<(), CmdError> {
    if cap == 0 || cap > max_cap() {
        return Err(CmdError::Usage(format!(
            "cap {cap} outside 1..={} (raise WN_MAX_CAP to override)",
            max_cap()
        )));
    }
    Ok(())
}

fn status_str(s: ClosureStatus) -> &'static str {
    match s {
        ClosureStatus::Closed => "closed",
        ClosureStatus::SaturatedAtCap => "saturated-at-cap",
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serialization")
}

fn run(cmd: &Cmd, seed: u64) -> CmdResult {
    match cmd {
        Cmd::Bracket { n, a, b } => {
            let r = deriv(a, *n)?.bracket(&deriv(b, *n)?).map_err(domain_err)?;
            Ok(Outcome::ok(json!({ "bracket": r.to_string() })))
        }
        Cmd::Apply { n, deriv: d, poly: p } => {
            let r = deriv(d, *n)?.apply(&poly(p, *n)?).map_err(domain_err)?;
            Ok(Outcome::ok(json!({ "result": r.to_string() })))
        }
        Cmd::Div { n, deriv: d } => {
            let r = deriv(d, *n)?.divergence();
            Ok(Outcome::ok(json!({ "divergence": r.to_string() })))
        }
        Cmd::Grade { n, deriv: d } => {
            let parts = graded_parts(&deriv(d, *n)?);
            let map: serde_json::Map<String, Value> = parts
                .iter()
                .map(|(i, p)| (i.to_string(), Value::String(p.to_string())))
                .collect();
            Ok(Outcome::ok(json!({ "components": map })))
        }
        Cmd::MnProject { n, index, deriv: d } => {
            let (m, e) = mn_project(&deriv(d, *n)?, *index).map_err(domain_err)?;
            Ok(Outcome::ok(json!({
                "m_part": m.to_string(),
                "n_part": e.to_string(),
            })))
        }
        Cmd::Rank { n, derivs: ds } => {
            let r = rank_over_a(&derivs(ds, *n)?).map_err(domain_err)?;
            Ok(Outcome::ok(json!({ "rank": r })))
        }
        Cmd::Gcd { n, polys: ps } => {
            let r = multi_gcd(&polys(ps, *n)?).map_err(domain_err)?;
            Ok(Outcome::ok(json!({ "gcd": r.to_string() })))
        }
        Cmd::Groebner { n, order, gens } => {
            let ideal = IdealGens::new(*n, polys(gens, *n)?);
            let ord = match order {
                OrderArg::Grevlex => MonomialOrder::Grevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let gb = wn_core::ideals::groebner(&ideal, ord);
            let basis: Vec<String> = gb.basis().iter().map(|p| p.to_string()).collect();
            Ok(Outcome::ok(json!({ "basis": basis })))
        }
        Cmd::Member { n, ideal, poly: p } => {
            let ideal = IdealGens::new(*n, polys(ideal, *n)?);
            let p = poly(p, *n)?;
            let nf = normal_form(&p, ideal.groebner());
            Ok(Outcome::ok(json!({
                "member": contains(&ideal, &p),
                "normal_form": nf.to_string(),
            })))
        }
        Cmd::Invariant { n, ideal, deriv: d } => {
            let ideal = IdealGens::new(*n, polys(ideal, *n)?);
            let r = is_invariant(&ideal, &deriv(d, *n)?).map_err(domain_err)?;
            Ok(Outcome::ok(json!({ "invariant": r })))
        }
        Cmd::Tangent {
            n,
            ideal,
            point,
            vector,
        } => {
            let ideal = IdealGens::new(*n, polys(ideal, *n)?);
            let p = rat_list(point, *n)?;
            let u = rat_list(vector, *n)?;
            let d = tangent_realizer(&ideal, &p, &u).map_err(domain_err)?;
            Ok(Outcome::ok(json!({ "deriv": d.to_string() })))
        }
        Cmd::Minor { n, a, b, i, j } => {
            if *i == 0 || *j == 0 {
                return Err(CmdError::Usage("minor indices are 1-based".into()));
            }
            let r = Deriv::minor(&deriv(a, *n)?, &deriv(b, *n)?, i - 1, j - 1).map_err(domain_err)?;
            Ok(Outcome::ok(json!({ "minor": r.to_string() })))
        }
        Cmd::MinorIdentity { n, a, b, mu1, mu2 } => {
            let report = verify_minor_identity(
                &deriv(a, *n)?,
                &deriv(b, *n)?,
                &poly(mu1, *n)?,
                &poly(mu2, *n)?,
            )
            .map_err(domain_err)?;
            let pass = report.all_ok;
            Ok(Outcome::checked(to_json(&report), pass))
        }
        Cmd::SpanCoeffs { n, a, b } => {
            let r = bracket_span_coeffs(&deriv(a, *n)?, &deriv(b, *n)?).map_err(domain_err)?;
            Ok(Outcome::ok(match r {
                Some((c1, c2)) => json!({
                    "in_span": true,
                    "c1": c1.to_string(),
                    "c2": c2.to_string(),
                }),
                None => json!({ "in_span": false }),
            }))
        }
        Cmd::Closure { n, cap, gens } => {
            guard_cap(*cap)?;
            let t = lie_closure(&derivs(gens, *n)?, *n, *cap).map_err(domain_err)?;
            Ok(Outcome::ok(json!({
                "dim": t.space.dim(),
                "status": status_str(t.status),
            })))
        }
        Cmd::ASpan { n, cap, gens } => {
            guard_cap(*cap)?;
            let t = lie_closure(&derivs(gens, *n)?, *n, *cap).map_err(domain_err)?;
            let sp = a_span(&t.space, *cap).map_err(domain_err)?;
            Ok(Outcome::ok(json!({
                "closure_dim": t.space.dim(),
                "a_span_dim": sp.dim(),
                "status": status_str(t.status),
            })))
        }
        Cmd::Stabilizer { n, cap, ideal } => {
            guard_cap(*cap)?;
            let ideal = IdealGens::new(*n, polys(ideal, *n)?);
            let s = stabilizer_truncated(&ideal, *cap).map_err(domain_err)?;
            let basis: Vec<String> = s.basis_derivs().iter().map(|d| d.to_string()).collect();
            Ok(Outcome::ok(json!({ "dim": s.dim(), "basis": basis })))
        }
        Cmd::LkMember { n, k, deriv: d } => {
            let r = lk_member(&deriv(d, *n)?, *k).map_err(domain_err)?;
            Ok(Outcome::ok(json!({ "member": r })))
        }
        Cmd::LkIrred { n, k, cap } => {
            guard_cap(*cap)?;
            let report = lk_quotient_irreducibility_probe(*n, *k, *cap).map_err(domain_err)?;
            let pass = report.all_full;
            Ok(Outcome::checked(to_json(&report), pass))
        }
        Cmd::BuildL { n } => {
            let l = build_l(*n).map_err(domain_err)?;
            let basis: Vec<String> = l.space.basis_derivs().iter().map(|d| d.to_string()).collect();
            Ok(Outcome::ok(json!({ "dim": l.space.dim(), "basis": basis })))
        }
        Cmd::MaxProbe { n, cap, deriv: d } => {
            guard_cap(*cap)?;
            let l = build_l(*n).map_err(domain_err)?;
            let report = maximality_probe(&l, &deriv(d, *n)?, *cap).map_err(domain_err)?;
            let pass = report.equal;
            Ok(Outcome::checked(to_json(&report), pass))
        }
        Cmd::Phi { n, deriv: d } => {
            let m = phi(&deriv(d, *n)?).map_err(domain_err)?;
            let rows: Vec<Vec<String>> = (0..*n + 1)
                .map(|r| (0..*n + 1).map(|c| m.get(r, c).to_string()).collect())
                .collect();
            Ok(Outcome::ok(json!({ "matrix": rows })))
        }
        Cmd::Verify {
            suite,
            n,
            imax,
            k,
            cap,
            deg_f,
            deg_cof,
            count,
        } => suites::run(
            *suite,
            suites::Params {
                n: *n,
                imax: *imax,
                k: *k,
                cap: *cap,
                deg_f: *deg_f,
                deg_cof: *deg_cof,
                count: *count,
                seed,
            },
        ),
        Cmd::Darboux {
            n,
            deriv: d,
            deg_f,
            deg_cof,
        } => {
            let report = find_darboux(&deriv(d, *n)?, *deg_f, *deg_cof).map_err(domain_err)?;
            Ok(Outcome::ok(to_json(&report)))
        }
        Cmd::SimpleProbe {
            n,
            deriv: d,
            deg_f,
            deg_cof,
        } => {
            let report = simplicity_probe(&deriv(d, *n)?, *deg_f, *deg_cof).map_err(domain_err)?;
            Ok(Outcome::ok(to_json(&report)))
        }
        Cmd::Potential { n, deriv: d } => {
            if *n != 2 {
                return Err(CmdError::Usage("potential requires -n 2".into()));
            }
            let r = jacobian_potential(&deriv(d, *n)?).map_err(domain_err)?;
            Ok(Outcome::ok(match r {
                Some(f) => json!({ "has_potential": true, "potential": f.to_string() }),
                None => json!({ "has_potential": false }),
            }))
        }
    }
}

fn emit(pretty: bool, v: &Value) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(v).unwrap());
    } else {
        println!("{}", serde_json::to_string(v).unwrap());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd, cli.seed) {
        Ok(out) => {
            let wrapped = json!({ "seed": cli.seed, "report": out.value });
            emit(cli.pretty, &wrapped);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CmdError::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(3)
        }
        Err(CmdError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
