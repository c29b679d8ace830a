//! Named verification suites: each one exercises a library theorem with
//! documented default parameters and reports pass/fail per item.

use crate::{CmdError, CmdResult, Outcome};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wn_core::arith::{monomials_up_to, Poly, Rat};
use wn_core::darboux::simplicity_probe;
use wn_core::deriv::{verify_delta_corollary, verify_minor_identity};
use wn_core::grading::verify_bracket_table;
use wn_core::parse::parse_deriv;
use wn_core::sliso::verify_iso;
use wn_core::subalg::{
    build_l, closure_lemma_check, coordinate_ideal, lk_member,
    lk_quotient_irreducibility_probe, maximality_probe, stabilizer_truncated,
};
use wn_core::{Deriv, WnError};

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    /// Euler derivation identities on monomials
    Euler,
    /// The graded bracket table with its exceptional cells
    Products,
    /// The isomorphism of L with sl_{n+1}
    SlIso,
    /// Maximality probes for L at truncation
    Th5Probe,
    /// Stabilizers of coordinate-plane ideals and their quotients
    Lk,
    /// Derivative identities for coefficient minors
    MinorIdentity,
    /// The planar corollary: Delta_12 as a common Darboux polynomial
    Delta,
    /// A-spans of Lie-closure stages stay inside the limit
    Closure,
    /// Bounded Darboux search on the known simple example
    ExampleSimple,
}

pub struct Params {
    pub n: usize,
    pub imax: Option<i64>,
    pub k: Option<usize>,
    pub cap: Option<usize>,
    pub deg_f: Option<usize>,
    pub deg_cof: Option<usize>,
    pub count: Option<usize>,
    pub seed: u64,
}

fn domain(e: WnError) -> CmdError {
    CmdError::Domain(e.to_string())
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, deg: usize) -> Poly {
    let mons = monomials_up_to(n, deg);
    let mut p = Poly::zero(n);
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let m = mons[rng.gen_range(0..mons.len())].clone();
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        p = p.add(&Poly::term(m, Rat::from_integer(c.into()))).unwrap();
    }
    p
}

fn random_deriv(rng: &mut ChaCha8Rng, n: usize, deg: usize) -> Deriv {
    loop {
        let coeffs: Vec<Poly> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.7) {
                    random_poly(rng, n, deg)
                } else {
                    Poly::zero(n)
                }
            })
            .collect();
        let d = Deriv::new(coeffs).unwrap();
        if !d.is_zero() {
            return d;
        }
    }
}

pub fn run(suite: Suite, p: Params) -> CmdResult {
    match suite {
        Suite::Euler => euler(&p),
        Suite::Products => {
            let report = verify_bracket_table(p.n, p.imax.unwrap_or(2)).map_err(domain)?;
            let pass = report.all_pass;
            Ok(Outcome::checked(crate::to_json(&report), pass))
        }
        Suite::SlIso => {
            let report = verify_iso(p.n).map_err(domain)?;
            let pass = report.pass;
            Ok(Outcome::checked(crate::to_json(&report), pass))
        }
        Suite::Th5Probe => th5_probe(&p),
        Suite::Lk => lk(&p),
        Suite::MinorIdentity => minor_identity(&p),
        Suite::Delta => delta(&p),
        Suite::Closure => closure(&p),
        Suite::ExampleSimple => example_simple(&p),
    }
}

/// `E(f) = m f`, `div(f E) = (m + n) f`, `[E, D] = i D` over all monomials
/// `f` and monomial derivations `D` up to the degree bound.
fn euler(p: &Params) -> CmdResult {
    let n = p.n;
    let deg = p.deg_f.unwrap_or(4);
    let e = Deriv::euler(n);
    let mut checked = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for m in monomials_up_to(n, deg) {
        let f = Poly::term(m.clone(), Rat::from_integer(1.into()));
        let mf = f.scale(&Rat::from_integer((m.degree() as i64).into()));
        checked += 1;
        if e.apply(&f).map_err(domain)? != mf {
            failures.push(format!("E({f}) != {}*{f}", m.degree()));
        }
        let fe = e.scale_poly(&f).map_err(domain)?;
        let expect = f.scale(&Rat::from_integer(((m.degree() + n) as i64).into()));
        checked += 1;
        if fe.divergence() != expect {
            failures.push(format!("div({f}*E) != ({}+{n})*{f}", m.degree()));
        }
        for j in 0..n {
            let d = Deriv::monomial(m.clone(), j);
            let i = m.degree() as i64 - 1;
            let expect = d.scale(&Rat::from_integer(i.into()));
            checked += 1;
            if e.bracket(&d).map_err(domain)? != expect {
                failures.push(format!("[E, {d}] != {i}*{d}"));
            }
        }
    }
    let pass = failures.is_empty();
    Ok(Outcome::checked(
        json!({
            "suite": "euler",
            "n": n,
            "degree_bound": deg,
            "identities_checked": checked,
            "failures": failures,
            "pass": pass,
        }),
        pass,
    ))
}

/// Every monomial derivation of low degree outside `L` drives the closure
/// of `L ∪ {d}` to the full truncated algebra.
fn th5_probe(p: &Params) -> CmdResult {
    let n = p.n;
    let cap = p.cap.unwrap_or(5);
    crate::guard_cap(cap)?;
    let deg = p.deg_f.unwrap_or(2);
    let l = build_l(n).map_err(domain)?;
    let mut probes: Vec<Value> = Vec::new();
    let mut pass = true;
    for m in monomials_up_to(n, deg) {
        for j in 0..n {
            let d = Deriv::monomial(m.clone(), j);
            match maximality_probe(&l, &d, cap) {
                Err(WnError::AlreadyInside) => continue,
                Err(e) => return Err(domain(e)),
                Ok(r) => {
                    pass &= r.equal;
                    probes.push(crate::to_json(&r));
                }
            }
        }
    }
    Ok(Outcome::checked(
        json!({
            "suite": "th5-probe",
            "n": n,
            "cap": cap,
            "degree_bound": deg,
            "probes": probes,
            "pass": pass,
        }),
        pass,
    ))
}

/// Truncated stabilizer of the coordinate-plane ideal agrees with the
/// direct membership test, and the quotient orbit probe is transitive.
fn lk(p: &Params) -> CmdResult {
    let n = p.n;
    let k = p.k.unwrap_or(1);
    let cap = p.cap.unwrap_or(3);
    crate::guard_cap(cap)?;
    let ideal = coordinate_ideal(n, k).map_err(domain)?;
    let stab = stabilizer_truncated(&ideal, cap).map_err(domain)?;
    let frame = stab.frame().clone();
    let mut agree = true;
    for pos in 0..frame.dim() {
        let b = frame.basis_deriv(pos);
        agree &= stab.contains(&b).map_err(domain)? == lk_member(&b, k).map_err(domain)?;
    }
    let irred = lk_quotient_irreducibility_probe(n, k, cap).map_err(domain)?;
    let pass = agree && irred.all_full;
    Ok(Outcome::checked(
        json!({
            "suite": "lk",
            "n": n,
            "k": k,
            "cap": cap,
            "stabilizer_dim": stab.dim(),
            "membership_agrees": agree,
            "irreducibility": crate::to_json(&irred),
            "pass": pass,
        }),
        pass,
    ))
}

/// Seeded pairs `(d, f d)` satisfy `[d, f d] = d(f) d`, so the minor
/// identities apply with `mu1 = d(f)`, `mu2 = 0`.
fn minor_identity(p: &Params) -> CmdResult {
    let n = p.n;
    let count = p.count.unwrap_or(20);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut pass = true;
    let mut items: Vec<Value> = Vec::new();
    for _ in 0..count {
        let a = random_deriv(&mut rng, n, 2);
        let f = random_poly(&mut rng, n, 2);
        let b = a.scale_poly(&f).map_err(domain)?;
        if b.is_zero() {
            continue;
        }
        let mu1 = a.apply(&f).map_err(domain)?;
        let report = verify_minor_identity(&a, &b, &mu1, &Poly::zero(n)).map_err(domain)?;
        pass &= report.all_ok;
        items.push(json!({
            "d1": a.to_string(),
            "d2": b.to_string(),
            "mu1": mu1.to_string(),
            "all_ok": report.all_ok,
        }));
    }
    Ok(Outcome::checked(
        json!({
            "suite": "minor-identity",
            "n": n,
            "pairs": items,
            "pass": pass,
        }),
        pass,
    ))
}

/// Planar specialization of the same pairs: `Delta_12` is a common Darboux
/// polynomial with the predicted cofactors.
fn delta(p: &Params) -> CmdResult {
    if p.n != 2 {
        return Err(CmdError::Usage("suite delta requires -n 2".into()));
    }
    let count = p.count.unwrap_or(20);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut pass = true;
    let mut items: Vec<Value> = Vec::new();
    for _ in 0..count {
        let a = random_deriv(&mut rng, 2, 2);
        let f = random_poly(&mut rng, 2, 2);
        let b = a.scale_poly(&f).map_err(domain)?;
        if b.is_zero() {
            continue;
        }
        let mu1 = a.apply(&f).map_err(domain)?;
        let report = verify_delta_corollary(&a, &b, &mu1, &Poly::zero(2)).map_err(domain)?;
        pass &= report.all_ok;
        items.push(crate::to_json(&report));
    }
    Ok(Outcome::checked(
        json!({ "suite": "delta", "pairs": items, "pass": pass }),
        pass,
    ))
}

/// A-spans of the closure stages of seeded pairs stay inside the A-span of
/// the limit.
fn closure(p: &Params) -> CmdResult {
    let n = p.n;
    let cap = p.cap.unwrap_or(6);
    crate::guard_cap(cap)?;
    let count = p.count.unwrap_or(10);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut pass = true;
    let mut items: Vec<Value> = Vec::new();
    for _ in 0..count {
        // affine generators: their closure terminates below the cap, so the
        // containment check is exact rather than truncation-limited
        let d1 = random_deriv(&mut rng, n, 1);
        let d2 = random_deriv(&mut rng, n, 1);
        let report = closure_lemma_check(&d1, &d2, cap).map_err(domain)?;
        pass &= report.all_contained;
        items.push(json!({
            "d1": d1.to_string(),
            "d2": d2.to_string(),
            "report": crate::to_json(&report),
        }));
    }
    Ok(Outcome::checked(
        json!({ "suite": "closure", "n": n, "cap": cap, "pairs": items, "pass": pass }),
        pass,
    ))
}

/// Bounded Darboux search for `d/dx + (1 + xy) d/dy`; expected outcome is
/// literally "no obstruction up to bounds".
fn example_simple(p: &Params) -> CmdResult {
    let deg_f = p.deg_f.unwrap_or(3);
    let deg_cof = p.deg_cof.unwrap_or(2);
    let d = parse_deriv("[1, 1 + x*y]", 2).map_err(domain)?;
    let report = simplicity_probe(&d, deg_f, deg_cof).map_err(domain)?;
    let pass = report.conclusion == "no obstruction up to bounds";
    Ok(Outcome::checked(
        json!({
            "suite": "example-simple",
            "deriv": d.to_string(),
            "report": crate::to_json(&report),
            "pass": pass,
        }),
        pass,
    ))
}
