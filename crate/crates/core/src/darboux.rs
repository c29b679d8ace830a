//! Darboux polynomials of a derivation: nonconstant `f` with
//! `d(f) = λ f` for a polynomial cofactor `λ`, and a bounded search used as
//! a simplicity probe (a Darboux polynomial yields the proper nonzero
//! invariant ideal `(f)`... its absence up to bounds is evidence, not proof).

use crate::arith::{monomials_up_to, Monomial, MonomialOrder, Poly, Rat};
use crate::deriv::Deriv;
use crate::ideals::IdealGens;
use crate::{Result, WnError};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// Exact Darboux test: returns the cofactor when `f` divides `d(f)`.
pub fn is_darboux(d: &Deriv, f: &Poly) -> Result<Option<Poly>> {
    match f.degree() {
        None | Some(0) => return Err(WnError::ConstantPoly),
        _ => {}
    }
    let df = d.apply(f)?;
    if df.is_zero() {
        return Ok(Some(Poly::zero(f.n())));
    }
    Ok(df.exact_div(f))
}

#[derive(Clone, Debug, Serialize)]
pub struct DarbouxWitness {
    #[serde(serialize_with = "crate::serialize_poly")]
    pub f: Poly,
    #[serde(serialize_with = "crate::serialize_poly")]
    pub cofactor: Poly,
}

#[derive(Clone, Debug, Serialize)]
pub struct DarbouxSearchReport {
    pub deg_f: usize,
    pub deg_cofactor: usize,
    pub witnesses: Vec<DarbouxWitness>,
    pub unresolved_branches: usize,
    pub found: bool,
}

/// A polynomial in the x-variables whose coefficients are polynomials in
/// the unknowns of the bilinear Darboux system.
type UPoly = BTreeMap<Monomial, Poly>;

fn upoly_insert(u: &mut UPoly, m: Monomial, c: Poly) {
    if c.is_zero() {
        return;
    }
    match u.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c).unwrap();
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// `d` applied to a coefficient template.
fn upoly_derive(d: &Deriv, f: &UPoly, nu: usize) -> UPoly {
    let n = d.n();
    let mut out = UPoly::new();
    for (m, uc) in f {
        for j in 0..n {
            let e = m.exps()[j];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[j] -= 1;
            let dm = Monomial::new(exps);
            // multiply e * x^{m - e_j} by the coefficient of d/dx_j
            for (dm2, c2) in d.coeffs()[j].terms() {
                let _ = nu;
                let factor = c2 * Rat::from_integer((e as i64).into());
                upoly_insert(&mut out, dm.mul(dm2), uc.scale(&factor));
            }
        }
    }
    out
}

/// Product of two coefficient templates (unknown-polynomial coefficients
/// multiply, so the result is bilinear in the unknowns).
fn upoly_mul(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = UPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            upoly_insert(&mut out, ma.mul(mb), ca.mul(cb).unwrap());
        }
    }
    out
}

enum SolveOutcome {
    Solution(Vec<Rat>),
    Inconsistent,
    Unresolved,
}

/// Solves a bilinear system by repeated linear elimination with a Groebner
/// fallback; any remaining free unknowns are set to zero.
fn solve_system(nu: usize, mut eqs: Vec<Poly>) -> SolveOutcome {
    // recorded substitutions: unknown index -> value in the free unknowns
    let mut subst: Vec<(usize, Poly)> = Vec::new();
    for round in 0..4 {
        loop {
            eqs.retain(|e| !e.is_zero());
            if eqs.iter().any(|e| e.is_constant()) {
                return SolveOutcome::Inconsistent;
            }
            let Some(pos) = eqs.iter().position(|e| e.degree() == Some(1)) else {
                break;
            };
            let eq = eqs.swap_remove(pos);
            let (lm, lc) = eq.leading(MonomialOrder::Grevlex).unwrap();
            let v = lm.exps().iter().position(|&e| e == 1).unwrap();
            let value = eq
                .sub(&Poly::term(lm.clone(), lc.clone()))
                .unwrap()
                .scale(&(-Rat::one() / lc.clone()));
            for e in eqs.iter_mut() {
                *e = e.substitute(v, &value).unwrap();
            }
            for (_, p) in subst.iter_mut() {
                *p = p.substitute(v, &value).unwrap();
            }
            subst.push((v, value));
        }
        if eqs.is_empty() {
            break;
        }
        if round == 3 {
            return SolveOutcome::Unresolved;
        }
        // nonlinear residue: pass through a Groebner basis and retry; the
        // basis often exposes new linear elements
        let gb = IdealGens::new(nu, eqs.clone()).groebner().basis().to_vec();
        if gb.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return SolveOutcome::Inconsistent;
        }
        if gb == eqs {
            return SolveOutcome::Unresolved;
        }
        eqs = gb;
    }
    // free unknowns -> 0, evaluate the recorded chain
    let zeros = vec![Rat::zero(); nu];
    let mut assignment = vec![Rat::zero(); nu];
    for (v, p) in &subst {
        assignment[*v] = p.eval(&zeros).unwrap();
    }
    SolveOutcome::Solution(assignment)
}

/// Bounded Darboux search: one branch per candidate leading monomial of
/// `f` (coefficient normalized to 1, larger monomials zero). Every
/// solution is re-verified with `is_darboux` before being reported.
pub fn find_darboux(d: &Deriv, deg_f: usize, deg_cofactor: usize) -> Result<DarbouxSearchReport> {
    let n = d.n();
    if d.is_zero() {
        return Err(WnError::ZeroDerivation);
    }
    let mut f_mons = monomials_up_to(n, deg_f); // ascending grevlex
    f_mons.retain(|m| m.degree() > 0);
    let cof_mons = monomials_up_to(n, deg_cofactor);
    let mut witnesses = Vec::new();
    let mut unresolved = 0usize;
    // descending leading monomials, so structurally larger candidates first
    for (li, lead) in f_mons.iter().enumerate().rev() {
        let lower = &f_mons[..li];
        // unknown layout: u_0 constant term of f, u_1.. the lower monomials,
        // then the cofactor coefficients
        let nu = 1 + lower.len() + cof_mons.len();
        let mut f_tpl = UPoly::new();
        upoly_insert(&mut f_tpl, lead.clone(), Poly::one(nu));
        upoly_insert(&mut f_tpl, Monomial::one(n), Poly::var(nu, 0));
        for (k, m) in lower.iter().enumerate() {
            upoly_insert(&mut f_tpl, m.clone(), Poly::var(nu, 1 + k));
        }
        let mut cof_tpl = UPoly::new();
        for (k, m) in cof_mons.iter().enumerate() {
            upoly_insert(&mut cof_tpl, m.clone(), Poly::var(nu, 1 + lower.len() + k));
        }
        let mut lhs = upoly_derive(d, &f_tpl, nu);
        for (m, c) in upoly_mul(&cof_tpl, &f_tpl) {
            upoly_insert(&mut lhs, m, c.neg());
        }
        let eqs: Vec<Poly> = lhs.into_values().collect();
        match solve_system(nu, eqs) {
            SolveOutcome::Inconsistent => {}
            SolveOutcome::Unresolved => unresolved += 1,
            SolveOutcome::Solution(a) => {
                let mut f = Poly::term(lead.clone(), Rat::one());
                if !a[0].is_zero() {
                    f = f.add(&Poly::constant(n, a[0].clone()))?;
                }
                for (k, m) in lower.iter().enumerate() {
                    if !a[1 + k].is_zero() {
                        f = f.add(&Poly::term(m.clone(), a[1 + k].clone()))?;
                    }
                }
                if let Some(cof) = is_darboux(d, &f)? {
                    witnesses.push(DarbouxWitness { f, cofactor: cof });
                }
            }
        }
    }
    let found = !witnesses.is_empty();
    Ok(DarbouxSearchReport {
        deg_f,
        deg_cofactor,
        witnesses,
        unresolved_branches: unresolved,
        found,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplicityReport {
    pub deg_f: usize,
    pub deg_cofactor: usize,
    pub darboux_found: bool,
    pub unresolved_branches: usize,
    pub conclusion: String,
}

/// Searches for Darboux polynomials of `d` within the bounds; a witness is
/// an invariant principal ideal, hence an obstruction, while an empty
/// search only rules out obstructions within the bounds.
pub fn simplicity_probe(d: &Deriv, deg_f: usize, deg_cofactor: usize) -> Result<SimplicityReport> {
    let search = find_darboux(d, deg_f, deg_cofactor)?;
    let conclusion = if search.found {
        format!(
            "Darboux polynomial found: ({}) is a proper nonzero invariant ideal",
            search.witnesses[0].f
        )
    } else if search.unresolved_branches > 0 {
        "no witness found, but some branches were unresolved; inconclusive".to_string()
    } else {
        "no obstruction up to bounds".to_string()
    };
    Ok(SimplicityReport {
        deg_f,
        deg_cofactor,
        darboux_found: search.found,
        unresolved_branches: search.unresolved_branches,
        conclusion,
    })
}
