//! Ideals of the polynomial ring by generators, reduced Groebner bases via
//! Buchberger's algorithm, ideal membership, and derivation invariance
//! `D(I) ⊆ I`.
//!
//! The Leibniz rule makes the invariance check generator-local: if
//! `D(g) ∈ I` for every generator `g` then `D(fg) = D(f)g + fD(g) ∈ I`
//! for all `f`, so no saturation is needed.

use crate::arith::{Monomial, MonomialOrder, Poly, Rat};
use crate::deriv::Deriv;
use crate::{Result, WnError};
use num_traits::One;
use once_cell::sync::OnceCell;

/// An ideal given by a finite generating set. The reduced grevlex Groebner
/// basis is memoized; concurrent first computations may duplicate work but
/// observe the same canonical result.
#[derive(Clone, Debug)]
pub struct IdealGens {
    n: usize,
    gens: Vec<Poly>,
    cache: OnceCell<GroebnerBasis>,
}

impl PartialEq for IdealGens {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gens == other.gens
    }
}

impl IdealGens {
    pub fn new(n: usize, gens: Vec<Poly>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        IdealGens {
            n,
            gens,
            cache: OnceCell::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whole ring: some generator reduces to a unit.
    pub fn is_unit(&self) -> bool {
        self.groebner().basis().iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.cache
            .get_or_init(|| groebner(self, MonomialOrder::Grevlex))
    }
}

/// A reduced Groebner basis for a fixed monomial order: no term of any
/// element is divisible by another element's leading term, and leading
/// coefficients are 1. Unique for (ideal, order).
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }
}

fn leading_mono(p: &Poly, order: MonomialOrder) -> Monomial {
    p.leading(order).expect("nonzero").0.clone()
}

/// One full reduction step sweep: remainder of multivariate division of `p`
/// by the list `gs`.
fn reduce(p: &Poly, gs: &[Poly], order: MonomialOrder) -> Poly {
    let n = p.n();
    let mut rem = Poly::zero(n);
    let mut h = p.clone();
    let leads: Vec<(Monomial, Rat)> = gs
        .iter()
        .map(|g| {
            let (m, c) = g.leading(order).expect("nonzero divisor");
            (m.clone(), c.clone())
        })
        .collect();
    while !h.is_zero() {
        let (hm, hc) = {
            let (m, c) = h.leading(order).unwrap();
            (m.clone(), c.clone())
        };
        let mut reduced = false;
        for (g, (gm, gc)) in gs.iter().zip(&leads) {
            if let Some(q) = hm.try_div(gm) {
                h = h.sub(&g.mul_term(&q, &(hc.clone() / gc))).unwrap();
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem = rem.add(&Poly::term(hm.clone(), hc.clone())).unwrap();
            h = h.sub(&Poly::term(hm, hc)).unwrap();
        }
    }
    rem
}

/// Buchberger with the coprimality and chain criteria, followed by
/// inter-reduction to the unique reduced basis.
pub fn groebner(ideal: &IdealGens, order: MonomialOrder) -> GroebnerBasis {
    let n = ideal.n;
    let mut basis: Vec<Poly> = ideal
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if basis.is_empty() {
        return GroebnerBasis {
            order,
            basis: Vec::new(),
        };
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let lmi = leading_mono(&basis[i], order);
        let lmj = leading_mono(&basis[j], order);
        let lcm = lmi.lcm(&lmj);
        // Buchberger's first criterion: coprime leading monomials
        if lcm == lmi.mul(&lmj) {
            continue;
        }
        // chain criterion: some k with lt(k) | lcm and both (i,k), (j,k) done
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leading_mono(&basis[k], order).divides(&lcm)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let (ci, cj) = {
            let (_, a) = basis[i].leading(order).unwrap();
            let (_, b) = basis[j].leading(order).unwrap();
            (a.clone(), b.clone())
        };
        let s = basis[i]
            .mul_term(&lcm.try_div(&lmi).unwrap(), &(Rat::one() / ci))
            .sub(&basis[j].mul_term(&lcm.try_div(&lmj).unwrap(), &(Rat::one() / cj)))
            .unwrap();
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let new = basis.len();
            for k in 0..new {
                pairs.push((k, new));
            }
            basis.push(r);
        }
    }
    // minimalize: drop elements whose leading term is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = leading_mono(&basis[i], order);
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && leading_mono(&basis[j], order).divides(&lmi)
                && (leading_mono(&basis[j], order) != lmi || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(g, _)| g.clone())
        .collect();
    // fully reduce each element against the others and make monic
    let mut reduced: Vec<Poly> = Vec::new();
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let r = if others.is_empty() {
            g.clone()
        } else {
            reduce(g, &others, order)
        };
        if !r.is_zero() {
            let lc = r.leading(order).unwrap().1.clone();
            reduced.push(r.scale(&(Rat::one() / lc)));
        }
    }
    // canonical ordering by leading monomial
    reduced.sort_by(|a, b| order.cmp(&leading_mono(a, order), &leading_mono(b, order)));
    let _ = n;
    GroebnerBasis {
        order,
        basis: reduced,
    }
}

/// Remainder of multivariate division against the basis; zero exactly when
/// the polynomial lies in the ideal.
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Poly {
    if gb.basis.is_empty() {
        return p.clone();
    }
    reduce(p, &gb.basis, gb.order)
}

/// Ideal membership through the cached grevlex basis.
pub fn contains(ideal: &IdealGens, p: &Poly) -> bool {
    if p.is_zero() {
        return true;
    }
    normal_form(p, ideal.groebner()).is_zero()
}

/// `D(I) ⊆ I`, decided generator-locally (sufficient by the Leibniz rule).
pub fn is_invariant(ideal: &IdealGens, d: &Deriv) -> Result<bool> {
    if d.n() != ideal.n {
        return Err(WnError::VarMismatch {
            expected: ideal.n,
            found: d.n(),
        });
    }
    for g in &ideal.gens {
        if !contains(ideal, &d.apply(g)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Product ideal, generated by pairwise products of generators.
pub fn ideal_product(a: &IdealGens, b: &IdealGens) -> Result<IdealGens> {
    if a.n != b.n {
        return Err(WnError::VarMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    let mut gens = Vec::new();
    for f in &a.gens {
        for g in &b.gens {
            gens.push(f.mul(g)?);
        }
    }
    Ok(IdealGens::new(a.n, gens))
}

/// The tangent-realizer construction: for `p` off the variety of `I`
/// (certified by a generator `F` with `F(p) != 0`), the derivation
/// `D = (F / F(p)) * sum u_i d/dx_i` satisfies `D(I) ⊆ I` and has vector
/// field value `u` at `p`. Picks the first nonvanishing generator in
/// stored order.
pub fn tangent_realizer(ideal: &IdealGens, point: &[Rat], u: &[Rat]) -> Result<Deriv> {
    if point.len() != ideal.n || u.len() != ideal.n {
        return Err(WnError::LengthMismatch {
            expected: ideal.n,
            found: point.len().max(u.len()),
        });
    }
    let mut chosen = None;
    for g in &ideal.gens {
        let v = g.eval(point)?;
        if !num_traits::Zero::is_zero(&v) {
            chosen = Some((g.clone(), v));
            break;
        }
    }
    let Some((f, fp)) = chosen else {
        return Err(WnError::PointOnVariety);
    };
    let scaled = f.scale(&(Rat::one() / fp));
    let coeffs = u.iter().map(|ui| scaled.scale(ui)).collect();
    Deriv::new(coeffs)
}
