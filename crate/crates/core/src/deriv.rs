//! Derivations of the polynomial ring and the Lie-algebra operations on
//! them: application, bracket, divergence, the Euler and Jacobian
//! derivations, the 2x2 minors `Delta_ij` with their invariance identities,
//! rank over the polynomial ring, and proportionality witnesses.

use crate::arith::{multi_gcd, poly_gcd, Poly, Rat};
use crate::{Result, WnError};
use num_traits::One;
use serde::Serialize;
use std::fmt;

/// A derivation `D = f_1 d/dx_1 + ... + f_n d/dx_n`, stored by its
/// coefficient tuple `(D(x_1), ..., D(x_n))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Deriv {
    n: usize,
    coeffs: Vec<Poly>,
}

impl Deriv {
    pub fn new(coeffs: Vec<Poly>) -> Result<Self> {
        let n = coeffs.len();
        for c in &coeffs {
            if c.n() != n {
                return Err(WnError::VarMismatch {
                    expected: n,
                    found: c.n(),
                });
            }
        }
        Ok(Deriv { n, coeffs })
    }

    pub fn zero(n: usize) -> Self {
        Deriv {
            n,
            coeffs: vec![Poly::zero(n); n],
        }
    }

    /// `d/dx_i` for a 0-based index.
    pub fn partial(n: usize, i: usize) -> Self {
        let mut coeffs = vec![Poly::zero(n); n];
        coeffs[i] = Poly::one(n);
        Deriv { n, coeffs }
    }

    /// The monomial derivation `x^m d/dx_j`.
    pub fn monomial(m: crate::arith::Monomial, j: usize) -> Self {
        let n = m.n();
        let mut coeffs = vec![Poly::zero(n); n];
        coeffs[j] = Poly::term(m, Rat::one());
        Deriv { n, coeffs }
    }

    /// The Euler derivation `E_n = sum x_i d/dx_i`.
    pub fn euler(n: usize) -> Self {
        assert!(n >= 1);
        Deriv {
            n,
            coeffs: (0..n).map(|i| Poly::var(n, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_n(&self, other: &Deriv) -> Result<()> {
        if self.n != other.n {
            return Err(WnError::VarMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Deriv) -> Result<Deriv> {
        self.check_n(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Deriv { n: self.n, coeffs })
    }

    pub fn sub(&self, other: &Deriv) -> Result<Deriv> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Deriv {
        Deriv {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Deriv {
        Deriv {
            n: self.n,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Module action `f * D`.
    pub fn scale_poly(&self, f: &Poly) -> Result<Deriv> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Deriv { n: self.n, coeffs })
    }

    /// Applies the derivation to a polynomial: `D(p) = sum f_i dp/dx_i`.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        if p.n() != self.n {
            return Err(WnError::VarMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        let mut out = Poly::zero(self.n);
        for (i, f) in self.coeffs.iter().enumerate() {
            out = out.add(&f.mul(&p.partial(i)?)?)?;
        }
        Ok(out)
    }

    /// Lie bracket `[a, b] = a o b - b o a`, computed coefficientwise as
    /// `a(b(x_j)) - b(a(x_j))`.
    pub fn bracket(&self, other: &Deriv) -> Result<Deriv> {
        self.check_n(other)?;
        let coeffs = (0..self.n)
            .map(|j| {
                self.apply(&other.coeffs[j])?
                    .sub(&other.apply(&self.coeffs[j])?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Deriv { n: self.n, coeffs })
    }

    /// `div D = sum d f_i / d x_i`.
    pub fn divergence(&self) -> Poly {
        let mut out = Poly::zero(self.n);
        for (i, f) in self.coeffs.iter().enumerate() {
            out = out.add(&f.partial(i).unwrap()).unwrap();
        }
        out
    }

    /// Max coefficient total degree; `None` for the zero derivation.
    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    /// The 2x2 minor `Delta_ij = det [a(x_i) a(x_j); b(x_i) b(x_j)]`
    /// (0-based indices).
    pub fn minor(a: &Deriv, b: &Deriv, i: usize, j: usize) -> Result<Poly> {
        a.check_n(b)?;
        for idx in [i, j] {
            if idx >= a.n {
                return Err(WnError::IndexOutOfRange {
                    index: idx + 1,
                    n: a.n,
                });
            }
        }
        a.coeffs[i]
            .mul(&b.coeffs[j])?
            .sub(&a.coeffs[j].mul(&b.coeffs[i])?)
    }
}

impl fmt::Display for Deriv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The Jacobian derivation `D_f` in two variables:
/// `D_f = (-df/dy) d/dx + (df/dx) d/dy`, so `D_f(h) = det J(f, h)`.
pub fn jacobian_deriv(f: &Poly) -> Result<Deriv> {
    if f.n() != 2 {
        return Err(WnError::VarMismatch {
            expected: 2,
            found: f.n(),
        });
    }
    Deriv::new(vec![f.partial(1)?.neg(), f.partial(0)?])
}

/// Recovers `f` with `jacobian_deriv(f) = d` for divergence-free `d` in two
/// variables; returns `None` when `div d != 0`. The additive constant is
/// fixed to zero.
pub fn jacobian_potential(d: &Deriv) -> Result<Option<Poly>> {
    if d.n() != 2 {
        return Err(WnError::VarMismatch {
            expected: 2,
            found: d.n(),
        });
    }
    if !d.divergence().is_zero() {
        return Ok(None);
    }
    // d = p d/dx + q d/dy with -f_y = p, f_x = q.
    let p = &d.coeffs()[0];
    let q = &d.coeffs()[1];
    let fx_part = q.integrate(0)?;
    // remaining y-dependence: g'(y) = -p - d/dy of the x-integral
    let gy = p.neg().sub(&fx_part.partial(1)?)?;
    // div-free input makes gy free of x
    let g = gy.integrate(1)?;
    let mut f = fx_part.add(&g)?;
    let c = f.constant_term();
    f = f.sub(&Poly::constant(2, c))?;
    debug_assert_eq!(jacobian_deriv(&f)?, *d);
    Ok(Some(f))
}

/// Rank of the coefficient matrix over the rational function field,
/// computed by fraction-free (Bareiss) elimination on polynomial entries.
pub fn rank_over_a(ds: &[Deriv]) -> Result<usize> {
    assert!(!ds.is_empty(), "rank of an empty list");
    let n = ds[0].n();
    for d in ds {
        ds[0].check_n(d)?;
    }
    let mut m: Vec<Vec<Poly>> = ds.iter().map(|d| d.coeffs().to_vec()).collect();
    let rows = m.len();
    let mut rank = 0;
    let mut prev = Poly::one(n);
    let mut row = 0;
    for col in 0..n {
        // pivot search
        let Some(pr) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        for r in row + 1..rows {
            for c in col + 1..n {
                let t = m[row][col]
                    .mul(&m[r][c])?
                    .sub(&m[r][col].mul(&m[row][c])?)?;
                m[r][c] = if prev.is_constant() && !prev.is_zero() {
                    let inv = Rat::one() / prev.constant_term();
                    t.scale(&inv)
                } else {
                    t.exact_div(&prev).expect("Bareiss division is exact")
                };
            }
            m[r][col] = Poly::zero(n);
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    Ok(rank)
}

/// Witness that `t` is proportional to `d` over the fraction field:
/// `t = (num/den) * d` in lowest terms.
#[derive(Clone, Debug, Serialize)]
pub struct PropWitness {
    #[serde(serialize_with = "crate::serialize_poly")]
    pub num: Poly,
    #[serde(serialize_with = "crate::serialize_poly")]
    pub den: Poly,
    pub polynomial: bool,
}

/// If every 2x2 minor of the pair vanishes, returns the reduced fraction
/// `mu = t_i / d_i` with a polynomiality flag; otherwise `None`.
pub fn proportionality_witness(d: &Deriv, t: &Deriv) -> Result<Option<PropWitness>> {
    if d.is_zero() {
        return Err(WnError::ZeroDerivation);
    }
    d.check_n(t)?;
    let n = d.n();
    for i in 0..n {
        for j in i + 1..n {
            if !Deriv::minor(d, t, i, j)?.is_zero() {
                return Ok(None);
            }
        }
    }
    if t.is_zero() {
        return Ok(Some(PropWitness {
            num: Poly::zero(n),
            den: Poly::one(n),
            polynomial: true,
        }));
    }
    let i = (0..n).find(|&i| !d.coeffs()[i].is_zero()).unwrap();
    let num = t.coeffs()[i].clone();
    let den = d.coeffs()[i].clone();
    let g = poly_gcd(&num, &den)?;
    let mut num = num.exact_div(&g).unwrap();
    let mut den = den.exact_div(&g).unwrap();
    // normalize: monic denominator
    let lc = den
        .leading(crate::arith::MonomialOrder::Grevlex)
        .map(|(_, c)| c.clone())
        .unwrap();
    num = num.scale(&(Rat::one() / lc.clone()));
    den = den.scale(&(Rat::one() / lc));
    let polynomial = den.is_constant();
    Ok(Some(PropWitness { num, den, polynomial }))
}

/// Solves `[a, b] = mu1 * a + mu2 * b` for polynomial `mu1, mu2`.
/// Requires `a, b` linearly independent over the polynomial ring; returns
/// `None` when the system has no polynomial solution.
pub fn bracket_span_coeffs(a: &Deriv, b: &Deriv) -> Result<Option<(Poly, Poly)>> {
    a.check_n(b)?;
    if rank_over_a(&[a.clone(), b.clone()])? < 2 {
        return Err(WnError::ADependent);
    }
    let n = a.n();
    let c = a.bracket(b)?;
    // find a nonsingular 2x2 block
    let mut pivot = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if !Deriv::minor(a, b, i, j)?.is_zero() {
                pivot = Some((i, j));
                break 'outer;
            }
        }
    }
    let (i, j) = pivot.expect("rank 2 implies a nonzero minor");
    let delta = Deriv::minor(a, b, i, j)?;
    // Cramer: mu1 = |c_i b_i; c_j b_j| / delta, mu2 = |a_i c_i; a_j c_j| / delta
    let det1 = c.coeffs()[i]
        .mul(&b.coeffs()[j])?
        .sub(&c.coeffs()[j].mul(&b.coeffs()[i])?)?;
    let det2 = a.coeffs()[i]
        .mul(&c.coeffs()[j])?
        .sub(&a.coeffs()[j].mul(&c.coeffs()[i])?)?;
    let div = |det: &Poly| -> Option<Poly> { det.exact_div(&delta) };
    let (Some(mu1), Some(mu2)) = (div(&det1), div(&det2)) else {
        return Ok(None);
    };
    // the 2x2 solve is necessary; confirm the remaining rows
    let rhs = a.scale_poly(&mu1)?.add(&b.scale_poly(&mu2)?)?;
    if rhs == c {
        Ok(Some((mu1, mu2)))
    } else {
        Ok(None)
    }
}

/// Per-pair outcome of the minor-invariance identities.
#[derive(Clone, Debug, Serialize)]
pub struct MinorPairCheck {
    pub i: usize,
    pub j: usize,
    pub d1_identity: bool,
    pub d2_identity: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinorIdentityReport {
    pub pairs: Vec<MinorPairCheck>,
    pub minor_ideal_invariant_under_d1: bool,
    pub minor_ideal_invariant_under_d2: bool,
    pub all_ok: bool,
}

/// Checks, for every index pair `(i, j)`, the identities
/// `D_1(Delta_ij) = mu2 Delta_ij + sum_k (d/dx_k D_1(x_i)) Delta_kj
///                 - sum_k (d/dx_k D_1(x_j)) Delta_ki`
/// and the companion identity for `D_2`, then verifies that the ideal
/// generated by all minors is invariant under both derivations.
/// The hypothesis `[a, b] = mu1 a + mu2 b` is checked first.
pub fn verify_minor_identity(
    a: &Deriv,
    b: &Deriv,
    mu1: &Poly,
    mu2: &Poly,
) -> Result<MinorIdentityReport> {
    a.check_n(b)?;
    let n = a.n();
    let lhs = a.bracket(b)?;
    let rhs = a.scale_poly(mu1)?.add(&b.scale_poly(mu2)?)?;
    if lhs != rhs {
        return Err(WnError::BracketNotInSpan);
    }
    let minor = |i: usize, j: usize| Deriv::minor(a, b, i, j);
    let mut pairs = Vec::new();
    let mut all_ok = true;
    for i in 0..n {
        for j in 0..n {
            let delta_ij = minor(i, j)?;
            let mut checks = [true, true];
            for (which, (d, mu)) in [(a, mu2.clone()), (b, mu1.neg())].iter().enumerate() {
                let mut rhs = delta_ij.mul(mu)?;
                for k in 0..n {
                    rhs = rhs.add(&d.coeffs()[i].partial(k)?.mul(&minor(k, j)?)?)?;
                    rhs = rhs.sub(&d.coeffs()[j].partial(k)?.mul(&minor(k, i)?)?)?;
                }
                checks[which] = d.apply(&delta_ij)? == rhs;
            }
            all_ok &= checks[0] && checks[1];
            pairs.push(MinorPairCheck {
                i: i + 1,
                j: j + 1,
                d1_identity: checks[0],
                d2_identity: checks[1],
            });
        }
    }
    // minor ideal invariance
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = minor(i, j)?;
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    let ideal = crate::ideals::IdealGens::new(n, gens);
    let inv1 = crate::ideals::is_invariant(&ideal, a)?;
    let inv2 = crate::ideals::is_invariant(&ideal, b)?;
    all_ok &= inv1 && inv2;
    Ok(MinorIdentityReport {
        pairs,
        minor_ideal_invariant_under_d1: inv1,
        minor_ideal_invariant_under_d2: inv2,
        all_ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaCorollaryReport {
    #[serde(serialize_with = "crate::serialize_poly")]
    pub delta12: Poly,
    pub d1_identity: bool,
    pub d2_identity: bool,
    pub all_ok: bool,
}

/// The `n = 2` specialization: `D_1(Delta_12) = (mu2 + div D_1) Delta_12`
/// and `D_2(Delta_12) = (-mu1 + div D_2) Delta_12`, making `Delta_12` a
/// common Darboux polynomial of the pair.
pub fn verify_delta_corollary(
    a: &Deriv,
    b: &Deriv,
    mu1: &Poly,
    mu2: &Poly,
) -> Result<DeltaCorollaryReport> {
    if a.n() != 2 {
        return Err(WnError::VarMismatch {
            expected: 2,
            found: a.n(),
        });
    }
    a.check_n(b)?;
    let lhs = a.bracket(b)?;
    let rhs = a.scale_poly(mu1)?.add(&b.scale_poly(mu2)?)?;
    if lhs != rhs {
        return Err(WnError::BracketNotInSpan);
    }
    let delta = Deriv::minor(a, b, 0, 1)?;
    let d1_ok = a.apply(&delta)? == mu2.add(&a.divergence())?.mul(&delta)?;
    let d2_ok = b.apply(&delta)? == mu1.neg().add(&b.divergence())?.mul(&delta)?;
    Ok(DeltaCorollaryReport {
        delta12: delta,
        d1_identity: d1_ok,
        d2_identity: d2_ok,
        all_ok: d1_ok && d2_ok,
    })
}

/// Coefficient gcd of a nonzero derivation. For a simple derivation this is
/// 1, since the ideal generated by the coefficients is invariant.
pub fn coefficient_gcd(d: &Deriv) -> Result<Poly> {
    if d.is_zero() {
        return Err(WnError::ZeroDerivation);
    }
    multi_gcd(d.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::parse::{parse_deriv, parse_poly};

    fn p(n: usize, s: &str) -> Poly {
        parse_poly(s, n).unwrap()
    }

    fn d(n: usize, s: &str) -> Deriv {
        parse_deriv(s, n).unwrap()
    }

    #[test]
    fn apply_basics() {
        let e2 = Deriv::euler(2);
        assert_eq!(e2.apply(&p(2, "x*y")).unwrap(), p(2, "2*x*y"));
        assert!(d(2, "[x^2, y]").apply(&p(2, "5")).unwrap().is_zero());
        assert_eq!(
            d(2, "[1, 1 + x*y]").apply(&p(2, "y")).unwrap(),
            p(2, "1 + x*y")
        );
    }

    #[test]
    fn bracket_basics() {
        let dx = Deriv::partial(2, 0);
        let xdx = d(2, "[x, 0]");
        assert_eq!(dx.bracket(&xdx).unwrap(), dx);
        // [E, D] = i*D for homogeneous D of grading index i
        let e = Deriv::euler(2);
        let dd = d(2, "[x^2*y, 0]"); // index 2
        assert_eq!(e.bracket(&dd).unwrap(), dd.scale(&rat_int(2)));
        assert!(Deriv::partial(3, 0)
            .bracket(&Deriv::partial(3, 2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn divergence_basics() {
        // div(f E_n) = (m+n) f for homogeneous f of degree m
        let f = p(2, "x*y");
        let fe = Deriv::euler(2).scale_poly(&f).unwrap();
        assert_eq!(fe.divergence(), p(2, "4*x*y"));
        assert!(Deriv::partial(2, 0).divergence().is_zero());
        assert_eq!(d(2, "[x, y]").divergence(), p(2, "2"));
    }

    #[test]
    fn euler_basics() {
        assert_eq!(Deriv::euler(2), d(2, "[x, y]"));
        assert_eq!(Deriv::euler(3).apply(&p(3, "x1")).unwrap(), p(3, "x1"));
        assert_eq!(Deriv::euler(4).divergence(), Poly::constant(4, rat_int(4)));
    }

    #[test]
    fn jacobian_deriv_and_potential() {
        let f = p(2, "x*y");
        assert_eq!(jacobian_deriv(&f).unwrap(), d(2, "[-x, y]"));
        assert!(jacobian_deriv(&p(2, "7")).unwrap().is_zero());
        assert_eq!(jacobian_potential(&d(2, "[-x, y]")).unwrap().unwrap(), f);
        assert_eq!(
            jacobian_potential(&d(2, "[0, 1]")).unwrap().unwrap(),
            p(2, "x")
        );
        assert!(jacobian_potential(&d(2, "[x, 0]")).unwrap().is_none());
    }

    #[test]
    fn jacobian_deriv_divergence_free() {
        for s in ["x^3 + y^2", "x*y^2 - 3*x", "1 + x*y"] {
            assert!(jacobian_deriv(&p(2, s)).unwrap().divergence().is_zero());
        }
    }

    #[test]
    fn minors() {
        let dx = Deriv::partial(2, 0);
        let dy = Deriv::partial(2, 1);
        assert_eq!(Deriv::minor(&dx, &dy, 0, 1).unwrap(), Poly::one(2));
        assert!(Deriv::minor(&dx, &dy, 1, 1).unwrap().is_zero());
        let e = Deriv::euler(2);
        assert_eq!(Deriv::minor(&dx, &e, 0, 1).unwrap(), p(2, "y"));
        assert!(Deriv::minor(&dx, &dy, 0, 5).is_err());
    }

    #[test]
    fn rank_over_a_basics() {
        let dx = Deriv::partial(2, 0);
        assert_eq!(rank_over_a(&[dx.clone(), d(2, "[x, 0]")]).unwrap(), 1);
        assert_eq!(rank_over_a(&[dx.clone(), Deriv::partial(2, 1)]).unwrap(), 2);
        assert_eq!(rank_over_a(&[d(2, "[1, 1 + x*y]")]).unwrap(), 1);
    }

    #[test]
    fn proportionality() {
        let dx = Deriv::partial(2, 0);
        let w = proportionality_witness(&dx, &d(2, "[x^2, 0]"))
            .unwrap()
            .unwrap();
        assert_eq!(w.num, p(2, "x^2"));
        assert!(w.polynomial);
        assert!(proportionality_witness(&dx, &Deriv::partial(2, 1))
            .unwrap()
            .is_none());
        let w = proportionality_witness(&Deriv::euler(2), &d(2, "[x*y, y^2]"))
            .unwrap()
            .unwrap();
        assert_eq!(w.num, p(2, "y"));
        assert!(w.polynomial);
    }

    #[test]
    fn span_coeffs() {
        // homogeneous degree-i a against the Euler derivation: (-i, 0)
        let a = d(2, "[x^2*y, 0]");
        let (mu1, mu2) = bracket_span_coeffs(&a, &Deriv::euler(2)).unwrap().unwrap();
        assert_eq!(mu1, Poly::constant(2, rat_int(-2)));
        assert!(mu2.is_zero());
        let (mu1, mu2) = bracket_span_coeffs(&Deriv::partial(2, 0), &Deriv::partial(2, 1))
            .unwrap()
            .unwrap();
        assert!(mu1.is_zero() && mu2.is_zero());
        assert!(bracket_span_coeffs(&Deriv::partial(2, 0), &d(2, "[0, x^2]"))
            .unwrap()
            .is_none());
        assert!(matches!(
            bracket_span_coeffs(&Deriv::partial(2, 0), &d(2, "[x, 0]")),
            Err(WnError::ADependent)
        ));
    }

    #[test]
    fn minor_identity_examples() {
        let dx = Deriv::partial(2, 0);
        let e = Deriv::euler(2);
        // [dx, E] = dx, so mu1 = 1, mu2 = 0
        let r = verify_minor_identity(&dx, &e, &Poly::one(2), &Poly::zero(2)).unwrap();
        assert!(r.all_ok);
        // precondition failure
        assert!(matches!(
            verify_minor_identity(&dx, &d(2, "[0, x^2]"), &Poly::zero(2), &Poly::zero(2)),
            Err(WnError::BracketNotInSpan)
        ));
    }

    #[test]
    fn delta_corollary_examples() {
        let dx = Deriv::partial(2, 0);
        let e = Deriv::euler(2);
        let r = verify_delta_corollary(&dx, &e, &Poly::one(2), &Poly::zero(2)).unwrap();
        assert!(r.all_ok);
        assert_eq!(r.delta12, p(2, "y"));
        // commuting diagonal pair
        let a = d(2, "[x, 0]");
        let b = d(2, "[0, y]");
        let r = verify_delta_corollary(&a, &b, &Poly::zero(2), &Poly::zero(2)).unwrap();
        assert!(r.all_ok);
        assert_eq!(r.delta12, p(2, "x*y"));
    }

    #[test]
    fn module_bracket_identity() {
        // [D, f D] = D(f) D
        let dd = d(2, "[1 + x, y^2]");
        let f = p(2, "x*y - 3");
        let lhs = dd.bracket(&dd.scale_poly(&f).unwrap()).unwrap();
        let rhs = dd.scale_poly(&dd.apply(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
