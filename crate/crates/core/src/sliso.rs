//! The isomorphism `φ: L → sl_{n+1}` for the finite-dimensional maximal
//! subalgebra `L = W^[-1] ⊕ W^[0] ⊕ N_1`.
//!
//! With `E_{ij}` the matrix units of size `n+1`:
//!   `φ(d/dx_i) = E_{n+1,i}`,
//!   `φ(x_i d/dx_j) = E_{ij}` for `i != j`,
//!   `φ(x_i d/dx_i) = E_{ii} - I/(n+1)`,
//!   `φ(x_i E_n) = -E_{i,n+1}`.
//! The images are traceless, span `sl_{n+1}`, and intertwine the brackets
//! (commutator of matrices on the right-hand side).

use crate::arith::{Monomial, Poly, Rat};
use crate::deriv::Deriv;
use crate::grading::graded_parts;
use crate::linalg::Mat;
use crate::{Result, WnError};
use num_traits::{One, Zero};
use serde::Serialize;

fn matrix_unit(size: usize, r: usize, c: usize) -> Mat {
    let mut m = Mat::zero(size, size);
    m.set(r, c, Rat::one());
    m
}

/// The ordered basis of `L`: the flat partials, then `x_i d/dx_j` in row
/// order, then the Euler multiples `x_i E_n`; `n^2 + 2n` elements.
pub fn basis_of_l(n: usize) -> Vec<Deriv> {
    let mut basis = Vec::with_capacity(n * n + 2 * n);
    for i in 0..n {
        basis.push(Deriv::partial(n, i));
    }
    for i in 0..n {
        for j in 0..n {
            basis.push(Deriv::monomial(Monomial::var(n, i), j));
        }
    }
    let e = Deriv::euler(n);
    for i in 0..n {
        basis.push(e.scale_poly(&Poly::var(n, i)).unwrap());
    }
    basis
}

/// Applies `φ` to an arbitrary element of `L`, by splitting into graded
/// parts. Errors with `NotInL` when the input has a component outside
/// `W^[-1] ⊕ W^[0] ⊕ N_1`.
pub fn phi(d: &Deriv) -> Result<Mat> {
    let n = d.n();
    let size = n + 1;
    let mut img = Mat::zero(size, size);
    for (idx, part) in graded_parts(d) {
        match idx {
            -1 => {
                // constants u_i on each coefficient
                for (i, c) in part.coeffs().iter().enumerate() {
                    let u = c.coeff(&Monomial::one(n));
                    if !u.is_zero() {
                        img = img.add(&matrix_unit(size, n, i).scale(&u));
                    }
                }
            }
            0 => {
                // linear coefficients c_{ij} x_i d/dx_j
                for (j, c) in part.coeffs().iter().enumerate() {
                    for i in 0..n {
                        let a = c.coeff(&Monomial::var(n, i));
                        if a.is_zero() {
                            continue;
                        }
                        img = img.add(&matrix_unit(size, i, j).scale(&a));
                        if i == j {
                            let shift = a.clone() / Rat::from_integer((size as i64).into());
                            img = img.sub(&Mat::identity(size).scale(&shift));
                        }
                    }
                }
            }
            1 => {
                // must be f * E_n with f linear: recover f from any nonzero
                // coefficient, f = part_j / x_j, then check the rest
                let j = part
                    .coeffs()
                    .iter()
                    .position(|c| !c.is_zero())
                    .expect("nonzero graded part");
                let f = part.coeffs()[j]
                    .exact_div(&Poly::var(n, j))
                    .ok_or_else(|| WnError::NotInL {
                        reason: "degree-one part is not a polynomial multiple of the Euler derivation"
                            .into(),
                    })?;
                let check = Deriv::euler(n).scale_poly(&f)?;
                if &check != &part {
                    return Err(WnError::NotInL {
                        reason: "degree-one part is not a polynomial multiple of the Euler derivation"
                            .into(),
                    });
                }
                for i in 0..n {
                    let a = f.coeff(&Monomial::var(n, i));
                    if !a.is_zero() {
                        img = img.sub(&matrix_unit(size, i, n).scale(&a));
                    }
                }
            }
            _ => {
                return Err(WnError::NotInL {
                    reason: format!("graded component of index {idx} present"),
                });
            }
        }
    }
    Ok(img)
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    pub n: usize,
    pub dim_l: usize,
    pub image_rank: usize,
    pub sl_dim: usize,
    pub all_traceless: bool,
    pub pairs_checked: usize,
    pub bracket_failures: usize,
    pub pass: bool,
}

/// Exhaustive check that `φ` is an isomorphism onto `sl_{n+1}`:
/// traceless images, image rank `(n+1)^2 - 1`, and
/// `φ([a,b]) = φ(a)φ(b) - φ(b)φ(a)` over every ordered basis pair.
pub fn verify_iso(n: usize) -> Result<IsoReport> {
    let basis = basis_of_l(n);
    let size = n + 1;
    let images: Vec<Mat> = basis.iter().map(phi).collect::<Result<_>>()?;
    let all_traceless = images.iter().all(|m| m.trace().is_zero());
    let flat: Vec<Vec<Rat>> = images
        .iter()
        .map(|m| {
            (0..size)
                .flat_map(|r| (0..size).map(move |c| m.get(r, c).clone()))
                .collect()
        })
        .collect();
    let image_rank = Mat::from_rows(flat).rank();
    let mut pairs = 0usize;
    let mut failures = 0usize;
    for (a, ma) in basis.iter().zip(&images) {
        for (b, mb) in basis.iter().zip(&images) {
            pairs += 1;
            let lhs = phi(&a.bracket(b)?)?;
            let rhs = ma.mul(mb).sub(&mb.mul(ma));
            if !lhs.sub(&rhs).is_zero() {
                failures += 1;
            }
        }
    }
    let sl_dim = size * size - 1;
    let pass = all_traceless && image_rank == sl_dim && failures == 0 && basis.len() == sl_dim;
    Ok(IsoReport {
        n,
        dim_l: basis.len(),
        image_rank,
        sl_dim,
        all_traceless,
        pairs_checked: pairs,
        bracket_failures: failures,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_on_basis_elements() {
        // n = 2, size 3
        let p = phi(&Deriv::partial(2, 0)).unwrap();
        assert_eq!(p, matrix_unit(3, 2, 0));
        let x1d2 = Deriv::monomial(Monomial::var(2, 0), 1);
        assert_eq!(phi(&x1d2).unwrap(), matrix_unit(3, 0, 1));
        let x1d1 = Deriv::monomial(Monomial::var(2, 0), 0);
        let expect = matrix_unit(3, 0, 0).sub(&Mat::identity(3).scale(&Rat::new(1.into(), 3.into())));
        assert_eq!(phi(&x1d1).unwrap(), expect);
        let x1e = Deriv::euler(2).scale_poly(&Poly::var(2, 0)).unwrap();
        assert_eq!(phi(&x1e).unwrap(), matrix_unit(3, 0, 2).scale(&-Rat::one()));
    }

    #[test]
    fn phi_linear_combination() {
        // phi(d/dx1 + 2 x1 d/dx2) = E_{3,1} + 2 E_{1,2}
        let d = Deriv::partial(2, 0)
            .add(&Deriv::monomial(Monomial::var(2, 0), 1).scale(&Rat::new(2.into(), 1.into())))
            .unwrap();
        let expect = matrix_unit(3, 2, 0).add(&matrix_unit(3, 0, 1).scale(&Rat::new(2.into(), 1.into())));
        assert_eq!(phi(&d).unwrap(), expect);
    }

    #[test]
    fn phi_rejects_outside_l() {
        // x1^2 d/dx1 is homogeneous of index 1 but not a multiple of E
        let mut m = Monomial::var(2, 0);
        m = m.mul(&Monomial::var(2, 0));
        assert!(matches!(
            phi(&Deriv::monomial(m, 0)),
            Err(WnError::NotInL { .. })
        ));
        // index-2 component
        let mut c = Monomial::var(2, 0);
        c = c.mul(&c.clone());
        assert!(matches!(
            phi(&Deriv::monomial(c, 0)),
            Err(WnError::NotInL { .. })
        ));
    }

    #[test]
    fn structural_bracket_cases_under_phi() {
        let n = 2;
        let e = Deriv::euler(n);
        // [d/dx_i, x_j E] = delta_ij E + x_j d/dx_i
        for i in 0..n {
            for j in 0..n {
                let xje = e.scale_poly(&Poly::var(n, j)).unwrap();
                let lhs = Deriv::partial(n, i).bracket(&xje).unwrap();
                let mut rhs = Deriv::monomial(Monomial::var(n, j), i);
                if i == j {
                    rhs = rhs.add(&e).unwrap();
                }
                assert_eq!(lhs, rhs);
                // and phi intertwines
                let fl = phi(&lhs).unwrap();
                let a = phi(&Deriv::partial(n, i)).unwrap();
                let b = phi(&xje).unwrap();
                assert_eq!(fl, a.mul(&b).sub(&b.mul(&a)));
            }
        }
        // [x_i E, x_j E] = 0
        for i in 0..n {
            for j in 0..n {
                let a = e.scale_poly(&Poly::var(n, i)).unwrap();
                let b = e.scale_poly(&Poly::var(n, j)).unwrap();
                assert!(a.bracket(&b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn verify_iso_n2() {
        let r = verify_iso(2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.dim_l, 8);
        assert_eq!(r.image_rank, 8);
    }

    #[test]
    fn verify_iso_n3() {
        let r = verify_iso(3).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.dim_l, 15);
    }
}
