//! The standard grading `W_n = ⊕_{i >= -1} W_n^[i]`, the decomposition of
//! each component into the divergence-free part `M_i` and the
//! Euler-multiple part `N_i`, `W^[0]`-module generation, and machine
//! verification of the full bracket-relation table.

use crate::arith::{monomials_of_degree, Poly, Rat};
use crate::deriv::Deriv;
use crate::linalg::{Frame, Mat, Subspace};
use crate::{Result, WnError};
use num_traits::Zero;
use once_cell::sync::Lazy;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

/// Splits a derivation by grading index (coefficient degree minus one);
/// parts sum back to the input.
pub fn graded_parts(d: &Deriv) -> BTreeMap<i64, Deriv> {
    let n = d.n();
    let mut out: BTreeMap<i64, Deriv> = BTreeMap::new();
    for (j, c) in d.coeffs().iter().enumerate() {
        for (deg, part) in c.homogeneous_parts() {
            let idx = deg as i64 - 1;
            let entry = out.entry(idx).or_insert_with(|| Deriv::zero(n));
            let mut coeffs = entry.coeffs().to_vec();
            coeffs[j] = coeffs[j].add(&part).unwrap();
            *entry = Deriv::new(coeffs).unwrap();
        }
    }
    out
}

/// True when every coefficient is homogeneous of degree `i + 1`.
pub fn is_homogeneous_of(d: &Deriv, i: i64) -> bool {
    let parts = graded_parts(d);
    parts.is_empty() || (parts.len() == 1 && parts.contains_key(&i))
}

/// Splits a homogeneous derivation of grading index `i >= 0` into its
/// `M_i` and `N_i` parts. The Euler identity `div(f E_n) = (deg f + n) f`
/// forces `n_part = (div d / (i + n)) E_n`; the complement is exactly
/// divergence-free.
pub fn mn_project(d: &Deriv, i: i64) -> Result<(Deriv, Deriv)> {
    if i < 0 || !is_homogeneous_of(d, i) {
        return Err(WnError::NotHomogeneous { index: i });
    }
    let n = d.n();
    let f = d
        .divergence()
        .scale(&(Rat::new(1.into(), (i + n as i64).into())));
    let n_part = Deriv::euler(n).scale_poly(&f)?;
    let m_part = d.sub(&n_part)?;
    debug_assert!(m_part.divergence().is_zero());
    Ok((m_part, n_part))
}

/// Basis data of one graded component `W_n^[i]`.
#[derive(Clone, Debug)]
pub struct GradedComponent {
    pub n: usize,
    pub i: i64,
    /// Monomial derivations `x^a d/dx_j` with `|a| = i + 1`.
    pub basis: Vec<Deriv>,
    /// Basis of the divergence-free submodule `M_i` (empty metadata for
    /// `i = -1`).
    pub m_basis: Vec<Deriv>,
    /// Basis `{x^b E_n : |b| = i}` of the Euler-multiple submodule `N_i`.
    pub n_basis: Vec<Deriv>,
}

static COMPONENT_CACHE: Lazy<Mutex<HashMap<(usize, i64), GradedComponent>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Explicit bases of `W_n^[i]`, `M_i`, and `N_i`. Results are cached per
/// `(n, i)`.
pub fn component_basis(n: usize, i: i64) -> GradedComponent {
    assert!(i >= -1, "grading index starts at -1");
    if let Some(c) = COMPONENT_CACHE.lock().unwrap().get(&(n, i)) {
        return c.clone();
    }
    let coeff_deg = (i + 1) as usize;
    let mons = monomials_of_degree(n, coeff_deg);
    let mut basis = Vec::new();
    for m in &mons {
        for j in 0..n {
            basis.push(Deriv::monomial(m.clone(), j));
        }
    }
    let (m_basis, n_basis) = if i < 0 {
        (Vec::new(), Vec::new())
    } else {
        let n_basis: Vec<Deriv> = monomials_of_degree(n, i as usize)
            .into_iter()
            .map(|b| {
                Deriv::euler(n)
                    .scale_poly(&Poly::term(b, num_traits::One::one()))
                    .unwrap()
            })
            .collect();
        // M_i = kernel of divergence restricted to the component
        let div_mons = monomials_of_degree(n, i as usize);
        let mut mat = Mat::zero(div_mons.len(), basis.len());
        for (col, b) in basis.iter().enumerate() {
            let div = b.divergence();
            for (row, m) in div_mons.iter().enumerate() {
                mat.set(row, col, div.coeff(m));
            }
        }
        let m_basis = mat
            .kernel_basis()
            .into_iter()
            .map(|v| {
                let mut acc = Deriv::zero(n);
                for (k, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&basis[k].scale(c)).unwrap();
                    }
                }
                acc
            })
            .collect();
        (m_basis, n_basis)
    };
    let comp = GradedComponent {
        n,
        i,
        basis,
        m_basis,
        n_basis,
    };
    COMPONENT_CACHE
        .lock()
        .unwrap()
        .insert((n, i), comp.clone());
    comp
}

/// Smallest subspace containing the seed and closed under `ad(b)` for every
/// basis element `b` of `W_n^[0]` — the `W^[0]`-submodule generated by the
/// seed, computed by fixpoint iteration.
pub fn module_generate(frame: &Frame, seed: &Subspace) -> Result<Subspace> {
    let n = frame.n();
    let w0 = component_basis(n, 0);
    let mut space = seed.clone();
    loop {
        let mut new_rows = Vec::new();
        for d in space.basis_derivs() {
            for b in &w0.basis {
                let br = b.bracket(&d)?;
                if br.is_zero() {
                    continue;
                }
                new_rows.push(frame.coords(&br)?);
            }
        }
        if !space.extend_with(new_rows) {
            break;
        }
    }
    Ok(space)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCell {
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubmoduleCell {
    pub kind: String,
    pub i: i64,
    pub j: i64,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BracketTableReport {
    pub n: usize,
    pub imax: i64,
    /// Full-component cells `[W^[i], W^[j]]`, keyed `"i,j"`.
    pub components: BTreeMap<String, TableCell>,
    /// The `M`/`N` refinement of the table.
    pub cells: Vec<SubmoduleCell>,
    pub all_pass: bool,
}

fn span_of(frame: &Frame, vecs: &[Deriv]) -> Result<Subspace> {
    Subspace::span(frame, vecs)
}

fn bracket_span(frame: &Frame, left: &[Deriv], right: &[Deriv]) -> Result<Subspace> {
    let mut brackets = Vec::new();
    for a in left {
        for b in right {
            let c = a.bracket(b)?;
            if !c.is_zero() {
                brackets.push(c);
            }
        }
    }
    span_of(frame, &brackets)
}

/// Machine verification of the bracket relations between graded components
/// and their `M`/`N` submodules:
/// `[M_i, M_j] = M_{i+j}`; `[N_i, N_j] = N_{i+j}` for `i != j` and `0` for
/// `i = j`; `[M_i, N_j] = W^[i+j]` except `[M_0, N_0] = 0`,
/// `[M_0, N_j] = N_j`, `[M_i, N_0] = M_i`; `[W^[-1], N_j] = W^[j-1]`; and
/// `[W^[i], W^[j]] = W^[i+j]` with `[W^[0], W^[0]] = M_0` and
/// `[W^[-1], W^[-1]] = 0`.
pub fn verify_bracket_table(n: usize, imax: i64) -> Result<BracketTableReport> {
    assert!(n >= 2 && imax >= 1);
    let cap = (2 * imax + 1).max(1) as usize;
    let frame = Frame::new(n, cap);
    let comp = |i: i64| component_basis(n, i);
    let comp_space = |i: i64| -> Result<Subspace> {
        if i < -1 {
            Ok(Subspace::empty(frame.clone()))
        } else {
            span_of(&frame, &comp(i).basis)
        }
    };
    let m_space = |i: i64| -> Result<Subspace> { span_of(&frame, &comp(i).m_basis) };
    let n_space = |i: i64| -> Result<Subspace> { span_of(&frame, &comp(i).n_basis) };
    let zero_space = Subspace::empty(frame.clone());

    let mut components = BTreeMap::new();
    let mut cells = Vec::new();
    let mut all_pass = true;

    for i in -1..=imax {
        for j in i..=imax {
            // full components
            let lhs = bracket_span(&frame, &comp(i).basis, &comp(j).basis)?;
            let rhs = if i == -1 && j == -1 {
                zero_space.clone()
            } else if i == 0 && j == 0 {
                m_space(0)?
            } else {
                comp_space(i + j)?
            };
            let equal = lhs.equals(&rhs)?;
            all_pass &= equal;
            components.insert(
                format!("{i},{j}"),
                TableCell {
                    lhs_dim: lhs.dim(),
                    rhs_dim: rhs.dim(),
                    equal,
                },
            );
            if i == -1 && j >= 0 {
                // [W^[-1], N_j] = W^[j-1]
                let lhs = bracket_span(&frame, &comp(-1).basis, &comp(j).n_basis)?;
                let rhs = comp_space(j - 1)?;
                let equal = lhs.equals(&rhs)?;
                all_pass &= equal;
                cells.push(SubmoduleCell {
                    kind: "[W-1,N]".into(),
                    i,
                    j,
                    lhs_dim: lhs.dim(),
                    rhs_dim: rhs.dim(),
                    equal,
                });
            }
            if i >= 0 {
                // [M_i, M_j] = M_{i+j}
                let lhs = bracket_span(&frame, &comp(i).m_basis, &comp(j).m_basis)?;
                let rhs = m_space(i + j)?;
                let equal = lhs.equals(&rhs)?;
                all_pass &= equal;
                cells.push(SubmoduleCell {
                    kind: "[M,M]".into(),
                    i,
                    j,
                    lhs_dim: lhs.dim(),
                    rhs_dim: rhs.dim(),
                    equal,
                });
                // [N_i, N_j]
                let lhs = bracket_span(&frame, &comp(i).n_basis, &comp(j).n_basis)?;
                let rhs = if i == j { zero_space.clone() } else { n_space(i + j)? };
                let equal = lhs.equals(&rhs)?;
                all_pass &= equal;
                cells.push(SubmoduleCell {
                    kind: "[N,N]".into(),
                    i,
                    j,
                    lhs_dim: lhs.dim(),
                    rhs_dim: rhs.dim(),
                    equal,
                });
                // [M_i, N_j] in both orders
                for (mi, nj) in [(i, j), (j, i)] {
                    let lhs = bracket_span(&frame, &comp(mi).m_basis, &comp(nj).n_basis)?;
                    let rhs = if mi == 0 && nj == 0 {
                        zero_space.clone()
                    } else if mi == 0 {
                        n_space(nj)?
                    } else if nj == 0 {
                        m_space(mi)?
                    } else {
                        comp_space(mi + nj)?
                    };
                    let equal = lhs.equals(&rhs)?;
                    all_pass &= equal;
                    cells.push(SubmoduleCell {
                        kind: "[M,N]".into(),
                        i: mi,
                        j: nj,
                        lhs_dim: lhs.dim(),
                        rhs_dim: rhs.dim(),
                        equal,
                    });
                    if i == j {
                        break;
                    }
                }
            }
        }
    }
    Ok(BracketTableReport {
        n,
        imax,
        components,
        cells,
        all_pass,
    })
}

/// `dim W_n^[i] = n * C(n+i, n-1)`.
pub fn component_dim(n: usize, i: i64) -> usize {
    n * binomial(n as i64 + i, n as i64 - 1)
}

/// `dim N_i = C(n+i-1, n-1)` for `i >= 0`.
pub fn n_component_dim(n: usize, i: i64) -> usize {
    binomial(n as i64 + i - 1, n as i64 - 1)
}

fn binomial(n: i64, k: i64) -> usize {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc as usize
}
