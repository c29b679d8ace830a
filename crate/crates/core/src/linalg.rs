//! Exact linear algebra over the rationals: dense matrices, reduced row
//! echelon form, kernels, and finite-dimensional subspaces of derivations
//! coordinatized by monomial-derivation frames.

use crate::arith::{monomials_up_to, Monomial, Poly, Rat};
use crate::deriv::Deriv;
use crate::{Result, WnError};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        Mat {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = &self.entries[i] - &other.entries[i];
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = &*e * c;
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = &self.entries[i] + &other.entries[i];
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Reduced row echelon form with exact pivots; also returns the rank.
    pub fn rref(&self) -> (Mat, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(pr) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            // swap rows
            for c in 0..m.cols {
                let a = m.get(pivot_row, c).clone();
                let b = m.get(pr, c).clone();
                m.set(pivot_row, c, b);
                m.set(pr, c, a);
            }
            let inv = Rat::one() / m.get(pivot_row, col).clone();
            for c in col..m.cols {
                let v = m.get(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &f * m.get(pivot_row, c);
                    m.set(r, c, v);
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, rank) = self.rref();
        let mut pivots: Vec<Option<usize>> = vec![None; self.cols]; // per column: pivot row
        for row in 0..rank {
            let col = (0..self.cols)
                .position(|c| !r.get(row, c).is_zero())
                .expect("nonzero RREF row");
            pivots[col] = Some(row);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (col, p) in pivots.iter().enumerate() {
                if let Some(prow) = p {
                    v[col] = -r.get(*prow, free).clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Coordinate frame: a fixed bijection between monomial derivations
/// `x^a d/dx_j` with `deg a <= degree_cap` and coordinate positions.
/// Ordering is grevlex on the monomial, then the partial index, so RREF
/// bases are canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frame {
    n: usize,
    degree_cap: usize,
    mons: Vec<Monomial>,
    positions: HashMap<Monomial, usize>,
}

impl Frame {
    pub fn new(n: usize, degree_cap: usize) -> Self {
        let mons = monomials_up_to(n, degree_cap);
        let positions = mons
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Frame {
            n,
            degree_cap,
            mons,
            positions,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn dim(&self) -> usize {
        self.mons.len() * self.n
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.mons
    }

    /// Coordinate of the basis derivation `x^m d/dx_j`.
    pub fn position(&self, m: &Monomial, j: usize) -> Option<usize> {
        self.positions.get(m).map(|&i| i * self.n + j)
    }

    /// The basis derivation at a coordinate position.
    pub fn basis_deriv(&self, pos: usize) -> Deriv {
        let m = self.mons[pos / self.n].clone();
        Deriv::monomial(m, pos % self.n)
    }

    /// Coordinates of a derivation; `FrameOverflow` when some coefficient
    /// exceeds the cap.
    pub fn coords(&self, d: &Deriv) -> Result<Vec<Rat>> {
        if d.n() != self.n {
            return Err(WnError::VarMismatch {
                expected: self.n,
                found: d.n(),
            });
        }
        let mut v = vec![Rat::zero(); self.dim()];
        for (j, c) in d.coeffs().iter().enumerate() {
            for (m, coeff) in c.terms() {
                let Some(pos) = self.position(m, j) else {
                    return Err(WnError::FrameOverflow {
                        degree: m.degree(),
                        cap: self.degree_cap,
                    });
                };
                v[pos] = coeff.clone();
            }
        }
        Ok(v)
    }

    pub fn representable(&self, d: &Deriv) -> bool {
        d.n() == self.n && d.max_degree().map_or(true, |deg| deg <= self.degree_cap)
    }

    /// Rebuilds the derivation from a coordinate vector.
    pub fn deriv(&self, v: &[Rat]) -> Deriv {
        let mut coeffs = vec![Poly::zero(self.n); self.n];
        for (pos, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = self.mons[pos / self.n].clone();
            let j = pos % self.n;
            coeffs[j] = coeffs[j]
                .add(&Poly::term(m, c.clone()))
                .expect("frame-local arithmetic");
        }
        Deriv::new(coeffs).expect("frame-local arithmetic")
    }

    /// Positions whose monomial degree is at most `deg`. The frame orders
    /// monomials by ascending degree, so this is a prefix.
    pub fn positions_up_to_degree(&self, deg: usize) -> usize {
        self.mons.iter().filter(|m| m.degree() <= deg).count() * self.n
    }
}

/// Finite-dimensional rational subspace of derivations: an RREF basis over
/// a fixed frame.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    frame: Frame,
    basis: Vec<Vec<Rat>>, // nonzero RREF rows
}

impl Subspace {
    pub fn empty(frame: Frame) -> Self {
        Subspace {
            frame,
            basis: Vec::new(),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_rows(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn basis_derivs(&self) -> Vec<Deriv> {
        self.basis.iter().map(|v| self.frame.deriv(v)).collect()
    }

    fn from_rows(frame: Frame, rows: Vec<Vec<Rat>>) -> Self {
        if rows.is_empty() {
            return Subspace::empty(frame);
        }
        let (r, rank) = Mat::from_rows(rows).rref();
        let basis = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace { frame, basis }
    }

    /// RREF span of a list of derivations.
    pub fn span(frame: &Frame, vecs: &[Deriv]) -> Result<Subspace> {
        let rows = vecs
            .iter()
            .map(|d| frame.coords(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_rows(frame.clone(), rows))
    }

    pub fn span_coords(frame: &Frame, rows: Vec<Vec<Rat>>) -> Subspace {
        Subspace::from_rows(frame.clone(), rows)
    }

    /// Reduces a coordinate vector against the RREF basis; the residue is
    /// zero exactly when the vector lies in the span.
    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
            if !v[pivot].is_zero() {
                let f = v[pivot].clone();
                for (c, r) in v.iter_mut().zip(row) {
                    *c -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains_coords(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    pub fn contains(&self, d: &Deriv) -> Result<bool> {
        Ok(self.contains_coords(&self.frame.coords(d)?))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        if self.frame != other.frame {
            return Err(WnError::FrameMismatch);
        }
        Ok(self.basis.iter().all(|v| other.contains_coords(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        Ok(self.dim() == other.dim() && self.is_subspace_of(other)?)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.frame != other.frame {
            return Err(WnError::FrameMismatch);
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.clone());
        Ok(Subspace::from_rows(self.frame.clone(), rows))
    }

    /// Adds rows in place; returns whether the dimension grew.
    pub fn extend_with(&mut self, rows: Vec<Vec<Rat>>) -> bool {
        let before = self.dim();
        let mut all = self.basis.clone();
        all.extend(rows);
        *self = Subspace::from_rows(self.frame.clone(), all);
        self.dim() > before
    }

    /// Intersection of spans, by the Zassenhaus block construction.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.frame != other.frame {
            return Err(WnError::FrameMismatch);
        }
        let m = self.frame.dim();
        let mut rows = Vec::new();
        for v in &self.basis {
            let mut row = v.clone();
            row.extend(v.iter().cloned());
            rows.push(row);
        }
        for v in &other.basis {
            let mut row = v.clone();
            row.extend(vec![Rat::zero(); m]);
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(Subspace::empty(self.frame.clone()));
        }
        let (r, rank) = Mat::from_rows(rows).rref();
        let mut out = Vec::new();
        for i in 0..rank {
            let left_zero = (0..m).all(|c| r.get(i, c).is_zero());
            if left_zero {
                out.push(r.row(i)[m..].to_vec());
            }
        }
        Ok(Subspace::from_rows(self.frame.clone(), out))
    }

    /// The part of the span supported on coefficient degrees `<= deg`.
    pub fn truncate_to_degree(&self, deg: usize) -> Subspace {
        let cut = self.frame.positions_up_to_degree(deg);
        let coord_rows: Vec<Vec<Rat>> = (0..cut)
            .map(|p| {
                let mut v = vec![Rat::zero(); self.frame.dim()];
                v[p] = Rat::one();
                v
            })
            .collect();
        let coord_space = Subspace::from_rows(self.frame.clone(), coord_rows);
        self.intersection(&coord_space).expect("same frame")
    }
}
