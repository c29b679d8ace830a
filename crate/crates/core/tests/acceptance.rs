//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wn_core::arith::{monomials_up_to, Monomial, Poly, Rat};
use wn_core::darboux::simplicity_probe;
use wn_core::deriv::{coefficient_gcd, rank_over_a, verify_delta_corollary, verify_minor_identity};
use wn_core::grading::{component_basis, component_dim, mn_project, verify_bracket_table};
use wn_core::ideals::{contains, is_invariant, tangent_realizer, IdealGens};
use wn_core::linalg::{Frame, Subspace};
use wn_core::sliso::verify_iso;
use wn_core::subalg::{
    build_l, closure_lemma_check, coordinate_ideal, i2wn_ideal_check,
    lk_quotient_irreducibility_probe, maximality_probe, nonnegative_part,
    stabilizer_truncated,
};
use wn_core::{Deriv, WnError};

fn report(num: u32, name: &str, pass: bool) {
    println!(
        "criterion {num} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {num} ({name}) failed");
}

fn rat(k: i64) -> Rat {
    Rat::from_integer(k.into())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Euler identities on all monomials and monomial derivations of degree
/// up to 4, for n in {2, 3, 4}.
#[test]
fn criterion_01_euler_identities() {
    let mut pass = true;
    for n in 2..=4 {
        let e = Deriv::euler(n);
        for m in monomials_up_to(n, 4) {
            let f = Poly::term(m.clone(), Rat::one());
            let deg = m.degree();
            pass &= e.apply(&f).unwrap() == f.scale(&rat(deg as i64));
            let fe = e.scale_poly(&f).unwrap();
            pass &= fe.divergence() == f.scale(&rat((deg + n) as i64));
            for j in 0..n {
                let d = Deriv::monomial(m.clone(), j);
                let i = deg as i64 - 1;
                pass &= e.bracket(&d).unwrap() == d.scale(&rat(i));
            }
        }
    }
    report(1, "euler identities", pass);
}

/// The graded bracket table for n in {2, 3}, indices -1 <= i <= j <= 3,
/// including the exceptional cells and [N_i, N_i] = 0.
#[test]
fn criterion_02_bracket_table() {
    let mut pass = true;
    for n in 2..=3 {
        let table = verify_bracket_table(n, 3).unwrap();
        pass &= table.all_pass;
        // the exceptional cells must actually be present
        for key in ["0,0", "-1,-1"] {
            pass &= table.components.contains_key(key);
        }
    }
    report(2, "bracket table", pass);
}

/// W^[m] = M_m (+) N_m for n <= 4, m <= 4: dimensions, idempotent
/// projections, divergence-free m-part.
#[test]
fn criterion_03_mn_decomposition() {
    let mut pass = true;
    for n in 2..=4 {
        for m in 0..=4i64 {
            let comp = component_basis(n, m);
            let dim_w = n * binomial(n + m as usize, n - 1);
            pass &= comp.basis.len() == dim_w;
            pass &= component_dim(n, m) == dim_w;
            pass &= comp.m_basis.len() + comp.n_basis.len() == dim_w;
            pass &= comp.n_basis.len() == binomial(n + m as usize - 1, n - 1);
            for d in &comp.basis {
                let (mp, np) = mn_project(d, m).unwrap();
                pass &= mp.divergence().is_zero();
                pass &= mp.add(&np).unwrap() == *d;
                // idempotence
                let (mp2, nz) = mn_project(&mp, m).unwrap();
                pass &= mp2 == mp && nz.is_zero();
                let (mz, np2) = mn_project(&np, m).unwrap();
                pass &= np2 == np && mz.is_zero();
            }
        }
    }
    report(3, "M/N decomposition", pass);
}

/// phi: L -> sl_{n+1} is an isomorphism: all ordered basis pairs, full
/// rank, dim L = n^2 + 2n, for n in {2, 3, 4}.
#[test]
fn criterion_04_sl_isomorphism() {
    let mut pass = true;
    for n in 2..=4 {
        let r = verify_iso(n).unwrap();
        pass &= r.pass && r.dim_l == n * n + 2 * n;
    }
    report(4, "sl isomorphism", pass);
}

/// Minor identities for >= 50 pairs: the (homogeneous D, Euler) family and
/// hand-built triangular pairs, n in {2, 3}.
#[test]
fn criterion_05_minor_identities() {
    let mut pass = true;
    let mut pairs = 0usize;
    for n in 2..=3usize {
        let e = Deriv::euler(n);
        // [D, E] = -i D for homogeneous D of index i
        for i in -1..=2i64 {
            for d in component_basis(n, i).basis {
                let r = verify_minor_identity(&d, &e, &Poly::constant(n, rat(-i)), &Poly::zero(n))
                    .unwrap();
                pass &= r.all_ok;
                if n == 2 {
                    let r = verify_delta_corollary(
                        &d,
                        &e,
                        &Poly::constant(n, rat(-i)),
                        &Poly::zero(n),
                    )
                    .unwrap();
                    pass &= r.all_ok;
                }
                pairs += 1;
            }
        }
        // triangular pairs: [d, f d] = d(f) d
        let d = Deriv::partial(n, 0);
        for f in [
            Poly::var(n, 0),
            Poly::var(n, 0).mul(&Poly::var(n, 1)).unwrap(),
            Poly::var(n, 1).pow(3),
        ] {
            let b = d.scale_poly(&f).unwrap();
            let mu1 = d.apply(&f).unwrap();
            let r = verify_minor_identity(&d, &b, &mu1, &Poly::zero(n)).unwrap();
            pass &= r.all_ok;
            pairs += 1;
        }
    }
    pass &= pairs >= 50;
    report(5, "minor identities", pass);
}

/// Closure lemma on 20 seeded generator pairs at cap 6, containment
/// compared at degree 4.
#[test]
fn criterion_06_closure_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut pass = true;
    for _ in 0..20 {
        let d1 = random_affine_deriv(&mut rng, 2);
        let d2 = random_affine_deriv(&mut rng, 2);
        let r = closure_lemma_check(&d1, &d2, 6).unwrap();
        pass &= r.all_contained && r.compare_degree == 4;
    }
    report(6, "closure lemma", pass);
}

fn random_affine_deriv(rng: &mut ChaCha8Rng, n: usize) -> Deriv {
    loop {
        let coeffs: Vec<Poly> = (0..n)
            .map(|_| {
                let mut p = Poly::zero(n);
                for m in monomials_up_to(n, 1) {
                    let c: i64 = rng.gen_range(-2..=2);
                    if c != 0 && rng.gen_bool(0.5) {
                        p = p.add(&Poly::term(m.clone(), rat(c))).unwrap();
                    }
                }
                p
            })
            .collect();
        let d = Deriv::new(coeffs).unwrap();
        if !d.is_zero() {
            return d;
        }
    }
}

/// Maximality probes for n = 2: every monomial derivation of degree <= 3
/// outside L regenerates the full truncated algebra, and so does the
/// non-negative part together with d/dx.
#[test]
fn criterion_07_maximality_probes() {
    let mut pass = true;
    let l = build_l(2).unwrap();
    let mut probed = 0usize;
    for m in monomials_up_to(2, 3) {
        for j in 0..2 {
            let d = Deriv::monomial(m.clone(), j);
            match maximality_probe(&l, &d, 5) {
                Err(WnError::AlreadyInside) => {}
                Err(_) => pass = false,
                Ok(r) => {
                    pass &= r.equal;
                    probed += 1;
                }
            }
        }
    }
    pass &= probed > 0;
    let nn = nonnegative_part(2, 5).unwrap();
    let r = maximality_probe(&nn, &Deriv::partial(2, 0), 5).unwrap();
    pass &= r.equal;
    report(7, "maximality probes", pass);
}

/// L_k structure: the truncated stabilizer of (x_{k+1}, ..., x_n) equals
/// the explicit module description, and the quotient orbit probe passes.
#[test]
fn criterion_08_lk_theorems() {
    let mut pass = true;
    for (n, k) in [(2usize, 1usize), (3, 1), (3, 2)] {
        let ideal = coordinate_ideal(n, k).unwrap();
        let stab = stabilizer_truncated(&ideal, 3).unwrap();
        // explicit description: x^a d/dx_j with j <= k arbitrary, or j > k
        // and x^a divisible by some x_i with i > k
        let frame = Frame::new(n, 3);
        let mut rows = Vec::new();
        for pos in 0..frame.dim() {
            let d = frame.basis_deriv(pos);
            let j = d.coeffs().iter().position(|c| !c.is_zero()).unwrap();
            let (m, _) = d.coeffs()[j].terms().next().unwrap();
            let in_lk = j < k || m.exps()[k..].iter().any(|&e| e > 0);
            if in_lk {
                rows.push(frame.coords(&d).unwrap());
            }
        }
        let explicit = Subspace::span_coords(&frame, rows);
        pass &= stab.equals(&explicit).unwrap();
        pass &= lk_quotient_irreducibility_probe(n, k, 3).unwrap().all_full;
    }
    report(8, "L_k theorems", pass);
}

/// The known simple example d/dx + (1 + xy) d/dy: no Darboux obstruction
/// up to the bounds, and unit coefficient gcd.
#[test]
fn criterion_09_simple_example() {
    let d = Deriv::new(vec![
        Poly::one(2),
        Poly::one(2)
            .add(&Poly::var(2, 0).mul(&Poly::var(2, 1)).unwrap())
            .unwrap(),
    ])
    .unwrap();
    let r = simplicity_probe(&d, 3, 2).unwrap();
    let mut pass = r.conclusion == "no obstruction up to bounds";
    pass &= coefficient_gcd(&d).unwrap() == Poly::one(2);
    report(9, "simple example", pass);
}

/// I^2 W_n is a nonzero proper bracket-ideal of the stabilizer, for
/// I in {(x2), (x1, x2)} at cap 3, n = 2.
#[test]
fn criterion_10_stabilizer_ideal() {
    let mut pass = true;
    let r = i2wn_ideal_check(&coordinate_ideal(2, 1).unwrap(), 3).unwrap();
    pass &= r.pass;
    let maximal = IdealGens::new(2, vec![Poly::var(2, 0), Poly::var(2, 1)]);
    let r = i2wn_ideal_check(&maximal, 3).unwrap();
    pass &= r.pass;
    report(10, "stabilizer ideal property", pass);
}

/// Tangent realizer on 20 seeded (ideal, point, direction) triples: the
/// derivation stabilizes the ideal and realizes the direction exactly.
#[test]
fn criterion_11_tangent_realizer() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pass = true;
    let mut produced = 0usize;
    while produced < 20 {
        let n = 2;
        let gens: Vec<Poly> = (0..rng.gen_range(1..=2))
            .map(|_| random_poly(&mut rng, n, 2))
            .collect();
        let ideal = IdealGens::new(n, gens);
        if ideal.is_zero() || ideal.is_unit() {
            continue;
        }
        let point: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect();
        let u: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect();
        let d = match tangent_realizer(&ideal, &point, &u) {
            Ok(d) => d,
            Err(WnError::PointOnVariety) => continue,
            Err(_) => {
                pass = false;
                break;
            }
        };
        pass &= is_invariant(&ideal, &d).unwrap();
        let value: Vec<Rat> = d
            .coeffs()
            .iter()
            .map(|c| c.eval(&point).unwrap())
            .collect();
        pass &= value == u;
        produced += 1;
    }
    report(11, "tangent realizer", pass);
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, deg: usize) -> Poly {
    let mons = monomials_up_to(n, deg);
    let mut p = Poly::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let m = mons[rng.gen_range(0..mons.len())].clone();
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            p = p.add(&Poly::term(m, rat(c))).unwrap();
        }
    }
    p
}

/// Independent oracles: monomial-ideal membership against the
/// componentwise-exponent test, and rank over A against brute-force
/// minors.
#[test]
fn criterion_12_oracle_equivalences() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut pass = true;
    // membership oracle on 100 monomial-ideal instances
    for _ in 0..100 {
        let n = rng.gen_range(2..=3);
        let mons = monomials_up_to(n, 4);
        let gens: Vec<Monomial> = (0..rng.gen_range(1..=4))
            .map(|_| mons[rng.gen_range(1..mons.len())].clone())
            .collect();
        let ideal = IdealGens::new(
            n,
            gens.iter()
                .map(|m| Poly::term(m.clone(), Rat::one()))
                .collect(),
        );
        let probe = monomials_up_to(n, 5)[rng.gen_range(0..monomials_up_to(n, 5).len())].clone();
        let oracle = gens.iter().any(|g| g.divides(&probe));
        pass &= contains(&ideal, &Poly::term(probe, Rat::one())) == oracle;
    }
    // rank oracle on derivation families, n <= 3, <= 3 derivations
    for _ in 0..30 {
        let n = rng.gen_range(2..=3);
        let ds: Vec<Deriv> = (0..rng.gen_range(1..=3))
            .map(|_| {
                Deriv::new((0..n).map(|_| random_poly(&mut rng, n, 2)).collect()).unwrap()
            })
            .collect();
        pass &= rank_over_a(&ds).unwrap() == brute_force_rank(&ds);
    }
    report(12, "oracle equivalences", pass);
}

/// Largest k with a nonvanishing k x k minor of the coefficient matrix.
fn brute_force_rank(ds: &[Deriv]) -> usize {
    let n = ds[0].n();
    let rows = ds.len();
    for k in (1..=rows.min(n)).rev() {
        for rsel in subsets(rows, k) {
            for csel in subsets(n, k) {
                let det = determinant(&rsel, &csel, ds);
                if !det.is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn determinant(rows: &[usize], cols: &[usize], ds: &[Deriv]) -> Poly {
    let n = ds[0].n();
    if rows.len() == 1 {
        return ds[rows[0]].coeffs()[cols[0]].clone();
    }
    let mut det = Poly::zero(n);
    for (t, &c) in cols.iter().enumerate() {
        let minor_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&cc| cc != c)
            .collect();
        let sub = determinant(&rows[1..], &minor_cols, ds);
        let term = ds[rows[0]].coeffs()[c].mul(&sub).unwrap();
        det = if t % 2 == 0 {
            det.add(&term).unwrap()
        } else {
            det.sub(&term).unwrap()
        };
    }
    det
}
