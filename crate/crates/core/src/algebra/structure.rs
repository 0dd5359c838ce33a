//! Center, radical, socle, symmetry and Cartan invariants.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::fdalg::{FiniteDimAlgebra, Subspace, SubspaceRole};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{int_det, is_positive_definite, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanReport {
    pub matrix: Vec<Vec<i64>>,
    pub determinant: String,
    pub nonsingular: bool,
    pub symmetric: bool,
    pub positive_definite: bool,
}

pub fn cartan_report<F: Field>(a: &FiniteDimAlgebra<F>) -> CartanReport {
    let m = a.cartan_matrix();
    let det: BigInt = int_det(&m);
    let n = m.len();
    let symmetric = (0..n).all(|i| (0..n).all(|j| m[i][j] == m[j][i]));
    CartanReport {
        determinant: det.to_string(),
        nonsingular: !det.is_zero(),
        symmetric,
        positive_definite: symmetric && is_positive_definite(&m),
        matrix: m,
    }
}

/// Elements commuting with every basis element.
pub fn center<F: Field>(a: &FiniteDimAlgebra<F>) -> Subspace<F> {
    let d = a.dim();
    let mut rows = Vec::new();
    for b in 0..d {
        // column x holds b_x * b - b * b_x
        let mut eq: Matrix<F> = Matrix::zeros(d, d);
        for x in 0..d {
            for (z, c) in a.product(x, b) {
                eq[(*z, x)].add_assign(c);
            }
            for (z, c) in a.product(b, x) {
                eq[(*z, x)] = eq[(*z, x)].sub(c);
            }
        }
        for r in 0..d {
            if !eq.row(r).iter().all(F::is_zero) {
                rows.push(eq.row(r).to_vec());
            }
        }
    }
    let sys = Matrix::from_rows(rows, d);
    Subspace::from_vectors(SubspaceRole::Center, d, sys.nullspace())
}

/// The radical as recorded in the adapted basis.
pub fn radical<F: Field>(a: &FiniteDimAlgebra<F>) -> Subspace<F> {
    Subspace { role: SubspaceRole::Radical, basis: a.radical_basis() }
}

/// Radical of the trace form of the regular representation; characteristic 0 only.
pub fn trace_form_radical<F: Field>(a: &FiniteDimAlgebra<F>) -> Result<Subspace<F>> {
    if F::characteristic() != 0 {
        return Err(Error::Unsupported(
            "the trace-form radical needs characteristic 0; use the stored radical filtration".into(),
        ));
    }
    let d = a.dim();
    let traces: Vec<F> = (0..d)
        .map(|z| {
            let mut t = F::zero();
            for w in 0..d {
                for (k, c) in a.product(z, w) {
                    if *k == w {
                        t.add_assign(c);
                    }
                }
            }
            t
        })
        .collect();
    let gram = Matrix::from_fn(d, d, |x, y| {
        let mut s = F::zero();
        for (z, c) in a.product(x, y) {
            s.add_assign(&c.mul(&traces[*z]));
        }
        s
    });
    Ok(Subspace::from_vectors(SubspaceRole::Radical, d, gram.left_nullspace()))
}

fn annihilator<F: Field>(a: &FiniteDimAlgebra<F>, left: bool, right: bool, role: SubspaceRole) -> Subspace<F> {
    let d = a.dim();
    let rad: Vec<usize> = (0..d).filter(|&x| !a.is_idempotent_index(x)).collect();
    let mut rows = Vec::new();
    for &r in &rad {
        for (flag, on_left) in [(right, false), (left, true)] {
            if !flag {
                continue;
            }
            let mut eq: Matrix<F> = Matrix::zeros(d, d);
            for m in 0..d {
                let prod = if on_left { a.product(r, m) } else { a.product(m, r) };
                for (z, c) in prod {
                    eq[(*z, m)].add_assign(c);
                }
            }
            for k in 0..d {
                if !eq.row(k).iter().all(F::is_zero) {
                    rows.push(eq.row(k).to_vec());
                }
            }
        }
    }
    let sys = Matrix::from_rows(rows, d);
    Subspace::from_vectors(role, d, sys.nullspace())
}

/// Two-sided socle `{m : m rad = 0 and rad m = 0}`.
pub fn socle<F: Field>(a: &FiniteDimAlgebra<F>) -> Subspace<F> {
    annihilator(a, true, true, SubspaceRole::Socle)
}

/// Socle of the regular right module, `{m : m rad = 0}`.
pub fn right_socle<F: Field>(a: &FiniteDimAlgebra<F>) -> Subspace<F> {
    annihilator(a, false, true, SubspaceRole::RightSocle)
}

#[derive(Clone, Debug)]
pub struct StructuralSubspaces<F> {
    pub center: Subspace<F>,
    pub radical: Subspace<F>,
    pub socle: Subspace<F>,
    pub right_socle: Subspace<F>,
}

pub fn structural_subspaces<F: Field>(a: &FiniteDimAlgebra<F>) -> StructuralSubspaces<F> {
    StructuralSubspaces { center: center(a), radical: radical(a), socle: socle(a), right_socle: right_socle(a) }
}

/// Functionals vanishing on all commutators `xy - yx`.
fn trace_functionals<F: Field>(a: &FiniteDimAlgebra<F>) -> Vec<Vec<F>> {
    let d = a.dim();
    let mut rows = Vec::new();
    for x in 0..d {
        for y in x + 1..d {
            let mut v = vec![F::zero(); d];
            for (z, c) in a.product(x, y) {
                v[*z].add_assign(c);
            }
            for (z, c) in a.product(y, x) {
                v[*z] = v[*z].sub(c);
            }
            if !v.iter().all(F::is_zero) {
                rows.push(v);
            }
        }
    }
    if rows.is_empty() {
        return (0..d).map(|i| crate::linalg::unit_vec(d, i)).collect();
    }
    Matrix::from_rows(rows, d).nullspace()
}

fn gram_of<F: Field>(a: &FiniteDimAlgebra<F>, f: &[F]) -> Matrix<F> {
    let d = a.dim();
    Matrix::from_fn(d, d, |x, y| {
        let mut s = F::zero();
        for (z, c) in a.product(x, y) {
            s.add_assign(&c.mul(&f[*z]));
        }
        s
    })
}

/// A symmetrizing form, if one is found: `f(ab) = f(ba)` with `(a, b) -> f(ab)` non-degenerate.
pub fn symmetrizing_form<F: Field>(a: &FiniteDimAlgebra<F>) -> Option<Vec<F>> {
    let c = a.cartan_matrix();
    let n = c.len();
    if (0..n).any(|i| (0..n).any(|j| c[i][j] != c[j][i])) {
        return None;
    }
    let sols = trace_functionals(a);
    if sols.is_empty() {
        return None;
    }
    let d = a.dim();
    let mut candidates: Vec<Vec<F>> = sols.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..8 {
        let mut f = vec![F::zero(); d];
        for s in &sols {
            let k: i64 = rng.gen_range(1..1000);
            crate::linalg::axpy(&mut f, &F::from_i64(k), s);
        }
        candidates.push(f);
    }
    candidates.into_iter().find(|f| gram_of(a, f).is_invertible())
}

pub fn is_symmetric<F: Field>(a: &FiniteDimAlgebra<F>) -> bool {
    symmetrizing_form(a).is_some()
}

/// Symmetric with a positive definite Cartan matrix.
pub fn ejr_certificate<F: Field>(a: &FiniteDimAlgebra<F>) -> bool {
    cartan_report(a).positive_definite && is_symmetric(a)
}
