//! Support τ-tilting pairs and their two-term silting complexes.

use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::rep::{decompose, min_proj_presentation, Representation};
use crate::silting::complex::{GVector, TwoTermComplex};
use crate::silting::is_two_term_silting;

/// A module `M` together with the vertices `P` of a projective `⊕ P_j` with `Hom(P, M) = 0`.
#[derive(Clone)]
pub struct SupportTauTiltingPair<F> {
    pub module: Representation<F>,
    pub projective: Vec<usize>,
}

impl<F: Field> std::fmt::Debug for SupportTauTiltingPair<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SupportTauTiltingPair")
            .field("module", &self.module)
            .field("projective", &self.projective)
            .finish()
    }
}

/// The minimal presentation of `M` plus the shifted stalks `P_j[1]`.
pub fn complex_of_pair<F: Field>(a: &FiniteDimAlgebra<F>, pair: &SupportTauTiltingPair<F>) -> TwoTermComplex<F> {
    let pres = min_proj_presentation(a, &pair.module).complex();
    let stalks: Vec<TwoTermComplex<F>> = pair.projective.iter().map(|&j| TwoTermComplex::shifted_stalk(a, j)).collect();
    let mut parts = vec![&pres];
    parts.extend(stalks.iter());
    TwoTermComplex::direct_sum(a, &parts)
}

/// `H^0` of a two-term silting complex and the vertices outside its support.
pub fn pair_of_complex<F: Field>(
    a: &FiniteDimAlgebra<F>,
    summands: &[&TwoTermComplex<F>],
) -> Result<SupportTauTiltingPair<F>> {
    if !is_two_term_silting(a, summands) {
        return Err(Error::Unsupported("complex is not two-term silting".into()));
    }
    let t = TwoTermComplex::direct_sum(a, summands);
    let module = Representation::cokernel(a, &t);
    let projective = (0..a.num_vertices()).filter(|&j| module.dims()[j] == 0).collect();
    Ok(SupportTauTiltingPair { module, projective })
}

/// Sorted g-vectors of the indecomposable summands of a pair.
pub fn g_matrix_of_pair<F: Field>(a: &FiniteDimAlgebra<F>, pair: &SupportTauTiltingPair<F>) -> Result<Vec<GVector>> {
    let n = a.num_vertices();
    let mut g = Vec::new();
    for (m, _) in decompose(a, &pair.module)? {
        g.push(min_proj_presentation(a, &m).complex().g_vector(n));
    }
    for &j in &pair.projective {
        let mut v = vec![0; n];
        v[j] = -1;
        g.push(v);
    }
    g.sort();
    Ok(g)
}
