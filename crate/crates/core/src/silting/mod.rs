//! Two-term complexes of projectives, their Hom spaces in the homotopy
//! category, and irreducible mutation.

pub mod complex;
pub mod hom;
pub mod mutation;
pub mod pairs;
pub mod projmap;

use std::sync::Arc;

pub use complex::{Chain, GVector, TwoTermComplex};
pub use hom::{find_isomorphism, hom_homotopy, hom_shift1_dim, hom_space, is_indecomposable, rad_end, ChainMap, HomSpace};
pub use mutation::{mutate, mutate_in, mutate_left, mutate_right, Direction, HomSource, LocalHoms};
pub use pairs::{complex_of_pair, g_matrix_of_pair, pair_of_complex, SupportTauTiltingPair};
pub use projmap::ProjMap;

use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::field::Field;

/// Sorted g-vectors of a list of indecomposable summands.
pub fn g_matrix<F: Field>(a: &FiniteDimAlgebra<F>, summands: &[&TwoTermComplex<F>]) -> Vec<GVector> {
    let mut g: Vec<GVector> = summands.iter().map(|s| s.g_vector(a.num_vertices())).collect();
    g.sort();
    g
}

/// `Hom_K(T, T[1]) = 0` for `T` the sum of the given complexes.
pub fn is_presilting<F: Field>(a: &FiniteDimAlgebra<F>, summands: &[&TwoTermComplex<F>]) -> bool {
    summands.iter().all(|x| summands.iter().all(|y| hom_shift1_dim(a, x, y) == 0))
}

/// Whether the given minimal complexes are the indecomposable summands of a
/// basic two-term silting complex.
pub fn is_two_term_silting<F: Field>(a: &FiniteDimAlgebra<F>, summands: &[&TwoTermComplex<F>]) -> bool {
    let n = a.num_vertices();
    if summands.len() != n || !summands.iter().all(|s| s.is_minimal()) {
        return false;
    }
    let g = g_matrix(a, summands);
    if g.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    if !summands.iter().all(|s| is_indecomposable(s, &hom_space(a, s, s))) {
        return false;
    }
    is_presilting(a, summands)
}

/// Splits the stalk complex of `A` into its indecomposable summands.
pub fn regular_summands<F: Field>(a: &FiniteDimAlgebra<F>) -> Vec<Arc<TwoTermComplex<F>>> {
    (0..a.num_vertices()).map(|i| Arc::new(TwoTermComplex::stalk(a, i))).collect()
}
