mod common;

use common::{alg, from_text, monomial};
use proptest::prelude::*;
use silt_core::algebra::build::build;
use silt_core::algebra::fdalg::FiniteDimAlgebra;
use silt_core::enumerate::{count, enumerate, Count, Parallelism};
use silt_core::rep::{decompose, hom_basis, is_isomorphic, is_stau_pair, tau, Representation};
use silt_core::silting::pairs::{complex_of_pair, g_matrix_of_pair, pair_of_complex};
use silt_core::silting::{is_presilting, is_two_term_silting, TwoTermComplex};
use silt_core::{Fp, Q};

fn hereditary_a2() -> FiniteDimAlgebra<Q> {
    from_text("vertices = [1, 2]\narrows:\n  a: 1 -> 2\n")
}

#[test]
fn tau_moves_the_injective_simple_to_the_projective_simple() {
    let a = hereditary_a2();
    let s: Vec<Representation<Q>> = (0..2).map(|i| Representation::simple(&a, i)).collect();
    let p: Vec<Representation<Q>> = (0..2).map(|i| Representation::projective(&a, i)).collect();
    let proj_simple = (0..2).find(|&i| is_isomorphic(&a, &s[i], &p[i])).expect("one simple is projective");
    let other = 1 - proj_simple;
    assert!(tau(&a, &s[proj_simple]).is_zero());
    assert!(is_isomorphic(&a, &tau(&a, &s[other]), &s[proj_simple]));
}

#[test]
fn tau_swaps_simples_of_selfinjective_nakayama() {
    let a = alg("nakayama-2");
    let s: Vec<Representation<Q>> = (0..2).map(|i| Representation::simple(&a, i)).collect();
    assert!(is_isomorphic(&a, &tau(&a, &s[0]), &s[1]));
    assert!(is_isomorphic(&a, &tau(&a, &s[1]), &s[0]));
}

#[test]
fn projective_plus_its_shift_is_not_presilting() {
    let a = alg("A4");
    for i in 0..a.num_vertices() {
        let (p, q) = (TwoTermComplex::stalk(&a, i), TwoTermComplex::shifted_stalk(&a, i));
        assert!(!is_presilting(&a, &[&p, &q]));
    }
    let reg: Vec<TwoTermComplex<Q>> = (0..a.num_vertices()).map(|i| TwoTermComplex::stalk(&a, i)).collect();
    let refs: Vec<&TwoTermComplex<Q>> = reg.iter().collect();
    assert!(is_two_term_silting(&a, &refs));
    let mut doubled = refs.clone();
    doubled.push(&reg[0]);
    assert!(!is_two_term_silting(&a, &doubled));
}

#[test]
fn regular_and_zero_pairs() {
    let a = alg("A12");
    let n = a.num_vertices();
    assert!(is_stau_pair(&a, &Representation::regular(&a), &[]).unwrap());
    assert!(is_stau_pair(&a, &Representation::zero(&a), &(0..n).collect::<Vec<_>>()).unwrap());
    // P_0 is not annihilated by Hom(P_0, -)
    assert!(!is_stau_pair(&a, &Representation::projective(&a, 0), &[0]).unwrap());
}

#[test]
fn decomposition_of_regular_module() {
    let a = alg("A5");
    let parts = decompose(&a, &Representation::regular(&a)).unwrap();
    assert_eq!(parts.len(), a.num_vertices());
    assert!(parts.iter().all(|(_, mult)| *mult == 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hom_from_projective_is_the_vertex_space(m in monomial(4)) {
        let a = m.algebra();
        let n = a.num_vertices();
        let mods: Vec<Representation<Q>> = (0..n)
            .flat_map(|i| [Representation::simple(&a, i), Representation::projective(&a, i)])
            .chain([Representation::regular(&a)])
            .collect();
        for i in 0..n {
            let p = Representation::projective(&a, i);
            for md in &mods {
                prop_assert_eq!(hom_basis(&a, &p, md).len(), md.dims()[i]);
            }
        }
    }

    #[test]
    fn projectives_have_zero_tau(m in monomial(4)) {
        let a = m.algebra();
        for i in 0..a.num_vertices() {
            prop_assert!(tau(&a, &Representation::projective(&a, i)).is_zero());
        }
    }

    #[test]
    fn nodes_round_trip_through_pairs(m in monomial(3)) {
        let a = m.algebra();
        let g = enumerate(&a, 2_000, Parallelism::Parallel).unwrap();
        prop_assume!(g.complete);
        for (i, nd) in g.nodes.iter().enumerate() {
            let refs = g.summands_of(i);
            let pair = pair_of_complex(&a, &refs).unwrap();
            prop_assert!(is_stau_pair(&a, &pair.module, &pair.projective).unwrap());
            let mut key = g_matrix_of_pair(&a, &pair).unwrap();
            key.sort();
            prop_assert_eq!(&key, &nd.key);
            let back = complex_of_pair(&a, &pair);
            let total: Vec<i64> = nd.key.iter().fold(vec![0; a.num_vertices()], |mut acc, v| {
                acc.iter_mut().zip(v).for_each(|(x, y)| *x += y);
                acc
            });
            let g_back = back.g_vector(a.num_vertices());
            // the pair's complex is basic, so its class is the sum of the distinct summands
            prop_assert_eq!(g_back, total);
        }
    }

    #[test]
    fn count_is_independent_of_small_characteristic(m in monomial(3)) {
        let q = count(&m.algebra(), 2_000, Parallelism::Parallel).unwrap();
        let a2: FiniteDimAlgebra<Fp<2>> = build(&m.presentation()).unwrap();
        let a3: FiniteDimAlgebra<Fp<3>> = build(&m.presentation()).unwrap();
        prop_assume!(matches!(q, Count::Finite(_)));
        prop_assert_eq!(count(&a2, 2_000, Parallelism::Parallel).unwrap(), q);
        prop_assert_eq!(count(&a3, 2_000, Parallelism::Parallel).unwrap(), q);
    }
}
