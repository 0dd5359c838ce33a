mod common;

use common::{alg, from_text, monomial};
use proptest::prelude::*;
use silt_core::algebra::constructions::{idempotent_quotient, radical_square_zero, trivial_extension};
use silt_core::algebra::structure::{cartan_report, center, is_symmetric, radical, socle};
use silt_core::linalg::is_zero_vec;

#[test]
fn linear_a3_is_upper_triangular_paths() {
    let a = from_text("vertices = [1, 2, 3]\narrows:\n  a: 1 -> 2\n  b: 2 -> 3\n");
    assert_eq!(a.dim(), 6);
    assert_eq!(a.cartan_matrix(), vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]);
    assert_eq!(a.loewy_length(), 3);
}

#[test]
fn zero_relation_cuts_the_long_path() {
    let a = from_text("vertices = [1, 2, 3]\narrows:\n  a: 1 -> 2\n  b: 2 -> 3\nrelations:\n  a*b\n");
    assert_eq!(a.dim(), 5);
    assert_eq!(a.cartan_matrix()[0][2], 0);
}

#[test]
fn commutativity_square() {
    let text = "vertices = [1, 2, 3, 4]\narrows:\n  a: 1 -> 2\n  b: 2 -> 4\n  c: 1 -> 3\n  d: 3 -> 4\nrelations:\n  a*b = c*d\n";
    let a = from_text(text);
    // 4 idempotents, 4 arrows, one surviving path of length 2
    assert_eq!(a.dim(), 9);
    assert_eq!(a.cartan_matrix()[0][3], 1);
}

#[test]
fn a5_cartan() {
    let c = cartan_report(&alg("A5"));
    assert_eq!(c.matrix, vec![vec![5, 3], vec![3, 3]]);
    assert_eq!(c.determinant, "6");
    assert!(c.positive_definite);
}

#[test]
fn catalog_algebras_verify() {
    for name in ["A1", "A3", "A7", "A12", "L2", "L10", "nakayama-2", "exrs0-1", "exrs0-2", "preproj-A3"] {
        let a = alg(name);
        a.verify().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn trivial_extension_is_symmetric_and_doubles_dimension() {
    let b = from_text("vertices = [1, 2]\narrows:\n  a: 1 -> 2\n");
    let t = trivial_extension(&b).unwrap();
    assert_eq!(t.dim(), 2 * b.dim());
    t.verify().unwrap();
    assert!(is_symmetric(&t));
    assert!(!is_symmetric(&b));
}

#[test]
fn radical_square_zero_quotient() {
    let a = alg("A5");
    let r = radical_square_zero(&a).unwrap();
    assert_eq!(r.loewy_length(), 2);
    assert_eq!(r.dim(), a.num_vertices() + a.radical_layers()[0].len() - a.radical_layers()[1].len());
}

#[test]
fn idempotent_quotient_drops_vertex() {
    let a = from_text("vertices = [1, 2, 3]\narrows:\n  a: 1 -> 2\n  b: 2 -> 3\n");
    let b = idempotent_quotient(&a, &[1]).unwrap();
    assert_eq!(b.num_vertices(), 2);
    assert_eq!(b.dim(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn monomial_dimension_matches_path_count(m in monomial(4)) {
        let a = m.algebra();
        let c = a.cartan_matrix();
        let mut total = 0;
        for i in 0..m.n {
            for j in 0..m.n {
                prop_assert_eq!(c[i][j] as usize, m.path_count(i, j));
                total += m.path_count(i, j);
            }
        }
        prop_assert_eq!(a.dim(), total);
    }

    #[test]
    fn multiplication_is_associative(m in monomial(4), x in 0usize..64, y in 0usize..64, z in 0usize..64) {
        let a = m.algebra();
        let d = a.dim();
        let (u, v, w) = (a.unit(x % d), a.unit(y % d), a.unit(z % d));
        prop_assert_eq!(a.mul(&a.mul(&u, &v), &w), a.mul(&u, &a.mul(&v, &w)));
    }

    #[test]
    fn one_is_a_unit(m in monomial(4)) {
        let a = m.algebra();
        let one = a.one();
        for x in 0..a.dim() {
            let u = a.unit(x);
            prop_assert_eq!(a.mul(&one, &u), u.clone());
            prop_assert_eq!(a.mul(&u, &one), u);
        }
    }

    #[test]
    fn radical_is_nilpotent_ideal(m in monomial(4)) {
        let a = m.algebra();
        let r = radical(&a);
        prop_assert_eq!(r.dim(), a.dim() - m.n);
        prop_assert!(r.is_ideal(&a));
        // rad^3 = 0 since paths of length 3 vanish
        for x in &r.basis {
            for y in &r.basis {
                for z in &r.basis {
                    prop_assert!(is_zero_vec(&a.mul(&a.mul(x, y), z)));
                }
            }
        }
    }

    #[test]
    fn center_commutes_and_socle_is_ideal(m in monomial(4)) {
        let a = m.algebra();
        for z in &center(&a).basis {
            for x in 0..a.dim() {
                let u = a.unit(x);
                prop_assert_eq!(a.mul(z, &u), a.mul(&u, z));
            }
        }
        prop_assert!(socle(&a).is_ideal(&a));
    }

    #[test]
    fn opposite_transposes_cartan(m in monomial(4)) {
        let a = m.algebra();
        let b: silt_core::algebra::fdalg::FiniteDimAlgebra<silt_core::Q> =
            silt_core::algebra::build::build(&m.presentation().opposite()).unwrap();
        let c = a.cartan_matrix();
        let ct: Vec<Vec<i64>> = (0..m.n).map(|i| (0..m.n).map(|j| c[j][i]).collect()).collect();
        prop_assert_eq!(b.cartan_matrix(), ct);
    }
}
