mod common;

use common::{alg, binomial, catalan, from_text, monomial, Monomial};
use proptest::prelude::*;
use silt_core::algebra::build::build;
use silt_core::algebra::catalog::{preprojective, DynkinKind};
use silt_core::algebra::constructions::idempotent_quotient;
use silt_core::algebra::fdalg::FiniteDimAlgebra;
use silt_core::enumerate::{
    check_properties, count, enumerate, hasse, strata_counts, support_rank_counts, Count, Parallelism,
};
use silt_core::io::to_dot;
use silt_core::Q;

const LIMIT: usize = 100_000;
const PAR: Parallelism = Parallelism::Parallel;

fn finite(a: &FiniteDimAlgebra<Q>) -> usize {
    match count(a, LIMIT, PAR).unwrap() {
        Count::Finite(k) => k,
        c => panic!("{}: {c}", a.name()),
    }
}

/// Type A_n with arrow `k` pointing forward when bit `k` of `mask` is set.
fn oriented_a(n: usize, mask: u32) -> Monomial {
    let arrows = (0..n - 1).map(|k| if mask >> k & 1 == 1 { (k, k + 1) } else { (k + 1, k) }).collect();
    Monomial { n, arrows, zero2: Vec::new() }
}

/// Path algebra of an acyclic quiver, no relations.
fn path_algebra(n: usize, arrows: &[(usize, usize)]) -> FiniteDimAlgebra<Q> {
    let mut s = format!("vertices = [{}]\narrows:\n", (1..=n).map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    for (k, (i, j)) in arrows.iter().enumerate() {
        s.push_str(&format!("  a{k}: {} -> {}\n", i + 1, j + 1));
    }
    from_text(&s)
}

/// Cyclic quiver on `n` vertices with all paths of length `n + 1` zero.
fn symmetric_nakayama(n: usize) -> FiniteDimAlgebra<Q> {
    let mut s = format!("vertices = [{}]\narrows:\n", (1..=n).map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    for k in 0..n {
        s.push_str(&format!("  a{k}: {} -> {}\n", k + 1, (k + 1) % n + 1));
    }
    s.push_str("relations:\n");
    for start in 0..n {
        let w: Vec<String> = (0..=n).map(|t| format!("a{}", (start + t) % n)).collect();
        s.push_str(&format!("  {}\n", w.join("*")));
    }
    from_text(&s)
}

#[test]
fn hereditary_a2_has_five() {
    assert_eq!(finite(&path_algebra(2, &[(0, 1)])), 5);
}

#[test]
fn hereditary_type_a_gives_catalan_numbers() {
    for n in 1..=4usize {
        for mask in 0..1u32 << (n - 1) {
            let m = oriented_a(n, mask);
            assert_eq!(finite(&path_algebra(n, &m.arrows)) as u64, catalan(n as u64 + 1), "n={n} mask={mask}");
        }
    }
}

#[test]
fn hereditary_d4_gives_fifty() {
    // (3n - 2) / n * binom(2n - 2, n - 1) clusters in type D_n
    let expected = (3 * 4 - 2) * binomial(6, 3) / 4;
    for mask in 0..8u32 {
        let arrows: Vec<(usize, usize)> = (1..4).map(|k| if mask >> (k - 1) & 1 == 1 { (0, k) } else { (k, 0) }).collect();
        assert_eq!(finite(&path_algebra(4, &arrows)) as u64, expected, "mask={mask}");
    }
}

#[test]
fn symmetric_nakayama_gives_central_binomials() {
    for n in 1..=3 {
        assert_eq!(finite(&symmetric_nakayama(n)) as u64, binomial(2 * n as u64, n as u64), "n={n}");
    }
}

#[test]
fn preprojective_a_gives_factorials() {
    for (n, f) in [(1, 2), (2, 6), (3, 24)] {
        let a: FiniteDimAlgebra<Q> = build(&preprojective(DynkinKind::A(n)).unwrap()).unwrap();
        assert_eq!(finite(&a), f, "n={n}");
    }
}

#[test]
fn l10_quotient_is_a_brauer_line() {
    // killing vertices 2 and 4 leaves 1 <-> 3 <-> 5 with one exceptional-free Brauer line
    let brauer = from_text(
        "vertices = [1, 3, 5]\narrows:\n  xi: 1 -> 3\n  gamma: 3 -> 1\n  sigma: 3 -> 5\n  delta: 5 -> 3\n\
         relations:\n  sigma*delta = gamma*xi\n  xi*sigma\n  delta*gamma\n",
    );
    assert_eq!(brauer.dim(), 10);
    assert_eq!(finite(&brauer) as u64, binomial(6, 3));
    let l10 = alg("L10");
    let q = idempotent_quotient(&l10, &[1, 3]).unwrap();
    assert_eq!(q.dim(), brauer.dim());
    assert_eq!(q.cartan_matrix(), brauer.cartan_matrix());
    assert_eq!(finite(&q), finite(&brauer));
    let s1 = strata_counts(&q, LIMIT, PAR).unwrap();
    let s2 = strata_counts(&brauer, LIMIT, PAR).unwrap();
    assert_eq!(s1.entries, s2.entries);
}

#[test]
fn budget_is_respected() {
    let a = alg("ladder-5");
    let c = count(&a, 300, PAR).unwrap();
    assert_eq!(c, Count::AtLeast(300));
    assert!(hasse(&a, 300, PAR).is_err());
}

#[test]
fn strata_of_a4() {
    let s = strata_counts(&alg("A4"), LIMIT, PAR).unwrap();
    assert_eq!(s.total, 132);
    assert_eq!(s.get(&[]), Some(79));
    assert_eq!(s.get(&[1]), Some(9));
    assert_eq!(s.get(&[1, 3, 4]), Some(1));
}

#[test]
fn dot_is_identical_across_thread_counts() {
    let a = alg("A12");
    let render = |t: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap();
        pool.install(|| to_dot(&a, &hasse(&a, LIMIT, PAR).unwrap()))
    };
    let one = render(1);
    assert_eq!(one, render(3));
    let seq = to_dot(&a, &hasse(&a, LIMIT, Parallelism::Sequential).unwrap());
    assert_eq!(one, seq);
}

#[test]
fn support_rank_slices_sum_to_count() {
    let a = alg("A4");
    let slices = support_rank_counts(&a, 4, LIMIT, PAR).unwrap();
    assert_eq!(slices.len(), 5);
    assert_eq!(slices[0], 1);
    assert_eq!(slices.iter().sum::<usize>(), 132);
}

/// Budget for random draws; a draw that exceeds it counts as unknown.
const SMALL: usize = 2_000;

fn bounded(a: &FiniteDimAlgebra<Q>) -> Option<usize> {
    match count(a, SMALL, PAR).unwrap() {
        Count::Finite(k) => Some(k),
        Count::AtLeast(_) => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn opposite_has_same_count(m in monomial(4)) {
        let a = m.algebra();
        let b: FiniteDimAlgebra<Q> = build(&m.presentation().opposite()).unwrap();
        prop_assert_eq!(bounded(&a), bounded(&b));
    }

    #[test]
    fn exchange_graph_properties_hold(m in monomial(4)) {
        let a = m.algebra();
        let g = enumerate(&a, SMALL, PAR).unwrap();
        prop_assume!(g.complete);
        let r = check_properties(&a, &g, 20).unwrap();
        prop_assert!(r.all_ok(), "{:?}", r);
        prop_assert_eq!(g.edges.len(), g.nodes.len() * m.n / 2);
    }

    #[test]
    fn sequential_matches_parallel(m in monomial(4)) {
        let a = m.algebra();
        let s = enumerate(&a, SMALL, Parallelism::Sequential).unwrap();
        let p = enumerate(&a, SMALL, Parallelism::Parallel).unwrap();
        prop_assert_eq!(s.complete, p.complete);
        prop_assert_eq!(to_dot(&a, &s), to_dot(&a, &p));
    }

    #[test]
    fn strata_sum_to_count(m in monomial(4)) {
        let a = m.algebra();
        let Some(total) = bounded(&a) else { return Ok(()) };
        let s = strata_counts(&a, SMALL, PAR).unwrap();
        prop_assert_eq!(s.total, total);
        prop_assert_eq!(s.entries.values().sum::<usize>(), s.total);
    }

    #[test]
    fn truncated_run_reports_lower_bound(m in monomial(4), cut in 1usize..6) {
        let a = m.algebra();
        let full = bounded(&a);
        match count(&a, cut, PAR).unwrap() {
            Count::Finite(k) => prop_assert!(Some(k) == full && k <= cut),
            Count::AtLeast(k) => prop_assert!(k == cut && full.map_or(true, |f| k < f)),
        }
    }
}
