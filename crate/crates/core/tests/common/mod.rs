#![allow(dead_code)]

use std::fmt::Write;

use proptest::prelude::*;
use silt_core::algebra::build::build;
use silt_core::algebra::catalog::catalog;
use silt_core::algebra::fdalg::FiniteDimAlgebra;
use silt_core::algebra::presentation::Presentation;
use silt_core::io::parse_algebra_file;
use silt_core::Q;

pub fn alg(name: &str) -> FiniteDimAlgebra<Q> {
    build(&catalog(name, None).unwrap()).unwrap()
}

pub fn from_text(text: &str) -> FiniteDimAlgebra<Q> {
    build(&parse_algebra_file(text).unwrap()).unwrap()
}

/// A quiver with relations that only kills paths: every path of length 3,
/// and the length-2 paths listed in `zero2`.
#[derive(Clone, Debug)]
pub struct Monomial {
    pub n: usize,
    pub arrows: Vec<(usize, usize)>,
    pub zero2: Vec<(usize, usize)>,
}

impl Monomial {
    pub fn paths2(&self) -> Vec<(usize, usize)> {
        let m = self.arrows.len();
        (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter(|&(x, y)| self.arrows[x].1 == self.arrows[y].0).collect()
    }

    pub fn paths3(&self) -> Vec<(usize, usize, usize)> {
        let p2 = self.paths2();
        let m = self.arrows.len();
        p2.iter().flat_map(|&(x, y)| (0..m).filter(move |&z| self.arrows[y].1 == self.arrows[z].0).map(move |z| (x, y, z))).collect()
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let vs: Vec<String> = (1..=self.n).map(|v| v.to_string()).collect();
        writeln!(s, "vertices = [{}]", vs.join(", ")).unwrap();
        writeln!(s, "arrows:").unwrap();
        for (k, (i, j)) in self.arrows.iter().enumerate() {
            writeln!(s, "  a{k}: {} -> {}", i + 1, j + 1).unwrap();
        }
        let mut rels = Vec::new();
        for &(x, y) in &self.zero2 {
            rels.push(format!("a{x}*a{y}"));
        }
        for (x, y, z) in self.paths3() {
            if !self.zero2.contains(&(x, y)) && !self.zero2.contains(&(y, z)) {
                rels.push(format!("a{x}*a{y}*a{z}"));
            }
        }
        if !rels.is_empty() {
            writeln!(s, "relations:").unwrap();
            for r in rels {
                writeln!(s, "  {r}").unwrap();
            }
        }
        s
    }

    pub fn presentation(&self) -> Presentation {
        parse_algebra_file(&self.text()).unwrap()
    }

    pub fn algebra(&self) -> FiniteDimAlgebra<Q> {
        build(&self.presentation()).unwrap()
    }

    /// Nonzero paths from `i` to `j`, counted by walking the quiver.
    pub fn path_count(&self, i: usize, j: usize) -> usize {
        let mut c = usize::from(i == j);
        c += self.arrows.iter().filter(|&&a| a == (i, j)).count();
        c += self
            .paths2()
            .into_iter()
            .filter(|&(x, y)| !self.zero2.contains(&(x, y)) && self.arrows[x].0 == i && self.arrows[y].1 == j)
            .count();
        c
    }
}

/// Random monomial algebras on `n <= max_n` vertices: each pair `(k, k + 1)`
/// carries no arrow, one arrow either way, or a 2-cycle; `zero2` is a random
/// subset of the length-2 paths.
pub fn monomial(max_n: usize) -> impl Strategy<Value = Monomial> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(0u8..4, n - 1)))
        .prop_flat_map(|(n, shapes)| {
            let mut arrows = Vec::new();
            for (k, s) in shapes.into_iter().enumerate() {
                if s & 1 == 1 {
                    arrows.push((k, k + 1));
                }
                if s & 2 == 2 {
                    arrows.push((k + 1, k));
                }
            }
            let base = Monomial { n, arrows, zero2: Vec::new() };
            let p2 = base.paths2();
            let k = p2.len();
            (Just(base), Just(p2), prop::collection::vec(any::<bool>(), k))
        })
        .prop_map(|(mut base, p2, mask)| {
            base.zero2 = p2.into_iter().zip(mask).filter(|&(_, b)| b).map(|(p, _)| p).collect();
            base
        })
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

pub fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}
