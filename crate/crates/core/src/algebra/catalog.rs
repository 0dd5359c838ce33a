//! Built-in presentations.

use crate::algebra::presentation::{Coef, PathWord, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::{Field, Q};
use crate::io::parse::parse_algebra_file;

pub const DEFAULT_LAMBDA: i64 = 2;

const A1: &str = "
vertices = [1, 2, 3]
arrows:
  alpha: 1 -> 2
  gamma: 2 -> 1
  sigma: 2 -> 3
  beta: 3 -> 2
relations:
  alpha*gamma*alpha = alpha*sigma*beta
  beta*gamma*alpha = lambda*beta*sigma*beta
  gamma*alpha*gamma = sigma*beta*gamma
  gamma*alpha*sigma = lambda*sigma*beta*sigma
params:
  generic = lambda
";

const A2: &str = "
vertices = [1, 2]
arrows:
  alpha: 1 -> 1
  beta: 2 -> 2
  sigma: 1 -> 2
  gamma: 2 -> 1
relations:
  alpha^2 = sigma*gamma
  lambda*beta^2 = gamma*sigma
  gamma*alpha = beta*gamma
  sigma*beta = alpha*sigma
params:
  generic = lambda
";

const STAR: &str = "
vertices = [1, 2, 3, 4]
arrows:
  alpha: 1 -> 2
  beta: 2 -> 1
  delta: 2 -> 3
  gamma: 3 -> 2
  eps: 2 -> 4
  xi: 4 -> 2
";

const A3_REL: &str = "
relations:
  beta*alpha + delta*gamma + eps*xi
  alpha*beta
  gamma*delta
  xi*eps
";

const A4_REL: &str = "
relations:
  beta*alpha + delta*gamma + eps*xi
  alpha*beta
  gamma*eps
  xi*delta
";

const L9_REL: &str = "
relations:
  beta*alpha + delta*gamma + eps*xi
  gamma*delta
  xi*eps
  alpha*beta*alpha
  beta*alpha*beta
  alpha*beta = alpha*delta*gamma*beta
";

const LOOP_CYCLE: &str = "
vertices = [1, 2]
arrows:
  alpha: 1 -> 1
  gamma: 1 -> 2
  beta: 2 -> 1
";

const A5_REL: &str = "
relations:
  alpha^2 = gamma*beta
  beta*alpha*gamma
";

const A6_REL: &str = "
relations:
  alpha^3 = gamma*beta
  beta*gamma
  beta*alpha^2
  alpha^2*gamma
";

const L1_REL: &str = "
relations:
  alpha^2 = gamma*beta
  beta*alpha*gamma = beta*alpha^2*gamma
  beta*alpha*gamma*beta
  gamma*beta*alpha*gamma
";

const L2_REL: &str = "
relations:
  alpha^2*gamma
  beta*alpha^2
  gamma*beta*gamma
  beta*gamma*beta
  beta*alpha*gamma = beta*gamma
  alpha^3 = gamma*beta
";

const A7: &str = "
vertices = [1, 2, 3, 4]
arrows:
  alpha: 1 -> 2
  beta: 2 -> 1
  delta: 2 -> 3
  gamma: 3 -> 2
  eps: 3 -> 4
  xi: 4 -> 3
relations:
  beta*alpha = delta*gamma
  gamma*delta = eps*xi
  alpha*delta*eps
  xi*gamma*beta
";

const A8: &str = "
vertices = [1, 2, 3, 4]
arrows:
  sigma: 1 -> 2
  xi: 2 -> 3
  gamma: 3 -> 4
  delta: 4 -> 1
  alpha: 1 -> 3
  beta: 3 -> 1
relations:
  alpha*beta*alpha = sigma*xi
  beta*alpha*beta = gamma*delta
  xi*beta*alpha
  delta*alpha*beta
  beta*alpha*gamma
  alpha*beta*sigma
  xi*gamma
  delta*sigma
";

const A9: &str = "
vertices = [1, 2, 3, 4]
arrows:
  alpha: 1 -> 2
  sigma: 2 -> 3
  beta: 3 -> 2
  gamma: 3 -> 4
  eps: 4 -> 3
  delta: 4 -> 1
relations:
  delta*alpha = eps*beta
  gamma*eps = beta*sigma
  alpha*sigma*beta
  eps*gamma*delta
  sigma*gamma*eps*gamma
";

const A10: &str = "
vertices = [1, 2, 3, 4]
arrows:
  beta: 1 -> 2
  alpha: 2 -> 1
  delta: 2 -> 3
  gamma: 3 -> 4
  xi: 4 -> 2
relations:
  xi*alpha*beta = xi*delta*gamma*xi
  alpha*beta*delta = delta*gamma*xi*delta
  beta*alpha
  (gamma*xi*delta)^2*gamma
";

const A11: &str = "
vertices = [1, 2, 3, 4]
arrows:
  beta: 1 -> 2
  alpha: 2 -> 1
  xi: 2 -> 3
  gamma: 3 -> 2
  zeta: 3 -> 4
  delta: 4 -> 3
relations:
  gamma*alpha*beta = gamma*xi*gamma
  alpha*beta*xi = xi*gamma*xi
  beta*alpha
  delta*gamma
  xi*zeta
  (gamma*xi)^2 = zeta*delta
";

const TRIANGLE: &str = "
vertices = [1, 2, 3]
arrows:
  alpha: 1 -> 2
  gamma: 2 -> 3
  beta: 3 -> 1
  delta: 1 -> 3
";

const A12_REL: &str = "
relations:
  delta*beta*delta = alpha*gamma
  gamma*beta*alpha
  beta*(delta*beta)^3
";

const L4_REL: &str = "
relations:
  delta*beta*delta = alpha*gamma
  (beta*delta)^3*beta
  gamma*beta*alpha*gamma
  alpha*gamma*beta*alpha
  gamma*beta*alpha = gamma*beta*delta*beta*alpha
";

const A13_QUIVER: &str = "
vertices = [1, 2, 3]
arrows:
  alpha: 2 -> 2
  beta: 1 -> 2
  gamma: 2 -> 1
  delta: 2 -> 3
  sigma: 3 -> 2
";

const A13_REL: &str = "
relations:
  alpha^2 = gamma*beta
  beta*delta
  beta*gamma
  sigma*gamma
  sigma*alpha
  alpha*delta
  alpha^3 = delta*sigma
";

const L5_REL: &str = "
relations:
  alpha^2 = gamma*beta
  alpha^3 = delta*sigma
  sigma*gamma
  alpha*delta
  sigma*alpha
  beta*delta
  gamma*beta*gamma
  beta*gamma*beta
  beta*gamma = beta*alpha*gamma
";

const A14_QUIVER: &str = "
vertices = [1, 2, 3]
arrows:
  alpha: 1 -> 2
  beta: 2 -> 1
  delta: 2 -> 3
  gamma: 3 -> 2
";

const A14_REL: &str = "
relations:
  beta*alpha = (delta*gamma)^2
  alpha*delta*gamma*delta
  gamma*delta*gamma*beta
  alpha*beta
";

const L6_REL: &str = "
relations:
  alpha*delta*gamma*delta
  gamma*delta*gamma*beta
  alpha*beta*alpha
  beta*alpha*beta
  alpha*beta = alpha*delta*gamma*beta
  beta*alpha = delta*gamma*delta*gamma
";

const A15_QUIVER: &str = "
vertices = [1, 2, 3]
arrows:
  alpha: 1 -> 1
  sigma: 1 -> 2
  gamma: 2 -> 3
  beta: 3 -> 1
  delta: 1 -> 3
";

const A15_REL: &str = "
relations:
  gamma*beta*alpha
  alpha^2 = delta*beta
  beta*delta
  alpha*sigma
  alpha*delta = sigma*gamma
";

const L7_REL: &str = "
relations:
  beta*delta = beta*alpha*delta
  alpha*sigma
  alpha*delta = sigma*gamma
  gamma*beta*alpha
  alpha^2 = delta*beta
  gamma*beta*delta
  beta*delta*beta
  delta*beta*delta
";

const A16_QUIVER: &str = "
vertices = [1, 2, 3]
arrows:
  alpha: 1 -> 1
  sigma: 2 -> 1
  gamma: 3 -> 2
  beta: 1 -> 3
  delta: 3 -> 1
";

const A16_REL: &str = "
relations:
  alpha*beta*gamma
  alpha^2 = beta*delta
  delta*beta
  sigma*alpha
  delta*alpha = gamma*sigma
";

const L8_REL: &str = "
relations:
  delta*beta = delta*alpha*beta
  sigma*alpha
  delta*alpha = gamma*sigma
  alpha*beta*gamma
  alpha^2 = beta*delta
  delta*beta*gamma
  beta*delta*beta
  delta*beta*delta
";

const L3: &str = "
vertices = [1, 2]
arrows:
  alpha: 1 -> 1
  sigma: 1 -> 2
  gamma: 2 -> 1
  beta: 2 -> 2
relations:
  alpha^4
  gamma*alpha^2
  alpha^2*sigma
  alpha^2 = sigma*gamma + alpha^3
  lambda*beta^2 = gamma*sigma
  gamma*alpha = beta*gamma
  sigma*beta = alpha*sigma
params:
  generic = lambda
";

const L10: &str = "
vertices = [1, 2, 3, 4, 5]
arrows:
  eta: 1 -> 2
  mu: 2 -> 5
  xi: 1 -> 3
  gamma: 3 -> 1
  sigma: 3 -> 5
  delta: 5 -> 3
  beta: 5 -> 4
  alpha: 4 -> 1
relations:
  mu*beta
  alpha*eta
  beta*alpha = delta*gamma
  xi*sigma = eta*mu
  sigma*delta = gamma*xi + sigma*delta*sigma*delta
  delta*sigma*delta*sigma
  xi*gamma*xi*gamma
";

const NAKAYAMA2: &str = "
vertices = [1, 2]
arrows:
  x: 1 -> 2
  y: 2 -> 1
relations:
  x*y
  y*x
";

const EXRS0_1: &str = "
vertices = [1, 2, 3, 4]
arrows:
  a: 1 -> 2
  b: 1 -> 3
  c: 1 -> 4
  d: 2 -> 4
  e: 3 -> 4
relations:
  a*d
  b*e
";

const EXRS0_2: &str = "
vertices = [1, 2, 3]
arrows:
  a: 1 -> 2
  b: 2 -> 3
  c: 1 -> 3
relations:
  a*b
";

fn text_for(name: &str) -> Option<String> {
    let join = |a: &str, b: &str| format!("{a}{b}");
    Some(match name {
        "A1" => A1.to_string(),
        "A2" => A2.to_string(),
        "A3" => join(STAR, A3_REL),
        "A4" => join(STAR, A4_REL),
        "A5" => join(LOOP_CYCLE, A5_REL),
        "A6" => join(LOOP_CYCLE, A6_REL),
        "A7" => A7.to_string(),
        "A8" => A8.to_string(),
        "A9" => A9.to_string(),
        "A10" => A10.to_string(),
        "A11" => A11.to_string(),
        "A12" => join(TRIANGLE, A12_REL),
        "A13" => join(A13_QUIVER, A13_REL),
        "A14" => join(A14_QUIVER, A14_REL),
        "A15" => join(A15_QUIVER, A15_REL),
        "A16" => join(A16_QUIVER, A16_REL),
        "L1" => join(LOOP_CYCLE, L1_REL),
        "L2" => join(LOOP_CYCLE, L2_REL),
        "L3" => L3.to_string(),
        "L4" => join(TRIANGLE, L4_REL),
        "L5" => join(A13_QUIVER, L5_REL),
        "L6" => join(A14_QUIVER, L6_REL),
        "L7" => join(A15_QUIVER, L7_REL),
        "L8" => join(A16_QUIVER, L8_REL),
        "L9" => join(STAR, L9_REL),
        "L10" => L10.to_string(),
        "nakayama-2" => NAKAYAMA2.to_string(),
        "exrs0-1" => EXRS0_1.to_string(),
        "exrs0-2" => EXRS0_2.to_string(),
        _ => return None,
    })
}

/// Keys accepted by [`catalog`]; parametrised families are listed by pattern.
pub fn catalog_names() -> Vec<String> {
    let mut v: Vec<String> = (1..=16).map(|i| format!("A{i}")).collect();
    v.extend((1..=10).map(|i| format!("L{i}")));
    v.extend(["preproj-An", "preproj-Dn", "ladder-n", "exrs0-1", "exrs0-2", "nakayama-2"].map(String::from));
    v
}

/// Dynkin types supported by [`preprojective`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynkinKind {
    A(usize),
    D(usize),
}

/// The Dynkin graph with a fixed orientation, as a quiver on vertices `1..=n`.
pub fn dynkin_quiver(kind: DynkinKind) -> Result<Quiver> {
    match kind {
        DynkinKind::A(n) if n >= 1 => {
            let mut q = Quiver::new((1..=n as i64).collect());
            for i in 1..n as i64 {
                q = q.arrow(&format!("a{i}"), i, i + 1);
            }
            Ok(q)
        }
        DynkinKind::D(n) if n >= 4 => {
            let mut q = Quiver::new((1..=n as i64).collect());
            let n = n as i64;
            for i in 1..n - 2 {
                q = q.arrow(&format!("a{i}"), i, i + 1);
            }
            q = q.arrow(&format!("a{}", n - 2), n - 2, n - 1);
            q = q.arrow(&format!("a{}", n - 1), n - 2, n);
            Ok(q)
        }
        other => Err(Error::Unsupported(format!("Dynkin type {other:?}"))),
    }
}

/// The preprojective algebra of a Dynkin diagram.
///
/// The double quiver adds `a*: j -> i` for every `a: i -> j`; at each vertex
/// `v` the relation is `sum a a* - sum a* a` over arrows leaving and entering `v`.
pub fn preprojective(kind: DynkinKind) -> Result<Presentation> {
    let base = dynkin_quiver(kind)?;
    let q = crate::reductions::double_quiver(&base);
    let m = base.arrows.len();
    let mut relations = Vec::new();
    for v in 0..q.num_vertices() {
        let mut terms = Vec::new();
        for (i, a) in base.arrows.iter().enumerate() {
            if a.src == v {
                terms.push((Coef::constant(Q::one()), PathWord { start: v, arrows: vec![i, i + m] }));
            }
            if a.tgt == v {
                terms.push((Coef::constant(Q::from_i64(-1)), PathWord { start: v, arrows: vec![i + m, i] }));
            }
        }
        if !terms.is_empty() {
            relations.push(Relation::new(&q, terms)?);
        }
    }
    let name = match kind {
        DynkinKind::A(n) => format!("preproj-A{n}"),
        DynkinKind::D(n) => format!("preproj-D{n}"),
    };
    let mut p = Presentation::new(&name, q);
    p.relations = relations;
    Ok(p)
}

/// The commutative ladder of degree `n`: two copies of a linear `A_n` quiver
/// joined by vertical arrows, with every square commuting.
pub fn commutative_ladder(n: usize) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::Unsupported("ladder of degree 0".into()));
    }
    let n = n as i64;
    let mut q = Quiver::new((1..=2 * n).collect());
    for i in 1..n {
        q = q.arrow(&format!("a{i}"), i, i + 1);
    }
    for i in 1..n {
        q = q.arrow(&format!("b{i}"), n + i, n + i + 1);
    }
    for i in 1..=n {
        q = q.arrow(&format!("c{i}"), i, n + i);
    }
    let mut p = Presentation::new(&format!("ladder-{n}"), q.clone());
    for i in 1..n {
        let w1 = crate::algebra::presentation::word(&q, &format!("a{i} c{}", i + 1))?;
        let w2 = crate::algebra::presentation::word(&q, &format!("c{i} b{i}"))?;
        p.relations
            .push(Relation::new(&q, vec![(Coef::constant(Q::one()), w1), (Coef::constant(Q::from_i64(-1)), w2)])?);
    }
    Ok(p)
}

fn parse_suffix(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Looks up a built-in presentation. `lambda` overrides the default value 2.
pub fn catalog(name: &str, lambda: Option<Q>) -> Result<Presentation> {
    let mut p = if let Some(text) = text_for(name) {
        let mut p = parse_algebra_file(&text)
            .map_err(|e| Error::Internal(format!("built-in presentation {name} does not parse: {e}")))?;
        p.name = Some(name.to_string());
        p
    } else if let Some(n) = parse_suffix(name, "preproj-A") {
        preprojective(DynkinKind::A(n))?
    } else if let Some(n) = parse_suffix(name, "preproj-D") {
        preprojective(DynkinKind::D(n))?
    } else if let Some(n) = parse_suffix(name, "ladder-") {
        commutative_ladder(n)?
    } else {
        return Err(Error::UnknownAlgebra(name.to_string()));
    };
    if p.uses_lambda() {
        p.field.lambda = Some(lambda.unwrap_or_else(|| Q::from_i64(DEFAULT_LAMBDA)));
    }
    p.check_lambda()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_parse() {
        for name in catalog_names() {
            let key = match name.as_str() {
                "preproj-An" => "preproj-A3".to_string(),
                "preproj-Dn" => "preproj-D4".to_string(),
                "ladder-n" => "ladder-3".to_string(),
                _ => name.clone(),
            };
            let p = catalog(&key, None).unwrap_or_else(|e| panic!("{key}: {e}"));
            p.validate().unwrap();
        }
    }

    #[test]
    fn shapes() {
        let a3 = catalog("A3", None).unwrap();
        assert_eq!((a3.num_vertices(), a3.quiver.arrows.len(), a3.relations.len()), (4, 6, 4));
        let l10 = catalog("L10", None).unwrap();
        assert_eq!((l10.num_vertices(), l10.quiver.arrows.len()), (5, 8));
    }

    #[test]
    fn excluded_lambda() {
        for name in ["A1", "A2", "L3"] {
            assert!(matches!(catalog(name, Some(Q::one())), Err(Error::ExcludedParameter { .. })));
            assert!(matches!(catalog(name, Some(Q::zero())), Err(Error::ExcludedParameter { .. })));
            assert!(catalog(name, Some(Q::from_i64(3))).is_ok());
        }
        assert!(matches!(catalog("A9", None), Ok(_)));
        assert!(matches!(catalog("B1", None), Err(Error::UnknownAlgebra(_))));
    }
}
