//! Quivers, path words and presentations by relations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    /// Index into [`Quiver::vertices`].
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    /// External vertex ids, in order.
    pub vertices: Vec<i64>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<i64>) -> Self {
        Quiver { vertices, arrows: Vec::new() }
    }

    /// Adds an arrow between external vertex ids.
    pub fn arrow(mut self, name: &str, src: i64, tgt: i64) -> Self {
        let s = self.index_of(src).unwrap_or_else(|| panic!("vertex {src} not declared"));
        let t = self.index_of(tgt).unwrap_or_else(|| panic!("vertex {tgt} not declared"));
        self.arrows.push(Arrow { name: name.to_string(), src: s, tgt: t });
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, id: i64) -> Option<usize> {
        self.vertices.iter().position(|&v| v == id)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.src >= self.vertices.len() || a.tgt >= self.vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow {} has an undeclared endpoint", a.name)));
            }
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {}", a.name)));
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self.arrows.iter().map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src }).collect(),
        }
    }

    /// Number of arrows from `i` to `j` (internal indices).
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.src == i && a.tgt == j).count()
    }
}

/// A path; consecutive arrows compose left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathWord {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(v: usize) -> Self {
        PathWord { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Builds a word from arrow indices, checking composability.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidRelation("empty word needs an explicit start".into()));
        };
        for w in arrows.windows(2) {
            let (a, b) = (&q.arrows[w[0]], &q.arrows[w[1]]);
            if a.tgt != b.src {
                return Err(Error::InvalidRelation(format!("{} then {} does not compose", a.name, b.name)));
            }
        }
        Ok(PathWord { start: q.arrows[first].src, arrows })
    }

    pub fn source(&self) -> usize {
        self.start
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].tgt)
    }

    pub fn reversed(&self, q: &Quiver) -> PathWord {
        PathWord { start: self.target(q), arrows: self.arrows.iter().rev().copied().collect() }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", q.vertices[self.start]);
        }
        let names: Vec<&str> = self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect();
        names.join("*")
    }
}

/// A scalar in a relation: a rational times a power of the parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coef {
    /// Coefficient of `lambda^k` at index `k`.
    pub poly: Vec<Q>,
}

impl Coef {
    pub fn constant(q: Q) -> Self {
        Coef { poly: vec![q] }
    }

    pub fn lambda() -> Self {
        Coef { poly: vec![Q::zero(), Q::one()] }
    }

    pub fn is_constant(&self) -> bool {
        self.poly.iter().skip(1).all(Field::is_zero)
    }

    pub fn mul(&self, rhs: &Coef) -> Coef {
        let mut out = vec![Q::zero(); self.poly.len() + rhs.poly.len() - 1];
        for (i, a) in self.poly.iter().enumerate() {
            for (j, b) in rhs.poly.iter().enumerate() {
                out[i + j].add_assign(&a.mul(b));
            }
        }
        Coef { poly: out }.trimmed()
    }

    pub fn add(&self, rhs: &Coef) -> Coef {
        let n = self.poly.len().max(rhs.poly.len());
        let out = (0..n)
            .map(|i| {
                let a = self.poly.get(i).cloned().unwrap_or_else(Q::zero);
                let b = rhs.poly.get(i).cloned().unwrap_or_else(Q::zero);
                a.add(&b)
            })
            .collect();
        Coef { poly: out }.trimmed()
    }

    pub fn neg(&self) -> Coef {
        Coef { poly: self.poly.iter().map(Field::neg).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.iter().all(Field::is_zero)
    }

    fn trimmed(mut self) -> Coef {
        while self.poly.len() > 1 && self.poly.last().is_some_and(Field::is_zero) {
            self.poly.pop();
        }
        self
    }

    pub fn eval(&self, lambda: Option<&Q>) -> Result<Q> {
        if self.is_constant() {
            return Ok(self.poly[0].clone());
        }
        let l = lambda.ok_or_else(|| Error::UnboundParameter("lambda".into()))?;
        let mut acc = Q::zero();
        for c in self.poly.iter().rev() {
            acc = acc.mul(l).add(c);
        }
        Ok(acc)
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => c.to_string(),
                1 if c.is_one() => "lambda".to_string(),
                1 => format!("{c}*lambda"),
                _ if c.is_one() => format!("lambda^{k}"),
                _ => format!("{c}*lambda^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A relation: linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub terms: BTreeMap<PathWord, Coef>,
    pub src: usize,
    pub tgt: usize,
}

impl Relation {
    /// Builds a relation from `(coefficient, word)` terms, merging duplicates.
    pub fn new(q: &Quiver, terms: Vec<(Coef, PathWord)>) -> Result<Self> {
        let mut map: BTreeMap<PathWord, Coef> = BTreeMap::new();
        let mut ends = None;
        for (c, w) in terms {
            let e = (w.source(), w.target(q));
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::InvalidRelation(format!(
                        "non-parallel paths {} and another term",
                        w.display(q)
                    )))
                }
                _ => {}
            }
            let entry = map.entry(w).or_insert_with(|| Coef::constant(Q::zero()));
            *entry = entry.add(&c);
        }
        map.retain(|_, c| !c.is_zero());
        let (src, tgt) = ends.ok_or_else(|| Error::InvalidRelation("empty relation".into()))?;
        if map.is_empty() {
            return Err(Error::InvalidRelation("relation cancels to zero".into()));
        }
        Ok(Relation { terms: map, src, tgt })
    }

    pub fn min_len(&self) -> usize {
        self.terms.keys().map(PathWord::len).min().unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(PathWord::len).max().unwrap_or(0)
    }

    pub fn uses_lambda(&self) -> bool {
        self.terms.values().any(|c| !c.is_constant())
    }

    /// Renders as `a*b - 2*lambda*c*d`; parseable by the file reader.
    pub fn display(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (w, c) in &self.terms {
            for (k, m) in c.poly.iter().enumerate() {
                if m.is_zero() {
                    continue;
                }
                let neg = m.signum() < 0;
                if s.is_empty() {
                    if neg {
                        s.push('-');
                    }
                } else {
                    s.push_str(if neg { " - " } else { " + " });
                }
                let mag = if neg { m.neg() } else { m.clone() };
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                    s.push('*');
                }
                for _ in 0..k {
                    s.push_str("lambda*");
                }
                s.push_str(&w.display(q));
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "rationals"),
            FieldKind::Prime(p) => write!(f, "gf({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub lambda: Option<Q>,
    /// λ must avoid 0 and 1.
    pub lambda_generic: bool,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { kind: FieldKind::Rationals, lambda: None, lambda_generic: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Presentation {
    pub name: Option<String>,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub field: FieldSpec,
}

impl Presentation {
    pub fn new(name: &str, quiver: Quiver) -> Self {
        Presentation { name: Some(name.to_string()), quiver, relations: Vec::new(), field: FieldSpec::default() }
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn uses_lambda(&self) -> bool {
        self.relations.iter().any(Relation::uses_lambda)
    }

    pub fn with_lambda(mut self, lambda: Q) -> Self {
        self.field.lambda = Some(lambda);
        self
    }

    /// Checks quiver sanity, admissibility of relation words and λ.
    pub fn validate(&self) -> Result<()> {
        self.quiver.validate()?;
        for r in &self.relations {
            for w in r.terms.keys() {
                if w.len() < 2 {
                    return Err(Error::InvalidRelation(format!(
                        "{} has a term of length {} (relations must lie in the square of the arrow ideal)",
                        r.display(&self.quiver),
                        w.len()
                    )));
                }
            }
        }
        self.check_lambda()
    }

    pub fn check_lambda(&self) -> Result<()> {
        if !self.uses_lambda() {
            return Ok(());
        }
        let l = self.field.lambda.as_ref().ok_or_else(|| Error::UnboundParameter("lambda".into()))?;
        if self.field.lambda_generic && (l.is_zero() || l.is_one()) {
            return Err(Error::ExcludedParameter { name: "lambda".into(), value: l.to_string() });
        }
        if let FieldKind::Prime(p) = self.field.kind {
            let pb = num_bigint::BigInt::from(p);
            let zero = num_bigint::BigInt::from(0);
            if &l.denom() % &pb == zero {
                return Err(Error::Field(format!("lambda = {l} has no image in gf({p})")));
            }
            if self.field.lambda_generic {
                let n = &l.numer() % &pb;
                let d = &l.denom() % &pb;
                if n == zero || ((&n - &d) % &pb) == zero {
                    return Err(Error::ExcludedParameter { name: "lambda".into(), value: format!("{l} mod {p}") });
                }
            }
        }
        Ok(())
    }

    /// Relation coefficients with λ substituted.
    pub fn evaluated_relations(&self) -> Result<Vec<Vec<(Q, PathWord)>>> {
        self.relations
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(w, c)| Ok((c.eval(self.field.lambda.as_ref())?, w.clone())))
                    .collect::<Result<Vec<_>>>()
                    .map(|mut v| {
                        v.retain(|(c, _)| !c.is_zero());
                        v
                    })
            })
            .collect()
    }

    pub fn opposite(&self) -> Presentation {
        let quiver = self.quiver.opposite();
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r.terms.iter().map(|(w, c)| (w.reversed(&self.quiver), c.clone())).collect(),
                src: r.tgt,
                tgt: r.src,
            })
            .collect();
        Presentation {
            name: self.name.as_ref().map(|n| format!("{n}-op")),
            quiver,
            relations,
            field: self.field.clone(),
        }
    }
}

/// Parses a word of arrow names such as `"a b c"` or `"a*b*c"` against `q`.
pub fn word(q: &Quiver, s: &str) -> Result<PathWord> {
    let idx = s
        .split(|c: char| c == '*' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| q.arrow_index(t).ok_or_else(|| Error::InvalidRelation(format!("unknown arrow `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    PathWord::from_arrows(q, idx)
}
