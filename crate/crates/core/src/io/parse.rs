//! Reader for algebra presentation files.
//!
//! ```text
//! name = A5
//! field = rationals
//! vertices = [1, 2]
//! arrows:
//!   alpha: 1 -> 1
//!   gamma: 1 -> 2
//!   beta: 2 -> 1
//! relations:
//!   alpha*alpha - gamma*beta
//!   beta*alpha*gamma = 0
//! params:
//!   lambda = 2
//! ```
//!
//! A term is a product of factors: rationals, `lambda`, arrow names and
//! parenthesised products, each optionally raised to a power `^k`. `lhs = rhs`
//! stands for `lhs - rhs`. `#` starts a comment.

use crate::algebra::presentation::{Coef, FieldKind, FieldSpec, PathWord, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::{Field, Q};

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push((Tok::Num(chars[st..i].iter().collect()), col));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((Tok::Ident(chars[st..i].iter().collect()), col));
        } else if "+-*()^=".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    quiver: &'a Quiver,
}

/// A monomial: scalar coefficient and arrow sequence.
type Mono = (Coef, Vec<usize>);

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn sum(&mut self) -> Result<Vec<Mono>> {
        let mut terms = Vec::new();
        let mut sign = 1;
        if self.peek() == Some(&Tok::Sym('-')) {
            sign = -1;
            self.pos += 1;
        } else if self.peek() == Some(&Tok::Sym('+')) {
            self.pos += 1;
        }
        loop {
            let (c, w) = self.product()?;
            let c = if sign < 0 { c.neg() } else { c };
            terms.push((c, w));
            match self.peek() {
                Some(Tok::Sym('+')) => {
                    sign = 1;
                    self.pos += 1;
                }
                Some(Tok::Sym('-')) => {
                    sign = -1;
                    self.pos += 1;
                }
                _ => return Ok(terms),
            }
        }
    }

    fn product(&mut self) -> Result<Mono> {
        let mut acc: Mono = (Coef::constant(Q::one()), Vec::new());
        loop {
            let f = self.power()?;
            acc.0 = acc.0.mul(&f.0);
            acc.1.extend(f.1);
            if self.peek() == Some(&Tok::Sym('*')) {
                self.pos += 1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Mono> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Sym('^')) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        let k: usize = match self.peek() {
            Some(Tok::Num(n)) if !n.contains('/') => n.parse().map_err(|_| err(self.line, col, "bad exponent"))?,
            _ => return Err(err(self.line, col, "expected an integer exponent")),
        };
        self.pos += 1;
        let mut out: Mono = (Coef::constant(Q::one()), Vec::new());
        for _ in 0..k {
            out.0 = out.0.mul(&base.0);
            out.1.extend(base.1.iter().copied());
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Mono> {
        let col = self.col();
        let Some(tok) = self.peek().cloned() else {
            return Err(err(self.line, col, "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => {
                let q: Q = n.parse().map_err(|_| err(self.line, col, format!("bad number `{n}`")))?;
                Ok((Coef::constant(q), Vec::new()))
            }
            Tok::Ident(id) if id == "lambda" => Ok((Coef::lambda(), Vec::new())),
            Tok::Ident(id) => {
                let a = self
                    .quiver
                    .arrow_index(&id)
                    .ok_or_else(|| err(self.line, col, format!("unknown arrow `{id}`")))?;
                Ok((Coef::constant(Q::one()), vec![a]))
            }
            Tok::Sym('(') => {
                let inner = self.product()?;
                if self.peek() != Some(&Tok::Sym(')')) {
                    return Err(err(self.line, self.col(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Sym(c) => Err(err(self.line, col, format!("unexpected `{c}`"))),
        }
    }
}

fn parse_relation(q: &Quiver, text: &str, line: usize, col0: usize) -> Result<Relation> {
    let toks = tokenize(text, line, col0)?;
    let end_col = col0 + text.chars().count();
    let mut p = ExprParser { toks, pos: 0, line, end_col, quiver: q };
    let mut terms = p.sum()?;
    if p.peek() == Some(&Tok::Sym('=')) {
        p.pos += 1;
        let rhs = p.sum()?;
        terms.extend(rhs.into_iter().map(|(c, w)| (c.neg(), w)));
    }
    if p.pos != p.toks.len() {
        return Err(err(line, p.col(), "trailing input"));
    }
    let mut out = Vec::new();
    for (c, w) in terms {
        if c.is_zero() && w.is_empty() {
            continue;
        }
        if w.is_empty() {
            return Err(err(line, col0, "a term has no path"));
        }
        let pw = PathWord::from_arrows(q, w).map_err(|e| err(line, col0, e.to_string()))?;
        out.push((c, pw));
    }
    if out.is_empty() {
        return Err(err(line, col0, "empty relation"));
    }
    Relation::new(q, out).map_err(|e| err(line, col0, e.to_string()))
}

#[derive(PartialEq)]
enum Section {
    Top,
    Arrows,
    Relations,
    Params,
}

/// Parses an algebra file into a presentation.
pub fn parse_algebra_file(text: &str) -> Result<Presentation> {
    let mut name = None;
    let mut field = FieldSpec::default();
    let mut quiver: Option<Quiver> = None;
    let mut rel_lines: Vec<(usize, usize, String)> = Vec::new();
    let mut section = Section::Top;

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = content.len() - content.trim_start().len() + 1;
        match trimmed {
            "arrows:" => {
                if quiver.is_none() {
                    return Err(err(line, col, "`vertices` must precede `arrows`"));
                }
                section = Section::Arrows;
                continue;
            }
            "relations:" => {
                section = Section::Relations;
                continue;
            }
            "params:" => {
                section = Section::Params;
                continue;
            }
            _ => {}
        }
        if let Some((key, value)) = trimmed.split_once('=') {
            let key = key.trim();
            if section != Section::Relations || ["name", "field", "vertices"].contains(&key) {
                let vcol = col + trimmed.find('=').unwrap_or(0) + 1 + (value.len() - value.trim_start().len());
                let value = value.trim();
                match key {
                    "name" => {
                        name = Some(value.to_string());
                        section = Section::Top;
                        continue;
                    }
                    "field" => {
                        field.kind = parse_field(value).ok_or_else(|| err(line, vcol, format!("unknown field `{value}`")))?;
                        section = Section::Top;
                        continue;
                    }
                    "vertices" => {
                        quiver = Some(Quiver::new(parse_vertex_list(value, line, vcol)?));
                        section = Section::Top;
                        continue;
                    }
                    "lambda" if section == Section::Params => {
                        let q: Q = value.parse().map_err(|_| err(line, vcol, format!("bad value `{value}`")))?;
                        field.lambda = Some(q);
                        continue;
                    }
                    "generic" if section == Section::Params => {
                        if value != "lambda" {
                            return Err(err(line, vcol, "only `lambda` can be generic"));
                        }
                        field.lambda_generic = true;
                        continue;
                    }
                    _ if section != Section::Relations => {
                        return Err(err(line, col, format!("unknown key `{key}`")));
                    }
                    _ => {}
                }
            }
        }
        match section {
            Section::Arrows => {
                let q = quiver.as_mut().expect("checked above");
                let (an, rest) =
                    trimmed.split_once(':').ok_or_else(|| err(line, col, "expected `name: src -> tgt`"))?;
                let an = an.trim();
                if an.is_empty() || !an.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'') {
                    return Err(err(line, col, format!("bad arrow name `{an}`")));
                }
                if an == "lambda" {
                    return Err(err(line, col, "`lambda` is reserved"));
                }
                let (s, t) = rest.split_once("->").ok_or_else(|| err(line, col, "expected `->`"))?;
                let rcol = col + trimmed.find(':').unwrap_or(0) + 1;
                let s: i64 = s.trim().parse().map_err(|_| err(line, rcol, "bad source vertex"))?;
                let t: i64 = t.trim().parse().map_err(|_| err(line, rcol, "bad target vertex"))?;
                let si = q.index_of(s).ok_or_else(|| err(line, rcol, format!("vertex {s} not declared")))?;
                let ti = q.index_of(t).ok_or_else(|| err(line, rcol, format!("vertex {t} not declared")))?;
                if q.arrow_index(an).is_some() {
                    return Err(err(line, col, format!("duplicate arrow `{an}`")));
                }
                q.arrows.push(crate::algebra::presentation::Arrow { name: an.to_string(), src: si, tgt: ti });
            }
            Section::Relations => rel_lines.push((line, col, trimmed.to_string())),
            Section::Params => return Err(err(line, col, format!("unknown parameter line `{trimmed}`"))),
            Section::Top => return Err(err(line, col, format!("unexpected line `{trimmed}`"))),
        }
    }
    let quiver = quiver.ok_or_else(|| err(1, 1, "missing `vertices`"))?;
    let mut relations = Vec::new();
    for (line, col, text) in rel_lines {
        let r = parse_relation(&quiver, &text, line, col)?;
        if let Some(w) = r.terms.keys().find(|w| w.len() < 2) {
            return Err(err(line, col, format!("term {} has length below 2", w.display(&quiver))));
        }
        relations.push(r);
    }
    Ok(Presentation { name, quiver, relations, field })
}

fn parse_field(s: &str) -> Option<FieldKind> {
    let s = s.trim();
    if s == "rationals" || s == "Q" {
        return Some(FieldKind::Rationals);
    }
    let inner = s.strip_prefix("gf(")?.strip_suffix(')')?;
    let p: u64 = inner.trim().parse().ok()?;
    let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
    prime.then_some(FieldKind::Prime(p))
}

pub fn parse_field_kind(s: &str) -> Result<FieldKind> {
    parse_field(s).ok_or_else(|| err(0, 0, format!("unknown field `{s}`")))
}

fn parse_vertex_list(s: &str, line: usize, col: usize) -> Result<Vec<i64>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| err(line, col, "expected `[v1, v2, ...]`"))?;
    let mut out = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: i64 = part.parse().map_err(|_| err(line, col, format!("bad vertex `{part}`")))?;
        if out.contains(&v) {
            return Err(err(line, col, format!("duplicate vertex {v}")));
        }
        out.push(v);
    }
    if out.is_empty() {
        return Err(err(line, col, "no vertices"));
    }
    Ok(out)
}

/// Evaluates a scalar literal such as `3/2` for command-line overrides.
pub fn parse_scalar(s: &str) -> Result<Q> {
    s.parse::<Q>()
}

#[cfg(test)]
mod tests {
    use super::*;

    const A5: &str = "
        name = A5
        vertices = [1, 2]
        arrows:
          alpha: 1->1
          gamma: 1->2
          beta: 2->1
        relations:
          alpha*alpha - gamma*beta
          beta*alpha*gamma
    ";

    #[test]
    fn parses_small_file() {
        let p = parse_algebra_file(A5).unwrap();
        assert_eq!(p.num_vertices(), 2);
        assert_eq!(p.quiver.arrows.len(), 3);
        assert_eq!(p.relations.len(), 2);
    }

    #[test]
    fn undeclared_vertex() {
        let e = parse_algebra_file("vertices = [1, 2]\narrows:\n  x: 1->3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
    }

    #[test]
    fn non_parallel() {
        let text = "vertices = [1, 2]\narrows:\n  alpha: 1->1\n  gamma: 1->2\nrelations:\n  alpha*alpha + gamma*alpha\n";
        let e = parse_algebra_file(text).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 6, .. }), "{e}");
    }

    #[test]
    fn powers_and_lambda() {
        let text = "vertices = [1]\narrows:\n  a: 1->1\nrelations:\n  (a*a)^2 = 3/2*lambda*a^3\nparams:\n  lambda = 5\n";
        let p = parse_algebra_file(text).unwrap();
        let r = &p.relations[0];
        assert_eq!(r.max_len(), 4);
        assert_eq!(r.min_len(), 3);
        assert!(r.uses_lambda());
        assert_eq!(p.field.lambda, Some(Q::from_i64(5)));
    }

    #[test]
    fn unknown_arrow_column() {
        let e = parse_algebra_file("vertices = [1]\narrows:\n  a: 1->1\nrelations:\n  a*b\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 5, col: 5, msg: "unknown arrow `b`".into() });
    }
}
