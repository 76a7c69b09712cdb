//! The little expression language used on the command line: object
//! literals `P(2)`, `I(3)`, `Simp(1)`, `S+`, `S-`; complex expressions
//! `res(S+)`, `cone(P4 -(a3+b3)-> P3)`, `shift(X, n)`, `twist(S+, k, X)`,
//! `Lmut(E, F)`, `Rmut(E, F)`, and direct sums `X (+) Y`. Path sums such as
//! `a1*a2 - b1*b2` follow the same syntax as the JSON differential entries.

use std::collections::BTreeMap;

use crate::algebra::{AlgElem, Path, PathAlgebra, PathKind};
use crate::complex::{cone, from_module, ChainMap, PathMat, ProjComplex};
use crate::functors::{left_mutation, right_mutation, twist_iter};
use crate::json::parse_rat;
use crate::rep::{fixture_s_minus, fixture_s_plus, injective, projective, simple, Rep};
use crate::{Error, Rat, Result};
use num_traits::One;

/// A parsed object: either a module (which embeds as its resolution) or a
/// complex.
#[derive(Clone, Debug)]
pub enum DslValue {
    Module(Rep),
    Complex(ProjComplex),
}

impl DslValue {
    pub fn into_complex(self) -> ProjComplex {
        match self {
            DslValue::Module(m) => from_module(&m),
            DslValue::Complex(x) => x,
        }
    }

    pub fn into_module(self) -> Result<Rep> {
        match self {
            DslValue::Module(m) => Ok(m),
            DslValue::Complex(_) => Err(Error::Parse(
                "expected a module literal, got a complex expression".into(),
            )),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Ident(String),
    Int(i64),
    SPlus,
    SMinus,
    LParen,
    RParen,
    OPlus, // the direct-sum symbol (+)
    Comma,
    Star,
    Plus,
    Minus,
    Gt,
    Slash,
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word == "S" && i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                out.push(if chars[i] == '+' {
                    Tok::SPlus
                } else {
                    Tok::SMinus
                });
                i += 1;
            } else {
                out.push(Tok::Ident(word));
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            out.push(Tok::Int(
                word.parse()
                    .map_err(|_| Error::Parse(format!("bad integer `{word}`")))?,
            ));
            continue;
        }
        match c {
            '(' => {
                if chars.get(i + 1) == Some(&'+') && chars.get(i + 2) == Some(&')') {
                    out.push(Tok::OPlus);
                    i += 3;
                } else {
                    out.push(Tok::LParen);
                    i += 1;
                }
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '>' => {
                out.push(Tok::Gt);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    algebra: &'a PathAlgebra,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        let got = self.next()?;
        if &got == t {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {t:?}, got {got:?}")))
        }
    }

    fn parse_int(&mut self) -> Result<i64> {
        match self.next()? {
            Tok::Int(n) => Ok(n),
            Tok::Minus => match self.next()? {
                Tok::Int(n) => Ok(-n),
                t => Err(Error::Parse(format!(
                    "expected integer after `-`, got {t:?}"
                ))),
            },
            t => Err(Error::Parse(format!("expected integer, got {t:?}"))),
        }
    }

    fn parse_expr(&mut self) -> Result<DslValue> {
        let mut value = self.parse_term()?;
        while self.peek() == Some(&Tok::OPlus) {
            self.next()?;
            let rhs = self.parse_term()?;
            value = DslValue::Complex(value.into_complex().direct_sum(&rhs.into_complex()));
        }
        Ok(value)
    }

    fn parse_term(&mut self) -> Result<DslValue> {
        match self.next()? {
            Tok::SPlus => Ok(DslValue::Module(fixture_s_plus(self.algebra)?)),
            Tok::SMinus => Ok(DslValue::Module(fixture_s_minus(self.algebra)?)),
            Tok::LParen => {
                let v = self.parse_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(v)
            }
            Tok::Ident(word) => self.parse_call(&word),
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }

    fn parse_call(&mut self, word: &str) -> Result<DslValue> {
        // compact forms P4, I2
        if let Some(rest) = word.strip_prefix('P') {
            if !rest.is_empty() {
                let i: usize = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad literal `{word}`")))?;
                return Ok(DslValue::Module(projective(self.algebra, i)?));
            }
        }
        if let Some(rest) = word.strip_prefix('I') {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                let i: usize = rest.parse().unwrap();
                return Ok(DslValue::Module(injective(self.algebra, i)?));
            }
        }
        match word {
            "P" | "I" | "Simp" => {
                self.expect(&Tok::LParen)?;
                let i = self.parse_int()?;
                self.expect(&Tok::RParen)?;
                if i < 1 {
                    return Err(Error::VertexOutOfRange {
                        vertex: 0,
                        mu: self.algebra.mu(),
                    });
                }
                let m = match word {
                    "P" => projective(self.algebra, i as usize)?,
                    "I" => injective(self.algebra, i as usize)?,
                    _ => simple(self.algebra, i as usize)?,
                };
                Ok(DslValue::Module(m))
            }
            "res" => {
                self.expect(&Tok::LParen)?;
                let inner = self.parse_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(DslValue::Complex(from_module(&inner.into_module()?)))
            }
            "shift" => {
                self.expect(&Tok::LParen)?;
                let x = self.parse_expr()?;
                self.expect(&Tok::Comma)?;
                let n = self.parse_int()?;
                self.expect(&Tok::RParen)?;
                Ok(DslValue::Complex(x.into_complex().shift(n)))
            }
            "twist" => {
                self.expect(&Tok::LParen)?;
                let s = self.parse_expr()?;
                self.expect(&Tok::Comma)?;
                let k = self.parse_int()?;
                self.expect(&Tok::Comma)?;
                let x = self.parse_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(DslValue::Complex(twist_iter(
                    &s.into_complex(),
                    k,
                    &x.into_complex(),
                )))
            }
            "Lmut" => {
                self.expect(&Tok::LParen)?;
                let e = self.parse_expr()?;
                self.expect(&Tok::Comma)?;
                let f = self.parse_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(DslValue::Complex(left_mutation(
                    &e.into_complex(),
                    &f.into_complex(),
                )))
            }
            "Rmut" => {
                self.expect(&Tok::LParen)?;
                let e = self.parse_expr()?;
                self.expect(&Tok::Comma)?;
                let f = self.parse_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(DslValue::Complex(right_mutation(
                    &e.into_complex(),
                    &f.into_complex(),
                )))
            }
            "cone" => self.parse_cone(),
            other => Err(Error::Parse(format!("unknown name `{other}`"))),
        }
    }

    /// `cone(X -(f)-> Y)` where `X`, `Y` are single projectives in degree 0
    /// and `f` is a path sum between them.
    fn parse_cone(&mut self) -> Result<DslValue> {
        self.expect(&Tok::LParen)?;
        let x = self.parse_expr()?.into_complex();
        self.expect(&Tok::Minus)?;
        self.expect(&Tok::LParen)?;
        let f = self.parse_alg_elem()?;
        self.expect(&Tok::RParen)?;
        self.expect(&Tok::Minus)?;
        self.expect(&Tok::Gt)?;
        let y = self.parse_expr()?.into_complex();
        self.expect(&Tok::RParen)?;

        let single = |z: &ProjComplex| -> Result<(i64, usize)> {
            let degs = z.degrees();
            if degs.len() == 1 && z.term(degs[0]).len() == 1 {
                Ok((degs[0], z.term(degs[0])[0]))
            } else {
                Err(Error::Parse(
                    "cone maps in the DSL connect single projective summands".into(),
                ))
            }
        };
        let (dx, a) = single(&x)?;
        let (dy, b) = single(&y)?;
        if dx != dy {
            return Err(Error::Parse(
                "cone endpoints must sit in the same degree".into(),
            ));
        }
        if !f.is_zero() && f.endpoints() != Some((b, a)) {
            return Err(Error::Parse(format!(
                "map must be a sum of paths {b} -> {a} to connect P({a}) to P({b})"
            )));
        }
        let mut m = PathMat::zero(1, 1);
        m.set(0, 0, f);
        let mut mats = BTreeMap::new();
        mats.insert(dx, m);
        let map = ChainMap::new(x, y, mats)?;
        Ok(DslValue::Complex(cone(&map)))
    }

    fn parse_alg_elem(&mut self) -> Result<AlgElem> {
        let mut total = AlgElem::zero();
        let mut sign = Rat::one();
        if self.peek() == Some(&Tok::Minus) {
            self.next()?;
            sign = -sign;
        }
        loop {
            let term = self.parse_alg_term()?;
            total = total.add(&term.scale(&sign));
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next()?;
                    sign = Rat::one();
                }
                Some(Tok::Minus) => {
                    self.next()?;
                    sign = -Rat::one();
                }
                _ => break,
            }
        }
        Ok(total)
    }

    fn parse_alg_term(&mut self) -> Result<AlgElem> {
        let mut coef = Rat::one();
        if let Some(Tok::Int(_)) = self.peek() {
            let Tok::Int(n) = self.next()? else {
                unreachable!()
            };
            let mut num = n.to_string();
            if self.peek() == Some(&Tok::Slash) {
                self.next()?;
                let Tok::Int(d) = self.next()? else {
                    return Err(Error::Parse("expected denominator".into()));
                };
                num = format!("{num}/{d}");
            }
            coef = parse_rat(&num)?;
            if self.peek() == Some(&Tok::Star) {
                self.next()?;
            } else {
                // a bare scalar is only meaningful as zero
                if coef == Rat::from_integer(0.into()) {
                    return Ok(AlgElem::zero());
                }
                return Err(Error::Parse(
                    "a bare scalar needs a path; write e.g. `3*e2`".into(),
                ));
            }
        }
        let path = self.parse_path_word()?;
        Ok(match path {
            Some(p) => AlgElem::term(p, coef),
            None => AlgElem::zero(),
        })
    }

    /// A product of path atoms; `None` when the product is zero in the
    /// algebra (relation hit or endpoints that do not compose).
    fn parse_path_word(&mut self) -> Result<Option<Path>> {
        let mut acc = Some(self.parse_path_atom()?);
        while self.peek() == Some(&Tok::Star) {
            self.next()?;
            let q = self.parse_path_atom()?;
            acc = acc.and_then(|p| p.compose(&q));
        }
        Ok(acc)
    }

    fn parse_path_atom(&mut self) -> Result<Path> {
        match self.next()? {
            Tok::Ident(w) => {
                let (head, digits) = w.split_at(1);
                let idx: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad path atom `{w}`")))?;
                let mu = self.algebra.mu();
                match head {
                    "e" => {
                        self.algebra.check_vertex(idx)?;
                        Ok(Path::trivial(idx))
                    }
                    "a" | "b" => {
                        if idx < 1 || idx >= mu {
                            return Err(Error::VertexOutOfRange { vertex: idx, mu });
                        }
                        let kind = if head == "a" {
                            PathKind::Alpha
                        } else {
                            PathKind::Beta
                        };
                        Ok(Path::arrow(kind, idx))
                    }
                    _ => Err(Error::Parse(format!("bad path atom `{w}`"))),
                }
            }
            t => Err(Error::Parse(format!("expected a path atom, got {t:?}"))),
        }
    }
}

/// Parses and evaluates an object expression over the given algebra.
pub fn parse_object(text: &str, algebra: &PathAlgebra) -> Result<DslValue> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        algebra,
    };
    let v = p.parse_expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input after expression in `{text}`"
        )));
    }
    Ok(v)
}

/// Parses a collection literal: `EP` (the standard collection),
/// `Eprime(k)` (the twisted collections, mu >= 4), or an explicit tuple
/// `(X1, X2, ..., Xmu)` of object expressions.
pub fn parse_collection(
    text: &str,
    algebra: &PathAlgebra,
) -> Result<crate::braid::ExcCollection> {
    let trimmed = text.trim();
    if trimmed == "EP" {
        return Ok(crate::braid::standard_collection(algebra));
    }
    if let Some(rest) = trimmed.strip_prefix("Eprime(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{text}`")))?;
        let k: i64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad twist power `{inner}`")))?;
        return crate::braid::twisted_collection(algebra, k);
    }
    let mut p = Parser { toks: lex(trimmed)?, pos: 0, algebra };
    p.expect(&Tok::LParen)?;
    let mut objects = vec![p.parse_expr()?.into_complex()];
    while p.peek() == Some(&Tok::Comma) {
        p.next()?;
        objects.push(p.parse_expr()?.into_complex());
    }
    p.expect(&Tok::RParen)?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input after collection in `{text}`")));
    }
    if objects.len() != algebra.mu() {
        return Err(Error::Parse(format!(
            "collection has {} objects, expected mu = {}",
            objects.len(),
            algebra.mu()
        )));
    }
    Ok(crate::braid::ExcCollection::from_objects(
        algebra.mu(),
        objects,
        trimmed.to_string(),
    ))
}

/// Parses a rational path sum such as `a1*a2 - b1*b2` or `2*e3`.
pub fn parse_alg_elem(text: &str, algebra: &PathAlgebra) -> Result<AlgElem> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        algebra,
    };
    let e = p.parse_alg_elem()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input after path sum in `{text}`"
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::complex::{is_derived_iso, rhom_dims, GradedDims};
    use crate::functors::one_spherical;

    #[test]
    fn object_literals() {
        let alg = build_algebra(4).unwrap();
        let p2 = parse_object("P(2)", &alg).unwrap().into_module().unwrap();
        assert_eq!(p2.dim_vector(), &[0, 1, 2, 2]);
        let p2b = parse_object("P2", &alg).unwrap().into_module().unwrap();
        assert_eq!(p2, p2b);
        let sp = parse_object("S+", &alg).unwrap().into_module().unwrap();
        assert_eq!(sp.dim_vector(), &[1, 1, 1, 1]);
        assert!(parse_object("P(9)", &alg).is_err());
        assert!(parse_object("Q(1)", &alg).is_err());
    }

    #[test]
    fn res_and_rhom() {
        let alg = build_algebra(4).unwrap();
        let r = parse_object("res(S+)", &alg).unwrap().into_complex();
        let p2 = parse_object("P(2)", &alg).unwrap().into_complex();
        assert_eq!(rhom_dims(&r, &p2), GradedDims::from_pairs(&[(3, 1)]));
    }

    #[test]
    fn cone_expression_builds_the_spherical_object() {
        let alg = build_algebra(4).unwrap();
        let c = parse_object("cone(P4 -(a3+b3)-> P3)", &alg)
            .unwrap()
            .into_complex();
        assert!(is_derived_iso(&c, &one_spherical(4, 1), 3));
        // map with wrong endpoints is rejected
        assert!(parse_object("cone(P4 -(a2)-> P3)", &alg).is_err());
        // zero map is allowed
        let z = parse_object("cone(P4 -(0)-> P3)", &alg)
            .unwrap()
            .into_complex();
        assert_eq!(z.summand_count(), 2);
    }

    #[test]
    fn sums_shifts_twists() {
        let alg = build_algebra(4).unwrap();
        let x = parse_object("shift(P1, 2) (+) P3", &alg)
            .unwrap()
            .into_complex();
        assert_eq!(x.term(-2), &[1]);
        assert_eq!(x.term(0), &[3]);
        let t = parse_object("twist(cone(P4 -(a3+b3)-> P3), 1, P(4))", &alg)
            .unwrap()
            .into_complex();
        assert!(is_derived_iso(&t, &ProjComplex::single(4, 3, 0), 5));
        let l = parse_object("Lmut(P1, P3)", &alg).unwrap().into_complex();
        assert!(is_derived_iso(
            &l,
            &ProjComplex::single(4, 3, 0).shift(-1),
            5
        ));
    }

    #[test]
    fn collection_literals() {
        let alg5 = build_algebra(5).unwrap();
        let ep = parse_collection("EP", &alg5).unwrap();
        assert!(ep.is_strong());
        let e1 = parse_collection("Eprime(1)", &alg5).unwrap();
        assert!(e1.is_exceptional());
        assert!(!e1.is_strong());
        let tuple = parse_collection("(P(5), P(4), P(3), P(2), P(1))", &alg5).unwrap();
        assert!(tuple.isomorphic_to(&ep, 3));
        assert!(parse_collection("(P(1), P(2))", &alg5).is_err());
        assert!(parse_collection("Eprime(x)", &alg5).is_err());
        let alg3 = build_algebra(3).unwrap();
        assert!(parse_collection("Eprime(1)", &alg3).is_err());
    }

    #[test]
    fn path_sums() {
        let alg = build_algebra(4).unwrap();
        let e = parse_alg_elem("a1*a2 - b1*b2", &alg).unwrap();
        assert_eq!(e.to_string(), "a1*a2 - b1*b2");
        // relations kill mixed words
        assert!(parse_alg_elem("a1*b2", &alg).unwrap().is_zero());
        let f = parse_alg_elem("1/2*a3 + 3*b3", &alg).unwrap();
        assert_eq!(f.to_string(), "1/2*a3 + 3*b3");
        assert!(parse_alg_elem("5", &alg).is_err());
        assert!(parse_alg_elem("0", &alg).unwrap().is_zero());
        assert!(parse_alg_elem("a9", &alg).is_err());
    }
}
