//! Text syntax for quadratic polynomials, domain elements and points.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' nat)?
//! base   := var | literal | '(' expr ')'
//! ```
//!
//! Variables are `x1 … xd`, with the aliases `x y z w` when `d <= 4`.
//! Literals are decimal integers plus the domain's generator (`i` in `Z[i]`,
//! `t` in `F_p[t]`); a number directly followed by a name multiplies, so `3i`
//! and `2t` are accepted. Whitespace is insignificant.
//!
//! Input is fully expanded before the degree is checked, so `(x+y)^2 - x^2`
//! is a valid quadratic polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::domain::NormedDomain;
use crate::error::Result;
use crate::fraction::FractionPoint;
use crate::quadratic::QuadraticPolynomial;

/// Highest total degree an intermediate expansion may reach.
const MAX_INTERMEDIATE_DEGREE: u32 = 32;

const ALIASES: [&str; 4] = ["x", "y", "z", "w"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    UnexpectedEnd {
        expected: &'static str,
    },
    UnknownVariable(String),
    ForeignCoefficient {
        symbol: String,
        domain: String,
    },
    DegreeTooHigh(u32),
    ExponentTooLarge,
    EmptyCoordinate,
    MissingDenominator,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            UnexpectedEnd { expected } => write!(f, "expected {expected}, found end of input"),
            UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ForeignCoefficient { symbol, domain } => {
                write!(f, "`{symbol}` is not an element of {domain}")
            }
            DegreeTooHigh(d) => write!(f, "degree {d} exceeds 2"),
            ExponentTooLarge => write!(f, "exponent too large"),
            EmptyCoordinate => write!(f, "empty coordinate"),
            MissingDenominator => write!(f, "expected exactly one `/` before the denominator"),
        }
    }
}

fn err<T>(offset: usize, kind: ParseErrorKind) -> std::result::Result<T, ParseError> {
    Err(ParseError { offset, kind })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Num(n) => n.to_string(),
            Tok::Ident(s) => s.clone(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Caret => "^".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::End => String::new(),
        }
    }
}

fn lex(text: &str) -> std::result::Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_owned())));
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return err(start, ParseErrorKind::UnexpectedChar(ch));
            }
        }
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// A node of the parsed expression, tagged with its byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSyntaxTree<E> {
    pub offset: usize,
    pub node: Node<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node<E> {
    Sum(Vec<FormSyntaxTree<E>>),
    Product(Vec<FormSyntaxTree<E>>),
    Power(Box<FormSyntaxTree<E>>, u32),
    Negation(Box<FormSyntaxTree<E>>),
    Variable(usize),
    Literal(E),
}

struct Parser<'a, D: NormedDomain> {
    d: &'a D,
    dim: usize,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a, D: NormedDomain> Parser<'a, D> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    // `bump` never moves past `End`, so there is nothing to undo for it.
    fn unbump(&mut self, tok: &Tok) {
        if *tok != Tok::End {
            self.pos -= 1;
        }
    }

    fn unexpected<T>(&self, expected: &'static str) -> std::result::Result<T, ParseError> {
        match self.peek() {
            Tok::End => err(self.offset(), ParseErrorKind::UnexpectedEnd { expected }),
            t => err(
                self.offset(),
                ParseErrorKind::UnexpectedToken {
                    found: t.text(),
                    expected,
                },
            ),
        }
    }

    fn expr(&mut self) -> std::result::Result<FormSyntaxTree<D::Elem>, ParseError> {
        let offset = self.offset();
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    let (at, _) = self.bump();
                    let t = self.term()?;
                    terms.push(FormSyntaxTree {
                        offset: at,
                        node: Node::Negation(Box::new(t)),
                    });
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            FormSyntaxTree {
                offset,
                node: Node::Sum(terms),
            }
        })
    }

    fn term(&mut self) -> std::result::Result<FormSyntaxTree<D::Elem>, ParseError> {
        let offset = self.offset();
        let mut factors = vec![self.factor()?];
        while let Tok::Star = self.peek() {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            FormSyntaxTree {
                offset,
                node: Node::Product(factors),
            }
        })
    }

    fn factor(&mut self) -> std::result::Result<FormSyntaxTree<D::Elem>, ParseError> {
        let offset = self.offset();
        if *self.peek() == Tok::Minus {
            self.bump();
            let inner = self.factor()?;
            return Ok(FormSyntaxTree {
                offset,
                node: Node::Negation(Box::new(inner)),
            });
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().1 {
            Tok::Num(n) => {
                let e = u32::try_from(n)
                    .ok()
                    .filter(|&e| e <= MAX_INTERMEDIATE_DEGREE)
                    .ok_or(ParseError {
                        offset: at,
                        kind: ParseErrorKind::ExponentTooLarge,
                    })?;
                Ok(FormSyntaxTree {
                    offset,
                    node: Node::Power(Box::new(base), e),
                })
            }
            tok => {
                self.unbump(&tok);
                self.unexpected("a nonnegative integer exponent")
            }
        }
    }

    fn base(&mut self) -> std::result::Result<FormSyntaxTree<D::Elem>, ParseError> {
        let (offset, tok) = self.bump();
        let node = match tok {
            Tok::Num(n) => {
                let lit = FormSyntaxTree {
                    offset,
                    node: Node::Literal(self.d.from_bigint(&n)),
                };
                // `3i`, `2t^2`, `2x`
                if !matches!(self.peek(), Tok::Ident(_)) {
                    return Ok(lit);
                }
                Node::Product(vec![lit, self.factor()?])
            }
            Tok::Ident(name) => self.name(offset, &name)?,
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.unexpected("`)`");
                }
                self.bump();
                return Ok(inner);
            }
            tok => {
                self.unbump(&tok);
                return self.unexpected("a variable, literal or `(`");
            }
        };
        Ok(FormSyntaxTree { offset, node })
    }

    fn name(&self, offset: usize, name: &str) -> std::result::Result<Node<D::Elem>, ParseError> {
        if let Some((sym, g)) = self.d.generator() {
            if sym == name {
                return Ok(Node::Literal(g));
            }
        }
        if let Some(k) = variable_index(name, self.dim) {
            return Ok(Node::Variable(k));
        }
        if name == "i" || name == "t" {
            return err(
                offset,
                ParseErrorKind::ForeignCoefficient {
                    symbol: name.to_owned(),
                    domain: self.d.descriptor().to_string(),
                },
            );
        }
        err(offset, ParseErrorKind::UnknownVariable(name.to_owned()))
    }
}

/// Zero-based index of a variable name, or `None` when it is not one of the
/// first `dim` variables.
fn variable_index(name: &str, dim: usize) -> Option<usize> {
    if let Some(k) = ALIASES.iter().position(|a| *a == name) {
        return (dim <= ALIASES.len() && k < dim).then_some(k);
    }
    let k: usize = name.strip_prefix('x')?.parse().ok()?;
    (k >= 1 && k <= dim && !name[1..].starts_with('0')).then(|| k - 1)
}

/// Highest variable index mentioned in `text` (1 for constant input).
///
/// Aliases count as `x=1, y=2, z=3, w=4`.
pub fn infer_dimension(text: &str) -> usize {
    let Ok(toks) = lex(text) else { return 1 };
    toks.iter()
        .filter_map(|(_, t)| match t {
            Tok::Ident(name) => ALIASES
                .iter()
                .position(|a| a == name)
                .map(|k| k + 1)
                .or_else(|| name.strip_prefix('x')?.parse().ok()),
            _ => None,
        })
        .max()
        .unwrap_or(1)
        .max(1)
}

type Monomial = Vec<u32>;

struct Expander<'a, D: NormedDomain> {
    d: &'a D,
    dim: usize,
}

impl<D: NormedDomain> Expander<'_, D> {
    fn constant(&self, c: D::Elem) -> BTreeMap<Monomial, D::Elem> {
        let mut m = BTreeMap::new();
        if !self.d.is_zero(&c) {
            m.insert(vec![0; self.dim], c);
        }
        m
    }

    fn add_into(&self, acc: &mut BTreeMap<Monomial, D::Elem>, k: Monomial, c: D::Elem) {
        let sum = match acc.get(&k) {
            Some(old) => self.d.add(old, &c),
            None => c,
        };
        if self.d.is_zero(&sum) {
            acc.remove(&k);
        } else {
            acc.insert(k, sum);
        }
    }

    fn mul(
        &self,
        offset: usize,
        a: &BTreeMap<Monomial, D::Elem>,
        b: &BTreeMap<Monomial, D::Elem>,
    ) -> std::result::Result<BTreeMap<Monomial, D::Elem>, ParseError> {
        let mut out = BTreeMap::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let k: Monomial = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                let deg: u32 = k.iter().sum();
                if deg > MAX_INTERMEDIATE_DEGREE {
                    return err(offset, ParseErrorKind::DegreeTooHigh(deg));
                }
                self.add_into(&mut out, k, self.d.mul(ca, cb));
            }
        }
        Ok(out)
    }

    fn expand(
        &self,
        t: &FormSyntaxTree<D::Elem>,
    ) -> std::result::Result<BTreeMap<Monomial, D::Elem>, ParseError> {
        match &t.node {
            Node::Literal(c) => Ok(self.constant(c.clone())),
            Node::Variable(k) => {
                let mut mono = vec![0; self.dim];
                mono[*k] = 1;
                Ok(BTreeMap::from([(mono, self.d.one())]))
            }
            Node::Negation(inner) => Ok(self
                .expand(inner)?
                .into_iter()
                .map(|(k, c)| (k, self.d.neg(&c)))
                .collect()),
            Node::Sum(terms) => {
                let mut acc = BTreeMap::new();
                for term in terms {
                    for (k, c) in self.expand(term)? {
                        self.add_into(&mut acc, k, c);
                    }
                }
                Ok(acc)
            }
            Node::Product(factors) => {
                let mut acc = self.constant(self.d.one());
                for f in factors {
                    acc = self.mul(f.offset, &acc, &self.expand(f)?)?;
                }
                Ok(acc)
            }
            Node::Power(base, e) => {
                let b = self.expand(base)?;
                let mut acc = self.constant(self.d.one());
                for _ in 0..*e {
                    acc = self.mul(t.offset, &acc, &b)?;
                }
                Ok(acc)
            }
        }
    }
}

fn degree(m: &Monomial) -> u32 {
    m.iter().sum()
}

fn parse_tree<D: NormedDomain>(
    d: &D,
    text: &str,
    dim: usize,
) -> std::result::Result<FormSyntaxTree<D::Elem>, ParseError> {
    let mut p = Parser {
        d,
        dim,
        toks: lex(text)?,
        pos: 0,
    };
    let tree = p.expr()?;
    if *p.peek() != Tok::End {
        return p.unexpected("an operator or end of input");
    }
    Ok(tree)
}

/// Parses `text` as a polynomial of degree at most 2 in `dim` variables.
pub fn parse_form<D: NormedDomain>(
    d: &D,
    text: &str,
    dim: usize,
) -> Result<QuadraticPolynomial<D::Elem>> {
    let mut f = QuadraticPolynomial::zero(d, dim)?;
    let tree = parse_tree(d, text, dim)?;
    let ex = Expander { d, dim };
    let expanded = ex.expand(&tree)?;

    if let Some((k, _)) = expanded.iter().find(|(k, _)| degree(k) > 2) {
        // Blame the leftmost top-level term that contributes a surviving
        // monomial of too high degree.
        let terms = match &tree.node {
            Node::Sum(terms) => terms.as_slice(),
            _ => std::slice::from_ref(&tree),
        };
        let mut offset = tree.offset;
        for term in terms {
            if ex
                .expand(term)?
                .keys()
                .any(|m| degree(m) > 2 && expanded.contains_key(m))
            {
                offset = term.offset;
                break;
            }
        }
        let max = expanded.keys().map(degree).max().unwrap_or(degree(k));
        return Err(ParseError {
            offset,
            kind: ParseErrorKind::DegreeTooHigh(max),
        }
        .into());
    }

    for (mono, c) in expanded {
        let vars: Vec<usize> = mono
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        match vars.as_slice() {
            [] => f.set_constant(c),
            [i] => f.set_lin(*i, c),
            [i, j] => f.set_quad(*i, *j, c),
            _ => unreachable!("degree checked above"),
        }
    }
    Ok(f)
}

/// Parses a single element of `R` written in the polynomial syntax without
/// variables (`-7`, `(1+2i)`, `t^3+t+1`).
pub fn parse_element<D: NormedDomain>(d: &D, text: &str) -> Result<D::Elem> {
    Ok(parse_element_at(d, text, 0)?)
}

fn parse_element_at<D: NormedDomain>(
    d: &D,
    text: &str,
    base: usize,
) -> std::result::Result<D::Elem, ParseError> {
    let shift = |e: ParseError| ParseError {
        offset: e.offset + base,
        kind: e.kind,
    };
    if text.trim().is_empty() {
        return err(base, ParseErrorKind::EmptyCoordinate);
    }
    let tree = parse_tree(d, text, 0).map_err(shift)?;
    let ex = Expander { d, dim: 0 };
    let mut expanded = ex.expand(&tree).map_err(shift)?;
    Ok(expanded.remove(&Vec::new()).unwrap_or_else(|| d.zero()))
}

/// Splits `text` on `sep` outside parentheses, returning `(offset, piece)`.
fn split_top_level(text: &str, sep: u8) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, b) in text.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if b == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

/// Parses the point syntax `a1,...,ad/b`; without `/` the denominator is 1.
/// The point is returned as written, not reduced.
pub fn parse_point<D: NormedDomain>(d: &D, text: &str) -> Result<FractionPoint<D::Elem>> {
    let halves = split_top_level(text, b'/');
    let (nums, den) = match halves.as_slice() {
        [(_, nums)] => (*nums, d.one()),
        [(_, nums), (off, den)] => (*nums, parse_element_at(d, den, *off)?),
        [_, _, (off, _), ..] => {
            return Err(ParseError {
                offset: off - 1,
                kind: ParseErrorKind::MissingDenominator,
            }
            .into())
        }
        [] => unreachable!(),
    };
    let coords = split_top_level(nums, b',')
        .into_iter()
        .map(|(off, s)| parse_element_at(d, s, off))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    FractionPoint::unreduced(d, coords, den)
}

fn needs_parens(c: &str) -> bool {
    !c.starts_with('(') && c[1..].contains(['+', '-'])
}

/// Canonical text: degree-2 monomials, then linear, then the constant, each
/// group in lexicographic variable order, with variables named `x1 … xd`.
pub fn format_form<D: NormedDomain>(d: &D, f: &QuadraticPolynomial<D::Elem>) -> String {
    let n = f.dim();
    let mut terms: Vec<(String, &D::Elem)> = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mono = if i == j {
                format!("x{}^2", i + 1)
            } else {
                format!("x{}*x{}", i + 1, j + 1)
            };
            terms.push((mono, f.quad_coeff(i, j)));
        }
    }
    for i in 0..n {
        terms.push((format!("x{}", i + 1), f.lin_coeff(i)));
    }

    let mut out = String::new();
    let mut push = |s: String| {
        if !out.is_empty() && !s.starts_with('-') {
            out.push('+');
        }
        out.push_str(&s);
    };
    for (mono, c) in terms {
        if d.is_zero(c) {
            continue;
        }
        let cs = d.format_elem(c);
        push(match cs.as_str() {
            "1" => mono,
            "-1" => format!("-{mono}"),
            _ if needs_parens(&cs) => format!("({cs})*{mono}"),
            _ => format!("{cs}*{mono}"),
        });
    }
    if !d.is_zero(f.constant()) {
        push(d.format_elem(f.constant()));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{Gaussian, GaussianIntegers, Integers, PrimeFieldPolynomials};
    use crate::error::Error;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn parse_err(e: Error) -> ParseError {
        match e {
            Error::Parse(p) => p,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn sum_of_three_squares() {
        let f = parse_form(&Integers, "x^2+y^2+z^2-7", 3).unwrap();
        let expected = QuadraticPolynomial::diagonal(&Integers, vec![z(1), z(1), z(1)])
            .unwrap()
            .with_constant(z(-7));
        assert_eq!(f, expected);
    }

    #[test]
    fn cross_term() {
        let f = parse_form(&Integers, "x*y - 1", 2).unwrap();
        assert_eq!(f.quad_coeff(0, 1), &z(1));
        assert_eq!(f.quad_coeff(0, 0), &z(0));
        assert_eq!(f.constant(), &z(-1));
    }

    #[test]
    fn expansion_before_degree_check() {
        let f = parse_form(&Integers, "(x+y)^2 - x^2", 2).unwrap();
        assert_eq!(f.quad_coeff(0, 1), &z(2));
        assert_eq!(f.quad_coeff(1, 1), &z(1));
        assert_eq!(f.quad_coeff(0, 0), &z(0));
        assert!(parse_form(&Integers, "x^3 - x*x*x + y", 2).is_ok());
    }

    #[test]
    fn cubic_is_rejected_with_position() {
        let e = parse_err(parse_form(&Integers, "x^3", 1).unwrap_err());
        assert_eq!(e.kind, ParseErrorKind::DegreeTooHigh(3));
        assert_eq!(e.offset, 0);
        let e = parse_err(parse_form(&Integers, "x^2 + y*x^2", 2).unwrap_err());
        assert_eq!(e.offset, 6);
    }

    #[test]
    fn syntax_error_is_positioned() {
        let e = parse_err(parse_form(&Integers, "x^2 + * y", 2).unwrap_err());
        assert_eq!(e.offset, 6);
        let e = parse_err(parse_form(&Integers, "(x+y", 2).unwrap_err());
        assert_eq!(e.offset, 4);
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedEnd { .. }));
        let e = parse_err(parse_form(&Integers, "x $ y", 2).unwrap_err());
        assert_eq!((e.offset, e.kind), (2, ParseErrorKind::UnexpectedChar('$')));
    }

    #[test]
    fn input_ending_early_is_an_error() {
        for (text, offset) in [("", 0), ("x^", 2), ("x+", 2), ("  ", 2)] {
            let e = parse_err(parse_form(&Integers, text, 1).unwrap_err());
            assert!(
                matches!(e.kind, ParseErrorKind::UnexpectedEnd { .. }),
                "{text:?}"
            );
            assert_eq!(e.offset, offset, "{text:?}");
        }
    }

    #[test]
    fn foreign_coefficient_is_positioned() {
        let e = parse_err(parse_form(&Integers, "x^2 + i*y^2", 2).unwrap_err());
        assert_eq!(e.offset, 6);
        assert!(matches!(e.kind, ParseErrorKind::ForeignCoefficient { .. }));
        let e = parse_err(parse_form(&GaussianIntegers, "t*x^2", 1).unwrap_err());
        assert_eq!(e.offset, 0);
    }

    #[test]
    fn unknown_variable() {
        let e = parse_err(parse_form(&Integers, "x^2 + z", 2).unwrap_err());
        assert_eq!(
            (e.offset, e.kind),
            (6, ParseErrorKind::UnknownVariable("z".into()))
        );
        assert!(parse_form(&Integers, "x0", 2).is_err());
        assert!(parse_form(&Integers, "x3", 2).is_err());
        assert!(parse_form(&Integers, "x1^2+x5", 5).is_ok());
    }

    #[test]
    fn aliases_only_up_to_four_variables() {
        assert!(parse_form(&Integers, "w^2+x^2+y^2+z^2", 4).is_ok());
        assert!(parse_form(&Integers, "x^2", 5).is_err());
    }

    #[test]
    fn gaussian_literals() {
        let d = GaussianIntegers;
        assert_eq!(parse_element(&d, "(1+2i)").unwrap(), Gaussian::new(1, 2));
        assert_eq!(parse_element(&d, "3i").unwrap(), Gaussian::new(0, 3));
        assert_eq!(parse_element(&d, "(2-i)").unwrap(), Gaussian::new(2, -1));
        assert_eq!(parse_element(&d, "-5").unwrap(), Gaussian::new(-5, 0));
    }

    #[test]
    fn polynomial_literals() {
        let d = PrimeFieldPolynomials::new(2).unwrap();
        assert_eq!(parse_element(&d, "t^3+t+1").unwrap(), d.poly(&[1, 1, 0, 1]));
        assert_eq!(parse_element(&d, "t+t").unwrap(), d.zero());
        let d5 = PrimeFieldPolynomials::new(5).unwrap();
        assert_eq!(parse_element(&d5, "7t").unwrap(), d5.poly(&[0, 2]));
    }

    #[test]
    fn points() {
        let p = parse_point(&Integers, "-11,2/5").unwrap();
        assert_eq!(p.num(), &[z(-11), z(2)]);
        assert_eq!(p.den(), &z(5));
        let p = parse_point(&Integers, "1,2").unwrap();
        assert_eq!(p.den(), &z(1));
        let f2 = PrimeFieldPolynomials::new(2).unwrap();
        let p = parse_point(&f2, "t^2+1,(t+1)/t^2+t").unwrap();
        assert_eq!(p.den(), &f2.poly(&[0, 1, 1]));
        assert_eq!(p.num()[1], f2.poly(&[1, 1]));

        assert!(matches!(
            parse_point(&Integers, "1,2/0"),
            Err(Error::ZeroDenominator)
        ));
        let e = parse_err(parse_point(&Integers, "1,,2/3").unwrap_err());
        assert_eq!((e.offset, e.kind), (2, ParseErrorKind::EmptyCoordinate));
        let e = parse_err(parse_point(&Integers, "1,2/3/4").unwrap_err());
        assert_eq!(e.kind, ParseErrorKind::MissingDenominator);
        let e = parse_err(parse_point(&Integers, "1,q/3").unwrap_err());
        assert_eq!(e.offset, 2);
    }

    #[test]
    fn format_examples() {
        let f = QuadraticPolynomial::diagonal(&Integers, vec![z(1), z(1)])
            .unwrap()
            .with_constant(z(-5));
        assert_eq!(format_form(&Integers, &f), "x1^2+x2^2-5");
        assert_eq!(
            format_form(&Integers, &QuadraticPolynomial::zero(&Integers, 3).unwrap()),
            "0"
        );

        let d = PrimeFieldPolynomials::new(2).unwrap();
        let f = QuadraticPolynomial::diagonal(&d, vec![d.poly(&[1, 1]), d.one()]).unwrap();
        assert_eq!(format_form(&d, &f), "(t+1)*x1^2+x2^2");

        let g = GaussianIntegers;
        let f = parse_form(&g, "-i*x^2 + (1-2i)*x*y - 3*y + 2i", 2).unwrap();
        let text = format_form(&g, &f);
        assert_eq!(text, "-i*x1^2+(1-2i)*x1*x2-3*x2+2i");
        assert_eq!(parse_form(&g, &text, 2).unwrap(), f);
    }

    #[test]
    fn dimension_inference() {
        assert_eq!(infer_dimension("w^2+x^2+y^2+z^2"), 4);
        assert_eq!(infer_dimension("x^2+y^2-5"), 2);
        assert_eq!(infer_dimension("x1*x7"), 7);
        assert_eq!(infer_dimension("5"), 1);
        assert_eq!(infer_dimension("t*x^2"), 1);
    }
}
