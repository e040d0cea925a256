//! Tokenizer and expression parser shared by every input format.

use std::fmt;

use l2dim::group::{Group, GroupElement};
use l2dim::group_ring::GroupRingElement;
use l2dim::scalars::{GaussianRational, LaurentPoly, Rational, RationalFunction};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Self { line, col, msg: msg.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    /// Rational literal, possibly imaginary (`3/2i`).
    Num(Rational, bool),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    /// 1-based column.
    pub col: usize,
}

fn digits(chars: &[char], mut i: usize) -> usize {
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    i
}

/// Splits one line into tokens. `col0` is the column of the first char.
pub fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, col });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let end = digits(&chars, i);
            let num: BigInt = chars[i..end].iter().collect::<String>().parse().expect("digits");
            let mut value = Rational::from_integer(num);
            let mut j = end;
            // `p/q` directly followed by digits is one literal
            if j + 1 < chars.len() && chars[j] == '/' && chars[j + 1].is_ascii_digit() {
                let dend = digits(&chars, j + 1);
                let den: BigInt = chars[j + 1..dend].iter().collect::<String>().parse().expect("digits");
                if den.is_zero() {
                    return Err(ParseError::new(line, col0 + j + 1, "zero denominator"));
                }
                value /= Rational::from_integer(den);
                j = dend;
            }
            let imag = j < chars.len() && chars[j] == 'i' && !chars.get(j + 1).is_some_and(|c| c.is_alphanumeric() || *c == '_');
            if imag {
                j += 1;
            }
            out.push(Token { tok: Tok::Num(value, imag), col });
            i = j;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[i..j].iter().collect()), col });
            i = j;
            continue;
        }
        return Err(ParseError::new(line, col, format!("unexpected character '{c}'")));
    }
    Ok(out)
}

/// Ring in which parsed expressions are evaluated.
pub trait Algebra {
    type V: Clone;
    fn constant(&self, c: GaussianRational) -> Self::V;
    fn named(&self, name: &str) -> Option<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V) -> Result<Self::V, String>;
    fn pow(&self, a: &Self::V, k: i64) -> Result<Self::V, String>;
}

/// Recursive-descent parser over a token slice.
pub struct Parser<'a, A: Algebra> {
    alg: &'a A,
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a, A: Algebra> Parser<'a, A> {
    pub fn new(alg: &'a A, toks: &'a [Token], line: usize, end_col: usize) -> Self {
        Self { alg, toks, pos: 0, line, end_col }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    pub fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), msg)
    }

    pub fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    pub fn finish(&self) -> Result<(), ParseError> {
        if self.at_end() { Ok(()) } else { Err(self.err("unexpected trailing input")) }
    }

    /// `expr := [+|-] term ((+|-) term)*`
    pub fn expr(&mut self) -> Result<A::V, ParseError> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = self.alg.neg(&acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.alg.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    /// `term := factor ((*|/) factor)*`
    fn term(&mut self) -> Result<A::V, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.alg.mul(&acc, &f);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let f = self.factor()?;
                    acc = self.alg.div(&acc, &f).map_err(|m| ParseError::new(self.line, col, m))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// `factor := atom [^ [-] INT]`
    fn factor(&mut self) -> Result<A::V, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let col = self.col();
        let k = match self.peek() {
            Some(Tok::Num(v, false)) if v.is_integer() => {
                let k: i64 = v.to_integer().try_into().map_err(|_| self.err("exponent too large"))?;
                self.pos += 1;
                k
            }
            _ => return Err(self.err("expected integer exponent")),
        };
        let k = if negative { -k } else { k };
        self.alg.pow(&base, k).map_err(|m| ParseError::new(self.line, col, m))
    }

    /// `atom := NUM | NUMi | i | IDENT | ( expr )`
    fn atom(&mut self) -> Result<A::V, ParseError> {
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Num(v, imag)) => {
                self.pos += 1;
                let c = if imag { GaussianRational::new(Rational::zero(), v) } else { GaussianRational::from_rational(v) };
                Ok(self.alg.constant(c))
            }
            Some(Tok::Ident(name)) => {
                if name == "i" {
                    self.pos += 1;
                    return Ok(self.alg.constant(GaussianRational::i()));
                }
                let v = self.alg.named(&name).ok_or_else(|| self.err(format!("unknown generator '{name}'")))?;
                self.pos += 1;
                Ok(v)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(v)
            }
            _ => Err(self.err("expected a number, generator or '('")),
        }
    }

    /// `row := [ [expr (, expr)*] ]`
    pub fn row(&mut self) -> Result<Vec<A::V>, ParseError> {
        self.expect(Tok::LBrack, "'['")?;
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::RBrack) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            match self.peek() {
                Some(Tok::Comma) => self.pos += 1,
                Some(Tok::RBrack) => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
    }

    /// `matrix := [ row (, row)* ] | [ ]`
    pub fn matrix(&mut self) -> Result<Vec<Vec<A::V>>, ParseError> {
        self.expect(Tok::LBrack, "'['")?;
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::RBrack) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.row()?);
            match self.peek() {
                Some(Tok::Comma) => self.pos += 1,
                Some(Tok::RBrack) => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
    }
}

/// Group ring of a parsed group. Division and negative powers are allowed
/// for trivial units `c·g`.
pub struct GroupRingAlgebra {
    group: Group,
    names: Vec<(String, GroupElement)>,
}

impl GroupRingAlgebra {
    pub fn new(group: &Group) -> Self {
        let mut names = group.generators();
        names.push(("e".into(), group.identity()));
        Self { group: group.clone(), names }
    }

    fn unit_inverse(&self, a: &GroupRingElement) -> Option<GroupRingElement> {
        if a.support_len() != 1 {
            return None;
        }
        let (g, c) = a.terms().iter().next()?;
        Some(GroupRingElement::term(&self.group, self.group.inverse(g), c.inv()?))
    }
}

impl Algebra for GroupRingAlgebra {
    type V = GroupRingElement;

    fn constant(&self, c: GaussianRational) -> GroupRingElement {
        GroupRingElement::scalar(&self.group, c)
    }

    fn named(&self, name: &str) -> Option<GroupRingElement> {
        self.names.iter().find(|(n, _)| n == name).map(|(_, g)| GroupRingElement::basis(&self.group, g.clone()))
    }

    fn add(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        a + b
    }

    fn sub(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        a - b
    }

    fn mul(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        a * b
    }

    fn neg(&self, a: &GroupRingElement) -> GroupRingElement {
        -a
    }

    fn div(&self, a: &GroupRingElement, b: &GroupRingElement) -> Result<GroupRingElement, String> {
        let inv = self.unit_inverse(b).ok_or("group ring division needs a nonzero scalar multiple of a group element")?;
        Ok(a * &inv)
    }

    fn pow(&self, a: &GroupRingElement, k: i64) -> Result<GroupRingElement, String> {
        let base = if k < 0 {
            self.unit_inverse(a).ok_or("negative powers need a nonzero scalar multiple of a group element")?
        } else {
            a.clone()
        };
        let mut acc = GroupRingElement::one(&self.group);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

/// Rational functions in the generators of ℤⁿ.
pub struct RationalAlgebra {
    nvars: usize,
    names: Vec<String>,
}

impl RationalAlgebra {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, names: l2dim::scalars::laurent_var_names(nvars) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

impl Algebra for RationalAlgebra {
    type V = RationalFunction;

    fn constant(&self, c: GaussianRational) -> RationalFunction {
        RationalFunction::from_poly(LaurentPoly::constant(self.nvars, c))
    }

    fn named(&self, name: &str) -> Option<RationalFunction> {
        if name == "e" {
            return Some(RationalFunction::one(self.nvars));
        }
        let i = self.names.iter().position(|n| n == name)?;
        Some(RationalFunction::from_poly(LaurentPoly::var(self.nvars, i)))
    }

    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a + b
    }

    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a - b
    }

    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a * b
    }

    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        -a
    }

    fn div(&self, a: &RationalFunction, b: &RationalFunction) -> Result<RationalFunction, String> {
        if b.is_zero() {
            return Err("division by zero".into());
        }
        Ok(a / b)
    }

    fn pow(&self, a: &RationalFunction, k: i64) -> Result<RationalFunction, String> {
        let base = if k < 0 { a.inv().map_err(|e| e.to_string())? } else { a.clone() };
        let mut acc = RationalFunction::one(self.nvars);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

/// Exact rationals only; used to re-read reports.
pub struct RationalNumbers;

impl Algebra for RationalNumbers {
    type V = GaussianRational;

    fn constant(&self, c: GaussianRational) -> GaussianRational {
        c
    }

    fn named(&self, _: &str) -> Option<GaussianRational> {
        None
    }

    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a + b
    }

    fn sub(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a - b
    }

    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a * b
    }

    fn neg(&self, a: &GaussianRational) -> GaussianRational {
        -a
    }

    fn div(&self, a: &GaussianRational, b: &GaussianRational) -> Result<GaussianRational, String> {
        b.inv().map(|inv| a * &inv).ok_or_else(|| "division by zero".into())
    }

    fn pow(&self, a: &GaussianRational, k: i64) -> Result<GaussianRational, String> {
        let base = if k < 0 { a.inv().ok_or("division by zero")? } else { a.clone() };
        let mut acc = GaussianRational::from_rational(Rational::one());
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

/// Parses a whole line as one expression.
pub fn parse_expr<A: Algebra>(alg: &A, text: &str, line: usize, col0: usize) -> Result<A::V, ParseError> {
    let toks = tokenize(text, line, col0)?;
    let mut p = Parser::new(alg, &toks, line, col0 + text.chars().count());
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// Parses a whole line as one bracketed row.
pub fn parse_row<A: Algebra>(alg: &A, text: &str, line: usize, col0: usize) -> Result<Vec<A::V>, ParseError> {
    let toks = tokenize(text, line, col0)?;
    let mut p = Parser::new(alg, &toks, line, col0 + text.chars().count());
    let v = p.row()?;
    p.finish()?;
    Ok(v)
}

/// Parses a nested matrix literal `[[a, b], [c, d]]`.
pub fn parse_matrix<A: Algebra>(alg: &A, text: &str, line: usize, col0: usize) -> Result<Vec<Vec<A::V>>, ParseError> {
    let toks = tokenize(text, line, col0)?;
    let mut p = Parser::new(alg, &toks, line, col0 + text.chars().count());
    let v = p.matrix()?;
    p.finish()?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        let q = RationalNumbers;
        let v = parse_expr(&q, "3/2+1/2i", 1, 1).unwrap();
        assert_eq!(v.to_string(), "3/2+1/2i");
        assert_eq!(parse_expr(&q, "-i", 1, 1).unwrap(), -GaussianRational::i());
        assert_eq!(parse_expr(&q, "3/2/3", 1, 1).unwrap(), GaussianRational::from_frac(1, 2));
    }

    #[test]
    fn group_ring_expressions() {
        let g = Group::free(2);
        let alg = GroupRingAlgebra::new(&g);
        let a = parse_expr(&alg, "(3/2+1/2i)*x^2*y^-1 + e - y", 1, 1).unwrap();
        assert_eq!(a.to_string(), "1 + (3/2+1/2i)*x^2*y^-1 - y");
        let back = parse_expr(&alg, &a.to_string(), 1, 1).unwrap();
        assert_eq!(back, a);
        let err = parse_expr(&alg, "x + q", 3, 1).unwrap_err();
        assert_eq!((err.line, err.col), (3, 5));
    }

    #[test]
    fn rational_functions_round_trip() {
        let alg = RationalAlgebra::new(2);
        for text in ["1/(z - 1)", "(z + 1)/(z - 1)", "z/(2*w)", "-z^-1/(z*w)", "3/2/z", "(1/2i*z)/(z + w)"] {
            let f = parse_expr(&alg, text, 1, 1).unwrap();
            let again = parse_expr(&alg, &f.to_string(), 1, 1).unwrap();
            assert_eq!(f, again, "{text} -> {f}");
        }
    }

    #[test]
    fn rows() {
        let g = Group::free_abelian(1);
        let alg = GroupRingAlgebra::new(&g);
        assert_eq!(parse_row(&alg, "[z^1 - e]", 1, 1).unwrap().len(), 1);
        assert!(parse_row(&alg, "[]", 1, 1).unwrap().is_empty());
        let err = parse_row(&alg, "[z, ", 2, 1).unwrap_err();
        assert_eq!(err.line, 2);
    }
}
