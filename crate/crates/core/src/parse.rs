//! Expression parser and printer for polynomials in t and x with exact
//! rational coefficients.
//!
//! Grammar: sums and differences of products of powers of atoms, where
//! an atom is an integer literal, a rational literal "a/b", the variable
//! t or x, or a parenthesized expression. Exponents are nonnegative
//! integer literals.

use crate::game::WeierstrassPoly;
use crate::series::TruncSeries;
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in (t, x) as a sparse map (t-degree, x-degree) ->
/// coefficient; the normalized form every expression reduces to.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyExpr {
    terms: BTreeMap<(usize, usize), BigRational>,
}

impl PolyExpr {
    fn constant(c: BigRational) -> Self {
        let mut p = PolyExpr::default();
        if !c.is_zero() {
            p.terms.insert((0, 0), c);
        }
        p
    }

    fn variable_t() -> Self {
        let mut p = PolyExpr::default();
        p.terms.insert((1, 0), BigRational::one());
        p
    }

    fn variable_x() -> Self {
        let mut p = PolyExpr::default();
        p.terms.insert((0, 1), BigRational::one());
        p
    }

    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let e = terms.entry(*k).or_insert_with(BigRational::zero);
            *e += v;
        }
        terms.retain(|_, v| !v.is_zero());
        PolyExpr { terms }
    }

    fn neg(&self) -> Self {
        PolyExpr {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
        for ((ta, xa), ca) in &self.terms {
            for ((tb, xb), cb) in &other.terms {
                let key = (ta + tb, xa + xb);
                let e = terms.entry(key).or_insert_with(BigRational::zero);
                *e += ca * cb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        PolyExpr { terms }
    }

    fn pow(&self, k: usize) -> Self {
        let mut acc = PolyExpr::constant(BigRational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn x_degree(&self) -> usize {
        self.terms.keys().map(|&(_, xd)| xd).max().unwrap_or(0)
    }

    /// Coefficient of x^xd as a polynomial in t.
    pub fn coeff_of_x(&self, xd: usize) -> Vec<BigRational> {
        let mut coeffs = Vec::new();
        for (&(td, xdeg), c) in &self.terms {
            if xdeg == xd {
                if coeffs.len() <= td {
                    coeffs.resize(td + 1, BigRational::zero());
                }
                coeffs[td] = c.clone();
            }
        }
        coeffs
    }

    /// Validates monicity in x and the vanishing-at-0 condition, producing
    /// a Weierstrass polynomial with exact coefficients.
    pub fn to_weierstrass(&self) -> Result<WeierstrassPoly> {
        let m = self.x_degree();
        if m == 0 {
            return Err(Error::NotMonic);
        }
        let lead = self.coeff_of_x(m);
        if lead.len() != 1 || !lead[0].is_one() {
            return Err(Error::NotMonic);
        }
        let mut alphas = Vec::with_capacity(m);
        for j in 1..=m {
            alphas.push(TruncSeries::poly(self.coeff_of_x(m - j)));
        }
        WeierstrassPoly::new(m, alphas)
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending x-degree, then ascending t-degree
        let mut keys: Vec<(usize, usize)> = self.terms.keys().cloned().collect();
        keys.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut first = true;
        for (td, xd) in keys {
            let c = &self.terms[&(td, xd)];
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut pieces: Vec<String> = Vec::new();
            if !a.is_one() || (td == 0 && xd == 0) {
                pieces.push(a.to_string());
            }
            if td > 0 {
                pieces.push(if td == 1 { "t".into() } else { format!("t^{}", td) });
            }
            if xd > 0 {
                pieces.push(if xd == 1 { "x".into() } else { format!("x^{}", xd) });
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigRational),
    VarT,
    VarX,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            't' => {
                tokens.push((i, Token::VarT));
                i += 1;
            }
            'x' => {
                tokens.push((i, Token::VarX));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = text[start..i].parse().unwrap();
                // a '/' directly followed by digits makes a rational literal
                if i < bytes.len() && bytes[i] == b'/' {
                    let dstart = i + 1;
                    let mut j = dstart;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == dstart {
                        return Err(Error::Syntax {
                            pos: i,
                            msg: "expected digits after '/'".into(),
                        });
                    }
                    let den: BigInt = text[dstart..j].parse().unwrap();
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            pos: dstart,
                            msg: "zero denominator".into(),
                        });
                    }
                    tokens.push((start, Token::Number(BigRational::new(num, den))));
                    i = j;
                } else {
                    tokens.push((start, Token::Number(BigRational::from_integer(num))));
                }
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{}'", c),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PolyExpr> {
        let mut negate = false;
        while let Some(Token::Minus) = self.peek() {
            self.bump();
            negate = !negate;
        }
        let mut base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Token::Number(n)) if n.is_integer() && !n.is_negative() => {
                    use num::ToPrimitive;
                    let k = n.to_integer().to_usize().ok_or(Error::Syntax {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    base = base.pow(k);
                }
                _ => {
                    return Err(Error::Syntax {
                        pos,
                        msg: "expected a nonnegative integer exponent".into(),
                    })
                }
            }
        }
        Ok(if negate { base.neg() } else { base })
    }

    fn atom(&mut self) -> Result<PolyExpr> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Number(n)) => Ok(PolyExpr::constant(n)),
            Some(Token::VarT) => Ok(PolyExpr::variable_t()),
            Some(Token::VarX) => Ok(PolyExpr::variable_x()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Syntax {
                        pos: self.here(),
                        msg: "expected ')'".into(),
                    }),
                }
            }
            _ => Err(Error::Syntax {
                pos,
                msg: "expected a number, variable, or '('".into(),
            }),
        }
    }
}

/// Parse an expression into its normalized polynomial form.
pub fn parse_expr(text: &str) -> Result<PolyExpr> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let e = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Syntax {
            pos: parser.here(),
            msg: "unexpected trailing input".into(),
        });
    }
    Ok(e)
}

/// Parse, normalize, and validate into a Weierstrass polynomial.
pub fn parse_poly(text: &str) -> Result<WeierstrassPoly> {
    parse_expr(text)?.to_weierstrass()
}
