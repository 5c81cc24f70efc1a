//! Text form of polynomials, maps and curves.
//!
//! Map literals look like `[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]`; curve
//! literals like `[t + 4*t^4, 2*t^2] over QQ[t]`. Printing always emits the
//! canonical form (terms in descending grevlex) and parsing that form gives
//! back the identical object.

use crate::endo::{Curve, EndoError, PolyMap};
use crate::poly::{Monomial, Polynomial};
use crate::ring::{Coefficient, DomainDescriptor};
use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

/// A parse failure with its source position and the tokens that would have
/// been accepted there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LBracket,
    RBracket,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Int(n) => format!("number {n}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Comma => "','".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcolumn) = (line, column);
        let bump = |c: char, line: &mut usize, column: &mut usize| {
            if c == '\n' {
                *line += 1;
                *column = 1;
            } else {
                *column += 1;
            }
        };
        match ch {
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut column);
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        bump(d, &mut line, &mut column);
                    } else {
                        break;
                    }
                }
                let value = digits.parse::<BigInt>().expect("digits");
                out.push(Spanned {
                    tok: Tok::Int(value),
                    line: tline,
                    column: tcolumn,
                });
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        ident.push(d);
                        chars.next();
                        bump(d, &mut line, &mut column);
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Ident(ident),
                    line: tline,
                    column: tcolumn,
                });
            }
            c => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' | '\u{2212}' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '/' => Tok::Slash,
                    ',' => Tok::Comma,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    other => {
                        return Err(ParseError::new(
                            tline,
                            tcolumn,
                            format!("unexpected character '{other}'"),
                        ))
                    }
                };
                chars.next();
                bump(c, &mut line, &mut column);
                out.push(Spanned {
                    tok,
                    line: tline,
                    column: tcolumn,
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    end_line: usize,
    end_column: usize,
}

impl<'a> Parser<'a> {
    fn new(toks: &'a [Spanned], end_line: usize, end_column: usize) -> Self {
        Parser {
            toks,
            pos: 0,
            end_line,
            end_column,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.column))
            .unwrap_or((self.end_line, self.end_column))
    }

    fn next(&mut self) -> Option<&Spanned> {
        let s = self.toks.get(self.pos);
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    fn error_here(&self, expected: &[&str]) -> ParseError {
        let (line, column) = self.here();
        let found = self
            .peek()
            .map(|t| t.describe())
            .unwrap_or_else(|| "end of input".into());
        ParseError::new(line, column, format!("unexpected {found}")).expecting(expected)
    }

    fn expect(&mut self, tok: &Tok, describe: &str) -> Result<(), ParseError> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error_here(&[describe]))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }
}

fn starts_factor(tok: Option<&Tok>) -> bool {
    matches!(tok, Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen))
}

struct PolyParser<'a, 'b> {
    inner: Parser<'a>,
    vars: &'b [String],
    domain: DomainDescriptor,
}

impl<'a, 'b> PolyParser<'a, 'b> {
    fn parse_expr(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let mut acc = Polynomial::zero(self.domain, n);
        let mut negate = match self.inner.peek() {
            Some(Tok::Minus) => {
                self.inner.next();
                true
            }
            Some(Tok::Plus) => {
                self.inner.next();
                false
            }
            _ => false,
        };
        loop {
            let term = self.parse_term()?;
            let term = if negate { term.neg() } else { term };
            acc = acc.add(&term).expect("same domain and arity");
            match self.inner.peek() {
                Some(Tok::Plus) => {
                    self.inner.next();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.inner.next();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.inner.peek() {
                Some(Tok::Star) => {
                    self.inner.next();
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f).expect("same domain and arity");
                }
                tok if starts_factor(tok) => {
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f).expect("same domain and arity");
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let (line, column) = self.inner.here();
        match self.inner.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.inner.next();
                // optional '/ den' makes a fraction literal
                let coeff = if self.inner.peek() == Some(&Tok::Slash) {
                    self.inner.next();
                    let (dline, dcolumn) = self.inner.here();
                    match self.inner.peek().cloned() {
                        Some(Tok::Int(den)) => {
                            self.inner.next();
                            self.domain.ratio(num, den).map_err(|e| {
                                ParseError::new(dline, dcolumn, e.to_string())
                            })?
                        }
                        _ => return Err(self.inner.error_here(&["number"])),
                    }
                } else {
                    self.domain.from_bigint(num)
                };
                Ok(Polynomial::constant(coeff, n))
            }
            Some(Tok::Ident(name)) => {
                self.inner.next();
                let Some(index) = self.vars.iter().position(|v| *v == name) else {
                    let declared = self.vars.join(", ");
                    return Err(ParseError::new(
                        line,
                        column,
                        format!("unknown variable '{name}' (declared: {declared})"),
                    ));
                };
                let exp = self.parse_optional_exponent()?;
                let mut e = vec![0u32; n];
                e[index] = exp;
                Ok(Polynomial::from_terms(
                    self.domain,
                    n,
                    vec![(Monomial::new(e), self.domain.one())],
                )
                .expect("valid term"))
            }
            Some(Tok::LParen) => {
                self.inner.next();
                let inner = self.parse_expr()?;
                self.inner.expect(&Tok::RParen, "')'")?;
                let exp = self.parse_optional_exponent()?;
                let mut acc = Polynomial::one(self.domain, n);
                for _ in 0..exp {
                    acc = acc.mul(&inner).expect("same domain and arity");
                }
                Ok(acc)
            }
            _ => Err(self.inner.error_here(&["number", "identifier", "'('"])),
        }
    }

    fn parse_optional_exponent(&mut self) -> Result<u32, ParseError> {
        if self.inner.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.inner.next();
        let (line, column) = self.inner.here();
        match self.inner.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.inner.next();
                u32::try_from(&n).map_err(|_| {
                    ParseError::new(line, column, format!("exponent {n} is too large"))
                })
            }
            _ => Err(self.inner.error_here(&["number"])),
        }
    }
}

/// Parses a single polynomial in the given variables and domain.
pub fn parse_polynomial(
    src: &str,
    vars: &[String],
    domain: DomainDescriptor,
) -> Result<Polynomial, ParseError> {
    let toks = tokenize(src)?;
    let (el, ec) = end_of(src);
    let mut parser = PolyParser {
        inner: Parser::new(&toks, el, ec),
        vars,
        domain,
    };
    let poly = parser.parse_expr()?;
    if !parser.inner.at_end() {
        return Err(parser.inner.error_here(&["end of input"]));
    }
    Ok(poly)
}

fn end_of(src: &str) -> (usize, usize) {
    let mut line = 1;
    let mut column = 1;
    for c in src.chars() {
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    (line, column)
}

struct Literal {
    component_ranges: Vec<(usize, usize)>,
    domain: DomainDescriptor,
    vars: Vec<String>,
}

/// Splits `[ p1, ..., pn ] over DOM[v1,...,vk]` into component token ranges
/// plus the declarations, without yet parsing the polynomial bodies.
fn parse_literal_shell(toks: &[Spanned], el: usize, ec: usize) -> Result<Literal, ParseError> {
    let mut p = Parser::new(toks, el, ec);
    p.expect(&Tok::LBracket, "'['")?;
    let mut ranges = Vec::new();
    let mut start = p.pos;
    let mut depth = 0usize;
    let close;
    loop {
        match p.next().map(|s| s.tok.clone()) {
            Some(Tok::LBracket) | Some(Tok::LParen) => depth += 1,
            Some(Tok::RParen) => {
                depth = depth.checked_sub(1).ok_or_else(|| {
                    let (l, c) = p.here();
                    ParseError::new(l, c, "unmatched ')'")
                })?;
            }
            Some(Tok::RBracket) => {
                if depth == 0 {
                    close = p.pos - 1;
                    break;
                }
                depth -= 1;
            }
            Some(Tok::Comma) if depth == 0 => {
                ranges.push((start, p.pos - 1));
                start = p.pos;
            }
            Some(_) => {}
            None => {
                return Err(ParseError::new(el, ec, "unexpected end of input").expecting(&["']'"]))
            }
        }
    }
    ranges.push((start, close));
    for (s, e) in &ranges {
        if s == e {
            let at = &toks[*s.min(&(toks.len() - 1))];
            return Err(ParseError::new(at.line, at.column, "empty component")
                .expecting(&["number", "identifier", "'('"]));
        }
    }
    // 'over' DOMAIN '[' vars ']'
    match p.next() {
        Some(Spanned {
            tok: Tok::Ident(kw),
            ..
        }) if kw == "over" => {}
        _ => {
            p.pos = p.pos.saturating_sub(1);
            return Err(p.error_here(&["'over'"]));
        }
    }
    let domain = match p.next().cloned() {
        Some(Spanned {
            tok: Tok::Ident(name),
            line,
            column,
        }) => match name.as_str() {
            "QQ" => DomainDescriptor::Rationals,
            "ZZ" => DomainDescriptor::Integers,
            "GF" => {
                p.expect(&Tok::LParen, "'('")?;
                let (pl, pc) = p.here();
                let prime = match p.next().cloned() {
                    Some(Spanned {
                        tok: Tok::Int(n), ..
                    }) => n,
                    _ => {
                        p.pos = p.pos.saturating_sub(1);
                        return Err(p.error_here(&["prime number"]));
                    }
                };
                p.expect(&Tok::RParen, "')'")?;
                let small = u64::try_from(&prime)
                    .map_err(|_| ParseError::new(pl, pc, format!("{prime} is too large")))?;
                DomainDescriptor::prime_field(small)
                    .map_err(|e| ParseError::new(pl, pc, e.to_string()))?
            }
            other => {
                return Err(ParseError::new(
                    line,
                    column,
                    format!("unknown domain '{other}'"),
                )
                .expecting(&["'QQ'", "'ZZ'", "'GF(p)'"]))
            }
        },
        _ => {
            p.pos = p.pos.saturating_sub(1);
            return Err(p.error_here(&["'QQ'", "'ZZ'", "'GF(p)'"]));
        }
    };
    p.expect(&Tok::LBracket, "'['")?;
    let mut vars: Vec<String> = Vec::new();
    loop {
        match p.next().cloned() {
            Some(Spanned {
                tok: Tok::Ident(name),
                line,
                column,
            }) => {
                if name == "over" {
                    return Err(ParseError::new(line, column, "'over' is reserved"));
                }
                if vars.contains(&name) {
                    return Err(ParseError::new(
                        line,
                        column,
                        format!("variable '{name}' declared twice"),
                    ));
                }
                vars.push(name);
            }
            _ => {
                p.pos = p.pos.saturating_sub(1);
                return Err(p.error_here(&["identifier"]));
            }
        }
        match p.peek() {
            Some(Tok::Comma) => {
                p.next();
            }
            _ => break,
        }
    }
    p.expect(&Tok::RBracket, "']'")?;
    if !p.at_end() {
        return Err(p.error_here(&["end of input"]));
    }
    Ok(Literal {
        component_ranges: ranges,
        domain,
        vars,
    })
}

fn parse_components(src: &str) -> Result<(Vec<Polynomial>, DomainDescriptor, Vec<String>), ParseError> {
    let toks = tokenize(src)?;
    let (el, ec) = end_of(src);
    let shell = parse_literal_shell(&toks, el, ec)?;
    let mut components = Vec::new();
    for (s, e) in &shell.component_ranges {
        let slice = &toks[*s..*e];
        // report truncation at the ',' or ']' that ends the component
        let (cl, cc) = toks.get(*e).map(|t| (t.line, t.column)).unwrap_or((el, ec));
        let mut parser = PolyParser {
            inner: Parser::new(slice, cl, cc),
            vars: &shell.vars,
            domain: shell.domain,
        };
        let poly = parser.parse_expr()?;
        if !parser.inner.at_end() {
            return Err(parser.inner.error_here(&["end of component"]));
        }
        components.push(poly);
    }
    Ok((components, shell.domain, shell.vars))
}

/// Parses a map literal like `[x + y^2, y] over QQ[x,y]`. The number of
/// components must equal the number of declared variables.
pub fn parse_map(src: &str) -> Result<PolyMap, ParseError> {
    let (components, _, vars) = parse_components(src)?;
    if components.len() != vars.len() {
        let (el, ec) = end_of(src);
        return Err(ParseError::new(
            el,
            ec,
            format!(
                "a map needs as many components as variables: {} components, {} variables",
                components.len(),
                vars.len()
            ),
        ));
    }
    PolyMap::new(components, vars).map_err(|e| {
        let (el, ec) = end_of(src);
        ParseError::new(el, ec, e.to_string())
    })
}

/// Parses a curve literal like `[t + 4*t^4, 2*t^2] over QQ[t]`: exactly one
/// declared variable, any number of components, all with zero constant term.
pub fn parse_curve(src: &str) -> Result<Curve, ParseError> {
    let (components, _, vars) = parse_components(src)?;
    let (el, ec) = end_of(src);
    if vars.len() != 1 {
        return Err(ParseError::new(
            el,
            ec,
            format!("a curve has exactly one parameter, {} declared", vars.len()),
        ));
    }
    Curve::new(components, vars[0].clone()).map_err(|e| match e {
        EndoError::CurveNotCentered { component, value } => ParseError::new(
            el,
            ec,
            format!("curve component {component} has nonzero constant term {value}"),
        ),
        other => ParseError::new(el, ec, other.to_string()),
    })
}

/// Parses a comma-separated coordinate list like `1,-2,1/3`.
pub fn parse_point(src: &str, domain: DomainDescriptor) -> Result<Vec<Coefficient>, ParseError> {
    let toks = tokenize(src)?;
    let (el, ec) = end_of(src);
    let mut p = Parser::new(&toks, el, ec);
    let mut out = Vec::new();
    loop {
        let negate = match p.peek() {
            Some(Tok::Minus) => {
                p.next();
                true
            }
            Some(Tok::Plus) => {
                p.next();
                false
            }
            _ => false,
        };
        let (line, column) = p.here();
        let num = match p.next().cloned() {
            Some(Spanned {
                tok: Tok::Int(n), ..
            }) => n,
            _ => {
                p.pos = p.pos.saturating_sub(1);
                return Err(p.error_here(&["number"]));
            }
        };
        let coeff = if p.peek() == Some(&Tok::Slash) {
            p.next();
            match p.next().cloned() {
                Some(Spanned {
                    tok: Tok::Int(den), ..
                }) => domain
                    .ratio(num, den)
                    .map_err(|e| ParseError::new(line, column, e.to_string()))?,
                _ => {
                    p.pos = p.pos.saturating_sub(1);
                    return Err(p.error_here(&["number"]));
                }
            }
        } else {
            domain.from_bigint(num)
        };
        out.push(if negate { coeff.neg() } else { coeff });
        match p.peek() {
            Some(Tok::Comma) => {
                p.next();
            }
            None => break,
            _ => return Err(p.error_here(&["','", "end of input"])),
        }
    }
    Ok(out)
}

/// Canonical text: terms in descending grevlex, `^` for powers, explicit `*`.
pub fn render_polynomial(f: &Polynomial, vars: &[String]) -> String {
    assert_eq!(vars.len(), f.nvars(), "variable list must match arity");
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mon, coeff)) in f.terms().rev().enumerate() {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if !magnitude.is_one() || mon.is_unit() {
            factors.push(magnitude.to_string());
        }
        for (i, &e) in mon.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[i].clone()),
                _ => factors.push(format!("{}^{}", vars[i], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn render_map(map: &PolyMap) -> String {
    let body = map
        .components()
        .iter()
        .map(|c| render_polynomial(c, map.vars()))
        .collect::<Vec<_>>()
        .join(", ");
    format!("[{}] over {}[{}]", body, map.domain(), map.vars().join(","))
}

pub fn render_curve(curve: &Curve) -> String {
    let vars = vec![curve.var().to_string()];
    let body = curve
        .components()
        .iter()
        .map(|c| render_polynomial(c, &vars))
        .collect::<Vec<_>>()
        .join(", ");
    format!("[{}] over {}[{}]", body, curve.domain(), curve.var())
}

pub fn render_point(point: &[Coefficient]) -> String {
    point
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_map(self))
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_curve(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_map_literal() {
        let m = parse_map("[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]").unwrap();
        assert_eq!(m.domain(), DomainDescriptor::Integers);
        assert_eq!(m.nvars(), 2);
        assert_eq!(m.to_string(), "[4*x^2 + x + 2*y, 2*x^2 + y] over ZZ[x,y]");
        // canonical round trip
        let again = parse_map(&m.to_string()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn identity_in_one_variable() {
        let m = parse_map("[x] over QQ[x]").unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn curve_literal() {
        let c = parse_curve("[t + 4*t^4, 2*t^2] over QQ[t]").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.to_string(), "[4*t^4 + t, 2*t^2] over QQ[t]");
        assert!(parse_curve("[t + 1, t] over QQ[t]").is_err());
    }

    #[test]
    fn implicit_multiplication_and_parens() {
        let vars: Vec<String> = vec!["x".into(), "y".into()];
        let q = DomainDescriptor::Rationals;
        let a = parse_polynomial("4x^2 + 2x y", &vars, q).unwrap();
        let b = parse_polynomial("4*x^2 + 2*x*y", &vars, q).unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial("(x - 2y)^2", &vars, q).unwrap();
        let d = parse_polynomial("x^2 - 4*x*y + 4*y^2", &vars, q).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn rational_and_prime_field_literals() {
        let vars: Vec<String> = vec!["x".into()];
        let q = DomainDescriptor::Rationals;
        let f = parse_polynomial("1/2*x - 3/4", &vars, q).unwrap();
        assert_eq!(render_polynomial(&f, &vars), "1/2*x - 3/4");

        let gf = DomainDescriptor::prime_field(7).unwrap();
        let g = parse_polynomial("-x + 10", &vars, gf).unwrap();
        assert_eq!(render_polynomial(&g, &vars), "6*x + 3");

        // 1/2 over ZZ is rejected
        assert!(parse_polynomial("1/2", &vars, DomainDescriptor::Integers).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_map("[x + ] over QQ[x]").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.column, 6);
        assert!(!err.expected.is_empty());

        let err = parse_map("[z] over QQ[x]").unwrap_err();
        assert!(err.message.contains("unknown variable 'z'"));
        assert_eq!(err.column, 2);

        let err = parse_map("[x, x] over QQ[x]").unwrap_err();
        assert!(err.message.contains("components"));

        let err = parse_map("[x] over GF(6)[x]").unwrap_err();
        assert!(err.message.contains("not prime"));
    }

    #[test]
    fn point_lists() {
        let q = DomainDescriptor::Rationals;
        let p = parse_point("1,-2,1/3", q).unwrap();
        assert_eq!(render_point(&p), "1,-2,1/3");
        assert!(parse_point("1,,2", q).is_err());
        assert!(parse_point("", q).is_err());
    }

    #[test]
    fn zero_renders_and_parses() {
        let vars: Vec<String> = vec!["x".into(), "y".into()];
        let q = DomainDescriptor::Rationals;
        let z = parse_polynomial("0", &vars, q).unwrap();
        assert!(z.is_zero());
        assert_eq!(render_polynomial(&z, &vars), "0");
        let z2 = parse_polynomial("x - x", &vars, q).unwrap();
        assert!(z2.is_zero());
    }
}
