//! Text grammars for polynomials, series, fractions and matrices.
//!
//! Polynomials are sums of terms `c*t^k` in the variable `t`, for example
//! `1 - 3*t + 2*t^2`. Coefficients use the ring's literal syntax (integers,
//! or `a/b` with `b` a unit). Whitespace is ignored; `*` may be omitted.
//! Matrices are written row by row: `[[1,1],[0,2]]`; `[]` is the empty matrix.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(String),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

impl Token {
    fn text(&self) -> String {
        match self {
            Token::Num(s) => s.clone(),
            Token::Var => "t".into(),
            Token::Plus => "+".into(),
            Token::Minus => "-".into(),
            Token::Star => "*".into(),
            Token::Slash => "/".into(),
            Token::Caret => "^".into(),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut num = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        num.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Num(num));
            }
            't' | 'T' => {
                chars.next();
                out.push(Token::Var);
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            other => return Err(Error::parse(other.to_string(), "unexpected character")),
        }
    }
    Ok(out)
}

struct TermParser<'a> {
    ring: RingSpec,
    tokens: &'a [Token],
    pos: usize,
}

impl TermParser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            Some(t) => Error::parse(t.text(), "unexpected token"),
            None => Error::parse("<end>", "unexpected end of input"),
        }
    }

    fn number(&mut self) -> Result<String> {
        match self.peek() {
            Some(Token::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.unexpected()),
        }
    }

    /// One signed term; returns (degree, coefficient).
    fn term(&mut self) -> Result<(usize, RingElement)> {
        let mut negative = false;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {}
                Token::Minus => negative = !negative,
                _ => break,
            }
            self.pos += 1;
        }
        let mut coeff = self.ring.one();
        let mut saw_coeff = false;
        if let Some(Token::Num(_)) = self.peek() {
            let num = self.number()?;
            let literal = if let Some(Token::Slash) = self.peek() {
                self.pos += 1;
                let den = self.number()?;
                format!("{num}/{den}")
            } else {
                num
            };
            coeff = self.ring.parse_element(&literal)?;
            saw_coeff = true;
            if let Some(Token::Star) = self.peek() {
                self.pos += 1;
                if self.peek() != Some(&Token::Var) {
                    return Err(self.unexpected());
                }
            }
        }
        let degree = if let Some(Token::Var) = self.peek() {
            self.pos += 1;
            if let Some(Token::Caret) = self.peek() {
                self.pos += 1;
                let e = self.number()?;
                e.parse::<usize>()
                    .map_err(|_| Error::parse(e.clone(), "exponent out of range"))?
            } else {
                1
            }
        } else if saw_coeff {
            0
        } else {
            return Err(self.unexpected());
        };
        if negative {
            coeff = -coeff;
        }
        Ok((degree, coeff))
    }
}

/// Parses a polynomial into dense coefficients `c_0, c_1, …` (like terms summed).
pub(crate) fn parse_dense(ring: RingSpec, s: &str) -> Result<Vec<RingElement>> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::parse("<end>", "empty polynomial"));
    }
    let mut p = TermParser {
        ring,
        tokens: &tokens,
        pos: 0,
    };
    let mut coeffs: Vec<RingElement> = Vec::new();
    loop {
        let (deg, c) = p.term()?;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, ring.zero());
        }
        coeffs[deg] = &coeffs[deg] + &c;
        match p.peek() {
            None => break,
            Some(Token::Plus) | Some(Token::Minus) => {}
            Some(_) => return Err(p.unexpected()),
        }
    }
    Ok(coeffs)
}

/// Like [`parse_dense`] but requires the constant term to be 1.
pub(crate) fn parse_unit_dense(ring: RingSpec, s: &str) -> Result<Vec<RingElement>> {
    let coeffs = parse_dense(ring, s)?;
    if !coeffs[0].is_one() {
        return Err(Error::parse(
            coeffs[0].to_string(),
            "constant term must be 1",
        ));
    }
    Ok(coeffs)
}

/// Formats dense coefficients `c_0, c_1, …` as `1 - 3*t + 2*t^2`.
pub(crate) fn format_dense(coeffs: &[RingElement]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (negative, magnitude) = if c.is_negative() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = magnitude.to_string();
        match (k, magnitude.is_one()) {
            (0, _) => out.push_str(&mag),
            (_, true) => {}
            _ => {
                let _ = write!(out, "{mag}*");
            }
        }
        match k {
            0 => {}
            1 => out.push('t'),
            _ => {
                let _ = write!(out, "t^{k}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits `(<poly>)/(<poly>)` into its parts; a bare polynomial yields no
/// denominator.
pub(crate) fn split_fraction(s: &str) -> Result<(&str, Option<&str>)> {
    let s = s.trim();
    if !s.starts_with('(') {
        return Ok((s, None));
    }
    let close = matching_paren(s, 0)?;
    let num = &s[1..close];
    let rest = s[close + 1..].trim_start();
    if rest.is_empty() {
        return Ok((num, None));
    }
    let rest = rest
        .strip_prefix('/')
        .ok_or_else(|| Error::parse(rest.chars().next().unwrap().to_string(), "expected `/`"))?
        .trim_start();
    if !rest.starts_with('(') {
        return Err(Error::parse(rest, "expected `(` to open the denominator"));
    }
    let close = matching_paren(rest, 0)?;
    let trailing = rest[close + 1..].trim();
    if !trailing.is_empty() {
        return Err(Error::parse(trailing, "trailing input after fraction"));
    }
    Ok((num, Some(&rest[1..close])))
}

fn matching_paren(s: &str, open: usize) -> Result<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices().skip(open) {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i);
                }
            }
            _ => {}
        }
    }
    Err(Error::parse("(", "unbalanced parenthesis"))
}

/// Parses `[[a,b],[c,d]]` into rows of ring elements.
pub(crate) fn parse_rows(ring: RingSpec, s: &str) -> Result<Vec<Vec<RingElement>>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(compact.clone(), "matrix must be enclosed in `[ ]`"))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    let mut rest = inner;
    loop {
        let body = rest
            .strip_prefix('[')
            .ok_or_else(|| Error::parse(rest.to_string(), "expected `[` to open a row"))?;
        let end = body
            .find(']')
            .ok_or_else(|| Error::parse(rest.to_string(), "unterminated row"))?;
        let row = &body[..end];
        if row.is_empty() {
            return Err(Error::parse("[]", "empty row"));
        }
        let entries = row
            .split(',')
            .map(|e| {
                if e.is_empty() {
                    Err(Error::parse(row, "empty entry"))
                } else {
                    ring.parse_element(e)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(entries);
        rest = &body[end + 1..];
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix(',')
            .ok_or_else(|| Error::parse(rest.to_string(), "expected `,` between rows"))?;
    }
    Ok(rows)
}
