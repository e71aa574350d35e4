//! Ring expressions.
//!
//! ```text
//! expr  := atom (("x" | "×" | "*") atom)*
//! atom  := "Z" int
//!        | "Z" int "[x]/(" poly ")"
//!        | "F" int | "GF(" int ")"
//!        | "@" name
//!        | "table:" path
//! poly  := term ("+" term)*
//! term  := int | "x" | "x^" int | int "x" | int "*x" | int "x^" int | int "*x^" int
//! ```
//!
//! Whitespace between tokens is ignored. `F q` needs `q` to be a prime power.
//! Catalog names use letters, digits, `-` and `_` (lowercase `x` is reserved
//! as the product sign). A `table:` path runs to the next whitespace.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{self, catalog, poly, Ring, RingBuilder};

/// Grammar summary printed by `--help`.
pub const GRAMMAR: &str = "\
RING EXPRESSIONS
  expr  := atom ((\"x\" | \"×\" | \"*\") atom)*
  atom  := \"Z\"n | \"Z\"m\"[x]/(\"poly\")\" | \"F\"q | \"GF(\"q\")\" | \"@\"name | \"table:\"path
  poly  := term (\"+\" term)*
  term  := c | x | x^e | cx | c*x | cx^e | c*x^e
  Z n is the integers mod n (n >= 2). F q and GF(q) are the field of order q
  (q a prime power). Z m[x]/(f) needs f monic after reduction mod m.
  @name is a shipped structure-constant ring; table:path loads one from JSON.
  Whitespace between tokens is ignored. Products are flat and keep factor order.";

/// Byte range in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Zn(u64),
    Gf { p: u64, k: usize },
    /// Dense coefficients, constant term first, like terms combined.
    Quotient { m: u64, poly: Vec<u64> },
    Catalog(String),
    TableFile(String),
    Product(Vec<RingExpr>),
}

/// Parsed ring expression. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct RingExpr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for RingExpr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for RingExpr {}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Zn(n) => write!(f, "Z{n}"),
            ExprKind::Gf { p, k } => write!(f, "F{}", p.pow(*k as u32)),
            ExprKind::Quotient { m, poly } => {
                write!(f, "Z{m}[x]/({})", poly::render(poly, "x"))
            }
            ExprKind::Catalog(name) => write!(f, "@{name}"),
            ExprKind::TableFile(path) => write!(f, "table:{path}"),
            ExprKind::Product(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}

impl RingExpr {
    /// Factors of a product, or the expression itself.
    pub fn factors(&self) -> Vec<&RingExpr> {
        match &self.kind {
            ExprKind::Product(parts) => parts.iter().collect(),
            _ => vec![self],
        }
    }
}

pub fn parse_ring(text: &str) -> Result<RingExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(expr)
}

/// Builds the ring an expression describes.
pub fn resolve(expr: &RingExpr, builder: &RingBuilder) -> Result<Ring> {
    match &expr.kind {
        ExprKind::Product(parts) => {
            let factors = parts
                .iter()
                .map(|p| resolve(p, builder))
                .collect::<Result<Vec<_>>>()?;
            builder.product(&factors).map_err(|e| with_span(expr, e))
        }
        _ => resolve_atom(expr, builder),
    }
}

/// Resolves each factor separately; usable when the product exceeds the cap.
pub fn resolve_factors(expr: &RingExpr, builder: &RingBuilder) -> Result<Vec<Ring>> {
    expr.factors()
        .into_iter()
        .map(|e| resolve(e, builder))
        .collect()
}

/// Parses and resolves with the default cap.
pub fn ring(text: &str) -> Result<Ring> {
    resolve(&parse_ring(text)?, &RingBuilder::default())
}

fn resolve_atom(expr: &RingExpr, builder: &RingBuilder) -> Result<Ring> {
    let built = match &expr.kind {
        ExprKind::Zn(n) => builder.zn(*n),
        ExprKind::Gf { p, k } => builder.gf(*p, *k),
        ExprKind::Quotient { m, poly } => builder.quotient(*m, poly),
        ExprKind::Catalog(name) => catalog::load_with(builder, name),
        ExprKind::TableFile(path) => catalog::load_file(builder, std::path::Path::new(path)),
        ExprKind::Product(_) => unreachable!("handled by resolve"),
    };
    built.map_err(|e| match e {
        // keep the catalog listing intact
        e @ Error::UnknownCatalog { .. } => e,
        e => with_span(expr, e),
    })
}

fn with_span(expr: &RingExpr, e: Error) -> Error {
    if let Error::Resolve { .. } = e {
        return e;
    }
    Error::Resolve {
        msg: e.to_string(),
        text: expr.to_string(),
        start: expr.span.start,
        end: expr.span.end,
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Consumes `tok` after optional whitespace.
    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{tok}'")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        self.pos += len;
        self.src[start..self.pos].parse::<u64>().map_err(|_| Error::Parse {
            pos: start,
            msg: "integer out of range".into(),
        })
    }

    fn at_digit(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let first = self.atom()?;
        let mut parts = vec![first];
        loop {
            let save = self.pos;
            if self.eat("x") || self.eat("×") || self.eat("*") {
                parts.push(self.atom()?);
            } else {
                self.pos = save;
                break;
            }
        }
        if parts.len() == 1 {
            return Ok(parts.pop().unwrap());
        }
        let span = Span {
            start: parts[0].span.start,
            end: parts[parts.len() - 1].span.end,
        };
        Ok(RingExpr {
            kind: ExprKind::Product(parts),
            span,
        })
    }

    fn atom(&mut self) -> Result<RingExpr> {
        self.skip_ws();
        let start = self.pos;
        let kind = if self.eat("GF(") {
            let q = self.int()?;
            let kind = self.field(q, start)?;
            self.expect(")")?;
            kind
        } else if self.eat("F") {
            let q = self.int()?;
            self.field(q, start)?
        } else if self.eat("Z") {
            let n = self.int()?;
            if n == 0 {
                return Err(Error::Parse {
                    pos: start,
                    msg: "modulus must be positive".into(),
                });
            }
            if self.eat("[") {
                self.expect("x")?;
                self.expect("]")?;
                self.expect("/")?;
                self.expect("(")?;
                let poly = self.poly()?;
                self.expect(")")?;
                ExprKind::Quotient { m: n, poly }
            } else {
                ExprKind::Zn(n)
            }
        } else if self.eat("@") {
            let len: usize = self
                .rest()
                .chars()
                .take_while(|&c| (c.is_ascii_alphanumeric() && c != 'x') || c == '-' || c == '_')
                .map(char::len_utf8)
                .sum();
            if len == 0 {
                return Err(self.error("expected a catalog name after '@'"));
            }
            let name = self.rest()[..len].to_string();
            self.pos += len;
            ExprKind::Catalog(name)
        } else if self.eat("table:") {
            let len: usize = self
                .rest()
                .chars()
                .take_while(|c| !c.is_whitespace())
                .map(char::len_utf8)
                .sum();
            if len == 0 {
                return Err(self.error("expected a path after 'table:'"));
            }
            let path = self.rest()[..len].to_string();
            self.pos += len;
            ExprKind::TableFile(path)
        } else {
            return Err(self.error("expected a ring: Z<n>, F<q>, GF(<q>), Z<m>[x]/(<poly>), @<name> or table:<path>"));
        };
        Ok(RingExpr {
            kind,
            span: Span {
                start,
                end: self.pos,
            },
        })
    }

    fn field(&self, q: u64, start: usize) -> Result<ExprKind> {
        match ring::prime_power(q) {
            Some((p, k)) => Ok(ExprKind::Gf { p, k }),
            None => Err(Error::Parse {
                pos: start,
                msg: format!("F{q}: {q} is not a prime power"),
            }),
        }
    }

    fn poly(&mut self) -> Result<Vec<u64>> {
        let mut coeffs: Vec<u64> = Vec::new();
        loop {
            let (c, e) = self.term()?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = coeffs[e]
                .checked_add(c)
                .ok_or_else(|| self.error("coefficient out of range"))?;
            if !self.eat("+") {
                break;
            }
        }
        Ok(poly::trim(coeffs))
    }

    /// One term as `(coefficient, exponent)`.
    fn term(&mut self) -> Result<(u64, usize)> {
        let coeff = if self.at_digit() {
            let c = self.int()?;
            let save = self.pos;
            if self.eat("*") {
                self.skip_ws();
                if self.peek() != Some('x') {
                    return Err(self.error("expected 'x' after '*'"));
                }
            } else {
                self.skip_ws();
                if self.peek() != Some('x') {
                    self.pos = save;
                    return Ok((c, 0));
                }
            }
            c
        } else {
            1
        };
        self.expect("x")?;
        let exp = if self.eat("^") {
            let e = self.int()?;
            if e > 64 {
                return Err(self.error("exponent too large"));
            }
            e as usize
        } else {
            1
        };
        Ok((coeff, exp))
    }
}
