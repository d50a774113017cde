//! Recursive-descent parser.
//!
//! ```text
//! expr    := sum
//! sum     := prod { ("+"|"-") prod }
//! prod    := unary { ("^" | "*"[digits]) unary }
//! unary   := "-" unary | postfix
//! postfix := atom { "'" }
//! atom    := rational | "i" | "e" | "e(" indices ")" | "E(" indices ")"
//!          | ident | ident "(" expr {"," expr} ")" | "(" expr ")"
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::lexer::{Pos, Token, TokenKind};
use super::ExprError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    RationalLit(BigRational),
    ImagLit,
    /// Bare `e`.
    Identity,
    GrassmannBlade(Vec<usize>),
    CliffordBlade(Vec<usize>),
    VarRef(String),
    Neg(Box<Expr>),
    Conj(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
    CliffordMul(usize, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

impl Expr {
    fn new(kind: ExprKind, pos: Pos) -> Self {
        Expr { kind, pos }
    }
}

/// Fully parenthesized source text that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ix: &[usize]| ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        match &self.kind {
            ExprKind::RationalLit(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExprKind::RationalLit(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            ExprKind::ImagLit => f.write_str("i"),
            ExprKind::Identity => f.write_str("e"),
            ExprKind::GrassmannBlade(ix) => write!(f, "e({})", list(ix)),
            ExprKind::CliffordBlade(ix) => write!(f, "E({})", list(ix)),
            ExprKind::VarRef(name) => f.write_str(name),
            ExprKind::Neg(a) => write!(f, "-({a})"),
            ExprKind::Conj(a) => write!(f, "({a})'"),
            ExprKind::Add(a, b) => write!(f, "({a} + {b})"),
            ExprKind::Sub(a, b) => write!(f, "({a} - {b})"),
            ExprKind::Wedge(a, b) => write!(f, "({a} ^ {b})"),
            ExprKind::CliffordMul(k, a, b) => write!(f, "({a} *{k} {b})"),
            ExprKind::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

pub fn parse(tokens: &[Token]) -> Result<Expr, ExprError> {
    let mut p = Parser { tokens, idx: 0 };
    let e = p.sum()?;
    if p.idx < tokens.len() {
        return Err(p.unexpected(&["'+'", "'-'", "'^'", "'*'", "'''", "end of input"]));
    }
    Ok(e)
}

struct Parser<'t> {
    tokens: &'t [Token],
    idx: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.idx)
    }

    fn next(&mut self) -> Option<&'t Token> {
        let t = self.tokens.get(self.idx);
        self.idx += 1;
        t
    }

    fn end_pos(&self) -> Pos {
        match self.tokens.last() {
            Some(t) => Pos {
                line: t.pos.line,
                column: t.pos.column + t.lexeme.chars().count(),
            },
            None => Pos::START,
        }
    }

    fn unexpected(&self, expected: &[&str]) -> ExprError {
        let (pos, found) = match self.peek() {
            Some(t) => (t.pos, format!("{:?}", t.lexeme)),
            None => (self.end_pos(), "end of input".to_string()),
        };
        ExprError::Syntax {
            pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<&'t Token, ExprError> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                self.idx += 1;
                Ok(t)
            }
            _ => Err(self.unexpected(&[kind.describe()])),
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.prod()?;
        while let Some(t) = self.peek() {
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match t.kind {
                TokenKind::Plus => ExprKind::Add,
                TokenKind::Minus => ExprKind::Sub,
                _ => break,
            };
            self.idx += 1;
            let rhs = self.prod()?;
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), t.pos);
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(t) = self.peek() {
            let op = match t.kind {
                TokenKind::Wedge => None,
                TokenKind::Star(k) => Some(k.unwrap_or(1)),
                _ => break,
            };
            self.idx += 1;
            let rhs = Box::new(self.unary()?);
            let kind = match op {
                None => ExprKind::Wedge(Box::new(lhs), rhs),
                Some(k) => ExprKind::CliffordMul(k, Box::new(lhs), rhs),
            };
            lhs = Expr::new(kind, t.pos);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if let Some(t) = self.peek() {
            if t.kind == TokenKind::Minus {
                self.idx += 1;
                let inner = self.unary()?;
                return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), t.pos));
            }
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.atom()?;
        while let Some(t) = self.peek() {
            if t.kind != TokenKind::Prime {
                break;
            }
            self.idx += 1;
            e = Expr::new(ExprKind::Conj(Box::new(e)), t.pos);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        const ATOM_START: &[&str] = &["integer", "'i'", "'e'", "'e('", "'E('", "identifier", "'('", "'-'"];
        let Some(t) = self.peek() else {
            return Err(self.unexpected(ATOM_START));
        };
        match &t.kind {
            TokenKind::Int => self.rational(),
            TokenKind::ImagUnit => {
                self.idx += 1;
                Ok(Expr::new(ExprKind::ImagLit, t.pos))
            }
            TokenKind::BladeG | TokenKind::BladeC => {
                self.idx += 1;
                let indices = self.indices()?;
                let kind = if t.kind == TokenKind::BladeG {
                    ExprKind::GrassmannBlade(indices)
                } else {
                    ExprKind::CliffordBlade(indices)
                };
                Ok(Expr::new(kind, t.pos))
            }
            TokenKind::Ident => {
                self.idx += 1;
                if self.peek().is_some_and(|n| n.kind == TokenKind::LParen) {
                    self.idx += 1;
                    let mut args = vec![self.sum()?];
                    while self.peek().is_some_and(|n| n.kind == TokenKind::Comma) {
                        self.idx += 1;
                        args.push(self.sum()?);
                    }
                    if self.peek().is_none_or(|n| n.kind != TokenKind::RParen) {
                        return Err(self.unexpected(&["','", "')'"]));
                    }
                    self.idx += 1;
                    return Ok(Expr::new(ExprKind::Call(t.lexeme.clone(), args), t.pos));
                }
                let kind = if t.lexeme == "e" {
                    ExprKind::Identity
                } else {
                    ExprKind::VarRef(t.lexeme.clone())
                };
                Ok(Expr::new(kind, t.pos))
            }
            TokenKind::LParen => {
                self.idx += 1;
                let inner = self.sum()?;
                self.expect(TokenKind::RParen)?;
                Ok(inner)
            }
            _ => Err(self.unexpected(ATOM_START)),
        }
    }

    fn rational(&mut self) -> Result<Expr, ExprError> {
        let num_tok = self.expect(TokenKind::Int)?;
        let num: BigInt = num_tok.lexeme.parse().expect("lexer yields digits");
        let mut den = BigInt::from(1);
        if self.peek().is_some_and(|t| t.kind == TokenKind::Slash) {
            self.idx += 1;
            let den_tok = self.expect(TokenKind::Int)?;
            den = den_tok.lexeme.parse().expect("lexer yields digits");
            if den.is_zero() {
                return Err(ExprError::Syntax {
                    pos: den_tok.pos,
                    expected: vec!["nonzero denominator".into()],
                    found: "0".into(),
                });
            }
        }
        Ok(Expr::new(ExprKind::RationalLit(BigRational::new(num, den)), num_tok.pos))
    }

    /// Index list after `e(` / `E(`, through the closing paren.
    fn indices(&mut self) -> Result<Vec<usize>, ExprError> {
        let mut out = Vec::new();
        loop {
            let t = self.expect(TokenKind::Int)?;
            out.push(t.lexeme.parse().unwrap_or(usize::MAX));
            match self.next() {
                Some(t) if t.kind == TokenKind::Comma => continue,
                Some(t) if t.kind == TokenKind::RParen => return Ok(out),
                _ => {
                    self.idx -= 1;
                    return Err(self.unexpected(&["','", "')'"]));
                }
            }
        }
    }
}
