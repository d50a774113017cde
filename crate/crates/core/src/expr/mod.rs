//! A small expression language over a [`PolymetricAlgebra`](crate::PolymetricAlgebra).
//!
//! `^` is the exterior product, `*k` the Clifford product for metric `g_k`
//! (bare `*` is `*1`), postfix `'` is pseudo-Hermitian conjugation. `e(…)`
//! builds a Grassmann blade from any index order, `E(…)` a Clifford blade
//! from strictly ascending indices, and bare `e` is the identity.

mod display;
mod eval;
mod lexer;
mod parser;

use thiserror::Error;

use crate::error::AlgebraError;
use crate::polymetric::FieldMode;

pub use display::format_text;
pub use eval::{evaluate, Environment, Value};
pub use lexer::{tokenize, tokenize_from, Pos, Token, TokenKind};
pub use parser::{parse, Expr, ExprKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalErrorKind {
    #[error("unbound variable {0}")]
    Unbound(String),
    #[error("{0} is already bound")]
    AlreadyBound(String),
    #[error("E(...) needs strictly ascending distinct indices, got {0:?}")]
    CliffordOrder(Vec<usize>),
    #[error("{0}: argument must be an integer literal")]
    NotIntegerLiteral(String),
    #[error("unknown function {0}")]
    UnknownFunction(String),
    #[error("{func} takes {expected} argument(s), got {found}")]
    Arity {
        func: String,
        expected: String,
        found: usize,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("{pos}: {message}")]
    Lex { pos: Pos, message: String },
    #[error("{pos}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        pos: Pos,
        expected: Vec<String>,
        found: String,
    },
    #[error("{pos}: {kind}")]
    Eval { pos: Pos, kind: EvalErrorKind },
}

impl ExprError {
    pub(crate) fn eval(pos: Pos, kind: EvalErrorKind) -> Self {
        ExprError::Eval { pos, kind }
    }

    pub(crate) fn algebra(pos: Pos, err: AlgebraError) -> Self {
        ExprError::Eval {
            pos,
            kind: EvalErrorKind::Algebra(err),
        }
    }

    pub fn pos(&self) -> Pos {
        match self {
            ExprError::Lex { pos, .. } | ExprError::Syntax { pos, .. } | ExprError::Eval { pos, .. } => *pos,
        }
    }
}

/// One line of a script or REPL session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Let { name: String, name_pos: Pos, expr: Expr },
    Expr(Expr),
}

/// Tokenizes and parses one expression.
pub fn parse_expr(source: &str, mode: FieldMode) -> Result<Expr, ExprError> {
    parse(&tokenize(source, mode)?)
}

/// Parses `let name = expr` or a bare expression on line `line`.
pub fn parse_statement(source: &str, mode: FieldMode, line: usize) -> Result<Statement, ExprError> {
    let start = Pos { line, column: 1 };
    let lead = source.len() - source.trim_start().len();
    let rest = &source[lead..];
    let is_let = rest.strip_prefix("let").is_some_and(|r| r.starts_with(char::is_whitespace));
    if !is_let {
        return Ok(Statement::Expr(parse(&tokenize_from(source, mode, start)?)?));
    }
    let col = |byte_off: usize| Pos {
        line,
        column: source[..byte_off].chars().count() + 1,
    };
    let after_let = lead + 3;
    let name_off = after_let + (source[after_let..].len() - source[after_let..].trim_start().len());
    let name_len = source[name_off..]
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .unwrap_or(source.len() - name_off);
    let name = &source[name_off..name_off + name_len];
    let valid_name = name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') && name != "e" && name != "E";
    if !valid_name {
        return Err(ExprError::Syntax {
            pos: col(name_off),
            expected: vec!["identifier".into()],
            found: format!("{:?}", &source[name_off..name_off + name_len.max(1).min(source.len() - name_off)]),
        });
    }
    let eq_off = name_off + name_len + (source[name_off + name_len..].len() - source[name_off + name_len..].trim_start().len());
    if !source[eq_off..].starts_with('=') {
        return Err(ExprError::Syntax {
            pos: col(eq_off),
            expected: vec!["'='".into()],
            found: source[eq_off..].chars().next().map_or("end of input".into(), |c| format!("{c:?}")),
        });
    }
    let body_off = eq_off + 1;
    let tokens = tokenize_from(&source[body_off..], mode, col(body_off))?;
    Ok(Statement::Let {
        name: name.to_string(),
        name_pos: col(name_off),
        expr: parse(&tokens)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn let_statements() {
        let s = parse_statement("let x = e(1) + 2", FieldMode::Rational, 3).unwrap();
        let Statement::Let { name, name_pos, expr } = s else { panic!() };
        assert_eq!(name, "x");
        assert_eq!(name_pos, Pos { line: 3, column: 5 });
        assert_eq!(expr.pos, Pos { line: 3, column: 14 });

        let s = parse_statement("  letter + 1", FieldMode::Rational, 1).unwrap();
        assert!(matches!(s, Statement::Expr(_)));

        let err = parse_statement("let x e(1)", FieldMode::Rational, 1).unwrap_err();
        assert_eq!(err.pos(), Pos { line: 1, column: 7 });
        assert!(parse_statement("let 1 = 2", FieldMode::Rational, 1).is_err());
        assert!(parse_statement("let e = 2", FieldMode::Rational, 1).is_err());
    }

    #[test]
    fn error_messages() {
        let err = parse_expr("e(1", FieldMode::Rational).unwrap_err();
        assert_eq!(err.to_string(), "1:4: expected ',' or ')', found end of input");
    }
}
