use std::fmt;

use crate::polymetric::FieldMode;

use super::ExprError;

/// 1-based source location.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub const START: Pos = Pos { line: 1, column: 1 };
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Int,
    Slash,
    Plus,
    Minus,
    Wedge,
    /// `*` with an optional metric suffix, e.g. `*2`.
    Star(Option<usize>),
    Prime,
    LParen,
    RParen,
    Comma,
    Ident,
    /// `e(`
    BladeG,
    /// `E(`
    BladeC,
    ImagUnit,
}

impl TokenKind {
    pub fn describe(&self) -> &'static str {
        match self {
            TokenKind::Int => "integer",
            TokenKind::Slash => "'/'",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Wedge => "'^'",
            TokenKind::Star(_) => "'*'",
            TokenKind::Prime => "'''",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::Comma => "','",
            TokenKind::Ident => "identifier",
            TokenKind::BladeG => "'e('",
            TokenKind::BladeC => "'E('",
            TokenKind::ImagUnit => "'i'",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub pos: Pos,
}

pub fn tokenize(source: &str, mode: FieldMode) -> Result<Vec<Token>, ExprError> {
    tokenize_from(source, mode, Pos::START)
}

/// Tokenizes `source` as if it began at `start`.
pub fn tokenize_from(source: &str, mode: FieldMode, start: Pos) -> Result<Vec<Token>, ExprError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut pos = start;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let here = pos;
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            pos.column += 1;
            i += 1;
            continue;
        }
        let begin = i;
        let kind = match c {
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                TokenKind::Int
            }
            '*' => {
                i += 1;
                let digits_start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits_start {
                    TokenKind::Star(None)
                } else {
                    let digits: String = chars[digits_start..i].iter().collect();
                    let k = digits.parse().map_err(|_| ExprError::Lex {
                        pos: here,
                        message: format!("metric suffix {digits} is too large"),
                    })?;
                    TokenKind::Star(Some(k))
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[begin..i].iter().collect();
                let paren_next = chars.get(i) == Some(&'(');
                match word.as_str() {
                    "e" if paren_next => {
                        i += 1;
                        TokenKind::BladeG
                    }
                    "E" if paren_next => {
                        i += 1;
                        TokenKind::BladeC
                    }
                    "i" if mode == FieldMode::Gaussian => TokenKind::ImagUnit,
                    _ => TokenKind::Ident,
                }
            }
            _ => {
                i += 1;
                match c {
                    '/' => TokenKind::Slash,
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    '^' => TokenKind::Wedge,
                    '\'' => TokenKind::Prime,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    ',' => TokenKind::Comma,
                    other => {
                        return Err(ExprError::Lex {
                            pos: here,
                            message: format!("unexpected character {other:?}"),
                        })
                    }
                }
            }
        };
        pos.column += i - begin;
        tokens.push(Token {
            kind,
            lexeme: chars[begin..i].iter().collect(),
            pos: here,
        });
    }
    Ok(tokens)
}
