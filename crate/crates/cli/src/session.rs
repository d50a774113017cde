//! Line-oriented evaluation shared by the REPL, `--eval`, and `--script`.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use polymetric::expr::{evaluate, parse_statement, Environment, ExprError, Pos, Statement, Value};
use polymetric::{BasisTag, Multivector};

use crate::config::SessionConfig;
use crate::output::{parse_basis, render, Format};

#[derive(Debug, Error)]
pub enum SessionError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Command(String),
}

#[derive(Debug, PartialEq, Eq)]
pub enum Outcome {
    Print(String),
    Silent,
    Quit,
}

pub struct Session {
    env: Environment,
    basis: BasisTag,
    metric: usize,
    format: Format,
}

impl Session {
    pub fn new(config: &SessionConfig) -> Self {
        Session {
            env: Environment::new(config.algebra()),
            basis: BasisTag::Grassmann,
            metric: 1,
            format: Format::Text,
        }
    }

    /// Output basis; `metric` selects whose Clifford basis is meant.
    pub fn set_basis(&mut self, basis: BasisTag, metric: usize) -> Result<(), SessionError> {
        if basis == BasisTag::Clifford {
            self.env
                .algebra()
                .metric(metric)
                .map_err(|e| SessionError::Command(e.to_string()))?;
        }
        self.basis = basis;
        self.metric = metric;
        Ok(())
    }

    pub fn set_format(&mut self, format: Format) {
        self.format = format;
    }

    /// The value as it would be displayed under the current settings.
    pub fn display_value(&self, value: &Value, pos: Pos) -> Result<Multivector, SessionError> {
        let alg = self.env.algebra();
        let shown = match self.basis {
            BasisTag::Grassmann => value.to_grassmann(alg, self.metric),
            BasisTag::Clifford => value.to_clifford(alg, self.metric),
        };
        shown.map_err(|e| SessionError::Expr(ExprError::Eval { pos, kind: e.into() }))
    }

    pub fn handle_line(&mut self, line: &str, lineno: usize) -> Result<Outcome, SessionError> {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return Ok(Outcome::Silent);
        }
        if let Some(cmd) = trimmed.strip_prefix(':') {
            return self.command(cmd);
        }
        let mode = self.env.algebra().field();
        match parse_statement(line, mode, lineno)? {
            Statement::Let { name, name_pos, expr } => {
                let value = evaluate(&expr, &self.env)?;
                self.env.bind(&name, value, name_pos)?;
                Ok(Outcome::Silent)
            }
            Statement::Expr(expr) => {
                let value = evaluate(&expr, &self.env)?;
                let shown = self.display_value(&value, expr.pos)?;
                Ok(Outcome::Print(render(&shown, self.format)))
            }
        }
    }

    fn command(&mut self, cmd: &str) -> Result<Outcome, SessionError> {
        let words: Vec<&str> = cmd.split_whitespace().collect();
        let usage = |u: &str| SessionError::Command(format!("usage: {u}"));
        match words.as_slice() {
            ["quit"] | ["q"] => Ok(Outcome::Quit),
            ["basis", b, rest @ ..] => {
                let basis = parse_basis(b).map_err(SessionError::Command)?;
                let metric = match rest {
                    [] => 1,
                    [k] => k.parse().map_err(|_| usage(":basis grassmann|clifford [k]"))?,
                    _ => return Err(usage(":basis grassmann|clifford [k]")),
                };
                self.set_basis(basis, metric)?;
                Ok(Outcome::Silent)
            }
            ["format", f] => {
                self.format = f.parse().map_err(SessionError::Command)?;
                Ok(Outcome::Silent)
            }
            ["metrics"] => {
                let alg = self.env.algebra();
                if alg.metric_count() == 0 {
                    return Ok(Outcome::Print("no metrics (exterior algebra only)".into()));
                }
                let blocks: Vec<String> = alg
                    .metrics()
                    .iter()
                    .enumerate()
                    .map(|(k, g)| format!("g{}:\n{g}", k + 1))
                    .collect();
                Ok(Outcome::Print(blocks.join("\n")))
            }
            _ => Err(SessionError::Command(format!(
                "unknown command :{cmd} (try :basis, :format, :metrics, :quit)"
            ))),
        }
    }
}

/// Runs an interactive loop until `:quit` or end of input. Errors are
/// reported on `err` and the session continues.
pub fn run_repl<R: BufRead, W: Write, E: Write>(
    session: &mut Session,
    input: R,
    mut out: W,
    mut err: E,
    prompt: bool,
) -> io::Result<()> {
    let mut lines = input.lines();
    let mut lineno = 0;
    loop {
        if prompt {
            write!(out, "> ")?;
            out.flush()?;
        }
        let Some(line) = lines.next() else { break };
        let line = line?;
        lineno += 1;
        match session.handle_line(&line, lineno) {
            Ok(Outcome::Print(s)) => writeln!(out, "{s}")?,
            Ok(Outcome::Silent) => {}
            Ok(Outcome::Quit) => break,
            Err(e) => writeln!(err, "error: {e}")?,
        }
    }
    Ok(())
}

/// Evaluates every line of `source`, stopping at the first error.
pub fn run_script<W: Write>(session: &mut Session, source: &str, out: &mut W) -> Result<(), SessionError> {
    for (i, line) in source.lines().enumerate() {
        match session.handle_line(line, i + 1)? {
            Outcome::Print(s) => writeln!(out, "{s}").map_err(|e| SessionError::Command(e.to_string()))?,
            Outcome::Silent => {}
            Outcome::Quit => break,
        }
    }
    Ok(())
}
