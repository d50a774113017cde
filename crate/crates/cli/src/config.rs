//! Session configuration files.
//!
//! ```json
//! {"n": 3, "field": "rational", "metrics": [[[1,0,0],[0,1,0],[0,0,-1]]], "allow_degenerate": false}
//! ```
//!
//! Metric entries are integers or `"p/q"` strings.

use std::path::{Path, PathBuf};

use serde_json::Value as Json;
use thiserror::Error;

use polymetric::{AlgebraError, FieldMode, Metric, PolymetricAlgebra, Scalar, MAX_DIM};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Syntax(String),
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> ConfigError {
    ConfigError::Invalid {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionConfig {
    pub n: usize,
    pub field: FieldMode,
    pub metrics: Vec<Metric>,
    pub allow_degenerate: bool,
}

impl SessionConfig {
    pub fn algebra(&self) -> PolymetricAlgebra {
        PolymetricAlgebra::new(self.n, self.field, self.metrics.clone()).expect("validated at load")
    }
}

pub fn load_config(path: &Path) -> Result<SessionConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<SessionConfig, ConfigError> {
    let doc: Json = serde_json::from_str(text).map_err(|e| ConfigError::Syntax(e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| invalid("$", "expected an object"))?;

    let n = obj
        .get("n")
        .ok_or_else(|| invalid("n", "missing"))?
        .as_u64()
        .ok_or_else(|| invalid("n", "expected a positive integer"))? as usize;
    if n == 0 || n > MAX_DIM {
        return Err(invalid("n", format!("{n} out of range 1..{MAX_DIM}")));
    }

    let field = match obj.get("field") {
        None => FieldMode::Rational,
        Some(Json::String(s)) => s.parse().map_err(|m: String| invalid("field", m))?,
        Some(_) => return Err(invalid("field", "expected \"rational\" or \"gaussian\"")),
    };

    let allow_degenerate = match obj.get("allow_degenerate") {
        None | Some(Json::Null) => false,
        Some(Json::Bool(b)) => *b,
        Some(_) => return Err(invalid("allow_degenerate", "expected a boolean")),
    };

    let metrics_json = match obj.get("metrics") {
        None => &[][..],
        Some(Json::Array(a)) => a.as_slice(),
        Some(_) => return Err(invalid("metrics", "expected an array of matrices")),
    };
    let metrics = metrics_json
        .iter()
        .enumerate()
        .map(|(k, m)| parse_metric(m, k, n, allow_degenerate))
        .collect::<Result<_, _>>()?;

    if let Some(key) = obj
        .keys()
        .find(|k| !matches!(k.as_str(), "n" | "field" | "metrics" | "allow_degenerate"))
    {
        return Err(invalid(key.as_str(), "unknown key"));
    }

    Ok(SessionConfig {
        n,
        field,
        metrics,
        allow_degenerate,
    })
}

fn parse_metric(m: &Json, k: usize, n: usize, allow_degenerate: bool) -> Result<Metric, ConfigError> {
    let here = format!("metrics[{k}]");
    let rows = m.as_array().ok_or_else(|| invalid(&here, "expected a matrix"))?;
    if rows.len() != n {
        return Err(invalid(&here, format!("expected {n} rows, found {}", rows.len())));
    }
    let mut parsed = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let at = format!("{here}[{i}]");
        let row = row.as_array().ok_or_else(|| invalid(&at, "expected a row"))?;
        if row.len() != n {
            return Err(invalid(&at, format!("expected {n} entries, found {}", row.len())));
        }
        let entries = row
            .iter()
            .enumerate()
            .map(|(j, x)| parse_entry(x).ok_or_else(|| invalid(format!("{at}[{j}]"), "expected an integer or \"p/q\"")))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(entries);
    }
    let built = if allow_degenerate {
        Metric::new_allow_degenerate(parsed)
    } else {
        Metric::new(parsed)
    };
    built.map_err(|e| match e {
        AlgebraError::NotSymmetric { i, j } => invalid(format!("{here}[{}][{}]", i - 1, j - 1), "not symmetric"),
        AlgebraError::Degenerate => invalid(&here, "degenerate (determinant is zero); set allow_degenerate to accept"),
        other => invalid(&here, other.to_string()),
    })
}

fn parse_entry(x: &Json) -> Option<Scalar> {
    match x {
        Json::Number(num) => num.as_i64().map(Scalar::from_i64),
        Json::String(s) => s.parse::<Scalar>().ok().filter(Scalar::is_real),
        _ => None,
    }
}
