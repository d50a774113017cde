//! Deterministic text and JSON renderings of multivectors.

use serde_json::{json, Value as Json};
use thiserror::Error;

use polymetric::expr::format_text;
use polymetric::{BasisTag, IndexSet, Multivector, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected text or json)")),
        }
    }
}

pub fn parse_basis(s: &str) -> Result<BasisTag, String> {
    match s {
        "grassmann" => Ok(BasisTag::Grassmann),
        "clifford" => Ok(BasisTag::Clifford),
        other => Err(format!("unknown basis {other:?} (expected grassmann or clifford)")),
    }
}

/// One evaluated value as emitted on standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub basis: BasisTag,
    pub n: usize,
    /// `(ascending indices, canonical coefficient)` by grade, then mask.
    pub terms: Vec<(Vec<usize>, String)>,
}

impl OutputRecord {
    pub fn from_multivector(mv: &Multivector) -> Self {
        OutputRecord {
            basis: mv.tag(),
            n: mv.dim(),
            terms: mv.terms().map(|(b, c)| (b.to_vec(), c.to_string())).collect(),
        }
    }

    /// Single-line JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let terms: Vec<Json> = self
            .terms
            .iter()
            .map(|(ix, c)| json!({"coeff": c, "indices": ix}))
            .collect();
        json!({"basis": self.basis.to_string(), "n": self.n, "terms": terms}).to_string()
    }

    pub fn from_json(text: &str) -> Result<Self, RecordError> {
        let doc: Json = serde_json::from_str(text).map_err(|e| RecordError(e.to_string()))?;
        let bad = |what: &str| RecordError(format!("bad or missing {what}"));
        let basis = doc["basis"]
            .as_str()
            .ok_or_else(|| bad("basis"))
            .and_then(|s| parse_basis(s).map_err(RecordError))?;
        let n = doc["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let terms = doc["terms"]
            .as_array()
            .ok_or_else(|| bad("terms"))?
            .iter()
            .map(|t| {
                let coeff = t["coeff"].as_str().ok_or_else(|| bad("coeff"))?.to_string();
                let indices = t["indices"]
                    .as_array()
                    .ok_or_else(|| bad("indices"))?
                    .iter()
                    .map(|i| i.as_u64().map(|i| i as usize).ok_or_else(|| bad("index")))
                    .collect::<Result<_, _>>()?;
                Ok((indices, coeff))
            })
            .collect::<Result<_, RecordError>>()?;
        Ok(OutputRecord { basis, n, terms })
    }

    pub fn to_multivector(&self) -> Result<Multivector, RecordError> {
        let terms = self
            .terms
            .iter()
            .map(|(ix, c)| {
                let blade = IndexSet::from_indices(ix).ok_or_else(|| RecordError(format!("bad blade {ix:?}")))?;
                let coeff: Scalar = c.parse().map_err(|e: polymetric::AlgebraError| RecordError(e.to_string()))?;
                Ok((blade, coeff))
            })
            .collect::<Result<Vec<_>, RecordError>>()?;
        Multivector::from_terms(self.n, self.basis, terms).map_err(|e| RecordError(e.to_string()))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid output record: {0}")]
pub struct RecordError(String);

pub fn render(mv: &Multivector, format: Format) -> String {
    match format {
        Format::Text => format_text(mv),
        Format::Json => OutputRecord::from_multivector(mv).to_json(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mv = Multivector::from_terms(
            3,
            BasisTag::Clifford,
            vec![
                (IndexSet::from_indices(&[1, 3]).unwrap(), Scalar::one()),
                (IndexSet::EMPTY, Scalar::ratio(-1, 2)),
            ],
        )
        .unwrap();
        let text = render(&mv, Format::Json);
        assert_eq!(
            text,
            r#"{"basis":"clifford","n":3,"terms":[{"coeff":"-1/2","indices":[]},{"coeff":"1","indices":[1,3]}]}"#
        );
        let back = OutputRecord::from_json(&text).unwrap().to_multivector().unwrap();
        assert_eq!(back, mv);
    }

    #[test]
    fn zero_record() {
        let z = Multivector::zero(2, BasisTag::Grassmann);
        assert_eq!(render(&z, Format::Text), "0");
        assert_eq!(render(&z, Format::Json), r#"{"basis":"grassmann","n":2,"terms":[]}"#);
    }

    #[test]
    fn malformed_records() {
        assert!(OutputRecord::from_json("{}").is_err());
        assert!(OutputRecord::from_json(r#"{"basis":"x","n":1,"terms":[]}"#).is_err());
        let r = OutputRecord::from_json(r#"{"basis":"grassmann","n":1,"terms":[{"coeff":"1","indices":[2]}]}"#).unwrap();
        assert!(r.to_multivector().is_err());
    }
}
