//! The matrix document: the JSON input/output schema of the tool.
//!
//! Top-level keys: `field` (`"Q"` or `"F"` followed by a prime),
//! `variables` (exactly three names), `matrix` (an odd-size square
//! array of polynomial strings). Unknown keys are tolerated, so witness
//! files carrying extra metadata remain valid inputs. Validation errors
//! name the offending cell.

use std::fmt;

use gortrim::parse::ParseError;
use gortrim::pfaffian::PfaffianError;
use gortrim::poly::Poly;
use gortrim::ring::Ring;
use gortrim::scalar::Domain;
use gortrim::{PolyMatrix, SkewMatrix};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixDocument {
    pub field: String,
    pub variables: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessInfo>,
}

/// Metadata attached to documents emitted by the search command.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessInfo {
    pub trial: u64,
    pub trim: Vec<usize>,
    pub t: usize,
    pub class: String,
    pub seed: u64,
}

#[derive(Debug)]
pub enum DocumentError {
    Json(serde_json::Error),
    BadField(String),
    BadVariables(String),
    BadShape(String),
    Cell { row: usize, col: usize, error: ParseError },
    Structure(PfaffianError),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Json(e) => write!(f, "document is not valid JSON: {}", e),
            DocumentError::BadField(s) => write!(f, "unrecognized field {:?} (use \"Q\" or \"F<prime>\")", s),
            DocumentError::BadVariables(s) => write!(f, "bad variable list: {}", s),
            DocumentError::BadShape(s) => write!(f, "bad matrix shape: {}", s),
            DocumentError::Cell { row, col, error } => {
                write!(f, "matrix cell ({},{}): {}", row, col, error)
            }
            DocumentError::Structure(e) => write!(f, "matrix is not a valid skew presenter: {}", e),
        }
    }
}

impl std::error::Error for DocumentError {}

/// Parses a field name: `"Q"`, or `"F"` followed by a prime.
pub fn parse_field(name: &str) -> Result<Domain, DocumentError> {
    let name = name.trim();
    if name == "Q" {
        return Ok(Domain::Rational);
    }
    if let Some(ptext) = name.strip_prefix('F') {
        if let Ok(p) = ptext.parse::<u64>() {
            return Domain::prime(p).map_err(|_| DocumentError::BadField(name.to_string()));
        }
    }
    Err(DocumentError::BadField(name.to_string()))
}

pub fn field_name(domain: Domain) -> String {
    match domain {
        Domain::Prime(p) => format!("F{}", p),
        Domain::Rational => "Q".to_string(),
        Domain::Integer => "Z".to_string(),
    }
}

impl MatrixDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(DocumentError::Json)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_presenter(t: &SkewMatrix) -> Self {
        let m = t.size();
        MatrixDocument {
            field: field_name(t.ring().domain()),
            variables: t.ring().variables().to_vec(),
            matrix: (1..=m)
                .map(|i| (1..=m).map(|j| t.entry(i, j).to_string()).collect())
                .collect(),
            witness: None,
        }
    }

    pub fn ring(&self) -> Result<Ring, DocumentError> {
        let domain = parse_field(&self.field)?;
        if self.variables.len() != 3 {
            return Err(DocumentError::BadVariables(format!(
                "expected exactly 3 variables, got {}",
                self.variables.len()
            )));
        }
        let names: Vec<&str> = self.variables.iter().map(|s| s.as_str()).collect();
        Ring::new(domain, &names).map_err(|e| DocumentError::BadVariables(e.to_string()))
    }

    /// Validates the document into a skew presenter; errors name the
    /// offending cell.
    pub fn to_presenter(&self) -> Result<SkewMatrix, DocumentError> {
        let ring = self.ring()?;
        let m = self.matrix.len();
        if m == 0 {
            return Err(DocumentError::BadShape("matrix is empty".to_string()));
        }
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != m {
                return Err(DocumentError::BadShape(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    m
                )));
            }
        }
        let mut entries = Vec::with_capacity(m * m);
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, text) in row.iter().enumerate() {
                let p: Poly = gortrim::parse_poly(text, &ring).map_err(|error| {
                    DocumentError::Cell { row: i + 1, col: j + 1, error }
                })?;
                entries.push(p);
            }
        }
        let pm = PolyMatrix::new(m, m, &ring, entries)
            .map_err(|e| DocumentError::BadShape(e.to_string()))?;
        SkewMatrix::new(pm).map_err(DocumentError::Structure)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_doc() -> MatrixDocument {
        MatrixDocument::from_presenter(&gortrim::example::presenter())
    }

    #[test]
    fn document_roundtrip() {
        let doc = example_doc();
        let text = doc.to_json();
        let back = MatrixDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(
            back.to_presenter().unwrap(),
            gortrim::example::presenter()
        );
    }

    #[test]
    fn field_parsing() {
        assert_eq!(parse_field("Q").unwrap(), Domain::Rational);
        assert_eq!(parse_field("F2").unwrap(), Domain::prime(2).unwrap());
        assert_eq!(parse_field("F101").unwrap(), Domain::prime(101).unwrap());
        assert!(parse_field("F4").is_err());
        assert!(parse_field("GF(2)").is_err());
        assert!(parse_field("Z").is_err());
    }

    #[test]
    fn cell_errors_are_located() {
        let mut doc = example_doc();
        doc.matrix[1][2] = "x + nope".to_string();
        match doc.to_presenter() {
            Err(DocumentError::Cell { row: 2, col: 3, .. }) => {}
            other => panic!("expected a located cell error, got {:?}", other),
        }
    }

    #[test]
    fn structural_errors_surface() {
        let mut doc = example_doc();
        doc.matrix[0][1] = "x".to_string(); // breaks skew-symmetry
        assert!(matches!(
            doc.to_presenter(),
            Err(DocumentError::Structure(PfaffianError::NotSkew { .. }))
        ));

        let mut doc = example_doc();
        doc.matrix[0][0] = "1".to_string();
        assert!(matches!(
            doc.to_presenter(),
            Err(DocumentError::Structure(_))
        ));
    }

    #[test]
    fn unknown_keys_are_tolerated() {
        let mut json: serde_json::Value = serde_json::from_str(&example_doc().to_json()).unwrap();
        json["comment"] = serde_json::json!("hand edit");
        let doc = MatrixDocument::from_json(&json.to_string()).unwrap();
        assert!(doc.to_presenter().is_ok());
    }
}
