//! Instance files: named spaces, products, and operators as UTF-8 JSON
//! with rationals serialized as strings (`"p/q"`, or `"p"` when the
//! denominator is one).
//!
//! Parsing rejects unknown fields and zero-dimensional spaces; serializing
//! always emits canonical rational strings and sorted names, so
//! parse -> serialize -> parse is the identity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Element, LatticeSpace, OrderKind};
use crate::matrix::RatMatrix;
use crate::operator::RegularOperator;
use crate::product::OrthoProduct;
use crate::rational::{parse_vector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderName {
    Coordinatewise,
    Lexicographic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDef {
    pub dim: usize,
    pub order: OrderName,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductDef {
    pub domain: SpaceDef,
    pub codomain: SpaceDef,
    /// `B[i][j]` as a codomain coordinate vector of rational strings.
    #[serde(rename = "B")]
    pub tensor: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDef {
    pub domain: SpaceDef,
    pub codomain: SpaceDef,
    /// Row-major rational strings; `matrix[r][c]` maps domain coordinate
    /// `c` into codomain coordinate `r`.
    pub matrix: Vec<Vec<String>>,
}

/// A whole instance file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct InstanceFile {
    pub spaces: BTreeMap<String, SpaceDef>,
    pub products: BTreeMap<String, ProductDef>,
    pub operators: BTreeMap<String, OperatorDef>,
}

impl SpaceDef {
    pub fn of(space: LatticeSpace) -> Self {
        SpaceDef {
            dim: space.dim(),
            order: match space.order() {
                OrderKind::Coordinatewise => OrderName::Coordinatewise,
                OrderKind::Lexicographic => OrderName::Lexicographic,
            },
        }
    }

    pub fn to_space(&self) -> Result<LatticeSpace> {
        if self.dim == 0 {
            return Err(Error::Parse("space dimension must be positive".into()));
        }
        Ok(match self.order {
            OrderName::Coordinatewise => LatticeSpace::coordinatewise(self.dim),
            OrderName::Lexicographic => LatticeSpace::lexicographic(self.dim),
        })
    }
}

fn element_strings(e: &Element) -> Vec<String> {
    e.coords().iter().map(Rational::to_string).collect()
}

impl ProductDef {
    pub fn of(p: &OrthoProduct) -> Self {
        let n = p.domain().dim();
        let tensor = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| element_strings(p.tensor_entry(i, j)))
                    .collect()
            })
            .collect();
        ProductDef {
            domain: SpaceDef::of(p.domain()),
            codomain: SpaceDef::of(p.codomain()),
            tensor,
        }
    }

    /// Builds the (unverified) product; axioms are checked separately.
    pub fn to_product(&self) -> Result<OrthoProduct> {
        let domain = self.domain.to_space()?;
        let codomain = self.codomain.to_space()?;
        if self.tensor.len() != domain.dim() {
            return Err(Error::Parse(format!(
                "tensor has {} rows, domain dimension is {}",
                self.tensor.len(),
                domain.dim()
            )));
        }
        let mut tensor = Vec::with_capacity(self.tensor.len());
        for row in &self.tensor {
            if row.len() != domain.dim() {
                return Err(Error::Parse(format!(
                    "tensor row has {} entries, domain dimension is {}",
                    row.len(),
                    domain.dim()
                )));
            }
            let converted: Result<Vec<Element>> = row
                .iter()
                .map(|entry| codomain.element(parse_vector(entry)?))
                .collect();
            tensor.push(converted?);
        }
        OrthoProduct::new(domain, codomain, tensor)
    }
}

impl OperatorDef {
    pub fn of(t: &RegularOperator) -> Self {
        let m = t.matrix();
        let matrix = (0..m.rows())
            .map(|r| m.row(r).iter().map(Rational::to_string).collect())
            .collect();
        OperatorDef {
            domain: SpaceDef::of(t.domain()),
            codomain: SpaceDef::of(t.codomain()),
            matrix,
        }
    }

    pub fn to_operator(&self) -> Result<RegularOperator> {
        let domain = self.domain.to_space()?;
        let codomain = self.codomain.to_space()?;
        let rows: Result<Vec<Vec<Rational>>> =
            self.matrix.iter().map(|r| parse_vector(r)).collect();
        let matrix = RatMatrix::from_rows(rows?)?;
        RegularOperator::new(domain, codomain, matrix)
    }
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "instance file at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    /// Canonical serialization: sorted names, two-space indentation, a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("instance files serialize");
        out.push('\n');
        out
    }

    pub fn product(&self, name: &str) -> Result<OrthoProduct> {
        self.products
            .get(name)
            .ok_or_else(|| Error::Parse(format!("no product named {name:?} in the instance file")))?
            .to_product()
    }

    pub fn operator(&self, name: &str) -> Result<RegularOperator> {
        self.operators
            .get(name)
            .ok_or_else(|| {
                Error::Parse(format!("no operator named {name:?} in the instance file"))
            })?
            .to_operator()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn sample_file() -> InstanceFile {
        let domain = LatticeSpace::coordinatewise(2);
        let codomain = LatticeSpace::coordinatewise(1);
        let product = OrthoProduct::diagonal(
            domain,
            codomain,
            vec![
                codomain.element(vec![rat_int(1)]).unwrap(),
                codomain.element(vec![crate::rational::rat(1, 2)]).unwrap(),
            ],
        )
        .unwrap();
        let operator = RegularOperator::from_matrix(RatMatrix::from_i64_rows(&[&[1, 2], &[2, 0]]));
        let mut file = InstanceFile::default();
        file.spaces.insert("L".into(), SpaceDef::of(domain));
        file.products.insert("p".into(), ProductDef::of(&product));
        file.operators
            .insert("T".into(), OperatorDef::of(&operator));
        file
    }

    #[test]
    fn round_trip_is_identity() {
        let file = sample_file();
        let text = file.to_json();
        let reparsed = InstanceFile::from_json(&text).unwrap();
        assert_eq!(reparsed, file);
        assert_eq!(reparsed.to_json(), text);
    }

    #[test]
    fn parsed_objects_reconstruct() {
        let file = sample_file();
        let p = file.product("p").unwrap();
        assert_eq!(p.domain().dim(), 2);
        let t = file.operator("T").unwrap();
        assert_eq!(t.matrix(), &RatMatrix::from_i64_rows(&[&[1, 2], &[2, 0]]));
        assert!(file.product("q").is_err());
        assert!(file.operator("S").is_err());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"spaces": {}, "products": {}, "operators": {}, "extra": 1}"#;
        assert!(InstanceFile::from_json(text).is_err());
        let text = r#"{"spaces": {"L": {"dim": 2, "order": "coordinatewise", "x": 0}}}"#;
        assert!(InstanceFile::from_json(text).is_err());
    }

    #[test]
    fn bad_rational_and_bad_dim_are_rejected() {
        let text = r#"{"operators": {"T": {"domain": {"dim": 1, "order": "coordinatewise"},
            "codomain": {"dim": 1, "order": "coordinatewise"}, "matrix": [["1/0"]]}}}"#;
        let file = InstanceFile::from_json(text).unwrap();
        assert!(file.operator("T").is_err());

        let text = r#"{"spaces": {"L": {"dim": 0, "order": "coordinatewise"}}}"#;
        let file = InstanceFile::from_json(text).unwrap();
        assert!(file.spaces["L"].to_space().is_err());
    }

    #[test]
    fn parse_error_carries_location() {
        let err = InstanceFile::from_json("{ not json").unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line 1")),
            other => panic!("expected a parse error, got {other}"),
        }
    }
}
