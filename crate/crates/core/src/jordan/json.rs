//! Structure-constant JSON format, shared by Jordan algebras and the
//! exported Lie algebras.  Round-trips are bit-exact: entries are kept in
//! canonical order and scalars serialized as canonical fraction strings.

use super::JordanAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Rational, SparseVec};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AlgebraJson {
    pub dim: usize,
    pub unit: Option<usize>,
    pub names: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<Vec<usize>>,
    /// entries (i, j, [[k, "p/q"], ...]) with i <= j for commutative tables
    /// and i < j for antisymmetric ones; zero products omitted
    pub products: Vec<(usize, usize, Vec<(usize, String)>)>,
}

pub fn sparse_to_json(v: &SparseVec) -> Vec<(usize, String)> {
    v.iter().map(|(k, x)| (*k, x.to_string())).collect()
}

pub(crate) fn sparse_from_json(v: &[(usize, String)]) -> Result<SparseVec> {
    let mut out = SparseVec::new();
    for (k, s) in v {
        let x: Rational = s.parse()?;
        if !x.is_zero() {
            out.push((*k, x));
        }
    }
    Ok(out)
}

impl JordanAlgebra {
    pub fn to_json(&self) -> AlgebraJson {
        let mut products = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let v = self.mul_basis(i, j);
                if !v.is_empty() {
                    products.push((i, j, sparse_to_json(v)));
                }
            }
        }
        AlgebraJson {
            dim: self.dim(),
            unit: Some(self.unit_index()),
            names: self.names().to_vec(),
            kind: Some("jordan".into()),
            grading: self.grading().map(|g| g.to_vec()),
            weights: None,
            augmentation: self.augmentation_indices().map(|a| a.to_vec()),
            products,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json(json: &AlgebraJson) -> Result<JordanAlgebra> {
        let unit = json
            .unit
            .ok_or_else(|| Error::InvalidAlgebra("jordan algebra needs a unit index".into()))?;
        let mut products = Vec::new();
        for (i, j, v) in &json.products {
            products.push((*i, *j, sparse_from_json(v)?));
        }
        JordanAlgebra::from_products(
            json.dim,
            unit,
            json.names.clone(),
            products,
            json.grading.clone(),
            json.augmentation.clone(),
        )
    }

    pub fn from_json_str(s: &str) -> Result<JordanAlgebra> {
        let json: AlgebraJson = serde_json::from_str(s)?;
        JordanAlgebra::from_json(&json)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{albert_algebra, sym3, truncated_polynomial};
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        for j in [truncated_polynomial(4), sym3(), albert_algebra()] {
            let s = j.to_json_string();
            let back = JordanAlgebra::from_json_str(&s).unwrap();
            assert_eq!(back, j);
            assert_eq!(back.to_json_string(), s);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let mut json = truncated_polynomial(3).to_json();
        json.unit = Some(7);
        assert!(JordanAlgebra::from_json(&json).is_err());
    }
}
