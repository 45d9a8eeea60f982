//! Matrix and form files. Field elements are written as exponents of the
//! primitive element, `-1` for zero.

use serde::{Deserialize, Serialize};

use super::field::{Elem, Field};
use super::forms::{FormKind, FormedSpace};
use super::linalg::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixSpec {
    pub field: u32,
    pub rows: Vec<Vec<i32>>,
}

fn encode(f: &Field, e: Elem) -> i32 {
    f.log(e).map_or(-1, |l| l as i32)
}

fn decode(f: &Field, i: i32) -> Result<Elem> {
    match i {
        -1 => Ok(0),
        i if i >= 0 && (i as u32) < f.order() - 1 => Ok(f.exp(i as usize)),
        _ => Err(Error::Matrix(format!("exponent {i} out of range for GF({})", f.order()))),
    }
}

impl MatrixSpec {
    pub fn from_matrix(m: &Matrix) -> Self {
        let f = m.field();
        MatrixSpec {
            field: f.order(),
            rows: m
                .to_elems()
                .into_iter()
                .map(|r| r.into_iter().map(|e| encode(f, e)).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let f = Field::get(self.field)?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&i| decode(f, i)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_elems(f, &rows)
    }
}

/// A formed space: the Gram matrix and, for quadratic kinds, the upper
/// triangular coefficient matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSpec {
    pub kind: FormKind,
    pub gram: MatrixSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quad: Option<MatrixSpec>,
}

impl FormSpec {
    pub fn from_space(v: &FormedSpace) -> Self {
        FormSpec {
            kind: v.kind(),
            gram: MatrixSpec::from_matrix(v.gram()),
            quad: v.quad().map(MatrixSpec::from_matrix),
        }
    }

    pub fn to_space(&self) -> Result<FormedSpace> {
        let quad = self.quad.as_ref().map(MatrixSpec::to_matrix).transpose()?;
        FormedSpace::new(self.kind, self.gram.to_matrix()?, quad)
    }
}

pub fn parse_matrix(json: &str) -> Result<Matrix> {
    serde_json::from_str::<MatrixSpec>(json)?.to_matrix()
}

pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string(&MatrixSpec::from_matrix(m)).expect("matrix serializes")
}
