//! Character tables: ingestion, validation and column queries.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableClass {
    pub name: String,
    pub size: u64,
    pub element_order: u64,
    /// Prime `p` to the index of the class of `p`-th powers.
    #[serde(rename = "powermap", default)]
    pub power_maps: BTreeMap<u32, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTable {
    #[serde(rename = "group")]
    pub group_name: String,
    pub order: u64,
    pub classes: Vec<TableClass>,
    /// Rows are characters, columns follow `classes`.
    pub irreducibles: Vec<Vec<Cyclotomic>>,
}

fn reject(msg: impl Into<String>) -> Error {
    Error::TableRejected(msg.into())
}

fn int(v: u64) -> Cyclotomic {
    Cyclotomic::from_rational(Rational::from_integer(BigInt::from(v)))
}

const SHIPPED: &[(&str, &str)] = &[
    ("S3", include_str!("../../data/tables/S3.json")),
    ("S4", include_str!("../../data/tables/S4.json")),
    ("A5", include_str!("../../data/tables/A5.json")),
    ("PSL2(7)", include_str!("../../data/tables/PSL2_7.json")),
    ("M11", include_str!("../../data/tables/M11.json")),
];

/// Names of the tables bundled with the crate.
pub fn shipped_names() -> Vec<&'static str> {
    SHIPPED.iter().map(|(n, _)| *n).collect()
}

/// A bundled table, validated on load.
pub fn shipped(name: &str) -> Result<CharacterTable> {
    let (_, text) = SHIPPED
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
    ingest_table(text)
}

/// Parses a table and checks every invariant; any failure rejects it.
pub fn ingest_table(json: &str) -> Result<CharacterTable> {
    let t: CharacterTable = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    t.validate()?;
    Ok(t)
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.irreducibles[chi][0]
            .to_integer()
            .and_then(|d| u64::try_from(d).ok())
            .expect("validated degree")
    }

    pub fn value(&self, chi: usize, k: usize) -> &Cyclotomic {
        &self.irreducibles[chi][k]
    }

    pub fn centralizer_order(&self, k: usize) -> u64 {
        self.order / self.classes[k].size
    }

    /// Class of inverses: the column equal to the conjugate of column `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        let conj: Vec<Cyclotomic> = self.irreducibles.iter().map(|row| row[k].conj()).collect();
        (0..self.len())
            .find(|&j| self.irreducibles.iter().zip(&conj).all(|(row, c)| &row[j] == c))
            .expect("validated table is closed under conjugation")
    }

    /// True when the class is closed under inversion.
    pub fn real_class(&self, k: usize) -> bool {
        self.irreducibles.iter().all(|row| row[k].conj() == row[k])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    /// Checks shape, class sizes, degrees, both orthogonality relations and
    /// power maps.
    pub fn validate(&self) -> Result<()> {
        let h = self.len();
        if h == 0 {
            return Err(reject("no classes"));
        }
        if self.irreducibles.len() != h {
            return Err(reject(format!("{} characters for {h} classes", self.irreducibles.len())));
        }
        if let Some(i) = self.irreducibles.iter().position(|r| r.len() != h) {
            return Err(reject(format!("character {i} has {} values", self.irreducibles[i].len())));
        }
        let first = &self.classes[0];
        if first.size != 1 || first.element_order != 1 {
            return Err(reject("first class must be the identity"));
        }
        let mut total = 0u64;
        for c in &self.classes {
            if c.size == 0 || self.order % c.size != 0 {
                return Err(reject(format!("class {} size {} does not divide {}", c.name, c.size, self.order)));
            }
            if c.element_order == 0 || self.order % c.element_order != 0 {
                return Err(reject(format!("class {} has element order {}", c.name, c.element_order)));
            }
            total += c.size;
        }
        if total != self.order {
            return Err(reject(format!("class sizes sum to {total}, not {}", self.order)));
        }

        let mut degree_squares = BigInt::zero();
        for (i, row) in self.irreducibles.iter().enumerate() {
            match row[0].to_integer() {
                Some(d) if d.is_positive() => degree_squares += &d * &d,
                _ => return Err(reject(format!("character {i} has degree {}", row[0]))),
            }
        }
        if degree_squares != BigInt::from(self.order) {
            return Err(reject(format!("squared degrees sum to {degree_squares}, not {}", self.order)));
        }

        let conj: Vec<Vec<Cyclotomic>> = self
            .irreducibles
            .iter()
            .map(|r| r.iter().map(Cyclotomic::conj).collect())
            .collect();
        let sizes: Vec<Cyclotomic> = self.classes.iter().map(|c| int(c.size)).collect();
        for i in 0..h {
            for j in i..h {
                let s: Cyclotomic = (0..h)
                    .map(|k| &sizes[k] * &(&self.irreducibles[i][k] * &conj[j][k]))
                    .sum();
                let expected = if i == j { int(self.order) } else { Cyclotomic::zero() };
                if s != expected {
                    return Err(reject(format!("row orthogonality fails for characters {i}, {j}: {s}")));
                }
            }
        }
        for a in 0..h {
            for b in a..h {
                let s: Cyclotomic = (0..h).map(|chi| &self.irreducibles[chi][a] * &conj[chi][b]).sum();
                let expected = if a == b { int(self.centralizer_order(a)) } else { Cyclotomic::zero() };
                if s != expected {
                    return Err(reject(format!(
                        "column orthogonality fails for classes {}, {}: {s}",
                        self.classes[a].name, self.classes[b].name
                    )));
                }
            }
        }
        self.validate_power_maps()
    }

    fn validate_power_maps(&self) -> Result<()> {
        for (k, c) in self.classes.iter().enumerate() {
            for (&p, &img) in &c.power_maps {
                let target = self
                    .classes
                    .get(img)
                    .ok_or_else(|| reject(format!("power map of {} points outside the table", c.name)))?;
                let expected = c.element_order / c.element_order.gcd(&(p as u64));
                if target.element_order != expected {
                    return Err(reject(format!(
                        "{}-th power of {} has order {}, expected {expected}",
                        p, c.name, target.element_order
                    )));
                }
                if c.element_order % p as u64 != 0 {
                    // Powers coprime to the order act on values as Galois automorphisms.
                    for (chi, row) in self.irreducibles.iter().enumerate() {
                        let n = row[k].conductor() as i64;
                        if row[img] != row[k].galois(p as i64 % n.max(1)) {
                            return Err(reject(format!(
                                "power map {p} on {} inconsistent with character {chi}",
                                c.name
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
