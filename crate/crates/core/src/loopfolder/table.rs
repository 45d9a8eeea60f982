//! Finite loops given by multiplication tables, and the identity checks run
//! on them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::GroupHandle;

/// A failed identity, with the loop elements that violate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: &'static str,
    pub elements: Vec<usize>,
}

impl Witness {
    pub fn new(check: &'static str, elements: Vec<usize>) -> Self {
        Witness { check, elements }
    }
}

/// An `n × n` multiplication table on `0..n`. The Latin property is checked
/// by [`LoopTable::latin_witness`], never assumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopTable {
    pub n: usize,
    pub identity_index: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentProfile {
    /// Left powers satisfy `x^a ∘ x^b = x^(a+b)` for every `x`.
    pub power_associative: bool,
    /// Element order to number of elements, from left powers.
    pub orders: BTreeMap<u64, usize>,
    pub exponent: u64,
    pub two_power_exponent: bool,
    pub witnesses: Vec<Witness>,
}

impl LoopTable {
    pub fn new(table: Vec<Vec<usize>>, identity_index: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 || identity_index >= n {
            return Err(Error::Precondition("empty table or identity out of range".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Precondition("table is not an n × n array over 0..n".into()));
        }
        Ok(LoopTable {
            n,
            identity_index,
            table,
        })
    }

    /// Cayley table of `Z_n`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        LoopTable {
            n,
            identity_index: 0,
            table,
        }
    }

    /// Cayley table of a permutation group, elements in the given order.
    pub fn from_group_elements(elements: &[Permutation]) -> Result<Self> {
        let index: BTreeMap<&[u32], usize> = elements.iter().enumerate().map(|(i, p)| (p.images(), i)).collect();
        let mut table = Vec::with_capacity(elements.len());
        for a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for b in elements {
                let c = a * b;
                row.push(*index.get(c.images()).ok_or_else(|| Error::Precondition("elements not closed".into()))?);
            }
            table.push(row);
        }
        let id = elements
            .iter()
            .position(|p| p.is_identity())
            .ok_or_else(|| Error::Precondition("identity missing".into()))?;
        Self::new(table, id)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    /// A row or column that is not a permutation, or a nontrivial identity
    /// row or column.
    pub fn latin_witness(&self) -> Option<Witness> {
        let e = self.identity_index;
        for x in 0..self.n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Some(Witness::new("identity", vec![x]));
            }
        }
        for x in 0..self.n {
            let mut row = vec![false; self.n];
            let mut col = vec![false; self.n];
            for y in 0..self.n {
                let (r, c) = (self.mul(x, y), self.mul(y, x));
                if std::mem::replace(&mut row[r], true) {
                    return Some(Witness::new("latin_row", vec![x, y]));
                }
                if std::mem::replace(&mut col[c], true) {
                    return Some(Witness::new("latin_column", vec![x, y]));
                }
            }
        }
        None
    }

    pub fn is_latin(&self) -> bool {
        self.latin_witness().is_none()
    }

    /// Violations of `x(y(xz)) = (x(yx))z`, exhaustively; at most `max` returned.
    pub fn left_bol_witnesses(&self, max: usize) -> Vec<Witness> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                let xyx = self.mul(x, self.mul(y, x));
                for z in 0..self.n {
                    if self.mul(x, self.mul(y, self.mul(x, z))) != self.mul(xyx, z) {
                        out.push(Witness::new("left_bol", vec![x, y, z]));
                        if out.len() >= max {
                            return out;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn check_left_bol(&self) -> (bool, Vec<Witness>) {
        let w = self.left_bol_witnesses(1);
        (w.is_empty(), w)
    }

    pub fn associativity_witness(&self) -> Option<Witness> {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Some(Witness::new("associative", vec![x, y, z]));
                    }
                }
            }
        }
        None
    }

    pub fn is_group(&self) -> bool {
        self.is_latin() && self.associativity_witness().is_none()
    }

    /// `x^λ` with `x^λ ∘ x = 1`.
    pub fn left_inverse(&self, x: usize) -> Option<usize> {
        (0..self.n).find(|&l| self.mul(l, x) == self.identity_index)
    }

    /// `x^ρ` with `x ∘ x^ρ = 1`.
    pub fn right_inverse(&self, x: usize) -> Option<usize> {
        (0..self.n).find(|&r| self.mul(x, r) == self.identity_index)
    }

    /// Automorphic inverse property `(x∘y)^λ = x^λ ∘ y^λ`. For left Bol
    /// tables left and right inverses must also agree.
    pub fn check_aip(&self) -> (bool, Vec<Witness>) {
        let mut lambda = Vec::with_capacity(self.n);
        for x in 0..self.n {
            match self.left_inverse(x) {
                Some(l) => lambda.push(l),
                None => return (false, vec![Witness::new("left_inverse", vec![x])]),
            }
        }
        if self.check_left_bol().0 {
            for (x, &l) in lambda.iter().enumerate() {
                if self.right_inverse(x) != Some(l) {
                    return (false, vec![Witness::new("inverse_mismatch", vec![x])]);
                }
            }
        }
        for x in 0..self.n {
            for y in 0..self.n {
                if lambda[self.mul(x, y)] != self.mul(lambda[x], lambda[y]) {
                    return (false, vec![Witness::new("aip", vec![x, y])]);
                }
            }
        }
        (true, Vec::new())
    }

    /// Left powers `x^1 = x`, `x^(m+1) = x ∘ x^m` up to the first return to
    /// the identity.
    pub fn left_powers(&self, x: usize) -> Vec<usize> {
        let mut powers = vec![self.identity_index];
        let mut p = x;
        while p != self.identity_index && powers.len() <= self.n {
            powers.push(p);
            p = self.mul(x, p);
        }
        powers
    }

    pub fn exponent_profile(&self) -> ExponentProfile {
        let mut orders = BTreeMap::new();
        let mut witnesses = Vec::new();
        let mut exponent = 1u64;
        for x in 0..self.n {
            let powers = self.left_powers(x);
            let o = powers.len();
            *orders.entry(o as u64).or_insert(0) += 1;
            exponent = num_integer::lcm(exponent, o as u64);
            'check: for a in 0..o {
                for b in 0..o {
                    if self.mul(powers[a], powers[b]) != powers[(a + b) % o] {
                        witnesses.push(Witness::new("power_associative", vec![x, a, b]));
                        break 'check;
                    }
                }
            }
        }
        ExponentProfile {
            power_associative: witnesses.is_empty(),
            two_power_exponent: exponent.is_power_of_two(),
            orders,
            exponent,
            witnesses,
        }
    }

    /// Group generated by all left and right translations, acting on `0..n`.
    pub fn mult_group(&self, cap: u128) -> Result<GroupHandle> {
        let mut gens = Vec::with_capacity(2 * self.n);
        for x in 0..self.n {
            let left: Vec<u32> = (0..self.n).map(|y| self.mul(x, y) as u32).collect();
            let right: Vec<u32> = (0..self.n).map(|y| self.mul(y, x) as u32).collect();
            for images in [left, right] {
                let p = Permutation::from_images(images)
                    .map_err(|_| Error::Precondition("translations of a non-Latin table".into()))?;
                if !p.is_identity() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        GroupHandle::with_degree(self.n, gens, cap)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    /// Rows of the Latin square, one per line.
    pub fn to_text(&self) -> String {
        let width = (self.n.max(2) - 1).to_string().len();
        let mut s = String::new();
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
        s
    }
}
