//! Class multiplication coefficients `a_{ijk}`, the number of pairs
//! `(a, b) ∈ C_i × C_j` with `ab` equal to a fixed element of `C_k`.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::cyclo::{Cyclotomic, Rational};
use super::table::CharacterTable;
use crate::error::{Error, Result};
use crate::permgroup::{ConjugacyClassTable, ElementStore, GroupHandle};

/// Common interface of the character-table route and the enumeration route.
pub trait ClassAlgebra {
    fn group_name(&self) -> &str;
    fn order(&self) -> u64;
    fn class_count(&self) -> usize;
    fn class_name(&self, i: usize) -> String;
    fn class_size(&self, i: usize) -> u64;
    fn element_order(&self, i: usize) -> u64;
    fn inverse_class(&self, i: usize) -> usize;
    fn structure_constant(&self, i: usize, j: usize, k: usize) -> Result<u64>;
}

fn check_index(n: usize, idx: &[usize]) -> Result<()> {
    match idx.iter().find(|&&i| i >= n) {
        Some(i) => Err(Error::Precondition(format!("class index {i} out of range (have {n})"))),
        None => Ok(()),
    }
}

fn to_count(v: &Cyclotomic, what: impl FnOnce() -> String) -> Result<u64> {
    v.to_integer()
        .and_then(|i| i.to_u64())
        .ok_or_else(|| Error::TableRejected(format!("{} = {v} is not a nonnegative integer", what())))
}

/// `(|C_i||C_j|/|G|) Σ_χ χ(i)χ(j)conj(χ(k))/χ(1)`, which must be a
/// nonnegative integer for a genuine table.
pub fn structure_constant_char(t: &CharacterTable, i: usize, j: usize, k: usize) -> Result<u64> {
    check_index(t.len(), &[i, j, k])?;
    let factor = Rational::new(
        BigInt::from(t.classes[i].size) * BigInt::from(t.classes[j].size),
        BigInt::from(t.order),
    );
    let sum: Cyclotomic = (0..t.len())
        .map(|chi| {
            let d = Rational::from_integer(BigInt::from(t.degree(chi)));
            (&(t.value(chi, i) * t.value(chi, j)) * &t.value(chi, k).conj()).scale(&d.recip())
        })
        .sum();
    to_count(&sum.scale(&factor), || format!("a({i},{j},{k})"))
}

impl ClassAlgebra for CharacterTable {
    fn group_name(&self) -> &str {
        &self.group_name
    }
    fn order(&self) -> u64 {
        self.order
    }
    fn class_count(&self) -> usize {
        self.len()
    }
    fn class_name(&self, i: usize) -> String {
        self.classes[i].name.clone()
    }
    fn class_size(&self, i: usize) -> u64 {
        self.classes[i].size
    }
    fn element_order(&self, i: usize) -> u64 {
        self.classes[i].element_order
    }
    fn inverse_class(&self, i: usize) -> usize {
        CharacterTable::inverse_class(self, i)
    }
    fn structure_constant(&self, i: usize, j: usize, k: usize) -> Result<u64> {
        structure_constant_char(self, i, j, k)
    }
}

/// Lazily filled `a_{ijk}` for one table. Entries are computed a whole
/// `(i, j)` row at a time, `k` ascending, under a write lock.
pub struct StructureConstantTensor {
    table: Arc<CharacterTable>,
    conj: Vec<Vec<Cyclotomic>>,
    rows: RwLock<BTreeMap<(usize, usize), Arc<Vec<u64>>>>,
}

impl StructureConstantTensor {
    pub fn new(table: CharacterTable) -> Self {
        let conj = table
            .irreducibles
            .iter()
            .map(|r| r.iter().map(Cyclotomic::conj).collect())
            .collect();
        StructureConstantTensor {
            table: Arc::new(table),
            conj,
            rows: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn group_name(&self) -> &str {
        &self.table.group_name
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    /// `a_{ijk}` for all `k`.
    pub fn row(&self, i: usize, j: usize) -> Result<Arc<Vec<u64>>> {
        let t = &self.table;
        check_index(t.len(), &[i, j])?;
        if let Some(r) = self.rows.read().expect("cache lock").get(&(i, j)) {
            return Ok(r.clone());
        }
        let weights: Vec<Cyclotomic> = (0..t.len())
            .map(|chi| {
                let d = Rational::from_integer(BigInt::from(t.degree(chi)));
                (t.value(chi, i) * t.value(chi, j)).scale(&d.recip())
            })
            .collect();
        let factor = Rational::new(
            BigInt::from(t.classes[i].size) * BigInt::from(t.classes[j].size),
            BigInt::from(t.order),
        );
        let mut row = Vec::with_capacity(t.len());
        for k in 0..t.len() {
            let s: Cyclotomic = weights
                .iter()
                .zip(&self.conj)
                .map(|(w, c)| w * &c[k])
                .sum();
            row.push(to_count(&s.scale(&factor), || format!("a({i},{j},{k})"))?);
        }
        let row = Arc::new(row);
        let mut cache = self.rows.write().expect("cache lock");
        Ok(cache.entry((i, j)).or_insert(row).clone())
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Result<u64> {
        check_index(self.table.len(), &[k])?;
        Ok(self.row(i, j)?[k])
    }

    /// `Σ_k a_{ijk}·|C_k| = |C_i|·|C_j|`.
    pub fn counting_identity_holds(&self, i: usize, j: usize) -> Result<bool> {
        let row = self.row(i, j)?;
        let lhs: u128 = row
            .iter()
            .zip(&self.table.classes)
            .map(|(&a, c)| a as u128 * c.size as u128)
            .sum();
        Ok(lhs == self.table.classes[i].size as u128 * self.table.classes[j].size as u128)
    }
}

/// Enumeration route over the classes of an explicit group.
pub struct GroupClassAlgebra {
    group: GroupHandle,
    store: Arc<ElementStore>,
    classes: Arc<ConjugacyClassTable>,
}

impl GroupClassAlgebra {
    pub fn new(group: &GroupHandle) -> Result<Self> {
        Ok(GroupClassAlgebra {
            group: group.clone(),
            store: group.elements()?,
            classes: group.conjugacy_classes()?,
        })
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn store(&self) -> &ElementStore {
        &self.store
    }

    pub fn classes(&self) -> &ConjugacyClassTable {
        &self.classes
    }
}

impl ClassAlgebra for GroupClassAlgebra {
    fn group_name(&self) -> &str {
        self.group.name()
    }
    fn order(&self) -> u64 {
        self.classes.group_order()
    }
    fn class_count(&self) -> usize {
        self.classes.len()
    }
    fn class_name(&self, i: usize) -> String {
        self.classes.class(i).name.clone()
    }
    fn class_size(&self, i: usize) -> u64 {
        self.classes.class(i).size
    }
    fn element_order(&self, i: usize) -> u64 {
        self.classes.class(i).element_order
    }
    fn inverse_class(&self, i: usize) -> usize {
        self.classes.inverse_class(&self.store, i)
    }
    fn structure_constant(&self, i: usize, j: usize, k: usize) -> Result<u64> {
        check_index(self.classes.len(), &[i, j, k])?;
        let z = self.classes.class(k).rep_id;
        Ok(self
            .classes
            .members(i)
            .iter()
            .filter(|&&a| self.classes.class_of_id(self.store.mul(self.store.inv(a), z)) == j)
            .count() as u64)
    }
}

/// Pair counting in an enumerated group, with the group's own class indices.
pub fn structure_constant_brute(g: &GroupHandle, i: usize, j: usize, k: usize) -> Result<u64> {
    GroupClassAlgebra::new(g)?.structure_constant(i, j, k)
}

/// Maps each table class to a class of `g` with the same element order and
/// size, respecting every power map of the table. Classes that agree on
/// these data are matched in the first consistent way found.
pub fn match_classes(t: &CharacterTable, g: &GroupHandle) -> Result<Vec<usize>> {
    let store = g.elements()?;
    let classes = g.conjugacy_classes()?;
    if t.order as u128 != g.order() || t.len() != classes.len() {
        return Err(Error::Precondition(format!(
            "table {} ({} classes, order {}) does not fit a group of order {} with {} classes",
            t.group_name,
            t.len(),
            t.order,
            g.order(),
            classes.len()
        )));
    }
    let candidates: Vec<Vec<usize>> = t
        .classes
        .iter()
        .map(|c| {
            (0..classes.len())
                .filter(|&j| classes.class(j).size == c.size && classes.class(j).element_order == c.element_order)
                .collect()
        })
        .collect();
    let mut assignment: Vec<Option<usize>> = vec![None; t.len()];
    let mut used = vec![false; classes.len()];

    fn consistent(
        t: &CharacterTable,
        assignment: &[Option<usize>],
        store: &ElementStore,
        classes: &ConjugacyClassTable,
    ) -> bool {
        for (k, c) in t.classes.iter().enumerate() {
            let Some(gk) = assignment[k] else { continue };
            for (&p, &img) in &c.power_maps {
                if let Some(gi) = assignment[img] {
                    if classes.power_class(store, gk, p as u64) != gi {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(
        k: usize,
        t: &CharacterTable,
        candidates: &[Vec<usize>],
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        store: &ElementStore,
        classes: &ConjugacyClassTable,
    ) -> bool {
        if k == t.len() {
            return true;
        }
        for &c in &candidates[k] {
            if used[c] {
                continue;
            }
            assignment[k] = Some(c);
            used[c] = true;
            if consistent(t, assignment, store, classes)
                && search(k + 1, t, candidates, assignment, used, store, classes)
            {
                return true;
            }
            used[c] = false;
            assignment[k] = None;
        }
        false
    }

    if search(0, t, &candidates, &mut assignment, &mut used, &store, &classes) {
        Ok(assignment.into_iter().map(|a| a.expect("complete")).collect())
    } else {
        Err(Error::Precondition(format!(
            "no class correspondence between table {} and the group",
            t.group_name
        )))
    }
}
