//! Which involution classes invert which classes of odd order.
//!
//! For an involution `t` and `x` of odd order, `x^t = x⁻¹` holds exactly when
//! `x = ts` for an involution `s` (take `s = tx`). So `C_t` inverts `C_x` iff
//! `a(C_t, C_s, C_x) > 0` for some involution class `C_s`.

use serde::Serialize;

use super::structconst::{ClassAlgebra, GroupClassAlgebra};
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::GroupHandle;

fn check_orders<A: ClassAlgebra + ?Sized>(a: &A, t: usize, x: usize) -> Result<()> {
    let n = a.class_count();
    if t >= n || x >= n {
        return Err(Error::Precondition("class index out of range".into()));
    }
    if a.element_order(t) != 2 {
        return Err(Error::Precondition(format!("{} is not an involution class", a.class_name(t))));
    }
    let o = a.element_order(x);
    if o % 2 == 0 || o == 1 {
        return Err(Error::Precondition(format!("{} does not have odd order > 1", a.class_name(x))));
    }
    Ok(())
}

/// True iff some element of class `t` inverts some element of class `x`.
pub fn inverts<A: ClassAlgebra + ?Sized>(a: &A, t: usize, x: usize) -> Result<bool> {
    check_orders(a, t, x)?;
    for s in (0..a.class_count()).filter(|&s| a.element_order(s) == 2) {
        if a.structure_constant(t, s, x)? > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Element-level search: an element of class `t` conjugating the
/// representative `x` of class `x_class` to `x⁻¹`, returned with `x`.
pub fn inversion_witness(
    g: &GroupHandle,
    t_class: usize,
    x_class: usize,
) -> Result<Option<(Permutation, Permutation)>> {
    let alg = GroupClassAlgebra::new(g)?;
    check_orders(&alg, t_class, x_class)?;
    let store = alg.store();
    let classes = alg.classes();
    let x = classes.class(x_class).rep_id;
    let x_inv = store.inv(x);
    Ok(classes
        .members(t_class)
        .iter()
        .find(|&&t| store.conj(x, t) == x_inv)
        .map(|&t| (store.perm(t), store.perm(x))))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassLabel {
    pub index: usize,
    pub name: String,
    pub size: u64,
}

/// Rows are involution classes, columns classes of odd prime order.
#[derive(Clone, Debug, Serialize)]
pub struct InversionTable {
    pub group: String,
    pub involutions: Vec<ClassLabel>,
    pub odd_classes: Vec<ClassLabel>,
    pub inverts: Vec<Vec<bool>>,
}

pub fn inversion_table<A: ClassAlgebra + ?Sized>(a: &A) -> Result<InversionTable> {
    let label = |i: usize| ClassLabel {
        index: i,
        name: a.class_name(i),
        size: a.class_size(i),
    };
    let involutions: Vec<ClassLabel> = (0..a.class_count())
        .filter(|&i| a.element_order(i) == 2)
        .map(label)
        .collect();
    let odd_classes: Vec<ClassLabel> = (0..a.class_count())
        .filter(|&i| {
            let o = a.element_order(i);
            o > 2 && is_prime(o as u128)
        })
        .map(label)
        .collect();
    let mut rows = Vec::with_capacity(involutions.len());
    for t in &involutions {
        let mut row = Vec::with_capacity(odd_classes.len());
        for x in &odd_classes {
            row.push(inverts(a, t.index, x.index)?);
        }
        rows.push(row);
    }
    Ok(InversionTable {
        group: a.group_name().to_string(),
        involutions,
        odd_classes,
        inverts: rows,
    })
}

impl InversionTable {
    fn column(&self, name: &str) -> Option<usize> {
        self.odd_classes.iter().position(|c| c.name == name)
    }

    fn row(&self, name: &str) -> Option<usize> {
        self.involutions.iter().position(|c| c.name == name)
    }

    /// Entry for an involution class and an odd class, by name.
    pub fn get(&self, involution: &str, odd: &str) -> Option<bool> {
        Some(self.inverts[self.row(involution)?][self.column(odd)?])
    }

    /// True if every involution class inverts the named class.
    pub fn inverted_by_all(&self, odd: &str) -> Option<bool> {
        let c = self.column(odd)?;
        Some(self.inverts.iter().all(|r| r[c]))
    }

    /// Involution classes inverting none of the named classes: the classes
    /// still usable for a transversal once those classes lie in `H`.
    pub fn usable_for_k(&self, odd: &[&str]) -> Option<Vec<&ClassLabel>> {
        let cols: Option<Vec<usize>> = odd.iter().map(|n| self.column(n)).collect();
        let cols = cols?;
        Some(
            self.involutions
                .iter()
                .zip(&self.inverts)
                .filter(|(_, r)| cols.iter().all(|&c| !r[c]))
                .map(|(l, _)| l)
                .collect(),
        )
    }

    /// Odd classes of the given element order, by name.
    pub fn classes_of_order(&self, a_order: impl Fn(&str) -> bool) -> Vec<&str> {
        self.odd_classes
            .iter()
            .filter(|c| a_order(&c.name))
            .map(|c| c.name.as_str())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classalgebra::table::shipped;
    use crate::permgroup::catalog::symmetric;

    #[test]
    fn transpositions_invert_three_cycles() {
        let t = shipped("S3").unwrap();
        assert!(inverts(&t, 1, 2).unwrap());
        let g = symmetric(3).unwrap();
        let alg = GroupClassAlgebra::new(&g).unwrap();
        assert!(inverts(&alg, 1, 2).unwrap());
        assert!(inversion_witness(&g, 1, 2).unwrap().is_some());
    }

    #[test]
    fn preconditions() {
        let t = shipped("S3").unwrap();
        assert!(inverts(&t, 2, 2).is_err());
        assert!(inverts(&t, 1, 1).is_err());
    }

    #[test]
    fn a5_table() {
        let tab = inversion_table(&shipped("A5").unwrap()).unwrap();
        assert_eq!(tab.involutions.len(), 1);
        assert_eq!(tab.odd_classes.len(), 3);
        assert!(tab.inverts[0].iter().all(|&b| b));
    }
}
