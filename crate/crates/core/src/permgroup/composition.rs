//! Composition factors.
//!
//! Soluble sections come from the derived series. The perfect residue is
//! split by a maximal normal subgroup, found among joins of normal closures
//! of conjugacy classes, and the simple quotient is identified by its order
//! and the orders of its elements.

use std::collections::BTreeSet;

use serde::Serialize;

use super::GroupHandle;
use crate::arith::prime_factors_with_multiplicity;
use crate::error::{Error, Result};

/// Bound on the number of normal subgroups examined in one perfect group.
const NORMAL_SUBGROUP_LIMIT: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionFactor {
    pub order: u128,
    pub label: String,
    /// Other names of the same simple group, e.g. `PSL2(5)` for `A5`.
    pub aliases: Vec<String>,
}

impl CompositionFactor {
    fn cyclic(p: u128) -> Self {
        CompositionFactor {
            order: p,
            label: format!("C{p}"),
            aliases: Vec::new(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.label.starts_with('C') && crate::arith::is_prime(self.order)
    }

    /// True if this factor is known to be `name` (label or alias).
    pub fn is(&self, name: &str) -> bool {
        self.label == name || self.aliases.iter().any(|a| a == name)
    }
}

struct KnownSimple {
    names: &'static [&'static str],
    order: u128,
    element_orders: &'static [u64],
}

const KNOWN_SIMPLE: &[KnownSimple] = &[
    KnownSimple { names: &["A5", "PSL2(4)", "PSL2(5)"], order: 60, element_orders: &[1, 2, 3, 5] },
    KnownSimple { names: &["PSL2(7)", "PSL3(2)"], order: 168, element_orders: &[1, 2, 3, 4, 7] },
    KnownSimple { names: &["A6", "PSL2(9)"], order: 360, element_orders: &[1, 2, 3, 4, 5] },
    KnownSimple { names: &["PSL2(8)"], order: 504, element_orders: &[1, 2, 3, 7, 9] },
    KnownSimple { names: &["PSL2(11)"], order: 660, element_orders: &[1, 2, 3, 5, 6, 11] },
    KnownSimple { names: &["PSL2(13)"], order: 1092, element_orders: &[1, 2, 3, 6, 7, 13] },
    KnownSimple { names: &["PSL2(17)"], order: 2448, element_orders: &[1, 2, 3, 4, 8, 9, 17] },
    KnownSimple { names: &["A7"], order: 2520, element_orders: &[1, 2, 3, 4, 5, 6, 7] },
    KnownSimple { names: &["PSL2(19)"], order: 3420, element_orders: &[1, 2, 3, 5, 9, 10, 19] },
    KnownSimple { names: &["PSL2(16)"], order: 4080, element_orders: &[1, 2, 3, 5, 15, 17] },
    KnownSimple { names: &["PSL3(3)"], order: 5616, element_orders: &[1, 2, 3, 4, 6, 8, 13] },
    KnownSimple { names: &["PSU3(3)"], order: 6048, element_orders: &[1, 2, 3, 4, 6, 7, 8, 12] },
    KnownSimple { names: &["PSL2(23)"], order: 6072, element_orders: &[1, 2, 3, 4, 6, 11, 12, 23] },
    KnownSimple { names: &["PSL2(25)"], order: 7800, element_orders: &[1, 2, 3, 4, 5, 6, 12, 13] },
    KnownSimple { names: &["M11"], order: 7920, element_orders: &[1, 2, 3, 4, 5, 6, 8, 11] },
    KnownSimple { names: &["PSL2(27)"], order: 9828, element_orders: &[1, 2, 3, 7, 13, 14] },
    KnownSimple { names: &["A8", "PSL4(2)"], order: 20160, element_orders: &[1, 2, 3, 4, 5, 6, 7, 15] },
    KnownSimple { names: &["PSL3(4)"], order: 20160, element_orders: &[1, 2, 3, 4, 5, 7] },
    KnownSimple { names: &["PSU4(2)", "PSp4(3)"], order: 25920, element_orders: &[1, 2, 3, 4, 5, 6, 9, 12] },
    KnownSimple { names: &["Sz(8)"], order: 29120, element_orders: &[1, 2, 4, 5, 7, 13] },
    KnownSimple { names: &["M12"], order: 95040, element_orders: &[1, 2, 3, 4, 5, 6, 8, 10, 11] },
    KnownSimple { names: &["A9"], order: 181440, element_orders: &[1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15] },
    KnownSimple { names: &["M22"], order: 443520, element_orders: &[1, 2, 3, 4, 5, 6, 7, 8, 11] },
    KnownSimple {
        names: &["Sp6(2)"],
        order: 1451520,
        element_orders: &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15],
    },
];

/// Names a nonabelian simple group from its order and element orders.
pub fn identify_simple(order: u128, element_orders: &BTreeSet<u64>) -> (String, Vec<String>) {
    let hits: Vec<&KnownSimple> = KNOWN_SIMPLE
        .iter()
        .filter(|k| k.order == order && k.element_orders.iter().copied().eq(element_orders.iter().copied()))
        .collect();
    match hits.as_slice() {
        [k] => (
            k.names[0].to_string(),
            k.names[1..].iter().map(|s| s.to_string()).collect(),
        ),
        _ => (format!("simple({order})"), Vec::new()),
    }
}

/// Composition factors from the top of the group downwards.
pub fn composition_factors(g: &GroupHandle) -> Result<Vec<CompositionFactor>> {
    let series = g.derived_series()?;
    let mut out = Vec::new();
    for w in series.windows(2) {
        let index = w[0].order() / w[1].order();
        out.extend(prime_factors_with_multiplicity(index).into_iter().map(CompositionFactor::cyclic));
    }
    let residue = series.last().unwrap();
    if !residue.is_trivial() {
        out.extend(perfect_factors(residue)?);
    }
    Ok(out)
}

fn perfect_factors(p: &GroupHandle) -> Result<Vec<CompositionFactor>> {
    let n = maximal_normal_subgroup(p)?;
    let quotient_order = p.order() / n.order();
    let store = p.elements()?;
    let mut in_n = vec![false; store.len()];
    for id in p.ids_of(&n)? {
        in_n[id as usize] = true;
    }
    let mut orders = BTreeSet::new();
    for x in store.iter() {
        let mut k = 1u64;
        let mut y = x;
        while !in_n[y as usize] {
            y = store.mul(y, x);
            k += 1;
        }
        orders.insert(k);
    }
    let (label, aliases) = identify_simple(quotient_order, &orders);
    let mut out = vec![CompositionFactor {
        order: quotient_order,
        label,
        aliases,
    }];
    if !n.is_trivial() {
        out.extend(composition_factors(&n)?);
    }
    Ok(out)
}

/// A proper normal subgroup of largest order.
fn maximal_normal_subgroup(g: &GroupHandle) -> Result<GroupHandle> {
    let store = g.elements()?;
    let classes = g.conjugacy_classes()?;
    let mut found: Vec<(GroupHandle, Vec<bool>)> = Vec::new();
    let membership = |h: &GroupHandle| -> Result<Vec<bool>> {
        let mut m = vec![false; store.len()];
        for id in g.ids_of(h)? {
            m[id as usize] = true;
        }
        Ok(m)
    };
    let push = |h: GroupHandle, found: &mut Vec<(GroupHandle, Vec<bool>)>| -> Result<bool> {
        if h.order() == g.order() {
            return Ok(false);
        }
        let m = membership(&h)?;
        if found.iter().any(|(_, fm)| *fm == m) {
            return Ok(false);
        }
        found.push((h, m));
        Ok(true)
    };
    for c in classes.classes().iter().skip(1) {
        let h = g.normal_closure(std::slice::from_ref(&c.representative))?;
        push(h, &mut found)?;
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let mut gens = found[i].0.generators().to_vec();
            gens.extend_from_slice(found[j].0.generators());
            let h = g.normal_closure(&gens)?;
            push(h, &mut found)?;
            if found.len() > NORMAL_SUBGROUP_LIMIT {
                return Err(Error::SearchLimit(format!(
                    "more than {NORMAL_SUBGROUP_LIMIT} normal subgroups"
                )));
            }
        }
        i += 1;
    }
    let best = found
        .into_iter()
        .map(|(h, _)| h)
        .max_by_key(|h| h.order());
    Ok(best.unwrap_or_else(|| GroupHandle::trivial(g.degree(), g.cap())))
}
