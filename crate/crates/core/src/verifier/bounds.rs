//! Upper bounds for `|K|` from involution counts against lower bounds for
//! `|G:H|`.

use serde::Serialize;

use crate::arith::{odd_part, p_part};
use crate::classalgebra::{inversion_table, ClassLabel, GroupClassAlgebra};
use crate::error::{Error, Result};
use crate::permgroup::catalog::{by_name, pgammal2, pgl2};
use crate::permgroup::GroupHandle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexBound {
    pub formula: String,
    pub value: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub instance: String,
    pub group: String,
    pub group_order: u128,
    /// Which involutions may lie in `K`.
    pub k_rule: String,
    pub k_classes: Vec<ClassLabel>,
    pub involution_count: u64,
    /// `1 + involution_count`.
    pub k_bound: u64,
    pub index_bound: IndexBound,
    /// `k_bound < index_bound`, the contradiction.
    pub holds: bool,
    pub relation: String,
}

/// Instances accepted by [`counting_bound_check`].
pub fn bound_instances() -> Vec<&'static str> {
    vec!["M22.2", "PGammaL2(9)", "PSU4(2).2", "S7"]
}

/// `2·|G|_{2'} / Π_{r ∈ permitted} |G|_r`.
fn odd_part_bound(order: u128, permitted: &[u64]) -> IndexBound {
    let odd = odd_part(order);
    let sylows: Vec<u128> = permitted.iter().map(|&r| p_part(order, r as u128)).collect();
    let value = 2 * odd / sylows.iter().product::<u128>();
    let primes: Vec<String> = permitted.iter().map(|r| format!("|G|_{r}")).collect();
    let parts: Vec<String> = sylows.iter().map(|s| s.to_string()).collect();
    IndexBound {
        formula: format!(
            "2 * |G|_2' / {} = 2 * {odd} / {} = {value}",
            primes.join(" * "),
            parts.join(" * ")
        ),
        value,
    }
}

fn labels(a: &GroupClassAlgebra, keep: impl Fn(usize) -> bool) -> Vec<ClassLabel> {
    let classes = a.classes();
    (0..classes.len())
        .filter(|&i| classes.class(i).element_order == 2 && keep(i))
        .map(|i| ClassLabel {
            index: i,
            name: classes.class(i).name.clone(),
            size: classes.class(i).size,
        })
        .collect()
}

/// Involution classes inverting no class of order `r`.
fn non_inverting(g: &GroupHandle, r: u64) -> Result<Vec<ClassLabel>> {
    let a = GroupClassAlgebra::new(g)?;
    let table = inversion_table(&a)?;
    let cols: Vec<usize> = table
        .odd_classes
        .iter()
        .enumerate()
        .filter(|(_, c)| a.classes().class(c.index).element_order == r)
        .map(|(j, _)| j)
        .collect();
    if cols.is_empty() {
        return Err(Error::Precondition(format!("{} has no elements of order {r}", g.name())));
    }
    Ok(table
        .involutions
        .iter()
        .zip(&table.inverts)
        .filter(|(_, row)| cols.iter().all(|&j| !row[j]))
        .map(|(l, _)| l.clone())
        .collect())
}

fn finish(instance: &str, g: &GroupHandle, k_rule: String, k_classes: Vec<ClassLabel>, index: IndexBound) -> BoundReport {
    let count: u64 = k_classes.iter().map(|c| c.size).sum();
    let k_bound = 1 + count;
    let holds = (k_bound as u128) < index.value;
    let relation = if holds {
        format!("{} > {k_bound}", index.value)
    } else {
        format!("{} <= {k_bound}", index.value)
    };
    BoundReport {
        instance: instance.to_string(),
        group: g.name().to_string(),
        group_order: g.order(),
        k_rule,
        k_classes,
        involution_count: count,
        k_bound,
        index_bound: index,
        holds,
        relation,
    }
}

/// Computes both sides of the named counting argument.
pub fn counting_bound_check(name: &str) -> Result<BoundReport> {
    match name {
        "PGammaL2(9)" => {
            let s: u128 = 3;
            let g = pgammal2(9)?;
            let pgl = pgl2(9)?;
            let a = GroupClassAlgebra::new(&g)?;
            let k = labels(&a, |i| !pgl.contains(&a.classes().class(i).representative));
            let index = IndexBound {
                formula: format!("s^2 (s^2 - 1) / 2 with s = {s}"),
                value: s * s * (s * s - 1) / 2,
            };
            Ok(finish(name, &g, "involutions outside PGL2(9)".into(), k, index))
        }
        "M22.2" | "PSU4(2).2" | "S7" => {
            let g = by_name(name)?;
            let k = non_inverting(&g, 5)?;
            let index = odd_part_bound(g.order(), &[5]);
            Ok(finish(name, &g, "involutions inverting no element of order 5".into(), k, index))
        }
        _ => Err(Error::UnknownScenario(format!("bound instance {name}"))),
    }
}
