//! Certificates that the centralizer of each element of order `p` satisfies
//! a condition forcing the FS_p property.

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::permgroup::{composition_factors, GroupHandle};

/// Field orders `q` for which a section `PGL2(q)` can break the property.
pub const BAD_FIELD_ORDERS: [u128; 5] = [5, 9, 17, 257, 65537];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// `C_G(x)` is soluble.
    #[serde(rename = "(1) soluble")]
    Soluble,
    /// `C_C(O_p(C)) ≤ O_p(C)`, equivalent to `F*(C) = O_p(C)`.
    #[serde(rename = "(2) F*=O_p")]
    FittingIsOp,
    /// No composition factor `PSL2(q)` with `q` bad and `p | q + 1`.
    #[serde(rename = "(4') no bad factor")]
    NoBadFactor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassStatus {
    Certified,
    /// A factor of the order of a bad `PSL2(q)` is present, so no sound
    /// condition applies.
    PossibleFailure,
}

#[derive(Clone, Debug, Serialize)]
pub struct FspClassVerdict {
    pub class: String,
    pub class_size: u64,
    pub centralizer_order: u128,
    pub condition_used: Option<Condition>,
    pub certified: bool,
    pub status: ClassStatus,
    /// Labels of the composition factors that blocked (4').
    pub bad_factors: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FspReport {
    pub group: String,
    pub p: u64,
    pub classes: Vec<FspClassVerdict>,
}

impl FspReport {
    /// True when every class of order `p` is certified.
    pub fn all_certified(&self) -> bool {
        self.classes.iter().all(|c| c.certified)
    }
}

fn psl2_order(q: u128) -> u128 {
    let d = if q % 2 == 1 { 2 } else { 1 };
    q * (q * q - 1) / d
}

/// Bad field orders `q` with `p | q + 1`.
fn bad_orders_for(p: u64) -> Vec<u128> {
    BAD_FIELD_ORDERS
        .iter()
        .filter(|&&q| (q + 1) % p as u128 == 0)
        .map(|&q| psl2_order(q))
        .collect()
}

fn certify(c: &GroupHandle, p: u64) -> Result<(Option<Condition>, Vec<String>)> {
    if c.is_soluble()? {
        return Ok((Some(Condition::Soluble), Vec::new()));
    }
    let op = c.p_core(p)?;
    if c.centralizer_of(&op)?.is_subgroup_of(&op) {
        return Ok((Some(Condition::FittingIsOp), Vec::new()));
    }
    // Nonabelian factors of C/O_2(C) are those of C. Matching by order
    // alone keeps the test sound for groups the identifier cannot name.
    let orders = bad_orders_for(p);
    let bad: Vec<String> = composition_factors(c)?
        .into_iter()
        .filter(|f| !f.is_abelian() && orders.contains(&f.order))
        .map(|f| f.label)
        .collect();
    if bad.is_empty() {
        Ok((Some(Condition::NoBadFactor), bad))
    } else {
        Ok((None, bad))
    }
}

/// Tries conditions (1), (2) and (4') in order for each class of elements of
/// order `p`.
pub fn fsp_certificate(g: &GroupHandle, p: u64) -> Result<FspReport> {
    if p % 2 == 0 || !is_prime(p as u128) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    let classes = g.conjugacy_classes()?;
    let mut out = Vec::new();
    for class in classes.classes().iter().filter(|c| c.element_order == p) {
        let c = g.centralizer(&class.representative)?;
        let (condition, bad) = certify(&c, p)?;
        out.push(FspClassVerdict {
            class: class.name.clone(),
            class_size: class.size,
            centralizer_order: c.order(),
            condition_used: condition,
            certified: condition.is_some(),
            status: if condition.is_some() {
                ClassStatus::Certified
            } else {
                ClassStatus::PossibleFailure
            },
            bad_factors: bad,
        });
    }
    Ok(FspReport {
        group: g.name().to_string(),
        p,
        classes: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalog::{alternating, by_name};

    #[test]
    fn bad_orders() {
        assert_eq!(bad_orders_for(3), vec![60, 2448, psl2_order(257), psl2_order(65537)]);
        assert_eq!(bad_orders_for(5), vec![360]);
        assert_eq!(bad_orders_for(7), Vec::<u128>::new());
    }

    #[test]
    fn a5_cross_c3_is_blocked_at_three() {
        let g = by_name("A5xC3").unwrap();
        let r = fsp_certificate(&g, 3).unwrap();
        let central: Vec<&FspClassVerdict> = r.classes.iter().filter(|c| c.class_size == 1).collect();
        assert_eq!(central.len(), 2);
        for c in central {
            assert_eq!(c.status, ClassStatus::PossibleFailure);
            assert!(!c.certified);
            assert_eq!(c.bad_factors, vec!["A5".to_string()]);
        }
    }

    #[test]
    fn a5_cross_c5_passes_by_factor_refutation() {
        let g = by_name("A5xC5").unwrap();
        let r = fsp_certificate(&g, 5).unwrap();
        let central = r.classes.iter().find(|c| c.class_size == 1).unwrap();
        assert_eq!(central.condition_used, Some(Condition::NoBadFactor));
        assert!(r.classes.iter().all(|c| c.certified));
    }

    #[test]
    fn soluble_centralizers_stop_at_condition_one() {
        let g = by_name("A4xC3").unwrap();
        let r = fsp_certificate(&g, 3).unwrap();
        assert!(r.classes.iter().all(|c| c.condition_used == Some(Condition::Soluble)));
    }

    #[test]
    fn wreath_product_uses_fitting_condition() {
        // C3 wr A5 on 15 points: the diagonal 3-element is central and the
        // base group is self-centralizing.
        use crate::perm::Permutation;
        let blocks = |pi: [u32; 5]| {
            Permutation::from_images((0..15).map(|x| pi[(x / 3) as usize] * 3 + x % 3).collect()).unwrap()
        };
        let gens = vec![
            Permutation::parse_cycles("(1,2,3)", 15).unwrap(),
            blocks([1, 2, 3, 4, 0]),
            blocks([1, 2, 0, 3, 4]),
        ];
        let g = GroupHandle::from_generators(gens, 1_000_000).unwrap();
        assert_eq!(g.order(), 243 * 60);
        let r = fsp_certificate(&g, 3).unwrap();
        let central = r.classes.iter().find(|c| c.class_size == 1).unwrap();
        assert_eq!(central.condition_used, Some(Condition::FittingIsOp));
        assert!(r.all_certified());
    }

    #[test]
    fn rejects_even_and_composite() {
        let g = alternating(5).unwrap();
        assert!(fsp_certificate(&g, 2).is_err());
        assert!(fsp_certificate(&g, 9).is_err());
    }
}
