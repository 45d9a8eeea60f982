//! Loop folders `(G, H, K)`: `H ≤ G` and `K ∋ 1` a left transversal of `H`.
//!
//! The loop lives on `K` with `x ∘ y` the element of `K` in the coset
//! `(xy)H`. This convention is used throughout.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::table::{ExponentProfile, LoopTable, Witness};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::{catalog, ElemId, ElementStore, GroupHandle};

pub struct LoopFolder {
    g: GroupHandle,
    h: GroupHandle,
    k: Vec<Permutation>,
    store: Arc<ElementStore>,
    k_ids: Vec<ElemId>,
    /// Index in `K` of the coset representative of each element of `G`.
    coset_of: Vec<u32>,
}

fn transversal(msg: String) -> Error {
    Error::Transversal(msg)
}

/// The loop of a folder; see [`LoopFolder::loop_table`].
pub fn loop_from_folder(f: &LoopFolder) -> LoopTable {
    f.loop_table()
}

/// `(U, H ∩ U, K)`; see [`LoopFolder::restrict`].
pub fn subfolder_restrict(f: &LoopFolder, u: &GroupHandle) -> Result<LoopFolder> {
    f.restrict(u)
}

/// Pairs `(k, h)`, `k ∈ K` and `h ∈ H` of odd order `> 1`, with
/// `k⁻¹hk = h⁻¹`. `K` need not be a transversal.
pub fn inversion_pairs(
    g: &GroupHandle,
    h: &GroupHandle,
    k: &[Permutation],
) -> Result<Vec<(Permutation, Permutation)>> {
    let s = g.elements()?;
    let h_ids = g.ids_of(h)?;
    let mut out = Vec::new();
    for kp in k {
        let k = s.index_of(kp).ok_or(Error::NotMember)?;
        for &x in &h_ids {
            let o = s.order(x);
            if o > 1 && o % 2 == 1 && s.conj(x, k) == s.inv(x) {
                out.push((s.perm(k), s.perm(x)));
            }
        }
    }
    Ok(out)
}

impl LoopFolder {
    /// Checks `H ≤ G`, `1 ∈ K ⊆ G`, `|K| = |G:H|` and that the cosets `kH`
    /// are pairwise distinct.
    pub fn new(g: &GroupHandle, h: &GroupHandle, k: Vec<Permutation>) -> Result<Self> {
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup("H is not contained in G".into()));
        }
        if !k.iter().any(Permutation::is_identity) {
            return Err(transversal("K does not contain the identity".into()));
        }
        let index = g.order() / h.order();
        if k.len() as u128 != index {
            return Err(transversal(format!("|K| = {} but |G:H| = {index}", k.len())));
        }
        let store = g.elements()?;
        let k_ids: Vec<ElemId> = k
            .iter()
            .map(|p| store.index_of(p).ok_or_else(|| transversal(format!("{} is not in G", p.to_cycle_string()))))
            .collect::<Result<_>>()?;
        let h_ids = g.ids_of(h)?;
        let unset = u32::MAX;
        let mut coset_of = vec![unset; store.len()];
        for (i, &ki) in k_ids.iter().enumerate() {
            for &hh in &h_ids {
                let x = store.mul(ki, hh) as usize;
                if coset_of[x] != unset {
                    return Err(transversal(format!(
                        "elements {} and {i} of K lie in the same coset",
                        coset_of[x]
                    )));
                }
                coset_of[x] = i as u32;
            }
        }
        if let Some(x) = coset_of.iter().position(|&c| c == unset) {
            return Err(transversal(format!("coset of {} is missed", store.perm(x as ElemId).to_cycle_string())));
        }
        Ok(LoopFolder {
            g: g.clone(),
            h: h.clone(),
            k,
            store,
            k_ids,
            coset_of,
        })
    }

    pub fn g(&self) -> &GroupHandle {
        &self.g
    }

    pub fn h(&self) -> &GroupHandle {
        &self.h
    }

    pub fn k(&self) -> &[Permutation] {
        &self.k
    }

    /// Index in `K` of the representative of `gH`.
    pub fn representative_index(&self, g: &Permutation) -> Result<usize> {
        let id = self.store.index_of(g).ok_or(Error::NotMember)?;
        Ok(self.coset_of[id as usize] as usize)
    }

    /// The induced multiplication on `K`, indices following the order of `K`.
    pub fn loop_table(&self) -> LoopTable {
        let table = self
            .k_ids
            .iter()
            .map(|&a| {
                self.k_ids
                    .iter()
                    .map(|&b| self.coset_of[self.store.mul(a, b) as usize] as usize)
                    .collect()
            })
            .collect();
        let identity = self.k.iter().position(Permutation::is_identity).expect("checked");
        LoopTable::new(table, identity).expect("indices in range")
    }

    /// Pairs `(k, h)` with `h ∈ H` of odd order `> 1` and `k⁻¹hk = h⁻¹`.
    pub fn k_inversion_obstruction(&self) -> Result<Vec<(Permutation, Permutation)>> {
        inversion_pairs(&self.g, &self.h, &self.k)
    }

    /// `(U, H ∩ U, K)` for `K ⊆ U ≤ G`, with the transversal property re-checked.
    pub fn restrict(&self, u: &GroupHandle) -> Result<LoopFolder> {
        if !u.is_subgroup_of(&self.g) {
            return Err(Error::NotSubgroup("U is not contained in G".into()));
        }
        if let Some(k) = self.k.iter().find(|k| !u.contains(k)) {
            return Err(Error::Precondition(format!("{} ∈ K lies outside U", k.to_cycle_string())));
        }
        let hu = self.h.intersection(u)?;
        LoopFolder::new(u, &hu, self.k.clone())
    }

    /// The restriction to `⟨K⟩`.
    pub fn restrict_to_generated(&self) -> Result<LoopFolder> {
        let u = self.g.subgroup(self.k.iter().filter(|k| !k.is_identity()).cloned().collect())?;
        self.restrict(&u)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FolderFlags {
    pub transversal: bool,
    pub latin: bool,
    pub left_bol: bool,
    pub aip: bool,
    pub power_associative_checked: bool,
    pub two_power_exponent: bool,
}

impl FolderFlags {
    /// Transversal, Latin, left Bol, automorphic inverses and 2-power exponent.
    pub fn is_bx2p(&self) -> bool {
        self.transversal && self.latin && self.left_bol && self.aip && self.two_power_exponent
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FolderReport {
    pub flags: FolderFlags,
    pub witnesses: Vec<Witness>,
    pub exponent: Option<ExponentProfile>,
    pub mult_group_order: Option<u128>,
    /// Solubility of the multiplication group: a proxy, not loop solubility.
    pub mult_group_soluble_proxy: Option<bool>,
    pub transversal_error: Option<String>,
}

/// All checks on a loop table; the transversal flag is taken as given. Every
/// identity is checked even on a non-Latin table so each false flag has its
/// own witness.
pub fn check_table(t: &LoopTable, cap: u128) -> FolderReport {
    let mut flags = FolderFlags {
        transversal: true,
        ..Default::default()
    };
    let mut witnesses = Vec::new();
    match t.latin_witness() {
        Some(w) => witnesses.push(w),
        None => flags.latin = true,
    }
    let (bol, w) = t.check_left_bol();
    flags.left_bol = bol;
    witnesses.extend(w);
    let (aip, w) = t.check_aip();
    flags.aip = aip;
    witnesses.extend(w);
    let profile = t.exponent_profile();
    flags.power_associative_checked = profile.power_associative;
    flags.two_power_exponent = profile.two_power_exponent;
    witnesses.extend(profile.witnesses.iter().cloned());
    if !profile.two_power_exponent {
        let x = (0..t.n)
            .find(|&x| !(t.left_powers(x).len() as u64).is_power_of_two())
            .unwrap_or(0);
        witnesses.push(Witness::new("two_power_exponent", vec![x]));
    }
    let mg = if flags.latin { t.mult_group(cap).ok() } else { None };
    FolderReport {
        flags,
        witnesses,
        exponent: Some(profile),
        mult_group_order: mg.as_ref().map(GroupHandle::order),
        mult_group_soluble_proxy: mg.and_then(|g| g.is_soluble().ok()),
        transversal_error: None,
    }
}

/// Builds the folder and checks its loop; a transversal failure becomes a
/// false flag rather than an error.
pub fn check_folder(g: &GroupHandle, h: &GroupHandle, k: Vec<Permutation>) -> Result<FolderReport> {
    match LoopFolder::new(g, h, k.clone()) {
        Ok(f) => Ok(check_table(&f.loop_table(), g.cap())),
        Err(Error::Transversal(msg)) => Ok(FolderReport {
            flags: FolderFlags::default(),
            witnesses: vec![Witness::new("transversal", (0..k.len()).collect())],
            exponent: None,
            mult_group_order: None,
            mult_group_soluble_proxy: None,
            transversal_error: Some(msg),
        }),
        Err(e) => Err(e),
    }
}

/// Folder spec file: a catalog group, generators of `H` and the elements of
/// `K`, in 1-based cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FolderSpec {
    pub group: String,
    pub subgroup_generators: Vec<String>,
    #[serde(rename = "K")]
    pub k: Vec<String>,
}

impl FolderSpec {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
    }

    /// `(G, H, K)` as parsed permutations; `H` is built inside `G`.
    pub fn resolve(&self) -> Result<(GroupHandle, GroupHandle, Vec<Permutation>)> {
        let g = catalog::by_name(&self.group)?;
        let d = g.degree();
        let parse = |s: &String| Permutation::parse_cycles(s, d);
        let h_gens: Vec<Permutation> = self.subgroup_generators.iter().map(parse).collect::<Result<_>>()?;
        let h = if h_gens.is_empty() {
            GroupHandle::trivial(d, g.cap())
        } else {
            g.subgroup(h_gens)?
        };
        let k = self.k.iter().map(parse).collect::<Result<_>>()?;
        Ok((g, h, k))
    }

    pub fn build(&self) -> Result<LoopFolder> {
        let (g, h, k) = self.resolve()?;
        LoopFolder::new(&g, &h, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalog::symmetric;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse_cycles(s, d).unwrap()
    }

    #[test]
    fn s3_with_complement() {
        let g = symmetric(3).unwrap();
        let h = g.subgroup(vec![p("(1,2)", 3)]).unwrap();
        let k = vec![p("()", 3), p("(1,2,3)", 3), p("(1,3,2)", 3)];
        let f = LoopFolder::new(&g, &h, k).unwrap();
        let t = f.loop_table();
        assert!(t.is_group());
        assert_eq!(t.exponent_profile().exponent, 3);
    }

    #[test]
    fn s3_mod_a3() {
        let g = symmetric(3).unwrap();
        let h = g.subgroup(vec![p("(1,2,3)", 3)]).unwrap();
        let f = LoopFolder::new(&g, &h, vec![p("()", 3), p("(1,2)", 3)]).unwrap();
        assert_eq!(f.loop_table(), LoopTable::cyclic(2));
    }

    #[test]
    fn transversal_violations() {
        let g = symmetric(3).unwrap();
        let h = g.subgroup(vec![p("(1,2)", 3)]).unwrap();
        let dup = vec![p("()", 3), p("(1,2,3)", 3), p("(2,3)", 3)];
        assert!(matches!(LoopFolder::new(&g, &h, dup), Err(Error::Transversal(_))));
        let short = vec![p("()", 3), p("(1,2,3)", 3)];
        assert!(matches!(LoopFolder::new(&g, &h, short), Err(Error::Transversal(_))));
        let no_id = vec![p("(1,3)", 3), p("(1,2,3)", 3), p("(1,3,2)", 3)];
        assert!(matches!(LoopFolder::new(&g, &h, no_id), Err(Error::Transversal(_))));
        let r = check_folder(&g, &h, vec![p("()", 3), p("(1,2,3)", 3), p("(2,3)", 3)]).unwrap();
        assert!(!r.flags.transversal);
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn spec_round_trip() {
        let spec = FolderSpec {
            group: "S4".into(),
            subgroup_generators: vec!["(1,2)".into(), "(1,2,3)".into()],
            k: vec!["()".into(), "(1,4)(2,3)".into(), "(2,4)(1,3)".into(), "(3,4)(1,2)".into()],
        };
        let back = FolderSpec::parse(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(back, spec);
        let f = back.build().unwrap();
        assert_eq!(f.loop_table().exponent_profile().exponent, 2);
    }
}
