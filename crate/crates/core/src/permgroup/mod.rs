//! Permutation groups: stabilizer chains, lazy enumeration, conjugacy classes
//! and the subgroup operations built on them.

mod chain;
mod classes;
mod composition;
mod store;
mod subgroups;

pub mod catalog;
pub mod io;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use chain::StabChain;
pub use classes::{class_letters, ConjugacyClass, ConjugacyClassTable};
pub use composition::{composition_factors, CompositionFactor};
pub use store::{ElemId, ElementStore};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ENUMERATION_CAP: u128 = 2_000_000;

/// Enumeration cap from `MAX_ENUM`, falling back to the default.
pub fn cap_from_env() -> u128 {
    std::env::var("MAX_ENUM")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

struct Inner {
    name: Option<String>,
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    cap: u128,
    store: OnceLock<Arc<ElementStore>>,
    classes: OnceLock<Arc<ConjugacyClassTable>>,
}

/// A finitely generated permutation group. Cloning is cheap; all derived data
/// (elements, classes) is computed once and shared.
#[derive(Clone)]
pub struct GroupHandle(Arc<Inner>);

impl GroupHandle {
    /// Builds the group generated by `gens`. An empty list is rejected since
    /// the degree would be unknown; use [`GroupHandle::trivial`].
    pub fn from_generators(gens: Vec<Permutation>, cap: u128) -> Result<Self> {
        let degree = gens
            .first()
            .map(|g| g.degree())
            .ok_or_else(|| Error::Precondition("no generators given".into()))?;
        Self::with_degree(degree, gens, cap)
    }

    pub fn with_degree(degree: usize, gens: Vec<Permutation>, cap: u128) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Precondition("degree must be positive".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let chain = StabChain::new(degree, &gens);
        Ok(Self::from_parts(None, degree, gens, chain, cap, None))
    }

    pub fn trivial(degree: usize, cap: u128) -> Self {
        let chain = StabChain::new(degree, &[]);
        Self::from_parts(None, degree, Vec::new(), chain, cap, None)
    }

    fn from_parts(
        name: Option<String>,
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabChain,
        cap: u128,
        store: Option<ElementStore>,
    ) -> Self {
        let cell = OnceLock::new();
        if let Some(s) = store {
            let _ = cell.set(Arc::new(s));
        }
        GroupHandle(Arc::new(Inner {
            name,
            degree,
            generators,
            chain,
            cap,
            store: cell,
            classes: OnceLock::new(),
        }))
    }

    pub fn named(self, name: impl Into<String>) -> Self {
        let inner = &self.0;
        let store = inner.store.get().cloned();
        let classes = inner.classes.get().cloned();
        let out = GroupHandle(Arc::new(Inner {
            name: Some(name.into()),
            degree: inner.degree,
            generators: inner.generators.clone(),
            chain: inner.chain.clone(),
            cap: inner.cap,
            store: OnceLock::new(),
            classes: OnceLock::new(),
        }));
        if let Some(s) = store {
            let _ = out.0.store.set(s);
        }
        if let Some(c) = classes {
            let _ = out.0.classes.set(c);
        }
        out
    }

    pub fn name(&self) -> &str {
        self.0.name.as_deref().unwrap_or("G")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn order(&self) -> u128 {
        self.0.chain.order()
    }

    pub fn cap(&self) -> u128 {
        self.0.cap
    }

    pub fn chain(&self) -> &StabChain {
        &self.0.chain
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.0.chain.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn is_enumerable(&self) -> bool {
        self.order() <= self.0.cap && self.degree() <= 256
    }

    fn check_cap(&self) -> Result<()> {
        if self.order() > self.0.cap {
            return Err(Error::CapExceeded {
                order: self.order(),
                cap: self.0.cap,
            });
        }
        if self.degree() > 256 {
            return Err(Error::Precondition(format!(
                "degree {} too large to enumerate",
                self.degree()
            )));
        }
        Ok(())
    }

    /// All elements, lexicographically ordered. Fails above the cap.
    pub fn elements(&self) -> Result<Arc<ElementStore>> {
        if let Some(s) = self.0.store.get() {
            return Ok(s.clone());
        }
        self.check_cap()?;
        let store = ElementStore::from_chain(&self.0.chain)?;
        Ok(self.0.store.get_or_init(|| Arc::new(store)).clone())
    }

    pub fn conjugacy_classes(&self) -> Result<Arc<ConjugacyClassTable>> {
        if let Some(c) = self.0.classes.get() {
            return Ok(c.clone());
        }
        let store = self.elements()?;
        let gens = self.generator_ids(&store)?;
        let table = ConjugacyClassTable::compute(&store, &gens);
        Ok(self.0.classes.get_or_init(|| Arc::new(table)).clone())
    }

    fn generator_ids(&self, store: &ElementStore) -> Result<Vec<ElemId>> {
        self.generators()
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| store.index_of(g).ok_or(Error::NotMember))
            .collect()
    }

    pub fn element_id(&self, g: &Permutation) -> Result<ElemId> {
        self.elements()?.index_of(g).ok_or(Error::NotMember)
    }

    /// Index of the class containing `g`.
    pub fn class_index(&self, g: &Permutation) -> Result<usize> {
        let id = self.element_id(g)?;
        Ok(self.conjugacy_classes()?.class_of_id(id))
    }

    pub fn is_subgroup_of(&self, other: &GroupHandle) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    /// The subgroup generated by `gens`, sharing this group's cap.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<GroupHandle> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::NotMember);
            }
        }
        GroupHandle::with_degree(self.degree(), gens, self.cap())
    }

    /// Builds a subgroup from a sorted list of element ids of this group that
    /// is known to be closed. A generating set is picked greedily.
    pub(crate) fn subgroup_from_ids(&self, store: &ElementStore, ids: &[ElemId]) -> GroupHandle {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        let degree = self.degree();
        let target = ids.len() as u128;
        let mut gens: Vec<Permutation> = Vec::new();
        let mut chain = StabChain::new(degree, &gens);
        for &i in ids {
            if chain.order() == target {
                break;
            }
            let p = store.perm(i);
            if !chain.contains(&p) {
                gens.push(p);
                chain = StabChain::new(degree, &gens);
            }
        }
        debug_assert_eq!(chain.order(), target);
        let sub = ElementStore::from_sorted_slices(degree, ids.iter().map(|&i| store.slice(i)));
        Self::from_parts(None, degree, gens, chain, self.cap(), Some(sub))
    }

    /// Ids (in this group's store) of the members of `sub`.
    pub(crate) fn ids_of(&self, sub: &GroupHandle) -> Result<Vec<ElemId>> {
        let store = self.elements()?;
        let sub_store = sub.elements()?;
        sub_store
            .iter()
            .map(|i| store.index_of_slice(sub_store.slice(i)).ok_or(Error::NotMember))
            .collect()
    }

    pub fn same_group(&self, other: &GroupHandle) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }
}

impl fmt::Debug for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHandle")
            .field("name", &self.name())
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> GroupHandle {
        let cyc: Vec<u32> = (0..n as u32).collect();
        GroupHandle::from_generators(
            vec![
                Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(n, &[&cyc]).unwrap(),
            ],
            DEFAULT_ENUMERATION_CAP,
        )
        .unwrap()
    }

    #[test]
    fn cyclic_group_order() {
        let g = GroupHandle::from_generators(
            vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()],
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.elements().unwrap().len(), 5);
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let r = GroupHandle::from_generators(
            vec![Permutation::identity(3), Permutation::identity(4)],
            100,
        );
        assert!(matches!(r, Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn cap_is_enforced_lazily() {
        let g = GroupHandle::from_generators(sym(6).generators().to_vec(), 100).unwrap();
        assert_eq!(g.order(), 720);
        assert!(matches!(g.elements(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn s4_classes() {
        let g = sym(4);
        let t = g.conjugacy_classes().unwrap();
        let mut sizes: Vec<u64> = t.classes().iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        let names: Vec<&str> = t.classes().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["1A", "2A", "2B", "3A", "4A"]);
    }

    #[test]
    fn transporters_conjugate_representatives() {
        let g = sym(5);
        let store = g.elements().unwrap();
        let t = g.conjugacy_classes().unwrap();
        for x in store.iter() {
            let c = t.class_of_id(x);
            let rep = t.class(c).rep_id;
            assert_eq!(store.conj(rep, t.transporter(x)), x);
        }
    }
}
