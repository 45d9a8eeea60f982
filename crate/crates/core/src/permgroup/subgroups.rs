//! Centralizers, normalizers, Sylow subgroups, cores and the derived series.

use super::chain::StabChain;
use super::store::ElemId;
use super::GroupHandle;
use crate::arith::{is_prime, p_part};
use crate::error::{Error, Result};
use crate::perm::Permutation;

impl GroupHandle {
    /// `C_G(g)`.
    pub fn centralizer(&self, g: &Permutation) -> Result<GroupHandle> {
        let store = self.elements()?;
        let gid = store.index_of(g).ok_or(Error::NotMember)?;
        let ids: Vec<ElemId> = store.iter().filter(|&h| store.commute(h, gid)).collect();
        Ok(self.subgroup_from_ids(&store, &ids))
    }

    /// `C_G(U)` for a subgroup `U` (elements commuting with every generator of `U`).
    pub fn centralizer_of(&self, u: &GroupHandle) -> Result<GroupHandle> {
        let store = self.elements()?;
        let gens: Vec<ElemId> = u
            .generators()
            .iter()
            .map(|g| store.index_of(g).ok_or(Error::NotMember))
            .collect::<Result<_>>()?;
        let ids: Vec<ElemId> = store
            .iter()
            .filter(|&h| gens.iter().all(|&g| store.commute(h, g)))
            .collect();
        Ok(self.subgroup_from_ids(&store, &ids))
    }

    /// `self ∩ other`, by filtering the elements of `self`.
    pub fn intersection(&self, other: &GroupHandle) -> Result<GroupHandle> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let store = self.elements()?;
        let ids: Vec<ElemId> = store.iter().filter(|&x| other.contains(&store.perm(x))).collect();
        Ok(self.subgroup_from_ids(&store, &ids))
    }

    /// `N_G(U)`.
    pub fn normalizer(&self, u: &GroupHandle) -> Result<GroupHandle> {
        if !u.is_subgroup_of(self) {
            return Err(Error::NotSubgroup("U is not contained in G".into()));
        }
        let store = self.elements()?;
        let mut in_u = vec![false; store.len()];
        for id in self.ids_of(u)? {
            in_u[id as usize] = true;
        }
        let gens: Vec<ElemId> = u
            .generators()
            .iter()
            .map(|g| store.index_of(g).ok_or(Error::NotMember))
            .collect::<Result<_>>()?;
        let ids: Vec<ElemId> = store
            .iter()
            .filter(|&h| gens.iter().all(|&x| in_u[store.conj(x, h) as usize]))
            .collect();
        Ok(self.subgroup_from_ids(&store, &ids))
    }

    /// `|N_G(L) : C_G(L)|` for a subgroup `L` of odd order.
    pub fn automizer_index(&self, l: &GroupHandle) -> Result<u128> {
        if l.order() % 2 == 0 {
            return Err(Error::Precondition("automizer index needs |L| odd".into()));
        }
        let n = self.normalizer(l)?;
        let c = self.centralizer_of(l)?;
        Ok(n.order() / c.order())
    }

    /// Number of distinct classes among the `p-1` generators of `⟨x⟩`, `o(x) = p` an odd prime.
    pub fn cyclic_fusion_count(&self, x: &Permutation) -> Result<usize> {
        let p = x.order();
        if p % 2 == 0 || !is_prime(p as u128) {
            return Err(Error::Precondition(format!(
                "element order {p} is not an odd prime"
            )));
        }
        let store = self.elements()?;
        let table = self.conjugacy_classes()?;
        let xid = store.index_of(x).ok_or(Error::NotMember)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut y = xid;
        for _ in 1..p {
            seen.insert(table.class_of_id(y));
            y = store.mul(y, xid);
        }
        Ok(seen.len())
    }

    /// Normal closure in `self` of the group generated by `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> Result<GroupHandle> {
        let mut ngens: Vec<Permutation> = Vec::new();
        let mut chain = StabChain::new(self.degree(), &ngens);
        for g in gens {
            if !self.contains(g) {
                return Err(Error::NotMember);
            }
            if !chain.contains(g) {
                ngens.push(g.clone());
                chain = StabChain::new(self.degree(), &ngens);
            }
        }
        let mut i = 0;
        while i < ngens.len() {
            for s in self.generators() {
                let c = ngens[i].conjugate_by(s);
                if !chain.contains(&c) {
                    ngens.push(c);
                    chain = StabChain::new(self.degree(), &ngens);
                }
            }
            i += 1;
        }
        GroupHandle::with_degree(self.degree(), ngens, self.cap())
    }

    pub fn is_normal_subgroup(&self, u: &GroupHandle) -> bool {
        u.is_subgroup_of(self)
            && u.generators().iter().all(|n| {
                self.generators()
                    .iter()
                    .all(|s| u.contains(&n.conjugate_by(s)))
            })
    }

    /// `[G, G]`.
    pub fn derived_subgroup(&self) -> Result<GroupHandle> {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = &(&a.inverse() * &b.inverse()) * &(a * b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// `G = G⁽⁰⁾ ≥ G⁽¹⁾ ≥ …` down to the first repeated term.
    pub fn derived_series(&self) -> Result<Vec<GroupHandle>> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let d = last.derived_subgroup()?;
            if d.order() == last.order() {
                break;
            }
            let done = d.is_trivial();
            series.push(d);
            if done {
                break;
            }
        }
        Ok(series)
    }

    pub fn is_soluble(&self) -> Result<bool> {
        Ok(self.derived_series()?.last().unwrap().is_trivial())
    }

    /// A Sylow `p`-subgroup, grown one element at a time inside normalizers.
    pub fn sylow(&self, p: u64) -> Result<GroupHandle> {
        if !is_prime(p as u128) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let target = p_part(self.order(), p as u128);
        let store = self.elements()?;
        let mut pgroup = GroupHandle::trivial(self.degree(), self.cap());
        while pgroup.order() < target {
            let n = self.normalizer(&pgroup)?;
            let nstore = n.elements()?;
            let found = nstore.iter().find(|&x| {
                let o = nstore.order(x) as u128;
                o > 1 && p_part(o, p as u128) == o && !pgroup.contains(&nstore.perm(x))
            });
            let x = found.ok_or_else(|| {
                Error::Precondition("no p-element extends the current p-subgroup".into())
            })?;
            let mut gens = pgroup.generators().to_vec();
            gens.push(nstore.perm(x));
            pgroup = GroupHandle::with_degree(self.degree(), gens, self.cap())?;
        }
        let ids = self.ids_of(&pgroup)?;
        Ok(self.subgroup_from_ids(&store, &ids))
    }

    /// `O_p(G)`: the intersection of the conjugates of a Sylow `p`-subgroup.
    pub fn p_core(&self, p: u64) -> Result<GroupHandle> {
        let sylow = self.sylow(p)?;
        let store = self.elements()?;
        let mut member = vec![false; store.len()];
        for id in self.ids_of(&sylow)? {
            member[id as usize] = true;
        }
        let gen_invs: Vec<ElemId> = self
            .generators()
            .iter()
            .map(|g| store.index_of(&g.inverse()).ok_or(Error::NotMember))
            .collect::<Result<_>>()?;
        loop {
            let mut next = member.clone();
            for &s in &gen_invs {
                for x in store.iter() {
                    if member[x as usize] && !member[store.conj(x, s) as usize] {
                        next[x as usize] = false;
                    }
                }
            }
            if next == member {
                break;
            }
            member = next;
        }
        let ids: Vec<ElemId> = store.iter().filter(|&x| member[x as usize]).collect();
        Ok(self.subgroup_from_ids(&store, &ids))
    }
}

#[cfg(test)]
mod tests {
    use crate::permgroup::catalog;

    #[test]
    fn s4_subgroups() {
        let s4 = catalog::symmetric(4).unwrap();
        let o2 = s4.p_core(2).unwrap();
        assert_eq!(o2.order(), 4);
        assert!(s4.is_normal_subgroup(&o2));
        assert_eq!(s4.sylow(3).unwrap().order(), 3);
        let orders: Vec<u128> = s4
            .derived_series()
            .unwrap()
            .iter()
            .map(|g| g.order())
            .collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(s4.is_soluble().unwrap());
    }

    #[test]
    fn a5_is_not_soluble() {
        let a5 = catalog::alternating(5).unwrap();
        assert!(!a5.is_soluble().unwrap());
        assert!(a5.p_core(2).unwrap().is_trivial());
        let x = crate::perm::Permutation::parse_cycles("(1,2,3,4,5)", 5).unwrap();
        assert_eq!(a5.centralizer(&x).unwrap().order(), 5);
    }

    #[test]
    fn normalizer_of_three_cycle_in_s4() {
        let s4 = catalog::symmetric(4).unwrap();
        let x = crate::perm::Permutation::parse_cycles("(1,2,3)", 4).unwrap();
        let u = s4.subgroup(vec![x]).unwrap();
        assert_eq!(s4.normalizer(&u).unwrap().order(), 6);
        assert_eq!(s4.normalizer(&s4).unwrap().order(), 24);
        let a4 = catalog::alternating(4).unwrap();
        assert_eq!(s4.normalizer(&u).unwrap().intersection(&a4).unwrap().order(), 3);
    }

    #[test]
    fn fusion_in_small_groups() {
        let s3 = catalog::symmetric(3).unwrap();
        let x = crate::perm::Permutation::parse_cycles("(1,2,3)", 3).unwrap();
        assert_eq!(s3.cyclic_fusion_count(&x).unwrap(), 1);
        let z5 = catalog::cyclic(5).unwrap();
        let g = z5.generators()[0].clone();
        assert_eq!(z5.cyclic_fusion_count(&g).unwrap(), 4);
        let u = z5.subgroup(vec![g]).unwrap();
        assert_eq!(z5.automizer_index(&u).unwrap(), 1);
    }
}
