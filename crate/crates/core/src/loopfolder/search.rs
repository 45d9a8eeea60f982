//! Exhaustive search for transversals `K ⊆ pool` whose loop passes a chosen
//! set of checks.

use super::folder::LoopFolder;
use super::table::LoopTable;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::{ElemId, ElementStore, GroupHandle};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Requirements {
    pub left_bol: bool,
    pub aip: bool,
    pub two_power_exponent: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub max_index: usize,
    /// Upper bound on the number of candidate transversals.
    pub limit: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_index: 12,
            limit: 10_000_000,
        }
    }
}

struct Search<'a> {
    store: &'a ElementStore,
    coset: Vec<u16>,
    candidates: Vec<Vec<ElemId>>,
    require: Requirements,
    rep: Vec<Option<ElemId>>,
    found: Vec<Vec<ElemId>>,
}

impl Search<'_> {
    fn mul(&self, a: usize, b: usize) -> Option<usize> {
        let (x, y) = (self.rep[a]?, self.rep[b]?);
        Some(self.coset[self.store.mul(x, y) as usize] as usize)
    }

    /// Left Bol on every triple of chosen cosets whose evaluation only uses
    /// chosen representatives.
    fn partial_bol_holds(&self) -> bool {
        let chosen: Vec<usize> = (0..self.rep.len()).filter(|&c| self.rep[c].is_some()).collect();
        for &x in &chosen {
            for &y in &chosen {
                let Some(xyx) = self.mul(y, x).and_then(|yx| self.mul(x, yx)) else { continue };
                for &z in &chosen {
                    let lhs = self.mul(x, z).and_then(|xz| self.mul(y, xz)).and_then(|t| self.mul(x, t));
                    let rhs = self.mul(xyx, z);
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn leaf_table(&self) -> LoopTable {
        let n = self.rep.len();
        let table = (0..n)
            .map(|a| (0..n).map(|b| self.mul(a, b).expect("complete")).collect())
            .collect();
        LoopTable::new(table, 0).expect("indices in range")
    }

    fn accept(&self, t: &LoopTable) -> bool {
        if !t.is_latin() {
            return false;
        }
        if self.require.left_bol && !t.check_left_bol().0 {
            return false;
        }
        if self.require.aip && !t.check_aip().0 {
            return false;
        }
        !self.require.two_power_exponent || t.exponent_profile().two_power_exponent
    }

    fn run(&mut self, c: usize) {
        if c == self.rep.len() {
            if self.accept(&self.leaf_table()) {
                self.found.push(self.rep.iter().map(|r| r.expect("complete")).collect());
            }
            return;
        }
        for i in 0..self.candidates[c].len() {
            self.rep[c] = Some(self.candidates[c][i]);
            if !self.require.left_bol || self.partial_bol_holds() {
                self.run(c + 1);
            }
        }
        self.rep[c] = None;
    }
}

/// All `K ⊆ pool` containing the identity, meeting every coset of `H` once,
/// whose loop is Latin and passes the required checks. Cosets are ordered
/// with `H` first and then by their least element in the enumeration of `G`;
/// each `K` is listed in that coset order, and the list is in lexicographic
/// order of element ranks.
pub fn search_folders(
    g: &GroupHandle,
    h: &GroupHandle,
    pool: &[Permutation],
    require: Requirements,
    options: SearchOptions,
) -> Result<Vec<Vec<Permutation>>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H is not contained in G".into()));
    }
    let index = (g.order() / h.order()) as usize;
    if index > options.max_index {
        return Err(Error::Precondition(format!(
            "index {index} exceeds the search bound {}",
            options.max_index
        )));
    }
    let store = g.elements()?;
    let h_ids = g.ids_of(h)?;
    let unset = u16::MAX;
    let mut coset = vec![unset; store.len()];
    let mut next = 0u16;
    let order = std::iter::once(store.identity()).chain(store.iter());
    for x in order {
        if coset[x as usize] != unset {
            continue;
        }
        for &y in &h_ids {
            coset[store.mul(x, y) as usize] = next;
        }
        next += 1;
    }

    let mut pool_ids: Vec<ElemId> = pool
        .iter()
        .map(|p| {
            store
                .index_of(p)
                .ok_or_else(|| Error::Precondition(format!("pool element {} is not in G", p.to_cycle_string())))
        })
        .collect::<Result<_>>()?;
    if !pool_ids.contains(&store.identity()) {
        return Err(Error::Precondition("pool must contain the identity".into()));
    }
    pool_ids.sort_unstable();
    pool_ids.dedup();
    let mut candidates = vec![Vec::new(); index];
    candidates[0].push(store.identity());
    for &x in &pool_ids {
        let c = coset[x as usize] as usize;
        if c != 0 {
            candidates[c].push(x);
        }
    }
    let total = candidates
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128));
    match total {
        Some(0) => return Ok(Vec::new()),
        Some(t) if t <= options.limit => {}
        _ => {
            return Err(Error::SearchLimit(format!(
                "more than {} candidate transversals",
                options.limit
            )))
        }
    }

    let mut search = Search {
        store: &store,
        coset,
        candidates,
        require,
        rep: vec![None; index],
        found: Vec::new(),
    };
    search.rep[0] = Some(store.identity());
    search.run(1);
    Ok(search
        .found
        .into_iter()
        .map(|ids| ids.into_iter().map(|i| store.perm(i)).collect())
        .collect())
}

/// Folders for each result of [`search_folders`].
pub fn search_folder_objects(
    g: &GroupHandle,
    h: &GroupHandle,
    pool: &[Permutation],
    require: Requirements,
    options: SearchOptions,
) -> Result<Vec<LoopFolder>> {
    search_folders(g, h, pool, require, options)?
        .into_iter()
        .map(|k| LoopFolder::new(g, h, k))
        .collect()
}
