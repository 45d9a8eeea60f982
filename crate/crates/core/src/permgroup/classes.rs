//! Conjugacy classes by orbit closure over the enumerated elements.

use super::store::{ElemId, ElementStore};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub name: String,
    pub representative: Permutation,
    pub rep_id: ElemId,
    pub size: u64,
    pub element_order: u64,
}

/// Classes in canonical order: by element order, then size, then the rank of
/// the representative (the lexicographically smallest member).
#[derive(Debug)]
pub struct ConjugacyClassTable {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    transporter: Vec<ElemId>,
    members: Vec<Vec<ElemId>>,
    group_order: u64,
}

impl ConjugacyClassTable {
    pub(crate) fn compute(store: &ElementStore, generators: &[ElemId]) -> Self {
        let n = store.len();
        let unset = u32::MAX;
        let mut raw_class = vec![unset; n];
        let mut transporter = vec![0 as ElemId; n];
        let mut raw_members: Vec<Vec<ElemId>> = Vec::new();
        for start in store.iter() {
            if raw_class[start as usize] != unset {
                continue;
            }
            let cid = raw_members.len() as u32;
            raw_class[start as usize] = cid;
            transporter[start as usize] = store.identity();
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for &g in generators {
                    let y = store.conj(x, g);
                    if raw_class[y as usize] == unset {
                        raw_class[y as usize] = cid;
                        transporter[y as usize] = store.mul(transporter[x as usize], g);
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            raw_members.push(orbit);
        }

        let mut order: Vec<usize> = (0..raw_members.len()).collect();
        let key = |c: usize| {
            let rep = raw_members[c][0];
            (store.order(rep), raw_members[c].len(), rep)
        };
        order.sort_by_key(|&c| key(c));
        let mut relabel = vec![0u32; raw_members.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        let class_of: Vec<u32> = raw_class.iter().map(|&c| relabel[c as usize]).collect();
        let mut members: Vec<Vec<ElemId>> = vec![Vec::new(); raw_members.len()];
        for (old, m) in raw_members.into_iter().enumerate() {
            members[relabel[old] as usize] = m;
        }

        let mut classes = Vec::with_capacity(members.len());
        let mut letter_count: std::collections::BTreeMap<u64, usize> = Default::default();
        for m in &members {
            let rep = m[0];
            let ord = store.order(rep);
            let idx = letter_count.entry(ord).or_insert(0);
            let name = format!("{ord}{}", class_letters(*idx));
            *idx += 1;
            classes.push(ConjugacyClass {
                name,
                representative: store.perm(rep),
                rep_id: rep,
                size: m.len() as u64,
                element_order: ord,
            });
        }
        ConjugacyClassTable {
            classes,
            class_of,
            transporter,
            members,
            group_order: n as u64,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &ConjugacyClass {
        &self.classes[i]
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn class_of_id(&self, x: ElemId) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn members(&self, i: usize) -> &[ElemId] {
        &self.members[i]
    }

    /// An element `t` with `rep^t = x`, where `rep` is the representative of `x`'s class.
    pub fn transporter(&self, x: ElemId) -> ElemId {
        self.transporter[x as usize]
    }

    pub fn centralizer_order(&self, i: usize) -> u64 {
        self.group_order / self.classes[i].size
    }

    pub fn index_by_name(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    /// Class containing `rep_i^e`.
    pub fn power_class(&self, store: &ElementStore, i: usize, e: u64) -> usize {
        self.class_of_id(store.pow(self.classes[i].rep_id, e))
    }

    pub fn inverse_class(&self, store: &ElementStore, i: usize) -> usize {
        self.class_of_id(store.inv(self.classes[i].rep_id))
    }
}

/// `A, B, …, Z, AA, AB, …`.
pub fn class_letters(mut idx: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'A' + (idx % 26) as u8);
        if idx < 26 {
            break;
        }
        idx = idx / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}
