//! Materialized element lists.
//!
//! Elements are kept as one flat byte arena in lexicographic order of their
//! image arrays, so an element's index is its rank and lookups are binary
//! searches. Degrees above 256 cannot be materialized.

use super::chain::StabChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub type ElemId = u32;

#[derive(Debug)]
pub struct ElementStore {
    degree: usize,
    len: usize,
    data: Vec<u8>,
    identity: ElemId,
}

impl ElementStore {
    /// Enumerates the group described by `chain`, in lexicographic order.
    pub fn from_chain(chain: &StabChain) -> Result<Self> {
        let degree = chain.degree();
        if degree > 256 {
            return Err(Error::Precondition(format!(
                "cannot materialize elements of degree {degree} (> 256)"
            )));
        }
        let order = chain.order();
        let len = usize::try_from(order)
            .map_err(|_| Error::Precondition("group too large to enumerate".into()))?;
        let mut data = Vec::with_capacity(len * degree);
        let id = Permutation::identity(degree);
        enumerate_level(chain, 0, &id, &mut data);
        debug_assert_eq!(data.len(), len * degree);
        let mut store = ElementStore {
            degree,
            len,
            data,
            identity: 0,
        };
        // identity is lexicographically smallest
        debug_assert!(store.perm(0).is_identity());
        store.identity = 0;
        Ok(store)
    }

    /// Builds a store from permutations already sorted lexicographically.
    pub(crate) fn from_sorted_slices<'a>(
        degree: usize,
        elems: impl Iterator<Item = &'a [u8]>,
    ) -> Self {
        let mut data = Vec::new();
        let mut len = 0;
        for e in elems {
            data.extend_from_slice(e);
            len += 1;
        }
        let mut store = ElementStore {
            degree,
            len,
            data,
            identity: 0,
        };
        let id: Vec<u8> = (0..degree).map(|i| i as u8).collect();
        store.identity = store.index_of_slice(&id).unwrap_or(0);
        store
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> ElemId {
        self.identity
    }

    #[inline]
    pub fn slice(&self, i: ElemId) -> &[u8] {
        let s = i as usize * self.degree;
        &self.data[s..s + self.degree]
    }

    pub fn perm(&self, i: ElemId) -> Permutation {
        Permutation::from_images_unchecked(self.slice(i).iter().map(|&x| x as u32).collect())
    }

    pub fn index_of_slice(&self, key: &[u8]) -> Option<ElemId> {
        let (mut lo, mut hi) = (0usize, self.len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.slice(mid as ElemId).cmp(key) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid as ElemId),
            }
        }
        None
    }

    pub fn index_of(&self, p: &Permutation) -> Option<ElemId> {
        if p.degree() != self.degree {
            return None;
        }
        let key: Vec<u8> = p.images().iter().map(|&x| x as u8).collect();
        self.index_of_slice(&key)
    }

    /// `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let mut buf = [0u8; 256];
        let (sa, sb) = (self.slice(a), self.slice(b));
        for i in 0..self.degree {
            buf[i] = sb[sa[i] as usize];
        }
        self.index_of_slice(&buf[..self.degree])
            .expect("product of group elements lies in the group")
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        let mut buf = [0u8; 256];
        for (i, &x) in self.slice(a).iter().enumerate() {
            buf[x as usize] = i as u8;
        }
        self.index_of_slice(&buf[..self.degree])
            .expect("inverse lies in the group")
    }

    /// `g⁻¹ · x · g`.
    #[inline]
    pub fn conj(&self, x: ElemId, g: ElemId) -> ElemId {
        let mut buf = [0u8; 256];
        let (sx, sg) = (self.slice(x), self.slice(g));
        for i in 0..self.degree {
            buf[sg[i] as usize] = sg[sx[i] as usize];
        }
        self.index_of_slice(&buf[..self.degree])
            .expect("conjugate lies in the group")
    }

    #[inline]
    pub fn commute(&self, a: ElemId, b: ElemId) -> bool {
        let (sa, sb) = (self.slice(a), self.slice(b));
        (0..self.degree).all(|i| sb[sa[i] as usize] == sa[sb[i] as usize])
    }

    pub fn is_identity(&self, a: ElemId) -> bool {
        a == self.identity
    }

    pub fn order(&self, a: ElemId) -> u64 {
        let s = self.slice(a);
        let mut seen = [false; 256];
        let mut ord = 1u64;
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = s[x] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn pow(&self, a: ElemId, e: u64) -> ElemId {
        let p = self.perm(a).pow(e);
        self.index_of(&p).expect("power lies in the group")
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemId> {
        0..self.len as ElemId
    }
}

fn enumerate_level(chain: &StabChain, level: usize, prefix: &Permutation, out: &mut Vec<u8>) {
    if level == chain.depth() {
        out.extend(prefix.images().iter().map(|&x| x as u8));
        return;
    }
    let mut children: Vec<(u32, u32)> = chain
        .orbit(level)
        .iter()
        .map(|&o| (prefix.apply(o), o))
        .collect();
    children.sort_unstable();
    for (_, o) in children {
        let t = chain.transversal(level, o).unwrap();
        let next = t.compose(prefix);
        enumerate_level(chain, level + 1, &next, out);
    }
}
