//! Deterministic Schreier–Sims.
//!
//! The base is always the natural point order with trivial levels pruned, so
//! every point smaller than `base[i]` is fixed by the `i`-th stabilizer. This
//! makes the lexicographic order on image arrays agree with the order on base
//! image tuples, which the enumerator relies on.

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `trans[p]` maps the base point to `p`.
    trans: Vec<Option<Permutation>>,
    trans_inv: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: u32) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            trans: Vec::new(),
            trans_inv: Vec::new(),
        }
    }

    /// Transversal tables stay unallocated while the level has no generators,
    /// which keeps chains of large degree cheap.
    fn rebuild_orbit(&mut self, degree: usize) {
        if self.gens.is_empty() {
            self.trans = Vec::new();
            self.trans_inv = Vec::new();
            self.orbit = vec![self.base];
            return;
        }
        self.trans = vec![None; degree];
        self.trans_inv = vec![None; degree];
        let id = Permutation::identity(degree);
        self.trans[self.base as usize] = Some(id.clone());
        self.trans_inv[self.base as usize] = Some(id);
        self.orbit = vec![self.base];
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let q = s.apply(p);
                if self.trans[q as usize].is_none() {
                    let u = self.trans[p as usize].as_ref().unwrap().compose(s);
                    self.trans_inv[q as usize] = Some(u.inverse());
                    self.trans[q as usize] = Some(u);
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut levels: Vec<Level> = (0..degree as u32).map(Level::new).collect();
        for g in generators {
            if g.is_identity() {
                continue;
            }
            let first_moved = (0..degree).find(|&i| g.apply(i as u32) != i as u32).unwrap();
            for level in levels.iter_mut().take(first_moved + 1) {
                level.gens.push(g.clone());
            }
        }
        for level in levels.iter_mut().filter(|l| !l.gens.is_empty()) {
            level.rebuild_orbit(degree);
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain.levels.retain(|l| l.orbit.len() > 1);
        chain
    }

    fn complete(&mut self) {
        let k = self.levels.len();
        let mut i = k as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut restart_at: Option<usize> = None;
            'scan: for oi in 0..self.levels[iu].orbit.len() {
                let beta = self.levels[iu].orbit[oi];
                for si in 0..self.levels[iu].gens.len() {
                    let level = &self.levels[iu];
                    let s = &level.gens[si];
                    let image = s.apply(beta);
                    let u_beta = level.trans[beta as usize].as_ref().unwrap();
                    let u_img_inv = level.trans_inv[image as usize].as_ref().unwrap();
                    let h = u_beta.compose(s).compose(u_img_inv);
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.sift_from(h, iu + 1);
                    if !residue.is_identity() {
                        // the residue fixes base[0..j]; it must move base[j] since
                        // the base covers every point
                        for l in iu + 1..=j {
                            self.levels[l].gens.push(residue.clone());
                            self.levels[l].rebuild_orbit(self.degree);
                        }
                        restart_at = Some(j);
                        break 'scan;
                    }
                }
            }
            match restart_at {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts from `start`; returns the residue and the level where sifting stopped.
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (idx, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base);
            if beta == level.base {
                continue;
            }
            match level.trans_inv.get(beta as usize) {
                Some(Some(u_inv)) => g = g.compose(u_inv),
                _ => return (g, idx),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_from(g.clone(), 0).0.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Strong generators, deduplicated, in level order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Generators of the pointwise stabilizer of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }

    /// Orbit of the base point at `level`, in discovery order.
    pub fn orbit(&self, level: usize) -> &[u32] {
        &self.levels[level].orbit
    }

    pub fn transversal(&self, level: usize, point: u32) -> Option<&Permutation> {
        self.levels[level].trans.get(point as usize)?.as_ref()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }
}
