//! Classical groups over GF(2) and GF(4): generators, orders, permutation
//! images on nonzero vectors, and random elements.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::field::Elem;
use super::forms::{dickson_invariant, FormKind, FormedSpace};
use super::linalg::{Matrix, Vector};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::StabChain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalKind {
    Linear,
    Symplectic,
    Unitary,
    OrthogonalPlus,
    OrthogonalMinus,
    OmegaPlus,
    OmegaMinus,
}

impl ClassicalKind {
    pub fn form_kind(self) -> FormKind {
        match self {
            ClassicalKind::Linear => FormKind::None,
            ClassicalKind::Symplectic => FormKind::Symplectic,
            ClassicalKind::Unitary => FormKind::Hermitian,
            ClassicalKind::OrthogonalPlus | ClassicalKind::OmegaPlus => FormKind::QuadraticPlus,
            ClassicalKind::OrthogonalMinus | ClassicalKind::OmegaMinus => FormKind::QuadraticMinus,
        }
    }

    pub fn field_order(self) -> u32 {
        if self == ClassicalKind::Unitary {
            4
        } else {
            2
        }
    }

    pub fn label(self, n: usize) -> String {
        match self {
            ClassicalKind::Linear => format!("GL({n},2)"),
            ClassicalKind::Symplectic => format!("Sp({n},2)"),
            ClassicalKind::Unitary => format!("GU({n},2)"),
            ClassicalKind::OrthogonalPlus => format!("GO+({n},2)"),
            ClassicalKind::OrthogonalMinus => format!("GO-({n},2)"),
            ClassicalKind::OmegaPlus => format!("Omega+({n},2)"),
            ClassicalKind::OmegaMinus => format!("Omega-({n},2)"),
        }
    }

    fn is_omega(self) -> bool {
        matches!(self, ClassicalKind::OmegaPlus | ClassicalKind::OmegaMinus)
    }
}

pub fn standard_space(kind: ClassicalKind, n: usize) -> Result<FormedSpace> {
    FormedSpace::standard(kind.form_kind(), n, kind.field_order())
}

fn pow2(e: u32) -> u128 {
    1u128 << e
}

pub fn gl_order(n: usize, q: u128) -> u128 {
    let qn = q.pow(n as u32);
    (0..n as u32).map(|i| qn - q.pow(i)).product()
}

pub fn sp_order(n: usize, q: u128) -> u128 {
    let m = (n / 2) as u32;
    q.pow(m * m) * (1..=m).map(|i| q.pow(2 * i) - 1).product::<u128>()
}

/// `|GU_n(q)|` for the unitary group over GF(q²).
pub fn gu_order(n: usize, q: u128) -> u128 {
    let n = n as u32;
    let mut out = q.pow(n * n.saturating_sub(1) / 2);
    for i in 1..=n {
        let t = q.pow(i) as i128 - if i % 2 == 0 { 1 } else { -1 };
        out *= t as u128;
    }
    out
}

/// `|Ω^ε_n(2)|`; dimension 0 gives 1.
pub fn omega_order(n: usize, plus: bool) -> u128 {
    let m = (n / 2) as u32;
    if m == 0 {
        return 1;
    }
    let top = if plus { pow2(m) - 1 } else { pow2(m) + 1 };
    pow2(m * (m - 1)) * top * (1..m).map(|i| pow2(2 * i) - 1).product::<u128>()
}

pub fn group_order(kind: ClassicalKind, n: usize) -> Result<u128> {
    let even = |n: usize| -> Result<()> {
        if n % 2 == 1 || n == 0 {
            Err(Error::Precondition(format!("{} needs even positive dimension", kind.label(n))))
        } else {
            Ok(())
        }
    };
    Ok(match kind {
        ClassicalKind::Linear => gl_order(n, 2),
        ClassicalKind::Symplectic => {
            even(n)?;
            sp_order(n, 2)
        }
        ClassicalKind::Unitary => gu_order(n, 2),
        ClassicalKind::OrthogonalPlus => {
            even(n)?;
            2 * omega_order(n, true)
        }
        ClassicalKind::OrthogonalMinus => {
            even(n)?;
            2 * omega_order(n, false)
        }
        ClassicalKind::OmegaPlus => {
            even(n)?;
            omega_order(n, true)
        }
        ClassicalKind::OmegaMinus => {
            even(n)?;
            omega_order(n, false)
        }
    })
}

/// `x ↦ x + a·B(x, v)·v`.
fn transvection(space: &FormedSpace, v: &Vector, a: Elem) -> Matrix {
    let f = space.field();
    let n = space.dim();
    let rows = (0..n)
        .map(|i| {
            let e = Vector::unit(i);
            let c = f.mul(a, space.form(&e, v));
            e.axpy(f, c, v)
        })
        .collect();
    Matrix::from_rows(f, n, rows)
}

/// Isometries found by backtracking over images of the basis vectors.
pub fn all_isometries(space: &FormedSpace) -> Vec<Matrix> {
    let n = space.dim();
    let q = space.field().order();
    let total = (q as usize).pow(n as u32);
    let candidates: Vec<Vector> = (1..total).map(|c| Vector::decode(c, n, q)).collect();
    let mut out = Vec::new();
    let mut rows: Vec<Vector> = Vec::new();
    backtrack(space, &candidates, &mut rows, &mut out);
    out
}

fn backtrack(space: &FormedSpace, cands: &[Vector], rows: &mut Vec<Vector>, out: &mut Vec<Matrix>) {
    let n = space.dim();
    let i = rows.len();
    if i == n {
        let m = Matrix::from_rows(space.field(), n, rows.clone());
        if m.rank() == n {
            out.push(m);
        }
        return;
    }
    let ei = Vector::unit(i);
    for c in cands {
        if space.quad().is_some() && space.quadratic(c) != space.quadratic(&ei) {
            continue;
        }
        if space.kind() != FormKind::None {
            let ok = (0..=i).all(|j| {
                let rj = if j == i { c } else { &rows[j] };
                space.form(c, rj) == space.gram().get(i, j)
            });
            if !ok {
                continue;
            }
        }
        rows.push(*c);
        backtrack(space, cands, rows, out);
        rows.pop();
    }
}

/// A generating subset of a finite list of matrices, chosen greedily.
fn greedy_generators(space: &FormedSpace, elems: &[Matrix], target: u128) -> Result<Vec<Matrix>> {
    let mut gens: Vec<Matrix> = Vec::new();
    let mut perms: Vec<Permutation> = Vec::new();
    let mut chain = StabChain::new(vector_count(space), &[]);
    for m in elems {
        if chain.order() == target {
            break;
        }
        let p = matrix_to_permutation(space, m);
        if !chain.contains(&p) {
            perms.push(p);
            gens.push(m.clone());
            chain = StabChain::new(vector_count(space), &perms);
        }
    }
    if chain.order() != target {
        return Err(Error::OrderMismatch {
            name: "isometry subset".into(),
            computed: chain.order(),
            expected: target,
        });
    }
    Ok(gens)
}

fn vector_count(space: &FormedSpace) -> usize {
    (space.field().order() as usize).pow(space.dim() as u32) - 1
}

/// Generators of the classical group of `kind` preserving the form of `space`.
pub fn classical_generators(kind: ClassicalKind, space: &FormedSpace) -> Result<Vec<Matrix>> {
    if space.kind() != kind.form_kind() {
        return Err(Error::Precondition("space does not carry the form of this group".into()));
    }
    let n = space.dim();
    let f = space.field();
    if n > 10 {
        return Err(Error::Precondition(format!("{} is out of range", kind.label(n))));
    }
    let pairs = n / 2;
    match kind {
        ClassicalKind::Linear => {
            let mut gens = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let mut m = Matrix::identity(f, n);
                        m.set(i, j, 1);
                        gens.push(m);
                    }
                }
            }
            Ok(gens)
        }
        ClassicalKind::Symplectic => {
            let mut vs: Vec<Vector> = (0..n).map(Vector::unit).collect();
            for i in 0..pairs.saturating_sub(1) {
                vs.push(Vector::unit(2 * i).add(&Vector::unit(2 * i + 2)));
            }
            Ok(vs.iter().map(|v| transvection(space, v, 1)).collect())
        }
        ClassicalKind::Unitary => {
            let w = f.omega().unwrap();
            // transvections in isotropic vectors and x ↦ x + (ω − 1)·B(x, v)·v
            // for B(v, v) = 1, with v supported on three adjacent coordinates
            let mut gens: Vec<Matrix> = Vec::new();
            let width = n.min(3);
            for start in 0..=n - width {
                for code in 1..4usize.pow(width as u32) {
                    let mut v = Vector::zero();
                    let mut c = code;
                    for k in 0..width {
                        v.set(start + k, (c % 4) as Elem);
                        c /= 4;
                    }
                    let a = if space.form(&v, &v) == 0 { 1 } else { w ^ 1 };
                    let t = transvection(space, &v, a);
                    if !gens.contains(&t) {
                        gens.push(t);
                    }
                }
            }
            Ok(gens)
        }
        _ => {
            let plus = matches!(kind, ClassicalKind::OrthogonalPlus | ClassicalKind::OmegaPlus);
            if n <= 4 {
                let target = group_order(kind, n)?;
                let all: Vec<Matrix> = all_isometries(space)
                    .into_iter()
                    .filter(|m| !kind.is_omega() || dickson_invariant(m) == 0)
                    .collect();
                return greedy_generators(space, &all, target);
            }
            let _ = plus;
            let reflections = orthogonal_reflections(space);
            if kind.is_omega() {
                let r0 = &reflections[0];
                Ok(reflections[1..].iter().map(|r| r0.mul(r)).collect())
            } else {
                Ok(reflections)
            }
        }
    }
}

/// Reflections `x ↦ x + B(x, v)·v` in nonsingular vectors supported on two
/// adjacent hyperbolic pairs.
fn orthogonal_reflections(space: &FormedSpace) -> Vec<Matrix> {
    let n = space.dim();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for start in (0..n.saturating_sub(2)).step_by(2) {
        for bits in 1u32..16 {
            let mut v = Vector::zero();
            for k in 0..4 {
                if (bits >> k) & 1 == 1 {
                    v.set(start + k, 1);
                }
            }
            if space.quadratic(&v) == 1 && seen.insert(v) {
                out.push(transvection(space, &v, 1));
            }
        }
    }
    out
}

/// The permutation induced on nonzero vectors; vector `v` is point `code(v) − 1`.
pub fn matrix_to_permutation(space: &FormedSpace, m: &Matrix) -> Permutation {
    let n = space.dim();
    let q = space.field().order();
    let count = vector_count(space);
    let images = (1..=count)
        .map(|c| (m.apply(&Vector::decode(c, n, q)).encode(n, q) - 1) as u32)
        .collect();
    Permutation::from_images(images).expect("invertible matrix permutes nonzero vectors")
}

/// Inverse of [`matrix_to_permutation`].
pub fn permutation_to_matrix(space: &FormedSpace, p: &Permutation) -> Result<Matrix> {
    let n = space.dim();
    let q = space.field().order();
    if p.degree() != vector_count(space) {
        return Err(Error::DegreeMismatch(vector_count(space), p.degree()));
    }
    let rows: Vec<Vector> = (0..n)
        .map(|i| {
            let code = Vector::unit(i).encode(n, q);
            Vector::decode(p.apply(code as u32 - 1) as usize + 1, n, q)
        })
        .collect();
    let m = Matrix::from_rows(space.field(), n, rows);
    if matrix_to_permutation(space, &m) != *p {
        return Err(Error::Matrix("permutation is not induced by a linear map".into()));
    }
    Ok(m)
}

pub fn permutation_image(space: &FormedSpace, mats: &[Matrix]) -> Result<(usize, Vec<Permutation>)> {
    let degree = vector_count(space);
    if degree > 1023 {
        return Err(Error::Precondition(format!(
            "action on {degree} vectors is too large"
        )));
    }
    Ok((degree, mats.iter().map(|m| matrix_to_permutation(space, m)).collect()))
}

/// Random group elements by product replacement.
pub struct RandomElements<R: Rng> {
    slots: Vec<Matrix>,
    acc: Matrix,
    rng: R,
}

impl<R: Rng> RandomElements<R> {
    pub fn new(gens: &[Matrix], rng: R) -> Self {
        assert!(!gens.is_empty(), "need at least one generator");
        let mut slots = gens.to_vec();
        while slots.len() < 10 {
            slots.push(gens[slots.len() % gens.len()].clone());
        }
        let acc = Matrix::identity(gens[0].field(), gens[0].ncols());
        let mut out = RandomElements { slots, acc, rng };
        for _ in 0..60 {
            out.next_element();
        }
        out
    }

    pub fn next_element(&mut self) -> Matrix {
        let k = self.slots.len();
        let i = self.rng.gen_range(0..k);
        let mut j = self.rng.gen_range(0..k - 1);
        if j >= i {
            j += 1;
        }
        let factor = if self.rng.gen_bool(0.5) {
            self.slots[j].clone()
        } else {
            self.slots[j].inverse().expect("group elements are invertible")
        };
        self.slots[i] = if self.rng.gen_bool(0.5) {
            self.slots[i].mul(&factor)
        } else {
            factor.mul(&self.slots[i])
        };
        self.acc = self.acc.mul(&self.slots[i]);
        self.acc.clone()
    }

    /// A random element of order `order` satisfying `accept`, as a power of a
    /// random element.
    pub fn element_of_order(
        &mut self,
        order: u64,
        tries: usize,
        accept: impl Fn(&Matrix) -> bool,
    ) -> Option<Matrix> {
        for _ in 0..tries {
            let g = self.next_element();
            let Some(o) = g.order(4096) else { continue };
            if o % order == 0 {
                let x = g.pow(o / order);
                if accept(&x) {
                    return Some(x);
                }
            }
        }
        None
    }
}

/// `g⁻¹·x·g`.
pub fn conjugate(x: &Matrix, g: &Matrix) -> Matrix {
    g.inverse().expect("invertible").mul(x).mul(g)
}

/// Block diagonal matrix over a common field.
pub fn block_diagonal(blocks: &[Matrix]) -> Matrix {
    let f = blocks[0].field();
    let n: usize = blocks.iter().map(Matrix::ncols).sum();
    let mut out = Matrix::zero(f, n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.ncols() {
            for j in 0..b.ncols() {
                out.set(off + i, off + j, b.get(i, j));
            }
        }
        off += b.ncols();
    }
    out
}
