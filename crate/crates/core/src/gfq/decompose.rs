//! Orthogonal decompositions of a formed space under a semisimple isometry.
//!
//! `V = C_V(x) ⊥ U₁ ⊥ … ⊥ U_k` with each `Uᵢ` an irreducible nondegenerate
//! `⟨x⟩`-module, or a pair `X ⊕ Y` of totally singular irreducibles when no
//! nondegenerate irreducible exists.

use serde::Serialize;

use super::field::Field;
use super::forms::{FormKind, FormedSpace};
use super::linalg::{
    complement_in, cyclic_subspace, echelon, express, intersect, left_kernel, minimal_polynomial_on,
    poly_divrem, poly_factor, poly_is_irreducible, apply_poly, rank, sum, vector_annihilator, Matrix,
    Poly, Vector,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SummandKind {
    Irreducible,
    /// `X ⊕ Y` with `X`, `Y` totally singular irreducibles.
    Paired {
        x_part: Vec<Vector>,
        y_part: Vec<Vector>,
        x_minpoly: Poly,
        y_minpoly: Poly,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub basis: Vec<Vector>,
    pub dim: usize,
    /// Minimal polynomial of `x` on the summand.
    pub minpoly: Poly,
    pub kind: SummandKind,
}

impl Summand {
    fn irreducible(x: &Matrix, basis: Vec<Vector>) -> Self {
        Summand {
            dim: basis.len(),
            minpoly: minimal_polynomial_on(x, &basis),
            basis,
            kind: SummandKind::Irreducible,
        }
    }

    /// The eigenvalue of `x` on a one-dimensional summand.
    pub fn eigenvalue(&self) -> Option<u8> {
        (self.minpoly.len() == 2).then(|| self.minpoly[0])
    }

    pub fn is_paired(&self) -> bool {
        matches!(self.kind, SummandKind::Paired { .. })
    }

    /// Irreducible constituents with their minimal polynomials.
    pub fn parts(&self) -> Vec<(&[Vector], &Poly)> {
        match &self.kind {
            SummandKind::Irreducible => vec![(&self.basis[..], &self.minpoly)],
            SummandKind::Paired {
                x_part,
                y_part,
                x_minpoly,
                y_minpoly,
            } => vec![(&x_part[..], x_minpoly), (&y_part[..], y_minpoly)],
        }
    }
}

#[derive(Clone, Debug)]
pub struct SemisimpleDecomposition {
    pub x: Matrix,
    pub fixed: Vec<Vector>,
    pub summands: Vec<Summand>,
}

impl SemisimpleDecomposition {
    pub fn summand_dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.dim).collect()
    }
}

/// `C_V(x) = ker(x − 1)`.
pub fn fixed_space(x: &Matrix, v: &FormedSpace) -> Result<Vec<Vector>> {
    check_element(x, v)?;
    Ok(left_kernel(x.field(), x.minus_identity().rows()))
}

/// `[V, x] = im(x − 1)`.
pub fn commutator_space(x: &Matrix, v: &FormedSpace) -> Result<Vec<Vector>> {
    check_element(x, v)?;
    Ok(echelon(x.field(), x.minus_identity().rows()))
}

fn check_element(x: &Matrix, v: &FormedSpace) -> Result<()> {
    if !x.is_square() || x.ncols() != v.dim() || x.field().order() != v.field().order() {
        return Err(Error::Matrix("element does not act on the space".into()));
    }
    if x.inverse().is_none() {
        return Err(Error::Matrix("element is not invertible".into()));
    }
    if !v.preserves(x) {
        return Err(Error::Precondition("element does not preserve the form".into()));
    }
    Ok(())
}

/// An `x`-invariant complement of `sub` in the invariant subspace `ambient`,
/// as the kernel of the averaged projection `Σ x^{-i}·π₀·x^i` onto `sub`.
fn invariant_complement(x: &Matrix, order: u64, sub: &[Vector], ambient: &[Vector]) -> Vec<Vector> {
    let f = x.field();
    let sub = echelon(f, sub);
    let c0 = complement_in(f, &sub, ambient);
    let mut basis = sub.clone();
    basis.extend_from_slice(&c0);
    let x_inv = x.inverse().expect("invertible");
    let project0 = |v: &Vector| -> Vector {
        let c = express(f, &basis, v).expect("vector lies in the ambient space");
        sub.iter().enumerate().fold(Vector::zero(), |acc, (i, b)| acc.axpy(f, c[i], b))
    };
    // `order` is odd, so 1/order = 1 in characteristic 2.
    let project = |v: &Vector| -> Vector {
        let mut acc = Vector::zero();
        let mut vi = *v;
        let mut back = Matrix::identity(f, x.ncols());
        for _ in 0..order {
            acc = acc.add(&back.apply(&project0(&vi)));
            vi = x.apply(&vi);
            back = back.mul(&x_inv);
        }
        acc
    };
    let images: Vec<Vector> = basis.iter().map(project).collect();
    let kernel = left_kernel(f, &images);
    let vecs: Vec<Vector> = kernel
        .iter()
        .map(|c| {
            basis
                .iter()
                .enumerate()
                .fold(Vector::zero(), |acc, (i, b)| acc.axpy(f, c.get(i), b))
        })
        .collect();
    echelon(f, &vecs)
}

/// An irreducible submodule inside the invariant subspace `w`, generated by
/// the first basis vector of `w`.
fn first_irreducible(x: &Matrix, w: &[Vector]) -> Vec<Vector> {
    let f = x.field();
    let v = w[0];
    let ann = vector_annihilator(x, &v);
    let (g, _) = poly_factor(f, &ann)[0].clone();
    let (cofactor, _) = poly_divrem(f, &ann, &g);
    let u = apply_poly(x, &cofactor, &v);
    cyclic_subspace(x, &u)
}

fn is_singular_module(space: &FormedSpace, u: &[Vector]) -> bool {
    space.is_totally_singular(u)
}

/// Every vector of the subspace spanned by `basis`.
fn span_vectors<'a>(f: &'a Field, basis: &'a [Vector]) -> impl Iterator<Item = Vector> + 'a {
    let q = f.order() as usize;
    let total = q.pow(basis.len() as u32);
    (1..total).map(move |mut code| {
        let mut v = Vector::zero();
        for b in basis {
            let c = (code % q) as u8;
            code /= q;
            if c != 0 {
                v = v.axpy(f, c, b);
            }
        }
        v
    })
}

/// Irreducible submodules of `w` reachable as cyclic modules of single vectors.
fn irreducible_submodules(x: &Matrix, w: &[Vector]) -> Vec<Vec<Vector>> {
    let f = x.field();
    let mut seen: Vec<Vec<Vector>> = Vec::new();
    for v in span_vectors(f, w) {
        if !poly_is_irreducible(f, &vector_annihilator(x, &v)) {
            continue;
        }
        let u = cyclic_subspace(x, &v);
        if !seen.contains(&u) {
            seen.push(u);
        }
    }
    seen
}

struct Decomposer<'a> {
    x: &'a Matrix,
    order: u64,
    space: &'a FormedSpace,
    out: Vec<Summand>,
}

impl Decomposer<'_> {
    fn formed(&self) -> bool {
        self.space.kind() != FormKind::None
    }

    fn nondegenerate(&self, u: &[Vector]) -> bool {
        !self.formed() || self.space.is_nondegenerate(u)
    }

    /// The part of `w` complementary to the invariant subspace `u ≤ w`:
    /// `u^⊥ ∩ w` in formed spaces, an invariant complement otherwise.
    fn rest(&self, u: &[Vector], w: &[Vector]) -> Vec<Vector> {
        if self.formed() {
            self.space.perp_within(u, w)
        } else {
            invariant_complement(self.x, self.order, u, w)
        }
    }

    fn run(&mut self, w: Vec<Vector>) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let u = first_irreducible(self.x, &w);
        if self.nondegenerate(&u) {
            let rest = self.rest(&u, &w);
            self.out.push(Summand::irreducible(self.x, u));
            return self.run(rest);
        }
        if !is_singular_module(self.space, &u) {
            return Err(Error::Matrix("irreducible submodule is neither nondegenerate nor singular".into()));
        }
        if w.len() == 2 * u.len() {
            return self.split_hyperbolic(u, w);
        }
        let f = self.x.field();
        let u_perp = self.space.perp_within(&u, &w);
        let w1 = invariant_complement(self.x, self.order, &u, &u_perp);
        let w2 = self.space.perp_within(&w1, &w);
        debug_assert_eq!(rank(f, &sum(f, &w1, &w2)), w.len());
        self.run(w1)?;
        self.run(w2)
    }

    /// `w` has twice the dimension of a totally singular irreducible `u`.
    fn split_hyperbolic(&mut self, u: Vec<Vector>, w: Vec<Vector>) -> Result<()> {
        let f = self.x.field();
        let subs = irreducible_submodules(self.x, &w);
        if let Some(nd) = subs.iter().find(|s| self.space.is_nondegenerate(s)) {
            let rest = self.space.perp_within(nd, &w);
            self.out.push(Summand::irreducible(self.x, nd.clone()));
            return self.run(rest);
        }
        let y = subs
            .iter()
            .find(|s| intersect(f, s, &u).is_empty() && is_singular_module(self.space, s))
            .ok_or_else(|| Error::Matrix("no singular complement for a paired summand".into()))?
            .clone();
        let x_minpoly = minimal_polynomial_on(self.x, &u);
        let y_minpoly = minimal_polynomial_on(self.x, &y);
        self.out.push(Summand {
            basis: sum(f, &u, &y),
            dim: w.len(),
            minpoly: minimal_polynomial_on(self.x, &w),
            kind: SummandKind::Paired {
                x_part: u,
                y_part: y,
                x_minpoly,
                y_minpoly,
            },
        });
        Ok(())
    }
}

/// Decomposes `V` under an isometry `x` of order 3, 5 or 9 (9 only for
/// hermitian forms).
pub fn decompose_under(x: &Matrix, v: &FormedSpace) -> Result<SemisimpleDecomposition> {
    check_element(x, v)?;
    let order = x.order(64).unwrap_or(0);
    let allowed = match order {
        3 | 5 => true,
        9 => v.kind() == FormKind::Hermitian,
        _ => false,
    };
    if !allowed {
        return Err(Error::Precondition(format!("element order {order} is out of scope")));
    }
    let fixed = fixed_space(x, v)?;
    let moved = commutator_space(x, v)?;
    let mut d = Decomposer {
        x,
        order,
        space: v,
        out: Vec::new(),
    };
    d.run(moved)?;
    Ok(SemisimpleDecomposition {
        x: x.clone(),
        fixed,
        summands: d.out,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn record(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: if passed { String::new() } else { detail.into() },
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Least `d` with `q^d ≡ 1 (mod o)`.
fn splitting_degree(q: u64, o: u64) -> u64 {
    let mut d = 1;
    let mut p = q % o;
    while p != 1 % o {
        p = p * q % o;
        d += 1;
    }
    d
}

/// Dual of a monic irreducible under the form: reciprocal, conjugated in the
/// hermitian case.
fn dual_poly(space: &FormedSpace, p: &[u8]) -> Poly {
    let f = space.field();
    let rev: Poly = p.iter().rev().copied().collect();
    let inv = f.inv(rev[rev.len() - 1]).unwrap_or(1);
    rev.iter()
        .map(|&c| {
            let c = f.mul(c, inv);
            if space.kind() == FormKind::Hermitian {
                f.conjugate(c)
            } else {
                c
            }
        })
        .collect()
}

pub fn validate_decomposition(dec: &SemisimpleDecomposition, v: &FormedSpace) -> ValidationReport {
    let mut report = ValidationReport::default();
    let x = &dec.x;
    let f = v.field();
    let n = v.dim();
    let formed = v.kind() != FormKind::None;

    report.record("form preserved", v.preserves(x), "x is not an isometry");

    let fixed_ok = echelon(f, &dec.fixed) == left_kernel(f, x.minus_identity().rows());
    report.record("fixed part is C_V(x)", fixed_ok, "fixed part differs from ker(x − 1)");

    let invariant = |b: &[Vector]| {
        let e = echelon(f, b);
        b.iter().all(|u| rank(f, &sum(f, &e, &[x.apply(u)])) == e.len())
    };
    let bad: Vec<usize> = dec
        .summands
        .iter()
        .enumerate()
        .filter(|(_, s)| !invariant(&s.basis) || s.parts().iter().any(|(p, _)| !invariant(p)))
        .map(|(i, _)| i)
        .collect();
    report.record("x-invariance", bad.is_empty(), format!("summands {bad:?} are not invariant"));

    let mut all = dec.fixed.clone();
    let mut total = dec.fixed.len();
    for s in &dec.summands {
        all.extend_from_slice(&s.basis);
        total += s.basis.len();
    }
    let direct = total == n && rank(f, &all) == n;
    report.record(
        "direct sum spans V",
        direct,
        format!("dimensions sum to {total}, span has rank {}", rank(f, &all)),
    );
    let dims_ok = dec.summands.iter().all(|s| s.dim == s.basis.len());
    report.record("recorded dimensions", dims_ok, "summand dim differs from basis length");

    let mut irreducible_ok = true;
    let mut dims_arith_ok = true;
    for s in &dec.summands {
        for (part, mp) in s.parts() {
            let m = minimal_polynomial_on(x, part);
            if m != *mp || !poly_is_irreducible(f, &m) || m.len() - 1 != part.len() {
                irreducible_ok = false;
            }
            let o = x.restrict(part).ok().and_then(|r| r.order(64)).unwrap_or(0);
            if o <= 1 || splitting_degree(f.order() as u64, o) != part.len() as u64 {
                dims_arith_ok = false;
            }
        }
    }
    report.record("irreducibility", irreducible_ok, "a summand has a proper invariant subspace");
    report.record(
        "summand dimensions",
        dims_arith_ok,
        "a summand dimension is not the splitting degree of its eigenvalues",
    );

    if formed {
        let mut blocks: Vec<&[Vector]> = vec![&dec.fixed[..]];
        blocks.extend(dec.summands.iter().map(|s| &s.basis[..]));
        let mut perp_ok = true;
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if !v.are_perpendicular(blocks[i], blocks[j]) {
                    perp_ok = false;
                }
            }
        }
        report.record("pairwise perpendicular", perp_ok, "two summands are not perpendicular");

        let degenerate: Vec<usize> = blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty() && !v.is_nondegenerate(b))
            .map(|(i, _)| i)
            .collect();
        report.record(
            "nondegenerate",
            degenerate.is_empty(),
            format!("blocks {degenerate:?} are degenerate (0 is the fixed part)"),
        );

        let paired_ok = dec.summands.iter().all(|s| match &s.kind {
            SummandKind::Irreducible => true,
            SummandKind::Paired { x_part, y_part, .. } => {
                v.is_totally_singular(x_part)
                    && v.is_totally_singular(y_part)
                    && intersect(f, x_part, y_part).is_empty()
            }
        });
        report.record("paired summands", paired_ok, "paired parts are not totally singular");

        let mut polys: Vec<Poly> = Vec::new();
        for s in &dec.summands {
            for (_, p) in s.parts() {
                polys.push(p.clone());
            }
        }
        let count = |p: &Poly| polys.iter().filter(|q| *q == p).count();
        let dual_ok = polys.iter().all(|p| count(p) == count(&dual_poly(v, p)));
        report.record(
            "dual multiplicities",
            dual_ok,
            "a minimal polynomial and its dual occur unequally often",
        );
    }
    report
}
