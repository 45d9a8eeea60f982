//! Bit-plane packed vectors and matrices over GF(2^k), k ≤ 4.
//!
//! A vector of length ≤ 64 is four machine words; word `b` holds bit `b` of
//! every coordinate. Addition is XOR on all planes and scaling by a constant
//! is a GF(2)-linear mix of the planes.

use std::fmt;

use super::field::{Elem, Field};
use crate::error::{Error, Result};

pub const MAX_DIM: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Vector {
    planes: [u64; 4],
}

impl Vector {
    pub fn zero() -> Self {
        Vector::default()
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Vector::zero();
        v.planes[0] = 1 << i;
        v
    }

    pub fn from_elems(coords: &[Elem]) -> Self {
        let mut v = Vector::zero();
        for (i, &c) in coords.iter().enumerate() {
            v.set(i, c);
        }
        v
    }

    pub fn to_elems(&self, n: usize) -> Vec<Elem> {
        (0..n).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Elem {
        let mut e = 0;
        for b in 0..4 {
            e |= (((self.planes[b] >> i) & 1) as Elem) << b;
        }
        e
    }

    #[inline]
    pub fn set(&mut self, i: usize, e: Elem) {
        for b in 0..4 {
            let bit = ((e >> b) & 1) as u64;
            self.planes[b] = (self.planes[b] & !(1 << i)) | (bit << i);
        }
    }

    #[inline]
    pub fn add(&self, other: &Vector) -> Vector {
        let mut out = *self;
        for b in 0..4 {
            out.planes[b] ^= other.planes[b];
        }
        out
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.planes.iter().all(|&p| p == 0)
    }

    pub fn scale(&self, f: &Field, c: Elem) -> Vector {
        match c {
            0 => Vector::zero(),
            1 => *self,
            _ => {
                let mut out = Vector::zero();
                for i in 0..f.degree() as usize {
                    let image = f.mul(c, 1 << i);
                    for j in 0..f.degree() as usize {
                        if (image >> j) & 1 == 1 {
                            out.planes[j] ^= self.planes[i];
                        }
                    }
                }
                out
            }
        }
    }

    /// `self + c·other`.
    #[inline]
    pub fn axpy(&self, f: &Field, c: Elem, other: &Vector) -> Vector {
        self.add(&other.scale(f, c))
    }

    /// Index of the first nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        let any = self.planes.iter().fold(0u64, |acc, &p| acc | p);
        (any != 0).then(|| any.trailing_zeros() as usize)
    }

    /// Applies the field automorphism `σ` coordinatewise.
    pub fn map(&self, n: usize, sigma: impl Fn(Elem) -> Elem) -> Vector {
        let mut out = Vector::zero();
        for i in 0..n {
            out.set(i, sigma(self.get(i)));
        }
        out
    }

    /// Integer code `Σ vᵢ·qⁱ`, coordinates taken as bit patterns.
    pub fn encode(&self, n: usize, q: u32) -> usize {
        (0..n).rev().fold(0usize, |acc, i| acc * q as usize + self.get(i) as usize)
    }

    pub fn decode(mut code: usize, n: usize, q: u32) -> Vector {
        let mut v = Vector::zero();
        for i in 0..n {
            v.set(i, (code % q as usize) as Elem);
            code /= q as usize;
        }
        v
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 64 - self.planes.iter().fold(0u64, |a, &p| a | p).leading_zeros() as usize;
        write!(f, "{:?}", self.to_elems(n.max(1)))
    }
}

/// Dense matrix acting on row vectors: `v ↦ v·M`.
#[derive(Clone)]
pub struct Matrix {
    field: &'static Field,
    ncols: usize,
    rows: Vec<Vector>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.ncols == other.ncols && self.rows == other.rows
    }
}

impl Eq for Matrix {}

impl std::hash::Hash for Matrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ncols.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<Elem>> = self.rows.iter().map(|r| r.to_elems(self.ncols)).collect();
        write!(f, "GF({}){:?}", self.field.order(), rows)
    }
}

impl Matrix {
    pub fn from_rows(field: &'static Field, ncols: usize, rows: Vec<Vector>) -> Self {
        debug_assert!(ncols <= MAX_DIM);
        Matrix { field, ncols, rows }
    }

    pub fn from_elems(field: &'static Field, rows: &[Vec<Elem>]) -> Result<Self> {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if ncols > MAX_DIM || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Matrix("ragged or oversized matrix".into()));
        }
        if rows.iter().flatten().any(|&e| e as u32 >= field.order()) {
            return Err(Error::Matrix("entry outside the field".into()));
        }
        Ok(Matrix {
            field,
            ncols,
            rows: rows.iter().map(|r| Vector::from_elems(r)).collect(),
        })
    }

    pub fn identity(field: &'static Field, n: usize) -> Self {
        Matrix {
            field,
            ncols: n,
            rows: (0..n).map(Vector::unit).collect(),
        }
    }

    pub fn zero(field: &'static Field, nrows: usize, ncols: usize) -> Self {
        Matrix {
            field,
            ncols,
            rows: vec![Vector::zero(); nrows],
        }
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Vector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, e: Elem) {
        self.rows[i].set(j, e);
    }

    pub fn to_elems(&self) -> Vec<Vec<Elem>> {
        self.rows.iter().map(|r| r.to_elems(self.ncols)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    /// `v·M`.
    #[inline]
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (j, row) in self.rows.iter().enumerate() {
            let c = v.get(j);
            if c != 0 {
                out = out.axpy(self.field, c, row);
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.ncols, other.nrows());
        Matrix {
            field: self.field,
            ncols: other.ncols,
            rows: self.rows.iter().map(|r| other.apply(r)).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix {
            field: self.field,
            ncols: self.ncols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.add(b)).collect(),
        }
    }

    /// `M - I` (equal to `M + I` in characteristic 2).
    pub fn minus_identity(&self) -> Matrix {
        self.add(&Matrix::identity(self.field, self.ncols))
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        Matrix {
            field: self.field,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.scale(self.field, c)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.ncols, self.nrows());
        for i in 0..self.nrows() {
            for j in 0..self.ncols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Applies a field automorphism entrywise.
    pub fn map_entries(&self, sigma: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix {
            field: self.field,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.map(self.ncols, &sigma)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.rows.iter().enumerate().all(|(i, r)| *r == Vector::unit(i))
    }

    pub fn rank(&self) -> usize {
        echelon(self.field, &self.rows).len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.ncols;
        let f = self.field;
        // rows of [M | I] packed as two vectors
        let mut left: Vec<Vector> = self.rows.clone();
        let mut right: Vec<Vector> = (0..n).map(Vector::unit).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| left[r].get(col) != 0)?;
            left.swap(col, piv);
            right.swap(col, piv);
            let inv = f.inv(left[col].get(col)).unwrap();
            left[col] = left[col].scale(f, inv);
            right[col] = right[col].scale(f, inv);
            for r in 0..n {
                if r != col {
                    let c = left[r].get(col);
                    if c != 0 {
                        left[r] = left[r].axpy(f, c, &left[col]);
                        right[r] = right[r].axpy(f, c, &right[col]);
                    }
                }
            }
        }
        Some(Matrix {
            field: f,
            ncols: n,
            rows: right,
        })
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.ncols);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, searched up to `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let mut x = self.clone();
        for k in 1..=limit {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// Matrix of the restriction to an invariant subspace, in the given basis.
    pub fn restrict(&self, basis: &[Vector]) -> Result<Matrix> {
        let rows = basis
            .iter()
            .map(|b| {
                let img = self.apply(b);
                express(self.field, basis, &img)
                    .map(|c| Vector::from_elems(&c))
                    .ok_or_else(|| Error::Matrix("subspace is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(self.field, basis.len(), rows))
    }

    /// Evaluates a polynomial (low coefficient first) at this matrix.
    pub fn eval_poly(&self, poly: &[Elem]) -> Matrix {
        let n = self.ncols;
        let mut acc = Matrix::zero(self.field, n, n);
        for &c in poly.iter().rev() {
            acc = acc.mul(self).add(&Matrix::identity(self.field, n).scale(c));
        }
        acc
    }
}

/// Reduced row echelon basis of the span of `rows`.
pub fn echelon(f: &Field, rows: &[Vector]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for r in rows {
        let mut v = reduce(f, &basis, r);
        if let Some(p) = v.leading() {
            let inv = f.inv(v.get(p)).unwrap();
            v = v.scale(f, inv);
            for b in basis.iter_mut() {
                let c = b.get(p);
                if c != 0 {
                    *b = b.axpy(f, c, &v);
                }
            }
            basis.push(v);
        }
    }
    basis.sort_by_key(|b| b.leading());
    basis
}

/// Reduces `v` against a basis in reduced echelon form.
pub fn reduce(f: &Field, basis: &[Vector], v: &Vector) -> Vector {
    let mut v = *v;
    for b in basis {
        let p = b.leading().unwrap();
        let c = v.get(p);
        if c != 0 {
            v = v.axpy(f, c, b);
        }
    }
    v
}

pub fn rank(f: &Field, rows: &[Vector]) -> usize {
    echelon(f, rows).len()
}

pub fn in_span(f: &Field, echelon_basis: &[Vector], v: &Vector) -> bool {
    reduce(f, echelon_basis, v).is_zero()
}

/// All coefficient vectors `c` (length `rows.len()`) with `Σ cᵢ·rowsᵢ = 0`.
pub fn left_kernel(f: &Field, rows: &[Vector]) -> Vec<Vector> {
    let m = rows.len();
    assert!(m <= MAX_DIM);
    let mut pairs: Vec<(Vector, Vector)> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| (*r, Vector::unit(i)))
        .collect();
    let mut kernel = Vec::new();
    let mut pivots: Vec<(usize, Vector, Vector)> = Vec::new();
    for (mut a, mut b) in pairs.drain(..) {
        for (p, pa, pb) in &pivots {
            let c = a.get(*p);
            if c != 0 {
                a = a.axpy(f, c, pa);
                b = b.axpy(f, c, pb);
            }
        }
        match a.leading() {
            None => kernel.push(b),
            Some(p) => {
                let inv = f.inv(a.get(p)).unwrap();
                pivots.push((p, a.scale(f, inv), b.scale(f, inv)));
            }
        }
    }
    echelon(f, &kernel)
}

/// Coordinates of `v` in terms of a linearly independent list.
pub fn express(f: &Field, basis: &[Vector], v: &Vector) -> Option<Vec<Elem>> {
    let mut rows = basis.to_vec();
    rows.push(*v);
    let k = left_kernel(f, &rows);
    let last = basis.len();
    let sol = k.iter().find(|c| c.get(last) != 0)?;
    // Σ cᵢbᵢ + c_last·v = 0  ⇒  v = Σ (cᵢ / c_last) bᵢ
    let inv = f.inv(sol.get(last)).unwrap();
    Some((0..last).map(|i| f.mul(sol.get(i), inv)).collect())
}

pub fn intersect(f: &Field, u: &[Vector], w: &[Vector]) -> Vec<Vector> {
    let u = echelon(f, u);
    let w = echelon(f, w);
    let mut rows = u.clone();
    rows.extend_from_slice(&w);
    let k = left_kernel(f, &rows);
    let vecs: Vec<Vector> = k
        .iter()
        .map(|c| {
            u.iter()
                .enumerate()
                .fold(Vector::zero(), |acc, (i, b)| acc.axpy(f, c.get(i), b))
        })
        .collect();
    echelon(f, &vecs)
}

pub fn sum(f: &Field, u: &[Vector], w: &[Vector]) -> Vec<Vector> {
    let mut rows = u.to_vec();
    rows.extend_from_slice(w);
    echelon(f, &rows)
}

/// Extends an independent list to a basis of `ambient`, returning only the added vectors.
pub fn complement_in(f: &Field, sub: &[Vector], ambient: &[Vector]) -> Vec<Vector> {
    let mut basis = echelon(f, sub);
    let mut added = Vec::new();
    for a in ambient {
        if !in_span(f, &basis, a) {
            added.push(*a);
            let mut rows = basis.clone();
            rows.push(*a);
            basis = echelon(f, &rows);
        }
    }
    added
}

/// Polynomials over the field, lowest coefficient first, no trailing zeros.
pub type Poly = Vec<Elem>;

pub fn poly_trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn poly_mul(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] ^= f.mul(x, y);
        }
    }
    poly_trim(out)
}

/// `(quotient, remainder)`.
pub fn poly_divrem(f: &Field, a: &[Elem], b: &[Elem]) -> (Poly, Poly) {
    let b = poly_trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = poly_trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - b.len() + 1];
    let lead_inv = f.inv(*b.last().unwrap()).unwrap();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(*r.last().unwrap(), lead_inv);
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] ^= f.mul(c, bi);
        }
        r = poly_trim(r);
    }
    (poly_trim(q), r)
}

pub fn poly_monic(f: &Field, a: &[Elem]) -> Poly {
    let a = poly_trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&lead) => {
            let inv = f.inv(lead).unwrap();
            a.iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

pub fn poly_gcd(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = poly_divrem(f, &a, &b);
        a = b;
        b = r;
    }
    poly_monic(f, &a)
}

pub fn poly_lcm(f: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let g = poly_gcd(f, a, b);
    let (q, _) = poly_divrem(f, &poly_mul(f, a, b), &g);
    poly_monic(f, &q)
}

/// Monic irreducible factors with multiplicity, by trial division.
pub fn poly_factor(f: &Field, a: &[Elem]) -> Vec<(Poly, u32)> {
    let mut rest = poly_monic(f, a);
    let mut out = Vec::new();
    let q = f.order() as usize;
    let mut d = 1;
    while rest.len() > 1 && 2 * d <= rest.len() - 1 {
        // monic polynomials of degree d in lexicographic order of coefficients
        for code in 0..q.pow(d as u32) {
            let mut cand: Poly = (0..d).map(|i| ((code / q.pow(i as u32)) % q) as Elem).collect();
            cand.push(1);
            let mut mult = 0;
            loop {
                let (quo, r) = poly_divrem(f, &rest, &cand);
                if !r.is_empty() {
                    break;
                }
                rest = quo;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        match out.iter_mut().find(|(p, _)| *p == rest) {
            Some(entry) => entry.1 += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort();
    out
}

pub fn poly_is_irreducible(f: &Field, a: &[Elem]) -> bool {
    let fac = poly_factor(f, a);
    fac.len() == 1 && fac[0].1 == 1
}

/// Monic annihilator of `v` under `x`: least-degree `p` with `v·p(x) = 0`.
pub fn vector_annihilator(x: &Matrix, v: &Vector) -> Poly {
    let f = x.field();
    let mut krylov = vec![*v];
    loop {
        let next = x.apply(krylov.last().unwrap());
        let mut rows = krylov.clone();
        rows.push(next);
        if let Some(c) = left_kernel(f, &rows).first() {
            let p: Poly = (0..rows.len()).map(|i| c.get(i)).collect();
            return poly_monic(f, &p);
        }
        krylov.push(next);
    }
}

/// The `x`-cyclic subspace spanned by `v, vx, vx², …`.
pub fn cyclic_subspace(x: &Matrix, v: &Vector) -> Vec<Vector> {
    let f = x.field();
    let mut basis = echelon(f, &[*v]);
    let mut vecs = vec![*v];
    let mut cur = *v;
    loop {
        cur = x.apply(&cur);
        if in_span(f, &basis, &cur) {
            break;
        }
        vecs.push(cur);
        basis = echelon(f, &vecs);
    }
    basis
}

/// Applies `p(x)` to `v`.
pub fn apply_poly(x: &Matrix, p: &[Elem], v: &Vector) -> Vector {
    let f = x.field();
    let mut acc = Vector::zero();
    for &c in p.iter().rev() {
        acc = x.apply(&acc).axpy(f, c, v);
    }
    acc
}

pub fn minimal_polynomial(x: &Matrix) -> Poly {
    let f = x.field();
    let mut m: Poly = vec![1];
    for i in 0..x.ncols() {
        m = poly_lcm(f, &m, &vector_annihilator(x, &Vector::unit(i)));
    }
    m
}

/// Minimal polynomial of `x` restricted to an invariant subspace.
pub fn minimal_polynomial_on(x: &Matrix, basis: &[Vector]) -> Poly {
    let f = x.field();
    let mut m: Poly = vec![1];
    for b in basis {
        m = poly_lcm(f, &m, &vector_annihilator(x, b));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u32) -> &'static Field {
        Field::get(q).unwrap()
    }

    #[test]
    fn vector_coordinates() {
        let mut v = Vector::zero();
        v.set(3, 7);
        v.set(0, 15);
        assert_eq!(v.get(3), 7);
        assert_eq!(v.get(0), 15);
        assert_eq!(v.get(1), 0);
        assert_eq!(v.leading(), Some(0));
        assert_eq!(Vector::decode(v.encode(5, 16), 5, 16), v);
    }

    #[test]
    fn scaling_matches_field_multiplication() {
        for q in [2, 4, 8, 16] {
            let f = gf(q);
            let v = Vector::from_elems(&(0..q as Elem).collect::<Vec<_>>());
            for c in f.elements() {
                let w = v.scale(f, c);
                for i in 0..q as usize {
                    assert_eq!(w.get(i), f.mul(c, i as Elem));
                }
            }
        }
    }

    #[test]
    fn polynomial_factorization_over_gf4() {
        let f = gf(4);
        let w = f.omega().unwrap();
        let w2 = f.mul(w, w);
        // t⁴+t³+t²+t+1 = (t²+ωt+1)(t²+ω²t+1)
        let fac = poly_factor(f, &[1, 1, 1, 1, 1]);
        let mut expected = vec![(vec![1, w, 1], 1), (vec![1, w2, 1], 1)];
        expected.sort();
        assert_eq!(fac, expected);
        assert!(poly_is_irreducible(gf(2), &[1, 1, 1, 1, 1]));
        assert!(!poly_is_irreducible(gf(4), &[1, 1, 1]));
    }

    proptest! {
        #[test]
        fn inverse_round_trip(entries in proptest::collection::vec(0u8..4, 16)) {
            let f = gf(4);
            let rows: Vec<Vec<Elem>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let m = Matrix::from_elems(f, &rows).unwrap();
            match m.inverse() {
                Some(inv) => {
                    prop_assert!(m.mul(&inv).is_identity());
                    prop_assert_eq!(m.rank(), 4);
                }
                None => prop_assert!(m.rank() < 4),
            }
        }

        #[test]
        fn kernel_vectors_annihilate(entries in proptest::collection::vec(0u8..2, 30)) {
            let f = gf(2);
            let rows: Vec<Vector> = entries.chunks(5).map(Vector::from_elems).collect();
            let k = left_kernel(f, &rows);
            prop_assert_eq!(k.len() + rank(f, &rows), rows.len());
            for c in &k {
                let s = rows.iter().enumerate().fold(Vector::zero(), |acc, (i, r)| acc.axpy(f, c.get(i), r));
                prop_assert!(s.is_zero());
            }
        }

        #[test]
        fn minimal_polynomial_annihilates(entries in proptest::collection::vec(0u8..4, 9)) {
            let f = gf(4);
            let rows: Vec<Vec<Elem>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let m = Matrix::from_elems(f, &rows).unwrap();
            let mp = minimal_polynomial(&m);
            prop_assert!(m.eval_poly(&mp).rows().iter().all(|r| r.is_zero()));
        }
    }
}
