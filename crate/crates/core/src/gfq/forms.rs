//! Vector spaces with a symplectic, quadratic or hermitian form.
//!
//! The bilinear (or sesquilinear) form is `B(u, v) = u·G·σ(v)ᵀ` with `σ` the
//! identity, or the involution `a ↦ a²` of GF(4) in the hermitian case. A
//! quadratic form is stored as an upper triangular coefficient matrix `C`,
//! `Q(v) = Σ_{i≤j} C_ij vᵢvⱼ`, whose polarization `C + Cᵀ` is the Gram matrix.

use serde::{Deserialize, Serialize};

use super::field::{Elem, Field};
use super::linalg::{echelon, intersect, left_kernel, Matrix, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    None,
    Symplectic,
    QuadraticPlus,
    QuadraticMinus,
    Hermitian,
}

impl FormKind {
    pub fn is_quadratic(self) -> bool {
        matches!(self, FormKind::QuadraticPlus | FormKind::QuadraticMinus)
    }
}

#[derive(Clone, Debug)]
pub struct FormedSpace {
    n: usize,
    field: &'static Field,
    kind: FormKind,
    gram: Matrix,
    quad: Option<Matrix>,
}

impl FormedSpace {
    /// Validates and wraps a form. For quadratic kinds `quad` is required and
    /// the Gram matrix must be its polarization.
    pub fn new(kind: FormKind, gram: Matrix, quad: Option<Matrix>) -> Result<Self> {
        let field = gram.field();
        let n = gram.ncols();
        if !gram.is_square() {
            return Err(Error::Matrix("Gram matrix is not square".into()));
        }
        let space = FormedSpace {
            n,
            field,
            kind,
            gram,
            quad,
        };
        space.validate()?;
        Ok(space)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        let g = &self.gram;
        let bad = |m: &str| Err(Error::Precondition(format!("invalid {:?} form: {m}", self.kind)));
        match self.kind {
            FormKind::None => return Ok(()),
            FormKind::Symplectic => {
                for i in 0..n {
                    if g.get(i, i) != 0 {
                        return bad("not alternating");
                    }
                    for j in 0..n {
                        if g.get(i, j) != g.get(j, i) {
                            return bad("not symmetric");
                        }
                    }
                }
            }
            FormKind::Hermitian => {
                if self.field.order() != 4 {
                    return bad("hermitian forms are supported over GF(4)");
                }
                for i in 0..n {
                    for j in 0..n {
                        if g.get(i, j) != self.field.conjugate(g.get(j, i)) {
                            return bad("not conjugate-symmetric");
                        }
                    }
                }
            }
            FormKind::QuadraticPlus | FormKind::QuadraticMinus => {
                let Some(c) = &self.quad else {
                    return bad("missing quadratic coefficients");
                };
                if self.field.order() != 2 {
                    return bad("quadratic forms are supported over GF(2)");
                }
                for i in 0..n {
                    for j in 0..n {
                        let polar = if i == j { 0 } else { c.get(i, j) ^ c.get(j, i) };
                        if (i > j && c.get(i, j) != 0) || g.get(i, j) != polar {
                            return bad("Gram matrix is not the polarization");
                        }
                    }
                }
                let want_plus = self.kind == FormKind::QuadraticPlus;
                match self.witt_sign() {
                    Some(plus) if plus == want_plus => {}
                    _ => return bad("Witt type does not match"),
                }
            }
        }
        if g.rank() != n {
            return bad("degenerate");
        }
        Ok(())
    }

    /// The standard form of the given kind and dimension.
    ///
    /// Coordinates come in hyperbolic pairs `(e₁, f₁, e₂, f₂, …)`; the minus
    /// type puts an anisotropic plane in the last pair. Hermitian forms use
    /// the identity Gram matrix over GF(4).
    pub fn standard(kind: FormKind, n: usize, field_order: u32) -> Result<Self> {
        let field = Field::get(field_order)?;
        if n == 0 || n > 16 {
            return Err(Error::Precondition(format!("dimension {n} out of range")));
        }
        match kind {
            FormKind::None => Ok(FormedSpace {
                n,
                field,
                kind,
                gram: Matrix::zero(field, n, n),
                quad: None,
            }),
            FormKind::Symplectic => {
                if n % 2 == 1 {
                    return Err(Error::Precondition("symplectic dimension must be even".into()));
                }
                let mut g = Matrix::zero(field, n, n);
                for i in 0..n / 2 {
                    g.set(2 * i, 2 * i + 1, 1);
                    g.set(2 * i + 1, 2 * i, 1);
                }
                FormedSpace::new(kind, g, None)
            }
            FormKind::QuadraticPlus | FormKind::QuadraticMinus => {
                if n % 2 == 1 || field_order != 2 {
                    return Err(Error::Precondition(
                        "orthogonal spaces need even dimension over GF(2)".into(),
                    ));
                }
                let mut c = Matrix::zero(field, n, n);
                for i in 0..n / 2 {
                    c.set(2 * i, 2 * i + 1, 1);
                }
                if kind == FormKind::QuadraticMinus {
                    c.set(n - 2, n - 2, 1);
                    c.set(n - 1, n - 1, 1);
                }
                let g = c.add(&c.transpose());
                let mut g = g;
                for i in 0..n {
                    g.set(i, i, 0);
                }
                FormedSpace::new(kind, g, Some(c))
            }
            FormKind::Hermitian => {
                if field_order != 4 {
                    return Err(Error::Precondition("hermitian forms need GF(4)".into()));
                }
                FormedSpace::new(kind, Matrix::identity(field, n), None)
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn quad(&self) -> Option<&Matrix> {
        self.quad.as_ref()
    }

    fn sigma(&self, e: Elem) -> Elem {
        if self.kind == FormKind::Hermitian {
            self.field.conjugate(e)
        } else {
            e
        }
    }

    pub fn form(&self, u: &Vector, v: &Vector) -> Elem {
        let r = self.gram.apply(u);
        (0..self.n).fold(0, |acc, j| acc ^ self.field.mul(r.get(j), self.sigma(v.get(j))))
    }

    pub fn quadratic(&self, v: &Vector) -> Elem {
        let Some(c) = &self.quad else { return 0 };
        let mut acc = 0;
        for i in 0..self.n {
            let vi = v.get(i);
            if vi == 0 {
                continue;
            }
            for j in i..self.n {
                let cij = c.get(i, j);
                if cij != 0 {
                    acc ^= self.field.mul(cij, self.field.mul(vi, v.get(j)));
                }
            }
        }
        acc
    }

    /// `Some(true)` for plus type, `Some(false)` for minus type, from the
    /// number of singular vectors.
    pub fn witt_sign(&self) -> Option<bool> {
        self.quad.as_ref()?;
        if self.n % 2 == 1 || self.n > 20 {
            return None;
        }
        let total = 1usize << self.n;
        let singular = (0..total)
            .filter(|&c| self.quadratic(&Vector::decode(c, self.n, 2)) == 0)
            .count();
        let m = self.n / 2;
        let plus = (1usize << (2 * m - 1)) + (1usize << (m - 1));
        let minus = (1usize << (2 * m - 1)) - (1usize << (m - 1));
        if singular == plus {
            Some(true)
        } else if singular == minus {
            Some(false)
        } else {
            None
        }
    }

    /// `U^⊥` in the whole space.
    pub fn perp(&self, u: &[Vector]) -> Vec<Vector> {
        if u.is_empty() {
            return (0..self.n).map(Vector::unit).collect();
        }
        // B(b, v) = Σⱼ rⱼ σ(vⱼ) = 0  ⇔  Σⱼ σ⁻¹(rⱼ) vⱼ = 0
        let funcs: Vec<Vector> = u.iter().map(|b| self.gram.apply(b)).collect();
        let rows: Vec<Vector> = (0..self.n)
            .map(|j| {
                let mut row = Vector::zero();
                for (k, r) in funcs.iter().enumerate() {
                    row.set(k, self.sigma(r.get(j)));
                }
                row
            })
            .collect();
        left_kernel(self.field, &rows)
    }

    /// `U^⊥ ∩ W`.
    pub fn perp_within(&self, u: &[Vector], w: &[Vector]) -> Vec<Vector> {
        intersect(self.field, &self.perp(u), w)
    }

    pub fn radical(&self, u: &[Vector]) -> Vec<Vector> {
        intersect(self.field, u, &self.perp(u))
    }

    pub fn is_nondegenerate(&self, u: &[Vector]) -> bool {
        self.radical(u).is_empty()
    }

    pub fn is_totally_isotropic(&self, u: &[Vector]) -> bool {
        u.iter().all(|a| u.iter().all(|b| self.form(a, b) == 0))
    }

    /// Totally isotropic, and totally singular for quadratic forms.
    pub fn is_totally_singular(&self, u: &[Vector]) -> bool {
        self.is_totally_isotropic(u) && u.iter().all(|a| self.quadratic(a) == 0)
    }

    pub fn are_perpendicular(&self, u: &[Vector], w: &[Vector]) -> bool {
        u.iter().all(|a| w.iter().all(|b| self.form(a, b) == 0))
    }

    /// Whether `x` is an isometry of the form (and of `Q` when present).
    pub fn preserves(&self, x: &Matrix) -> bool {
        if x.ncols() != self.n || !x.is_square() {
            return false;
        }
        let images: Vec<Vector> = (0..self.n).map(|i| *x.row(i)).collect();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.form(&images[i], &images[j]) != self.gram.get(i, j) {
                    return false;
                }
            }
            if self.quad.is_some() && self.quadratic(&images[i]) != self.quadratic(&Vector::unit(i)) {
                return false;
            }
        }
        true
    }

    pub fn whole(&self) -> Vec<Vector> {
        echelon(self.field, &(0..self.n).map(Vector::unit).collect::<Vec<_>>())
    }
}

/// Dickson invariant of an isometry in characteristic 2: `rank(g − 1) mod 2`.
pub fn dickson_invariant(g: &Matrix) -> u8 {
    (g.minus_identity().rank() % 2) as u8
}
