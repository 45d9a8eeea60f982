//! Centralizer orders of elements of order 3, 5 and 9 in classical groups
//! over GF(2), from the decomposition of the natural module.

use std::sync::OnceLock;

use super::classical::{
    classical_generators, gl_order, gu_order, omega_order, permutation_image, sp_order,
    standard_space, ClassicalKind,
};
use crate::error::{Error, Result};
use crate::permgroup::GroupHandle;

fn constraint(msg: String) -> Error {
    Error::Precondition(msg)
}

/// `|GO^ε_k(2)|`, with the zero-dimensional group trivial.
fn go_order(k: usize, plus: bool) -> u128 {
    if k == 0 {
        1
    } else {
        2 * omega_order(k, plus)
    }
}

fn sign(exp: usize) -> bool {
    exp % 2 == 0
}

/// `|GU_k(2)'|`; `GU_3(2)'` is computed from its permutation image.
pub fn gu_derived_order(k: usize) -> u128 {
    match k {
        0 | 1 => 1,
        2 => 3,
        3 => {
            static GU3: OnceLock<u128> = OnceLock::new();
            *GU3.get_or_init(|| {
                let space = standard_space(ClassicalKind::Unitary, 3).expect("GU3 space");
                let gens = classical_generators(ClassicalKind::Unitary, &space).expect("GU3 gens");
                let (deg, perms) = permutation_image(&space, &gens).expect("GU3 image");
                let g = GroupHandle::with_degree(deg, perms, 1_000_000).expect("GU3 group");
                g.derived_subgroup().expect("GU3 enumerable").order()
            })
        }
        _ => gu_order(k, 2) / 3,
    }
}

/// `|C_G(x)|` for `x` of order 3, 5 or 9 with `m = dim [V, x]`.
///
/// For `OrthogonalPlus`/`OrthogonalMinus` this is the centralizer in the full
/// isometry group `GO^ε_n(2)`; for `OmegaPlus`/`OmegaMinus` it is the order of
/// `GU_{m/2}(2)' × Ω^{ε₁}_{n−m}(2)` (order 3) or `GU_{m/4}(4) × Ω^{ε₂}_{n−m}(2)`
/// (order 5), a subgroup of `O²(C_G(x))`.
/// Unitary elements of order 3 need their eigenspace dimensions; see
/// [`unitary_order3_centralizer`].
pub fn centralizer_order_formula(kind: ClassicalKind, n: usize, order: u64, m: usize) -> Result<u128> {
    if m > n {
        return Err(constraint(format!("dim [V,x] = {m} exceeds n = {n}")));
    }
    let need = |d: usize| -> Result<()> {
        if m % d != 0 {
            Err(constraint(format!("order {order} needs {d} | m, got m = {m}")))
        } else {
            Ok(())
        }
    };
    let minus_type = matches!(kind, ClassicalKind::OrthogonalMinus | ClassicalKind::OmegaMinus);
    match (kind, order) {
        (ClassicalKind::Linear, 3) => {
            need(2)?;
            Ok(gl_order(m / 2, 4) * gl_order(n - m, 2))
        }
        (ClassicalKind::Linear, 5) => {
            need(4)?;
            Ok(gl_order(m / 4, 16) * gl_order(n - m, 2))
        }
        (ClassicalKind::Symplectic, 3) => {
            need(2)?;
            Ok(gu_order(m / 2, 2) * sp_order(n - m, 2))
        }
        (ClassicalKind::Symplectic, 5) => {
            need(4)?;
            Ok(gu_order(m / 4, 4) * sp_order(n - m, 2))
        }
        (ClassicalKind::OrthogonalPlus | ClassicalKind::OrthogonalMinus, 3) => {
            need(2)?;
            let eps = sign(m / 2 + minus_type as usize);
            Ok(gu_order(m / 2, 2) * go_order(n - m, eps))
        }
        (ClassicalKind::OrthogonalPlus | ClassicalKind::OrthogonalMinus, 5) => {
            need(4)?;
            let eps = sign(m / 4 + minus_type as usize);
            Ok(gu_order(m / 4, 4) * go_order(n - m, eps))
        }
        (ClassicalKind::OmegaPlus | ClassicalKind::OmegaMinus, 3) => {
            need(2)?;
            let eps = sign(m / 2 + minus_type as usize);
            Ok(gu_derived_order(m / 2) * omega_order(n - m, eps))
        }
        (ClassicalKind::OmegaPlus | ClassicalKind::OmegaMinus, 5) => {
            need(4)?;
            let eps = sign(m / 4 + minus_type as usize);
            Ok(gu_order(m / 4, 4) * omega_order(n - m, eps))
        }
        (ClassicalKind::Unitary, 5) => {
            need(4)?;
            Ok(gu_order(n - m, 2) * gl_order(m / 4, 16))
        }
        (ClassicalKind::Unitary, 9) => {
            if n % 3 != 0 || m != n {
                return Err(constraint(format!(
                    "order 9 with central cube needs 3 | n and m = n, got n = {n}, m = {m}"
                )));
            }
            Ok(gu_order(n / 3, 8))
        }
        (ClassicalKind::Unitary, 3) => Err(constraint(
            "unitary order 3 centralizers depend on the eigenspace dimensions".into(),
        )),
        _ => Err(constraint(format!("order {order} is not covered for {}", kind.label(n)))),
    }
}

/// `|GU_{n₁}(2)|·|GU_{n₂}(2)|·|GU_{n₃}(2)|` for eigenspace dimensions `n₁, n₂, n₃`.
pub fn unitary_order3_centralizer(eigenspace_dims: [usize; 3]) -> u128 {
    eigenspace_dims.iter().map(|&d| gu_order(d, 2)).product()
}
