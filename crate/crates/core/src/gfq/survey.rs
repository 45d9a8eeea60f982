//! Randomized decomposition checks over conjugates of seed elements.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::classical::{classical_generators, conjugate, standard_space, ClassicalKind, RandomElements};
use super::decompose::{decompose_under, validate_decomposition};
use super::linalg::Matrix;
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    pub group: String,
    pub order: u64,
    /// `dim [V, x]` of each seed.
    pub seed_dims: Vec<usize>,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn is_scalar(x: &Matrix) -> bool {
    let n = x.ncols();
    let d = x.get(0, 0);
    (0..n).all(|i| (0..n).all(|j| x.get(i, j) == if i == j { d } else { 0 }))
}

/// Elements of exact order `order` in scope for decomposition: for order 9,
/// only those with scalar cube.
pub fn in_scope(x: &Matrix, order: u64) -> bool {
    x.order(order).is_some_and(|o| o == order) && (order != 9 || is_scalar(&x.pow(3)))
}

/// Up to `max_seeds` elements of the given order with pairwise distinct
/// `dim [V, x]`, found by random search.
pub fn find_seeds(
    gens: &[Matrix],
    order: u64,
    max_seeds: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Matrix> {
    if gens.is_empty() {
        return Vec::new();
    }
    let mut random = RandomElements::new(gens, rng.clone());
    let mut seeds: Vec<Matrix> = Vec::new();
    for _ in 0..600 {
        if seeds.len() >= max_seeds {
            break;
        }
        let Some(x) = random.element_of_order(order, 40, |x| in_scope(x, order)) else {
            continue;
        };
        let m = x.minus_identity().rank();
        if seeds.iter().all(|s| s.minus_identity().rank() != m) {
            seeds.push(x);
        }
    }
    seeds.sort_by_key(|s| s.minus_identity().rank());
    seeds
}

/// Decomposes `per_seed` random conjugates of each seed and validates them.
pub fn survey_seeds(
    kind: ClassicalKind,
    n: usize,
    order: u64,
    seeds: &[Matrix],
    per_seed: usize,
    seed: u64,
) -> Result<CellReport> {
    let space = standard_space(kind, n)?;
    let gens = classical_generators(kind, &space)?;
    let mut report = CellReport {
        group: kind.label(n),
        order,
        seed_dims: seeds.iter().map(|s| s.minus_identity().rank()).collect(),
        checked: 0,
        failures: Vec::new(),
    };
    if seeds.is_empty() {
        return Ok(report);
    }
    let mut random = RandomElements::new(&gens, ChaCha8Rng::seed_from_u64(seed));
    for x in seeds {
        for _ in 0..per_seed {
            let g = random.next_element();
            let y = conjugate(x, &g);
            match decompose_under(&y, &space) {
                Ok(dec) => {
                    let v = validate_decomposition(&dec, &space);
                    for c in v.failures() {
                        report.failures.push(format!("{}: {}", c.name, c.detail));
                    }
                }
                Err(e) => report.failures.push(e.to_string()),
            }
            report.checked += 1;
        }
    }
    Ok(report)
}

/// One survey cell: seeds of every available `dim [V, x]`, then
/// `per_seed` conjugates each.
pub fn survey_cell(kind: ClassicalKind, n: usize, order: u64, per_seed: usize, seed: u64) -> Result<CellReport> {
    let space = standard_space(kind, n)?;
    let gens = classical_generators(kind, &space)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds = find_seeds(&gens, order, 6, &mut rng);
    survey_seeds(kind, n, order, &seeds, per_seed, seed.wrapping_add(1))
}

/// Every `(kind, n, order)` cell with `n ≤ 10`: all classical kinds in their
/// valid dimensions, orders 3 and 5, and order 9 for unitary groups.
pub fn standard_cells() -> Vec<(ClassicalKind, usize, u64)> {
    use ClassicalKind::*;
    let mut cells = Vec::new();
    for kind in [Linear, Symplectic, OrthogonalPlus, OrthogonalMinus, OmegaPlus, OmegaMinus, Unitary] {
        for n in 1..=10 {
            let formed_even = !matches!(kind, Linear | Unitary);
            if formed_even && n % 2 == 1 {
                continue;
            }
            for order in [3, 5, 9] {
                if order == 9 && (kind != Unitary || n % 3 != 0) {
                    continue;
                }
                cells.push((kind, n, order));
            }
        }
    }
    cells
}
