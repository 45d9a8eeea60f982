//! Independent construction of the shipped Mathieu group generators.
//!
//! `M12` and `M24` are `⟨PSL₂(p), δ⟩` on the projective line with `δ` fixing
//! `0` and `∞` and acting as `a·x³` on squares, `b·x³` on non-squares. The
//! other groups are stabilizers, collected from seeded random elements.
//! `cargo test --test mathieu_data -- --ignored` rewrites the data files.

use std::collections::BTreeSet;

use loopfold::permgroup::catalog::{mathieu, mathieu_extension, psl2};
use loopfold::permgroup::io::GroupSpec;
use loopfold::permgroup::{GroupHandle, StabChain};
use loopfold::Permutation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const M24_ORDER: u128 = 244_823_040;
const M12_ORDER: u128 = 95_040;

fn cube_map(p: u32, a: u32, b: u32) -> Option<Permutation> {
    let squares: BTreeSet<u32> = (1..p).map(|x| x * x % p).collect();
    let mut images: Vec<u32> = (0..=p).collect();
    for x in 1..p {
        let c = x * x % p * x % p;
        let k = if squares.contains(&x) { a } else { b };
        images[x as usize] = k * c % p;
    }
    Permutation::from_images(images).ok()
}

/// `⟨PSL₂(p), δ⟩` of the requested order, with the first suitable `(a, b)`.
fn mathieu_on_projective_line(p: u32, order: u128) -> Vec<Permutation> {
    let base = psl2(p).unwrap().generators().to_vec();
    for a in 1..p {
        for b in 1..p {
            let Some(d) = cube_map(p, a, b) else { continue };
            let mut gens = base.clone();
            gens.push(d);
            if StabChain::new(p as usize + 1, &gens).order() == order {
                return gens;
            }
        }
    }
    panic!("no cube map extends PSL2({p}) to a group of order {order}");
}

struct Randomizer {
    slots: Vec<Permutation>,
    acc: Permutation,
    rng: ChaCha8Rng,
}

impl Randomizer {
    fn new(gens: &[Permutation], seed: u64) -> Self {
        let mut slots = gens.to_vec();
        while slots.len() < 10 {
            slots.push(gens[slots.len() % gens.len()].clone());
        }
        let acc = Permutation::identity(gens[0].degree());
        let mut r = Randomizer { slots, acc, rng: ChaCha8Rng::seed_from_u64(seed) };
        for _ in 0..100 {
            r.next();
        }
        r
    }

    fn next(&mut self) -> Permutation {
        let k = self.slots.len();
        let i = self.rng.gen_range(0..k);
        let j = (i + self.rng.gen_range(1..k)) % k;
        self.slots[i] = self.slots[i].compose(&self.slots[j]);
        self.acc = self.acc.compose(&self.slots[i]);
        self.acc.clone()
    }
}

/// Generators of the subgroup of elements satisfying `keep`, of known order.
fn subgroup_by_search(
    gens: &[Permutation],
    order: u128,
    seed: u64,
    keep: impl Fn(&Permutation) -> bool,
) -> Vec<Permutation> {
    let degree = gens[0].degree();
    let mut random = Randomizer::new(gens, seed);
    let mut found: Vec<Permutation> = Vec::new();
    let mut chain = StabChain::new(degree, &found);
    for _ in 0..2_000_000 {
        if chain.order() == order {
            return found;
        }
        let g = random.next();
        if keep(&g) && !chain.contains(&g) {
            found.push(g);
            chain = StabChain::new(degree, &found);
        }
    }
    panic!("search stalled at order {}", chain.order());
}

fn truncate(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
    gens.iter()
        .map(|g| Permutation::from_images(g.images()[..degree].to_vec()).unwrap())
        .collect()
}

fn spec(name: &str, gens: &[Permutation], order: u128) -> GroupSpec {
    GroupSpec {
        name: name.to_string(),
        degree: gens[0].degree(),
        generators: gens.iter().map(|g| g.images().to_vec()).collect(),
        expected_order: Some(order as u64),
    }
}

fn construct() -> Vec<GroupSpec> {
    let m24 = mathieu_on_projective_line(23, M24_ORDER);
    let m12 = mathieu_on_projective_line(11, M12_ORDER);
    // M11 fixes ∞ = 11 in M12
    let m11 = truncate(&subgroup_by_search(&m12, 7920, 1, |g| g.apply(11) == 11), 11);
    let m22 = truncate(
        &subgroup_by_search(&m24, 443_520, 2, |g| g.apply(22) == 22 && g.apply(23) == 23),
        22,
    );
    let m22_2 = truncate(
        &subgroup_by_search(&m24, 887_040, 3, |g| {
            let (a, b) = (g.apply(22), g.apply(23));
            (a == 22 && b == 23) || (a == 23 && b == 22)
        }),
        22,
    );
    // D = {∞} ∪ squares mod 23 is a dodecad; M12.2 preserves {D, Dᶜ}
    let mut dodecad = [false; 24];
    dodecad[23] = true;
    for x in 1..23u32 {
        dodecad[(x * x % 23) as usize] = true;
    }
    let image_type = |g: &Permutation| -> Option<bool> {
        let kept = (0..24).filter(|&p| dodecad[p]).all(|p| dodecad[g.apply(p as u32) as usize]);
        let swapped = (0..24).filter(|&p| dodecad[p]).all(|p| !dodecad[g.apply(p as u32) as usize]);
        (kept || swapped).then_some(kept)
    };
    let stab = subgroup_by_search(&m24, M12_ORDER, 4, |g| image_type(g) == Some(true));
    assert_eq!(StabChain::new(24, &stab).order(), M12_ORDER, "D is a dodecad");
    let m12_2 = subgroup_by_search(&m24, 2 * M12_ORDER, 5, |g| image_type(g).is_some());
    vec![
        spec("M11", &m11, 7920),
        spec("M12", &m12, M12_ORDER),
        spec("M12.2", &m12_2, 2 * M12_ORDER),
        spec("M22", &m22, 443_520),
        spec("M22.2", &m22_2, 887_040),
        spec("M24", &m24, M24_ORDER),
    ]
}

fn shipped(name: &str) -> GroupHandle {
    match name {
        "M11" => mathieu(11),
        "M12" => mathieu(12),
        "M12.2" => mathieu_extension(12),
        "M22" => mathieu(22),
        "M22.2" => mathieu_extension(22),
        "M24" => mathieu(24),
        _ => unreachable!(),
    }
    .unwrap()
}

#[test]
fn shipped_generators_match_the_construction() {
    for spec in construct() {
        let built = spec.build(u128::MAX).unwrap();
        let data = shipped(&spec.name);
        assert_eq!(data.degree(), built.degree(), "{}", spec.name);
        assert!(data.same_group(&built), "{} differs from the construction", spec.name);
    }
}

#[test]
#[ignore = "rewrites crates/core/data/groups"]
fn write_shipped_generators() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/groups");
    for spec in construct() {
        let json = serde_json::to_string(&spec).unwrap();
        std::fs::write(dir.join(format!("{}.json", spec.name)), json + "\n").unwrap();
    }
}
