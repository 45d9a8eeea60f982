use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::bounds::counting_bound_check;
use super::fsp::{fsp_certificate, ClassStatus};
use super::{Budget, Check, Scenario};
use crate::arith::odd_part;
use crate::classalgebra::{inversion_table, inversion_witness, GroupClassAlgebra};
use crate::commgraph::{build_graph, Mode};
use crate::error::{Error, Result};
use crate::gfq::centralizer::{centralizer_order_formula, unitary_order3_centralizer};
use crate::gfq::classical::{
    all_isometries, block_diagonal, classical_generators, permutation_image, permutation_to_matrix,
    standard_space, ClassicalKind, RandomElements,
};
use crate::gfq::linalg::{left_kernel, Matrix};
use crate::gfq::survey::{is_scalar, survey_cell};
use crate::gfq::{decompose_under, validate_decomposition, Field};
use crate::loopfolder::{search_folders, Requirements, SearchOptions};
use crate::perm::Permutation;
use crate::permgroup::catalog::{alternating, by_name, mathieu, mathieu_extension, pgammal2, pgl2, psl2, symmetric};
use crate::permgroup::{cap_from_env, composition_factors, GroupHandle};

pub(super) fn registry() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "psl2_counting",
            claim: "in PGammaL2(9) the involutions outside PGL2(9) are the s(s^2+1) = 30 field involutions, and 1 + 30 < s^2(s^2-1)/2 = 36",
            inputs: &["PGammaL2(9)", "PGL2(9)"],
            budget: Budget::Fast,
            run: psl2_counting,
        },
        Scenario {
            name: "alt7_alt8_oddfacts",
            claim: "elements of order 5 in S7 are inverted exactly by the involutions with two or three 2-cycles, so |K| <= 1 + 21 < 126",
            inputs: &["S7", "A7", "A8"],
            budget: Budget::Fast,
            run: alt7_alt8_oddfacts,
        },
        Scenario {
            name: "alt9_terminal_3cycles",
            claim: "the commuting graph on the 3-cycles of A9 is connected",
            inputs: &["A9"],
            budget: Budget::Fast,
            run: alt9_terminal_3cycles,
        },
        Scenario {
            name: "m11_fusion",
            claim: "for x of odd prime order p in M11, n_x = (p-1)/|N(<x>):C(x)|, and |N(<x>):C(x)| has an odd prime factor unless p is a Fermat prime",
            inputs: &["M11"],
            budget: Budget::Fast,
            run: m11_fusion,
        },
        Scenario {
            name: "m12_inversion",
            claim: "in M12 and M12.2 the classes 3B and 5A are inverted by every class of involutions",
            inputs: &["M12", "M12.2"],
            budget: Budget::Medium,
            run: m12_inversion,
        },
        Scenario {
            name: "m22_bound",
            claim: "in M22.2 every involution class inverts 3A, one class of 330 involutions does not invert 5A, and 1386 > 1 + 330",
            inputs: &["M22.2"],
            budget: Budget::Medium,
            run: m22_bound,
        },
        Scenario {
            name: "psu42_bound",
            claim: "in PSU4(2).2 the involutions not inverting elements of order 5 form classes of sizes 45 and 36, and 1 + 45 + 36 = 82 < 162",
            inputs: &["PSU4(2).2"],
            budget: Budget::Fast,
            run: psu42_bound,
        },
        Scenario {
            name: "gl4_sp4_sp6_gu_centralizers",
            claim: "centralizer orders of elements of order 3 and 5 in GL, Sp and GU over GF(2), and of order 9 with central cube in GU3(2), are given by the module decomposition",
            inputs: &["GL(3,2)", "GL(4,2)", "Sp(4,2)", "Sp(6,2)", "GU(2,2)", "GU(3,2)", "GU(4,2)"],
            budget: Budget::Medium,
            run: centralizers,
        },
        Scenario {
            name: "gu6_class9_decomposition",
            claim: "an element of GU6(2) of order 9 with x^3 = w*1 splits V into two orthogonal nondegenerate invariant 3-spaces",
            inputs: &["GU(3,2)", "GU(6,2)"],
            budget: Budget::Fast,
            run: gu6_class9,
        },
        Scenario {
            name: "omega8_order5_decomposition",
            claim: "a fixed-point-free element of order 5 in Omega+(8,2) splits V into two orthogonal nondegenerate irreducible 4-spaces",
            inputs: &["Omega+(8,2)"],
            budget: Budget::Fast,
            run: omega8_order5,
        },
        Scenario {
            name: "folder_search_pgl25",
            claim: "PGL2(5) with H a Borel subgroup has no left Bol folder of exponent 2 whose K consists of involutions outside PSL2(5)",
            inputs: &["PGL2(5)", "PSL2(5)"],
            budget: Budget::Fast,
            run: folder_search_pgl25,
        },
        Scenario {
            name: "automizer_chain_m11",
            claim: "in M11 the odd part of |N(L):C(L)| for L of order 11 is 5, so an element of order 11 in H forces 5 | |H|; orders 5 and 3 force nothing further",
            inputs: &["M11"],
            budget: Budget::Fast,
            run: automizer_chain_m11,
        },
        Scenario {
            name: "fsp_certificates",
            claim: "for A7 (p = 5, 7), M11 and M12 (p = 3, 5, 11) every class of order p is certified by a sound centralizer condition",
            inputs: &["A7", "M11", "M12", "A5xC3"],
            budget: Budget::Fast,
            run: fsp_certificates,
        },
    ]
}

fn class_with(g: &GroupHandle, order: u64, size: u64) -> Result<usize> {
    let classes = g.conjugacy_classes()?;
    classes
        .classes()
        .iter()
        .position(|c| c.element_order == order && c.size == size)
        .ok_or_else(|| Error::Precondition(format!("{} has no class of order {order} and size {size}", g.name())))
}

fn classes_of_order(g: &GroupHandle, order: u64) -> Result<Vec<usize>> {
    let classes = g.conjugacy_classes()?;
    Ok((0..classes.len()).filter(|&i| classes.class(i).element_order == order).collect())
}

fn witness_pair(t: &Permutation, x: &Permutation) -> String {
    format!("t = {}, x = {}", t.to_cycle_string(), x.to_cycle_string())
}

fn psl2_counting() -> Result<Vec<Check>> {
    let s: u64 = 3;
    let r = counting_bound_check("PGammaL2(9)")?;
    let g = pgammal2(9)?;
    let pgl = pgl2(9)?;
    let store = g.elements()?;
    // A field involution fixes the points of a subline PG(1, s).
    let outside: Vec<Permutation> = store
        .iter()
        .filter(|&x| store.order(x) == 2)
        .map(|x| store.perm(x))
        .filter(|x| !pgl.contains(x))
        .collect();
    let fixed: Vec<usize> = {
        let mut f: Vec<usize> = outside.iter().map(|x| x.fixed_points()).collect();
        f.sort_unstable();
        f.dedup();
        f
    };
    Ok(vec![
        Check::equal("involutions outside PGL2(9) = s(s^2+1)", s * (s * s + 1), r.involution_count),
        Check::equal("each fixes a subline of s+1 points", vec![s as usize + 1], fixed)
            .with_witness(outside.first().map(|x| x.to_cycle_string()).unwrap_or_default()),
        Check::holds(
            "1 + count < s^2(s^2-1)/2",
            r.holds,
            format!("{} ({})", r.relation, r.index_bound.formula),
        ),
    ])
}

/// The elementary abelian 2-subgroups `⟨t^P⟩` for involutions `t ∈ S` whose
/// `P`-conjugates commute pairwise. `P` normalizes a nontrivial 2-subgroup
/// exactly when this list is nonempty.
fn normalized_klein_groups(p: &GroupHandle, s: &GroupHandle) -> Result<Vec<Vec<Permutation>>> {
    let pstore = p.elements()?;
    let pel: Vec<Permutation> = pstore.iter().map(|i| pstore.perm(i)).collect();
    let store = s.elements()?;
    let mut out: Vec<Vec<Permutation>> = Vec::new();
    for t in store.iter().filter(|&t| store.order(t) == 2) {
        let t = store.perm(t);
        let orbit: Vec<Permutation> = pel.iter().map(|g| t.conjugate_by(g)).collect();
        if orbit.iter().all(|a| orbit.iter().all(|b| a.commutes_with(b))) {
            let e = s.subgroup(orbit)?.elements()?;
            let mut members: Vec<Permutation> = e.iter().map(|x| e.perm(x)).collect();
            members.sort_by(|a, b| a.images().cmp(b.images()));
            if !out.contains(&members) {
                out.push(members);
            }
        }
    }
    Ok(out)
}

fn alt7_alt8_oddfacts() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let s7 = symmetric(7)?;
    let alg = GroupClassAlgebra::new(&s7)?;
    let table = inversion_table(&alg)?;
    let five = classes_of_order(&s7, 5)?;
    let col = table.odd_classes.iter().position(|c| c.index == five[0]).expect("5-cycles are odd");
    let mut by_type = BTreeMap::new();
    let mut witnesses = Vec::new();
    for (t, row) in table.involutions.iter().zip(&table.inverts) {
        let rep = &alg.classes().class(t.index).representative;
        let twos = rep.cycle_type().iter().filter(|&&l| l == 2).count();
        by_type.insert(twos, row[col]);
        if row[col] {
            if let Some((u, x)) = inversion_witness(&s7, t.index, five[0])? {
                witnesses.push(witness_pair(&u, &x));
            }
        }
    }
    checks.push(
        Check::equal(
            "2-cycle count -> inverts 5-cycles",
            BTreeMap::from([(1, false), (2, true), (3, true)]),
            by_type,
        )
        .with_witness(witnesses.join("; ")),
    );
    let b = counting_bound_check("S7")?;
    checks.push(Check::holds("1 + 21 < 126", b.holds && b.k_bound == 22 && b.index_bound.value == 126, format!("{} ({})", b.relation, b.index_bound.formula)));

    let a7 = alternating(7)?;
    let p = a7.sylow(3)?;
    let klein = normalized_klein_groups(&p, &s7)?;
    let orders: Vec<usize> = klein.iter().map(|e| e.len()).collect();
    let shown: Vec<String> = klein
        .iter()
        .map(|e| e.iter().map(|x| x.to_cycle_string()).collect::<Vec<_>>().join(" "))
        .collect();
    checks.push(
        Check::equal("P-invariant elementary abelian 2-subgroups of S7, P a Sylow 3 of A7", vec![4, 4], orders)
            .with_witness(format!("P = <{}>; {}", p.generators().iter().map(|g| g.to_cycle_string()).collect::<Vec<_>>().join(", "), shown.join("; "))),
    );
    let seven = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 7)?;
    let aut = a7.automizer_index(&a7.subgroup(vec![seven])?)?;
    checks.push(Check::equal("A7: |N:C| for an element of order 7", 3, aut));

    let a8 = alternating(8)?;
    let c3 = a8.centralizer(&Permutation::parse_cycles("(1,2,3)", 8)?)?;
    let factors: Vec<String> = composition_factors(&c3)?.into_iter().filter(|f| !f.is_abelian()).map(|f| f.label).collect();
    checks.push(Check::equal("A8: nonabelian factors of C(3-cycle)", vec!["A5".to_string()], factors));
    let c5 = a8.centralizer(&Permutation::parse_cycles("(1,2,3,4,5)", 8)?)?;
    let o3 = c5.p_core(3)?;
    let gens: Vec<String> = o3.generators().iter().map(|g| g.to_cycle_string()).collect();
    checks.push(Check::holds(
        "A8: O_3(C(5-cycle)) is generated by a 3-cycle",
        o3.order() == 3 && o3.generators().iter().all(|g| g.cycle_type().into_iter().filter(|&l| l > 1).collect::<Vec<_>>() == vec![3]),
        format!("|O_3| = {}, generators {}", o3.order(), gens.join(", ")),
    ));
    Ok(checks)
}

fn alt9_terminal_3cycles() -> Result<Vec<Check>> {
    let g = alternating(9)?;
    let x = Permutation::parse_cycles("(1,2,3)", 9)?;
    let graph = build_graph(&g, Mode::SingleClass(g.class_index(&x)?), false)?;
    let y = Permutation::parse_cycles("(1,2,4)", 9)?;
    let path = graph.path_witness(&x, &y)?.unwrap_or_default();
    let path: Vec<String> = path.iter().map(|p| p.to_cycle_string()).collect();
    Ok(vec![
        Check::equal("vertices", 168, graph.vertex_count()),
        Check::equal("components", 1, graph.component_count()).with_witness(path.join(" - ")),
    ])
}

fn element_of_order(g: &GroupHandle, p: u64) -> Result<Permutation> {
    let classes = g.conjugacy_classes()?;
    classes
        .classes()
        .iter()
        .find(|c| c.element_order == p)
        .map(|c| c.representative.clone())
        .ok_or_else(|| Error::Precondition(format!("{} has no elements of order {p}", g.name())))
}

fn is_fermat(p: u64) -> bool {
    (p - 1).is_power_of_two()
}

fn m11_fusion() -> Result<Vec<Check>> {
    let g = mathieu(11)?;
    let mut checks = Vec::new();
    for p in [3u64, 5, 11] {
        let x = element_of_order(&g, p)?;
        let aut = g.automizer_index(&g.subgroup(vec![x.clone()])?)?;
        let n_x = g.cyclic_fusion_count(&x)?;
        checks.push(
            Check::equal(format!("p = {p}: n_x = (p-1)/|N:C|"), ((p as u128 - 1) / aut) as usize, n_x)
                .with_witness(format!("x = {}, |N:C| = {aut}", x.to_cycle_string())),
        );
        if !is_fermat(p) {
            let odd = odd_part(aut);
            checks.push(Check::holds(
                format!("p = {p}: odd prime s | p-1 divides |N:C|"),
                odd > 1 && (p as u128 - 1) % odd == 0,
                format!("|N:C| = {aut}, odd part {odd}"),
            ));
        }
    }
    Ok(checks)
}

fn inverted_by_all(g: &GroupHandle, label: &str, x_class: usize) -> Result<Check> {
    let alg = GroupClassAlgebra::new(g)?;
    let table = inversion_table(&alg)?;
    let col = table
        .odd_classes
        .iter()
        .position(|c| c.index == x_class)
        .ok_or_else(|| Error::Precondition(format!("class {x_class} is not of odd prime order")))?;
    let mut failing = Vec::new();
    let mut witnesses = Vec::new();
    for (t, row) in table.involutions.iter().zip(&table.inverts) {
        if row[col] {
            if let Some((u, x)) = inversion_witness(g, t.index, x_class)? {
                witnesses.push(format!("{}: {}", t.name, witness_pair(&u, &x)));
            }
        } else {
            failing.push(t.name.clone());
        }
    }
    Ok(Check::holds(
        format!("{}: every involution class inverts {label}", g.name()),
        failing.is_empty(),
        if failing.is_empty() {
            format!("{} involution classes, all inverting", table.involutions.len())
        } else {
            format!("not inverting: {}", failing.join(", "))
        },
    )
    .with_witness(witnesses.join("; ")))
}

fn m12_inversion() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for g in [mathieu(12)?, mathieu_extension(12)?] {
        checks.push(inverted_by_all(&g, "3B", class_with(&g, 3, 2640)?)?);
        checks.push(inverted_by_all(&g, "5A", classes_of_order(&g, 5)?[0])?);
    }
    Ok(checks)
}

fn m22_bound() -> Result<Vec<Check>> {
    let g = mathieu_extension(22)?;
    let mut checks = Vec::new();
    for c in classes_of_order(&g, 3)? {
        checks.push(inverted_by_all(&g, "3A", c)?);
    }
    let r = counting_bound_check("M22.2")?;
    let sizes: Vec<u64> = r.k_classes.iter().map(|c| c.size).collect();
    checks.push(Check::equal("sizes of involution classes not inverting 5A", vec![330], sizes));
    checks.push(Check::holds("1386 > 1 + 330", r.holds && r.index_bound.value == 1386, format!("{} ({})", r.relation, r.index_bound.formula)));
    Ok(checks)
}

fn psu42_bound() -> Result<Vec<Check>> {
    let r = counting_bound_check("PSU4(2).2")?;
    let mut sizes: Vec<u64> = r.k_classes.iter().map(|c| c.size).collect();
    sizes.sort_unstable();
    Ok(vec![
        Check::equal("sizes of involution classes not inverting order 5", vec![36, 45], sizes),
        Check::holds(
            "1 + 45 + 36 = 82 < 162",
            r.holds && r.k_bound == 82 && r.index_bound.value == 162,
            format!("{} ({})", r.relation, r.index_bound.formula),
        ),
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerCase {
    pub group: String,
    pub class: String,
    pub order: u64,
    /// `dim [V, x]`.
    pub m: usize,
    pub eigenspace_dims: [usize; 3],
    pub formula: u128,
    pub brute: u128,
}

/// Formula against enumeration for every class of order 3 or 5, and of
/// order 9 with scalar cube, in the permutation image of the classical group.
pub fn centralizer_cases(kind: ClassicalKind, n: usize) -> Result<Vec<CentralizerCase>> {
    let space = standard_space(kind, n)?;
    let gens = classical_generators(kind, &space)?;
    let (deg, perms) = permutation_image(&space, &gens)?;
    let g = GroupHandle::with_degree(deg, perms, cap_from_env())?;
    let table = g.conjugacy_classes()?;
    let f = space.field();
    let mut out = Vec::new();
    for (i, c) in table.classes().iter().enumerate() {
        if ![3, 5, 9].contains(&c.element_order) {
            continue;
        }
        let x = permutation_to_matrix(&space, &c.representative)?;
        if c.element_order == 9 && !is_scalar(&x.pow(3)) {
            continue;
        }
        let m = x.minus_identity().rank();
        let eigen_dim = |l: u8| left_kernel(f, x.add(&Matrix::identity(f, n).scale(l)).rows()).len();
        let eigen = match f.omega() {
            Some(w) => [eigen_dim(1), eigen_dim(w), eigen_dim(f.mul(w, w))],
            None => [n - m, 0, 0],
        };
        let formula = match (kind, c.element_order) {
            (ClassicalKind::Unitary, 3) => unitary_order3_centralizer(eigen),
            _ => centralizer_order_formula(kind, n, c.element_order, m)?,
        };
        out.push(CentralizerCase {
            group: kind.label(n),
            class: c.name.clone(),
            order: c.element_order,
            m,
            eigenspace_dims: eigen,
            formula,
            brute: table.centralizer_order(i) as u128,
        });
    }
    Ok(out)
}

/// The groups whose centralizers are checked.
pub(crate) const CENTRALIZER_GROUPS: [(ClassicalKind, usize); 7] = [
    (ClassicalKind::Linear, 3),
    (ClassicalKind::Linear, 4),
    (ClassicalKind::Symplectic, 4),
    (ClassicalKind::Symplectic, 6),
    (ClassicalKind::Unitary, 2),
    (ClassicalKind::Unitary, 3),
    (ClassicalKind::Unitary, 4),
];

fn centralizers() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (kind, n) in CENTRALIZER_GROUPS {
        let cases = centralizer_cases(kind, n)?;
        let bad: Vec<String> = cases
            .iter()
            .filter(|c| c.formula != c.brute)
            .map(|c| format!("{} m={} formula {} brute {}", c.class, c.m, c.formula, c.brute))
            .collect();
        let summary: Vec<String> = cases.iter().map(|c| format!("{}:{}", c.class, c.brute)).collect();
        checks.push(
            Check::holds(
                format!("{}: formula = |C(x)| on {} classes", kind.label(n), cases.len()),
                bad.is_empty() && !cases.is_empty(),
                if bad.is_empty() { summary.join(" ") } else { bad.join("; ") },
            ),
        );
        if (kind, n) == (ClassicalKind::Unitary, 3) {
            let nine = cases.iter().filter(|c| c.order == 9).count();
            checks.push(Check::holds("GU(3,2): classes of order 9 with central cube exist", nine > 0, format!("{nine} classes")));
        }
    }
    Ok(checks)
}

/// An element of GU3(2) with cube `ω·1`.
fn gu3_order9() -> Result<Matrix> {
    let space = standard_space(ClassicalKind::Unitary, 3)?;
    let w = Field::get(4)?.omega().expect("GF(4) has ω");
    all_isometries(&space)
        .into_iter()
        .find(|x| {
            let c = x.pow(3);
            is_scalar(&c) && c.get(0, 0) == w
        })
        .ok_or_else(|| Error::Precondition("GU3(2) has no element with cube ω".into()))
}

fn gu6_class9() -> Result<Vec<Check>> {
    let kind = ClassicalKind::Unitary;
    let space = standard_space(kind, 6)?;
    let y = gu3_order9()?;
    let x = block_diagonal(&[y.clone(), y]);
    let cube = x.pow(3);
    let dec = decompose_under(&x, &space)?;
    let v = validate_decomposition(&dec, &space);
    let nondegenerate = dec.summands.iter().all(|s| space.is_nondegenerate(&s.basis));
    let survey = survey_cell(kind, 6, 9, 100, 9)?;
    Ok(vec![
        Check::equal("order", Some(9), x.order(100)),
        Check::holds("x^3 is scalar ω", is_scalar(&cube) && cube.get(0, 0) != 1, format!("x^3 = {}·1", cube.get(0, 0))),
        Check::holds("decomposition validates", v.passed(), format!("{} checks", v.checks.len())),
        Check::equal("summand dimensions", vec![3, 3], dec.summand_dims()),
        Check::holds("summands nondegenerate, none paired", nondegenerate && !dec.summands.iter().any(|s| s.is_paired()) && dec.fixed.is_empty(), format!("{} summands", dec.summands.len())),
        Check::holds(
            "random conjugates decompose",
            survey.passed() && survey.checked >= 100,
            format!("{} conjugates, {} failures", survey.checked, survey.failures.len()),
        ),
    ])
}

fn omega8_order5() -> Result<Vec<Check>> {
    let kind = ClassicalKind::OmegaPlus;
    let space = standard_space(kind, 8)?;
    let gens = classical_generators(kind, &space)?;
    let mut random = RandomElements::new(&gens, ChaCha8Rng::seed_from_u64(5));
    let mut sampled = 0;
    let mut failures = Vec::new();
    for _ in 0..100 {
        let Some(x) = random.element_of_order(5, 5000, |x| x.minus_identity().rank() == 8) else {
            failures.push("no fixed-point-free element found".to_string());
            break;
        };
        sampled += 1;
        let dec = decompose_under(&x, &space)?;
        let v = validate_decomposition(&dec, &space);
        let shape = dec.fixed.is_empty()
            && dec.summand_dims() == vec![4, 4]
            && dec.summands.iter().all(|s| s.minpoly == vec![1, 1, 1, 1, 1] && space.is_nondegenerate(&s.basis));
        if !v.passed() || !shape {
            failures.push(format!("dims {:?}, failed checks {:?}", dec.summand_dims(), v.failures().iter().map(|c| &c.name).collect::<Vec<_>>()));
        }
    }
    let survey = survey_cell(kind, 8, 5, 100, 5)?;
    Ok(vec![
        Check::holds(
            "fixed-point-free elements split as 4 + 4",
            failures.is_empty() && sampled == 100,
            format!("{sampled} sampled, {} failures", failures.len()),
        )
        .with_witness(failures.join("; ")),
        Check::equal("dim [V, x] over the elements of order 5", vec![4, 8], survey.seed_dims.clone()),
        Check::holds(
            "random conjugates decompose",
            survey.passed() && survey.checked >= 100,
            format!("{} conjugates, {} failures", survey.checked, survey.failures.len()),
        ),
    ])
}

fn folder_search_pgl25() -> Result<Vec<Check>> {
    let g = pgl2(5)?;
    let psl = psl2(5)?;
    let store = g.elements()?;
    let borel: Vec<Permutation> = store
        .iter()
        .map(|x| store.perm(x))
        .filter(|x| x.apply(0) == 0 && !x.is_identity())
        .collect();
    let h = g.subgroup(borel)?;
    let mut pool: Vec<Permutation> = store
        .iter()
        .filter(|&x| store.order(x) == 2)
        .map(|x| store.perm(x))
        .filter(|x| !psl.contains(x))
        .collect();
    let outer = pool.len();
    pool.push(g.identity());
    let require = Requirements {
        left_bol: true,
        aip: false,
        two_power_exponent: true,
    };
    let found = search_folders(&g, &h, &pool, require, SearchOptions::default())?;
    let latin = search_folders(&g, &h, &pool, Requirements::default(), SearchOptions::default())?;
    Ok(vec![
        Check::equal("|H|", 20, h.order()),
        Check::equal("involutions outside PSL2(5)", 10, outer),
        Check::equal("left Bol folders of exponent 2", 0, found.len()),
        Check::equal("Latin transversals from the pool", 0, latin.len()),
    ])
}

fn automizer_chain_m11() -> Result<Vec<Check>> {
    let g = mathieu(11)?;
    let mut indices = Vec::new();
    let mut witnesses = Vec::new();
    for p in [11u64, 5, 3] {
        let x = element_of_order(&g, p)?;
        let l = g.subgroup(vec![x.clone()])?;
        indices.push(g.automizer_index(&l)?);
        witnesses.push(format!("{p}: x = {}", x.to_cycle_string()));
    }
    let odd: Vec<u128> = indices.iter().map(|&i| odd_part(i)).collect();
    Ok(vec![
        Check::equal("|N:C| for orders 11, 5, 3", vec![5, 4, 2], indices).with_witness(witnesses.join("; ")),
        Check::equal("odd parts", vec![5, 1, 1], odd),
    ])
}

fn fsp_certificates() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let cases: [(&str, &[u64]); 3] = [("A7", &[5, 7]), ("M11", &[3, 5, 11]), ("M12", &[3, 5, 11])];
    for (name, primes) in cases {
        let g = by_name(name)?;
        for &p in primes {
            let r = fsp_certificate(&g, p)?;
            let summary: Vec<String> = r
                .classes
                .iter()
                .map(|c| format!("{}: {}", c.class, serde_json::to_string(&c.condition_used).expect("serializes")))
                .collect();
            checks.push(Check::holds(
                format!("{name}, p = {p}: every class certified"),
                !r.classes.is_empty() && r.all_certified(),
                summary.join(", "),
            ));
        }
    }
    let control = fsp_certificate(&by_name("A5xC3")?, 3)?;
    let blocked = control.classes.iter().filter(|c| c.status == ClassStatus::PossibleFailure).count();
    checks.push(Check::equal("A5xC3, p = 3: central classes reported as possible failures", 2, blocked));
    Ok(checks)
}
