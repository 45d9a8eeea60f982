mod common;

use std::collections::{BTreeSet, HashMap};

use common::{compose, elements, inverse, Images};
use loopfold::loopfolder::{
    check_folder, check_table, inversion_pairs, loop_from_folder, search_folders, subfolder_restrict, FolderSpec,
    LoopFolder, LoopTable, Requirements, SearchOptions,
};
use loopfold::permgroup::catalog::{alternating, by_name, cyclic, pgl2, psl2, symmetric};
use loopfold::permgroup::GroupHandle;
use loopfold::{Error, Permutation};
use proptest::prelude::*;

const ALL: Requirements = Requirements {
    left_bol: true,
    aip: true,
    two_power_exponent: true,
};

fn p(s: &str, d: usize) -> Permutation {
    Permutation::parse_cycles(s, d).unwrap()
}

fn perm(images: &[u32]) -> Permutation {
    Permutation::from_images(images.to_vec()).unwrap()
}

fn all_elements(g: &GroupHandle) -> Vec<Permutation> {
    elements(g.generators()).iter().map(|x| perm(x)).collect()
}

fn stabilizer(g: &GroupHandle, point: u32) -> GroupHandle {
    let gens: Vec<Permutation> = all_elements(g)
        .into_iter()
        .filter(|x| x.apply(point) == point && !x.is_identity())
        .collect();
    if gens.is_empty() {
        GroupHandle::trivial(g.degree(), g.cap())
    } else {
        g.subgroup(gens).unwrap()
    }
}

fn sylow2_s8() -> (GroupHandle, GroupHandle, Vec<Permutation>) {
    let g = symmetric(8).unwrap().sylow(2).unwrap();
    let h = stabilizer(&g, 0);
    let pool = all_elements(&g).into_iter().filter(|x| x.order() <= 2).collect();
    (g, h, pool)
}

/// Loop product computed from images only: `a ∘ b` is the `k ∈ K` with
/// `k⁻¹ab ∈ H`.
fn oracle_table(h: &[Images], k: &[Images]) -> Option<Vec<Vec<usize>>> {
    let hs: BTreeSet<&Images> = h.iter().collect();
    let rep = |x: &Images| {
        let found: Vec<usize> = (0..k.len())
            .filter(|&i| hs.contains(&compose(&inverse(&k[i]), x)))
            .collect();
        (found.len() == 1).then(|| found[0])
    };
    k.iter()
        .map(|a| k.iter().map(|b| rep(&compose(a, b))).collect())
        .collect()
}

fn oracle_bol(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| t[x][t[y][t[x][z]]] == t[t[x][t[y][x]]][z]))
    })
}

fn oracle_latin(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|i| {
        let row: BTreeSet<usize> = t[i].iter().copied().collect();
        let col: BTreeSet<usize> = (0..n).map(|j| t[j][i]).collect();
        row.len() == n && col.len() == n
    })
}

fn images(xs: &[Permutation]) -> Vec<Images> {
    xs.iter().map(|x| x.images().to_vec()).collect()
}

#[test]
fn small_examples() {
    let s3 = symmetric(3).unwrap();
    let h = s3.subgroup(vec![p("(1,2)", 3)]).unwrap();
    let f = LoopFolder::new(&s3, &h, vec![p("()", 3), p("(1,2,3)", 3), p("(1,3,2)", 3)]).unwrap();
    let t = loop_from_folder(&f);
    assert!(t.is_group());
    assert_eq!(t.exponent_profile().exponent, 3);

    let h = s3.subgroup(vec![p("(1,2,3)", 3)]).unwrap();
    let f = LoopFolder::new(&s3, &h, vec![p("()", 3), p("(1,2)", 3)]).unwrap();
    assert_eq!(loop_from_folder(&f), LoopTable::cyclic(2));

    let s4 = symmetric(4).unwrap();
    let h = stabilizer(&s4, 3);
    let klein = vec![p("()", 4), p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4), p("(1,4)(2,3)", 4)];
    let t = loop_from_folder(&LoopFolder::new(&s4, &h, klein).unwrap());
    assert!(t.is_group());
    assert_eq!(t.exponent_profile().orders.get(&2), Some(&3));
}

#[test]
fn complements_give_their_group_table() {
    let cases: Vec<(GroupHandle, Vec<Permutation>, Vec<Permutation>)> = vec![
        (symmetric(3).unwrap(), vec![p("(1,2)", 3)], vec![p("(1,2,3)", 3)]),
        (symmetric(4).unwrap(), vec![p("(1,2)", 4), p("(1,2,3)", 4)], vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]),
        (symmetric(4).unwrap(), vec![p("(1,2)", 4), p("(1,2,3)", 4)], vec![p("(1,2,3,4)", 4)]),
        (symmetric(4).unwrap(), vec![p("(1,2)(3,4)", 4), p("(1,2,3)", 4)], vec![p("(1,2)", 4)]),
        (alternating(4).unwrap(), vec![p("(1,2,3)", 4)], vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]),
        (alternating(5).unwrap(), vec![p("(1,2,3)", 5), p("(2,3,4)", 5)], vec![p("(1,2,3,4,5)", 5)]),
        (by_name("D14").unwrap(), vec![by_name("D14").unwrap().generators()[1].clone()], vec![by_name("D14").unwrap().generators()[0].clone()]),
    ];
    for (g, h_gens, k_gens) in cases {
        let h = g.subgroup(h_gens).unwrap();
        let k_group = g.subgroup(k_gens.clone()).unwrap();
        assert_eq!(h.order() * k_group.order(), g.order());
        let k = all_elements(&k_group);
        let f = LoopFolder::new(&g, &h, k.clone()).unwrap();
        let kimg = images(&k);
        let expected: Vec<Vec<usize>> = kimg
            .iter()
            .map(|a| kimg.iter().map(|b| kimg.iter().position(|c| *c == compose(a, b)).unwrap()).collect())
            .collect();
        let t = loop_from_folder(&f);
        assert_eq!(t.table, expected);
        let report = check_table(&t, g.cap());
        assert!(report.flags.latin && report.flags.left_bol && report.flags.power_associative_checked);
    }
}

#[test]
fn loop_matches_oracle_on_every_s4_transversal() {
    let g = symmetric(4).unwrap();
    let h = stabilizer(&g, 3);
    let pool = all_elements(&g);
    let found = search_folders(&g, &h, &pool, Requirements::default(), SearchOptions::default()).unwrap();
    let himg = images(&all_elements(&h));
    let mut latin = 0;
    for k in &found {
        let t = loop_from_folder(&LoopFolder::new(&g, &h, k.clone()).unwrap());
        let oracle = oracle_table(&himg, &images(k)).unwrap();
        assert_eq!(t.table, oracle);
        assert!(oracle_latin(&oracle));
        assert_eq!(t.check_left_bol().0, oracle_bol(&oracle));
        latin += 1;
    }
    // 6^3 transversals of a point stabilizer; the search keeps the Latin ones.
    let total = 6usize.pow(3);
    let mut oracle_latin_count = 0;
    let cosets: Vec<Vec<Permutation>> = (0..3u32)
        .map(|pt| pool.iter().filter(|x| x.apply(pt) == 3).cloned().collect())
        .collect();
    for a in &cosets[0] {
        for b in &cosets[1] {
            for c in &cosets[2] {
                let k = images(&[p("()", 4), a.clone(), b.clone(), c.clone()]);
                if oracle_latin(&oracle_table(&himg, &k).unwrap()) {
                    oracle_latin_count += 1;
                }
            }
        }
    }
    assert_eq!(cosets.iter().map(Vec::len).product::<usize>(), total);
    assert_eq!(latin, oracle_latin_count);
}

#[test]
fn s4_over_s3_yields_only_groups() {
    let g = symmetric(4).unwrap();
    let h = stabilizer(&g, 3);
    let found = search_folders(&g, &h, &all_elements(&g), ALL, SearchOptions::default()).unwrap();
    assert!(!found.is_empty());
    let mut exponents = BTreeSet::new();
    for k in &found {
        let t = loop_from_folder(&LoopFolder::new(&g, &h, k.clone()).unwrap());
        assert!(t.is_group());
        exponents.insert(t.exponent_profile().exponent);
    }
    assert_eq!(exponents, BTreeSet::from([2, 4]));
}

fn pgl25_setup() -> (GroupHandle, GroupHandle, Vec<Permutation>) {
    let g = pgl2(5).unwrap();
    let psl = psl2(5).unwrap();
    let h = stabilizer(&g, 0);
    assert_eq!(h.order(), 20);
    let mut pool: Vec<Permutation> = all_elements(&g)
        .into_iter()
        .filter(|x| x.order() == 2 && !psl.contains(x))
        .collect();
    assert_eq!(pool.len(), 10);
    pool.push(Permutation::identity(g.degree()));
    (g, h, pool)
}

#[test]
fn pgl25_borel_search_is_empty() {
    let (g, h, pool) = pgl25_setup();
    let found = search_folders(&g, &h, &pool, ALL, SearchOptions::default()).unwrap();
    assert!(found.is_empty());
    let unconstrained = search_folders(&g, &h, &pool, Requirements::default(), SearchOptions::default()).unwrap();

    // Every 5-subset of the outer involutions, by direct arithmetic.
    let himg = images(&all_elements(&h));
    let inv: Vec<Images> = images(&pool[..10]);
    let id: Images = (0..6).collect();
    let mut transversals = 0;
    let mut bol_exp2 = 0;
    for mask in 0u32..1 << 10 {
        if mask.count_ones() != 5 {
            continue;
        }
        let mut k = vec![id.clone()];
        k.extend((0..10).filter(|i| mask >> i & 1 == 1).map(|i| inv[i].clone()));
        if let Some(t) = oracle_table(&himg, &k) {
            transversals += 1;
            if oracle_latin(&t) && oracle_bol(&t) {
                bol_exp2 += 1;
            }
        }
    }
    assert_eq!(transversals, 32);
    assert_eq!(bol_exp2, 0);
    assert!(unconstrained.is_empty());
}

#[test]
fn pgl25_inversion_obstruction_over_all_five_subsets() {
    let (g, h, pool) = pgl25_setup();
    let himg = images(&all_elements(&h));
    let mut subsets = 0;
    let mut nonempty = 0;
    for mask in 0u32..1 << 10 {
        if mask.count_ones() != 5 {
            continue;
        }
        subsets += 1;
        let mut k = vec![pool[10].clone()];
        k.extend((0..10).filter(|i| mask >> i & 1 == 1).map(|i| pool[i].clone()));
        let got = inversion_pairs(&g, &h, &k).unwrap();
        let mut oracle = 0;
        for kk in images(&k) {
            for x in &himg {
                let o = common::order(x);
                if o > 1 && o % 2 == 1 && compose(&compose(&inverse(&kk), x), &kk) == inverse(x) {
                    oracle += 1;
                }
            }
        }
        assert_eq!(got.len(), oracle);
        if oracle > 0 {
            nonempty += 1;
        }
    }
    assert_eq!(subsets, 252);
    // Elements inverting the Sylow 5 of the Borel lie in the Borel, which
    // fixes a point; outer involutions are fixed-point-free.
    assert_eq!(nonempty, 0);
}

#[test]
fn obstruction_examples() {
    let d14 = by_name("D14").unwrap();
    let (rot, refl) = (d14.generators()[0].clone(), d14.generators()[1].clone());
    let h = d14.subgroup(vec![rot]).unwrap();
    let f = LoopFolder::new(&d14, &h, vec![Permutation::identity(7), refl]).unwrap();
    assert_eq!(f.k_inversion_obstruction().unwrap().len(), 6);

    let c6 = cyclic(6).unwrap();
    let x = c6.generators()[0].clone();
    let h = c6.subgroup(vec![x.pow(2)]).unwrap();
    let f = LoopFolder::new(&c6, &h, vec![Permutation::identity(6), x.pow(3)]).unwrap();
    assert!(f.k_inversion_obstruction().unwrap().is_empty());
}

#[test]
fn non_associative_bol_loop_of_order_eight() {
    let (g, h, pool) = sylow2_s8();
    assert_eq!((g.order(), h.order()), (128, 16));
    let found = search_folders(
        &g,
        &h,
        &pool,
        Requirements {
            left_bol: true,
            ..Requirements::default()
        },
        SearchOptions::default(),
    )
    .unwrap();
    let himg = images(&all_elements(&h));
    let mut non_associative = 0;
    for k in &found {
        let t = loop_from_folder(&LoopFolder::new(&g, &h, k.clone()).unwrap());
        let oracle = oracle_table(&himg, &images(k)).unwrap();
        assert!(oracle_latin(&oracle) && oracle_bol(&oracle));
        let report = check_table(&t, g.cap());
        assert!(report.flags.left_bol && report.flags.power_associative_checked);
        assert_eq!(report.exponent.as_ref().unwrap().exponent, 2);
        for x in 0..t.n {
            assert_eq!(t.left_inverse(x), t.right_inverse(x));
        }
        if let Some(w) = t.associativity_witness() {
            non_associative += 1;
            let [a, b, c] = w.elements[..] else { panic!("triple") };
            assert_ne!(oracle[oracle[a][b]][c], oracle[a][oracle[b][c]]);
            let mg = t.mult_group(g.cap()).unwrap();
            assert!(mg.order().is_power_of_two());
            let gens = mg.generators();
            assert!(gens.iter().any(|x| gens.iter().any(|y| x * y != y * x)));
        }
    }
    assert!(non_associative > 0);
}

#[test]
fn search_is_deterministic() {
    let (g, h, pool) = sylow2_s8();
    let req = Requirements {
        left_bol: true,
        ..Requirements::default()
    };
    let a = search_folders(&g, &h, &pool, req, SearchOptions::default()).unwrap();
    let mut shuffled = pool.clone();
    shuffled.reverse();
    let b = search_folders(&g, &h, &shuffled, req, SearchOptions::default()).unwrap();
    assert_eq!(a, b);
    let json = |r: &Vec<Vec<Permutation>>| {
        let tables: Vec<String> = r
            .iter()
            .map(|k| loop_from_folder(&LoopFolder::new(&g, &h, k.clone()).unwrap()).to_json())
            .collect();
        tables.join("\n")
    };
    assert_eq!(json(&a), json(&b));
}

fn as_sets(r: &[Vec<Permutation>]) -> BTreeSet<BTreeSet<Vec<u32>>> {
    r.iter().map(|k| k.iter().map(|x| x.images().to_vec()).collect()).collect()
}

#[test]
fn search_commutes_with_conjugation() {
    let cases = [
        {
            let g = symmetric(4).unwrap();
            let h = stabilizer(&g, 3);
            let pool = all_elements(&g);
            (g, h, pool, p("(1,2,3,4)", 4), ALL)
        },
        {
            let (g, h, pool) = sylow2_s8();
            let c = g.generators()[0].clone();
            (g, h, pool, c, Requirements { left_bol: true, ..Requirements::default() })
        },
    ];
    for (g, h, pool, c, req) in cases {
        let conj = |x: &Permutation| x.conjugate_by(&c);
        let h2 = g.subgroup(h.generators().iter().map(conj).collect()).unwrap();
        let pool2: Vec<Permutation> = pool.iter().map(conj).collect();
        let a = search_folders(&g, &h, &pool, req, SearchOptions::default()).unwrap();
        let b = search_folders(&g, &h2, &pool2, req, SearchOptions::default()).unwrap();
        let a_conj: Vec<Vec<Permutation>> = a.iter().map(|k| k.iter().map(conj).collect()).collect();
        assert_eq!(as_sets(&a_conj), as_sets(&b));
    }
}

#[test]
fn klein_regular_search() {
    let v = by_name("C2xC2").unwrap();
    let h = GroupHandle::trivial(v.degree(), v.cap());
    let found = search_folders(&v, &h, &all_elements(&v), ALL, SearchOptions::default()).unwrap();
    assert_eq!(found.len(), 1);
    let t = loop_from_folder(&LoopFolder::new(&v, &h, found[0].clone()).unwrap());
    assert_eq!(t.exponent_profile().exponent, 2);
    assert_eq!(t.mult_group(v.cap()).unwrap().order(), 4);
}

#[test]
fn search_preconditions() {
    let g = symmetric(4).unwrap();
    let h = stabilizer(&g, 3);
    let no_identity: Vec<Permutation> = all_elements(&g).into_iter().filter(|x| !x.is_identity()).collect();
    assert!(matches!(
        search_folders(&g, &h, &no_identity, ALL, SearchOptions::default()),
        Err(Error::Precondition(_))
    ));
    let tight = SearchOptions {
        max_index: 3,
        ..SearchOptions::default()
    };
    assert!(search_folders(&g, &h, &all_elements(&g), ALL, tight).is_err());
    let limited = SearchOptions {
        limit: 100,
        ..SearchOptions::default()
    };
    assert!(matches!(
        search_folders(&g, &h, &all_elements(&g), ALL, limited),
        Err(Error::SearchLimit(_))
    ));
}

#[test]
fn restriction_to_a4() {
    let g = symmetric(4).unwrap();
    let h = stabilizer(&g, 3);
    let klein = vec![p("()", 4), p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4), p("(1,4)(2,3)", 4)];
    let f = LoopFolder::new(&g, &h, klein.clone()).unwrap();
    let a4 = alternating(4).unwrap();
    let sub = subfolder_restrict(&f, &a4).unwrap();
    assert_eq!(sub.h().order(), 3);
    assert_eq!(sub.g().order() / sub.h().order(), 4);
    assert_eq!(loop_from_folder(&sub), loop_from_folder(&f));

    let gen = f.restrict_to_generated().unwrap();
    assert_eq!(gen.g().order(), 4);
    assert!(gen.h().is_trivial());
    assert_eq!(subfolder_restrict(&f, &g).unwrap().h().order(), 6);

    let other = LoopFolder::new(&g, &h, vec![p("()", 4), p("(1,4)", 4), p("(2,4)", 4), p("(3,4)", 4)]).unwrap();
    assert!(subfolder_restrict(&other, &a4).is_err());
}

#[test]
fn spec_files() {
    let text = r#"{"group": "S4", "subgroup_generators": ["(1,2)", "(2,3)"], "K": ["()", "(1,4)", "(2,4)", "(3,4)"]}"#;
    let spec = FolderSpec::parse(text).unwrap();
    let f = spec.build().unwrap();
    let report = check_table(&loop_from_folder(&f), f.g().cap());
    // () ∘ (2,4) and (1,4) ∘ (2,4) are both (2,4).
    assert!(report.flags.transversal && !report.flags.latin);
    assert!(report.witnesses.iter().any(|w| w.check == "latin_column"));
    assert!(FolderSpec::parse("{\"group\": 3}").is_err());
    let bad = FolderSpec {
        k: vec!["()".into(), "(1,2)".into(), "(1,3)".into(), "(2,3)".into()],
        ..spec
    };
    let (g, h, k) = bad.resolve().unwrap();
    let r = check_folder(&g, &h, k).unwrap();
    assert!(!r.flags.transversal && r.transversal_error.is_some());
}

fn s4_random_transversal() -> impl Strategy<Value = (u32, Vec<usize>)> {
    (0u32..4, proptest::collection::vec(0usize..6, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Every transversal of a point stabilizer in S4: flags agree with the
    /// oracle, false flags have witnesses, involution-only K has exponent 2.
    #[test]
    fn random_s4_transversals((point, picks) in s4_random_transversal()) {
        let g = symmetric(4).unwrap();
        let h = stabilizer(&g, point);
        let elems = all_elements(&g);
        let mut by_coset: HashMap<u32, Vec<Permutation>> = HashMap::new();
        for x in &elems {
            // Left coset xH is determined by the preimage of the fixed point.
            by_coset.entry(x.inverse().apply(point)).or_default().push(x.clone());
        }
        let mut k = vec![Permutation::identity(4)];
        let others: Vec<u32> = (0..4).filter(|&q| q != point).collect();
        for (i, q) in others.iter().enumerate() {
            let c = &by_coset[q];
            k.push(c[picks[i] % c.len()].clone());
        }
        let r = check_folder(&g, &h, k.clone()).unwrap();
        prop_assert!(r.flags.transversal);
        let oracle = oracle_table(&images(&all_elements(&h)), &images(&k)).unwrap();
        prop_assert_eq!(r.flags.latin, oracle_latin(&oracle));
        prop_assert_eq!(r.flags.left_bol, oracle_bol(&oracle));
        let f = r.flags.clone();
        for (flag, name) in [(f.latin, "latin"), (f.left_bol, "left_bol"), (f.aip, "aip"), (f.power_associative_checked, "power_associative"), (f.two_power_exponent, "two_power_exponent")] {
            prop_assert!(flag || !r.witnesses.is_empty(), "{} false without witness", name);
        }
        if f.latin && k.iter().all(|x| x.order() <= 2) {
            prop_assert_eq!(r.exponent.unwrap().exponent, 2);
            prop_assert!((0..4).all(|x| oracle[x][x] == 0));
        }
    }
}
