mod common;

use std::collections::HashSet;

use loopfold::permgroup::catalog::{alternating, by_name, direct_product, cyclic, pgammal2, pgl2};
use loopfold::permgroup::composition_factors;
use loopfold::verifier::{
    bound_instances, counting_bound_check, emit_report, find_scenario, fsp_certificate, list_scenarios, run_scenario,
    run_scenarios, scenarios_within, Budget, Check, ClassStatus, Condition, Format, RunReport, BAD_FIELD_ORDERS,
};
use loopfold::Error;
use proptest::prelude::*;

fn json(names: &[&str]) -> String {
    emit_report(&run_scenarios(names).unwrap(), Format::Json)
}

#[test]
fn every_scenario_passes() {
    let names: Vec<&str> = list_scenarios().iter().map(|s| s.name).collect();
    assert_eq!(names.len(), 13);
    let report = run_scenarios(&names).unwrap();
    for s in &report.scenarios {
        let failed: Vec<&str> = s.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert!(s.passed, "{}: {:?} {:?}", s.name, s.error, failed);
        assert!(s.elapsed <= s.budget.limit(), "{} over budget", s.name);
    }
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn reports_are_deterministic() {
    let names = ["psl2_counting", "m11_fusion", "folder_search_pgl25", "alt9_terminal_3cycles", "omega8_order5_decomposition"];
    let a = json(&names);
    let mut reversed = names;
    reversed.reverse();
    assert_eq!(a, json(&reversed));
    assert_eq!(a, json(&names));
}

#[test]
fn text_report_mirrors_json() {
    let report = run_scenarios(&["psl2_counting", "automizer_chain_m11"]).unwrap();
    let text = emit_report(&report, Format::Text);
    let value: serde_json::Value = serde_json::from_str(&emit_report(&report, Format::Json)).unwrap();
    assert_eq!(value["schema_version"], 1);
    for s in value["scenarios"].as_array().unwrap() {
        assert!(text.contains(&format!("scenario {} [{}]: PASS", s["name"].as_str().unwrap(), s["budget"].as_str().unwrap())));
        for c in s["checks"].as_array().unwrap() {
            assert!(text.contains(&format!("check {}: PASS", c["name"].as_str().unwrap())));
            assert!(text.contains(&format!("computed: {}", c["computed"].as_str().unwrap())));
        }
    }
    assert!(text.ends_with("summary: 2/2 scenarios passed\n"));
}

#[test]
fn alt9_graph_is_connected() {
    let r = run_scenario("alt9_terminal_3cycles").unwrap();
    assert!(r.passed);
    let computed: Vec<&str> = r.checks.iter().map(|c| c.computed.as_str()).collect();
    assert!(computed.contains(&"168"), "{computed:?}");
    assert!(computed.contains(&"1"), "{computed:?}");
}

#[test]
fn unknown_names_are_rejected() {
    assert!(matches!(find_scenario("m13_inversion"), Err(Error::UnknownScenario(_))));
    assert!(matches!(run_scenarios(&["psl2_counting", "nope"]), Err(Error::UnknownScenario(_))));
    assert!(matches!(counting_bound_check("M24"), Err(Error::UnknownScenario(_))));
}

#[test]
fn failing_checks_fail_the_run() {
    let mut report = run_scenarios(&["psl2_counting"]).unwrap();
    report.scenarios[0].checks.push(Check::equal("forced", 1, 2));
    report.scenarios[0].passed = report.scenarios[0].checks.iter().all(|c| c.passed);
    let report = RunReport::new(report.scenarios);
    assert!(!report.passed);
    assert_eq!(report.exit_code(), 1);
    assert!(emit_report(&report, Format::Text).contains("check forced: FAIL"));
}

#[test]
fn budgets_select_scenarios() {
    let fast = scenarios_within(Budget::Fast);
    let all = scenarios_within(Budget::Slow);
    assert!(fast.len() < all.len());
    assert!(fast.contains(&"psl2_counting"));
    assert!(!fast.contains(&"m22_bound"));
    assert_eq!(all.len(), list_scenarios().len());
}

#[test]
fn every_bound_instance_holds() {
    for name in bound_instances() {
        let r = counting_bound_check(name).unwrap();
        assert!(r.holds, "{name}: {}", r.relation);
        assert_eq!(r.k_bound, 1 + r.k_classes.iter().map(|c| c.size).sum::<u64>());
        assert_eq!(r.relation, format!("{} > {}", r.index_bound.value, r.k_bound));
    }
}

#[test]
fn pgammal2_9_outer_involutions_by_enumeration() {
    let g = pgammal2(9).unwrap();
    let inner: HashSet<Vec<u32>> = common::elements(pgl2(9).unwrap().generators()).into_iter().collect();
    let outside = common::elements(g.generators())
        .into_iter()
        .filter(|x| common::order(x) == 2 && !inner.contains(x))
        .count() as u64;
    let r = counting_bound_check("PGammaL2(9)").unwrap();
    assert_eq!(r.involution_count, outside);
    assert_eq!(outside, 30);
    assert_eq!(r.index_bound.value, 36);
}

#[test]
fn s7_bound_counts_transpositions() {
    let r = counting_bound_check("S7").unwrap();
    let transpositions = common::elements(by_name("S7").unwrap().generators())
        .into_iter()
        .filter(|x| x.iter().enumerate().filter(|(i, &v)| *i as u32 != v).count() == 2)
        .count() as u64;
    assert_eq!(r.involution_count, transpositions);
    assert_eq!(r.index_bound.value, 2 * 315 / 5);
}

#[test]
fn fsp_reports_serialize_conditions() {
    let r = fsp_certificate(&alternating(7).unwrap(), 5).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let cond = v["classes"][0]["condition_used"].as_str().unwrap();
    assert!(["(1) soluble", "(2) F*=O_p", "(4') no bad factor"].contains(&cond));
    assert_eq!(v["classes"][0]["status"], "certified");
}

fn small_groups() -> Vec<&'static str> {
    vec!["A5", "A6", "A7", "S5", "S6", "PSL2(7)", "PSL2(8)", "A4xC3", "A5xC3", "A5xC5", "M11"]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fsp_verdicts_are_sound(idx in 0usize..11, p in prop::sample::select(vec![3u64, 5, 7, 11])) {
        let g = by_name(small_groups()[idx]).unwrap();
        let r = fsp_certificate(&g, p).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        let bad: Vec<u128> = BAD_FIELD_ORDERS.iter().filter(|&&q| (q + 1) % p as u128 == 0).map(|&q| q * (q * q - 1) / 2).collect();
        for v in &r.classes {
            let x = &classes.classes().iter().find(|c| c.name == v.class).unwrap().representative;
            let c = g.centralizer(x).unwrap();
            prop_assert_eq!(c.order(), v.centralizer_order);
            prop_assert_eq!(v.certified, v.condition_used.is_some());
            prop_assert_eq!(v.status == ClassStatus::Certified, v.certified);
            let soluble = c.is_soluble().unwrap();
            let has_bad = composition_factors(&c).unwrap().iter().any(|f| !f.is_abelian() && bad.contains(&f.order));
            match v.condition_used {
                Some(Condition::Soluble) => prop_assert!(soluble),
                Some(Condition::FittingIsOp) => prop_assert!(!soluble),
                Some(Condition::NoBadFactor) => prop_assert!(!has_bad),
                None => prop_assert!(has_bad && !v.bad_factors.is_empty()),
            }
        }
    }

    #[test]
    fn direct_factor_c_p_blocks_exactly_bad_sections(p in prop::sample::select(vec![3usize, 5, 7])) {
        let g = direct_product(&alternating(5).unwrap(), &cyclic(p).unwrap()).unwrap();
        let r = fsp_certificate(&g, p as u64).unwrap();
        let central: Vec<_> = r.classes.iter().filter(|c| c.class_size == 1).collect();
        prop_assert_eq!(central.len(), p - 1);
        // A5 = PSL2(5) is bad exactly when p | 6.
        for c in central {
            prop_assert_eq!(c.certified, 6 % p != 0);
        }
    }
}
