use std::time::Instant;

use qhw_core::algebra::rational::int;
use qhw_core::algebra::{Param, RewriteSystem};
use qhw_core::quantization::{
    check_centrality, check_realization, quantize, swap_type_i_plus, verify_hopf, FamilyParams,
    FamilyRegistry, HopfPresentation,
};

fn symbolic(name: &str, k: u32) -> HopfPresentation {
    let reg = FamilyRegistry::default();
    let fam = reg.get(name).unwrap();
    let p = FamilyParams::symbolic(fam.parameters(), k);
    HopfPresentation::build(fam, &p).unwrap()
}

#[test]
fn every_family_is_hopf_at_order_three() {
    for name in ["type1plus", "type1minus", "type2"] {
        let t = Instant::now();
        let hp = symbolic(name, 3);
        for r in verify_hopf(&hp).unwrap() {
            let bad: Vec<String> = r
                .failures()
                .map(|f| format!("{}: {}", f.label, f.render()))
                .collect();
            assert!(bad.is_empty(), "{name} {}: {bad:?}", r.axiom);
        }
        eprintln!("{name}: {:?}", t.elapsed());
    }
}

#[test]
fn concrete_type_ii_relation() {
    let reg = FamilyRegistry::default();
    let fam = reg.get("type2").unwrap();
    let p = FamilyParams::concrete(&[(Param::A2, int(-1)), (Param::B3, int(-1))], 3);
    let (hp, _) = quantize(fam, &p).unwrap();
    assert_eq!(
        hp.relation_strings()[2],
        "[A-,A+] = M - M^2 + (2/3)*M^3 - (1/3)*M^4"
    );
    let doc = hp.to_document();
    assert_eq!(doc.antipode.a_minus, "-A-*exp(M)");
}

#[test]
fn type_i_plus_closed_forms_render() {
    let hp = symbolic("type1plus", 2);
    let doc = hp.to_document();
    assert_eq!(
        doc.coproduct.a_minus,
        "1 (x) A- + A- (x) exp(a1*A+) - a3*M (x) A+*exp(a1*A+)"
    );
    assert_eq!(doc.antipode.a_plus, "-A+");
}

#[test]
fn swap_matches_type_i_minus() {
    let k = 3;
    let plus = symbolic("type1plus", k);
    let swapped = swap_type_i_plus(&plus).unwrap();
    let minus = symbolic("type1minus", k);
    assert_eq!(swapped.to_document(), minus.to_document());
}

#[test]
fn casimir_and_realization() {
    let hp = symbolic("type1plus", 4);
    for r in check_centrality(&hp).unwrap() {
        assert!(r.is_zero(), "{}: {}", r.label, r.render());
    }
    let rep = check_realization(&hp, 4).unwrap();
    for (l, r) in &rep.residuals {
        assert!(r.is_zero(), "{l}: {r}");
    }
}

#[test]
fn undeformed_relations_break_the_homomorphism() {
    let hp = symbolic("type1plus", 3);
    let k = hp.order();
    let broken = hp.with_rewrite(RewriteSystem::undeformed(k));
    let reports = verify_hopf(&broken).unwrap();
    let hom = &reports[0];
    assert!(!hom.passed());
    let lowest = hom.failures().filter_map(|r| r.min_degree()).min();
    assert_eq!(lowest, Some(1));
}

#[test]
fn timings_at_working_orders() {
    for (name, k) in [("type1plus", 4), ("type2", 4), ("type1minus", 4)] {
        let t = Instant::now();
        let hp = symbolic(name, k);
        assert!(verify_hopf(&hp).unwrap().iter().all(|r| r.passed()));
        eprintln!("{name} K={k}: {:?}", t.elapsed());
    }
}
