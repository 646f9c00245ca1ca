//! Exhaustive sweeps over the brace corpus.

use skb_core::brace::check_brace_axiom;
use skb_core::commutator::{
    center, centralizer, centralizer_by_joins, huq_commutator, huq_commutator_checked, huq_commute,
    star_product,
};
use skb_core::congruence::{
    all_congruences, congruence_of_ideal, ideal_of_congruence, quotient_brace,
};
use skb_core::corpus::{constructed, corpus, CorpusEntry};
use skb_core::format::{parse_brace_file, serialize_brace};
use skb_core::ideal::{all_ideals, join_of_ideals};
use skb_core::smith::{smith_commutator, verify_huq_equals_smith_digroup};
use skb_core::theta::{theta_twist_digroup, ThetaTwistSpec};
use skb_core::ybe::{build_r, ybe_morphism_check};
use skb_core::{FiniteGroup, Limits, Subset};

fn entries() -> Vec<CorpusEntry> {
    corpus(&Limits::default()).unwrap()
}

#[test]
fn commutator_matches_oracle_and_is_symmetric() {
    for e in entries() {
        let b = &e.brace;
        let ideals = all_ideals(b).unwrap();
        let mut table = Vec::new();
        for i in &ideals {
            for j in &ideals {
                let report = huq_commutator_checked(b, i, j).unwrap();
                let c = report.commutator;
                assert!(report.generators.union().is_subset_of(&c), "{}", e.name);
                assert_eq!(
                    c.is_trivial(),
                    huq_commute(b.digroup(), i, j).unwrap(),
                    "{}: {i:?} {j:?}",
                    e.name
                );
                assert!(
                    star_product(b, i, j).unwrap().is_subset_of(&c),
                    "{}",
                    e.name
                );
                assert!(
                    c.is_subset_of(&join_of_ideals(b, i, j).unwrap()),
                    "{}",
                    e.name
                );
                table.push((i.clone(), j.clone(), c));
            }
        }
        for (i, j, c) in &table {
            let swapped = table.iter().find(|(a, b, _)| a == j && b == i).unwrap();
            assert_eq!(c, &swapped.2, "{}: [I,J] != [J,I]", e.name);
            for (i2, j2, c2) in &table {
                if i.is_subset_of(i2) && j.is_subset_of(j2) {
                    assert!(c.is_subset_of(c2), "{}: monotonicity", e.name);
                }
            }
        }
    }
}

#[test]
fn trivial_star_product_iff_lambda_fixes() {
    for e in entries() {
        let b = &e.brace;
        let ideals = all_ideals(b).unwrap();
        for i in &ideals {
            for j in &ideals {
                let fixes = i.iter().all(|x| j.iter().all(|y| b.lambda(x, y) == y));
                assert_eq!(
                    star_product(b, i, j).unwrap().is_trivial(),
                    fixes,
                    "{}: {i:?} {j:?}",
                    e.name
                );
            }
        }
    }
}

#[test]
fn star_product_is_not_symmetric() {
    let ut = constructed()
        .unwrap()
        .into_iter()
        .find(|e| e.name == "J(UT3(F2))")
        .unwrap()
        .brace;
    let i = Subset::new(8, [0, 1, 2, 3]).unwrap();
    let j = Subset::new(8, [0, 2, 4, 6]).unwrap();
    assert_eq!(star_product(&ut, &i, &j).unwrap(), Subset::zero(8));
    assert_eq!(
        star_product(&ut, &j, &i).unwrap(),
        Subset::new(8, [0, 2]).unwrap()
    );
    assert_eq!(
        huq_commutator(&ut, &i, &j).unwrap().commutator,
        huq_commutator(&ut, &j, &i).unwrap().commutator
    );
}

#[test]
fn centralizers_are_largest() {
    for e in entries() {
        let b = &e.brace;
        let ideals = all_ideals(b).unwrap();
        for i in &ideals {
            let c = centralizer(b, i).unwrap();
            assert_eq!(c, centralizer_by_joins(b, i).unwrap(), "{}", e.name);
            for j in &ideals {
                if huq_commute(b.digroup(), j, i).unwrap() {
                    assert!(j.is_subset_of(&c), "{}", e.name);
                }
            }
        }
        assert_eq!(
            center(b).unwrap(),
            centralizer(b, &Subset::full(b.order())).unwrap()
        );
    }
}

#[test]
fn ideals_and_congruences_correspond() {
    for e in entries() {
        let b = &e.brace;
        let ideals = all_ideals(b).unwrap();
        let congruences = all_congruences(b.digroup(), b.limits()).unwrap();
        assert_eq!(ideals.len(), congruences.len(), "{}", e.name);
        for i in &ideals {
            let r = congruence_of_ideal(b, i).unwrap();
            assert_eq!(&ideal_of_congruence(&r), i);
            assert!(congruences.contains(&r));
            for a in 0..b.order() {
                let image = Subset::new(b.order(), i.iter().map(|u| b.lambda(a, u))).unwrap();
                assert_eq!(&image, i, "{}", e.name);
            }
        }
        for r in &congruences {
            assert_eq!(&congruence_of_ideal(b, &ideal_of_congruence(r)).unwrap(), r);
        }
    }
}

#[test]
fn quotients_are_braces_and_solution_morphisms() {
    for e in entries() {
        let b = &e.brace;
        for i in all_ideals(b).unwrap() {
            let q = quotient_brace(b, &i).unwrap();
            assert!(check_brace_axiom(q.brace.digroup()).holds());
            assert!(build_r(&q.brace).is_solution());
            assert!(
                ybe_morphism_check(b, &q.brace, &q.projection),
                "{}: {i:?}",
                e.name
            );
        }
    }
}

#[test]
fn smith_commutator_is_minimal() {
    for e in entries().into_iter().filter(|e| e.brace.order() <= 6) {
        let b = &e.brace;
        let congruences = all_congruences(b.digroup(), b.limits()).unwrap();
        for r in &congruences {
            for s in &congruences {
                let c = smith_commutator(b, r, s).unwrap();
                let expected =
                    huq_commutator(b, &ideal_of_congruence(r), &ideal_of_congruence(s)).unwrap();
                assert_eq!(ideal_of_congruence(&c), expected.commutator, "{}", e.name);
            }
        }
    }
}

#[test]
fn files_round_trip() {
    for e in entries() {
        let text = serialize_brace(e.brace.digroup());
        assert_eq!(
            &parse_brace_file(&text, &Limits::default()).unwrap(),
            e.brace.digroup(),
            "{}",
            e.name
        );
    }
}

#[test]
fn twisted_digroups() {
    let z2z4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4));
    let specs = [
        ThetaTwistSpec::cyclic(3, 1).unwrap(),
        ThetaTwistSpec::cyclic(5, 2).unwrap(),
        ThetaTwistSpec::cyclic(7, 3).unwrap(),
        ThetaTwistSpec::new(z2z4, 1).unwrap(),
    ];
    for spec in &specs {
        let d = theta_twist_digroup(spec).unwrap();
        assert!(!check_brace_axiom(&d).holds());
        let n = d.order();
        assert_eq!(spec.theta(0), 0);
        assert!((0..n).all(|p| spec.theta(spec.theta(p)) == p));
    }
}

#[test]
fn huq_and_smith_split_on_the_twisted_digroup() {
    let spec = ThetaTwistSpec::cyclic(5, 1).unwrap();
    let d = theta_twist_digroup(&spec).unwrap();
    let entries = verify_huq_equals_smith_digroup(&d, &Limits::default()).unwrap();
    let kernel = Subset::new(25, (0..5).map(|x| spec.pair(x, 0))).unwrap();
    let split: Vec<_> = entries.iter().filter(|e| !e.agrees()).collect();
    assert!(split
        .iter()
        .any(|e| e.huq && !e.smith && e.r.zero_class() == kernel && e.s.zero_class() == kernel));
    assert!(split.iter().all(|e| e.huq && !e.smith));
}
