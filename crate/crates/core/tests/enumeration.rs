//! Enumeration against frozen canonical lists in `tests/golden`.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use skb_core::brace::check_brace_axiom;
use skb_core::enumerate::{
    canonical_key, enumerate_braces, enumerate_by_lambda, enumerate_by_tables, limits_for_order,
    BraceKey,
};
use skb_core::format::serialize_brace;
use skb_core::ybe::build_r;

fn golden_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/braces_n{n}.skb"))
}

fn render(keys: &[BraceKey]) -> String {
    let limits = limits_for_order(keys.first().map_or(1, |k| k.order));
    keys.iter()
        .enumerate()
        .map(|(k, key)| {
            format!(
                "# k={}\n{}",
                k + 1,
                serialize_brace(key.to_brace(&limits).unwrap().digroup())
            )
        })
        .collect()
}

fn check_against_golden(n: usize) {
    let limits = limits_for_order(n);
    let by_tables = enumerate_by_tables(n, &limits).unwrap();
    assert_eq!(by_tables, enumerate_by_lambda(n, &limits).unwrap());
    let text = render(&by_tables);
    let path = golden_path(n);
    if std::env::var_os("SKB_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    assert_eq!(
        text,
        std::fs::read_to_string(&path).unwrap(),
        "golden list for order {n} changed"
    );
}

#[test]
fn forced_orders_have_one_class() {
    for n in 1..=3 {
        let limits = limits_for_order(n);
        assert_eq!(enumerate_braces(n, true, &limits).unwrap().len(), 1);
        assert_eq!(enumerate_by_lambda(n, &limits).unwrap().len(), 1);
    }
}

#[test]
fn order_4_golden() {
    check_against_golden(4);
}

#[test]
fn order_6_golden() {
    check_against_golden(6);
}

#[test]
fn labelled_braces_reduce_to_the_classes() {
    for n in [4, 6] {
        let limits = limits_for_order(n);
        let reps = enumerate_braces(n, true, &limits).unwrap();
        let keys: Vec<BraceKey> = reps.iter().map(BraceKey::from).collect();
        let all = enumerate_braces(n, false, &limits).unwrap();
        for rep in &reps {
            assert!(all.contains(rep));
            assert_eq!(canonical_key(rep.digroup()), BraceKey::from(rep));
        }
        for b in &all {
            assert!(check_brace_axiom(b.digroup()).holds());
            assert!(build_r(b).is_solution());
            let key = canonical_key(b.digroup());
            assert_eq!(keys.iter().filter(|k| **k == key).count(), 1);
        }
    }
}

#[test]
#[ignore = "order 8 takes about ten seconds; run with --ignored"]
fn order_8_classes() {
    let start = Instant::now();
    let limits = limits_for_order(8);
    let by_tables = enumerate_by_tables(8, &limits).unwrap();
    assert_eq!(by_tables, enumerate_by_lambda(8, &limits).unwrap());
    assert_eq!(by_tables.len(), 47);
    assert!(start.elapsed() < Duration::from_secs(600));
}
