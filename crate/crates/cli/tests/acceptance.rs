//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! All comparisons are exact (set and table equality). Runtime budgets are
//! the only tolerances: criterion 1 under 10 s, criterion 2 under 30 s at
//! order at most 6, order-8 enumeration under 600 s. Order 8 joins the
//! corpus and criterion 8 only when `SKB_ORDER_CAP` is at least 8.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use skb_core::brace::{
    check_brace_axiom, lambda_inverse_identity_check, lambda_is_action, trivial_brace, SkewBrace,
};
use skb_core::commutator::{
    centralizer, centralizer_by_joins, huq_commutator, huq_commute, oracle_huq_commutator,
};
use skb_core::congruence::{
    all_congruences, congruence_of_ideal, ideal_of_congruence, quotient_brace,
};
use skb_core::corpus::{constructed, corpus, CorpusEntry};
use skb_core::enumerate::{
    enumerate_braces, enumerate_by_lambda, enumerate_by_tables, limits_for_order, BraceKey,
};
use skb_core::format::{parse_brace_file, serialize_brace};
use skb_core::ideal::all_ideals;
use skb_core::smith::{composable_triples, search_smith_connector, smith_connector_exists};
use skb_core::theta::{counterexample_report, ThetaTwistSpec};
use skb_core::ybe::{build_r, solution_map, YbeMap, YbeSolutionReport};
use skb_core::{FiniteGroup, Limits, Subset};

const AXIOM_BUDGET: Duration = Duration::from_secs(10);
const YBE_BUDGET: Duration = Duration::from_secs(30);
const ORDER_8_BUDGET: Duration = Duration::from_secs(600);

struct Outcome {
    pass: bool,
    skipped: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        skipped: false,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        skipped: false,
        detail: detail.into(),
    }
}

fn skip(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        skipped: true,
        detail: detail.into(),
    }
}

fn report(id: &str, title: &str, outcome: &Outcome) {
    let status = match (outcome.skipped, outcome.pass) {
        (true, _) => "SKIPPED",
        (false, true) => "PASS",
        (false, false) => "FAIL",
    };
    println!("criterion {id} ({title}): {status}  [{}]", outcome.detail);
}

fn secs(d: Duration) -> String {
    format!("{:.2} s", d.as_secs_f64())
}

fn axiom_suite(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    let mut braces: Vec<(String, SkewBrace)> = constructed()
        .unwrap()
        .into_iter()
        .map(|e| (e.name, e.brace))
        .collect();
    for n in 1..=6 {
        for (k, b) in enumerate_braces(n, false, &limits_for_order(n))
            .unwrap()
            .into_iter()
            .enumerate()
        {
            braces.push((format!("labelled(n={n},k={k})"), b));
        }
    }
    for e in corpus {
        for i in all_ideals(&e.brace).unwrap() {
            braces.push((
                format!("{}/{}", e.name, i.to_csv()),
                quotient_brace(&e.brace, &i).unwrap().brace,
            ));
        }
    }
    for (name, b) in &braces {
        if let Some(w) = check_brace_axiom(b.digroup()).witness {
            return fail(format!("{name}: identity fails at {w:?}"));
        }
        if !lambda_is_action(b.digroup()) || !lambda_inverse_identity_check(b) {
            return fail(format!("{name}: λ invariants fail"));
        }
    }
    let elapsed = start.elapsed();
    let detail = format!(
        "{} braces, {} (budget {})",
        braces.len(),
        secs(elapsed),
        secs(AXIOM_BUDGET)
    );
    if elapsed < AXIOM_BUDGET {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// Swaps two table entries with different first components.
fn corrupt(map: &YbeMap) -> YbeMap {
    let mut bad = map.clone();
    let t = bad.table_mut();
    let j = (1..t.len())
        .find(|&j| t[j].0 != t[0].0)
        .expect("order at least 2");
    t.swap(0, j);
    bad
}

fn ybe_suite(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    let mut small_elapsed = Duration::ZERO;
    for e in corpus {
        let r = build_r(&e.brace);
        if !r.is_solution() {
            return fail(format!(
                "{}: bijective {}, braid {:?}, nondegenerate {:?}",
                e.name, r.is_bijection, r.braid.witness, r.nondegenerate.witness
            ));
        }
        if e.brace.order() <= 6 {
            small_elapsed = start.elapsed();
        }
    }
    let mut controls = 0;
    for e in corpus.iter().filter(|e| e.brace.order() >= 2) {
        let bad = YbeSolutionReport::for_map(corrupt(&solution_map(&e.brace)));
        if bad.braid.witness.is_none() && bad.nondegenerate.witness.is_none() {
            return fail(format!("{}: corrupted table still passes", e.name));
        }
        controls += 1;
    }
    let constant = YbeSolutionReport::for_map(YbeMap::from_table(3, vec![(1, 2); 9]).unwrap());
    if constant.nondegenerate.witness.is_none() || constant.is_bijection {
        return fail("constant control passes");
    }
    let detail = format!(
        "{} solutions, {controls} corrupted controls rejected with witnesses, {} for n <= 6 (budget {})",
        corpus.len(),
        secs(small_elapsed),
        secs(YBE_BUDGET)
    );
    if small_elapsed < YBE_BUDGET {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn ideal_congruence_bijection(corpus: &[CorpusEntry]) -> Outcome {
    let mut count = 0;
    for e in corpus {
        let b = &e.brace;
        let ideals = all_ideals(b).unwrap();
        let congruences = all_congruences(b.digroup(), b.limits()).unwrap();
        let mut from_ideals: Vec<_> = ideals
            .iter()
            .map(|i| congruence_of_ideal(b, i).unwrap())
            .collect();
        from_ideals.sort();
        let mut sorted = congruences.clone();
        sorted.sort();
        if from_ideals != sorted {
            return fail(format!(
                "{}: congruence lattice differs from ideal lattice",
                e.name
            ));
        }
        for i in &ideals {
            if &ideal_of_congruence(&congruence_of_ideal(b, i).unwrap()) != i {
                return fail(format!("{}: round trip fails at {i:?}", e.name));
            }
            for a in 0..b.order() {
                if &Subset::new(b.order(), i.iter().map(|u| b.lambda(a, u))).unwrap() != i {
                    return fail(format!("{}: λ_{a}(I) != I for {i:?}", e.name));
                }
            }
            count += 1;
        }
    }
    pass(format!("{count} ideals over {} braces", corpus.len()))
}

fn commutator_oracle(corpus: &[CorpusEntry]) -> Outcome {
    let mut pairs = 0;
    for e in corpus {
        let b = &e.brace;
        let ideals = all_ideals(b).unwrap();
        for i in &ideals {
            for j in &ideals {
                let generated = huq_commutator(b, i, j).unwrap().commutator;
                let oracle = oracle_huq_commutator(b, i, j).unwrap();
                if generated != oracle {
                    return fail(format!(
                        "{}: [{i:?},{j:?}] = {generated:?}, oracle {oracle:?}",
                        e.name
                    ));
                }
                pairs += 1;
            }
        }
    }
    pass(format!("{pairs} ideal pairs, exact equality"))
}

fn huq_equals_smith(corpus: &[CorpusEntry]) -> Outcome {
    let mut pairs = 0;
    for e in corpus {
        let b = &e.brace;
        let congruences = all_congruences(b.digroup(), b.limits()).unwrap();
        for r in &congruences {
            for s in &congruences {
                let closed = smith_connector_exists(b, r, s).unwrap().holds();
                let searched = search_smith_connector(b.digroup(), r, s).unwrap().is_some();
                let huq = huq_commute(
                    b.digroup(),
                    &ideal_of_congruence(r),
                    &ideal_of_congruence(s),
                )
                .unwrap();
                if closed != searched || closed != huq {
                    return fail(format!(
                        "{}: R {:?}, S {:?}: closed form {closed}, search {searched}, huq {huq}",
                        e.name,
                        r.zero_class(),
                        s.zero_class()
                    ));
                }
                pairs += 1;
            }
        }
    }
    pass(format!("{pairs} congruence pairs, 0 exceptions"))
}

/// Whether `x - y + z` is a connector for the kernel relation, checked
/// directly on the tables.
fn affine_connector_exists(report: &skb_core::theta::CounterexampleReport) -> bool {
    let d = &report.digroup;
    let triples = composable_triples(&report.relation, &report.relation);
    let p = |t: &[usize; 3]| d.star().op(d.star().op(t[0], d.star().inv(t[1])), t[2]);
    [d.star(), d.circ()].iter().all(|g| {
        triples.iter().all(|a| {
            triples.iter().all(|b| {
                let prod = [g.op(a[0], b[0]), g.op(a[1], b[1]), g.op(a[2], b[2])];
                p(&prod) == g.op(p(a), p(b))
            })
        })
    })
}

fn twisted_counterexample(base: usize, a: usize) -> Outcome {
    let spec = ThetaTwistSpec::cyclic(base, a).unwrap();
    let report = counterexample_report(&spec).unwrap();
    let witnesses = report.witnesses().count();
    let detail = format!(
        "huq {}, connector {}, {witnesses} of {} family triples realise x+a+x'' != x-a+x''",
        report.huq_commutes,
        if report.connector_exists() {
            "present"
        } else {
            "absent"
        },
        report.family.len()
    );
    if report.confirms_counterexample() {
        pass(detail)
    } else {
        let affine = if affine_connector_exists(&report) {
            "; x-y+z is a connector on the tables"
        } else {
            ""
        };
        fail(format!("{detail}{affine}"))
    }
}

fn centralizer_maximality(corpus: &[CorpusEntry]) -> Outcome {
    let mut count = 0;
    for e in corpus {
        let b = &e.brace;
        let ideals = all_ideals(b).unwrap();
        for i in &ideals {
            let c = centralizer(b, i).unwrap();
            if c != centralizer_by_joins(b, i).unwrap() {
                return fail(format!("{}: paths disagree for {i:?}", e.name));
            }
            if !huq_commute(b.digroup(), &c, i).unwrap() {
                return fail(format!("{}: centralizer of {i:?} does not commute", e.name));
            }
            for j in &ideals {
                if huq_commute(b.digroup(), j, i).unwrap() && !j.is_subset_of(&c) {
                    return fail(format!(
                        "{}: {j:?} commutes with {i:?} but escapes {c:?}",
                        e.name
                    ));
                }
            }
            count += 1;
        }
    }
    pass(format!("{count} ideals"))
}

fn golden(n: usize) -> String {
    std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("../core/tests/golden/braces_n{n}.skb")),
    )
    .unwrap()
}

fn render(keys: &[BraceKey], limits: &Limits) -> String {
    keys.iter()
        .enumerate()
        .map(|(k, key)| {
            format!(
                "# k={}\n{}",
                k + 1,
                serialize_brace(key.to_brace(limits).unwrap().digroup())
            )
        })
        .collect()
}

fn enumeration(limits: &Limits) -> Vec<(String, Outcome)> {
    let mut out = Vec::new();
    let counts: Vec<usize> = (1..=3)
        .map(|n| {
            enumerate_braces(n, true, &limits_for_order(n))
                .unwrap()
                .len()
        })
        .collect();
    let forced = if counts == [1, 1, 1] { pass } else { fail };
    out.push(("8a".into(), forced(format!("orders 1..3: {counts:?}"))));
    for n in [4, 6] {
        let l = limits_for_order(n);
        let tables = enumerate_by_tables(n, &l).unwrap();
        let lambda = enumerate_by_lambda(n, &l).unwrap();
        let frozen = render(&tables, &l) == golden(n);
        let detail = format!(
            "order {n}: {} classes by tables, {} by λ-maps, golden {}",
            tables.len(),
            lambda.len(),
            if frozen { "matches" } else { "differs" }
        );
        out.push((
            format!("8{}", if n == 4 { "b" } else { "c" }),
            if tables == lambda && frozen {
                pass(detail)
            } else {
                fail(detail)
            },
        ));
    }
    if limits.enumerate_order >= 8 {
        let start = Instant::now();
        let l = limits_for_order(8);
        let tables = enumerate_by_tables(8, &l).unwrap();
        let lambda = enumerate_by_lambda(8, &l).unwrap();
        let elapsed = start.elapsed();
        let detail = format!(
            "order 8: {} classes by tables, {} by λ-maps, {} (budget {})",
            tables.len(),
            lambda.len(),
            secs(elapsed),
            secs(ORDER_8_BUDGET)
        );
        out.push((
            "8d".into(),
            if tables == lambda && elapsed < ORDER_8_BUDGET {
                pass(detail)
            } else {
                fail(detail)
            },
        ));
    } else {
        out.push(("8d".into(), skip("order 8 is opt-in: set SKB_ORDER_CAP=8")));
    }
    out
}

fn skb(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_skb"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn cli_suite(corpus: &[CorpusEntry]) -> Vec<(String, Outcome)> {
    let dir = tempfile::TempDir::new().unwrap();
    let s3 = dir.path().join("s3.skb");
    std::fs::write(
        &s3,
        serialize_brace(trivial_brace(&FiniteGroup::symmetric(3)).unwrap().digroup()),
    )
    .unwrap();
    let s3 = s3.to_str().unwrap();
    let full = "0,1,2,3,4,5";
    let expect = |got: (i32, String), code: i32, text: &str| {
        let detail = format!("exit {}, {:?}", got.0, got.1);
        if got.0 == code && got.1 == text {
            pass(detail)
        } else {
            fail(detail)
        }
    };
    let mut out = vec![
        (
            "9a".to_string(),
            expect(skb(&["verify", s3]), 0, "brace: OK\n"),
        ),
        (
            "9b".to_string(),
            expect(
                skb(&["commutator", s3, "--ideal-a", full, "--ideal-b", full]),
                0,
                "set1: 0,3,4\nset2: 0,3,4\nset3: 0\ncommutator: 0,3,4\n",
            ),
        ),
    ];
    let (code, text) = skb(&["counterexample", "--base", "3", "--a", "1"]);
    let documented =
        code == 0 && text.starts_with("Huq: commute = true; Smith connector: absent; witness: ");
    let detail = format!("exit {code}, {text:?}");
    out.push((
        "9c".into(),
        if documented {
            pass(detail)
        } else {
            fail(detail)
        },
    ));
    let limits = Limits::default().with_override(8);
    let round_trip = corpus.iter().find(|e| {
        parse_brace_file(&serialize_brace(e.brace.digroup()), &limits).as_ref()
            != Ok(e.brace.digroup())
    });
    out.push((
        "9d".into(),
        match round_trip {
            None => pass(format!(
                "parse/serialize identity on {} braces",
                corpus.len()
            )),
            Some(e) => fail(format!("round trip fails on {}", e.name)),
        },
    ));
    out
}

fn main() -> ExitCode {
    let limits = Limits::from_env();
    let corpus = corpus(&limits).expect("corpus builds");
    let max_order = corpus.iter().map(|e| e.brace.order()).max().unwrap_or(0);
    println!(
        "acceptance corpus: {} braces, orders up to {max_order}",
        corpus.len()
    );

    let mut results: Vec<(String, &str, Outcome)> = vec![
        ("1".into(), "axiom suite", axiom_suite(&corpus)),
        ("2".into(), "YBE suite", ybe_suite(&corpus)),
        (
            "3".into(),
            "ideal/congruence bijection",
            ideal_congruence_bijection(&corpus),
        ),
        (
            "4".into(),
            "commutator oracle equivalence",
            commutator_oracle(&corpus),
        ),
        (
            "5".into(),
            "Huq=Smith on skew braces",
            huq_equals_smith(&corpus),
        ),
    ];
    for (base, a) in [(3, 1), (4, 1), (5, 1), (5, 2)] {
        results.push((
            format!("6 Z/{base} a={a}"),
            "Huq!=Smith on digroups",
            twisted_counterexample(base, a),
        ));
    }
    results.push((
        "7".into(),
        "centralizer maximality",
        centralizer_maximality(&corpus),
    ));
    for (id, o) in enumeration(&limits) {
        results.push((id, "enumeration self-consistency", o));
    }
    for (id, o) in cli_suite(&corpus) {
        results.push((id, "CLI golden suite", o));
    }
    for (id, title, outcome) in &results {
        report(id, title, outcome);
    }
    let failed = results.iter().filter(|r| !r.2.pass).count();
    let skipped = results.iter().filter(|r| r.2.skipped).count();
    println!(
        "acceptance: {} passed, {failed} failed, {skipped} skipped",
        results.len() - failed - skipped
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
