//! Huq commutation and commutators of ideals, the product `I·J`,
//! centralizers and the center.

use crate::brace::{Digroup, SkewBrace};
use crate::congruence::{quotient_brace, Quotient};
use crate::error::{Error, Op, Result};
use crate::ideal::{all_ideals, generated_ideal, join_of_ideals, principal_ideal, require_ideal};
use crate::subset::Subset;

fn require_sub_digroup(d: &Digroup, s: &Subset) -> Result<()> {
    s.check_order(d.order())?;
    if !d.star().is_subgroup(s) || !d.circ().is_subgroup(s) {
        return Err(Error::NotASubBrace);
    }
    Ok(())
}

/// Whether two sub-digroups cooperate (`[U, V] = 0`).
///
/// Decided elementwise by `u o v = u * v = v * u = v o u`, and cross-checked
/// against the equivalent form `λ_u(v) = v` plus commutation in both groups.
pub fn huq_commute(d: &Digroup, u: &Subset, v: &Subset) -> Result<bool> {
    require_sub_digroup(d, u)?;
    require_sub_digroup(d, v)?;
    let (st, ci) = (d.star(), d.circ());
    let pairs = || u.iter().flat_map(|x| v.iter().map(move |y| (x, y)));
    let collapsed = pairs().all(|(x, y)| {
        let s = st.op(x, y);
        ci.op(x, y) == s && st.op(y, x) == s && ci.op(y, x) == s
    });
    let via_lambda = pairs().all(|(x, y)| {
        d.lambda(x, y) == y && st.op(x, y) == st.op(y, x) && ci.op(x, y) == ci.op(y, x)
    });
    if collapsed != via_lambda {
        return Err(Error::InvariantViolation(format!(
            "cooperation tests disagree on {u:?}, {v:?}: {collapsed} vs {via_lambda}"
        )));
    }
    Ok(collapsed)
}

/// The three generating sets of the Huq commutator of two ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorGenerators {
    /// `i o j o (j o i)⁻o`
    pub circ_commutators: Subset,
    /// `i * j * (j * i)⁻*`
    pub star_commutators: Subset,
    /// `(i o j) * (i * j)⁻*`
    pub mixed: Subset,
}

impl CommutatorGenerators {
    pub fn union(&self) -> Subset {
        self.circ_commutators
            .union(&self.star_commutators)
            .union(&self.mixed)
    }
}

pub fn commutator_generators(
    b: &SkewBrace,
    i: &Subset,
    j: &Subset,
) -> Result<CommutatorGenerators> {
    require_ideal(b, i)?;
    require_ideal(b, j)?;
    let (st, ci) = (b.star(), b.circ());
    let n = b.order();
    let collect = |f: &dyn Fn(usize, usize) -> usize| {
        Subset::new(
            n,
            i.iter()
                .flat_map(|x| j.iter().map(move |y| (x, y)))
                .map(|(x, y)| f(x, y)),
        )
        .expect("in range")
    };
    Ok(CommutatorGenerators {
        circ_commutators: collect(&|x, y| ci.op(ci.op(x, y), ci.inv(ci.op(y, x)))),
        star_commutators: collect(&|x, y| st.op(st.op(x, y), st.inv(st.op(y, x)))),
        mixed: collect(&|x, y| st.op(ci.op(x, y), st.inv(st.op(x, y)))),
    })
}

/// Whether `μ(i, j) = π(i * j)` is a brace morphism `I × J → A/K`.
pub fn mu_is_morphism(b: &SkewBrace, i: &Subset, j: &Subset, quotient: &Quotient) -> bool {
    let (st, ci) = (b.star(), b.circ());
    let (qs, qc) = (quotient.brace.star(), quotient.brace.circ());
    let pi = &quotient.projection;
    let mu = |x: usize, y: usize| pi[st.op(x, y)];
    for x in i.iter() {
        for y in j.iter() {
            let m = mu(x, y);
            for x2 in i.iter() {
                for y2 in j.iter() {
                    let m2 = mu(x2, y2);
                    if mu(st.op(x, x2), st.op(y, y2)) != qs.op(m, m2) {
                        return false;
                    }
                    if mu(ci.op(x, x2), ci.op(y, y2)) != qc.op(m, m2) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorReport {
    pub generators: CommutatorGenerators,
    /// `[I, J]`, the ideal generated by the three sets.
    pub commutator: Subset,
    /// Minimal ideal making `μ` a morphism, when the oracle was run.
    pub oracle_commutator: Option<Subset>,
    /// `A → A/[I, J]`.
    pub quotient: Quotient,
}

/// `[I, J]` from generators, with the quotient and the morphism `μ` checked.
pub fn huq_commutator(b: &SkewBrace, i: &Subset, j: &Subset) -> Result<CommutatorReport> {
    let generators = commutator_generators(b, i, j)?;
    let commutator = generated_ideal(b, &generators.union());
    let quotient = quotient_brace(b, &commutator)?;
    if !mu_is_morphism(b, i, j, &quotient) {
        return Err(Error::InvariantViolation(format!(
            "μ is not a morphism onto A/{commutator:?} for I = {i:?}, J = {j:?}"
        )));
    }
    Ok(CommutatorReport {
        generators,
        commutator,
        oracle_commutator: None,
        quotient,
    })
}

/// [`huq_commutator`] with the oracle filled in and required to agree.
pub fn huq_commutator_checked(b: &SkewBrace, i: &Subset, j: &Subset) -> Result<CommutatorReport> {
    let mut report = huq_commutator(b, i, j)?;
    let oracle = oracle_huq_commutator(b, i, j)?;
    if oracle != report.commutator {
        return Err(Error::InvariantViolation(format!(
            "commutator {:?} differs from oracle {oracle:?}",
            report.commutator
        )));
    }
    report.oracle_commutator = Some(oracle);
    Ok(report)
}

/// The smallest ideal `K` such that `μ: I × J → A/K` is a brace morphism,
/// found by scanning the ideal lattice.
pub fn oracle_huq_commutator(b: &SkewBrace, i: &Subset, j: &Subset) -> Result<Subset> {
    require_ideal(b, i)?;
    require_ideal(b, j)?;
    let mut valid = Vec::new();
    for k in all_ideals(b)? {
        let quotient = quotient_brace(b, &k)?;
        if mu_is_morphism(b, i, j, &quotient) {
            valid.push(k);
        }
    }
    let smallest = valid.first().cloned().ok_or_else(|| {
        Error::InvariantViolation("μ is not a morphism even onto the one-element quotient".into())
    })?;
    let meet = valid
        .iter()
        .fold(Subset::full(b.order()), |acc, k| acc.intersection(k));
    if meet != smallest {
        return Err(Error::InvariantViolation(format!(
            "no least ideal making μ a morphism: smallest {smallest:?}, meet {meet:?}"
        )));
    }
    Ok(smallest)
}

/// The ideal generated by `I·J = {i·j}`, where `x·y = y⁻* * λ_x(y)`.
///
/// Checked against the ideal generated by the mixed generator set.
pub fn star_product(b: &SkewBrace, i: &Subset, j: &Subset) -> Result<Subset> {
    let generators = commutator_generators(b, i, j)?;
    let st = b.star();
    let products = Subset::new(
        b.order(),
        i.iter()
            .flat_map(|x| j.iter().map(move |y| st.op(st.inv(y), b.lambda(x, y)))),
    )
    .expect("in range");
    let ideal = generated_ideal(b, &products);
    let from_mixed = generated_ideal(b, &generators.mixed);
    if ideal != from_mixed {
        return Err(Error::InvariantViolation(format!(
            "<I·J> = {ideal:?} but the mixed generators give {from_mixed:?}"
        )));
    }
    Ok(ideal)
}

/// The raw product set `{i·j : i ∈ I, j ∈ J}` (not closed).
pub fn product_set(b: &SkewBrace, i: &Subset, j: &Subset) -> Subset {
    let st = b.star();
    Subset::new(
        b.order(),
        i.iter()
            .flat_map(|x| j.iter().map(move |y| st.op(st.inv(y), b.lambda(x, y)))),
    )
    .expect("in range")
}

/// Elements that commute with `I` in both groups and act trivially on `I`.
pub fn centralizing_elements(b: &SkewBrace, i: &Subset) -> Subset {
    let star = b.star().centralizer(i);
    let circ = b.circ().centralizer(i);
    let kernel = Subset::new(
        b.order(),
        (0..b.order()).filter(|&a| i.iter().all(|x| b.lambda(a, x) == x)),
    )
    .expect("in range");
    star.intersection(&circ).intersection(&kernel)
}

/// The largest ideal that Huq-commutes with `I`.
///
/// Computed as the largest ideal inside [`centralizing_elements`]: the ideal
/// generated by every element whose principal ideal stays inside that set.
pub fn centralizer(b: &SkewBrace, i: &Subset) -> Result<Subset> {
    require_ideal(b, i)?;
    let constraint = centralizing_elements(b, i);
    let seeds = Subset::new(
        b.order(),
        constraint
            .iter()
            .filter(|&x| principal_ideal(b, x).is_subset_of(&constraint)),
    )
    .expect("in range");
    let result = generated_ideal(b, &seeds);
    if !result.is_subset_of(&constraint) {
        return Err(Error::InvariantViolation(format!(
            "centralizer {result:?} leaves {constraint:?}"
        )));
    }
    if !huq_commute(b.digroup(), &result, i)? {
        return Err(Error::InvariantViolation(format!(
            "centralizer {result:?} does not commute with {i:?}"
        )));
    }
    for k in all_ideals(b)? {
        if k.is_subset_of(&constraint) && !k.is_subset_of(&result) {
            return Err(Error::InvariantViolation(format!(
                "ideal {k:?} centralizes {i:?} but is not in {result:?}"
            )));
        }
    }
    Ok(result)
}

/// Centralizer by joining, one at a time, every ideal that commutes with `I`.
pub fn centralizer_by_joins(b: &SkewBrace, i: &Subset) -> Result<Subset> {
    require_ideal(b, i)?;
    let mut acc = Subset::zero(b.order());
    for k in all_ideals(b)? {
        if huq_commute(b.digroup(), &k, i)? {
            acc = join_of_ideals(b, &acc, &k)?;
            if !huq_commute(b.digroup(), &acc, i)? {
                return Err(Error::InvariantViolation(format!(
                    "join {acc:?} stopped centralizing {i:?}"
                )));
            }
        }
    }
    Ok(acc)
}

/// Centralizer of the improper ideal.
pub fn center(b: &SkewBrace) -> Result<Subset> {
    centralizer(b, &Subset::full(b.order()))
}

/// Convenience: group-level commutator in one of the two operations.
pub fn group_commutator(b: &SkewBrace, op: Op, i: &Subset, j: &Subset) -> Result<Subset> {
    b.digroup()
        .group(op)
        .commutator_subgroup(i, j)
        .map_err(|e| match e {
            Error::NotNormal { .. } => Error::NotNormal { op },
            Error::NotASubgroup { .. } => Error::NotASubgroup { op },
            other => other,
        })
}
