//! Ideals of skew braces: detection, generation and the ideal lattice.

use std::collections::{BTreeSet, VecDeque};

use crate::brace::{Digroup, SkewBrace};
use crate::error::{Error, Op, Result};
use crate::subset::Subset;
use crate::verdict::Verdict;

/// Which ideal conditions a subset satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdealFlags {
    pub normal_in_star: bool,
    pub normal_in_circ: bool,
    /// `λ_a(S) ⊆ S` for every `a`.
    pub lambda_stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubset {
    pub subset: Subset,
    pub flags: IdealFlags,
}

impl IdealSubset {
    pub fn is_ideal(&self) -> bool {
        self.flags.normal_in_star && self.flags.normal_in_circ && self.flags.lambda_stable
    }
}

fn normal_in(d: &Digroup, op: Op, s: &Subset) -> bool {
    d.group(op).is_normal_subgroup(s).unwrap_or(false)
}

/// Ideal conditions for a subset of any digroup (λ taken as `a⁻* * (a o u)`).
pub fn ideal_flags(d: &Digroup, s: &Subset) -> IdealFlags {
    if s.carrier_order() != d.order() {
        return IdealFlags::default();
    }
    IdealFlags {
        normal_in_star: normal_in(d, Op::Star, s),
        normal_in_circ: normal_in(d, Op::Circ, s),
        lambda_stable: (0..d.order()).all(|a| s.iter().all(|u| s.contains(d.lambda(a, u)))),
    }
}

pub fn is_ideal(b: &SkewBrace, s: &Subset) -> IdealSubset {
    IdealSubset {
        subset: s.clone(),
        flags: ideal_flags(b.digroup(), s),
    }
}

pub(crate) fn require_ideal(b: &SkewBrace, s: &Subset) -> Result<()> {
    s.check_order(b.order())?;
    if !is_ideal(b, s).is_ideal() {
        return Err(Error::NotAnIdeal);
    }
    Ok(())
}

/// Why a subset fails to be a normal sub-digroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalityFailure {
    NotNormal(Op),
    /// `x⁻* * y ∈ S` and `x⁻o o y ∈ S` disagree for this pair.
    CosetMismatch {
        x: usize,
        y: usize,
    },
}

/// Normal sub-digroup test: normal in both groups, and for all `x, y`,
/// `x⁻* * y ∈ S` iff `x⁻o o y ∈ S`.
pub fn digroup_normal_check(d: &Digroup, s: &Subset) -> Verdict<NormalityFailure> {
    for op in [Op::Star, Op::Circ] {
        if s.carrier_order() != d.order() || !normal_in(d, op, s) {
            return Verdict::fail(NormalityFailure::NotNormal(op));
        }
    }
    let (st, ci) = (d.star(), d.circ());
    let n = d.order();
    for x in 0..n {
        for y in 0..n {
            if s.contains(st.op(st.inv(x), y)) != s.contains(ci.op(ci.inv(x), y)) {
                return Verdict::fail(NormalityFailure::CosetMismatch { x, y });
            }
        }
    }
    Verdict::pass()
}

/// Smallest ideal containing `gens`.
///
/// Work-queue fixed point of: closure under `*`, `o` and both inverses,
/// conjugation in both groups, and every `λ_a`.
pub fn generated_ideal(b: &SkewBrace, gens: &Subset) -> Subset {
    let n = b.order();
    let (st, ci) = (b.star(), b.circ());
    let mut mask = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();
    let push = |x: usize, mask: &mut Vec<bool>, queue: &mut VecDeque<usize>| {
        if !mask[x] {
            mask[x] = true;
            queue.push_back(x);
        }
    };
    push(0, &mut mask, &mut queue);
    for g in gens.iter() {
        push(g, &mut mask, &mut queue);
    }
    while let Some(x) = queue.pop_front() {
        members.push(x);
        push(st.inv(x), &mut mask, &mut queue);
        push(ci.inv(x), &mut mask, &mut queue);
        for a in 0..n {
            push(st.conjugate(a, x), &mut mask, &mut queue);
            push(ci.conjugate(a, x), &mut mask, &mut queue);
            push(b.lambda(a, x), &mut mask, &mut queue);
        }
        for &y in &members {
            for z in [st.op(x, y), st.op(y, x), ci.op(x, y), ci.op(y, x)] {
                push(z, &mut mask, &mut queue);
            }
        }
    }
    let ideal = Subset::from_mask(&mask);
    assert!(
        is_ideal(b, &ideal).is_ideal(),
        "closure produced a non-ideal {ideal:?}"
    );
    ideal
}

pub fn principal_ideal(b: &SkewBrace, x: usize) -> Subset {
    generated_ideal(b, &Subset::new(b.order(), [x]).expect("element in range"))
}

/// Every ideal, sorted by size then lexicographically.
///
/// Every ideal is the join of the principal ideals of its elements, so the
/// lattice is the closure of the principal ideals under binary joins.
pub fn all_ideals(b: &SkewBrace) -> Result<Vec<Subset>> {
    let n = b.order();
    let cap = b.limits().lattice_order;
    if n > cap {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap,
            what: "ideal lattice",
        });
    }
    let principal: BTreeSet<Subset> = (0..n).map(|x| principal_ideal(b, x)).collect();
    let mut found: BTreeSet<Subset> = principal.clone();
    let mut frontier: Vec<Subset> = principal.iter().cloned().collect();
    while let Some(ideal) = frontier.pop() {
        for p in &principal {
            if p.is_subset_of(&ideal) {
                continue;
            }
            let join = generated_ideal(b, &ideal.union(p));
            if found.insert(join.clone()) {
                frontier.push(join);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Brute-force ideal lattice: every subset containing `0` is tested.
/// Limited to order 16 regardless of configuration.
pub fn all_ideals_by_power_set(b: &SkewBrace) -> Result<Vec<Subset>> {
    const POWER_SET_CAP: usize = 16;
    let n = b.order();
    let cap = POWER_SET_CAP.min(b.limits().lattice_order);
    if n > cap {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap,
            what: "power-set ideal scan",
        });
    }
    let mut out = Vec::new();
    for bits in 0u32..(1 << (n - 1)) {
        let subset = Subset::new(
            n,
            std::iter::once(0).chain((1..n).filter(|i| bits >> (i - 1) & 1 == 1)),
        )
        .expect("in range");
        if b.star().is_subgroup(&subset) && is_ideal(b, &subset).is_ideal() {
            out.push(subset);
        }
    }
    out.sort();
    Ok(out)
}

/// The join `I * J` of two ideals.
///
/// Also computes `I o J` and the ideal generated by `I ∪ J`; all three
/// must agree.
pub fn join_of_ideals(b: &SkewBrace, i: &Subset, j: &Subset) -> Result<Subset> {
    require_ideal(b, i)?;
    require_ideal(b, j)?;
    let n = b.order();
    let product = |op: Op| {
        let g = b.digroup().group(op);
        Subset::new(n, i.iter().flat_map(|x| j.iter().map(move |y| g.op(x, y)))).expect("in range")
    };
    let star = product(Op::Star);
    let circ = product(Op::Circ);
    let generated = generated_ideal(b, &i.union(j));
    if star != circ || star != generated {
        return Err(Error::InvariantViolation(format!(
            "join mismatch: I*J = {star:?}, I o J = {circ:?}, <I ∪ J> = {generated:?}"
        )));
    }
    Ok(star)
}
