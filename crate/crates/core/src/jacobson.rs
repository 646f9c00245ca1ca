//! Braces from radical rings: `(J, +, o)` with `x o y = xy + x + y`.

use crate::brace::{Digroup, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{flatten_rows, FiniteGroup};
use crate::limits::Limits;
use crate::subset::Subset;

/// Addition and multiplication tables.
pub type RingTables = (Vec<Vec<usize>>, Vec<Vec<usize>>);

/// Addition and multiplication tables of `Z/n`.
pub fn zn_ring(n: usize) -> RingTables {
    let add = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let mul = (0..n)
        .map(|a| (0..n).map(|b| (a * b) % n).collect())
        .collect();
    (add, mul)
}

/// Restricts ring tables to a subset closed under both operations,
/// relabelling its members `0..k` in increasing order.
pub fn restrict_ring(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    subset: &Subset,
) -> Result<RingTables> {
    let members = subset.members();
    let index = |v: usize| {
        members
            .binary_search(&v)
            .map_err(|_| Error::NotARing("subset not closed".into()))
    };
    let restrict = |table: &[Vec<usize>]| -> Result<Vec<Vec<usize>>> {
        members
            .iter()
            .map(|&a| members.iter().map(|&b| index(table[a][b])).collect())
            .collect()
    };
    Ok((restrict(add)?, restrict(mul)?))
}

/// Builds `(J, +, o)` from the tables of a radical ring.
///
/// `ring_add` must be an abelian group with unit `0`; `ring_mul` must be
/// associative and distribute over addition on both sides. Every element
/// must have an inverse for `o`.
pub fn jacobson_brace(ring_add: &[Vec<usize>], ring_mul: &[Vec<usize>]) -> Result<SkewBrace> {
    jacobson_brace_with_limits(ring_add, ring_mul, Limits::default())
}

pub fn jacobson_brace_with_limits(
    ring_add: &[Vec<usize>],
    ring_mul: &[Vec<usize>],
    limits: Limits,
) -> Result<SkewBrace> {
    let (n, add_flat) = flatten_rows(ring_add)?;
    let (m, mul) = flatten_rows(ring_mul)?;
    if m != n {
        return Err(Error::NotARing(format!(
            "addition has order {n}, multiplication {m}"
        )));
    }
    if (0..n).any(|x| add_flat[x] != x || add_flat[x * n] != x) {
        return Err(Error::NotARing("0 is not the additive unit".into()));
    }
    let add = FiniteGroup::from_flat(n, add_flat, &limits)
        .map_err(|e| Error::NotARing(format!("addition is not a group: {e}")))?;
    if !add.is_abelian() {
        return Err(Error::NotARing("addition is not commutative".into()));
    }
    let times = |x: usize, y: usize| mul[x * n + y];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if times(times(x, y), z) != times(x, times(y, z)) {
                    return Err(Error::NotARing(format!(
                        "multiplication not associative at {x}, {y}, {z}"
                    )));
                }
                if times(x, add.op(y, z)) != add.op(times(x, y), times(x, z))
                    || times(add.op(x, y), z) != add.op(times(x, z), times(y, z))
                {
                    return Err(Error::NotARing(format!(
                        "not distributive at {x}, {y}, {z}"
                    )));
                }
            }
        }
    }
    let circ_table: Vec<usize> = (0..n * n)
        .map(|i| add.op(add.op(times(i / n, i % n), i / n), i % n))
        .collect();
    for x in 0..n {
        if !(0..n).any(|y| circ_table[x * n + y] == 0) {
            return Err(Error::NotRadical(x));
        }
    }
    let circ = FiniteGroup::from_flat(n, circ_table, &limits)?;
    SkewBrace::with_limits(Digroup::new(add, circ)?, limits)
}
