//! A fixed collection of small braces used by sweeps and the acceptance
//! suite: trivial and opposite braces of small groups, braces of radical
//! rings, and every brace class up to the enumeration cap.

use crate::brace::{op_brace, trivial_brace, SkewBrace};
use crate::enumerate::enumerate_braces;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::jacobson::{jacobson_brace, restrict_ring, zn_ring};
use crate::subset::Subset;
use crate::Limits;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub brace: SkewBrace,
}

/// Groups of order at most 8 with easy constructions.
pub fn small_groups() -> Vec<(String, FiniteGroup)> {
    let z = FiniteGroup::cyclic;
    let mut out: Vec<(String, FiniteGroup)> = (1..=8).map(|n| (format!("Z{n}"), z(n))).collect();
    out.push(("Z2xZ2".into(), FiniteGroup::direct_product(&z(2), &z(2))));
    out.push(("Z2xZ4".into(), FiniteGroup::direct_product(&z(2), &z(4))));
    out.push((
        "Z2xZ2xZ2".into(),
        FiniteGroup::direct_product(&z(2), &FiniteGroup::direct_product(&z(2), &z(2))),
    ));
    out.push(("S3".into(), FiniteGroup::symmetric(3)));
    out.push(("D4".into(), FiniteGroup::dihedral(4)));
    out
}

fn radical(n: usize, members: &[usize]) -> Result<SkewBrace> {
    let (add, mul) = zn_ring(n);
    let (a, m) = restrict_ring(&add, &mul, &Subset::new(n, members.iter().copied())?)?;
    jacobson_brace(&a, &m)
}

/// Strictly upper triangular 3×3 matrices over F2, `(a, b, c)` at index
/// `4a + 2b + c`; the product is `(0, a c', 0)`.
fn upper_triangular_f2() -> Result<SkewBrace> {
    let bits = |v: usize| (v >> 2 & 1, v >> 1 & 1, v & 1);
    let add: Vec<Vec<usize>> = (0..8).map(|x| (0..8).map(|y| x ^ y).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let ((a, _, _), (_, _, c2)) = (bits(x), bits(y));
                    2 * (a & c2)
                })
                .collect()
        })
        .collect();
    jacobson_brace(&add, &mul)
}

/// `x F2[x] / (x^3)`: elements `b x + c x^2` at index `2b + c`.
fn truncated_polynomials_f2() -> Result<SkewBrace> {
    let add: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..4)
        .map(|x| (0..4).map(|y| (x >> 1) & (y >> 1)).collect())
        .collect();
    jacobson_brace(&add, &mul)
}

/// Constructed braces, without enumeration.
pub fn constructed() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        out.push(CorpusEntry {
            name: format!("trivial({name})"),
            brace: trivial_brace(&g)?,
        });
        if !g.is_abelian() {
            out.push(CorpusEntry {
                name: format!("op({name})"),
                brace: op_brace(&g)?,
            });
        }
    }
    let rings: [(&str, Result<SkewBrace>); 6] = [
        ("J(Z4)", radical(4, &[0, 2])),
        ("J(Z8)", radical(8, &[0, 2, 4, 6])),
        ("J(Z9)", radical(9, &[0, 3, 6])),
        ("J(Z16)", radical(16, &[0, 2, 4, 6, 8, 10, 12, 14])),
        ("J(F2[x]/x^3)", truncated_polynomials_f2()),
        ("J(UT3(F2))", upper_triangular_f2()),
    ];
    for (name, b) in rings {
        out.push(CorpusEntry {
            name: name.into(),
            brace: b?,
        });
    }
    Ok(out)
}

/// Constructed braces followed by every enumerated class of order at most
/// `limits.enumerate_order` (and at most 8).
pub fn corpus(limits: &Limits) -> Result<Vec<CorpusEntry>> {
    let mut out = constructed()?;
    for n in 1..=limits.enumerate_order.min(8) {
        for (k, brace) in enumerate_braces(n, true, limits)?.into_iter().enumerate() {
            out.push(CorpusEntry {
                name: format!("enum(n={n},k={})", k + 1),
                brace,
            });
        }
    }
    Ok(out)
}
