//! Digroups, skew braces and the λ-map.
//!
//! A digroup is one carrier with two group tables, `*` ("star") and `o`
//! ("circ"), sharing the unit `0`. A (left) skew brace is a digroup with
//!
//! ```text
//! a o (b * c) = (a o b) * a⁻* * (a o c)      for all a, b, c
//! ```
//!
//! Its λ-map `λ_a(u) = a⁻* * (a o u)` is a homomorphism from `(A, o)` to
//! `Aut(A, *)`, and that property is equivalent to the identity above.

use crate::error::{Error, Op, Result};
use crate::group::{find_unit, flatten_rows, FiniteGroup};
use crate::limits::Limits;
use crate::verdict::Verdict;

/// Two group structures on the carrier `0..n` with common unit `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digroup {
    star: FiniteGroup,
    circ: FiniteGroup,
}

impl Digroup {
    pub fn new(star: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        if star.order() != circ.order() {
            return Err(Error::OrderMismatch {
                star: star.order(),
                circ: circ.order(),
            });
        }
        Ok(Digroup { star, circ })
    }

    /// Builds a digroup from raw tables without relabelling: the unit of each
    /// table must already be `0`.
    pub fn from_rows(star: &[Vec<usize>], circ: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let build = |rows: &[Vec<usize>], op: Op| -> Result<FiniteGroup> {
            let (n, flat) = flatten_rows(rows)?;
            match find_unit(n, &flat) {
                Some(u) if u != 0 => return Err(Error::IdentityNotZero { op, found: u }),
                _ => {}
            }
            FiniteGroup::from_flat(n, flat, limits)
        };
        let star = build(star, Op::Star)?;
        let circ = build(circ, Op::Circ)?;
        Digroup::new(star, circ)
    }

    /// `(G, *, *)`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        Digroup {
            star: g.clone(),
            circ: g.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn star(&self) -> &FiniteGroup {
        &self.star
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    pub fn group(&self, op: Op) -> &FiniteGroup {
        match op {
            Op::Star => &self.star,
            Op::Circ => &self.circ,
        }
    }

    /// `λ_a(u) = a⁻* * (a o u)`, defined for any digroup.
    #[inline]
    pub fn lambda(&self, a: usize, u: usize) -> usize {
        self.star.op(self.star.inv(a), self.circ.op(a, u))
    }

    /// Transports both tables along a bijection fixing `0`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        Digroup {
            star: self.star.relabel(perm),
            circ: self.circ.relabel(perm),
        }
    }
}

/// Exhaustive check of the brace identity; the witness is the
/// lexicographically first failing `(a, b, c)`.
pub fn check_brace_axiom(d: &Digroup) -> Verdict<[usize; 3]> {
    let (s, c) = (d.star(), d.circ());
    let n = d.order();
    for a in 0..n {
        let a_inv = s.inv(a);
        for b in 0..n {
            let ab = c.op(a, b);
            for x in 0..n {
                let lhs = c.op(a, s.op(b, x));
                let rhs = s.op(s.op(ab, a_inv), c.op(a, x));
                if lhs != rhs {
                    return Verdict::fail([a, b, x]);
                }
            }
        }
    }
    Verdict::pass()
}

/// The λ-characterisation of braces, checked on a raw digroup: every `λ_a`
/// is an automorphism of `(A, *)` and `λ_{a o b} = λ_a λ_b`.
pub fn lambda_is_action(d: &Digroup) -> bool {
    let n = d.order();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|u| d.lambda(a, u)).collect())
        .collect();
    rows.iter().all(|row| d.star().is_automorphism(row))
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = d.circ().op(a, b);
                (0..n).all(|u| rows[ab][u] == rows[a][rows[b][u]])
            })
        })
}

/// A validated skew brace with its λ table cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    digroup: Digroup,
    lambda: Vec<usize>,
    limits: Limits,
}

impl SkewBrace {
    pub fn new(d: Digroup) -> Result<Self> {
        Self::with_limits(d, Limits::default())
    }

    pub fn with_limits(d: Digroup, limits: Limits) -> Result<Self> {
        let n = d.order();
        if n > limits.brace_order {
            return Err(Error::OrderCapExceeded {
                order: n,
                cap: limits.brace_order,
                what: "brace validation",
            });
        }
        if let Some(witness) = check_brace_axiom(&d).witness {
            return Err(Error::NotABrace { witness });
        }
        let lambda: Vec<usize> = (0..n * n).map(|i| d.lambda(i / n, i % n)).collect();
        let brace = SkewBrace {
            digroup: d,
            lambda,
            limits,
        };
        brace.verify_lambda_invariants()?;
        Ok(brace)
    }

    fn verify_lambda_invariants(&self) -> Result<()> {
        let n = self.order();
        if self.lambda_row(0).iter().enumerate().any(|(u, &v)| u != v) {
            return Err(Error::InvariantViolation("λ_0 is not the identity".into()));
        }
        for a in 0..n {
            if !self.star().is_automorphism(self.lambda_row(a)) {
                return Err(Error::InvariantViolation(format!(
                    "λ_{a} is not an automorphism of (A,*)"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.circ().op(a, b);
                for u in 0..n {
                    if self.lambda(ab, u) != self.lambda(a, self.lambda(b, u)) {
                        return Err(Error::InvariantViolation(format!(
                            "λ_(a o b) != λ_a λ_b at {a}, {b}, {u}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn digroup(&self) -> &Digroup {
        &self.digroup
    }

    pub fn into_digroup(self) -> Digroup {
        self.digroup
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn order(&self) -> usize {
        self.digroup.order()
    }

    pub fn star(&self) -> &FiniteGroup {
        self.digroup.star()
    }

    pub fn circ(&self) -> &FiniteGroup {
        self.digroup.circ()
    }

    #[inline]
    pub fn lambda(&self, a: usize, u: usize) -> usize {
        self.lambda[a * self.order() + u]
    }

    pub fn lambda_row(&self, a: usize) -> &[usize] {
        let n = self.order();
        &self.lambda[a * n..(a + 1) * n]
    }

    /// True iff `f: self -> other` is a homomorphism for both operations.
    pub fn is_homomorphism_to(&self, other: &SkewBrace, f: &[usize]) -> bool {
        self.star().is_homomorphism_to(other.star(), f)
            && self.circ().is_homomorphism_to(other.circ(), f)
    }

    /// Transports the brace along a bijection fixing `0`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let d = self.digroup.relabel(perm);
        let n = d.order();
        let lambda = (0..n * n).map(|i| d.lambda(i / n, i % n)).collect();
        SkewBrace {
            digroup: d,
            lambda,
            limits: self.limits,
        }
    }
}

/// Validates a digroup as a skew brace.
pub fn make_skew_brace(d: Digroup) -> Result<SkewBrace> {
    SkewBrace::new(d)
}

/// `λ_{a⁻o}(u) = a⁻o o (a * u)` for all `a`, `u`.
pub fn lambda_inverse_identity_check(b: &SkewBrace) -> bool {
    let n = b.order();
    (0..n).all(|a| {
        let a_bar = b.circ().inv(a);
        (0..n).all(|u| b.lambda(a_bar, u) == b.circ().op(a_bar, b.star().op(a, u)))
    })
}

/// The brace `(G, *, *)`.
pub fn trivial_brace(g: &FiniteGroup) -> Result<SkewBrace> {
    SkewBrace::new(Digroup::trivial(g))
}

/// The brace `(G, *, *op)`.
pub fn op_brace(g: &FiniteGroup) -> Result<SkewBrace> {
    SkewBrace::new(Digroup::new(g.clone(), g.opposite())?)
}

/// Abelian objects are exactly the trivial braces on abelian groups.
pub fn is_abelian_object(b: &SkewBrace) -> bool {
    b.star() == b.circ() && b.star().is_abelian()
}
