//! Congruences, their correspondence with ideals, and quotient braces.

use std::collections::BTreeSet;

use crate::brace::{Digroup, SkewBrace};
use crate::error::{Error, Op, Result};
use crate::group::FiniteGroup;
use crate::ideal::require_ideal;
use crate::limits::Limits;
use crate::subset::Subset;

/// A partition of `0..n` compatible with both operations of a digroup.
///
/// Block ids are assigned in order of first appearance, so the class of `0`
/// is always block `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class_of: Vec<usize>,
}

fn normalize(labels: &[usize]) -> Vec<usize> {
    let mut renamed = vec![usize::MAX; labels.iter().copied().max().map_or(0, |m| m + 1)];
    let mut next = 0;
    labels
        .iter()
        .map(|&l| {
            if renamed[l] == usize::MAX {
                renamed[l] = next;
                next += 1;
            }
            renamed[l]
        })
        .collect()
}

impl Congruence {
    /// Validates a labelling of the carrier as a congruence of `d`.
    pub fn new(d: &Digroup, labels: &[usize]) -> Result<Self> {
        let n = d.order();
        if labels.len() != n {
            return Err(Error::CarrierMismatch {
                expected: n,
                found: labels.len(),
            });
        }
        let class_of = normalize(labels);
        // Compatibility with translations on both sides gives full compatibility.
        let mut first = vec![usize::MAX; n];
        for x in 0..n {
            let rep = first[class_of[x]];
            if rep == usize::MAX {
                first[class_of[x]] = x;
                continue;
            }
            for g in [d.star(), d.circ()] {
                for y in 0..n {
                    if class_of[g.op(x, y)] != class_of[g.op(rep, y)]
                        || class_of[g.op(y, x)] != class_of[g.op(y, rep)]
                    {
                        return Err(Error::NotACongruence {
                            witness: [rep, x, y],
                        });
                    }
                }
            }
        }
        Ok(Congruence { class_of })
    }

    /// The discrete partition Δ.
    pub fn discrete(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
        }
    }

    /// The single-block partition ∇.
    pub fn indiscrete(n: usize) -> Self {
        Congruence {
            class_of: vec![0; n],
        }
    }

    pub fn carrier_order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn num_blocks(&self) -> usize {
        self.class_of.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Subset> {
        let n = self.carrier_order();
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for x in 0..n {
            blocks[self.class_of[x]].push(x);
        }
        blocks
            .into_iter()
            .map(|b| Subset::new(n, b).expect("in range"))
            .collect()
    }

    /// The class of `0`.
    pub fn zero_class(&self) -> Subset {
        let n = self.carrier_order();
        Subset::new(n, (0..n).filter(|&x| self.class_of[x] == self.class_of[0])).expect("in range")
    }

    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        let n = self.carrier_order();
        (0..n).all(|x| (0..n).all(|y| !self.related(x, y) || other.related(x, y)))
    }
}

/// The partition into `*`-cosets `x * I` of an ideal.
///
/// Checks that it agrees with the `o`-coset partition and is a congruence.
pub fn congruence_of_ideal(b: &SkewBrace, ideal: &Subset) -> Result<Congruence> {
    require_ideal(b, ideal)?;
    let cosets = |g: &FiniteGroup| -> Vec<usize> {
        (0..b.order())
            .map(|x| {
                ideal
                    .iter()
                    .map(|i| g.op(x, i))
                    .min()
                    .expect("ideal contains 0")
            })
            .collect()
    };
    let star = normalize(&cosets(b.star()));
    let circ = normalize(&cosets(b.circ()));
    if star != circ {
        return Err(Error::InvariantViolation(
            "*-cosets and o-cosets of an ideal differ".into(),
        ));
    }
    Congruence::new(b.digroup(), &star)
}

/// `I_R`, the class of `0`.
pub fn ideal_of_congruence(r: &Congruence) -> Subset {
    r.zero_class()
}

/// A quotient brace together with the projection onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub brace: SkewBrace,
    /// `projection[x]` is the block of `x`.
    pub projection: Vec<usize>,
}

/// `B / I` with the induced tables.
pub fn quotient_brace(b: &SkewBrace, ideal: &Subset) -> Result<Quotient> {
    let congruence = congruence_of_ideal(b, ideal)?;
    quotient_by_congruence(b, &congruence)
}

pub fn quotient_by_congruence(b: &SkewBrace, r: &Congruence) -> Result<Quotient> {
    let r = &Congruence::new(b.digroup(), r.labels())?;
    let k = r.num_blocks();
    let reps: Vec<usize> = r.blocks().iter().map(|blk| blk.members()[0]).collect();
    let induced = |g: &FiniteGroup| -> Vec<Vec<usize>> {
        reps.iter()
            .map(|&x| reps.iter().map(|&y| r.class_of(g.op(x, y))).collect())
            .collect()
    };
    let limits = *b.limits();
    let digroup = Digroup::from_rows(&induced(b.star()), &induced(b.circ()), &limits)?;
    let brace = SkewBrace::with_limits(digroup, limits)?;
    let projection = r.labels().to_vec();
    debug_assert_eq!(k, brace.order());
    if !b.is_homomorphism_to(&brace, &projection) {
        return Err(Error::InvariantViolation(
            "projection is not a homomorphism".into(),
        ));
    }
    Ok(Quotient { brace, projection })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.0[hi] = lo;
        true
    }
}

/// Labels of the smallest equivalence relation on `0..n` containing `pairs`.
pub(crate) fn equivalence_from_pairs(
    n: usize,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Vec<usize> {
    let mut uf = UnionFind((0..n).collect());
    for (x, y) in pairs {
        uf.union(x, y);
    }
    (0..n).map(|x| uf.find(x)).collect()
}

/// Smallest congruence of `d` relating every given pair.
pub fn generate_congruence(
    d: &Digroup,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Congruence {
    let n = d.order();
    let mut uf = UnionFind((0..n).collect());
    for (x, y) in pairs {
        uf.union(x, y);
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            let r = uf.find(x);
            if r == x {
                continue;
            }
            for op in [Op::Star, Op::Circ] {
                let g = d.group(op);
                for y in 0..n {
                    changed |= uf.union(g.op(x, y), g.op(r, y));
                    changed |= uf.union(g.op(y, x), g.op(y, r));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Congruence::new(d, &labels).expect("closure is compatible")
}

/// Every congruence of a digroup, as joins of principal congruences.
/// Sorted by class of `0`, then by labelling.
pub fn all_congruences(d: &Digroup, limits: &Limits) -> Result<Vec<Congruence>> {
    let n = d.order();
    if n > limits.group_order {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap: limits.group_order,
            what: "congruence lattice",
        });
    }
    let mut principal: BTreeSet<Congruence> = BTreeSet::new();
    principal.insert(Congruence::discrete(n));
    for x in 0..n {
        for y in x + 1..n {
            principal.insert(generate_congruence(d, [(x, y)]));
        }
    }
    let pairs_of = |c: &Congruence| -> Vec<(usize, usize)> {
        (0..n)
            .map(|x| (x, c.blocks()[c.class_of(x)].members()[0]))
            .collect()
    };
    let mut found = principal.clone();
    let mut frontier: Vec<Congruence> = principal.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        for p in &principal {
            if p.is_finer_than(&c) {
                continue;
            }
            let join = generate_congruence(d, pairs_of(&c).into_iter().chain(pairs_of(p)));
            if found.insert(join.clone()) {
                frontier.push(join);
            }
        }
    }
    let mut out: Vec<Congruence> = found.into_iter().collect();
    out.sort_by_key(|c| (c.zero_class(), c.labels().to_vec()));
    Ok(out)
}
