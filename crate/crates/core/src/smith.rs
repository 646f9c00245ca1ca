//! Smith connectors between congruences, the Smith commutator, and the
//! comparison of Smith commutation with Huq commutation.

use crate::brace::{Digroup, SkewBrace};
use crate::commutator::{huq_commutator, huq_commute};
use crate::congruence::{
    all_congruences, congruence_of_ideal, equivalence_from_pairs, ideal_of_congruence,
    quotient_brace, Congruence, Quotient,
};
use crate::error::{Error, Op, Result};
use crate::ideal::all_ideals;
use crate::limits::Limits;
use crate::verdict::Verdict;

/// A triple `(x, y, z)` with `x R y` and `y S z`.
pub type Triple = [usize; 3];

/// The composable triples of `R` and `S`, in lexicographic order.
pub fn composable_triples(r: &Congruence, s: &Congruence) -> Vec<Triple> {
    let n = r.carrier_order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if !r.related(x, y) {
                continue;
            }
            for z in 0..n {
                if s.related(y, z) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

fn check_pair(d: &Digroup, r: &Congruence, s: &Congruence) -> Result<()> {
    Congruence::new(d, r.labels())?;
    Congruence::new(d, s.labels())?;
    Ok(())
}

/// Why the closed-form connector test failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectorFailure {
    /// `x * y⁻* * z ≠ x o y⁻o o z`.
    Mismatch(Triple),
    /// The Mal'tsev map of `op` does not respect `op` on this pair of triples.
    NotHomomorphism { op: Op, left: Triple, right: Triple },
}

/// Whether a connector between `R` and `S` exists on a skew brace.
///
/// It exists iff `p(x, y, z) = x * y⁻* * z` and `q(x, y, z) = x o y⁻o o z`
/// agree on every composable triple and are homomorphisms for `*` and `o`
/// respectively.
pub fn smith_connector_exists(
    b: &SkewBrace,
    r: &Congruence,
    s: &Congruence,
) -> Result<Verdict<ConnectorFailure>> {
    check_pair(b.digroup(), r, s)?;
    let (st, ci) = (b.star(), b.circ());
    let triples = composable_triples(r, s);
    let p = |t: &Triple| st.op(st.op(t[0], st.inv(t[1])), t[2]);
    let q = |t: &Triple| ci.op(ci.op(t[0], ci.inv(t[1])), t[2]);
    if let Some(t) = triples.iter().find(|t| p(t) != q(t)) {
        return Ok(Verdict::fail(ConnectorFailure::Mismatch(*t)));
    }
    for (op, g) in [(Op::Star, st), (Op::Circ, ci)] {
        let m = |t: &Triple| g.op(g.op(t[0], g.inv(t[1])), t[2]);
        for left in &triples {
            for right in &triples {
                let prod = [
                    g.op(left[0], right[0]),
                    g.op(left[1], right[1]),
                    g.op(left[2], right[2]),
                ];
                if m(&prod) != g.op(m(left), m(right)) {
                    return Ok(Verdict::fail(ConnectorFailure::NotHomomorphism {
                        op,
                        left: *left,
                        right: *right,
                    }));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Searches for any connector between `R` and `S` on a digroup: a map on the
/// composable triples, respecting both operations, with `p(x, y, y) = x` and
/// `p(y, y, z) = z`.
///
/// The candidate `x * y⁻* * z` is tried first; otherwise a backtracking
/// search with closure propagation runs over all assignments. Returns the
/// connector as `(triple, value)` pairs.
pub fn search_smith_connector(
    d: &Digroup,
    r: &Congruence,
    s: &Congruence,
) -> Result<Option<Vec<(Triple, usize)>>> {
    check_pair(d, r, s)?;
    let triples = composable_triples(r, s);
    let st = d.star();
    let candidate: Vec<usize> = triples
        .iter()
        .map(|t| st.op(st.op(t[0], st.inv(t[1])), t[2]))
        .collect();
    let mut search = Search::new(d, &triples);
    let found = if search.accepts(&candidate) {
        Some(candidate)
    } else {
        search.run()
    };
    Ok(found.map(|values| triples.into_iter().zip(values).collect()))
}

struct Search<'a> {
    d: &'a Digroup,
    triples: &'a [Triple],
    /// Dense `x n² + y n + z` to position in `triples`.
    position: Vec<usize>,
    value: Vec<Option<usize>>,
    assigned: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(d: &'a Digroup, triples: &'a [Triple]) -> Self {
        let n = d.order();
        let mut position = vec![usize::MAX; n * n * n];
        for (i, t) in triples.iter().enumerate() {
            position[(t[0] * n + t[1]) * n + t[2]] = i;
        }
        Search {
            d,
            triples,
            position,
            value: vec![None; triples.len()],
            assigned: Vec::new(),
        }
    }

    fn index(&self, t: Triple) -> usize {
        let n = self.d.order();
        self.position[(t[0] * n + t[1]) * n + t[2]]
    }

    fn accepts(&self, values: &[usize]) -> bool {
        let pinned = self
            .triples
            .iter()
            .zip(values)
            .all(|(t, &v)| (t[1] != t[2] || v == t[0]) && (t[0] != t[1] || v == t[2]));
        pinned
            && [self.d.star(), self.d.circ()].iter().all(|g| {
                self.triples.iter().enumerate().all(|(i, a)| {
                    self.triples.iter().enumerate().all(|(j, b)| {
                        let k = self.index([g.op(a[0], b[0]), g.op(a[1], b[1]), g.op(a[2], b[2])]);
                        values[k] == g.op(values[i], values[j])
                    })
                })
            })
    }

    fn undo(&mut self, mark: usize) {
        for i in self.assigned.drain(mark..) {
            self.value[i] = None;
        }
    }

    /// Assigns and closes under both operations; `false` on a conflict.
    fn assign(&mut self, i: usize, v: usize) -> bool {
        let mut queue = vec![(i, v)];
        while let Some((i, v)) = queue.pop() {
            match self.value[i] {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => {}
            }
            self.value[i] = Some(v);
            self.assigned.push(i);
            let a = self.triples[i];
            for pos in 0..self.assigned.len() {
                let j = self.assigned[pos];
                let b = self.triples[j];
                let w = self.value[j].expect("assigned");
                for g in [self.d.star(), self.d.circ()] {
                    for (l, r, lv, rv) in [(a, b, v, w), (b, a, w, v)] {
                        let k = self.index([g.op(l[0], r[0]), g.op(l[1], r[1]), g.op(l[2], r[2])]);
                        let kv = g.op(lv, rv);
                        match self.value[k] {
                            Some(x) if x != kv => return false,
                            Some(_) => {}
                            None => queue.push((k, kv)),
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        for i in 0..self.triples.len() {
            let t = self.triples[i];
            let forced = if t[1] == t[2] {
                Some(t[0])
            } else if t[0] == t[1] {
                Some(t[2])
            } else {
                None
            };
            if let Some(v) = forced {
                if !self.assign(i, v) {
                    return None;
                }
            }
        }
        if self.branch() {
            Some(self.value.iter().map(|v| v.expect("complete")).collect())
        } else {
            None
        }
    }

    fn branch(&mut self) -> bool {
        let Some(i) = self.value.iter().position(Option::is_none) else {
            return true;
        };
        for v in 0..self.d.order() {
            let mark = self.assigned.len();
            if self.assign(i, v) && self.branch() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// The direct image of `R` along a quotient map, which must already be an
/// equivalence relation.
fn image_congruence(q: &Quotient, r: &Congruence) -> Result<Congruence> {
    let k = q.brace.order();
    let n = r.carrier_order();
    let mut related = vec![false; k * k];
    for x in 0..n {
        for y in 0..n {
            if r.related(x, y) {
                related[q.projection[x] * k + q.projection[y]] = true;
            }
        }
    }
    let pairs = (0..k * k).filter(|&i| related[i]).map(|i| (i / k, i % k));
    let labels = equivalence_from_pairs(k, pairs);
    if (0..k * k).any(|i| (labels[i / k] == labels[i % k]) != related[i]) {
        return Err(Error::InvariantViolation(
            "image of a congruence is not transitive".into(),
        ));
    }
    Congruence::new(q.brace.digroup(), &labels)
}

/// `[R, S]`, the congruence of the Huq commutator of the associated ideals.
///
/// Checked against the smallest ideal `K` for which the images of `R` and
/// `S` in `A/K` admit a connector, unless the ideal lattice is over the cap.
pub fn smith_commutator(b: &SkewBrace, r: &Congruence, s: &Congruence) -> Result<Congruence> {
    check_pair(b.digroup(), r, s)?;
    let (ir, is) = (ideal_of_congruence(r), ideal_of_congruence(s));
    let commutator = huq_commutator(b, &ir, &is)?.commutator;
    let ideals = match all_ideals(b) {
        Ok(ideals) => ideals,
        Err(Error::OrderCapExceeded { .. }) => return congruence_of_ideal(b, &commutator),
        Err(e) => return Err(e),
    };
    let mut smallest = None;
    for k in ideals {
        let q = quotient_brace(b, &k)?;
        let connected = smith_connector_exists(
            &q.brace,
            &image_congruence(&q, r)?,
            &image_congruence(&q, s)?,
        )?;
        if connected.holds() {
            if !commutator.is_subset_of(&k) {
                return Err(Error::InvariantViolation(format!(
                    "A/{k:?} has a connector but does not contain the commutator {commutator:?}"
                )));
            }
            smallest.get_or_insert(k);
        }
    }
    if smallest.as_ref() != Some(&commutator) {
        return Err(Error::InvariantViolation(format!(
            "least connector quotient {smallest:?} differs from {commutator:?}"
        )));
    }
    congruence_of_ideal(b, &commutator)
}

/// One congruence pair of a Huq/Smith comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuqSmithEntry {
    pub r: Congruence,
    pub s: Congruence,
    pub huq: bool,
    pub smith: bool,
}

impl HuqSmithEntry {
    pub fn agrees(&self) -> bool {
        self.huq == self.smith
    }
}

/// Compares connector existence with Huq commutation of the zero classes
/// for every pair of congruences of a brace. Any disagreement, or any
/// disagreement between the closed form and the raw search, is an error.
pub fn verify_huq_equals_smith(b: &SkewBrace) -> Result<Vec<HuqSmithEntry>> {
    let congruences = all_congruences(b.digroup(), b.limits())?;
    let mut out = Vec::new();
    for r in &congruences {
        for s in &congruences {
            let smith = smith_connector_exists(b, r, s)?.holds();
            let searched = search_smith_connector(b.digroup(), r, s)?.is_some();
            if smith != searched {
                return Err(Error::InvariantViolation(format!(
                    "closed-form connector test says {smith}, search says {searched} for {r:?}, {s:?}"
                )));
            }
            let huq = huq_commute(
                b.digroup(),
                &ideal_of_congruence(r),
                &ideal_of_congruence(s),
            )?;
            let entry = HuqSmithEntry {
                r: r.clone(),
                s: s.clone(),
                huq,
                smith,
            };
            if !entry.agrees() {
                return Err(Error::InvariantViolation(format!(
                    "Huq and Smith disagree: {entry:?}"
                )));
            }
            out.push(entry);
        }
    }
    Ok(out)
}

/// The same comparison on a bare digroup, using the connector search.
/// Disagreements are reported, not rejected.
pub fn verify_huq_equals_smith_digroup(d: &Digroup, limits: &Limits) -> Result<Vec<HuqSmithEntry>> {
    let congruences = all_congruences(d, limits)?;
    let mut out = Vec::new();
    for r in &congruences {
        for s in &congruences {
            let smith = search_smith_connector(d, r, s)?.is_some();
            let huq = huq_commute(d, &ideal_of_congruence(r), &ideal_of_congruence(s))?;
            out.push(HuqSmithEntry {
                r: r.clone(),
                s: s.clone(),
                huq,
                smith,
            });
        }
    }
    Ok(out)
}
