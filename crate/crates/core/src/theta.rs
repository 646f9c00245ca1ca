//! The θ-twisted digroup on `A × A` for an abelian group `A` and an element
//! `a ≠ -a`, and the report comparing Huq and Smith commutation on it.
//!
//! `θ` swaps `(a, a)` with `(-a, a)` and fixes everything else. The first
//! operation is componentwise `+`; the second is `θ(θp + θq)`. Pairs `(x, z)`
//! are stored at index `x |A| + z`.

use crate::brace::Digroup;
use crate::commutator::huq_commute;
use crate::congruence::{ideal_of_congruence, Congruence};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ideal::digroup_normal_check;
use crate::limits::Limits;
use crate::smith::{search_smith_connector, Triple};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaTwistSpec {
    base: FiniteGroup,
    a: usize,
}

impl ThetaTwistSpec {
    pub fn new(base: FiniteGroup, a: usize) -> Result<Self> {
        if !base.is_abelian() {
            return Err(Error::BadSpec("base group must be abelian"));
        }
        if a >= base.order() {
            return Err(Error::BadSpec("a is not an element of the base group"));
        }
        if base.inv(a) == a {
            return Err(Error::BadSpec("a must differ from -a"));
        }
        Ok(ThetaTwistSpec { base, a })
    }

    /// Base `Z/m`.
    pub fn cyclic(m: usize, a: usize) -> Result<Self> {
        Self::new(FiniteGroup::cyclic(m), a)
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn pair(&self, x: usize, z: usize) -> usize {
        x * self.base.order() + z
    }

    pub fn unpair(&self, p: usize) -> (usize, usize) {
        (p / self.base.order(), p % self.base.order())
    }

    pub fn theta(&self, p: usize) -> usize {
        let (a, minus_a) = (self.a, self.base.inv(self.a));
        let (x, z) = self.unpair(p);
        match (x, z) {
            _ if z != a => p,
            _ if x == a => self.pair(minus_a, a),
            _ if x == minus_a => self.pair(a, a),
            _ => p,
        }
    }
}

pub fn theta_twist_digroup(spec: &ThetaTwistSpec) -> Result<Digroup> {
    let g = &spec.base;
    let m = g.order();
    let n = m * m;
    let plus = |p: usize, q: usize| {
        let ((x, z), (x2, z2)) = (spec.unpair(p), spec.unpair(q));
        spec.pair(g.op(x, x2), g.op(z, z2))
    };
    let star: Vec<Vec<usize>> = (0..n)
        .map(|p| (0..n).map(|q| plus(p, q)).collect())
        .collect();
    let circ: Vec<Vec<usize>> = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| spec.theta(plus(spec.theta(p), spec.theta(q))))
                .collect()
        })
        .collect();
    let limits = Limits {
        group_order: n.max(Limits::default().group_order),
        ..Limits::default()
    };
    Digroup::from_rows(&star, &circ, &limits)
}

/// One member of the witness family `x R a S x″` with middle `(a, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTriple {
    /// `((x, a), (a, a), (x″, a))` as carrier indices.
    pub triple: Triple,
    /// `x * y⁻* * z`.
    pub star_value: usize,
    /// `x o y⁻o o z`.
    pub circ_value: usize,
    /// `(x + a + x″, a)`.
    pub predicted_circ_value: usize,
}

impl FamilyTriple {
    pub fn separates(&self) -> bool {
        self.star_value != self.circ_value
    }

    /// The computed `o`-value is the predicted one and differs from the `*`-value.
    pub fn matches_prediction(&self) -> bool {
        self.circ_value == self.predicted_circ_value && self.separates()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub spec: ThetaTwistSpec,
    pub digroup: Digroup,
    /// Kernel of the second projection, `{(x, 0)}`.
    pub kernel: Subset,
    /// Kernel relation of the second projection.
    pub relation: Congruence,
    pub huq_commutes: bool,
    /// Some connector on the kernel relation with itself, if any exists.
    pub connector: Option<Vec<(Triple, usize)>>,
    pub family: Vec<FamilyTriple>,
}

impl CounterexampleReport {
    pub fn connector_exists(&self) -> bool {
        self.connector.is_some()
    }

    /// Family triples on which the predicted inequality is realised.
    pub fn witnesses(&self) -> impl Iterator<Item = &FamilyTriple> {
        self.family.iter().filter(|f| f.matches_prediction())
    }

    /// Huq commutation holds, no connector exists, and some family triple
    /// realises the predicted inequality.
    pub fn confirms_counterexample(&self) -> bool {
        self.huq_commutes && !self.connector_exists() && self.witnesses().next().is_some()
    }
}

pub fn counterexample_report(spec: &ThetaTwistSpec) -> Result<CounterexampleReport> {
    let d = theta_twist_digroup(spec)?;
    let g = &spec.base;
    let m = g.order();
    let n = d.order();
    let projection: Vec<usize> = (0..n).map(|p| spec.unpair(p).1).collect();
    let target = Digroup::trivial(g);
    for (src, dst) in [(d.star(), target.star()), (d.circ(), target.circ())] {
        if !src.is_homomorphism_to(dst, &projection) {
            return Err(Error::InvariantViolation(
                "second projection is not a digroup homomorphism".into(),
            ));
        }
    }
    for p in 0..n {
        if spec.theta(spec.theta(p)) != p {
            return Err(Error::InvariantViolation(format!(
                "θ is not an involution at {p}"
            )));
        }
    }
    let relation = Congruence::new(&d, &projection)?;
    let kernel = ideal_of_congruence(&relation);
    if kernel != Subset::new(n, (0..m).map(|x| spec.pair(x, 0)))? {
        return Err(Error::InvariantViolation(format!(
            "unexpected kernel {kernel:?}"
        )));
    }
    if let Some(failure) = digroup_normal_check(&d, &kernel).witness {
        return Err(Error::InvariantViolation(format!(
            "kernel is not a normal sub-digroup: {failure:?}"
        )));
    }
    let huq_commutes = huq_commute(&d, &kernel, &kernel)?;
    let connector = search_smith_connector(&d, &relation, &relation)?;

    let a = spec.a;
    let minus_a = g.inv(a);
    let (st, ci) = (d.star(), d.circ());
    let middle = spec.pair(a, a);
    let mut family = Vec::new();
    for x in (0..m).filter(|&x| x != a && x != minus_a) {
        for x2 in (0..m).filter(|&x| x != a && x != minus_a) {
            let (left, right) = (spec.pair(x, a), spec.pair(x2, a));
            family.push(FamilyTriple {
                triple: [left, middle, right],
                star_value: st.op(st.op(left, st.inv(middle)), right),
                circ_value: ci.op(ci.op(left, ci.inv(middle)), right),
                predicted_circ_value: spec.pair(g.op(g.op(x, a), x2), a),
            });
        }
    }
    Ok(CounterexampleReport {
        spec: spec.clone(),
        digroup: d,
        kernel,
        relation,
        huq_commutes,
        connector,
        family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::check_brace_axiom;

    #[test]
    fn spec_validation() {
        assert_eq!(
            ThetaTwistSpec::cyclic(2, 1),
            Err(Error::BadSpec("a must differ from -a"))
        );
        assert_eq!(
            ThetaTwistSpec::cyclic(4, 2),
            Err(Error::BadSpec("a must differ from -a"))
        );
        assert!(matches!(
            ThetaTwistSpec::new(FiniteGroup::symmetric(3), 3),
            Err(Error::BadSpec(_))
        ));
        assert!(matches!(
            ThetaTwistSpec::cyclic(3, 3),
            Err(Error::BadSpec(_))
        ));
    }

    #[test]
    fn twisted_inverse_of_a_a() {
        let spec = ThetaTwistSpec::cyclic(3, 1).unwrap();
        let d = theta_twist_digroup(&spec).unwrap();
        assert_eq!(d.order(), 9);
        assert_eq!(d.circ().inv(spec.pair(1, 1)), spec.pair(1, 2));
        assert!(!check_brace_axiom(&d).holds());
    }

    #[test]
    fn order_25_is_a_digroup_but_not_a_brace() {
        let spec = ThetaTwistSpec::cyclic(5, 2).unwrap();
        let d = theta_twist_digroup(&spec).unwrap();
        assert_eq!(d.order(), 25);
        assert!(!check_brace_axiom(&d).holds());
    }

    #[test]
    fn order_5_separates_huq_from_smith() {
        for a in [1, 2] {
            let r = counterexample_report(&ThetaTwistSpec::cyclic(5, a).unwrap()).unwrap();
            assert!(r.huq_commutes);
            assert!(!r.connector_exists());
            assert!(r.witnesses().count() > 1);
            assert!(r.confirms_counterexample());
        }
    }

    #[test]
    fn twist_is_affine_on_the_classes_for_orders_3_and_4() {
        // Here a ↔ -a is negation on the first coordinate, so x - y + z is
        // still respected and a connector survives.
        for m in [3, 4] {
            let r = counterexample_report(&ThetaTwistSpec::cyclic(m, 1).unwrap()).unwrap();
            assert!(r.huq_commutes);
            assert!(r.connector_exists());
            assert!(r.family.iter().all(|f| !f.separates()));
        }
    }
}
