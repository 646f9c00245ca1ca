//! Set-theoretic solutions of the Yang–Baxter equation induced by skew
//! braces: `r(x, y) = (λ_x(y), λ_x(y)⁻o o x o y)`.

use crate::brace::SkewBrace;
use crate::verdict::Verdict;

/// A map `r: X × X → X × X` on `X = 0..n`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeMap {
    n: usize,
    table: Vec<(usize, usize)>,
}

/// Which partial map of `r` fails to be bijective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// `y ↦ π₁ r(x0, y)` is not a bijection.
    Left { x0: usize },
    /// `x ↦ π₂ r(x, y0)` is not a bijection.
    Right { y0: usize },
}

impl YbeMap {
    /// `table[x n + y] = r(x, y)`. `None` if the size is not a square or an
    /// entry is out of range.
    pub fn from_table(n: usize, table: Vec<(usize, usize)>) -> Option<Self> {
        (table.len() == n * n && table.iter().all(|&(a, b)| a < n && b < n))
            .then_some(YbeMap { n, table })
    }

    /// The flip `(x, y) ↦ (y, x)`.
    pub fn flip(n: usize) -> Self {
        YbeMap {
            n,
            table: (0..n * n).map(|i| (i % n, i / n)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.n + y]
    }

    pub fn table(&self) -> &[(usize, usize)] {
        &self.table
    }

    pub fn table_mut(&mut self) -> &mut [(usize, usize)] {
        &mut self.table
    }

    /// Rows of first components.
    pub fn first_components(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.apply(x, y).0).collect())
            .collect()
    }

    /// Rows of second components.
    pub fn second_components(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.apply(x, y).1).collect())
            .collect()
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n * self.n];
        self.table
            .iter()
            .all(|&(a, b)| !std::mem::replace(&mut seen[a * self.n + b], true))
    }

    /// `(r × id)(id × r)(r × id) = (id × r)(r × id)(id × r)` on every triple.
    pub fn check_braid(&self) -> Verdict<[usize; 3]> {
        let n = self.n;
        let r12 = |[x, y, z]: [usize; 3]| {
            let (a, b) = self.apply(x, y);
            [a, b, z]
        };
        let r23 = |[x, y, z]: [usize; 3]| {
            let (b, c) = self.apply(y, z);
            [x, b, c]
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = [x, y, z];
                    if r12(r23(r12(t))) != r23(r12(r23(t))) {
                        return Verdict::fail(t);
                    }
                }
            }
        }
        Verdict::pass()
    }

    pub fn check_nondegenerate(&self) -> Verdict<Degeneracy> {
        let n = self.n;
        let bijective = |f: &dyn Fn(usize) -> usize| {
            let mut seen = vec![false; n];
            (0..n).all(|i| !std::mem::replace(&mut seen[f(i)], true))
        };
        if let Some(x0) = (0..n).find(|&x0| !bijective(&|y| self.apply(x0, y).0)) {
            return Verdict::fail(Degeneracy::Left { x0 });
        }
        if let Some(y0) = (0..n).find(|&y0| !bijective(&|x| self.apply(x, y0).1)) {
            return Verdict::fail(Degeneracy::Right { y0 });
        }
        Verdict::pass()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeSolutionReport {
    pub map: YbeMap,
    pub is_bijection: bool,
    pub braid: Verdict<[usize; 3]>,
    pub nondegenerate: Verdict<Degeneracy>,
}

impl YbeSolutionReport {
    pub fn for_map(map: YbeMap) -> Self {
        YbeSolutionReport {
            is_bijection: map.is_bijective(),
            braid: map.check_braid(),
            nondegenerate: map.check_nondegenerate(),
            map,
        }
    }

    pub fn is_solution(&self) -> bool {
        self.is_bijection && self.braid.holds() && self.nondegenerate.holds()
    }
}

/// The solution map of a brace, without running the checks.
pub fn solution_map(b: &SkewBrace) -> YbeMap {
    let n = b.order();
    let ci = b.circ();
    let table = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            let first = b.lambda(x, y);
            (first, ci.op(ci.inv(first), ci.op(x, y)))
        })
        .collect();
    YbeMap { n, table }
}

/// Builds `r` and runs every check on it.
pub fn build_r(b: &SkewBrace) -> YbeSolutionReport {
    YbeSolutionReport::for_map(solution_map(b))
}

/// `(f × f) ∘ r₁ = r₂ ∘ (f × f)`.
pub fn ybe_morphism_check(b1: &SkewBrace, b2: &SkewBrace, f: &[usize]) -> bool {
    if f.len() != b1.order() || f.iter().any(|&v| v >= b2.order()) {
        return false;
    }
    let (r1, r2) = (solution_map(b1), solution_map(b2));
    (0..b1.order()).all(|x| {
        (0..b1.order()).all(|y| {
            let (a, b) = r1.apply(x, y);
            (f[a], f[b]) == r2.apply(f[x], f[y])
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{op_brace, trivial_brace};
    use crate::group::{permutations, FiniteGroup};

    #[test]
    fn trivial_braces_give_conjugation_and_flip() {
        let g = FiniteGroup::symmetric(3);
        let r = build_r(&trivial_brace(&g).unwrap());
        assert!(r.is_solution());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(r.map.apply(x, y), (y, g.op(g.op(g.inv(y), x), y)));
            }
        }
        for n in [1, 2, 5] {
            let r = build_r(&trivial_brace(&FiniteGroup::cyclic(n)).unwrap());
            assert_eq!(r.map, YbeMap::flip(n));
        }
    }

    #[test]
    fn flip_is_a_solution() {
        assert!(YbeSolutionReport::for_map(YbeMap::flip(4)).is_solution());
    }

    #[test]
    fn corrupted_tables_fail() {
        let b = op_brace(&FiniteGroup::symmetric(3)).unwrap();
        let mut map = solution_map(&b);
        map.table_mut().swap(1, 2);
        let report = YbeSolutionReport::for_map(map);
        assert!(report.is_bijection);
        assert!(report.braid.witness.is_some());

        let constant = YbeMap::from_table(3, vec![(0, 0); 9]).unwrap();
        let report = YbeSolutionReport::for_map(constant);
        assert!(!report.is_bijection);
        assert_eq!(
            report.nondegenerate.witness,
            Some(Degeneracy::Left { x0: 0 })
        );
        assert!(YbeMap::from_table(2, vec![(0, 2); 4]).is_none());
    }

    #[test]
    fn morphisms() {
        let g = FiniteGroup::symmetric(3);
        let b = trivial_brace(&g).unwrap();
        let id: Vec<usize> = (0..6).collect();
        assert!(ybe_morphism_check(&b, &b, &id));
        let sign = [0, 1, 1, 0, 0, 1];
        let z2 = trivial_brace(&FiniteGroup::cyclic(2)).unwrap();
        assert!(ybe_morphism_check(&b, &z2, &sign));
        let bad = permutations(6)
            .into_iter()
            .find(|p| p[0] == 0 && !ybe_morphism_check(&b, &b, p));
        assert!(bad.is_some());
    }
}
