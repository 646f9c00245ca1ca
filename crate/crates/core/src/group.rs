//! Finite groups as Cayley tables over `0..n` with identity `0`.

use std::collections::VecDeque;

use crate::error::{Error, NotAGroupReason, Op, Result};
use crate::limits::Limits;
use crate::subset::Subset;

/// A validated finite group. Element `0` is always the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("rows", &self.rows())
            .finish()
    }
}

/// Checks shape and entry range, returning the flattened table.
pub(crate) fn flatten_rows(rows: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    let mut flat = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: r,
                len: row.len(),
                expected: n,
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryOutOfRange {
                    row: r,
                    col: c,
                    value: v,
                    order: n,
                });
            }
            flat.push(v);
        }
    }
    Ok((n, flat))
}

/// The two-sided unit of a square table, if any.
pub(crate) fn find_unit(n: usize, table: &[usize]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
}

impl FiniteGroup {
    /// Validates `rows` as a group table, relabelling so the unit sits at `0`.
    pub fn new(rows: &[Vec<usize>]) -> Result<Self> {
        Self::with_limits(rows, &Limits::default())
    }

    pub fn with_limits(rows: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let (n, flat) = flatten_rows(rows)?;
        Self::from_flat(n, flat, limits)
    }

    /// Validates a row-major table of length `n * n`.
    pub fn from_flat(n: usize, table: Vec<usize>, limits: &Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if table.len() != n * n {
            return Err(Error::NotSquare {
                row: 0,
                len: table.len(),
                expected: n * n,
            });
        }
        if let Some((i, &v)) = table.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::EntryOutOfRange {
                row: i / n,
                col: i % n,
                value: v,
                order: n,
            });
        }
        if n > limits.group_order {
            return Err(Error::OrderCapExceeded {
                order: n,
                cap: limits.group_order,
                what: "group validation",
            });
        }
        let unit = find_unit(n, &table).ok_or(Error::NotAGroup {
            reason: NotAGroupReason::NoUnit,
            witness: [0, 0, 0],
        })?;
        let table = if unit == 0 {
            table
        } else {
            let swap = |x: usize| {
                if x == 0 {
                    unit
                } else if x == unit {
                    0
                } else {
                    x
                }
            };
            let mut relabelled = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    relabelled[i * n + j] = swap(table[swap(i) * n + swap(j)]);
                }
            }
            relabelled
        };
        let group = Self::validated_with_unit_zero(n, table)?;
        Ok(group)
    }

    /// Full validation of a table whose unit is already `0`.
    fn validated_with_unit_zero(n: usize, table: Vec<usize>) -> Result<Self> {
        let not_a_group = |reason, witness| Error::NotAGroup { reason, witness };
        let mut seen = vec![usize::MAX; n];
        for r in 0..n {
            seen.fill(usize::MAX);
            for c in 0..n {
                let v = table[r * n + c];
                if seen[v] != usize::MAX {
                    return Err(not_a_group(NotAGroupReason::NotLatin, [r, seen[v], c]));
                }
                seen[v] = c;
            }
        }
        for c in 0..n {
            seen.fill(usize::MAX);
            for r in 0..n {
                let v = table[r * n + c];
                if seen[v] != usize::MAX {
                    return Err(not_a_group(NotAGroupReason::NotLatin, [c, seen[v], r]));
                }
                seen[v] = r;
            }
        }
        let mut inverse = vec![0; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x * n + y] == 0)
                .expect("latin rows contain the unit");
            if table[y * n + x] != 0 {
                return Err(not_a_group(NotAGroupReason::NoInverse, [x, 0, 0]));
            }
            inverse[x] = y;
        }
        for x in 0..n {
            for y in 0..n {
                let xy = table[x * n + y];
                for z in 0..n {
                    if table[xy * n + z] != table[x * n + table[y * n + z]] {
                        return Err(not_a_group(NotAGroupReason::NotAssociative, [x, y, z]));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
        })
    }

    /// Builds a group from a table known to be valid (internal constructions).
    pub(crate) fn from_trusted(n: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut inverse = vec![0; n];
        for x in 0..n {
            for y in 0..n {
                if table[x * n + y] == 0 {
                    inverse[x] = y;
                    break;
                }
            }
        }
        FiniteGroup {
            order: n,
            table,
            inverse,
        }
    }

    /// Cyclic group `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_trusted(n, table)
    }

    /// Symmetric group on `k` points. Elements are the permutations in
    /// lexicographic order of their one-line notation, composed as
    /// `(s*t)(i) = s(t(i))`.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let n = perms.len();
        let mut table = vec![0; n * n];
        for (i, s) in perms.iter().enumerate() {
            for (j, t) in perms.iter().enumerate() {
                let st: Vec<usize> = (0..k).map(|x| s[t[x]]).collect();
                table[i * n + j] = index(&st);
            }
        }
        Self::from_trusted(n, table)
    }

    /// Dihedral group of order `2m`: element `r^i s^e` has index `2i + e`.
    pub fn dihedral(m: usize) -> Self {
        assert!(m > 0, "dihedral group needs m > 0");
        let n = 2 * m;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let (i, e) = (a / 2, a % 2);
                let (j, f) = (b / 2, b % 2);
                // r^i s^e r^j s^f = r^(i ± j) s^(e+f)
                let k = if e == 0 { (i + j) % m } else { (i + m - j) % m };
                table[a * n + b] = 2 * k + (e ^ f);
            }
        }
        Self::from_trusted(n, table)
    }

    /// Direct product; the pair `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, k) = (g.order, h.order);
        let n = m * k;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = g.op(a / k, b / k) * k + h.op(a % k, b % k);
            }
        }
        Self::from_trusted(n, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `x * y * x^-1`.
    #[inline]
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.op(self.op(x, y), self.inverse[x])
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// The opposite group, `x *op y = y * x`.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let table = (0..n * n).map(|i| self.op(i % n, i / n)).collect();
        FiniteGroup {
            order: n,
            table,
            inverse: self.inverse.clone(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.op(x, y) == self.op(y, x)))
    }

    /// Transports the group along a bijection `perm` fixing `0`:
    /// the result has `perm(x) * perm(y) = perm(x * y)`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order;
        assert_eq!(perm.len(), n);
        assert_eq!(perm[0], 0, "relabelling must fix the identity");
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)];
            }
        }
        Self::from_trusted(n, table)
    }

    pub fn is_subgroup(&self, s: &Subset) -> bool {
        if s.carrier_order() != self.order || !s.contains(0) {
            return false;
        }
        s.iter()
            .all(|x| s.contains(self.inverse[x]) && s.iter().all(|y| s.contains(self.op(x, y))))
    }

    /// Normality via conjugation: `g s g^-1 ∈ S` for every `g`, `s ∈ S`.
    ///
    /// Errors with `NotASubgroup` if `s` is not a subgroup; the error's
    /// operation tag is `Star`, callers checking `o` remap it.
    pub fn is_normal_subgroup(&self, s: &Subset) -> Result<bool> {
        if !self.is_subgroup(s) {
            return Err(Error::NotASubgroup { op: Op::Star });
        }
        Ok((0..self.order).all(|g| s.iter().all(|x| s.contains(self.conjugate(g, x)))))
    }

    /// Normality via cosets: `S*a = a*S` for every `a`.
    pub fn is_normal_by_cosets(&self, s: &Subset) -> Result<bool> {
        if !self.is_subgroup(s) {
            return Err(Error::NotASubgroup { op: Op::Star });
        }
        Ok((0..self.order).all(|a| {
            let right = Subset::new(self.order, s.iter().map(|x| self.op(x, a))).expect("in range");
            let left = Subset::new(self.order, s.iter().map(|x| self.op(a, x))).expect("in range");
            right == left
        }))
    }

    /// Smallest subgroup containing `gens`.
    pub fn generate_subgroup(&self, gens: impl IntoIterator<Item = usize>) -> Subset {
        let n = self.order;
        let mut mask = vec![false; n];
        let mut members = Vec::new();
        let mut queue = VecDeque::new();
        let push = |x: usize, mask: &mut Vec<bool>, queue: &mut VecDeque<usize>| {
            if !mask[x] {
                mask[x] = true;
                queue.push_back(x);
            }
        };
        push(0, &mut mask, &mut queue);
        for g in gens {
            push(g, &mut mask, &mut queue);
        }
        while let Some(x) = queue.pop_front() {
            members.push(x);
            push(self.inverse[x], &mut mask, &mut queue);
            for &y in &members {
                push(self.op(x, y), &mut mask, &mut queue);
                push(self.op(y, x), &mut mask, &mut queue);
            }
        }
        Subset::from_mask(&mask)
    }

    /// The commutator subgroup `[S, T]`, generated by `s t (t s)^-1`.
    pub fn commutator_subgroup(&self, s: &Subset, t: &Subset) -> Result<Subset> {
        for x in [s, t] {
            x.check_order(self.order)?;
            if !self.is_normal_subgroup(x)? {
                return Err(Error::NotNormal { op: Op::Star });
            }
        }
        let gens: Vec<usize> = s
            .iter()
            .flat_map(|a| t.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.op(self.op(a, b), self.inverse[self.op(b, a)]))
            .collect();
        Ok(self.generate_subgroup(gens))
    }

    /// `{g : g s = s g for all s ∈ S}`.
    pub fn centralizer(&self, s: &Subset) -> Subset {
        let mask: Vec<bool> = (0..self.order)
            .map(|g| s.iter().all(|x| self.op(g, x) == self.op(x, g)))
            .collect();
        Subset::from_mask(&mask)
    }

    pub fn center(&self) -> Subset {
        self.centralizer(&Subset::full(self.order))
    }

    /// True iff `f` is a bijection fixing `0` with `f(xy) = f(x) f(y)`.
    pub fn is_automorphism(&self, f: &[usize]) -> bool {
        let n = self.order;
        if f.len() != n || f[0] != 0 || !is_permutation(f) {
            return false;
        }
        (0..n).all(|x| (0..n).all(|y| f[self.op(x, y)] == self.op(f[x], f[y])))
    }

    /// True iff `f: self -> target` is a group homomorphism.
    pub fn is_homomorphism_to(&self, target: &FiniteGroup, f: &[usize]) -> bool {
        let n = self.order;
        f.len() == n
            && f.iter().all(|&v| v < target.order)
            && (0..n).all(|x| (0..n).all(|y| f[self.op(x, y)] == target.op(f[x], f[y])))
    }
}

pub(crate) fn is_permutation(f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    for &v in f {
        if v >= f.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// All permutations of `0..k` in lexicographic order.
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // next permutation
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// Validates a table as a group (relabelling the unit to `0`).
pub fn make_group(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
    FiniteGroup::new(rows)
}
