//! Exhaustive enumeration of small skew braces.
//!
//! Group tables on `0..n` with unit `0` are generated by backtracking with
//! associativity checked as soon as a triple is fully determined. Braces
//! are found two independent ways:
//!
//! * by tables: for each `*` up to isomorphism, every labelled group table
//!   `o` is tested against the brace identity;
//! * by λ-maps: for each `*`, maps `λ: A → Aut(A, *)` with `λ_0 = id` and
//!   `λ_{a * λ_a(b)} = λ_a λ_b` are searched, and `a o b = a * λ_a(b)`.
//!
//! Isomorphism classes are represented by the lexicographically least
//! `(star, circ)` table pair over all relabellings fixing `0`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::brace::{Digroup, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{permutations, FiniteGroup};
use crate::limits::Limits;

/// A flat `n × n` table.
pub type Table = Vec<usize>;

/// Canonical representative of a brace isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraceKey {
    pub order: usize,
    pub star: Table,
    pub circ: Table,
}

impl BraceKey {
    pub fn to_brace(&self, limits: &Limits) -> Result<SkewBrace> {
        let rows = |t: &Table| {
            t.chunks(self.order.max(1))
                .map(<[usize]>::to_vec)
                .collect::<Vec<_>>()
        };
        SkewBrace::with_limits(
            Digroup::from_rows(&rows(&self.star), &rows(&self.circ), limits)?,
            *limits,
        )
    }
}

const UNSET: usize = usize::MAX;

/// Every group table on `0..n` whose unit is `0`.
pub fn labelled_group_tables(n: usize) -> Vec<Table> {
    if n == 0 {
        return Vec::new();
    }
    let mut t = vec![UNSET; n * n];
    for x in 0..n {
        t[x] = x;
        t[x * n] = x;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    fill(&mut t, n, &cells, 0, &mut out);
    out
}

fn fill(t: &mut Table, n: usize, cells: &[(usize, usize)], k: usize, out: &mut Vec<Table>) {
    let Some(&(x, y)) = cells.get(k) else {
        out.push(t.clone());
        return;
    };
    for v in 0..n {
        if (0..n).any(|j| t[x * n + j] == v) || (0..n).any(|i| t[i * n + y] == v) {
            continue;
        }
        t[x * n + y] = v;
        if associative_at(t, n, x, y) {
            fill(t, n, cells, k + 1, out);
        }
        t[x * n + y] = UNSET;
    }
}

/// Checks every associativity instance that uses cell `(x, y)` and is
/// otherwise fully known.
fn associative_at(t: &Table, n: usize, x: usize, y: usize) -> bool {
    let get = |a: usize, b: usize| {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            t[a * n + b]
        }
    };
    let agree = |l: usize, r: usize| l == UNSET || r == UNSET || l == r;
    let v = t[x * n + y];
    for z in 0..n {
        // (x y) z = x (y z)
        if !agree(get(v, z), get(x, get(y, z))) {
            return false;
        }
        // (z x) y = z (x y)
        if !agree(get(get(z, x), y), get(z, v)) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            // x = a b: (a b) y = a (b y)
            if t[a * n + b] == x && !agree(v, get(a, get(b, y))) {
                return false;
            }
            // y = a b: x (a b) = (x a) b
            if t[a * n + b] == y && !agree(v, get(get(x, a), b)) {
                return false;
            }
        }
    }
    true
}

/// Permutations of `0..n` fixing `0`, lexicographically.
pub fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    permutations(n - 1)
        .into_iter()
        .map(|p| {
            std::iter::once(0)
                .chain(p.into_iter().map(|v| v + 1))
                .collect()
        })
        .collect()
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// `σ(t)`, defined by `σ(t)[σx][σy] = σ(t[x][y])`.
pub fn relabel_table(t: &[usize], n: usize, sigma: &[usize]) -> Table {
    let inv = inverse(sigma);
    (0..n * n)
        .map(|k| sigma[t[inv[k / n] * n + inv[k % n]]])
        .collect()
}

/// Compares `σ(t)` with `best` without building it.
fn cmp_relabelled(
    t: &[usize],
    n: usize,
    sigma: &[usize],
    inv: &[usize],
    best: &[usize],
) -> Ordering {
    for (k, &b) in best.iter().enumerate() {
        let v = sigma[t[inv[k / n] * n + inv[k % n]]];
        match v.cmp(&b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Least relabelling of `t`, and every permutation attaining it.
fn minimise(t: &[usize], n: usize, perms: &[(Vec<usize>, Vec<usize>)]) -> (Table, Vec<usize>) {
    let mut best = t.to_vec();
    let mut attaining = Vec::new();
    for (i, (sigma, inv)) in perms.iter().enumerate() {
        match cmp_relabelled(t, n, sigma, inv, &best) {
            Ordering::Less => {
                best = relabel_table(t, n, sigma);
                attaining.clear();
                attaining.push(i);
            }
            Ordering::Equal => attaining.push(i),
            Ordering::Greater => {}
        }
    }
    (best, attaining)
}

fn with_inverses(perms: Vec<Vec<usize>>) -> Vec<(Vec<usize>, Vec<usize>)> {
    perms
        .into_iter()
        .map(|p| {
            let inv = inverse(&p);
            (p, inv)
        })
        .collect()
}

/// Canonical form of an arbitrary digroup over all relabellings fixing `0`.
pub fn canonical_key(d: &Digroup) -> BraceKey {
    let n = d.order();
    let perms = with_inverses(permutations_fixing_zero(n));
    let (star, attaining) = minimise(d.star().table(), n, &perms);
    let circ = attaining
        .iter()
        .map(|&i| relabel_table(d.circ().table(), n, &perms[i].0))
        .min()
        .expect("identity attains or is beaten");
    BraceKey {
        order: n,
        star,
        circ,
    }
}

/// Group tables up to isomorphism, each in least form.
pub fn group_classes(n: usize) -> Vec<Table> {
    let perms = with_inverses(permutations_fixing_zero(n));
    let reps: BTreeSet<Table> = labelled_group_tables(n)
        .par_iter()
        .map(|t| minimise(t, n, &perms).0)
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    reps.into_iter().collect()
}

/// Automorphisms of a group table, as permutations.
pub fn automorphisms(t: &[usize], n: usize) -> Vec<Vec<usize>> {
    permutations_fixing_zero(n)
        .into_iter()
        .filter(|p| (0..n).all(|x| (0..n).all(|y| p[t[x * n + y]] == t[p[x] * n + p[y]])))
        .collect()
}

fn is_brace(star: &[usize], circ: &[usize], n: usize) -> bool {
    let st = |x: usize, y: usize| star[x * n + y];
    let ci = |x: usize, y: usize| circ[x * n + y];
    let inv: Vec<usize> = (0..n)
        .map(|a| (0..n).find(|&b| st(a, b) == 0).expect("group"))
        .collect();
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| ci(a, st(b, c)) == st(st(ci(a, b), inv[a]), ci(a, c))))
    })
}

/// Least relabelling of `circ` by automorphisms of `star`.
fn key_under(star: &Table, circ: &Table, n: usize, auts: &[(Vec<usize>, Vec<usize>)]) -> BraceKey {
    let (circ, _) = minimise(circ, n, auts);
    BraceKey {
        order: n,
        star: star.clone(),
        circ,
    }
}

fn check_cap(n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::BadSpec("order must be positive"));
    }
    if n > limits.enumerate_order {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap: limits.enumerate_order,
            what: "brace enumeration",
        });
    }
    Ok(())
}

/// Every `(star, circ)` pair with `star` a class representative and `circ`
/// any labelled group table satisfying the brace identity.
fn raw_pairs(n: usize) -> Vec<(Table, Vec<Table>)> {
    let tables = labelled_group_tables(n);
    group_classes(n)
        .into_par_iter()
        .map(|star| {
            let circs: Vec<Table> = tables
                .iter()
                .filter(|c| is_brace(&star, c, n))
                .cloned()
                .collect();
            (star, circs)
        })
        .collect()
}

/// Isomorphism classes via the brace identity on all table pairs.
pub fn enumerate_by_tables(n: usize, limits: &Limits) -> Result<Vec<BraceKey>> {
    check_cap(n, limits)?;
    let keys: BTreeSet<BraceKey> = raw_pairs(n)
        .into_par_iter()
        .flat_map_iter(|(star, circs)| {
            let auts = with_inverses(automorphisms(&star, n));
            circs
                .into_iter()
                .map(move |c| key_under(&star, &c, n, &auts))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(keys.into_iter().collect())
}

/// Isomorphism classes via λ-maps into the automorphism group.
pub fn enumerate_by_lambda(n: usize, limits: &Limits) -> Result<Vec<BraceKey>> {
    check_cap(n, limits)?;
    let keys: BTreeSet<BraceKey> = group_classes(n)
        .into_par_iter()
        .flat_map_iter(|star| {
            let auts = automorphisms(&star, n);
            let circs = lambda_circles(&star, n, &auts);
            let auts = with_inverses(auts);
            circs
                .into_iter()
                .map(move |c| key_under(&star, &c, n, &auts))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(keys.into_iter().collect())
}

/// All `o` tables `a o b = a * λ_a(b)` from λ-maps satisfying the cocycle rule.
pub fn lambda_circles(star: &[usize], n: usize, auts: &[Vec<usize>]) -> Vec<Table> {
    let index: HashMap<&[usize], usize> = auts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let identity = index[(0..n).collect::<Vec<_>>().as_slice()];
    let compose: Vec<Vec<usize>> = auts
        .iter()
        .map(|f| {
            auts.iter()
                .map(|g| index[(0..n).map(|x| f[g[x]]).collect::<Vec<_>>().as_slice()])
                .collect()
        })
        .collect();
    let mut search = LambdaSearch {
        star,
        n,
        auts,
        compose: &compose,
        lambda: vec![None; n],
        assigned: Vec::new(),
    };
    let mut out = Vec::new();
    if search.assign(0, identity) {
        search.branch(&mut out);
    }
    out
}

struct LambdaSearch<'a> {
    star: &'a [usize],
    n: usize,
    auts: &'a [Vec<usize>],
    compose: &'a [Vec<usize>],
    lambda: Vec<Option<usize>>,
    assigned: Vec<usize>,
}

impl LambdaSearch<'_> {
    fn circ(&self, a: usize, la: usize, b: usize) -> usize {
        self.star[a * self.n + self.auts[la][b]]
    }

    fn assign(&mut self, a: usize, f: usize) -> bool {
        let mut queue = vec![(a, f)];
        while let Some((a, f)) = queue.pop() {
            match self.lambda[a] {
                Some(g) if g == f => continue,
                Some(_) => return false,
                None => {}
            }
            self.lambda[a] = Some(f);
            self.assigned.push(a);
            for pos in 0..self.assigned.len() {
                let b = self.assigned[pos];
                let g = self.lambda[b].expect("assigned");
                for (x, fx, y, fy) in [(a, f, b, g), (b, g, a, f)] {
                    let c = self.circ(x, fx, y);
                    let want = self.compose[fx][fy];
                    match self.lambda[c] {
                        Some(h) if h != want => return false,
                        Some(_) => {}
                        None => queue.push((c, want)),
                    }
                }
            }
        }
        true
    }

    fn branch(&mut self, out: &mut Vec<Table>) {
        let Some(a) = self.lambda.iter().position(Option::is_none) else {
            let n = self.n;
            let table = (0..n * n)
                .map(|k| self.circ(k / n, self.lambda[k / n].expect("complete"), k % n))
                .collect();
            out.push(table);
            return;
        };
        for f in 0..self.auts.len() {
            let mark = self.assigned.len();
            if self.assign(a, f) {
                self.branch(out);
            }
            for x in self.assigned.drain(mark..) {
                self.lambda[x] = None;
            }
        }
    }
}

/// All skew braces of order `n` with `*` running over group classes.
///
/// Without `up_to_iso`, every labelled `o` is kept for each class
/// representative `*`; with it, one brace per isomorphism class in
/// canonical form. Output is sorted by tables.
pub fn enumerate_braces(n: usize, up_to_iso: bool, limits: &Limits) -> Result<Vec<SkewBrace>> {
    check_cap(n, limits)?;
    let keys: Vec<BraceKey> = if up_to_iso {
        enumerate_by_tables(n, limits)?
    } else {
        let mut keys: Vec<BraceKey> = raw_pairs(n)
            .into_iter()
            .flat_map(|(star, circs)| {
                circs.into_iter().map(move |circ| BraceKey {
                    order: n,
                    star: star.clone(),
                    circ,
                })
            })
            .collect();
        keys.sort();
        keys
    };
    keys.par_iter().map(|k| k.to_brace(limits)).collect()
}

/// Enumeration limits allowing order `n` and whatever the lattice work on it needs.
pub fn limits_for_order(n: usize) -> Limits {
    Limits::default().with_override(n.max(Limits::default().enumerate_order))
}

impl From<&SkewBrace> for BraceKey {
    fn from(b: &SkewBrace) -> Self {
        BraceKey {
            order: b.order(),
            star: b.star().table().to_vec(),
            circ: b.circ().table().to_vec(),
        }
    }
}

/// Checks a group table by the library constructor (used as a cross-check
/// on the generator).
pub fn table_is_group(t: &[usize], n: usize) -> bool {
    FiniteGroup::from_flat(n, t.to_vec(), &Limits::unbounded()).is_ok_and(|g| g.table() == t)
}
