//! Generic brute-force engine for numerical semigroups.
//!
//! Everything here works for an arbitrary generator list and is deliberately
//! simple: membership comes from a dynamic-programming table, factorizations
//! from bounded recursive descent. The closed forms in [`crate::triple`] and
//! [`crate::arith`] are checked against this module.

use std::collections::BTreeSet;
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn as_index(n: i64) -> usize {
    usize::try_from(n).expect("non-negative index")
}

/// An exponent vector over the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Factorization {
    coords: Vec<i64>,
}

impl Factorization {
    pub fn new(coords: Vec<i64>) -> Self {
        debug_assert!(coords.iter().all(|&c| c >= 0), "negative coordinate");
        Factorization { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn length(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// The element this factorization represents, `sum coords[i] * gens[i]`.
    pub fn value(&self, gens: &[i64]) -> Result<i64> {
        if gens.len() != self.coords.len() {
            return Err(Error::InvalidParameter(format!(
                "factorization has {} coordinates but there are {} generators",
                self.coords.len(),
                gens.len()
            )));
        }
        self.coords
            .iter()
            .zip(gens)
            .try_fold(0i64, |acc, (&x, &g)| {
                x.checked_mul(g)
                    .and_then(|t| acc.checked_add(t))
                    .ok_or(Error::Overflow("factorization value"))
            })
    }

    pub fn dot(&self, other: &Factorization) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| x * y)
            .sum()
    }

    pub fn shares_support(&self, other: &Factorization) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .any(|(&x, &y)| x > 0 && y > 0)
    }

    /// `self - sub` if it stays non-negative.
    pub fn checked_sub(&self, sub: &Factorization) -> Option<Factorization> {
        let coords = self
            .coords
            .iter()
            .zip(&sub.coords)
            .map(|(x, y)| if x >= y { Some(x - y) } else { None })
            .collect::<Option<Vec<_>>>()?;
        Some(Factorization { coords })
    }

    pub fn add(&self, other: &Factorization) -> Factorization {
        Factorization {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl From<Vec<i64>> for Factorization {
    fn from(coords: Vec<i64>) -> Self {
        Factorization::new(coords)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The graph on `F(r)` joining factorizations with common support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationGraph {
    pub element: i64,
    pub vertices: Vec<Factorization>,
    /// Index pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl FactorizationGraph {
    pub fn build(element: i64, vertices: Vec<Factorization>) -> Self {
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i].dot(&vertices[j]) > 0 {
                    edges.push((i, j));
                }
            }
        }
        FactorizationGraph {
            element,
            vertices,
            edges,
        }
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<Factorization>> {
        let mut uf = UnionFind::new(self.vertices.len());
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        let labels = uf.into_labeling();
        let mut groups: Vec<(usize, Vec<Factorization>)> = Vec::new();
        for (v, label) in labels.iter().enumerate() {
            match groups.iter_mut().find(|(l, _)| l == label) {
                Some((_, g)) => g.push(self.vertices[v].clone()),
                None => groups.push((*label, vec![self.vertices[v].clone()])),
            }
        }
        let mut comps: Vec<Vec<Factorization>> = groups.into_iter().map(|(_, g)| g).collect();
        for c in &mut comps {
            c.sort();
        }
        comps.sort();
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiClassification {
    pub betti: Vec<i64>,
    /// Betti elements whose factorizations all share one length.
    pub balanced: Vec<i64>,
    /// Betti elements with factorizations of two different lengths.
    pub unbalanced: Vec<i64>,
}

impl BettiClassification {
    /// Builds a classification from its two halves, sorting everything.
    pub fn from_parts(mut balanced: Vec<i64>, mut unbalanced: Vec<i64>) -> Self {
        balanced.sort_unstable();
        balanced.dedup();
        unbalanced.sort_unstable();
        unbalanced.dedup();
        let betti: BTreeSet<i64> = balanced.iter().chain(&unbalanced).copied().collect();
        BettiClassification {
            betti: betti.into_iter().collect(),
            balanced,
            unbalanced,
        }
    }
}

/// A set of relators `(x, x')` with `value(x) = value(x')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub relations: Vec<(Factorization, Factorization)>,
}

impl Presentation {
    /// Validates every pair against `gens` and keeps the given order.
    pub fn new(relations: Vec<(Factorization, Factorization)>, gens: &[i64]) -> Result<Self> {
        for (x, y) in &relations {
            if x == y {
                return Err(Error::InvalidParameter(format!(
                    "trivial relator {x} = {y}"
                )));
            }
            let (vx, vy) = (x.value(gens)?, y.value(gens)?);
            if vx != vy {
                return Err(Error::InvalidParameter(format!(
                    "relator {x} = {y} has unequal values {vx} and {vy}"
                )));
            }
        }
        Ok(Presentation { relations })
    }

    /// Pairs normalised so the smaller factorization comes first, sorted.
    pub fn canonical(&self) -> Vec<(Factorization, Factorization)> {
        let mut rels: Vec<_> = self
            .relations
            .iter()
            .map(|(x, y)| {
                if x <= y {
                    (x.clone(), y.clone())
                } else {
                    (y.clone(), x.clone())
                }
            })
            .collect();
        rels.sort();
        rels
    }

    /// Smallest `r <= window` whose factorizations are not all linked by
    /// relator moves `x + y <-> x' + y`, or `None` if every `F(r)` is connected.
    pub fn first_unconnected(&self, s: &Semigroup, window: i64) -> Result<Option<i64>> {
        let reach = SuffixReach::new(s.minimal_generators(), window);
        for r in 0..=window {
            let facts = reach.factorizations(r);
            if facts.len() < 2 {
                continue;
            }
            let mut uf = UnionFind::new(facts.len());
            for (i, z) in facts.iter().enumerate() {
                for (x, y) in &self.relations {
                    for (from, to) in [(x, y), (y, x)] {
                        if let Some(rest) = z.checked_sub(from) {
                            let moved = rest.add(to);
                            let j = facts
                                .binary_search(&moved)
                                .expect("relator move stays inside F(r)");
                            uf.union(i, j);
                        }
                    }
                }
            }
            let root = uf.find(0);
            if (1..facts.len()).any(|i| uf.find(i) != root) {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }
}

/// `rows[i][v]` is true when `v` is a combination of `gens[i..]`.
struct SuffixReach<'a> {
    gens: &'a [i64],
    rows: Vec<Vec<bool>>,
}

impl<'a> SuffixReach<'a> {
    fn new(gens: &'a [i64], bound: i64) -> Self {
        let size = as_index(bound.max(0)) + 1;
        let mut rows = vec![vec![false; size]; gens.len() + 1];
        rows[gens.len()][0] = true;
        for i in (0..gens.len()).rev() {
            let g = as_index(gens[i]);
            let (head, tail) = rows.split_at_mut(i + 1);
            let row = &mut head[i];
            row.copy_from_slice(&tail[0]);
            for v in g..size {
                if row[v - g] {
                    row[v] = true;
                }
            }
        }
        SuffixReach { gens, rows }
    }

    /// All factorizations of `r`, lexicographically ascending.
    fn factorizations(&self, r: i64) -> Vec<Factorization> {
        let mut out = Vec::new();
        if r < 0 || as_index(r) >= self.rows[0].len() || !self.rows[0][as_index(r)] {
            return out;
        }
        let mut current = vec![0i64; self.gens.len()];
        self.descend(0, r, &mut current, &mut out);
        out
    }

    fn descend(&self, i: usize, rem: i64, current: &mut [i64], out: &mut Vec<Factorization>) {
        let g = self.gens[i];
        if i + 1 == self.gens.len() {
            if rem % g == 0 {
                current[i] = rem / g;
                out.push(Factorization::new(current.to_vec()));
            }
            return;
        }
        for x in 0..=rem / g {
            let next = rem - x * g;
            if self.rows[i + 1][as_index(next)] {
                current[i] = x;
                self.descend(i + 1, next, current, out);
            }
        }
        current[i] = 0;
    }
}

/// All non-negative solutions of `sum x_i gens_i = r`, lexicographically ascending.
///
/// Works for any positive generator list and does not need a membership table.
pub fn enumerate_factorizations(gens: &[i64], r: i64) -> Vec<Factorization> {
    if r < 0 || gens.is_empty() {
        return Vec::new();
    }
    SuffixReach::new(gens, r).factorizations(r)
}

fn validate_generators(gens: &[i64]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
        return Err(Error::NonPositiveGenerator(bad));
    }
    let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    Ok(())
}

/// The unique minimal generating set of the semigroup spanned by `gens`, ascending.
pub fn minimal_generators(gens: &[i64]) -> Result<Vec<i64>> {
    validate_generators(gens)?;
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let max = as_index(*sorted.last().expect("nonempty"));
    let mut reach = vec![false; max + 1];
    reach[0] = true;
    let mut minimal = Vec::new();
    for &g in &sorted {
        let gi = as_index(g);
        if reach[gi] {
            continue;
        }
        minimal.push(g);
        for v in gi..=max {
            if reach[v - gi] {
                reach[v] = true;
            }
        }
    }
    Ok(minimal)
}

/// A numerical semigroup together with its membership table.
///
/// The table covers `0..=frobenius`; everything above is a member. It is
/// built once in [`Semigroup::new`] and never mutated afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    generators: Vec<i64>,
    minimal: Vec<i64>,
    frobenius: i64,
    table: Vec<bool>,
}

impl Semigroup {
    pub fn new(gens: &[i64]) -> Result<Self> {
        let minimal = minimal_generators(gens)?;
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();

        let n1 = as_index(minimal[0]);
        let mut table: Vec<bool> = Vec::new();
        let mut run = 0usize;
        let mut n = 0usize;
        while run < n1 {
            let member = n == 0
                || minimal
                    .iter()
                    .any(|&g| as_index(g) <= n && table[n - as_index(g)]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
            n += 1;
        }
        // the last n1 entries are all members; the gap before them is the Frobenius number
        let frobenius = n as i64 - n1 as i64 - 1;
        table.truncate(as_index(frobenius + 1));

        Ok(Semigroup {
            generators,
            minimal,
            frobenius,
            table,
        })
    }

    /// The generators as supplied (sorted, deduplicated).
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.minimal[0]
    }

    /// Largest integer outside the semigroup; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.frobenius {
            true
        } else {
            self.table[as_index(n)]
        }
    }

    fn require_member(&self, r: i64) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::NotMember(r))
        }
    }

    pub fn factorizations(&self, r: i64) -> Vec<Factorization> {
        if !self.contains(r) {
            return Vec::new();
        }
        enumerate_factorizations(&self.minimal, r)
    }

    pub fn denumerant(&self, r: i64) -> usize {
        self.factorizations(r).len()
    }

    /// Distinct factorization lengths of `r`, ascending.
    pub fn length_set(&self, r: i64) -> Result<Vec<i64>> {
        self.require_member(r)?;
        Ok(lengths_of(&self.factorizations(r)))
    }

    /// `{s in S : s - x not in S}`, ascending; exactly `x` elements.
    pub fn apery(&self, x: i64) -> Result<Vec<i64>> {
        if x <= 0 || !self.contains(x) {
            return Err(Error::InvalidAperyElement(x));
        }
        let top = self
            .frobenius
            .checked_add(x)
            .ok_or(Error::Overflow("Apery window"))?;
        Ok((0..=top)
            .filter(|&s| self.contains(s) && !self.contains(s - x))
            .collect())
    }

    /// `S \ (X + S)`, ascending.
    ///
    /// With `xs` empty the result is all of `S`, so `bound` must be given and
    /// the members in `[0, bound]` are returned. For nonempty `xs` the bound is
    /// ignored: the set is finite and lies inside `Ap(S, min xs)`.
    pub fn apery_multi(&self, xs: &[i64], bound: Option<i64>) -> Result<Vec<i64>> {
        if let Some(&bad) = xs.iter().find(|&&x| x <= 0 || !self.contains(x)) {
            return Err(Error::InvalidAperyElement(bad));
        }
        let top = match xs.iter().min() {
            Some(&m) => self
                .frobenius
                .checked_add(m)
                .ok_or(Error::Overflow("Apery window"))?,
            None => bound.ok_or(Error::UnboundedApery)?,
        };
        Ok((0..=top)
            .filter(|&s| self.contains(s) && xs.iter().all(|&x| !self.contains(s - x)))
            .collect())
    }

    pub fn nabla_graph(&self, r: i64) -> Result<FactorizationGraph> {
        self.require_member(r)?;
        Ok(FactorizationGraph::build(r, self.factorizations(r)))
    }

    /// Default scan bound for Betti elements: `frobenius + n_1 + n_e`.
    ///
    /// Every Betti element has the form `n_i + w` with `w` in `Ap(S, n_1)`,
    /// and `max Ap(S, n_1) = frobenius + n_1`.
    pub fn default_betti_bound(&self) -> i64 {
        self.frobenius + self.multiplicity() + self.minimal[self.minimal.len() - 1]
    }

    pub fn betti_elements(&self) -> BettiClassification {
        self.betti_elements_upto(self.default_betti_bound())
    }

    /// Betti elements in `[0, bound]`, split into balanced and unbalanced.
    pub fn betti_elements_upto(&self, bound: i64) -> BettiClassification {
        let reach = SuffixReach::new(&self.minimal, bound);
        let e = self.minimal.len();
        let mut balanced = Vec::new();
        let mut unbalanced = Vec::new();
        for r in 0..=bound {
            // a disconnected graph needs two factorizations with disjoint supports
            let usable = self
                .minimal
                .iter()
                .filter(|&&g| self.contains(r - g))
                .count();
            if usable < 2 {
                continue;
            }
            let facts = reach.factorizations(r);
            if facts.len() < 2 {
                continue;
            }
            // factorizations joined through shared generator nodes
            let k = facts.len();
            let mut uf = UnionFind::new(k + e);
            for (i, f) in facts.iter().enumerate() {
                for (j, &c) in f.coords().iter().enumerate() {
                    if c > 0 {
                        uf.union(i, k + j);
                    }
                }
            }
            let root = uf.find(0);
            if (1..k).all(|i| uf.find(i) == root) {
                continue;
            }
            if lengths_of(&facts).len() == 1 {
                balanced.push(r);
            } else {
                unbalanced.push(r);
            }
        }
        BettiClassification::from_parts(balanced, unbalanced)
    }

    /// Elements with a unique factorization length, computed as
    /// `Ap(S, UBetti(S))`. `window` is only consulted when there are no
    /// unbalanced Betti elements (the semigroup of naturals).
    pub fn ulf(&self, window: Option<i64>) -> Result<Vec<i64>> {
        self.ulf_from(&self.betti_elements(), window)
    }

    pub fn ulf_from(&self, betti: &BettiClassification, window: Option<i64>) -> Result<Vec<i64>> {
        self.apery_multi(&betti.unbalanced, window)
    }

    /// Brute force: members in `[0, window]` whose length set is a singleton.
    pub fn ulf_by_lengths(&self, window: i64) -> Vec<i64> {
        let reach = SuffixReach::new(&self.minimal, window);
        (0..=window)
            .filter(|&r| self.contains(r) && lengths_of(&reach.factorizations(r)).len() == 1)
            .collect()
    }

    /// The smallest unbalanced Betti element: every member below it has a
    /// unique factorization length and it does not.
    pub fn min_ulf_breaker(&self) -> Result<i64> {
        self.betti_elements()
            .unbalanced
            .first()
            .copied()
            .ok_or(Error::NoUnbalancedBetti)
    }

    /// A minimal presentation read off the factorization graphs of the Betti
    /// elements in `[0, bound]`: for each Betti element, the largest
    /// factorization of its first component is paired with the largest
    /// factorization of every other component.
    pub fn minimal_presentation(&self, bound: Option<i64>) -> Result<Presentation> {
        let bound = bound.unwrap_or_else(|| self.default_betti_bound());
        let mut rels = Vec::new();
        for &b in &self.betti_elements_upto(bound).betti {
            let comps = self.nabla_graph(b)?.components();
            let pick = |c: &Vec<Factorization>| c.last().expect("components are nonempty").clone();
            let head = pick(&comps[0]);
            rels.extend(comps[1..].iter().map(|c| (head.clone(), pick(c))));
        }
        Presentation::new(rels, &self.minimal)
    }
}

pub(crate) fn lengths_of(facts: &[Factorization]) -> Vec<i64> {
    let set: BTreeSet<i64> = facts.iter().map(Factorization::length).collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(c: &[i64]) -> Factorization {
        Factorization::new(c.to_vec())
    }

    fn sg(g: &[i64]) -> Semigroup {
        Semigroup::new(g).unwrap()
    }

    #[test]
    fn minimal_generators_examples() {
        assert_eq!(minimal_generators(&[3, 4, 5, 8]).unwrap(), vec![3, 4, 5]);
        assert_eq!(minimal_generators(&[10, 11, 12]).unwrap(), vec![10, 11, 12]);
        assert_eq!(minimal_generators(&[20, 9, 6]).unwrap(), vec![6, 9, 20]);
        assert_eq!(minimal_generators(&[4, 2, 3, 6]).unwrap(), vec![2, 3]);
    }

    #[test]
    fn minimal_generators_errors() {
        assert_eq!(minimal_generators(&[]), Err(Error::EmptyGenerators));
        assert_eq!(
            minimal_generators(&[0, 3]),
            Err(Error::NonPositiveGenerator(0))
        );
        assert_eq!(minimal_generators(&[4, 6]), Err(Error::GcdNotOne(2)));
    }

    #[test]
    fn membership_examples() {
        let s = sg(&[3, 4, 5]);
        assert!(!s.contains(2));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
        assert!(!sg(&[10, 11, 12]).contains(49));
        assert!(sg(&[10, 11, 12]).contains(50));
    }

    #[test]
    fn minimal_presentation_connects() {
        for g in [&[3, 4, 5][..], &[6, 9, 20], &[10, 11, 12], &[5, 7, 9, 11]] {
            let s = sg(g);
            let p = s.minimal_presentation(None).unwrap();
            let betti = s.betti_elements();
            assert!(p.relations.len() >= betti.betti.len());
            assert_eq!(
                p.first_unconnected(&s, s.frobenius() + 2 * g[g.len() - 1])
                    .unwrap(),
                None
            );
        }
        assert!(sg(&[1])
            .minimal_presentation(None)
            .unwrap()
            .relations
            .is_empty());
        let p = sg(&[10, 11, 12]).minimal_presentation(None).unwrap();
        assert_eq!(
            p.canonical(),
            vec![
                (f(&[0, 0, 5]), f(&[6, 0, 0])),
                (f(&[0, 2, 0]), f(&[1, 0, 1]))
            ]
        );
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(sg(&[3, 4, 5]).frobenius(), 2);
        assert_eq!(sg(&[2, 3]).frobenius(), 1);
        assert_eq!(sg(&[10, 11, 12]).frobenius(), 49);
        assert_eq!(sg(&[1]).frobenius(), -1);
        assert_eq!(sg(&[1, 5]).frobenius(), -1);
        assert_eq!(sg(&[6, 9, 20]).frobenius(), 43);
    }

    #[test]
    fn factorization_examples() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(s.factorizations(8), vec![f(&[0, 2, 0]), f(&[1, 0, 1])]);
        assert_eq!(s.factorizations(0), vec![f(&[0, 0, 0])]);
        assert_eq!(s.factorizations(9), vec![f(&[0, 1, 1]), f(&[3, 0, 0])]);
        assert!(s.factorizations(1).is_empty());
        assert_eq!(s.denumerant(8), 2);
        assert_eq!(s.denumerant(1), 0);
        assert_eq!(sg(&[10, 11, 12]).denumerant(44), 3);
    }

    #[test]
    fn length_set_examples() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(s.length_set(9).unwrap(), vec![2, 3]);
        assert_eq!(s.length_set(0).unwrap(), vec![0]);
        assert_eq!(s.length_set(1), Err(Error::NotMember(1)));
        assert_eq!(sg(&[10, 11, 12]).length_set(60).unwrap(), vec![5, 6]);
    }

    #[test]
    fn apery_examples() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(s.apery(3).unwrap(), vec![0, 4, 5]);
        assert_eq!(s.apery(1), Err(Error::InvalidAperyElement(1)));
        assert_eq!(s.apery(0), Err(Error::InvalidAperyElement(0)));
        assert_eq!(s.apery_multi(&[3], None).unwrap(), s.apery(3).unwrap());
        assert_eq!(s.apery_multi(&[], None), Err(Error::UnboundedApery));
        assert_eq!(s.apery_multi(&[], Some(6)).unwrap(), vec![0, 3, 4, 5, 6]);
        assert_eq!(
            s.apery_multi(&[2], None),
            Err(Error::InvalidAperyElement(2))
        );
    }

    #[test]
    fn apery_multi_is_intersection() {
        let s = sg(&[10, 11, 12]);
        let a22: BTreeSet<i64> = s.apery(22).unwrap().into_iter().collect();
        let a60: BTreeSet<i64> = s.apery(60).unwrap().into_iter().collect();
        let both: Vec<i64> = a22.intersection(&a60).copied().collect();
        assert_eq!(s.apery_multi(&[22, 60], None).unwrap(), both);
        assert!(both.len() <= 22);
    }

    #[test]
    fn nabla_graph_examples() {
        let s = sg(&[3, 4, 5]);
        let g = s.nabla_graph(8).unwrap();
        assert_eq!(
            (g.vertices.len(), g.edges.len(), g.component_count()),
            (2, 0, 2)
        );
        let g = s.nabla_graph(3).unwrap();
        assert_eq!((g.vertices.len(), g.component_count()), (1, 1));
        assert_eq!(s.nabla_graph(2), Err(Error::NotMember(2)));

        let g = sg(&[10, 11, 12]).nabla_graph(22).unwrap();
        assert_eq!(
            g.components(),
            vec![vec![f(&[0, 2, 0])], vec![f(&[1, 0, 1])]]
        );
    }

    #[test]
    fn betti_examples() {
        let b = sg(&[10, 11, 12]).betti_elements();
        assert_eq!(b.betti, vec![22, 60]);
        assert_eq!(b.balanced, vec![22]);
        assert_eq!(b.unbalanced, vec![60]);
        assert_eq!(sg(&[15, 16, 17]).betti_elements().betti, vec![32, 135, 136]);
        assert_eq!(sg(&[9, 10, 11]).betti_elements().betti, vec![20, 54, 55]);
        assert_eq!(sg(&[1]).betti_elements(), BettiClassification::default());
    }

    #[test]
    fn betti_scan_matches_explicit_graph() {
        let s = sg(&[6, 9, 20]);
        let b = s.betti_elements();
        for r in 0..=s.default_betti_bound() {
            let disconnected = s.contains(r) && !s.nabla_graph(r).unwrap().is_connected();
            assert_eq!(disconnected, b.betti.contains(&r), "r = {r}");
        }
    }

    #[test]
    fn ulf_examples() {
        let s = sg(&[10, 11, 12]);
        assert_eq!(s.ulf(None).unwrap(), s.apery(60).unwrap());
        assert_eq!(sg(&[2, 3]).ulf(None).unwrap(), vec![0, 2, 3, 4, 5, 7]);
        assert_eq!(sg(&[1]).ulf(None), Err(Error::UnboundedApery));
        assert_eq!(sg(&[1]).ulf(Some(3)).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn min_ulf_breaker_examples() {
        assert_eq!(sg(&[3, 4, 5]).min_ulf_breaker().unwrap(), 9);
        assert_eq!(sg(&[10, 11, 12]).min_ulf_breaker().unwrap(), 60);
        assert_eq!(sg(&[15, 16, 17]).min_ulf_breaker().unwrap(), 135);
        assert_eq!(sg(&[1]).min_ulf_breaker(), Err(Error::NoUnbalancedBetti));
    }

    #[test]
    fn presentation_rejects_bad_pairs() {
        let gens = [3, 4, 5];
        assert!(Presentation::new(vec![(f(&[0, 2, 0]), f(&[1, 0, 1]))], &gens).is_ok());
        assert!(Presentation::new(vec![(f(&[0, 2, 0]), f(&[0, 2, 0]))], &gens).is_err());
        assert!(Presentation::new(vec![(f(&[0, 2, 0]), f(&[2, 0, 0]))], &gens).is_err());
    }

    #[test]
    fn value_overflow_is_reported() {
        let x = f(&[i64::MAX / 2, 0]);
        assert_eq!(
            x.value(&[3, 1]),
            Err(Error::Overflow("factorization value"))
        );
    }
}
