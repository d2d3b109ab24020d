//! Betti elements and minimal presentations of `<a, a+d, ..., a+nd>`.
//!
//! Generators are `e_1 .. e_{n+1}` with `e_i -> a + (i-1)d`. Write
//! `a = c*n + b` with `c >= 1` and `1 <= b <= n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{gcd, Factorization, Presentation, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithSemigroup {
    a: i64,
    d: i64,
    n: i64,
    c: i64,
    b: i64,
}

impl ArithSemigroup {
    pub fn new(a: i64, d: i64, n: i64) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidParameter(format!(
                "a must be at least 2, got {a}"
            )));
        }
        if d < 1 {
            return Err(Error::InvalidParameter(format!(
                "d must be positive, got {d}"
            )));
        }
        if gcd(a, d) != 1 {
            return Err(Error::GcdNotOne(gcd(a, d)));
        }
        if !(1..a).contains(&n) {
            return Err(Error::InvalidParameter(format!(
                "n must be in [1, {}], got {n}",
                a - 1
            )));
        }
        n.checked_mul(d)
            .and_then(|x| x.checked_add(a))
            .and_then(|top| top.checked_mul(a + d))
            .ok_or(Error::Overflow("arithmetic sequence generators"))?;
        let c = (a - 1) / n;
        let b = a - c * n;
        Ok(ArithSemigroup { a, d, n, c, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// `(c, b)` with `a = c*n + b`, `1 <= b <= n`.
    pub fn quotient_remainder(&self) -> (i64, i64) {
        (self.c, self.b)
    }

    pub fn generators(&self) -> Vec<i64> {
        (0..=self.n).map(|i| self.a + i * self.d).collect()
    }

    pub fn semigroup(&self) -> Semigroup {
        Semigroup::new(&self.generators()).expect("validated arithmetic sequence")
    }

    /// `sum counts[k] * e_{k}` with 1-based indices.
    fn unit_combination(&self, terms: &[(i64, i64)]) -> Factorization {
        let mut coords = vec![0; (self.n + 1) as usize];
        for &(coef, idx) in terms {
            coords[(idx - 1) as usize] += coef;
        }
        Factorization::new(coords)
    }

    /// Range of `k` for the unbalanced relators, `3..=n+3-b`.
    fn unbalanced_range(&self) -> std::ops::RangeInclusive<i64> {
        3..=self.n + 3 - self.b
    }

    pub fn presentation(&self) -> Presentation {
        let (n, c, d, b) = (self.n, self.c, self.d, self.b);
        let mut rels = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                rels.push((
                    self.unit_combination(&[(1, i), (1, j + 1)]),
                    self.unit_combination(&[(1, j), (1, i + 1)]),
                ));
            }
        }
        for k in self.unbalanced_range() {
            rels.push((
                self.unit_combination(&[(c + d, 1), (1, k - 2)]),
                self.unit_combination(&[(c, n + 1), (1, b + k - 2)]),
            ));
        }
        Presentation::new(rels, &self.generators()).expect("relators have equal values")
    }

    pub fn betti(&self) -> Vec<i64> {
        let (a, d, n) = (self.a, self.d, self.n);
        let mut out: Vec<i64> = (0..=n - 2)
            .flat_map(|i| (i + 1..=n - 1).map(move |j| (a + i * d) + (a + (j + 1) * d)))
            .chain(self.unbalanced_betti())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn unbalanced_betti(&self) -> Vec<i64> {
        let (a, c, d) = (self.a, self.c, self.d);
        let mut out: Vec<i64> = self
            .unbalanced_range()
            .map(|k| (c + d) * a + (a + (k - 3) * d))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The two factorizations of each unbalanced Betti element, of lengths
    /// `c + d + 1` and `c + 1`.
    pub fn unbalanced_witnesses(&self) -> Vec<(i64, Factorization, Factorization)> {
        let (a, c, d, n, b) = (self.a, self.c, self.d, self.n, self.b);
        self.unbalanced_range()
            .map(|k| {
                (
                    (c + d) * a + (a + (k - 3) * d),
                    self.unit_combination(&[(c + d, 1), (1, k - 2)]),
                    self.unit_combination(&[(c, n + 1), (1, b + k - 2)]),
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triple::TripleSemigroup;

    fn ar(a: i64, d: i64, n: i64) -> ArithSemigroup {
        ArithSemigroup::new(a, d, n).unwrap()
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(ArithSemigroup::new(10, 2, 2).is_err());
        assert!(ArithSemigroup::new(10, 1, 10).is_err());
        assert!(ArithSemigroup::new(10, 1, 0).is_err());
        assert!(ArithSemigroup::new(10, 0, 2).is_err());
        assert!(ArithSemigroup::new(1, 1, 1).is_err());
    }

    #[test]
    fn quotient_remainder() {
        assert_eq!(ar(10, 1, 2).quotient_remainder(), (4, 2));
        assert_eq!(ar(15, 1, 2).quotient_remainder(), (7, 1));
        assert_eq!(ar(7, 2, 3).quotient_remainder(), (2, 1));
        assert_eq!(ar(9, 1, 3).quotient_remainder(), (2, 3));
    }

    #[test]
    fn presentation_matches_triple_up_to_order() {
        for a in [3, 4, 9, 10, 15] {
            let from_arith = ar(a, 1, 2).presentation().canonical();
            let from_triple = TripleSemigroup::new(a).unwrap().presentation().canonical();
            assert_eq!(from_arith, from_triple, "a = {a}");
        }
    }

    #[test]
    fn betti_examples() {
        assert_eq!(ar(10, 1, 2).betti(), vec![22, 60]);
        assert_eq!(ar(9, 1, 2).betti(), vec![20, 54, 55]);
        assert_eq!(ar(10, 1, 2).unbalanced_betti(), vec![60]);
        assert_eq!(ar(15, 1, 2).unbalanced_betti(), vec![135, 136]);
    }

    #[test]
    fn small_cases_match_oracle() {
        for (a, d, n) in [(5, 2, 2), (7, 2, 3)] {
            let s = ar(a, d, n);
            let oracle = s.semigroup().betti_elements();
            assert_eq!(s.betti(), oracle.betti, "({a},{d},{n})");
            assert_eq!(s.unbalanced_betti(), oracle.unbalanced, "({a},{d},{n})");
        }
    }

    #[test]
    fn witnesses_have_expected_lengths() {
        let s = ar(7, 2, 3);
        let (c, _) = s.quotient_remainder();
        for (u, x, y) in s.unbalanced_witnesses() {
            assert_eq!(x.value(&s.generators()).unwrap(), u);
            assert_eq!(y.value(&s.generators()).unwrap(), u);
            assert_eq!((x.length(), y.length()), (c + s.d() + 1, c + 1));
        }
    }
}
