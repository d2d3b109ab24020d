//! Closed forms for `S = <a, a+1, a+2>` with `a >= 3`.
//!
//! Everything is O(1) or O(a^2) arithmetic on the seed vector of `r`:
//! write `r = a*l + e` with `0 <= e < a`, then
//! `seed = (l - ceil(e/2), e mod 2, floor(e/2))` is a factorization exactly
//! when `e <= 2l`, and for elements with a unique factorization length all
//! other factorizations are `seed + j*(-1, 2, -1)`.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{BettiClassification, Factorization, Presentation, Semigroup};

/// The trade vector `(-1, 2, -1)`: `-a + 2(a+1) - (a+2) = 0`.
pub const OMEGA: [i64; 3] = [-1, 2, -1];

/// `base + j * OMEGA`, or `None` if a coordinate goes negative.
pub fn omega_step(base: [i64; 3], j: i64) -> Option<[i64; 3]> {
    let v = [base[0] - j, base[1] + 2 * j, base[2] - j];
    v.iter().all(|&x| x >= 0).then_some(v)
}

/// `Gamma_0 = {0}`, `Gamma_1 = {-1, 0, 1}`, `Gamma_i = {-i, -i+1, i-1, i}`.
pub fn gamma(i: i64) -> Result<Vec<i64>> {
    match i {
        i if i < 0 => Err(Error::InvalidParameter(format!(
            "Gamma index must be >= 0, got {i}"
        ))),
        0 => Ok(vec![0]),
        1 => Ok(vec![-1, 0, 1]),
        i => Ok(vec![-i, -i + 1, i - 1, i]),
    }
}

/// Invariants of `r` derived from its seed vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedDescriptor {
    pub r: i64,
    /// `floor(r / a)`.
    pub ell: i64,
    /// `r mod a`.
    pub eps: i64,
    pub phi: [i64; 3],
    pub kappa: i64,
    pub xi: i64,
    pub iota: i64,
    pub c: i64,
}

impl SeedDescriptor {
    pub fn new(a: i64, r: i64) -> Self {
        let ell = r.div_euclid(a);
        let eps = r.rem_euclid(a);
        let phi = [ell - (eps + 1) / 2, eps % 2, eps / 2];
        SeedDescriptor {
            r,
            ell,
            eps,
            phi,
            kappa: phi[0].min(phi[2]),
            xi: phi[0].max(phi[2]),
            iota: phi[1] + (phi[0] - phi[2]).abs(),
            c: phi[2] - phi[0],
        }
    }

    /// True when the seed has no negative coordinate, i.e. `eps <= 2*ell`.
    pub fn is_factorization(&self) -> bool {
        self.phi.iter().all(|&x| x >= 0)
    }

    /// `seed + j*OMEGA` for `j = 0..=kappa`, in order of `j`.
    pub fn chain(&self) -> Vec<[i64; 3]> {
        (0..=self.kappa)
            .map(|j| omega_step(self.phi, j).expect("j <= kappa keeps the seed non-negative"))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleDecomposition {
    /// Denumerant.
    pub d: i64,
    pub i: i64,
    pub c: i64,
}

/// `r = lambda*a + mu*(a+1) + eta*(a+2)` with `mu` in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UlfElement {
    pub r: i64,
    pub lambda: i64,
    pub mu: i64,
    pub eta: i64,
}

impl UlfElement {
    pub fn coords(&self) -> [i64; 3] {
        [self.lambda, self.mu, self.eta]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialStyle {
    /// `x^2yz`
    #[default]
    Ascii,
    /// `x²yz`
    Unicode,
}

fn superscript(n: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

/// Renders `x^e1 y^e2 z^e3`; exponent 1 is omitted, exponent 0 drops the
/// variable and the zero vector is `1`.
pub fn render_monomial(exps: [i64; 3], style: MonomialStyle) -> String {
    let mut out = String::new();
    for (var, e) in ['x', 'y', 'z'].into_iter().zip(exps) {
        match e {
            0 => {}
            1 => out.push(var),
            e => {
                out.push(var);
                match style {
                    MonomialStyle::Ascii => {
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                    MonomialStyle::Unicode => out.push_str(&superscript(e)),
                }
            }
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// The semigroup `<a, a+1, a+2>`, `a >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleSemigroup {
    a: i64,
}

impl TripleSemigroup {
    pub fn new(a: i64) -> Result<Self> {
        match a {
            a if a <= 0 => Err(Error::InvalidParameter(format!(
                "a must be positive, got {a}"
            ))),
            1 => Err(Error::InvalidParameter(
                "a = 1 gives the naturals, which are factorial; closed forms need a >= 3".into(),
            )),
            2 => Err(Error::InvalidParameter(
                "a = 2 gives <2,3>, which is length-factorial; closed forms need a >= 3".into(),
            )),
            a => {
                // every element handled here is at most a few multiples of (a+2)^2
                (a + 2)
                    .checked_mul(a + 2)
                    .and_then(|x| x.checked_mul(4))
                    .ok_or(Error::Overflow("triple semigroup bounds"))?;
                Ok(TripleSemigroup { a })
            }
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn generators(&self) -> [i64; 3] {
        [self.a, self.a + 1, self.a + 2]
    }

    /// The generic engine for the same semigroup.
    pub fn semigroup(&self) -> Semigroup {
        Semigroup::new(&self.generators()).expect("a, a+1, a+2 generate a numerical semigroup")
    }

    fn half(&self) -> i64 {
        self.a / 2
    }

    /// `L = floor((a-1)/2)`: last row of the partition table.
    pub fn max_table_length(&self) -> i64 {
        (self.a - 1) / 2
    }

    /// `D = floor((a+3)/4)`: last column of the partition table.
    pub fn max_table_denumerant(&self) -> i64 {
        (self.a + 3) / 4
    }

    pub fn frobenius(&self) -> i64 {
        self.half() * self.a - 1
    }

    /// Smallest element with factorizations of two different lengths.
    pub fn ulf_bound(&self) -> i64 {
        if self.a % 2 == 0 {
            self.half() * (self.a + 2)
        } else {
            (self.half() + 2) * self.a
        }
    }

    pub fn seed(&self, r: i64) -> SeedDescriptor {
        SeedDescriptor::new(self.a, r)
    }

    /// `r in S` iff `r mod a <= 2 floor(r/a)`.
    pub fn contains(&self, r: i64) -> bool {
        r >= 0 && r % self.a <= 2 * (r / self.a)
    }

    fn require_member(&self, r: i64) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::NotMember(r))
        }
    }

    fn require_below_bound(&self, r: i64) -> Result<()> {
        self.require_member(r)?;
        if r < self.ulf_bound() {
            Ok(())
        } else {
            Err(Error::OutsideClosedForm(format!(
                "{r} is not below {}, the first element with two factorization lengths",
                self.ulf_bound()
            )))
        }
    }

    pub fn presentation(&self) -> Presentation {
        let a = self.a;
        let (b, c) = if a % 2 == 0 {
            (2, (a - 2) / 2)
        } else {
            (1, (a - 1) / 2)
        };
        let f = |v: [i64; 3]| Factorization::new(v.to_vec());
        let mut rels = vec![(f([0, 2, 0]), f([1, 0, 1]))];
        if b == 2 {
            rels.push((f([c + 2, 0, 0]), f([0, 0, c + 1])));
        } else {
            rels.push((f([c + 1, 1, 0]), f([0, 0, c + 1])));
            rels.push((f([c + 2, 0, 0]), f([0, 1, c])));
        }
        Presentation::new(rels, &self.generators()).expect("relators have equal values")
    }

    pub fn betti(&self) -> BettiClassification {
        BettiClassification::from_parts(vec![2 * (self.a + 1)], self.unbalanced_betti())
    }

    fn unbalanced_betti(&self) -> Vec<i64> {
        let a = self.a;
        let k = self.half();
        if a % 2 == 0 {
            vec![k * (a + 2)]
        } else {
            vec![(k + 2) * a, (k + 1) * (a + 2)]
        }
    }

    /// `r` is a member and `r - u` is not, for every unbalanced Betti element `u`.
    pub fn in_ulf(&self, r: i64) -> bool {
        self.contains(r)
            && self
                .unbalanced_betti()
                .iter()
                .all(|&u| !self.contains(r - u))
    }

    fn in_coordinate_box(&self, [lambda, mu, eta]: [i64; 3]) -> bool {
        let k = self.half();
        if !(0..=1).contains(&mu) || lambda < 0 || eta < 0 {
            return false;
        }
        if self.a % 2 == 0 {
            lambda <= k && eta < k
        } else {
            lambda <= k + 1 - mu && eta <= k - mu
        }
    }

    /// Canonical `(lambda, mu, eta)` coordinates of `r`, if `r` has a unique
    /// factorization length.
    ///
    /// On that set the factorization with middle coordinate in `{0, 1}` is
    /// unique and has length `floor(r/a)`, so it is the seed vector; `r` is in
    /// the set iff the seed lands in the coordinate box.
    pub fn ulf_element(&self, r: i64) -> Option<UlfElement> {
        let seed = self.seed(r);
        (r >= 0 && self.in_coordinate_box(seed.phi)).then_some(UlfElement {
            r,
            lambda: seed.phi[0],
            mu: seed.phi[1],
            eta: seed.phi[2],
        })
    }

    /// Every element with a unique factorization length, ascending.
    pub fn ulf(&self) -> Vec<UlfElement> {
        let a = self.a;
        let k = self.half();
        let mut out = Vec::new();
        for mu in 0..=1 {
            let (lambda_max, eta_max) = if a % 2 == 0 {
                (k, k - 1)
            } else {
                (k + 1 - mu, k - mu)
            };
            for lambda in 0..=lambda_max {
                for eta in 0..=eta_max {
                    let r = lambda * a + mu * (a + 1) + eta * (a + 2);
                    out.push(UlfElement { r, lambda, mu, eta });
                }
            }
        }
        out.sort();
        out
    }

    /// Closed-form factorization set, defined on elements with a unique
    /// factorization length. Lexicographically ascending.
    pub fn ulf_factorizations(&self, r: i64) -> Result<Vec<Factorization>> {
        self.require_member(r)?;
        if !self.in_ulf(r) {
            return Err(Error::OutsideClosedForm(format!(
                "{r} has factorizations of different lengths"
            )));
        }
        let mut facts: Vec<Factorization> = self
            .seed(r)
            .chain()
            .into_iter()
            .map(|v| Factorization::new(v.to_vec()))
            .collect();
        facts.reverse();
        Ok(facts)
    }

    /// Closed form where available, enumeration otherwise.
    pub fn factorizations(&self, r: i64) -> Result<Vec<Factorization>> {
        match self.ulf_factorizations(r) {
            Err(Error::OutsideClosedForm(_)) => Ok(crate::semigroup::enumerate_factorizations(
                &self.generators(),
                r,
            )),
            other => other,
        }
    }

    /// `kappa + 1`, for members below [`Self::ulf_bound`].
    pub fn denumerant(&self, r: i64) -> Result<i64> {
        self.require_below_bound(r)?;
        Ok(self.seed(r).kappa + 1)
    }

    /// The unique factorization length `floor(r/a)`.
    pub fn length(&self, r: i64) -> Result<i64> {
        self.require_member(r)?;
        if !self.in_ulf(r) {
            return Err(Error::OutsideClosedForm(format!(
                "{r} has factorizations of different lengths"
            )));
        }
        let seed = self.seed(r);
        debug_assert!(r >= self.ulf_bound() || seed.ell == 2 * seed.kappa + seed.iota);
        Ok(seed.ell)
    }

    /// `(d, i, c)` with `r = (a+1)(2d-2+i) + c`, `c` in `Gamma_i`.
    pub fn decompose(&self, r: i64) -> Result<TripleDecomposition> {
        self.require_below_bound(r)?;
        let seed = self.seed(r);
        Ok(TripleDecomposition {
            d: seed.kappa + 1,
            i: seed.iota,
            c: seed.c,
        })
    }

    /// Elements whose factorizations all have length `ell`, as one interval;
    /// `None` when empty (`ell > a`).
    pub fn s_ell(&self, ell: i64) -> Result<Option<RangeInclusive<i64>>> {
        if ell < 0 {
            return Err(Error::InvalidParameter(format!(
                "length must be >= 0, got {ell}"
            )));
        }
        let a = self.a;
        if ell > a {
            return Ok(None);
        }
        let k = self.half();
        let range = if a % 2 == 0 {
            if ell < k {
                ell * a..=ell * (a + 2)
            } else if ell == k {
                k * a..=(a + 1) + (k - 1) * (a + 2)
            } else {
                k * a + (a + 1) + (ell - k - 1) * (a + 2)
                    ..=(ell - k) * a + (a + 1) + (k - 1) * (a + 2)
            }
        } else if ell <= k {
            ell * a..=ell * (a + 2)
        } else if ell == k + 1 {
            (k + 1) * a..=a + k * (a + 2)
        } else {
            (k + 1) * a + (ell - k - 1) * (a + 2)..=(ell - k) * a + k * (a + 2)
        };
        Ok(Some(range))
    }

    /// `S_{d,i} = {(a+1)(2d-2+i) + c : c in Gamma_i}` for
    /// `1 <= d <= D`, `0 <= i <= L + 2 - 2d`.
    pub fn s_d_i(&self, d: i64, i: i64) -> Result<Vec<i64>> {
        let d_max = self.max_table_denumerant();
        if !(1..=d_max).contains(&d) {
            return Err(Error::InvalidParameter(format!(
                "d must be in [1, {d_max}], got {d}"
            )));
        }
        let i_max = self.max_table_length() + 2 - 2 * d;
        if !(0..=i_max).contains(&i) {
            return Err(Error::InvalidParameter(format!(
                "i must be in [0, {i_max}], got {i}"
            )));
        }
        let base = (self.a + 1) * (2 * d - 2 + i);
        Ok(gamma(i)?.into_iter().map(|c| base + c).collect())
    }

    /// Elements with denumerant `d` and a unique factorization length, ascending.
    pub fn s_d_ulf(&self, d: i64) -> Result<Vec<i64>> {
        let a = self.a;
        let top = (a + 1) / 2;
        if !(1..=top).contains(&d) {
            return Err(Error::InvalidParameter(format!(
                "d must be in [1, {top}], got {d}"
            )));
        }
        let k = self.half();
        let value = |lambda: i64, mu: i64, eta: i64| lambda * a + mu * (a + 1) + eta * (a + 2);
        let mut out = Vec::new();
        if a % 2 == 1 && d == k + 1 {
            out.push(value(k, 0, k));
            out.push(value(k + 1, 0, k));
        } else {
            for mu in 0..=1 {
                let (lambda_max, eta_max) = if a % 2 == 0 {
                    (k, k - 1)
                } else {
                    (k + 1 - mu, k - mu)
                };
                for eta in d - 1..=eta_max {
                    out.push(value(d - 1, mu, eta));
                }
                for lambda in d..=lambda_max {
                    out.push(value(lambda, mu, d - 1));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Monomials `x^i y^j z^k` of the factorizations of `r`, in chain order.
    pub fn monomial_basis(&self, r: i64, style: MonomialStyle) -> Result<Vec<String>> {
        self.require_below_bound(r)?;
        Ok(self
            .seed(r)
            .chain()
            .into_iter()
            .map(|v| render_monomial(v, style))
            .collect())
    }
}
