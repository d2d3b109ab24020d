//! Sweeps comparing the closed forms against brute-force enumeration.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::ArithSemigroup;
use crate::error::{Error, Result};
use crate::semigroup::{gcd, minimal_generators, Semigroup};
use crate::triple::TripleSemigroup;

pub const THREADS_ENV: &str = "SGP_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub a_min: i64,
    pub a_max: i64,
    /// Extra window above the first two-length element; `None` means `3a`.
    pub r_margin: Option<i64>,
    pub arith: Option<ArithGrid>,
    pub random_samples: usize,
    pub random_max_generator: i64,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            a_min: 3,
            a_max: 25,
            r_margin: None,
            arith: Some(ArithGrid::default()),
            random_samples: 30,
            random_max_generator: 30,
            seed: 0,
        }
    }
}

/// All coprime `(a, d)` with `a` in `[a_min, a_max]`, `d` in `[1, d_max]`,
/// and `n` in `[n_min, min(n_max, a-1)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArithGrid {
    pub a_min: i64,
    pub a_max: i64,
    pub d_max: i64,
    pub n_min: i64,
    pub n_max: i64,
}

impl Default for ArithGrid {
    fn default() -> Self {
        ArithGrid {
            a_min: 5,
            a_max: 20,
            d_max: 3,
            n_min: 2,
            n_max: 4,
        }
    }
}

impl ArithGrid {
    pub fn cases(&self) -> Vec<(i64, i64, i64)> {
        let mut out = Vec::new();
        for a in self.a_min..=self.a_max {
            for d in 1..=self.d_max {
                if gcd(a, d) != 1 {
                    continue;
                }
                for n in self.n_min..=self.n_max.min(a - 1) {
                    out.push((a, d, n));
                }
            }
        }
        out
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.a_min < 3 || self.a_min > self.a_max {
            return Err(Error::InvalidParameter(format!(
                "sweep range [{}, {}] must be nonempty with a_min >= 3",
                self.a_min, self.a_max
            )));
        }
        if self.r_margin.is_some_and(|m| m < 0) {
            return Err(Error::InvalidParameter("r_margin must be >= 0".into()));
        }
        if let Some(g) = self.arith {
            if g.a_min < 2 || g.a_min > g.a_max || g.d_max < 1 || g.n_min < 1 || g.n_min > g.n_max {
                return Err(Error::InvalidParameter(format!(
                    "invalid arithmetic grid {g:?}"
                )));
            }
        }
        if self.random_samples > 0 && self.random_max_generator < 3 {
            return Err(Error::InvalidParameter(
                "random generators need an upper bound of at least 3".into(),
            ));
        }
        Ok(())
    }
}

/// A failed check. Ordering puts the smallest case first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Mismatch {
    pub family: String,
    pub case: Vec<i64>,
    pub r: Option<i64>,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.family, self.case)?;
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        write!(
            f,
            ": {} expected {} got {}",
            self.check, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: u64,
    pub mismatches: Vec<Mismatch>,
    /// `(a, L_a)` for every triple whose boundary element was checked.
    pub boundaries: Vec<(i64, i64)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn first_counterexample(&self) -> Option<&Mismatch> {
        self.mismatches.first()
    }

    fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.checks += other.checks;
        self.mismatches.extend(other.mismatches);
        self.boundaries.extend(other.boundaries);
        self
    }

    fn finish(mut self) -> VerifyReport {
        self.mismatches.sort();
        self.boundaries.sort_unstable();
        self
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_counterexample() {
            None => write!(f, "PASS ({} checks)", self.checks),
            Some(m) => write!(
                f,
                "FAIL ({} of {} checks)\ncounterexample: {m}",
                self.mismatches.len(),
                self.checks
            ),
        }
    }
}

struct Recorder<'a> {
    family: &'a str,
    case: Vec<i64>,
    report: VerifyReport,
}

impl<'a> Recorder<'a> {
    fn new(family: &'a str, case: Vec<i64>) -> Self {
        Recorder {
            family,
            case,
            report: VerifyReport::default(),
        }
    }

    fn check<T: PartialEq + fmt::Debug>(
        &mut self,
        r: Option<i64>,
        what: &str,
        expected: T,
        actual: T,
    ) {
        self.report.checks += 1;
        if expected != actual {
            self.report.mismatches.push(Mismatch {
                family: self.family.to_string(),
                case: self.case.clone(),
                r,
                check: what.to_string(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }
}

/// Thread count from `SGP_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Runs every configured sweep. Parallelism is capped by `SGP_THREADS`; the
/// report does not depend on the thread count.
pub fn run(config: &SweepConfig) -> Result<VerifyReport> {
    config.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads_from_env() {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| {
        let triples = (config.a_min..=config.a_max)
            .into_par_iter()
            .map(|a| check_triple(a, config.r_margin.unwrap_or(3 * a)))
            .collect::<Result<Vec<_>>>()?;
        let ariths = match config.arith {
            Some(grid) => grid
                .cases()
                .into_par_iter()
                .map(|(a, d, n)| check_arith(a, d, n))
                .collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };
        let randoms = random_semigroups(
            config.random_samples,
            config.random_max_generator,
            config.seed,
        )
        .into_par_iter()
        .map(|gens| check_ulf_apery(&gens))
        .collect::<Result<Vec<_>>>()?;
        Ok(triples
            .into_iter()
            .chain(ariths)
            .chain(randoms)
            .fold(VerifyReport::default(), VerifyReport::merge)
            .finish())
    })
}

/// Closed forms for `<a, a+1, a+2>` against enumeration on
/// `[0, L_a + r_margin]`.
pub fn check_triple(a: i64, r_margin: i64) -> Result<VerifyReport> {
    let t = TripleSemigroup::new(a)?;
    let s = t.semigroup();
    let bound = t.ulf_bound();
    let mut rec = Recorder::new("triple", vec![a]);

    rec.check(None, "frobenius", s.frobenius(), t.frobenius());
    let betti = s.betti_elements();
    let closed = t.betti();
    rec.check(None, "betti", &betti.betti, &closed.betti);
    rec.check(
        None,
        "unbalanced betti",
        &betti.unbalanced,
        &closed.unbalanced,
    );

    let top = bound + r_margin;
    let mut oracle_ulf = Vec::new();
    for r in 0..=top {
        let member = s.contains(r);
        rec.check(Some(r), "membership", member, t.contains(r));
        if !member {
            continue;
        }
        let facts = s.factorizations(r);
        let lengths = s.length_set(r)?;
        let unique_length = lengths.len() == 1;
        if unique_length {
            oracle_ulf.push(r);
        }
        rec.check(Some(r), "unique length", unique_length, t.in_ulf(r));
        rec.check(
            Some(r),
            "canonical coordinates",
            unique_length,
            t.ulf_element(r).is_some(),
        );
        if r >= bound {
            continue;
        }
        rec.check(Some(r), "factorizations", &facts, &t.factorizations(r)?);
        rec.check(Some(r), "denumerant", facts.len() as i64, t.denumerant(r)?);
        rec.check(Some(r), "length", vec![r / a], lengths.clone());
        rec.check(Some(r), "length", lengths[0], t.length(r)?);
        let dec = t.decompose(r)?;
        let ell = lengths[0];
        rec.check(
            Some(r),
            "decompose",
            (
                facts.len() as i64,
                ell + 2 - 2 * facts.len() as i64,
                r - (a + 1) * ell,
            ),
            (dec.d, dec.i, dec.c),
        );
    }

    rec.check(
        Some(bound),
        "first two-length element",
        false,
        t.in_ulf(bound),
    );
    rec.check(
        Some(bound),
        "first two-length element",
        2,
        s.length_set(bound)?.len(),
    );
    rec.report.boundaries.push((a, bound));
    let below: Vec<i64> = (0..bound).filter(|&r| s.contains(r)).collect();
    rec.check(
        Some(bound),
        "members below the bound have one length",
        below.len(),
        below.iter().filter(|&&r| t.in_ulf(r)).count(),
    );
    let closed_ulf: Vec<i64> = t.ulf().into_iter().map(|e| e.r).collect();
    let in_window: Vec<i64> = closed_ulf.iter().copied().filter(|&r| r <= top).collect();
    rec.check(None, "ulf in window", &oracle_ulf, &in_window);
    rec.check(None, "ulf via Apery", &s.ulf(None)?, &closed_ulf);
    Ok(rec.report)
}

/// Closed-form Betti data for `<a, a+d, ..., a+nd>` against enumeration.
pub fn check_arith(a: i64, d: i64, n: i64) -> Result<VerifyReport> {
    let ar = ArithSemigroup::new(a, d, n)?;
    let s = ar.semigroup();
    let mut rec = Recorder::new("arith", vec![a, d, n]);
    let oracle = s.betti_elements();
    rec.check(None, "betti", oracle.betti.clone(), ar.betti());
    rec.check(
        None,
        "unbalanced betti",
        oracle.unbalanced.clone(),
        ar.unbalanced_betti(),
    );
    let gens = ar.generators();
    let window = s.frobenius() + 2 * gens[gens.len() - 1];
    rec.check(
        None,
        "presentation connects every factorization graph",
        None,
        ar.presentation().first_unconnected(&s, window)?,
    );
    Ok(rec.report)
}

/// `Ap(S, UBetti(S))` against the elements with a singleton length set, and
/// the smallest unbalanced Betti element against the first element with two
/// lengths.
pub fn check_ulf_apery(gens: &[i64]) -> Result<VerifyReport> {
    let s = Semigroup::new(gens)?;
    let mut rec = Recorder::new("random", s.minimal_generators().to_vec());
    let betti = s.betti_elements();
    let ulf = s.ulf_from(&betti, None)?;
    let max = *ulf.last().expect("ULF contains 0");
    let window = max + 2 * s.default_betti_bound();
    rec.check(None, "ulf", ulf.clone(), s.ulf_by_lengths(window));
    let breaker = s.min_ulf_breaker()?;
    let first_two_lengths = (0..=window).find(|&r| s.contains(r) && !ulf.contains(&r));
    rec.check(
        None,
        "smallest unbalanced betti",
        Some(breaker),
        first_two_lengths,
    );
    Ok(rec.report)
}

/// `count` generator lists with 2 to 4 minimal generators, each at most
/// `max_generator`, drawn from a fixed seed.
pub fn random_semigroups(count: usize, max_generator: i64, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(2..=4);
        let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=max_generator)).collect();
        if gens.iter().copied().fold(0, gcd) != 1 {
            continue;
        }
        let minimal = minimal_generators(&gens).expect("positive generators with gcd 1");
        if (2..=4).contains(&minimal.len()) {
            out.push(minimal);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let config = SweepConfig {
            a_min: 3,
            a_max: 8,
            arith: Some(ArithGrid {
                a_min: 5,
                a_max: 7,
                d_max: 2,
                n_min: 2,
                n_max: 3,
            }),
            random_samples: 5,
            ..SweepConfig::default()
        };
        let report = run(&config).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.to_string().starts_with("PASS ("));
    }

    #[test]
    fn three_has_nine_outside_ulf() {
        let report = check_triple(3, 9).unwrap();
        assert!(report.passed());
        assert_eq!(report.boundaries, vec![(3, 9)]);
    }

    #[test]
    fn random_draws_are_reproducible() {
        let a = random_semigroups(10, 30, 7);
        assert_eq!(a, random_semigroups(10, 30, 7));
        for g in &a {
            assert!((2..=4).contains(&g.len()));
            assert!(g.iter().all(|&x| x <= 30));
        }
    }

    #[test]
    fn invalid_ranges_are_rejected() {
        let bad = SweepConfig {
            a_min: 9,
            a_max: 4,
            ..SweepConfig::default()
        };
        assert!(run(&bad).is_err());
    }

    #[test]
    fn mismatches_sort_smallest_first() {
        let mut report = VerifyReport::default();
        for a in [9, 4] {
            report.mismatches.push(Mismatch {
                family: "triple".into(),
                case: vec![a],
                r: Some(1),
                check: "x".into(),
                expected: "1".into(),
                actual: "2".into(),
            });
        }
        let report = report.finish();
        assert_eq!(report.first_counterexample().unwrap().case, vec![4]);
        assert!(report
            .to_string()
            .contains("counterexample: triple [4] r=1"));
    }
}
