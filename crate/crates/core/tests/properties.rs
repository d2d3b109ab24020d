use proptest::prelude::*;

use sgp_core::render::PartitionTable;
use sgp_core::triple::{gamma, OMEGA};
use sgp_core::verify::check_ulf_apery;
use sgp_core::{monomial_table, partition_table, MonomialStyle, Semigroup, TripleSemigroup};

fn generator_sets() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=30, 2..=4).prop_filter("gcd 1", |g| {
        g.iter().copied().fold(0, |x, y| {
            let (mut a, mut b) = (x, y);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        }) == 1
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn seed_identities(a in 3i64..200, r in 0i64..50_000) {
        let t = TripleSemigroup::new(a).unwrap();
        let s = t.seed(r);
        let [p1, p2, p3] = s.phi;
        prop_assert_eq!(p1 * a + p2 * (a + 1) + p3 * (a + 2), r);
        prop_assert_eq!(p1 + p2 + p3, s.ell);
        prop_assert_eq!(2 * s.kappa + s.iota, s.ell);
        prop_assert_eq!((a + 1) * s.ell + s.c, r);
        prop_assert!(s.kappa <= s.xi);
        prop_assert_eq!(s.is_factorization(), s.eps <= 2 * s.ell);
        prop_assert_eq!(t.contains(r), s.is_factorization());
    }

    #[test]
    fn omega_chain_structure(a in 3i64..60, r in 0i64..4000) {
        let t = TripleSemigroup::new(a).unwrap();
        prop_assume!(t.in_ulf(r));
        let facts = t.ulf_factorizations(r).unwrap();
        prop_assert_eq!(facts.len() as i64, t.seed(r).kappa + 1);
        for w in facts.windows(2) {
            let step: Vec<i64> = w[1].coords().iter().zip(w[0].coords()).map(|(x, y)| y - x).collect();
            prop_assert_eq!(step, OMEGA.to_vec());
        }
        let oracle = t.semigroup().factorizations(r);
        prop_assert_eq!(facts, oracle);
    }

    #[test]
    fn membership_matches_factorizations(gens in generator_sets(), r in -5i64..300) {
        let s = Semigroup::new(&gens).unwrap();
        let facts = s.factorizations(r);
        prop_assert_eq!(s.contains(r), !facts.is_empty());
        for f in &facts {
            prop_assert_eq!(f.value(s.minimal_generators()).unwrap(), r);
        }
        prop_assert_eq!(s.denumerant(r), facts.len());
        let mut sorted = facts.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted, facts);
    }

    #[test]
    fn apery_residue_classes(gens in generator_sets(), pick in 0usize..4, mult in 1i64..3) {
        let s = Semigroup::new(&gens).unwrap();
        let m = s.minimal_generators();
        let x = m[pick % m.len()] * mult;
        let ap = s.apery(x).unwrap();
        prop_assert_eq!(ap.len() as i64, x);
        let mut residues: Vec<i64> = ap.iter().map(|w| w % x).collect();
        residues.sort_unstable();
        prop_assert_eq!(residues, (0..x).collect::<Vec<_>>());
        for w in ap {
            prop_assert!(s.contains(w) && !s.contains(w - x));
        }
    }

    #[test]
    fn ulf_is_apery_of_unbalanced_betti(gens in generator_sets()) {
        let report = check_ulf_apery(&gens).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn partition_table_covers_low_members(a in 3i64..60) {
        let t = TripleSemigroup::new(a).unwrap();
        let table = partition_table(a).unwrap();
        let mut seen = Vec::new();
        for (cell, e) in table.entries() {
            let dec = t.decompose(e.r).unwrap();
            prop_assert_eq!((dec.d, dec.i, dec.c), (cell.d, e.iota, e.c));
            prop_assert_eq!(cell.ell + 2 - 2 * cell.d, e.iota);
            prop_assert!(gamma(e.iota).unwrap().contains(&e.c));
            seen.push(e.r);
        }
        seen.sort_unstable();
        let members: Vec<i64> = (0..=(a + 2) * table.max_length).filter(|&r| t.contains(r)).collect();
        prop_assert_eq!(seen, members);
        let csv = table.to_csv().unwrap();
        prop_assert_eq!(PartitionTable::from_csv(a, &csv).unwrap(), table);
    }

    #[test]
    fn monomial_shift_law(a in 5i64..80, r in 0i64..2000) {
        let t = TripleSemigroup::new(a).unwrap();
        let shifted = r + 2 * (a + 1);
        prop_assume!(t.contains(r) && shifted < t.ulf_bound());
        let before = t.seed(r).chain();
        let after = t.seed(shifted).chain();
        let mut expected: Vec<[i64; 3]> = before.iter().map(|[x, y, z]| [x + 1, *y, z + 1]).collect();
        let [x, y, z] = *before.last().unwrap();
        expected.push([x, y + 2, z]);
        prop_assert_eq!(after, expected);
    }

    #[test]
    fn monomial_block_is_independent_of_a(a in 17i64..120) {
        let base = monomial_table(17, 7, 4, MonomialStyle::Ascii).unwrap();
        let other = monomial_table(a, 7, 4, MonomialStyle::Ascii).unwrap();
        for (x, y) in base.cells.iter().zip(&other.cells) {
            let strip = |c: &sgp_core::render::MonomialCell| -> Vec<(Vec<String>, i64, i64)> {
                c.entries.iter().map(|e| (e.basis.clone(), e.iota, e.c)).collect()
            };
            prop_assert_eq!(strip(x), strip(y));
        }
    }
}
