use num_bigint::BigUint;
use proptest::prelude::*;

use covbound::algebra::Field;
use covbound::bounds::{bound_ladder, CodeParams, CoverRegistry};
use covbound::budget::Budget;
use covbound::codes::{hamming, index_to_word, weight, AnyCode, Code, LinearCode, Word};
use covbound::covering::{covering_radius, delsarte_bound, greedy_covering_search, RadiusMethod};
use covbound::families::{construct, FamilySpec};
use covbound::insdel::{code_insdel_distance, insdel_distance, lcs};
use covbound::listdecode::max_list_size;
use covbound::lrc::{locality_profile, punctured_distance};
use covbound::oracle::{exact_a, exact_k, OracleOptions};

fn budget() -> Budget {
    Budget::new(1 << 26)
}

/// Random generator rows over GF(q); `from_rows` reduces them to a basis.
fn linear_code() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2usize, 3, 4, 5]), 2usize..=7, 1usize..=4)
        .prop_flat_map(|(q, n, k)| {
            let k = k.min(n);
            (Just(q), Just(n), prop::collection::vec(prop::collection::vec(0..q as u8, n), k))
        })
        .prop_filter_map("rank deficient", |(q, n, rows)| {
            LinearCode::from_rows(&Field::new(q).unwrap(), n, &rows).ok()
        })
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn krawtchouk(k: usize, x: usize, n: usize, q: usize) -> i128 {
    (0..=k)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * (q as i128 - 1).pow((k - j) as u32) * binomial(x, j) * binomial(n - x, k - j)
        })
        .sum()
}

fn all_words(q: usize, n: usize) -> impl Iterator<Item = Word> {
    (0..q.pow(n as u32)).map(move |i| index_to_word(i, q, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn macwilliams_identity(c in linear_code()) {
        let (q, n) = (c.field().q(), c.n());
        let a = c.weight_distribution(budget()).unwrap();
        let b = c.dual().weight_distribution(budget()).unwrap();
        let size = q.pow(c.k() as u32) as i128;
        for (j, &bj) in b.iter().enumerate() {
            let s: i128 = a.iter().enumerate().map(|(i, &ai)| ai as i128 * krawtchouk(j, i, n, q)).sum();
            prop_assert_eq!(s, bj as i128 * size);
        }
    }

    #[test]
    fn linear_distance_matches_pairwise(c in linear_code()) {
        let explicit = c.to_code(budget()).unwrap();
        prop_assume!(explicit.len() >= 2);
        let words = explicit.words();
        let mut best = usize::MAX;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                best = best.min(hamming(&words[i], &words[j]).unwrap());
            }
        }
        prop_assert_eq!(c.min_distance(budget()).unwrap(), best);
        prop_assert_eq!(explicit.min_distance(budget()).unwrap(), best);
    }

    #[test]
    fn radius_methods_agree(c in linear_code()) {
        let q = c.field().q();
        let words = c.codewords(budget()).unwrap();
        let brute = all_words(q, c.n())
            .map(|x| words.iter().map(|w| hamming(&x, w).unwrap()).min().unwrap())
            .max()
            .unwrap();
        let code = AnyCode::Linear(c.clone());
        let coset = covering_radius(&code, RadiusMethod::CosetLeader, budget()).unwrap();
        let exhaustive = covering_radius(&code, RadiusMethod::Exhaustive, budget()).unwrap();
        prop_assert_eq!(coset.radius, brute);
        prop_assert_eq!(exhaustive.radius, brute);
        let w = coset.witness.unwrap();
        prop_assert_eq!(words.iter().map(|c| hamming(&w, c).unwrap()).min().unwrap(), brute);
        // The radius never exceeds the redundancy or the dual weight count.
        prop_assert!(brute <= c.redundancy());
        if c.k() < c.n() {
            prop_assert!(brute <= delsarte_bound(&c, budget()).unwrap());
        }
    }

    #[test]
    fn list_size_matches_direct_count(c in linear_code(), radius in 0usize..=3) {
        let q = c.field().q();
        let explicit = c.to_code(budget()).unwrap();
        let profile = max_list_size(&explicit, radius, budget()).unwrap();
        let count = |x: &Word| explicit.words().iter().filter(|w| hamming(x, w).unwrap() <= radius).count();
        let best = all_words(q, c.n()).map(|x| count(&x)).max().unwrap();
        prop_assert_eq!(profile.max_count, best);
        prop_assert_eq!(count(&profile.witness_center), best);
        // Radius below half the distance: unique decoding.
        let d = c.min_distance(budget()).unwrap();
        if 2 * radius < d {
            prop_assert_eq!(best, 1);
        }
    }

    #[test]
    fn insdel_axioms(
        a in prop::collection::vec(0u8..3, 0..10),
        b in prop::collection::vec(0u8..3, 0..10),
        c in prop::collection::vec(0u8..3, 0..10),
    ) {
        let d = insdel_distance;
        prop_assert_eq!(d(&a, &a), 0);
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        prop_assert_eq!((d(&a, &b) + a.len() + b.len()) % 2, 0);
        prop_assert!(lcs(&a, &b) <= a.len().min(b.len()));
        if a.len() == b.len() {
            prop_assert!(d(&a, &b) <= 2 * hamming(&a, &b).unwrap());
        }
    }

    #[test]
    fn code_insdel_distance_is_pairwise_min(c in linear_code()) {
        let explicit = c.to_code(budget()).unwrap();
        prop_assume!(explicit.len() >= 2 && explicit.len() <= 64);
        let (d, x, y) = code_insdel_distance(&explicit, budget()).unwrap();
        prop_assert_eq!(insdel_distance(&x, &y), d);
        let words = explicit.words();
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                prop_assert!(insdel_distance(&words[i], &words[j]) >= d);
            }
        }
    }

    #[test]
    fn locality_sets_recover(c in linear_code()) {
        let profile = locality_profile(&c, budget()).unwrap();
        for cert in profile.certificates() {
            prop_assert!(cert.set.contains(&cert.coordinate));
            let d = punctured_distance(&c, &cert.set, budget()).unwrap();
            prop_assert!(d.is_none_or(|d| d >= 2));
        }
        if let Some(r) = profile.r {
            // Every coordinate outside a trivial column is covered by a set
            // of at most r + 1 positions.
            for cert in profile.certificates() {
                prop_assert!(cert.set.len() <= r + 1);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_k_between_floor_and_greedy(q in 2usize..=3, n in 1usize..=5, r in 1usize..=3) {
        // K_3(5,1) and K_3(5,2) are out of reach of the node budget.
        prop_assume!(q.pow(n as u32) <= 81);
        let r = r.min(n);
        let opts = OracleOptions { cap: 81, budget: budget() };
        let k = exact_k(q, n, r, &opts).unwrap();
        let greedy = greedy_covering_search(q, n, r, 0, 2, budget()).unwrap();
        let volume: usize = (0..=r).map(|i| binomial(n, i) as usize * (q - 1).pow(i as u32)).sum();
        prop_assert!(k.value <= greedy.len());
        prop_assert!(k.value >= q.pow(n as u32).div_ceil(volume));
        prop_assert_eq!(k.witness.len(), k.value);
        let radius = covering_radius(&AnyCode::Explicit(k.witness), RadiusMethod::Exhaustive, budget()).unwrap();
        prop_assert!(radius.radius <= r);
    }

    #[test]
    fn exact_a_under_every_bound(q in 2usize..=4, n in 2usize..=5, d in 1usize..=5) {
        prop_assume!(d <= n && q.pow(n as u32) <= 256);
        let opts = OracleOptions { cap: 256, budget: budget() };
        let a = exact_a(q, n, d, &opts).unwrap();
        prop_assert_eq!(a.witness.len(), a.value);
        if a.value > 1 {
            prop_assert!(a.witness.min_distance(budget()).unwrap() >= d);
        }
        let prev = exact_a(q, n - 1, d, &opts).unwrap();
        prop_assert!(a.value <= q * prev.value);
        let ladder = bound_ladder(&CodeParams::new(q, n).with_d(d), CoverRegistry::standard(), None, None).unwrap();
        for b in ladder.iter().filter(|b| b.applicable) {
            prop_assert!(b.value.as_ref().unwrap().to_biguint() >= BigUint::from(a.value), "{} < {}", b.name, a.value);
        }
    }
}

#[test]
fn hamming_code_is_an_optimal_cover() {
    let opts = OracleOptions::default();
    let k = exact_k(2, 7, 1, &opts).unwrap();
    assert_eq!(k.value, 16);
    let ham = construct(&FamilySpec::Hamming { q: 2, m: 3 }).unwrap().to_code(budget()).unwrap();
    let r = covering_radius(&AnyCode::Explicit(ham.clone()), RadiusMethod::Exhaustive, budget()).unwrap();
    assert_eq!((ham.len(), r.radius), (16, 1));
}

#[test]
fn oracle_examples() {
    let opts = OracleOptions::default();
    assert_eq!(exact_a(2, 5, 3, &opts).unwrap().value, 4);
    assert_eq!(exact_a(2, 4, 3, &opts).unwrap().value, 2);
    assert_eq!(exact_a(3, 3, 1, &opts).unwrap().value, 27);
    let k = exact_k(2, 3, 1, &opts).unwrap();
    assert_eq!(k.value, 2);
    assert_eq!(k.witness.words(), [vec![0, 0, 0], vec![1, 1, 1]]);
    assert_eq!(exact_k(2, 4, 1, &opts).unwrap().value, 4);
    assert_eq!(exact_k(3, 4, 4, &opts).unwrap().value, 1);
}

#[test]
fn explicit_code_weights() {
    let f = Field::new(3).unwrap();
    let c = Code::new(&f, 3, vec![vec![0, 0, 0], vec![1, 2, 0], vec![2, 2, 2]]).unwrap();
    assert_eq!(c.weight_distribution(), vec![1, 0, 1, 1]);
    assert_eq!(weight(&[0, 2, 0, 1]), 2);
}
