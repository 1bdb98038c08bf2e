//! The embedded claim suite run by `verify paper`: every quoted value the
//! toolkit reproduces, recomputed from scratch.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::bounds::{
    binary_few_weight_bound, block_diagonal_bound, cover_length_bound, covering_code_bound, covering_table_bound,
    generalized_singleton_st, implied_list_size, list_size_lower_bound, odd_prime_few_weight_bound,
    redundancy_list_bound, small_e_length_bound, BoundResult, CodeParams, CoverRegistry, LengthQuery,
    VerifiedCover,
};
use crate::budget::Budget;
use crate::codes::{AnyCode, LinearCode};
use crate::covering::table::{l5_3_estimate, lookup_k, lookup_length, TableValue};
use crate::covering::{delsarte_bound, linear_radius};
use crate::error::{Error, Result};
use crate::families::{construct, FamilySpec};
use crate::insdel::{insdel_report, insdel_size_bounds};
use crate::lrc::{lrc_bounds, lrc_singleton, LrcParams};

pub struct Outcome {
    pub computed: String,
    pub pass: bool,
}

pub struct Claim {
    pub id: &'static str,
    pub citation: &'static str,
    pub expected: &'static str,
    pub run: fn(Budget) -> Result<Outcome>,
}

fn same(computed: impl ToString, expected: &str) -> Result<Outcome> {
    let computed = computed.to_string();
    Ok(Outcome {
        pass: computed == expected,
        computed,
    })
}

fn code(spec: FamilySpec) -> Result<LinearCode> {
    construct(&spec)
}

fn hamming74() -> Result<LinearCode> {
    code(FamilySpec::Hamming { q: 2, m: 3 })
}

fn rs73() -> Result<LinearCode> {
    code(FamilySpec::ReedSolomon { q: 7, n: 7, k: 3, points: None })
}

fn nonzero_weights(c: &LinearCode, budget: Budget) -> Result<String> {
    let dist = c.weight_distribution(budget)?;
    let w: Vec<String> = (1..dist.len()).filter(|&i| dist[i] > 0).map(|i| i.to_string()).collect();
    Ok(format!("{{{}}}", w.join(",")))
}

fn nkd(c: &LinearCode, budget: Budget) -> Result<String> {
    Ok(format!("[{},{},{}]", c.n(), c.k(), c.min_distance(budget)?))
}

fn exact_radius(c: &LinearCode, budget: Budget) -> Result<usize> {
    let r = linear_radius(c, budget)?;
    if !r.exact {
        return Err(Error::RadiusNotVerified);
    }
    Ok(r.radius)
}

fn verified(name: &str, c: LinearCode, budget: Budget) -> Result<VerifiedCover> {
    let r = linear_radius(&c, budget)?;
    VerifiedCover::new(name, &AnyCode::Linear(c), &r)
}

fn value(b: &BoundResult) -> String {
    match (&b.value, b.applicable) {
        (Some(v), true) => v.to_string(),
        _ => format!("n/a ({})", b.reason.as_deref().unwrap_or("inapplicable")),
    }
}

fn pow(q: usize, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// `true` when `f(n)` is `q^(n - shift)` for every `n` in `lengths`; the
/// computed string lists the first mismatch, if any.
fn power_family(
    q: usize,
    shift: usize,
    lengths: impl IntoIterator<Item = usize>,
    f: impl Fn(usize) -> BoundResult,
) -> Result<Outcome> {
    let mut checked = Vec::new();
    for n in lengths {
        let b = f(n);
        if b.exact() != Some(pow(q, n - shift)) {
            return Ok(Outcome {
                computed: format!("n={n}: {}", value(&b)),
                pass: false,
            });
        }
        checked.push(n);
    }
    Ok(Outcome {
        computed: format!(
            "{q}^(n-{shift}) for n={}..{}",
            checked.first().copied().unwrap_or(0),
            checked.last().copied().unwrap_or(0)
        ),
        pass: true,
    })
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "hamming-7-4-distance",
            citation: "perfect Hamming codes",
            expected: "3",
            run: |b| same(hamming74()?.min_distance(b)?, "3"),
        },
        Claim {
            id: "golay23-distance",
            citation: "perfect binary Golay code [23,12,7]",
            expected: "7",
            run: |b| same(code(FamilySpec::GolayBinary)?.min_distance(b)?, "7"),
        },
        Claim {
            id: "kasami2-weights",
            citation: "three-weight codes, weights 2^(2m-1) - 2^(m-1) and up",
            expected: "{6,8,10}",
            run: |b| same(nonzero_weights(&code(FamilySpec::Kasami { m: 2 })?, b)?, "{6,8,10}"),
        },
        Claim {
            id: "rs-7-3-mds",
            citation: "Reed-Solomon codes are MDS",
            expected: "defect 0",
            run: |b| same(format!("defect {}", rs73()?.singleton_defect(b)?.defect), "defect 0"),
        },
        Claim {
            id: "family-hamming-2-3",
            citation: "perfect Hamming codes",
            expected: "[7,4,3]",
            run: |b| same(nkd(&hamming74()?, b)?, "[7,4,3]"),
        },
        Claim {
            id: "family-golay-ternary",
            citation: "perfect ternary Golay code [11,6,5]",
            expected: "[11,6,5]",
            run: |b| same(nkd(&code(FamilySpec::GolayTernary)?, b)?, "[11,6,5]"),
        },
        Claim {
            id: "family-kasami-2",
            citation: "three-weight codes at m = 2",
            expected: "[15,6] {6,8,10}",
            run: |b| {
                let c = code(FamilySpec::Kasami { m: 2 })?;
                same(format!("[{},{}] {}", c.n(), c.k(), nonzero_weights(&c, b)?), "[15,6] {6,8,10}")
            },
        },
        Claim {
            id: "family-reed-muller1-4",
            citation: "first-order Reed-Muller codes",
            expected: "[16,5,8]",
            run: |b| same(nkd(&code(FamilySpec::ReedMuller1 { m: 4 })?, b)?, "[16,5,8]"),
        },
        Claim {
            id: "family-block-diagonal-2-3-2",
            citation: "block-diagonal Hamming parity-check covering codes",
            expected: "[14,8] R<=2",
            run: |b| {
                let c = code(FamilySpec::BlockDiagonal { q: 2, m: 3, u: 2 })?;
                let r = exact_radius(&c, b)?;
                Ok(Outcome {
                    computed: format!("[{},{}] R={r}", c.n(), c.k()),
                    pass: (c.n(), c.k()) == (14, 8) && r <= 2,
                })
            },
        },
        Claim {
            id: "family-rs-7-7-3",
            citation: "Reed-Solomon codes are MDS",
            expected: "[7,3,5] MDS",
            run: |b| {
                let c = rs73()?;
                let mds = if c.singleton_defect(b)?.defect == 0 { "MDS" } else { "not MDS" };
                same(format!("{} {mds}", nkd(&c, b)?), "[7,3,5] MDS")
            },
        },
        Claim {
            id: "radius-hamming-7-4",
            citation: "perfect Hamming codes",
            expected: "1",
            run: |b| same(exact_radius(&hamming74()?, b)?, "1"),
        },
        Claim {
            id: "radius-golay-binary",
            citation: "perfect binary Golay code [23,12,7]",
            expected: "3",
            run: |b| same(exact_radius(&code(FamilySpec::GolayBinary)?, b)?, "3"),
        },
        Claim {
            id: "radius-golay-ternary",
            citation: "perfect ternary Golay code [11,6,5]",
            expected: "2",
            run: |b| same(exact_radius(&code(FamilySpec::GolayTernary)?, b)?, "2"),
        },
        Claim {
            id: "radius-rs-7-3",
            citation: "covering radius n - k of Reed-Solomon codes with n <= q",
            expected: "4",
            run: |b| same(exact_radius(&rs73()?, b)?, "4"),
        },
        Claim {
            id: "radius-reed-muller1-4",
            citation: "covering radius 2^(m-1) - 2^((m-2)/2) of first-order Reed-Muller codes",
            expected: "6",
            run: |b| same(exact_radius(&code(FamilySpec::ReedMuller1 { m: 4 })?, b)?, "6"),
        },
        Claim {
            id: "delsarte-kasami2-dual",
            citation: "covering radius of the dual of a three-weight code",
            expected: "3",
            run: |b| same(delsarte_bound(&code(FamilySpec::Kasami { m: 2 })?.dual(), b)?, "3"),
        },
        Claim {
            id: "delsarte-hamming-7-4",
            citation: "dual of a Hamming code has one nonzero weight",
            expected: "bound 1, exact 1",
            run: |b| {
                let c = hamming74()?;
                same(format!("bound {}, exact {}", delsarte_bound(&c, b)?, exact_radius(&c, b)?), "bound 1, exact 1")
            },
        },
        Claim {
            id: "table-k-2-15-3",
            citation: "K_2(15,3) = 112",
            expected: "112 exact",
            run: |_| {
                let e = lookup_k(2, 15, 3).ok_or(Error::BadParams("missing entry".into()))?;
                same(format!("{} {}", e.expression, if e.exact { "exact" } else { "upper" }), "112 exact")
            },
        },
        Claim {
            id: "table-k-2-16-3",
            citation: "K_2(16,3) <= 192",
            expected: "192 upper",
            run: |_| {
                let e = lookup_k(2, 16, 3).ok_or(Error::BadParams("missing entry".into()))?;
                same(format!("{} {}", e.expression, if e.exact { "exact" } else { "upper" }), "192 upper")
            },
        },
        Claim {
            id: "table-k-2-33-5",
            citation: "K_2(33,5) <= 2^13 * 11",
            expected: "90112 upper",
            run: |_| {
                let e = lookup_k(2, 33, 5).ok_or(Error::BadParams("missing entry".into()))?;
                let v = e.integer().cloned().unwrap_or_default();
                same(format!("{v} {}", if e.exact { "exact" } else { "upper" }), "90112 upper")
            },
        },
        Claim {
            id: "table-l-q-5-3",
            citation: "l_q(5,3) <= 2.884 q^(2/3) (ln q)^(1/3)",
            expected: "2.884 q^(2/3) (ln q)^(1/3) at q=101",
            run: |_| {
                let e = lookup_length(101, 5, 3).ok_or(Error::BadParams("missing entry".into()))?;
                let TableValue::Real(v) = e.value else {
                    return same("integer entry", "real estimate");
                };
                let formula = 2.884 * 101f64.powf(2.0 / 3.0) * 101f64.ln().powf(1.0 / 3.0);
                Ok(Outcome {
                    computed: format!("{v:.3} (formula {formula:.3})"),
                    pass: (v - formula).abs() < 1e-9 && (v - l5_3_estimate(101)).abs() < 1e-9,
                })
            },
        },
        Claim {
            id: "list-singleton-classical",
            citation: "generalized Singleton bound reduces to q^(n - 2 d_list) at L = 1",
            expected: "2^4",
            run: |_| {
                let p = CodeParams::new(2, 10).with_list(3, 1);
                same(value(&generalized_singleton_st(&p)?), "2^4")
            },
        },
        Claim {
            id: "list-singleton-equals-redundancy",
            citation: "redundancy bound matches the generalized Singleton bound when L >= d_list",
            expected: "512 = 512",
            run: |_| {
                let p = CodeParams::new(2, 10).with_list(3, 4);
                let st = generalized_singleton_st(&p)?.exact().unwrap_or_default();
                let red = redundancy_list_bound(&p)?.exact().unwrap_or_default();
                same(format!("{st} = {red}"), "512 = 512")
            },
        },
        Claim {
            id: "cover-golay-list-2",
            citation: "covering-code bound |C| <= L |C'| with the binary Golay cover",
            expected: "8192",
            run: |b| {
                let cover = verified("golay_binary", code(FamilySpec::GolayBinary)?, b)?;
                same(covering_code_bound(&cover, 3, 2)?.exact().unwrap_or_default(), "8192")
            },
        },
        Claim {
            id: "cover-table-192",
            citation: "|C| <= 192 L from K_2(16,3) <= 192",
            expected: "192",
            run: |_| {
                let e = lookup_k(2, 16, 3).ok_or(Error::BadParams("missing entry".into()))?;
                same(covering_table_bound(&e, 3, 1)?.exact().unwrap_or_default(), "192")
            },
        },
        Claim {
            id: "list-size-16-9",
            citation: "a [16,9,4] code needs list size at least 3 at radius 3",
            expected: "3",
            run: |_| same(implied_list_size(&BigUint::from(512u32), &BigUint::from(192u32)), "3"),
        },
        Claim {
            id: "list-size-golay-binary",
            citation: "list size of binary [23,k] codes at radius 3 is at least 2^(k-12)",
            expected: "2^(k-12) for k=12..23",
            run: |b| {
                let cover = verified("golay_binary", code(FamilySpec::GolayBinary)?, b)?;
                for k in 12..=23 {
                    let got = list_size_lower_bound(k, &cover)?;
                    if got != pow(2, k - 12) {
                        return same(format!("k={k}: {got}"), "");
                    }
                }
                same("2^(k-12) for k=12..23", "2^(k-12) for k=12..23")
            },
        },
        Claim {
            id: "list-size-golay-ternary",
            citation: "list size of ternary [11,k] codes at radius 2 is at least 3^(k-6)",
            expected: "3^(k-6) for k=6..11",
            run: |b| {
                let cover = verified("golay_ternary", code(FamilySpec::GolayTernary)?, b)?;
                for k in 6..=11 {
                    let got = list_size_lower_bound(k, &cover)?;
                    if got != pow(3, k - 6) {
                        return same(format!("k={k}: {got}"), "");
                    }
                }
                same("3^(k-6) for k=6..11", "3^(k-6) for k=6..11")
            },
        },
        Claim {
            id: "block-diagonal-size-2-3-2",
            citation: "block-diagonal covering bound M <= q^(n - mu) with m = 3, u = 2",
            expected: "2^(n-6) for n=14..29",
            run: |_| power_family(2, 6, 14..=29, |n| block_diagonal_bound(&CodeParams::new(2, n).with_d(5))),
        },
        Claim {
            id: "binary-three-weight-size",
            citation: "M <= 2^(n - Rm) for n >= 2^(2m) - 1, R = 3, m = 2",
            expected: "2^(n-6) for n=15..62",
            run: |_| power_family(2, 6, 15..=62, |n| binary_few_weight_bound(&CodeParams::new(2, n).with_d(7))),
        },
        Claim {
            id: "ternary-few-weight-size",
            citation: "M <= p^(n - Rm) for R <= 2(p^m + 1), p = 3, m = 1, R = 2",
            expected: "3^(n-2) for n=8..79",
            run: |_| {
                power_family(3, 2, 8..=79, |n| odd_prime_few_weight_bound(&CodeParams::new(3, n).with_d(5)))
            },
        },
        Claim {
            id: "mds-length-q11-e5",
            citation: "MDS and almost MDS codes with d = 2e + 1 have length below q^3 - 1",
            expected: "1329 1329",
            run: |_| {
                let v = |s| -> Result<String> { Ok(value(&small_e_length_bound(LengthQuery::new(11, 11, s)?))) };
                same(format!("{} {}", v(0)?, v(1)?), "1329 1329")
            },
        },
        Claim {
            id: "mds-length-block-diagonal",
            citation: "covering code C' x F_q^s rules out long MDS codes",
            expected: "13",
            run: |b| {
                let c = code(FamilySpec::BlockDiagonal { q: 2, m: 3, u: 2 })?;
                let mut reg = CoverRegistry::empty();
                reg.push(verified("block_diagonal(2,3,2)", c, b)?);
                same(value(&cover_length_bound(LengthQuery::new(2, 5, 0)?, &reg)), "13")
            },
        },
        Claim {
            id: "insdel-twice-hamming",
            citation: "d_insdel(C) <= 2 d(C)",
            expected: "0 violations",
            run: |b| {
                let mut bad = 0;
                for spec in insdel_samples() {
                    let r = insdel_report(&AnyCode::Linear(code(spec)?), b)?;
                    bad += usize::from(r.code_insdel_distance > 2 * r.hamming_distance);
                }
                same(format!("{bad} violations"), "0 violations")
            },
        },
        Claim {
            id: "insdel-half-singleton",
            citation: "half-Singleton bound d_insdel <= 2(n - 2k + 2) for linear codes",
            expected: "0 violations",
            run: |b| {
                let mut bad = 0;
                for c in binary_dimension_one(4)?
                    .into_iter()
                    .chain(insdel_samples().into_iter().map(|s| code(s)).collect::<Result<Vec<_>>>()?)
                {
                    let r = insdel_report(&AnyCode::Linear(c), b)?;
                    bad += usize::from(r.check("half_singleton").and_then(|c| c.holds) != Some(true));
                }
                same(format!("{bad} violations"), "0 violations")
            },
        },
        Claim {
            id: "insdel-all-ones-skipped",
            citation: "improved half-Singleton bound excludes codes with the all-ones word",
            expected: "skipped",
            run: |b| {
                let r = insdel_report(&AnyCode::Linear(hamming74()?), b)?;
                let skipped = r.has_all_ones && r.check("improved_half_singleton").is_some_and(|c| c.holds.is_none());
                same(if skipped { "skipped" } else { "checked" }, "skipped")
            },
        },
        Claim {
            id: "insdel-size-block-diagonal",
            citation: "insdel code size bound through d >= d_insdel/2 and the block-diagonal covers",
            expected: "n=13: 2^10, n=14: 2^8",
            run: |_| {
                let get = |n| {
                    insdel_size_bounds(2, n, 10)
                        .into_iter()
                        .find(|b| b.name == "insdel_block_diagonal")
                        .map(|b| if b.applicable { value(&b) } else { "n/a".into() })
                        .unwrap_or_default()
                };
                same(format!("n=13: {}, n=14: {}", get(13), get(14)), "n=13: 2^10, n=14: 2^8")
            },
        },
        Claim {
            id: "lrc-singleton-4-2-1",
            citation: "Singleton-like bound d <= n - k + 2 - ceil(k/r)",
            expected: "2",
            run: |_| same(lrc_singleton(4, 2, 1).map_or("none".into(), |d| d.to_string()), "2"),
        },
        Claim {
            id: "lrc-singleton-large-r",
            citation: "Singleton-like bound is the Singleton bound when r >= k",
            expected: "0 mismatches",
            run: |_| {
                let mut bad = 0;
                for n in 1..=20 {
                    for k in 1..=n {
                        for r in k..=n {
                            bad += usize::from(lrc_singleton(n, k, r) != Some(n - k + 1));
                        }
                    }
                }
                same(format!("{bad} mismatches"), "0 mismatches")
            },
        },
        Claim {
            id: "lrc-length-block-diagonal",
            citation: "optimal LRC length n <= R (q^4 - 1)/(q - 1)",
            expected: "80",
            run: |_| {
                let p = LrcParams { q: 3, n: 10, k: 2, r: 1, delta: None, radius: Some(2), c: None };
                let b = lrc_bounds(&p)?;
                let b = b.iter().find(|b| b.name == "lrc_length_block_diagonal");
                same(b.map(value).unwrap_or_default(), "80")
            },
        },
    ]
}

/// A few small linear codes for the insdel checks.
fn insdel_samples() -> Vec<FamilySpec> {
    vec![
        FamilySpec::Hamming { q: 2, m: 3 },
        FamilySpec::ReedSolomon { q: 3, n: 3, k: 1, points: None },
        FamilySpec::ReedSolomon { q: 5, n: 5, k: 2, points: None },
        FamilySpec::Simplex { q: 2, m: 3 },
        FamilySpec::Repetition { q: 3, n: 5 },
    ]
}

/// Every binary linear code of length `n` and dimension 1.
pub fn binary_dimension_one(n: usize) -> Result<Vec<LinearCode>> {
    let f = crate::algebra::Field::new(2)?;
    (1usize..1 << n)
        .map(|g| {
            let row: Vec<u8> = (0..n).map(|i| (g >> (n - 1 - i) & 1) as u8).collect();
            LinearCode::from_rows(&f, n, &[row])
        })
        .collect()
}

/// Ids of all claims, for `--only` validation.
pub fn claim_ids() -> BTreeSet<&'static str> {
    claims().iter().map(|c| c.id).collect()
}
