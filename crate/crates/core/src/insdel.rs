//! Insertion-deletion distance and the Singleton-type checks for insdel codes.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    binary_few_weight_bound, block_diagonal_bound, length_function_bound, odd_prime_few_weight_bound,
    BoundResult, CodeParams,
};
use crate::budget::Budget;
use crate::codes::{floor_log, AnyCode, Code, Word};
use crate::algebra::Symbol;
use crate::error::{Error, Result};

/// Length of a longest common subsequence.
pub fn lcs(a: &[Symbol], b: &[Symbol]) -> usize {
    let mut row = vec![0usize; b.len() + 1];
    for &x in a {
        let mut diag = 0;
        for (j, &y) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if x == y { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[b.len()]
}

/// Fewest insertions plus deletions turning `a` into `b`:
/// `|a| + |b| - 2 lcs(a, b)`.
pub fn insdel_distance(a: &[Symbol], b: &[Symbol]) -> usize {
    a.len() + b.len() - 2 * lcs(a, b)
}

/// Minimum insdel distance over distinct codewords, with the first pair (in
/// codeword order) attaining it.
pub fn code_insdel_distance(c: &Code, budget: Budget) -> Result<(usize, Word, Word)> {
    let m = c.len();
    if m < 2 {
        return Err(Error::TrivialCode);
    }
    let n = c.n() as u128;
    budget.check((m as u128 * (m as u128 - 1) / 2).saturating_mul(n * n))?;
    let words = c.words();
    let (d, i, j) = (0..m - 1)
        .into_par_iter()
        .map(|i| {
            (i + 1..m)
                .map(|j| (insdel_distance(&words[i], &words[j]), i, j))
                .min()
                .expect("nonempty")
        })
        .min()
        .expect("nonempty");
    Ok((d, words[i].clone(), words[j].clone()))
}

/// One inequality `measured <= bound` checked against a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub name: &'static str,
    /// Right-hand side; may be negative for high-rate codes.
    pub bound: i64,
    pub measured: usize,
    /// `None` when the inequality does not apply to this code.
    pub holds: Option<bool>,
    pub note: Option<String>,
    /// The closest codeword pair, when the check fails.
    pub witness: Option<(Word, Word)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InsdelReport {
    pub n: usize,
    /// Dimension, or `floor(log_q |C|)` for nonlinear codes.
    pub k: usize,
    pub linear: bool,
    pub code_insdel_distance: usize,
    pub closest_pair: (Word, Word),
    pub hamming_distance: usize,
    /// Only meaningful for linear codes.
    pub has_all_ones: bool,
    pub checks: Vec<InequalityCheck>,
    /// Size bounds with the Hamming distance replaced by `ceil(d_insdel/2)`.
    pub size_bounds: Vec<BoundResult>,
}

impl InsdelReport {
    /// Every applicable inequality holds.
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds != Some(false))
    }

    pub fn check(&self, name: &str) -> Option<&InequalityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(
    name: &'static str,
    bound: i64,
    measured: usize,
    applies: bool,
    note: Option<String>,
    pair: &(Word, Word),
) -> InequalityCheck {
    let holds = applies.then_some(measured as i64 <= bound);
    let note = if applies && bound < 2 {
        let low = "right-hand side is below 2, the least possible insdel distance".to_string();
        Some(note.map_or(low.clone(), |n| format!("{n}; {low}")))
    } else {
        note
    };
    InequalityCheck {
        name,
        bound,
        measured,
        holds,
        note,
        witness: (holds == Some(false)).then(|| pair.clone()),
    }
}

/// Size bounds for a code whose insdel distance is `d_insdel`, via the
/// Hamming distance `d >= ceil(d_insdel/2)`.
pub fn insdel_size_bounds(q: usize, n: usize, d_insdel: usize) -> Vec<BoundResult> {
    let d = d_insdel.div_ceil(2).max(1);
    let p = CodeParams::new(q, n).with_d(d);
    [
        binary_few_weight_bound(&p),
        length_function_bound(&p),
        odd_prime_few_weight_bound(&p),
        block_diagonal_bound(&p),
    ]
    .into_iter()
    .map(|mut b| {
        b.name = format!("insdel_{}", b.name);
        if b.applicable {
            b.assumptions
                .push(format!("Hamming distance taken as ceil(d_insdel/2) = {d}"));
        }
        b
    })
    .collect()
}

/// Measures the insdel distance and checks the direct Singleton, half-
/// Singleton and improved half-Singleton inequalities.
pub fn insdel_report(code: &AnyCode, budget: Budget) -> Result<InsdelReport> {
    let explicit = code.to_explicit(budget)?;
    let (d_insdel, a, b) = code_insdel_distance(&explicit, budget)?;
    let pair = (a, b);
    let d_h = code.min_distance(budget)?;
    let q = code.field().q();
    let n = code.n();
    let (k, linear, all_ones) = match code {
        AnyCode::Linear(c) => (c.k(), true, c.has_all_ones()),
        AnyCode::Explicit(c) => (floor_log(q, &c.size()).0, false, false),
    };
    let (ni, ki) = (n as i64, k as i64);
    let k_note = (!linear).then(|| format!("nonlinear: k taken as floor(log_q |C|) = {k}"));
    let mut checks = vec![
        check("twice_hamming", 2 * d_h as i64, d_insdel, true, None, &pair),
        check("direct_singleton", 2 * (ni - ki + 1), d_insdel, true, k_note.clone(), &pair),
        check(
            "half_singleton",
            2 * (ni - 2 * ki + 2),
            d_insdel,
            true,
            k_note.as_ref().map(|k| format!("{k}; stated for linear codes")),
            &pair,
        ),
    ];
    let improved_note = if !linear {
        Some("stated for linear codes only".to_string())
    } else if all_ones {
        Some("code contains the all-ones word".to_string())
    } else {
        None
    };
    checks.push(check(
        "improved_half_singleton",
        2 * (ni - 2 * ki + 1),
        d_insdel,
        linear && !all_ones,
        improved_note,
        &pair,
    ));
    Ok(InsdelReport {
        n,
        k,
        linear,
        code_insdel_distance: d_insdel,
        closest_pair: pair,
        hamming_distance: d_h,
        has_all_ones: all_ones,
        checks,
        size_bounds: insdel_size_bounds(q, n, d_insdel),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::codes::LinearCode;
    use crate::families::{construct, FamilySpec};

    #[test]
    fn distance_examples() {
        assert_eq!(insdel_distance(&[0, 1, 0], &[1, 0, 1]), 2);
        assert_eq!(insdel_distance(&[2, 0, 1], &[2, 0, 1]), 0);
        assert_eq!(insdel_distance(&[0, 0, 0, 0], &[1, 1, 1, 1]), 8);
        assert_eq!(insdel_distance(&[0, 1], &[0, 1, 1]), 1);
    }

    #[test]
    fn repetition_code_distance() {
        let c = construct(&FamilySpec::ReedSolomon { q: 3, n: 3, k: 1, points: None }).unwrap();
        let words = c.to_code(Budget::default()).unwrap();
        assert_eq!(code_insdel_distance(&words, Budget::default()).unwrap().0, 6);
    }

    #[test]
    fn report_on_hamming() {
        let c = AnyCode::Linear(construct(&FamilySpec::Hamming { q: 2, m: 3 }).unwrap());
        let r = insdel_report(&c, Budget::default()).unwrap();
        assert!(r.has_all_ones);
        assert_eq!(r.check("improved_half_singleton").unwrap().holds, None);
        assert_eq!(r.check("half_singleton").unwrap().bound, 2);
        assert!(r.code_insdel_distance <= 2 * r.hamming_distance);
        assert_eq!(r.check("half_singleton").unwrap().holds, Some(true));
    }

    #[test]
    fn block_diagonal_wrapper() {
        let bounds = insdel_size_bounds(2, 14, 10);
        let b = bounds.iter().find(|b| b.name == "insdel_block_diagonal").unwrap();
        assert_eq!(b.exact(), Some(num_bigint::BigUint::from(1u32 << 8)));
        // Below 14 only one Hamming block fits.
        let short = insdel_size_bounds(2, 13, 10);
        let b = short.iter().find(|b| b.name == "insdel_block_diagonal").unwrap();
        assert_eq!(b.exact(), Some(num_bigint::BigUint::from(1u32 << 10)));
    }

    #[test]
    fn binary_length_four_dimension_one() {
        let f = Field::new(2).unwrap();
        for g in 1u8..16 {
            let row: Vec<u8> = (0..4).map(|i| g >> (3 - i) & 1).collect();
            let c = AnyCode::Linear(LinearCode::from_rows(&f, 4, &[row]).unwrap());
            let r = insdel_report(&c, Budget::default()).unwrap();
            assert_eq!(r.check("half_singleton").unwrap().holds, Some(true));
        }
    }
}
