use std::collections::HashSet;
use std::sync::atomic::{AtomicU8, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{reduce_modulo, Field, Matrix, Symbol};
use crate::budget::{pow_sat, Budget};
use crate::codes::{hamming, index_to_word, word_to_index, AnyCode, Code, LinearCode, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadiusMethod {
    /// Coset leaders for linear codes, exhaustive otherwise.
    #[default]
    Auto,
    Exhaustive,
    CosetLeader,
}

impl std::str::FromStr for RadiusMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(RadiusMethod::Auto),
            "exhaustive" => Ok(RadiusMethod::Exhaustive),
            "coset" | "coset_leader" => Ok(RadiusMethod::CosetLeader),
            _ => Err(Error::BadParams(format!("unknown radius method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodUsed {
    Exhaustive,
    CosetLeader,
    DelsarteUpper,
    SampleLower,
}

impl MethodUsed {
    pub fn name(self) -> &'static str {
        match self {
            MethodUsed::Exhaustive => "exhaustive",
            MethodUsed::CosetLeader => "coset_leader",
            MethodUsed::DelsarteUpper => "delsarte_upper",
            MethodUsed::SampleLower => "sample_lower",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusResult {
    pub radius: usize,
    pub method: MethodUsed,
    pub exact: bool,
    /// Lexicographically smallest point at distance `radius` from the code;
    /// present only for exact results.
    pub witness: Option<Word>,
}

impl RadiusResult {
    /// Whether `radius` is a proven upper bound on the covering radius.
    pub fn is_sound_upper_bound(&self) -> bool {
        self.exact || self.method == MethodUsed::DelsarteUpper
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RadiusOptions {
    pub method: RadiusMethod,
    pub budget: Budget,
    /// On budget failure, return a sampled lower estimate instead of an error.
    pub allow_estimate: bool,
    pub seed: u64,
}

/// Level-synchronous BFS over `0..size`. Returns the distance of every index
/// from the nearest source. Visiting order never affects the distances.
fn bfs_levels<N>(size: usize, sources: &[usize], neighbors: N) -> Vec<u8>
where
    N: Fn(usize, &mut dyn FnMut(usize)) + Sync,
{
    const UNSEEN: u8 = u8::MAX;
    let dist: Vec<AtomicU8> = (0..size).map(|_| AtomicU8::new(UNSEEN)).collect();
    let mut frontier: Vec<usize> = Vec::with_capacity(sources.len());
    for &s in sources {
        if dist[s].swap(0, Ordering::Relaxed) == UNSEEN {
            frontier.push(s);
        }
    }
    let mut level = 0u8;
    while !frontier.is_empty() {
        level += 1;
        let claim = |x: usize, out: &mut Vec<usize>| {
            if dist[x]
                .compare_exchange(UNSEEN, level, Ordering::Relaxed, Ordering::Relaxed)
                .is_ok()
            {
                out.push(x);
            }
        };
        frontier = if frontier.len() < 4096 {
            let mut next = Vec::new();
            for &x in &frontier {
                neighbors(x, &mut |y| claim(y, &mut next));
            }
            next
        } else {
            frontier
                .par_chunks(1024)
                .flat_map_iter(|chunk| {
                    let mut next = Vec::new();
                    for &x in chunk {
                        neighbors(x, &mut |y| claim(y, &mut next));
                    }
                    next
                })
                .collect()
        };
    }
    dist.into_iter().map(AtomicU8::into_inner).collect()
}

/// Largest entry and the smallest index holding it.
fn deepest(dist: &[u8]) -> (usize, usize) {
    let (idx, &r) = dist
        .iter()
        .enumerate()
        .rev()
        .max_by_key(|(_, &d)| d)
        .expect("nonempty space");
    (r as usize, idx)
}

/// Exact radius by BFS from every codeword over all of F_q^n.
fn exhaustive(field: &Field, n: usize, words: &[Word], budget: Budget) -> Result<RadiusResult> {
    let q = field.q();
    budget.check(pow_sat(q, n))?;
    if words.is_empty() {
        return Err(Error::TrivialCode);
    }
    let size = q.pow(n as u32);
    let place: Vec<usize> = (0..n).map(|i| q.pow((n - 1 - i) as u32)).collect();
    let sources: Vec<usize> = words.iter().map(|w| word_to_index(w, q)).collect();
    let dist = bfs_levels(size, &sources, |x, visit| {
        for &w in &place {
            let digit = x / w % q;
            let base = x - digit * w;
            for d in 0..q {
                if d != digit {
                    visit(base + d * w);
                }
            }
        }
    });
    let (radius, idx) = deepest(&dist);
    Ok(RadiusResult {
        radius,
        method: MethodUsed::Exhaustive,
        exact: true,
        witness: Some(index_to_word(idx, q, n)),
    })
}

/// Adds two syndrome indices digit-wise in GF(q).
fn syndrome_adder(field: &Field, r: usize) -> impl Fn(usize, usize) -> usize + Sync + '_ {
    let q = field.q();
    let xor = q.is_power_of_two();
    move |a, b| {
        if xor {
            return a ^ b;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..r {
            let s = field.add((a % q) as Symbol, (b % q) as Symbol) as usize;
            out += s * place;
            place *= q;
            a /= q;
            b /= q;
        }
        out
    }
}

/// Exact radius from the syndrome graph of a parity-check matrix: the
/// covering radius is the largest coset-leader weight.
fn coset_leader(code: &LinearCode, budget: Budget) -> Result<RadiusResult> {
    let field = code.field();
    let q = field.q();
    let (n, r) = (code.n(), code.redundancy());
    budget.check(pow_sat(q, r))?;
    if r == 0 {
        return Ok(RadiusResult {
            radius: 0,
            method: MethodUsed::CosetLeader,
            exact: true,
            witness: Some(vec![0; n]),
        });
    }
    let h = code.parity_check();
    let columns: Vec<Word> = (0..n).map(|j| h.column(j)).collect();
    let mut moves: Vec<usize> = Vec::with_capacity(n * (q - 1));
    for col in &columns {
        for a in 1..q as Symbol {
            let scaled: Word = col.iter().map(|&s| field.mul(a, s)).collect();
            moves.push(word_to_index(&scaled, q));
        }
    }
    moves.sort_unstable();
    moves.dedup();
    moves.retain(|&m| m != 0);
    let add = syndrome_adder(field, r);
    let dist = bfs_levels(q.pow(r as u32), &[0], |s, visit| {
        for &m in &moves {
            visit(add(s, m));
        }
    });
    let radius = dist.iter().copied().max().unwrap_or(0) as usize;
    let deep: Vec<Word> = dist
        .iter()
        .enumerate()
        .filter(|(_, &d)| d as usize == radius)
        .map(|(i, _)| index_to_word(i, q, r))
        .collect();
    let witness = smallest_in_syndromes(field, &columns, r, &deep)?;
    Ok(RadiusResult {
        radius,
        method: MethodUsed::CosetLeader,
        exact: true,
        witness: Some(witness),
    })
}

/// Lexicographically smallest `x` in F_q^n with `H x^T` in `targets`.
///
/// Digit `j` is the smallest value for which some target stays reachable
/// using the remaining columns, i.e. for which the partial syndrome agrees
/// with a target modulo the span of columns `j+1..n`.
fn smallest_in_syndromes(
    field: &Field,
    columns: &[Word],
    r: usize,
    targets: &[Word],
) -> Result<Word> {
    let n = columns.len();
    let mut partial: Word = vec![0; r];
    let mut x = Vec::with_capacity(n);
    for j in 0..n {
        let tail = Matrix::from_rows(field, r, &columns[j + 1..])?.echelon();
        let reachable: HashSet<Word> = if tail.rank == r {
            HashSet::from([vec![0; r]])
        } else {
            targets.iter().map(|t| reduce_modulo(t, &tail)).collect()
        };
        let digit = field
            .elements()
            .find(|&a| {
                let trial: Word = partial
                    .iter()
                    .zip(&columns[j])
                    .map(|(&p, &c)| field.add(p, field.mul(a, c)))
                    .collect();
                tail.rank == r || reachable.contains(&reduce_modulo(&trial, &tail))
            })
            .ok_or_else(|| Error::SelfCheckFailed("no deepest vector reachable".into()))?;
        for (p, &c) in partial.iter_mut().zip(&columns[j]) {
            *p = field.add(*p, field.mul(digit, c));
        }
        x.push(digit);
    }
    Ok(x)
}

/// Max distance to the code over random points: a lower estimate only.
fn sample_lower(code: &AnyCode, budget: Budget, seed: u64) -> Result<RadiusResult> {
    let explicit = code.to_explicit(budget)?;
    let (q, n) = (explicit.field().q(), explicit.n());
    let per_point = explicit.len().max(1) as u64;
    let samples = (budget.limit() / per_point).clamp(1, 4096);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..samples {
        let x: Word = (0..n).map(|_| rng.gen_range(0..q) as Symbol).collect();
        let d = explicit
            .words()
            .iter()
            .map(|c| hamming(&x, c).expect("equal lengths"))
            .min()
            .unwrap_or(0);
        best = best.max(d);
    }
    Ok(RadiusResult {
        radius: best,
        method: MethodUsed::SampleLower,
        exact: false,
        witness: None,
    })
}

fn exact_radius(code: &AnyCode, opts: &RadiusOptions) -> Result<RadiusResult> {
    match (opts.method, code) {
        (RadiusMethod::CosetLeader | RadiusMethod::Auto, AnyCode::Linear(c)) => {
            coset_leader(c, opts.budget)
        }
        (RadiusMethod::CosetLeader, AnyCode::Explicit(_)) => Err(Error::MethodInapplicable(
            "coset-leader search needs a linear code".into(),
        )),
        (_, AnyCode::Explicit(c)) => exhaustive(c.field(), c.n(), c.words(), opts.budget),
        (RadiusMethod::Exhaustive, AnyCode::Linear(c)) => {
            budget_both(c, opts.budget)?;
            exhaustive(c.field(), c.n(), &c.codewords(opts.budget)?, opts.budget)
        }
    }
}

fn budget_both(c: &LinearCode, budget: Budget) -> Result<()> {
    budget.check(pow_sat(c.field().q(), c.n()))
}

/// Covering radius with the chosen method. Budget failures become a
/// flagged lower estimate only when `allow_estimate` is set.
pub fn covering_radius_with(code: &AnyCode, opts: &RadiusOptions) -> Result<RadiusResult> {
    match exact_radius(code, opts) {
        Err(Error::BudgetExceeded { .. }) if opts.allow_estimate => {
            sample_lower(code, opts.budget, opts.seed)
        }
        other => other,
    }
}

pub fn covering_radius(code: &AnyCode, method: RadiusMethod, budget: Budget) -> Result<RadiusResult> {
    covering_radius_with(
        code,
        &RadiusOptions {
            method,
            budget,
            ..RadiusOptions::default()
        },
    )
}

pub fn linear_radius(code: &LinearCode, budget: Budget) -> Result<RadiusResult> {
    coset_leader(code, budget)
}

pub fn explicit_radius(code: &Code, budget: Budget) -> Result<RadiusResult> {
    exhaustive(code.field(), code.n(), code.words(), budget)
}

/// Number of distinct nonzero weights in the dual code, an upper bound on
/// the covering radius.
pub fn delsarte_bound(code: &LinearCode, budget: Budget) -> Result<usize> {
    let dual = code.dual();
    if dual.k() == 0 {
        return Ok(0);
    }
    let dist = dual.weight_distribution(budget)?;
    Ok(dist.iter().skip(1).filter(|&&a| a > 0).count())
}

pub fn delsarte_result(code: &LinearCode, budget: Budget) -> Result<RadiusResult> {
    Ok(RadiusResult {
        radius: delsarte_bound(code, budget)?,
        method: MethodUsed::DelsarteUpper,
        exact: false,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    fn radius(spec: FamilySpec) -> usize {
        let c = construct(&spec).unwrap();
        linear_radius(&c, Budget::default()).unwrap().radius
    }

    #[test]
    fn family_radii() {
        assert_eq!(radius(FamilySpec::Hamming { q: 2, m: 3 }), 1);
        assert_eq!(radius(FamilySpec::GolayTernary), 2);
        assert_eq!(radius(FamilySpec::GolayBinary), 3);
        assert_eq!(radius(FamilySpec::ReedSolomon { q: 7, n: 7, k: 3, points: None }), 4);
        assert_eq!(radius(FamilySpec::ReedMuller1 { m: 4 }), 6);
        assert_eq!(radius(FamilySpec::BlockDiagonal { q: 2, m: 3, u: 2 }), 2);
    }

    #[test]
    fn methods_agree_with_witness() {
        let c = construct(&FamilySpec::ReedSolomon { q: 5, n: 5, k: 2, points: None }).unwrap();
        let b = Budget::default();
        let any = AnyCode::Linear(c.clone());
        let a = covering_radius(&any, RadiusMethod::Exhaustive, b).unwrap();
        let s = covering_radius(&any, RadiusMethod::CosetLeader, b).unwrap();
        assert_eq!(a.radius, 3);
        assert_eq!(a.witness, s.witness);
        let w = a.witness.unwrap();
        let explicit = c.to_code(b).unwrap();
        let d = explicit.words().iter().map(|x| hamming(x, &w).unwrap()).min().unwrap();
        assert_eq!(d, 3);
    }

    #[test]
    fn exhaustive_on_small_explicit_code() {
        let f = Field::new(2).unwrap();
        let c = Code::new(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        let r = explicit_radius(&c, Budget::default()).unwrap();
        assert_eq!((r.radius, r.witness), (1, Some(vec![0, 0, 1])));
    }

    #[test]
    fn coset_rejects_explicit() {
        let f = Field::new(2).unwrap();
        let c = AnyCode::Explicit(Code::new(&f, 2, vec![vec![0, 0]]).unwrap());
        assert!(matches!(
            covering_radius(&c, RadiusMethod::CosetLeader, Budget::default()),
            Err(Error::MethodInapplicable(_))
        ));
    }

    #[test]
    fn budget_failure_and_estimate() {
        let c = AnyCode::Linear(construct(&FamilySpec::GolayBinary).unwrap());
        let tight = Budget::new(1000);
        assert!(matches!(
            covering_radius(&c, RadiusMethod::Auto, tight),
            Err(Error::BudgetExceeded { .. })
        ));
        // RM(1,5): 2^26 syndromes but only 64 codewords.
        let rm = AnyCode::Linear(construct(&FamilySpec::ReedMuller1 { m: 5 }).unwrap());
        let est = covering_radius_with(
            &rm,
            &RadiusOptions {
                budget: Budget::new(1 << 16),
                allow_estimate: true,
                ..Default::default()
            },
        );
        let est = est.unwrap();
        assert!(!est.exact && est.radius <= 12 && est.radius >= 6);
        assert_eq!(est.method, MethodUsed::SampleLower);
        assert!(!est.is_sound_upper_bound());
    }

    #[test]
    fn delsarte_examples() {
        let b = Budget::default();
        let kasami_dual = construct(&FamilySpec::Kasami { m: 2 }).unwrap().dual();
        assert_eq!((kasami_dual.n(), kasami_dual.k()), (15, 9));
        assert_eq!(delsarte_bound(&kasami_dual, b).unwrap(), 3);
        let ham = construct(&FamilySpec::Hamming { q: 2, m: 3 }).unwrap();
        assert_eq!(delsarte_bound(&ham, b).unwrap(), 1);
        let full = LinearCode::new(Matrix::identity(&Field::new(3).unwrap(), 4)).unwrap();
        assert_eq!(delsarte_bound(&full, b).unwrap(), 0);
        assert_eq!(linear_radius(&full, b).unwrap().radius, 0);
    }
}
