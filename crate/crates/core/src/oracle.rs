//! Brute-force ground truth for tiny parameters: the largest code with a given
//! minimum distance, `A_q(n, d)`, and the smallest code with a given covering
//! radius, `K_q(n, R)`. Both searches are exact and their witnesses are
//! re-verified through the codes and covering modules.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Field, Matrix, Symbol};
use crate::budget::{ball_volume, pow_sat, Budget};
use crate::codes::{index_to_word, word_to_index, Code, LinearCode, Word};
use crate::covering::{explicit_radius, for_each_in_ball, greedy_covering_search};
use crate::error::{Error, Result};

/// Default limit on `q^n`.
pub const DEFAULT_CAP: u128 = 729;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Largest admissible `q^n`.
    pub cap: u128,
    /// Limit on search nodes.
    pub budget: Budget,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            cap: DEFAULT_CAP,
            budget: Budget::from_env(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: usize,
    #[serde(serialize_with = "serialize_words")]
    pub witness: Code,
    pub stats: SearchStats,
}

fn serialize_words<S: serde::Serializer>(c: &Code, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(c.len()))?;
    for w in c.words() {
        let text: String = w.iter().map(|&x| std::char::from_digit(x as u32, 36).expect("q <= 36")).collect();
        seq.serialize_element(&text)?;
    }
    seq.end()
}

fn check_cap(q: usize, n: usize, opts: &OracleOptions) -> Result<usize> {
    let space = pow_sat(q, n);
    if space > opts.cap {
        return Err(Error::BudgetExceeded {
            needed: space,
            limit: opts.cap.min(u64::MAX as u128) as u64,
        });
    }
    Ok(space as usize)
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(size: usize) -> Bits {
        Bits(vec![0; size.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

fn places(q: usize, n: usize) -> Vec<usize> {
    (0..n).map(|i| q.pow((n - 1 - i) as u32)).collect()
}

fn hamming_index(mut a: usize, mut b: usize, q: usize, n: usize) -> usize {
    let mut d = 0;
    for _ in 0..n {
        d += usize::from(a % q != b % q);
        a /= q;
        b /= q;
    }
    d
}

struct Clique<'a> {
    adj: &'a [Bits],
    /// Size to beat: the shared incumbent in the value pass, `target - 1`
    /// in the witness pass.
    global: &'a AtomicUsize,
    nodes: &'a AtomicU64,
    limit: u64,
    best: Vec<usize>,
    /// Stop as soon as a clique of this size is found.
    target: usize,
    /// Upper bound on the whole graph; reaching it ends every branch.
    ceiling: usize,
}

impl Clique<'_> {
    /// Greedy coloring of `cand`; returns vertices ordered by color with
    /// their color numbers (1-based).
    fn color(&self, cand: &Bits) -> (Vec<usize>, Vec<usize>) {
        let mut left = cand.clone();
        let mut order = Vec::with_capacity(cand.count());
        let mut colors = Vec::with_capacity(order.capacity());
        let mut k = 0;
        while !left.is_empty() {
            k += 1;
            let mut q = left.clone();
            while let Some(v) = q.first() {
                q.clear(v);
                q.and_not_assign(&self.adj[v]);
                left.clear(v);
                order.push(v);
                colors.push(k);
            }
        }
        (order, colors)
    }

    /// Returns `true` once a clique of the target size is found.
    fn expand(&mut self, clique: &mut Vec<usize>, mut cand: Bits) -> Result<bool> {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if seen > self.limit {
            return Err(Error::BudgetExceeded {
                needed: seen as u128,
                limit: self.limit,
            });
        }
        if self.global.load(Ordering::Relaxed) >= self.ceiling {
            return Ok(false);
        }
        let (order, colors) = self.color(&cand);
        for idx in (0..order.len()).rev() {
            if clique.len() + colors[idx] <= self.global.load(Ordering::Relaxed) {
                return Ok(false);
            }
            let v = order[idx];
            let next = cand.and(&self.adj[v]);
            clique.push(v);
            if next.is_empty() {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                    self.global.fetch_max(clique.len(), Ordering::Relaxed);
                    if clique.len() >= self.target {
                        return Ok(true);
                    }
                }
            } else if self.expand(clique, next)? {
                return Ok(true);
            }
            clique.pop();
            cand.clear(v);
        }
        Ok(false)
    }
}

/// Canonical third codewords once the first two are `0` and `1^w 0^(n-w)`:
/// on the first `w` coordinates a run of 1s, then a run of 2s (q > 2), then
/// 0s; on the rest a run of 1s then 0s.
fn third_words(q: usize, n: usize, w: usize, min_dist: usize, place: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for a in 0..=w {
        let max_c = if q > 2 { w - a } else { 0 };
        for c in 0..=max_c {
            for b in 0..=n - w {
                // Distance to 0 and to 1^w 0^(n-w).
                let (to_zero, to_second) = (a + c + b, (w - a) + b);
                if to_zero < min_dist || to_second < min_dist {
                    continue;
                }
                let idx: usize = place[..a].iter().sum::<usize>()
                    + 2 * place[a..a + c].iter().sum::<usize>()
                    + place[w..w + b].iter().sum::<usize>();
                out.push(idx);
            }
        }
    }
    out
}

/// Linear code of length `n` and distance at least `d` whose parity-check
/// columns are picked greedily, in index order, so that any `d - 1` of them
/// are independent. Tries redundancy `0, 1, ...` and returns the codewords
/// for the first redundancy that yields `n` columns.
fn greedy_linear(field: &Field, n: usize, d: usize) -> Result<Option<Vec<Word>>> {
    let q = field.q();
    if d <= 1 {
        return Ok(None);
    }
    for r in 1..=n {
        let space = q.pow(r as u32);
        let add = |a: usize, b: usize, scale: Symbol| -> usize {
            let (x, y) = (index_to_word(a, q, r), index_to_word(b, q, r));
            let z: Word = x.iter().zip(&y).map(|(&u, &v)| field.add(u, field.mul(scale, v))).collect();
            word_to_index(&z, q)
        };
        // reach[j]: combinations of at most j chosen columns.
        let mut reach = vec![vec![false; space]; d - 1];
        for layer in reach.iter_mut() {
            layer[0] = true;
        }
        // Distance 2 only needs nonzero columns, which may repeat.
        let mut columns = if d == 2 { vec![1; n] } else { Vec::new() };
        for c in 1..space {
            if columns.len() == n {
                break;
            }
            if reach[d - 2][c] {
                continue;
            }
            columns.push(c);
            for j in (1..d - 1).rev() {
                let below: Vec<usize> = (0..space).filter(|&s| reach[j - 1][s]).collect();
                for s in below {
                    for a in 1..q {
                        let t = add(s, c, a as Symbol);
                        reach[j][t] = true;
                    }
                }
            }
        }
        if columns.len() == n {
            let rows: Vec<Word> = (0..r)
                .map(|i| columns.iter().map(|&c| index_to_word(c, q, r)[i]).collect())
                .collect();
            let h = Matrix::from_rows(field, n, &rows)?;
            return Ok(Some(LinearCode::from_parity_check(&h).codewords(Budget::new(u64::MAX))?));
        }
    }
    Ok(None)
}

/// Exact `A_q(n, d)` by maximum clique on the graph joining words at distance
/// at least `d`.
///
/// Symmetry breaking: a closest pair of codewords is moved to `0` and
/// `1^w 0^(n-w)`, where `w >= d` is the minimum distance, so every branch
/// only joins words at distance at least `w`. A third codeword is then
/// brought to a canonical form under the coordinate permutations and symbol
/// relabelings that fix the first two. Binary searches run over even-weight
/// words, using `A_2(n, 2t-1) = A_2(n+1, 2t)` for odd `d` and puncturing the
/// witness back.
///
/// The larger of the lexicographic greedy code and a greedy linear code seeds
/// the search. A parallel pass finds the
/// value; unless the greedy code already attains it, a sequential pass over
/// the branches in order picks the witness, so the witness does not depend
/// on the thread schedule.
pub fn exact_a(q: usize, n: usize, d: usize, opts: &OracleOptions) -> Result<OracleResult> {
    let start = Instant::now();
    let field = Field::new(q)?;
    if n == 0 || d == 0 {
        return Err(Error::BadParams(format!("need n >= 1 and d >= 1, got n={n} d={d}")));
    }
    if d > n {
        return Ok(OracleResult {
            value: 1,
            witness: Code::new(&field, n, vec![vec![0; n]])?,
            stats: SearchStats { nodes: 0, elapsed_ms: 0 },
        });
    }
    check_cap(q, n, opts)?;
    let extend = q == 2 && d % 2 == 1;
    let (n2, d2) = if extend { (n + 1, d + 1) } else { (n, d) };
    let size = pow_sat(q, n2) as usize;
    let allowed = |v: usize| q != 2 || v.count_ones() % 2 == 0;
    let mut mask = Bits::empty(size);
    for v in (0..size).filter(|&v| allowed(v)) {
        mask.set(v);
    }
    let dist: Vec<Vec<u8>> = (0..size)
        .into_par_iter()
        .map(|v| (0..size).map(|u| hamming_index(u, v, q, n2) as u8).collect())
        .collect();
    let adjacency = |w: usize| -> Vec<Bits> {
        dist.par_iter()
            .map(|row| {
                let mut b = Bits::empty(size);
                for (u, &x) in row.iter().enumerate() {
                    if x as usize >= w {
                        b.set(u);
                    }
                }
                b.and(&mask)
            })
            .collect()
    };
    let adj_by_w: Vec<Vec<Bits>> = (d2..=n2).map(adjacency).collect();
    let ceiling = {
        let probe = Clique {
            adj: &adj_by_w[0],
            global: &AtomicUsize::new(0),
            nodes: &AtomicU64::new(0),
            limit: 0,
            best: Vec::new(),
            target: 0,
            ceiling: 0,
        };
        probe.color(&mask).1.last().copied().unwrap_or(1)
    };
    let place = places(q, n2);
    let mut branches: Vec<(usize, usize, usize)> = Vec::new();
    for w in d2..=n2 {
        let second: usize = place[..w].iter().sum();
        if !allowed(second) {
            continue;
        }
        for t in third_words(q, n2, w, w, &place).into_iter().filter(|&t| allowed(t)) {
            branches.push((w, second, t));
        }
    }
    // Two words at distance at least d exist once d <= n.
    let pair = if extend { vec![0, size - 2] } else { vec![0, size - 1] };
    let nodes = AtomicU64::new(0);
    let run = |(w, second, third): (usize, usize, usize), global: &AtomicUsize, target: usize| {
        let adj = &adj_by_w[w - d2];
        let cand = adj[0].and(&adj[second]).and(&adj[third]);
        let mut clique = vec![0, second, third];
        let mut search = Clique {
            adj,
            global,
            nodes: &nodes,
            limit: opts.budget.limit(),
            best: clique.clone(),
            target,
            ceiling,
        };
        global.fetch_max(3, Ordering::Relaxed);
        if !cand.is_empty() {
            search.expand(&mut clique, cand)?;
        }
        Ok::<_, Error>(search.best)
    };
    // Greedy codes give a lower bound and the preferred witness.
    let adj = &adj_by_w[0];
    let mut lexicode: Vec<usize> = Vec::new();
    let mut open = mask.clone();
    while let Some(v) = open.first() {
        lexicode.push(v);
        open = open.and(&adj[v]);
    }
    if let Some(words) = greedy_linear(&field, n, d)? {
        let mut seed: Vec<usize> = words
            .iter()
            .map(|w| {
                let mut w = w.clone();
                if extend {
                    w.push((w.iter().map(|&x| x as usize).sum::<usize>() % 2) as u8);
                }
                word_to_index(&w, q)
            })
            .collect();
        seed.sort_unstable();
        if seed.len() > lexicode.len() {
            lexicode = seed;
        }
    }
    let global = AtomicUsize::new(lexicode.len().max(2));
    let results: Vec<Result<Vec<usize>>> = branches
        .par_iter()
        .map(|&b| run(b, &global, usize::MAX))
        .collect();
    for r in results {
        r?;
    }
    let value = global.load(Ordering::Relaxed);
    let mut best = if lexicode.len() >= 2 { lexicode } else { pair };
    if value > best.len() {
        for &b in &branches {
            let found = run(b, &AtomicUsize::new(value - 1), value)?;
            if found.len() == value {
                best = found;
                break;
            }
        }
    }
    best.sort_unstable();
    let words = best
        .iter()
        .map(|&i| {
            let mut w = index_to_word(i, q, n2);
            w.truncate(n);
            w
        })
        .collect();
    let witness = Code::new(&field, n, words)?;
    if witness.len() != value || witness.min_distance(opts.budget)? < d {
        return Err(Error::SelfCheckFailed("clique witness does not reach the search value".into()));
    }
    Ok(OracleResult {
        value,
        witness,
        stats: SearchStats {
            nodes: nodes.load(Ordering::Relaxed),
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

struct Cover<'a> {
    balls: &'a [Bits],
    volume: usize,
    nodes: u64,
    limit: u64,
    best: Vec<usize>,
    floor: usize,
}

impl Cover<'_> {
    fn search(&mut self, chosen: &mut Vec<usize>, uncovered: &Bits, excluded: &mut Bits) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded {
                needed: self.nodes as u128,
                limit: self.limit,
            });
        }
        let left = uncovered.count();
        if left == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(self.best.len() <= self.floor);
        }
        if chosen.len() + left.div_ceil(self.volume) >= self.best.len() {
            return Ok(false);
        }
        let e = uncovered.first().expect("nonempty");
        // Balls through e are the balls centered in B(e, R).
        let mut options: Vec<(usize, usize)> = self.balls[e]
            .iter()
            .filter(|&c| !excluded.has(c))
            .map(|c| (self.balls[c].and(uncovered).count(), c))
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut tried = Vec::new();
        let mut result = Ok(false);
        for (_, c) in options {
            let mut next = uncovered.clone();
            next.and_not_assign(&self.balls[c]);
            chosen.push(c);
            let r = self.search(chosen, &next, excluded);
            chosen.pop();
            match r {
                Ok(false) => {}
                other => {
                    result = other;
                    break;
                }
            }
            // Later branches need not reuse a center already explored for e.
            excluded.set(c);
            tried.push(c);
        }
        for c in tried {
            excluded.clear(c);
        }
        result
    }
}

/// Exact `K_q(n, R)` by branch-and-bound set cover with Hamming balls,
/// seeded with a greedy cover and pruned by the sphere-covering count.
pub fn exact_k(q: usize, n: usize, r: usize, opts: &OracleOptions) -> Result<OracleResult> {
    let start = Instant::now();
    let field = Field::new(q)?;
    if n == 0 {
        return Err(Error::BadParams("need n >= 1".into()));
    }
    let size = check_cap(q, n, opts)?;
    let r = r.min(n);
    let place = places(q, n);
    let balls: Vec<Bits> = (0..size)
        .map(|x| {
            let mut b = Bits::empty(size);
            for_each_in_ball(x, q, &place, r, &mut |y| b.set(y));
            b
        })
        .collect();
    let volume = ball_volume(q, n, r) as usize;
    let floor = size.div_ceil(volume);
    let greedy = greedy_covering_search(q, n, r, 0, 0, opts.budget)?;
    let mut search = Cover {
        balls: &balls,
        volume,
        nodes: 0,
        limit: opts.budget.limit(),
        best: greedy.words().iter().map(|w| word_to_index(w, q)).collect(),
        floor,
    };
    if search.best.len() > floor {
        // Translate so that the cover contains zero.
        let mut uncovered = Bits::empty(size);
        for i in 0..size {
            uncovered.set(i);
        }
        uncovered.and_not_assign(&balls[0]);
        let mut chosen = vec![0];
        let mut excluded = Bits::empty(size);
        search.search(&mut chosen, &uncovered, &mut excluded)?;
    }
    let mut best = search.best.clone();
    best.sort_unstable();
    let words = best.iter().map(|&i| index_to_word(i, q, n)).collect();
    let witness = Code::new(&field, n, words)?;
    if explicit_radius(&witness, opts.budget)?.radius > r {
        return Err(Error::SelfCheckFailed("cover witness has radius above R".into()));
    }
    Ok(OracleResult {
        value: witness.len(),
        witness,
        stats: SearchStats {
            nodes: search.nodes,
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}
