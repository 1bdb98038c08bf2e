//! Combinatorial list decodability: how many codewords the worst Hamming ball
//! of a given radius can hold, and the covering-code bound checked on actual
//! codes.

use serde::Serialize;

use crate::budget::{ball_volume, pow_sat, Budget};
use crate::codes::{index_to_word, word_to_index, Code, Word};
use crate::covering::{explicit_radius, for_each_in_ball};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListProfile {
    pub radius: usize,
    /// Largest number of codewords in one ball of this radius.
    pub max_count: usize,
    /// Lexicographically smallest center achieving `max_count`.
    pub witness_center: Word,
}

impl ListProfile {
    /// Whether the code is `(radius, list)` list-decodable.
    pub fn decodable_with(&self, list: usize) -> bool {
        self.max_count <= list
    }
}

/// `counts[x] = |B(x, radius) ∩ C|` for every `x` in F_q^n.
fn ball_counts(c: &Code, radius: usize, budget: Budget) -> Result<Vec<u32>> {
    let (q, n) = (c.field().q(), c.n());
    let space = pow_sat(q, n);
    let work = space.saturating_add((c.len() as u128).saturating_mul(ball_volume(q, n, radius)));
    budget.check(work)?;
    let place: Vec<usize> = (0..n).map(|i| q.pow((n - 1 - i) as u32)).collect();
    let mut counts = vec![0u32; space as usize];
    for w in c.words() {
        for_each_in_ball(word_to_index(w, q), q, &place, radius.min(n), &mut |y| counts[y] += 1);
    }
    Ok(counts)
}

fn profile_from(counts: &[u32], q: usize, n: usize, radius: usize) -> ListProfile {
    let max = counts.iter().copied().max().unwrap_or(0);
    let at = counts.iter().position(|&v| v == max).unwrap_or(0);
    ListProfile {
        radius,
        max_count: max as usize,
        witness_center: index_to_word(at, q, n),
    }
}

/// Exact maximum of `|B(x, radius) ∩ C|` over all `q^n` centers.
pub fn max_list_size(c: &Code, radius: usize, budget: Budget) -> Result<ListProfile> {
    let counts = ball_counts(c, radius, budget)?;
    Ok(profile_from(&counts, c.field().q(), c.n(), radius))
}

/// Outcome of checking `|C| <= L |C'|` on concrete codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverVerdict {
    pub code_size: usize,
    pub cover_size: usize,
    pub cover_radius: usize,
    /// Measured list size of the code at `radius`.
    pub list: usize,
    pub holds: bool,
    /// Codewords in the radius ball around each cover word, in cover order.
    pub census: Vec<usize>,
    /// A codeword no cover ball reaches, or a cover word whose ball holds
    /// more than `list` codewords. Either means a bug upstream.
    pub counterexample: Option<Word>,
}

/// Checks the covering-code bound for `c` against `cover`, whose covering
/// radius is computed exactly and must not exceed `radius`.
pub fn verify_covering_bound(c: &Code, cover: &Code, radius: usize, budget: Budget) -> Result<CoverVerdict> {
    if c.field() != cover.field() || c.n() != cover.n() {
        return Err(Error::BadParams("code and cover must share q and n".into()));
    }
    let r = explicit_radius(cover, budget)?;
    if !r.exact {
        return Err(Error::RadiusNotVerified);
    }
    if r.radius > radius {
        return Err(Error::RadiusTooLarge {
            radius: r.radius,
            limit: radius,
        });
    }
    let (q, n) = (c.field().q(), c.n());
    let counts = ball_counts(c, radius, budget)?;
    let profile = profile_from(&counts, q, n, radius);
    let census: Vec<usize> = cover
        .words()
        .iter()
        .map(|w| counts[word_to_index(w, q)] as usize)
        .collect();
    let mut counterexample = cover
        .words()
        .iter()
        .zip(&census)
        .find(|(_, &k)| k > profile.max_count)
        .map(|(w, _)| w.clone());
    if counterexample.is_none() {
        let cover_counts = ball_counts(cover, radius, budget)?;
        counterexample = c
            .words()
            .iter()
            .find(|w| cover_counts[word_to_index(w, q)] == 0)
            .cloned();
    }
    let holds = counterexample.is_none() && c.len() <= profile.max_count * cover.len();
    Ok(CoverVerdict {
        code_size: c.len(),
        cover_size: cover.len(),
        cover_radius: r.radius,
        list: profile.max_count,
        holds,
        census,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::covering::greedy_covering_search;

    fn code(q: usize, words: &[&[u8]]) -> Code {
        let f = Field::new(q).unwrap();
        Code::new(&f, words[0].len(), words.iter().map(|w| w.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        let b = Budget::default();
        let full = Code::full_space(&Field::new(2).unwrap(), 2, b).unwrap();
        assert_eq!(max_list_size(&full, 1, b).unwrap().max_count, 3);
        let p = max_list_size(&code(2, &[&[0, 0], &[1, 1]]), 1, b).unwrap();
        assert_eq!((p.max_count, p.witness_center.clone()), (2, vec![0, 1]));
        assert_eq!(max_list_size(&code(2, &[&[0, 0, 0], &[1, 1, 1]]), 1, b).unwrap().max_count, 1);
        assert_eq!(max_list_size(&full, 0, b).unwrap().max_count, 1);
    }

    #[test]
    fn cover_bound_trivial_cases() {
        let b = Budget::default();
        let f = Field::new(2).unwrap();
        let full = Code::full_space(&f, 4, b).unwrap();
        let v = verify_covering_bound(&full, &full, 0, b).unwrap();
        assert!(v.holds);
        assert_eq!((v.code_size, v.list * v.cover_size), (16, 16));
        let cover = greedy_covering_search(2, 6, 1, 3, 2, b).unwrap();
        let v = verify_covering_bound(&cover, &cover, 1, b).unwrap();
        assert!(v.holds && v.list >= 1);
        assert!(matches!(
            verify_covering_bound(&full, &cover, 0, b),
            Err(Error::BadParams(_))
        ));
        let c6 = Code::full_space(&f, 6, b).unwrap();
        assert!(matches!(
            verify_covering_bound(&c6, &cover, 0, b),
            Err(Error::RadiusTooLarge { radius: 1, limit: 0 })
        ));
    }
}
