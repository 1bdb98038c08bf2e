use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::radius::explicit_radius;
use crate::algebra::Field;
use crate::budget::{ball_volume, pow_sat, Budget};
use crate::codes::{index_to_word, Code};
use crate::error::{Error, Result};

/// Calls `f` on every index within Hamming distance `r` of `x` in F_q^n
/// (index order: first coordinate most significant).
pub(crate) fn for_each_in_ball(x: usize, q: usize, place: &[usize], r: usize, f: &mut dyn FnMut(usize)) {
    f(x);
    if r > 0 {
        ball_rec(x, q, place, 0, r, f);
    }
}

fn ball_rec(x: usize, q: usize, place: &[usize], from: usize, left: usize, f: &mut dyn FnMut(usize)) {
    for i in from..place.len() {
        let w = place[i];
        let digit = x / w % q;
        let base = x - digit * w;
        for d in 0..q {
            if d == digit {
                continue;
            }
            let y = base + d * w;
            f(y);
            if left > 1 {
                ball_rec(y, q, place, i + 1, left - 1, f);
            }
        }
    }
}

struct Greedy<'a> {
    q: usize,
    place: &'a [usize],
    radius: usize,
}

impl Greedy<'_> {
    /// One greedy pass. With `rng`, the first center is random and ties are
    /// broken uniformly; without it, the smallest index wins every tie.
    fn run(&self, size: usize, mut rng: Option<&mut ChaCha8Rng>) -> Vec<usize> {
        let (q, place, r) = (self.q, self.place, self.radius);
        let volume = ball_volume(q, place.len(), r) as u32;
        let mut gain = vec![volume; size];
        let mut covered = vec![false; size];
        let mut uncovered = size;
        let mut centers = Vec::new();
        let mut first = rng.as_deref_mut().map(|g| g.gen_range(0..size));
        while uncovered > 0 {
            let pick = match first.take() {
                Some(p) => p,
                None => {
                    let best = *gain.iter().max().expect("nonempty");
                    match rng.as_deref_mut() {
                        None => gain.iter().position(|&g| g == best).expect("max exists"),
                        Some(g) => {
                            // Reservoir choice among the maximizers.
                            let mut chosen = 0;
                            let mut seen = 0u32;
                            for (i, &v) in gain.iter().enumerate() {
                                if v == best {
                                    seen += 1;
                                    if g.gen_range(0..seen) == 0 {
                                        chosen = i;
                                    }
                                }
                            }
                            chosen
                        }
                    }
                }
            };
            centers.push(pick);
            let mut newly = Vec::new();
            for_each_in_ball(pick, q, place, r, &mut |y| {
                if !covered[y] {
                    covered[y] = true;
                    newly.push(y);
                }
            });
            uncovered -= newly.len();
            for y in newly {
                for_each_in_ball(y, q, place, r, &mut |z| gain[z] -= 1);
            }
        }
        centers.sort_unstable();
        centers
    }
}

/// Greedy covering code of radius `r` in F_q^n.
///
/// Pass 0 is the deterministic greedy (most newly covered points, smallest
/// vector on ties). Each of the `restarts` further passes starts from a
/// seeded random center and breaks ties randomly. The smallest result wins,
/// the earliest pass on equal sizes. The winner is verified by an exact
/// covering-radius computation.
pub fn greedy_covering_search(
    q: usize,
    n: usize,
    r: usize,
    seed: u64,
    restarts: usize,
    budget: Budget,
) -> Result<Code> {
    let field = Field::new(q)?;
    if n == 0 {
        return Err(Error::BadParams("length must be positive".into()));
    }
    let space = pow_sat(q, n);
    let volume = ball_volume(q, n, r);
    budget.check(space.saturating_mul(volume).saturating_mul(restarts as u128 + 1))?;
    let size = space as usize;
    let place: Vec<usize> = (0..n).map(|i| q.pow((n - 1 - i) as u32)).collect();
    let greedy = Greedy {
        q,
        place: &place,
        radius: r.min(n),
    };
    let best = (0..=restarts)
        .into_par_iter()
        .map(|pass| {
            if pass == 0 {
                greedy.run(size, None)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(pass as u64);
                greedy.run(size, Some(&mut rng))
            }
        })
        .reduce_with(|a, b| if b.len() < a.len() { b } else { a })
        .expect("at least one pass");
    let words = best.into_iter().map(|i| index_to_word(i, q, n)).collect();
    let code = Code::new(&field, n, words)?;
    let check = explicit_radius(&code, budget)?;
    if check.radius > r {
        return Err(Error::SelfCheckFailed(format!(
            "greedy cover has radius {} > {r}",
            check.radius
        )));
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_enumeration_matches_volume() {
        for (q, n, r) in [(2usize, 5usize, 2usize), (3, 4, 2), (4, 3, 3)] {
            let place: Vec<usize> = (0..n).map(|i| q.pow((n - 1 - i) as u32)).collect();
            let mut seen = Vec::new();
            for_each_in_ball(7, q, &place, r, &mut |y| seen.push(y));
            let len = seen.len();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(len, seen.len());
            assert_eq!(len as u128, ball_volume(q, n, r));
        }
    }

    #[test]
    fn hand_traced_binary_three() {
        let c = greedy_covering_search(2, 3, 1, 0, 0, Budget::default()).unwrap();
        assert_eq!(c.words(), &[vec![0, 0, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn restarts_are_deterministic() {
        let b = Budget::default();
        let a = greedy_covering_search(3, 4, 1, 11, 6, b).unwrap();
        let c = greedy_covering_search(3, 4, 1, 11, 6, b).unwrap();
        assert_eq!(a, c);
        let base = greedy_covering_search(3, 4, 1, 11, 0, b).unwrap();
        assert!(a.len() <= base.len());
    }
}
