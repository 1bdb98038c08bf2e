//! Locality of linear codes, `(r, delta)` recovery sets, and the distance and
//! length ceilings for locally recoverable codes.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{asymptotic_threshold, BoundResult, BoundValue, Quantity};
use crate::budget::Budget;
use crate::codes::{weight, LinearCode};
use crate::error::{Error, Result};

pub const LRC_SINGLETON: &str = "Singleton-like bound for locally recoverable codes";
pub const R_DELTA_SINGLETON: &str = "Singleton-like bound for (r, delta) locally recoverable codes";
pub const LRC_LENGTH_ASYMPTOTIC: &str = "length of Singleton-optimal LRCs from the asymptotic length-function bound";
pub const LRC_LENGTH_BLOCK: &str = "length of Singleton-optimal LRCs from block-diagonal covering codes";

/// A recovery set `set` for `coordinate` (which it contains) such that the
/// code punctured to `set` has minimum distance at least `delta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub coordinate: usize,
    pub set: Vec<usize>,
    pub delta: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoordinateStatus {
    Recoverable,
    /// Every codeword is zero here.
    IdenticallyZero,
    /// No dual codeword touches the coordinate.
    NoRecoverySet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateLocality {
    pub coordinate: usize,
    pub status: CoordinateStatus,
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalityProfile {
    /// Largest locality over recoverable, non-zero coordinates; `None` when
    /// some coordinate has no recovery set.
    pub r: Option<usize>,
    pub delta: usize,
    pub per_coordinate: Vec<CoordinateLocality>,
}

impl LocalityProfile {
    pub fn certificates(&self) -> Vec<Certificate> {
        self.per_coordinate.iter().filter_map(|c| c.certificate.clone()).collect()
    }
}

/// Plain locality from the supports of dual codewords: coordinate `i` needs
/// `w - 1` helpers, `w` the least weight of a dual word nonzero at `i`.
pub fn locality_profile(c: &LinearCode, budget: Budget) -> Result<LocalityProfile> {
    let n = c.n();
    let dual = c.dual();
    let mut best: Vec<Option<(usize, Vec<usize>)>> = vec![None; n];
    dual.for_each_codeword(budget, |w| {
        let wt = weight(w);
        if wt == 0 {
            return;
        }
        for i in 0..n {
            if w[i] != 0 && best[i].as_ref().is_none_or(|(b, _)| wt < *b) {
                let support = (0..n).filter(|&j| w[j] != 0).collect();
                best[i] = Some((wt, support));
            }
        }
    })?;
    let generator = c.generator();
    let zero_column = |i: usize| (0..generator.rows()).all(|r| generator.get(r, i) == 0);
    let per_coordinate: Vec<CoordinateLocality> = best
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            let status = if zero_column(i) {
                CoordinateStatus::IdenticallyZero
            } else if b.is_some() {
                CoordinateStatus::Recoverable
            } else {
                CoordinateStatus::NoRecoverySet
            };
            CoordinateLocality {
                coordinate: i,
                status,
                certificate: b.map(|(_, set)| Certificate {
                    coordinate: i,
                    set,
                    delta: 2,
                }),
            }
        })
        .collect();
    let r = if per_coordinate.iter().any(|c| c.status == CoordinateStatus::NoRecoverySet) {
        None
    } else {
        Some(
            per_coordinate
                .iter()
                .filter(|c| c.status == CoordinateStatus::Recoverable)
                .map(|c| c.certificate.as_ref().expect("recoverable").set.len() - 1)
                .max()
                .unwrap_or(0),
        )
    };
    Ok(LocalityProfile {
        r,
        delta: 2,
        per_coordinate,
    })
}

/// Minimum distance of `c` punctured to `set`; `None` for the zero code.
pub fn punctured_distance(c: &LinearCode, set: &[usize], budget: Budget) -> Result<Option<usize>> {
    let basis = c.generator().select_columns(set).row_space_basis();
    if basis.rows() == 0 {
        return Ok(None);
    }
    LinearCode::new(basis)?.min_distance(budget).map(Some)
}

/// Why a coordinate fails the `(r, delta)` condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalityFailure {
    pub coordinate: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RDeltaVerdict {
    pub r: usize,
    pub delta: usize,
    pub holds: bool,
    pub failure: Option<LocalityFailure>,
    /// One valid set per coordinate, when the verdict holds.
    pub certificates: Vec<Certificate>,
}

fn check_set(c: &LinearCode, j: usize, set: &[usize], r: usize, delta: usize, budget: Budget) -> Result<Option<String>> {
    if !set.contains(&j) {
        return Ok(Some(format!("set {set:?} does not contain {j}")));
    }
    if set.iter().any(|&i| i >= c.n()) {
        return Ok(Some(format!("set {set:?} has an index >= n")));
    }
    if set.len() > r + delta - 1 {
        return Ok(Some(format!("cardinality {} exceeds r+delta-1 = {}", set.len(), r + delta - 1)));
    }
    Ok(match punctured_distance(c, set, budget)? {
        Some(d) if d < delta => Some(format!("punctured distance {d} < delta on {set:?}")),
        _ => None,
    })
}

fn subsets_with(n: usize, j: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    fn rec(
        others: &[usize],
        from: usize,
        need: usize,
        cur: &mut Vec<usize>,
        j: usize,
        f: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        if need == 0 {
            let mut set = cur.clone();
            set.push(j);
            set.sort_unstable();
            return f(&set);
        }
        for i in from..others.len() {
            if others.len() - i < need {
                break;
            }
            cur.push(others[i]);
            let done = rec(others, i + 1, need - 1, cur, j, f)?;
            cur.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
    let others: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    rec(&others, 0, size - 1, &mut Vec::new(), j, f)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k.min(n)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Checks `(r, delta)` locality. With `certificates`, each coordinate must
/// lie in one of the given sets that is valid; without, the smallest valid
/// set is searched for by size, then lexicographically.
pub fn verify_r_delta(
    c: &LinearCode,
    r: usize,
    delta: usize,
    certificates: Option<&[Vec<usize>]>,
    budget: Budget,
) -> Result<RDeltaVerdict> {
    if delta < 2 {
        return Err(Error::BadParams(format!("delta must be at least 2, got {delta}")));
    }
    let n = c.n();
    let max_size = (r + delta - 1).min(n);
    if certificates.is_none() {
        let subsets: u128 = (1..=max_size).map(|s| binomial(n - 1, s - 1)).sum();
        budget.check(subsets.saturating_mul(n as u128))?;
    }
    let per: Vec<std::result::Result<Certificate, LocalityFailure>> = (0..n)
        .into_par_iter()
        .map(|j| -> Result<_> {
            match certificates {
                Some(sets) => {
                    let mut first_reason = None;
                    for set in sets.iter().filter(|s| s.contains(&j)) {
                        let mut sorted = set.clone();
                        sorted.sort_unstable();
                        match check_set(c, j, &sorted, r, delta, budget)? {
                            None => return Ok(Ok(Certificate { coordinate: j, set: sorted, delta })),
                            Some(why) => {
                                first_reason.get_or_insert(why);
                            }
                        }
                    }
                    Ok(Err(LocalityFailure {
                        coordinate: j,
                        reason: first_reason.unwrap_or_else(|| format!("no certificate contains {j}")),
                    }))
                }
                None => {
                    let mut found = None;
                    for size in 1..=max_size {
                        let hit = subsets_with(n, j, size, &mut |set| {
                            if check_set(c, j, set, r, delta, budget)?.is_none() {
                                found = Some(set.to_vec());
                                return Ok(true);
                            }
                            Ok(false)
                        })?;
                        if hit {
                            break;
                        }
                    }
                    Ok(match found {
                        Some(set) => Ok(Certificate { coordinate: j, set, delta }),
                        None => Err(LocalityFailure {
                            coordinate: j,
                            reason: format!("no set of size <= {max_size} containing {j} has punctured distance >= {delta}"),
                        }),
                    })
                }
            }
        })
        .collect::<Result<_>>()?;
    let failure = per.iter().find_map(|p| p.as_ref().err().cloned());
    Ok(RDeltaVerdict {
        r,
        delta,
        holds: failure.is_none(),
        failure,
        certificates: per.into_iter().filter_map(|p| p.ok()).collect(),
    })
}

/// Inputs for [`lrc_bounds`]. `radius` is `R` in `d = 2R+1` or `2R+2`.
#[derive(Debug, Clone, PartialEq)]
pub struct LrcParams {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub delta: Option<usize>,
    pub radius: Option<usize>,
    pub c: Option<f64>,
}

/// `d <= n - k + 2 - ceil(k/r)`.
pub fn lrc_singleton(n: usize, k: usize, r: usize) -> Option<usize> {
    (n + 2).checked_sub(k + k.div_ceil(r))
}

/// `d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1)`.
pub fn r_delta_singleton(n: usize, k: usize, r: usize, delta: usize) -> Option<usize> {
    (n + 1).checked_sub(k + (k.div_ceil(r) - 1) * (delta - 1))
}

/// Distance ceilings and length ceilings for Singleton-optimal LRCs.
pub fn lrc_bounds(p: &LrcParams) -> Result<Vec<BoundResult>> {
    if p.r == 0 {
        return Err(Error::MissingParam("r"));
    }
    if p.k == 0 || p.k > p.n {
        return Err(Error::BadParams(format!("need 1 <= k <= n, got k={} n={}", p.k, p.n)));
    }
    let mut out = Vec::new();
    let dist = |name: &str, cite: &str, v: Option<usize>| match v {
        Some(v) => BoundResult::ok(name, Quantity::Distance, BoundValue::int(v), cite),
        None => BoundResult::inapplicable(name, Quantity::Distance, cite, "ceiling is negative"),
    };
    out.push(dist("lrc_singleton", LRC_SINGLETON, lrc_singleton(p.n, p.k, p.r)));
    if let Some(delta) = p.delta {
        if delta < 2 {
            return Err(Error::BadParams("delta must be at least 2".into()));
        }
        out.push(dist("r_delta_singleton", R_DELTA_SINGLETON, r_delta_singleton(p.n, p.k, p.r, delta)));
    }
    let Some(radius) = p.radius else {
        return Ok(out);
    };
    let length = |name: &str, cite: &str, v: BigUint, cond: bool, cond_text: String| {
        if cond {
            BoundResult::ok(name, Quantity::Length, BoundValue::Integer(v), cite).with_reason(cond_text)
        } else {
            BoundResult::inapplicable(name, Quantity::Length, cite, format!("dimension condition fails: {cond_text}"))
        }
    };
    let block = BigUint::from(radius) * (BigUint::from(p.q).pow(4) - 1u8) / (p.q - 1);
    let plain_cond = p.k <= radius * p.r;
    let plain_text = format!("k={} <= R r = {}", p.k, radius * p.r);
    let asym = |cond: bool, text: String, name: &str| match p.c {
        None => BoundResult::inapplicable(name, Quantity::Length, LRC_LENGTH_ASYMPTOTIC, "needs the constant c"),
        Some(_) if radius < 3 => {
            BoundResult::inapplicable(name, Quantity::Length, LRC_LENGTH_ASYMPTOTIC, "needs R >= 3")
        }
        Some(c) => {
            let v = asymptotic_threshold(p.q, radius, 3, c).floor().max(0.0) as u64;
            length(name, LRC_LENGTH_ASYMPTOTIC, BigUint::from(v), cond, text)
                .assume("uses the caller-supplied constant c")
        }
    };
    out.push(asym(plain_cond, plain_text.clone(), "lrc_length_asymptotic"));
    out.push(length("lrc_length_block_diagonal", LRC_LENGTH_BLOCK, block.clone(), plain_cond, plain_text));
    if let Some(delta) = p.delta {
        // k <= ((R+1)/(delta+1) + 1) r, compared without division.
        let cond = p.k * (delta + 1) <= (radius + 1 + delta + 1) * p.r;
        let text = format!("k={} <= ((R+1)/(delta+1)+1) r", p.k);
        out.push(asym(cond, text.clone(), "r_delta_length_asymptotic"));
        out.push(length("r_delta_length_block_diagonal", LRC_LENGTH_BLOCK, block, cond, text));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Optimality {
    pub r: usize,
    pub delta: usize,
    pub d: usize,
    pub ceiling: usize,
    /// `ceiling - d`; zero means optimal.
    pub gap: usize,
}

impl Optimality {
    pub fn optimal(&self) -> bool {
        self.gap == 0
    }
}

/// Measured `d` against the Singleton-like ceiling at the measured locality.
/// For `delta > 2` the locality is the least `r` passing [`verify_r_delta`].
pub fn classify_optimal(c: &LinearCode, delta: usize, budget: Budget) -> Result<Optimality> {
    let d = c.min_distance(budget)?;
    let (n, k) = (c.n(), c.k());
    let r = if delta == 2 {
        locality_profile(c, budget)?
            .r
            .ok_or_else(|| Error::BadParams("some coordinate has no recovery set".into()))?
    } else {
        (0..=n)
            .find_map(|r| match verify_r_delta(c, r, delta, None, budget) {
                Ok(v) if v.holds => Some(Ok(r)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?
            .ok_or_else(|| Error::BadParams(format!("no (r, {delta}) locality")))?
    };
    let r_eff = r.max(1);
    let ceiling = if delta == 2 {
        lrc_singleton(n, k, r_eff)
    } else {
        r_delta_singleton(n, k, r_eff, delta)
    }
    .ok_or_else(|| Error::SelfCheckFailed("negative distance ceiling".into()))?;
    if d > ceiling {
        return Err(Error::SelfCheckFailed(format!("d={d} exceeds the ceiling {ceiling}")));
    }
    Ok(Optimality {
        r,
        delta,
        d,
        ceiling,
        gap: ceiling - d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::families::{construct, FamilySpec};

    fn binary(rows: &[&[u8]]) -> LinearCode {
        let f = Field::new(2).unwrap();
        LinearCode::from_rows(&f, rows[0].len(), &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn replication() -> LinearCode {
        binary(&[&[1, 1, 0, 0], &[0, 0, 1, 1]])
    }

    #[test]
    fn profiles() {
        let b = Budget::default();
        let p = locality_profile(&replication(), b).unwrap();
        assert_eq!(p.r, Some(1));
        assert_eq!(p.per_coordinate[2].certificate.as_ref().unwrap().set, vec![2, 3]);
        assert_eq!(locality_profile(&binary(&[&[1, 0, 1], &[0, 1, 1]]), b).unwrap().r, Some(2));
        let rs = construct(&FamilySpec::ReedSolomon { q: 5, n: 4, k: 2, points: None }).unwrap();
        assert_eq!(locality_profile(&rs, b).unwrap().r, Some(2));
        let full = binary(&[&[1, 0], &[0, 1]]);
        assert_eq!(locality_profile(&full, b).unwrap().r, None);
        let padded = binary(&[&[1, 1, 0]]);
        let p = locality_profile(&padded, b).unwrap();
        assert_eq!(p.per_coordinate[2].status, CoordinateStatus::IdenticallyZero);
    }

    #[test]
    fn r_delta_verdicts() {
        let b = Budget::default();
        let c = replication();
        let pairs = vec![vec![0, 1], vec![2, 3]];
        assert!(verify_r_delta(&c, 1, 2, Some(&pairs), b).unwrap().holds);
        let v = verify_r_delta(&c, 1, 3, Some(&pairs), b).unwrap();
        assert!(!v.holds);
        assert_eq!(v.failure.as_ref().unwrap().coordinate, 0);
        let v = verify_r_delta(&c, 1, 3, None, b).unwrap();
        assert!(!v.holds);
        let big = vec![vec![0, 1, 2, 3]];
        let v = verify_r_delta(&c, 1, 2, Some(&big), b).unwrap();
        assert!(v.failure.unwrap().reason.contains("cardinality"));
        let v = verify_r_delta(&c, 1, 2, None, b).unwrap();
        assert!(v.holds);
        assert_eq!(v.certificates[0].set, vec![0, 1]);
    }

    #[test]
    fn bounds_examples() {
        let base = LrcParams { q: 2, n: 4, k: 2, r: 1, delta: None, radius: None, c: None };
        let v = lrc_bounds(&base).unwrap();
        assert_eq!(v[0].exact(), Some(BigUint::from(2u8)));
        let wide = LrcParams { r: 5, ..base.clone() };
        assert_eq!(lrc_bounds(&wide).unwrap()[0].exact(), Some(BigUint::from(3u8)));
        let rd = LrcParams { delta: Some(2), ..base.clone() };
        let v = lrc_bounds(&rd).unwrap();
        assert_eq!(v[0].exact(), v[1].exact());
        let len = LrcParams { q: 3, n: 10, k: 2, r: 1, delta: None, radius: Some(2), c: None };
        let v = lrc_bounds(&len).unwrap();
        let block = v.iter().find(|b| b.name == "lrc_length_block_diagonal").unwrap();
        assert_eq!(block.exact(), Some(BigUint::from(80u8)));
        assert!(!v.iter().find(|b| b.name == "lrc_length_asymptotic").unwrap().applicable);
        assert_eq!(lrc_bounds(&LrcParams { r: 0, ..base }), Err(Error::MissingParam("r")));
    }

    #[test]
    fn optimality() {
        let b = Budget::default();
        assert!(classify_optimal(&replication(), 2, b).unwrap().optimal());
        let rs = construct(&FamilySpec::ReedSolomon { q: 5, n: 4, k: 2, points: None }).unwrap();
        assert!(classify_optimal(&rs, 2, b).unwrap().optimal());
        let padded = binary(&[&[1, 1, 0, 0, 1], &[0, 0, 1, 1, 1]]);
        let o = classify_optimal(&padded, 2, b).unwrap();
        assert_eq!((o.r, o.d, o.ceiling, o.gap), (2, 3, 4, 1));
    }
}
