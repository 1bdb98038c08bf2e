//! Size bounds obtained from explicit covering codes: few-weight codes with a
//! dual-weight radius bound, length-function tables, and the block-diagonal
//! Hamming construction. Every bound here holds for `(R, L)` list-decodable
//! codes with the value multiplied by `L`; with `L = 1` and `R` at most
//! `floor((d-1)/2)` it bounds codes of minimum distance `d`.

use num_bigint::BigUint;
use num_integer::Integer;

use super::classic::{big_ball_volume, CodeParams};
use super::cover::CoverRegistry;
use super::value::{BoundResult, BoundValue, Quantity};
use crate::algebra::{is_prime, prime_power};
use crate::covering::table::{lookup_length_all, TableValue};
use crate::error::{Error, Result};

pub const RM_COVER: &str = "covering radius of first-order Reed-Muller codes with the covering-code bound";
pub const COVER_2S7: &str = "covering radius of length 2s+7 codes with the covering-code bound";
pub const EVEN_Q_LENGTH: &str = "length-function bound for even q with the covering-code bound";
pub const LENGTH_FUNCTION: &str = "length-function bound with the covering-code bound";
pub const BINARY_FEW_WEIGHT: &str = "binary few-weight codes with the dual-weight covering bound";
pub const ODD_PRIME_FEW_WEIGHT: &str = "p-ary few-weight codes with the dual-weight covering bound";
pub const CYCLOTOMIC: &str = "cyclic few-weight codes with the dual-weight covering bound";
pub const BLOCK_DIAGONAL: &str = "block-diagonal Hamming parity-check covering codes";
pub const ASYMPTOTIC_LENGTH: &str = "asymptotic length-function bound with the covering-code bound";

const QUOTED_RADIUS: &str = "covering radius taken from the literature";
const QUOTED_LENGTH: &str = "length-function value taken from the literature";
const NEEDS_C: &str = "uses the caller-supplied constant c";

fn big_pow(q: usize, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// Parameters of the cyclic few-weight construction: `e` weights from the
/// exponents `a + Delta_i (q^m-1)/e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicParams {
    pub q: usize,
    pub m: usize,
    pub e: usize,
    pub a: u64,
    pub deltas: Vec<u64>,
}

/// Quantities derived from [`CyclotomicParams`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cyclotomic {
    pub delta: u64,
    /// Length `(q^m-1)/delta` of the few-weight code.
    pub n1: u64,
    /// `gcd((q^m-1)/(q-1), a e)`; the construction needs `N = 1`.
    pub big_n: u64,
}

impl CyclotomicParams {
    /// The default choice `Delta_i = i`.
    pub fn standard(q: usize, m: usize, e: usize, a: u64) -> Self {
        CyclotomicParams {
            q,
            m,
            e,
            a,
            deltas: (1..=e as u64).collect(),
        }
    }

    pub fn derive(&self) -> Result<Cyclotomic> {
        if prime_power(self.q).is_none() {
            return Err(Error::NotPrimePower(self.q));
        }
        let qm = (self.q as u64)
            .checked_pow(self.m as u32)
            .filter(|_| self.m >= 1)
            .ok_or_else(|| Error::BadParams(format!("q^m too large or m = 0 (m={})", self.m)))?
            - 1;
        let e = self.e as u64;
        if e < 2 || qm % e != 0 {
            return Err(Error::BadParams(format!("e={e} must be >= 2 and divide q^m-1={qm}")));
        }
        if self.a == 0 || self.a % qm == 0 {
            return Err(Error::BadParams(format!("a={} must be positive and not a multiple of q^m-1", self.a)));
        }
        if self.deltas.len() != self.e {
            return Err(Error::BadParams(format!("need {e} values Delta_i, got {}", self.deltas.len())));
        }
        let mut residues: Vec<u64> = self.deltas.iter().map(|d| d % e).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() != self.e {
            return Err(Error::BadParams("Delta_i must be distinct modulo e".into()));
        }
        let d1 = self.deltas[0] as i128;
        let g = self
            .deltas
            .iter()
            .fold(e as i128, |g, &d| g.gcd(&(d as i128 - d1)));
        if g != 1 {
            return Err(Error::BadParams("gcd(Delta_i - Delta_1, e) must be 1".into()));
        }
        let step = qm / e;
        let delta = self
            .deltas
            .iter()
            .fold(qm as u128, |g, &d| g.gcd(&(self.a as u128 + step as u128 * d as u128))) as u64;
        let big_n = (qm / (self.q as u64 - 1)).gcd(&(self.a * e));
        Ok(Cyclotomic {
            delta,
            n1: qm / delta,
            big_n,
        })
    }
}

/// Binary length `2^m` codes list-decodable at radius
/// `2^(m-1) - 2^((m-2)/2)` (m even): at most `L 2^(m+1)` words.
pub fn reed_muller_cover_bound(p: &CodeParams) -> BoundResult {
    const NAME: &str = "reed_muller_cover";
    let fail = |r: &str| BoundResult::inapplicable(NAME, Quantity::Size, RM_COVER, r);
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list");
    };
    if p.q != 2 || !p.n.is_power_of_two() {
        return fail("needs q = 2 and n = 2^m");
    }
    let m = p.n.trailing_zeros() as usize;
    if m < 2 || m % 2 != 0 {
        return fail("needs n = 2^m with m even");
    }
    let radius = (1usize << (m - 1)) - (1usize << ((m - 2) / 2));
    if dl < radius {
        return fail(&format!("needs list radius >= {radius}"));
    }
    let b = BoundResult::ok(NAME, Quantity::Size, BoundValue::power(p.list, 2, m + 1), RM_COVER)
        .with_reason(format!("first-order Reed-Muller code, m={m}, radius {radius}"));
    if m > 4 {
        b.assume(QUOTED_RADIUS)
    } else {
        b
    }
}

/// Binary length `2s+7` codes list-decodable at radius `s-1`: at most `64 L`.
///
/// The quoted covering radius cannot hold when 64 balls of radius `s-1` do
/// not fill the space, so the bound is withheld in that case.
pub fn cover_2s7_bound(p: &CodeParams) -> BoundResult {
    const NAME: &str = "cover_2s_plus_7";
    let fail = |r: String| BoundResult::inapplicable(NAME, Quantity::Size, COVER_2S7, r);
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list".into());
    };
    if p.q != 2 || p.n < 9 || p.n % 2 == 0 {
        return fail("needs q = 2 and n = 2s+7 with s >= 1".into());
    }
    let s = (p.n - 7) / 2;
    if dl + 1 < s {
        return fail(format!("needs list radius >= s-1 = {}", s - 1));
    }
    if BigUint::from(64u8) * big_ball_volume(2, p.n, s - 1) < big_pow(2, p.n) {
        return fail(format!(
            "64 balls of radius {} cannot cover F_2^{}, so no such covering code exists",
            s - 1,
            p.n
        ));
    }
    BoundResult::ok(NAME, Quantity::Size, BoundValue::int(64 * p.list), COVER_2S7)
        .assume(QUOTED_RADIUS)
        .with_reason(format!("s={s}"))
}

/// Smallest `e` with `q^e >= v`.
fn ceil_log(q: usize, v: usize) -> usize {
    let mut e = 0;
    let mut p = 1u128;
    while p < v as u128 {
        p *= q as u128;
        e += 1;
    }
    e
}

/// Even `q >= 8`, radius `R >= 4`: `|C| <= L q^(n - tR)` once `n` passes the
/// length-function threshold for `t`. The largest admissible `t R` is used.
pub fn even_q_length_bound(p: &CodeParams) -> BoundResult {
    const NAME: &str = "even_q_length_function";
    let fail = |r: &str| BoundResult::inapplicable(NAME, Quantity::Size, EVEN_Q_LENGTH, r);
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list");
    };
    if p.q < 8 || p.q % 2 != 0 {
        return fail("needs even q >= 8");
    }
    if dl < 4 {
        return fail("needs list radius >= 4");
    }
    let n = BigUint::from(p.n);
    let mut best: Option<(usize, usize, usize)> = None;
    for r in 4..=dl {
        let m = ceil_log(p.q, r + 1) + 1;
        let mut t = 3 * m + 2;
        loop {
            let mut threshold = BigUint::from(r) * big_pow(p.q, (t - 1) * r) + 2u8 * big_pow(p.q, t - 2);
            for j in 3..=m + 2 {
                threshold += big_pow(p.q, t - j);
            }
            if threshold > n || t * r > p.n {
                break;
            }
            if best.is_none_or(|(_, _, v)| t * r > v) {
                best = Some((r, t, t * r));
            }
            t += 1;
        }
    }
    match best {
        None => fail("length below the threshold for every admissible t"),
        Some((r, t, v)) => BoundResult::ok(NAME, Quantity::Size, BoundValue::power(p.list, p.q, p.n - v), EVEN_Q_LENGTH)
            .assume(QUOTED_LENGTH)
            .with_reason(format!("R={r}, t={t}")),
    }
}

/// `|C| <= L q^(n-r)` for the largest codimension `r` whose tabulated
/// length function `l_q(r, R')`, `R' <= R`, is at most `n`.
pub fn length_function_bound(p: &CodeParams) -> BoundResult {
    const NAME: &str = "length_function";
    let fail = |r: &str| BoundResult::inapplicable(NAME, Quantity::Size, LENGTH_FUNCTION, r);
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list");
    };
    let mut best = None;
    for radius in 1..=dl {
        let start = best.as_ref().map_or(radius, |(r, _)| r + 1);
        for r in (start..=p.n).rev() {
            if let Some(e) = lookup_length_all(p.q, r, radius).into_iter().find(|e| e.length_reached(p.n)) {
                best = Some((r, e));
                break;
            }
        }
    }
    match best {
        None => fail("no tabulated length function at or below n"),
        Some((r, e)) => {
            let b = BoundResult::ok(NAME, Quantity::Size, BoundValue::power(p.list, p.q, p.n - r), e.citation)
                .with_reason(format!("l_{}({r},{}) <= {}", p.q, e.radius, e.expression))
                .assume(QUOTED_LENGTH);
            if matches!(e.value, TableValue::Real(_)) {
                b.assume("asymptotic estimate of the length function")
            } else {
                b
            }
        }
    }
}

/// Binary, odd `R <= 2(2^m+1)+1`, `n >= 2^(2m)-1`: `|C| <= L 2^(n-Rm)`.
pub fn binary_few_weight_bound(p: &CodeParams) -> BoundResult {
    const NAME: &str = "binary_few_weight";
    let fail = |r: &str| BoundResult::inapplicable(NAME, Quantity::Size, BINARY_FEW_WEIGHT, r);
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list");
    };
    if p.q != 2 {
        return fail("needs q = 2");
    }
    let mut best: Option<(usize, usize)> = None;
    let mut m = 1;
    while m < 32 && (1usize << (2 * m)) - 1 <= p.n {
        let cap = 2 * ((1usize << m) + 1) + 1;
        let r = dl.min(cap);
        let r = if r % 2 == 0 { r.saturating_sub(1) } else { r };
        if r >= 1 && r * m <= p.n && best.is_none_or(|(br, bm)| r * m > br * bm) {
            best = Some((r, m));
        }
        m += 1;
    }
    match best {
        None => fail("needs n >= 3 and an odd radius"),
        Some((r, m)) => BoundResult::ok(NAME, Quantity::Size, BoundValue::power(p.list, 2, p.n - r * m), BINARY_FEW_WEIGHT)
            .assume("few-weight code taken from the literature")
            .with_reason(format!("R={r}, m={m}")),
    }
}

/// Odd prime `p`, even `R <= 2(p^m+1)`, `n >= p^(2m)-1`: `|C| <= L p^(n-Rm)`.
pub fn odd_prime_few_weight_bound(p: &CodeParams) -> BoundResult {
    const NAME: &str = "odd_prime_few_weight";
    let fail = |r: &str| BoundResult::inapplicable(NAME, Quantity::Size, ODD_PRIME_FEW_WEIGHT, r);
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list");
    };
    if p.q % 2 == 0 || !is_prime(p.q) {
        return fail("needs q an odd prime");
    }
    let mut best: Option<(usize, usize)> = None;
    let mut m = 1u32;
    while let Some(pm) = p.q.checked_pow(m).filter(|&pm| pm.checked_mul(pm).is_some_and(|s| s - 1 <= p.n)) {
        let r = dl.min(2 * (pm + 1));
        let r = r - r % 2;
        let m_ = m as usize;
        if r >= 2 && r * m_ <= p.n && best.is_none_or(|(br, bm)| r * m_ > br * bm) {
            best = Some((r, m_));
        }
        m += 1;
    }
    match best {
        None => fail("needs n >= p^2-1 and list radius >= 2"),
        Some((r, m)) => BoundResult::ok(NAME, Quantity::Size, BoundValue::power(p.list, p.q, p.n - r * m), ODD_PRIME_FEW_WEIGHT)
            .assume("few-weight code taken from the literature")
            .with_reason(format!("R={r}, m={m}")),
    }
}

/// `|C| <= L q^(n-em)` for `n >= n1` and list radius at least `e`, from the
/// cyclic `e`-weight code described by `aux`.
pub fn cyclotomic_bound(p: &CodeParams, aux: Option<&CyclotomicParams>) -> Result<BoundResult> {
    const NAME: &str = "cyclotomic_few_weight";
    let aux = aux.ok_or(Error::MissingAux)?;
    let fail = |r: String| Ok(BoundResult::inapplicable(NAME, Quantity::Size, CYCLOTOMIC, r));
    if aux.q != p.q {
        return fail(format!("parameters are for q={}, code is over q={}", aux.q, p.q));
    }
    let c = aux.derive()?;
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list".into());
    };
    if c.big_n != 1 {
        return fail(format!("needs N = 1, got N = {}", c.big_n));
    }
    if dl < aux.e {
        return fail(format!("needs list radius >= e = {}", aux.e));
    }
    if (p.n as u64) < c.n1 || aux.e * aux.m > p.n {
        return fail(format!("needs n >= n1 = {}", c.n1));
    }
    Ok(
        BoundResult::ok(NAME, Quantity::Size, BoundValue::power(p.list, p.q, p.n - aux.e * aux.m), CYCLOTOMIC)
            .assume("few-weight code taken from the literature")
            .with_reason(format!("e={}, m={}, n1={}", aux.e, aux.m, c.n1)),
    )
}

/// `m >= 3`, `u <= R`, `n >= u (q^m-1)/(q-1)`: `|C| <= L q^(n-mu)`. The
/// covering code is the block-diagonal Hamming construction, so nothing is
/// assumed.
pub fn block_diagonal_bound(p: &CodeParams) -> BoundResult {
    const NAME: &str = "block_diagonal";
    let fail = |r: &str| BoundResult::inapplicable(NAME, Quantity::Size, BLOCK_DIAGONAL, r);
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list");
    };
    if dl == 0 {
        return fail("needs list radius >= 1");
    }
    let mut best: Option<(usize, usize)> = None;
    let mut m = 3u32;
    while let Some(h) = p.q.checked_pow(m).map(|qm| (qm - 1) / (p.q - 1)).filter(|&h| h <= p.n) {
        let u = dl.min(p.n / h);
        let m_ = m as usize;
        if best.is_none_or(|(bu, bm)| u * m_ > bu * bm) {
            best = Some((u, m_));
        }
        m += 1;
    }
    match best {
        None => fail("needs n >= (q^3-1)/(q-1)"),
        Some((u, m)) => BoundResult::ok(NAME, Quantity::Size, BoundValue::power(p.list, p.q, p.n - m * u), BLOCK_DIAGONAL)
            .with_reason(format!("u={u}, m={m}")),
    }
}

/// Threshold `c q^(((t-1)R+1)/R) (ln q)^(1/R)`.
pub fn asymptotic_threshold(q: usize, r: usize, t: usize, c: f64) -> f64 {
    let qf = q as f64;
    c * qf.powf(((t - 1) * r + 1) as f64 / r as f64) * qf.ln().powf(1.0 / r as f64)
}

/// `R >= 3`: `|C| <= L q^(n-tR-1)` once `n` passes the asymptotic threshold
/// for `t`. Needs the constant `c`.
pub fn asymptotic_length_bound(p: &CodeParams, c: Option<f64>) -> BoundResult {
    const NAME: &str = "asymptotic_length_function";
    let fail = |r: &str| BoundResult::inapplicable(NAME, Quantity::Size, ASYMPTOTIC_LENGTH, r);
    let Some(c) = c else {
        return fail("needs the constant c");
    };
    let Some(dl) = p.list_radius() else {
        return fail("needs d or d_list");
    };
    if dl < 3 {
        return fail("needs list radius >= 3");
    }
    let mut best: Option<(usize, usize)> = None;
    for r in 3..=dl {
        let mut t = 1;
        while t * r < p.n && asymptotic_threshold(p.q, r, t, c) <= p.n as f64 {
            if best.is_none_or(|(br, bt)| t * r > bt * br) {
                best = Some((r, t));
            }
            t += 1;
        }
    }
    match best {
        None => fail("length below the threshold for t = 1"),
        Some((r, t)) => BoundResult::ok(
            NAME,
            Quantity::Size,
            BoundValue::power(p.list, p.q, p.n - t * r - 1),
            ASYMPTOTIC_LENGTH,
        )
        .assume(NEEDS_C)
        .with_reason(format!("R={r}, t={t}, c={c}")),
    }
}

/// The best verified-cover bound from the registry, as one result.
pub fn registry_bound(p: &CodeParams, registry: &CoverRegistry) -> BoundResult {
    const NAME: &str = "covering_registry";
    let Some(dl) = p.list_radius() else {
        return BoundResult::inapplicable(NAME, Quantity::Size, super::cover::COVERING_BOUND, "needs d or d_list");
    };
    registry
        .bounds(p.q, p.n, dl, p.list)
        .into_iter()
        .min_by(|a, b| a.value.cmp(&b.value))
        .unwrap_or_else(|| {
            BoundResult::inapplicable(NAME, Quantity::Size, super::cover::COVERING_BOUND, "no cover fits")
        })
}

/// Every covering-derived size bound, one entry each, applicable or not.
pub fn generalized_bounds(
    p: &CodeParams,
    registry: &CoverRegistry,
    aux: Option<&CyclotomicParams>,
    c: Option<f64>,
) -> Result<Vec<BoundResult>> {
    p.validate()?;
    let cyc = match cyclotomic_bound(p, aux) {
        Err(Error::MissingAux) => BoundResult::inapplicable(
            "cyclotomic_few_weight",
            Quantity::Size,
            CYCLOTOMIC,
            "needs cyclotomic parameters (q, m, e, a, Delta)",
        ),
        other => other?,
    };
    Ok(vec![
        registry_bound(p, registry),
        length_function_bound(p),
        binary_few_weight_bound(p),
        asymptotic_length_bound(p, c),
        odd_prime_few_weight_bound(p),
        cyc,
        block_diagonal_bound(p),
        reed_muller_cover_bound(p),
        cover_2s7_bound(p),
        even_q_length_bound(p),
    ])
}
