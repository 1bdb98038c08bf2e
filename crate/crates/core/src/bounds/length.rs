//! Upper bounds on the length of codes with small Singleton defect
//! `s = n + 1 - d - floor(log_q |C|)`: MDS (`s = 0`), almost MDS (`s = 1`)
//! and beyond.
//!
//! All of them rest on one observation. A linear cover of length `n0`,
//! codimension `r >= d + s` and radius at most `floor((d-1)/2)` caps every
//! code of minimum distance `d` and length `n >= n0` at `q^(n-r)` words,
//! which is below `q^(n+1-d-s)`.

use num_bigint::BigUint;

use super::cover::CoverRegistry;
use super::generalized::{asymptotic_threshold, CyclotomicParams};
use super::value::{BoundResult, BoundValue, Quantity};
use crate::algebra::prime_power;
use crate::covering::table::lookup_length_all;
use crate::error::{Error, Result};

pub const COVER_LENGTH: &str = "length bound from a covering code of large codimension";
pub const TABLE_LENGTH: &str = "length bound from the covering length function";
pub const CYCLOTOMIC_LENGTH: &str = "length bound from cyclic few-weight covering codes";
pub const SMALL_E_LENGTH: &str = "length bound for distance 2e+1 with e an odd divisor of q-1";
pub const DE_BOER: &str = "de Boer length bound for linear codes of given Singleton defect";
pub const LIST_SINGLETON_LENGTH: &str = "length bound for list-decodable codes attaining the generalized Singleton bound";

/// Length question: codes over `F_q` with minimum distance `d` and Singleton
/// defect at most `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthQuery {
    pub q: usize,
    pub d: usize,
    pub s: usize,
}

impl LengthQuery {
    pub fn new(q: usize, d: usize, s: usize) -> Result<Self> {
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        if d < 2 {
            return Err(Error::BadParams(format!("need d >= 2, got {d}")));
        }
        Ok(LengthQuery { q, d, s })
    }

    fn radius(&self) -> usize {
        (self.d - 1) / 2
    }
}

fn max_length(name: &str, citation: &str, bound: u64) -> BoundResult {
    BoundResult::ok(name, Quantity::Length, BoundValue::int(bound), citation)
}

/// The registry cover giving the shortest forbidden length.
pub fn cover_length_bound(query: LengthQuery, registry: &CoverRegistry) -> BoundResult {
    const NAME: &str = "cover_length";
    let radius = query.radius();
    registry
        .covers
        .iter()
        .filter(|c| c.q == query.q && c.radius <= radius)
        .filter(|c| c.redundancy().is_some_and(|r| r >= query.d + query.s))
        .min_by_key(|c| c.n)
        .map(|c| {
            let mut b = max_length(NAME, COVER_LENGTH, c.n as u64 - 1).with_reason(format!(
                "cover {} (n={}, codimension {}, radius {})",
                c.name,
                c.n,
                c.redundancy().expect("linear"),
                c.radius
            ));
            if !c.exact() {
                b = b.assume("radius bounded by the number of dual weights");
            }
            b
        })
        .unwrap_or_else(|| {
            BoundResult::inapplicable(NAME, Quantity::Length, COVER_LENGTH, "no registered cover fits")
        })
}

/// Tabulated `l_q(r, R')` with `R' <= floor((d-1)/2)` and `r >= d + s`: the
/// length stays below the smallest such value.
pub fn table_length_bound(query: LengthQuery) -> BoundResult {
    const NAME: &str = "length_function_length";
    let radius = query.radius();
    let lo = query.d + query.s;
    let best = (1..=radius)
        .flat_map(|rad| (lo..lo + 48).flat_map(move |r| lookup_length_all(query.q, r, rad)))
        .filter_map(|e| {
            let v = match &e.value {
                crate::covering::table::TableValue::Integer(v) => v.clone(),
                crate::covering::table::TableValue::Real(x) => BigUint::from(x.ceil() as u64),
            };
            Some((v, e))
        })
        .min_by(|a, b| a.0.cmp(&b.0));
    match best {
        None => BoundResult::inapplicable(NAME, Quantity::Length, TABLE_LENGTH, "no tabulated length function"),
        Some((v, e)) => {
            let b = BoundResult::ok(NAME, Quantity::Length, BoundValue::Integer(v - 1u8), TABLE_LENGTH)
                .with_reason(format!("l_{}({},{}) <= {}", e.q, e.first, e.radius, e.expression))
                .assume("length-function value taken from the literature");
            if e.integer().is_none() {
                b.assume("asymptotic estimate of the length function")
            } else {
                b
            }
        }
    }
}

/// The cyclic `e`-weight code of length `n1` and codimension `e m` forbids
/// lengths `>= n1` when `d >= 2e+1`, `e m >= d + s` and `N = 1`.
pub fn cyclotomic_length_bound(query: LengthQuery, aux: Option<&CyclotomicParams>) -> Result<BoundResult> {
    const NAME: &str = "cyclotomic_length";
    let aux = aux.ok_or(Error::MissingAux)?;
    let fail = |r: String| Ok(BoundResult::inapplicable(NAME, Quantity::Length, CYCLOTOMIC_LENGTH, r));
    if aux.q != query.q {
        return fail(format!("parameters are for q={}, query is q={}", aux.q, query.q));
    }
    let c = aux.derive()?;
    if c.big_n != 1 {
        return fail(format!("needs N = 1, got N = {}", c.big_n));
    }
    if aux.m < 3 {
        return fail("needs m >= 3".into());
    }
    if query.d < 2 * aux.e + 1 {
        return fail(format!("needs d >= 2e+1 = {}", 2 * aux.e + 1));
    }
    if aux.e * aux.m < query.d + query.s {
        return fail(format!("needs e*m >= d+s, got {} < {}", aux.e * aux.m, query.d + query.s));
    }
    Ok(max_length(NAME, CYCLOTOMIC_LENGTH, c.n1 - 1)
        .assume("few-weight code taken from the literature")
        .with_reason(format!("n1 = {} (e={}, m={})", c.n1, aux.e, aux.m)))
}

/// `d = 2e+1`, `e >= 2` an odd divisor of `q-1` prime to 3, defect at most 1:
/// length below `q^3 - 1`. Uses the cyclic construction with `m = 3`, `a = 1`.
pub fn small_e_length_bound(query: LengthQuery) -> BoundResult {
    const NAME: &str = "small_e_length";
    let fail = |r: &str| BoundResult::inapplicable(NAME, Quantity::Length, SMALL_E_LENGTH, r);
    if query.d % 2 == 0 {
        return fail("needs odd d = 2e+1");
    }
    let e = (query.d - 1) / 2;
    let q = query.q;
    if e < 2 || e % 2 == 0 || (q - 1) % e != 0 || e % 3 == 0 {
        return fail("needs e >= 2 odd, dividing q-1, prime to 3");
    }
    if query.s > 1 {
        return fail("needs Singleton defect at most 1");
    }
    let q3 = (q as u64).pow(3);
    max_length(NAME, SMALL_E_LENGTH, q3 - 2)
        .assume("few-weight code taken from the literature")
        .with_reason(format!("n < q^3-1 = {}", q3 - 1))
}

/// `n <= d - 2 + 2(q^(s+1)-1)/(q-1)` for linear codes with `d > q`.
pub fn de_boer_length_bound(query: LengthQuery) -> BoundResult {
    const NAME: &str = "de_boer";
    if query.d <= query.q {
        return BoundResult::inapplicable(NAME, Quantity::Length, DE_BOER, "needs d > q");
    }
    let q = BigUint::from(query.q);
    let v = BigUint::from(query.d - 2) + 2u8 * (q.pow(query.s as u32 + 1) - 1u8) / (q - 1u8);
    BoundResult::ok(NAME, Quantity::Length, BoundValue::Integer(v), DE_BOER).assume("requires linear")
}

/// `(R, L)` list-decodable codes attaining the generalized Singleton bound
/// with `R >= 3` have length at most `c q^((R+1)/R) (ln q)^(1/R)`.
pub fn list_singleton_length_bound(q: usize, radius: usize, c: Option<f64>) -> BoundResult {
    const NAME: &str = "list_singleton_length";
    let Some(c) = c else {
        return BoundResult::inapplicable(NAME, Quantity::Length, LIST_SINGLETON_LENGTH, "needs the constant c");
    };
    if radius < 3 {
        return BoundResult::inapplicable(NAME, Quantity::Length, LIST_SINGLETON_LENGTH, "needs R >= 3");
    }
    let v = asymptotic_threshold(q, radius, 2, c).floor().max(0.0) as u64;
    max_length(NAME, LIST_SINGLETON_LENGTH, v).assume("uses the caller-supplied constant c")
}

/// Every length bound for the query, applicable or not, shortest first.
pub fn length_bounds(
    query: LengthQuery,
    registry: &CoverRegistry,
    aux: Option<&CyclotomicParams>,
) -> Result<Vec<BoundResult>> {
    let cyc = match cyclotomic_length_bound(query, aux) {
        Err(Error::MissingAux) => BoundResult::inapplicable(
            "cyclotomic_length",
            Quantity::Length,
            CYCLOTOMIC_LENGTH,
            "needs cyclotomic parameters (q, m, e, a, Delta)",
        ),
        other => other?,
    };
    let mut out = vec![
        cover_length_bound(query, registry),
        table_length_bound(query),
        cyc,
        small_e_length_bound(query),
        de_boer_length_bound(query),
    ];
    super::ladder::sort_and_mark(&mut out);
    Ok(out)
}
