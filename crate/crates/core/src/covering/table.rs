//! Known values of `K_q(n, R)` (smallest covering code) and of the length
//! function `l_q(r, R)` (shortest linear code of codimension `r` and covering
//! radius `R`), limited to values quoted alongside the bounds they feed.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    /// `K_q(n, R)`.
    K,
    /// `l_q(r, R)`.
    LengthFunction,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TableValue {
    Integer(BigUint),
    /// Closed-form real value; only for length functions.
    Real(f64),
}

impl Serialize for TableValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            TableValue::Integer(v) => s.serialize_str(&v.to_string()),
            TableValue::Real(x) => s.serialize_f64(*x),
        }
    }
}

impl std::fmt::Display for TableValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableValue::Integer(v) => write!(f, "{v}"),
            TableValue::Real(x) => write!(f, "{x:.4}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableEntry {
    pub kind: TableKind,
    pub q: usize,
    /// `n` for `K`, `r` for the length function.
    pub first: usize,
    pub radius: usize,
    pub value: TableValue,
    /// How the value arises, e.g. `2^13*11` or `2^(2m)-1 at m=2`.
    pub expression: String,
    pub exact: bool,
    /// The quoted inequality is strict (`<`).
    pub strict: bool,
    pub citation: &'static str,
}

impl TableEntry {
    /// Integer value, if the entry has one.
    pub fn integer(&self) -> Option<&BigUint> {
        match &self.value {
            TableValue::Integer(v) => Some(v),
            TableValue::Real(_) => None,
        }
    }

    /// Whether a length `n` is at least the tabulated length-function bound,
    /// so that a code of codimension `first` and radius `radius` exists there.
    pub fn length_reached(&self, n: usize) -> bool {
        match &self.value {
            TableValue::Integer(v) => BigUint::from(n) >= *v,
            TableValue::Real(x) => n as f64 >= *x,
        }
    }
}

const LITSYN: &str = "Litsyn covering-code table";

fn k_entry(n: usize, radius: usize, value: BigUint, expression: &str, exact: bool) -> TableEntry {
    TableEntry {
        kind: TableKind::K,
        q: 2,
        first: n,
        radius,
        value: TableValue::Integer(value),
        expression: expression.to_string(),
        exact,
        strict: false,
        citation: LITSYN,
    }
}

/// The quoted `K_2(n, R)` values.
pub fn k_entries() -> Vec<TableEntry> {
    let pow2 = |e: u32| BigUint::from(2u8).pow(e);
    vec![
        k_entry(15, 3, BigUint::from(112u32), "112", true),
        k_entry(16, 3, BigUint::from(192u32), "192", false),
        k_entry(33, 4, pow2(17) * 3u8, "2^17*3", false),
        k_entry(33, 5, pow2(13) * 11u8, "2^13*11", false),
    ]
}

pub fn lookup_k(q: usize, n: usize, radius: usize) -> Option<TableEntry> {
    k_entries()
        .into_iter()
        .find(|e| e.q == q && e.first == n && e.radius == radius)
}

/// A parametric family of length-function upper bounds coming from the
/// duals of few-weight codes (the number of dual weights bounds the radius).
#[derive(Debug, Clone, Copy)]
pub struct LengthFamily {
    pub id: &'static str,
    /// `q`, `r`, `R` and the bound as functions of the family parameters.
    pub description: &'static str,
    pub citation: &'static str,
    instantiate: fn(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)>,
}

fn big_pow(base: usize, e: usize) -> BigUint {
    BigUint::from(base).pow(e as u32)
}

fn odd_prime_power(q: usize) -> bool {
    q % 2 == 1 && crate::algebra::prime_power(q).is_some()
}

fn kasami_family(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    if q != 2 || radius != 3 || r % 3 != 0 || r == 0 {
        return None;
    }
    let m = r / 3;
    Some((big_pow(2, 2 * m) - 1u8, format!("2^(2m)-1 at m={m}")))
}

fn three_weight_half(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    // Codimension m needs length at least m, so m = 2 is left out.
    if q != 2 || radius != 3 || r < 3 {
        return None;
    }
    Some((big_pow(2, r - 1) - 1u8, format!("2^(m-1)-1 at m={r}")))
}

fn four_weight_odd_m(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    if q != 2 || radius != 4 || r < 2 || (r - 1) % 2 == 0 {
        return None;
    }
    let m = r - 1;
    Some((big_pow(2, m - 1), format!("2^(m-1) at m={m}")))
}

fn three_weight_divisor(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    if q != 2 || radius != 3 {
        return None;
    }
    // r = m + k with m even, k | m, k != m, k != m/2; smallest m wins.
    (1..r)
        .filter(|&m| m % 2 == 0)
        .find(|&m| {
            let k = r - m;
            k < m && m % k == 0 && 2 * k != m
        })
        .map(|m| (big_pow(2, m - 1), format!("2^(m-1) at m={m}, k={}", r - m)))
}

/// Largest admissible `t` for the cyclotomic families: `t | 2^(m/2)+1`,
/// `t != 2^(m/2)+1`, `lcm(t, 3) | 2^(m/2)+1`, with `3 | t` as requested.
fn best_t(m: usize, three_divides: bool) -> Option<u128> {
    if m % 2 != 0 || m > 64 {
        return None;
    }
    let top = (1u128 << (m / 2)) + 1;
    if top % 3 != 0 {
        return None;
    }
    let mut divisors = Vec::new();
    let mut d = 1u128;
    while d * d <= top {
        if top % d == 0 {
            divisors.extend([d, top / d]);
        }
        d += 1;
    }
    divisors
        .into_iter()
        .filter(|&t| t != top && (t % 3 == 0) == three_divides)
        .max()
}

fn five_weight(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    if q != 2 || radius != 5 || r < 3 {
        return None;
    }
    let m = r - 1;
    if m % 4 != 2 {
        return None;
    }
    let t = best_t(m, true)?;
    let len = (big_pow(2, m) - 1u8) / BigUint::from(t);
    Some((len, format!("(2^m-1)/t at m={m}, t={t}")))
}

fn six_weight(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    if q != 2 || radius != 6 || r < 4 {
        return None;
    }
    let m = r - 2;
    let t = best_t(m, false)?;
    let len = (big_pow(2, m) - 1u8) / BigUint::from(t);
    Some((len, format!("(2^m-1)/t at m={m}, t={t}")))
}

fn seven_weight(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    if q != 2 || radius != 7 || r % 5 != 0 || r == 0 {
        return None;
    }
    let m = 2 * r / 5;
    if m % 6 != 0 {
        return None;
    }
    Some((big_pow(2, m) - 1u8, format!("2^m-1 at m={m}")))
}

fn odd_q_even_r(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    if !odd_prime_power(q) || r % 2 != 0 || r == 0 {
        return None;
    }
    let m = r / 2;
    let wanted = if m % 2 == 1 { 3 } else { 4 };
    if radius != wanted {
        return None;
    }
    Some((big_pow(q, m) - 1u8, format!("q^m-1 at m={m}")))
}

fn odd_q_odd_r(q: usize, r: usize, radius: usize) -> Option<(BigUint, String)> {
    if !odd_prime_power(q) || r % 2 != 1 || r < 3 {
        return None;
    }
    let m = (r - 1) / 2;
    let wanted = if m % 2 == 1 { 4 } else { 6 };
    if radius != wanted {
        return None;
    }
    Some((big_pow(q, m), format!("q^m at m={m}")))
}

pub const LENGTH_FAMILIES: [LengthFamily; 9] = [
    LengthFamily {
        id: "kasami_dual",
        description: "q=2, r=3m, R=3: l <= 2^(2m)-1",
        citation: "duals of Kasami three-weight codes",
        instantiate: kasami_family,
    },
    LengthFamily {
        id: "three_weight_m",
        description: "q=2, r=m, R=3: l <= 2^(m-1)-1",
        citation: "duals of binary three-weight [2^(m-1)-1, m] codes",
        instantiate: three_weight_half,
    },
    LengthFamily {
        id: "four_weight_odd_m",
        description: "q=2, m odd, r=m+1, R=4: l <= 2^(m-1)",
        citation: "duals of binary four-weight [2^(m-1), m+1] codes",
        instantiate: four_weight_odd_m,
    },
    LengthFamily {
        id: "three_weight_divisor",
        description: "q=2, m even, k|m, k!=m, k!=m/2, r=m+k, R=3: l <= 2^(m-1)",
        citation: "duals of binary three-weight [2^(m-1), m+k] codes",
        instantiate: three_weight_divisor,
    },
    LengthFamily {
        id: "five_weight",
        description: "q=2, m=2(2k+1), 3|t, r=m+1, R=5: l <= (2^m-1)/t",
        citation: "duals of binary five-weight [(2^m-1)/t, m+1] codes",
        instantiate: five_weight,
    },
    LengthFamily {
        id: "six_weight",
        description: "q=2, m even, 3 does not divide t, r=m+2, R=6: l <= (2^m-1)/t",
        citation: "duals of binary six-weight [(2^m-1)/t, m+2] codes",
        instantiate: six_weight,
    },
    LengthFamily {
        id: "seven_weight",
        description: "q=2, m = 0 mod 6, r=5m/2, R=7: l <= 2^m-1",
        citation: "duals of binary seven-weight cyclic codes",
        instantiate: seven_weight,
    },
    LengthFamily {
        id: "odd_q_2m",
        description: "q odd, r=2m, R=3 (m odd) or R=4 (m even): l <= q^m-1",
        citation: "duals of q-ary few-weight [q^m-1, 2m] codes",
        instantiate: odd_q_even_r,
    },
    LengthFamily {
        id: "odd_q_2m_plus_1",
        description: "q odd, r=2m+1, R=4 (m odd) or R=6 (m even): l <= q^m",
        citation: "duals of q-ary few-weight [q^m, 2m+1] codes",
        instantiate: odd_q_odd_r,
    },
];

pub const BDMP_CITATION: &str = "length-function estimate for codimension 5, radius 3";

/// `2.884 q^(2/3) (ln q)^(1/3)`, a strict upper bound on `l_q(5, 3)`.
pub fn l5_3_estimate(q: usize) -> f64 {
    let q = q as f64;
    2.884 * q.powf(2.0 / 3.0) * q.ln().cbrt()
}

/// Every tabulated upper bound on `l_q(r, R)`, smallest first.
pub fn lookup_length_all(q: usize, r: usize, radius: usize) -> Vec<TableEntry> {
    let mut out: Vec<TableEntry> = LENGTH_FAMILIES
        .iter()
        .filter_map(|fam| {
            let (value, expression) = (fam.instantiate)(q, r, radius)?;
            Some(TableEntry {
                kind: TableKind::LengthFunction,
                q,
                first: r,
                radius,
                value: TableValue::Integer(value),
                expression,
                exact: false,
                strict: false,
                citation: fam.citation,
            })
        })
        .collect();
    if r == 5 && radius == 3 && q >= 2 && crate::algebra::prime_power(q).is_some() {
        out.push(TableEntry {
            kind: TableKind::LengthFunction,
            q,
            first: 5,
            radius: 3,
            value: TableValue::Real(l5_3_estimate(q)),
            expression: "2.884*q^(2/3)*(ln q)^(1/3)".into(),
            exact: false,
            strict: true,
            citation: BDMP_CITATION,
        });
    }
    out.sort_by(|a, b| {
        let key = |e: &TableEntry| match &e.value {
            TableValue::Integer(v) => v.to_f64().unwrap_or(f64::INFINITY),
            TableValue::Real(x) => *x,
        };
        key(a).total_cmp(&key(b))
    });
    out
}

pub fn lookup_length(q: usize, r: usize, radius: usize) -> Option<TableEntry> {
    lookup_length_all(q, r, radius).into_iter().next()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LookupKey {
    K { q: usize, n: usize, radius: usize },
    Length { q: usize, r: usize, radius: usize },
}

pub fn table_lookup(key: LookupKey) -> Option<TableEntry> {
    match key {
        LookupKey::K { q, n, radius } => lookup_k(q, n, radius),
        LookupKey::Length { q, r, radius } => lookup_length(q, r, radius),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_k_values() {
        let e = lookup_k(2, 15, 3).unwrap();
        assert_eq!(e.integer(), Some(&BigUint::from(112u8)));
        assert!(e.exact);
        let e = lookup_k(2, 16, 3).unwrap();
        assert_eq!(e.integer(), Some(&BigUint::from(192u8)));
        assert!(!e.exact);
        assert_eq!(lookup_k(2, 33, 5).unwrap().integer(), Some(&BigUint::from(8192u32 * 11)));
        assert_eq!(lookup_k(2, 33, 4).unwrap().integer(), Some(&BigUint::from(393216u32)));
        assert!(lookup_k(2, 32, 7).is_none());
    }

    #[test]
    fn length_function_families() {
        let e = lookup_length(2, 6, 3).unwrap();
        // Kasami m=2 gives 15; the three-weight family at m=6 gives 31.
        assert_eq!(e.integer(), Some(&BigUint::from(15u8)));
        assert_eq!(lookup_length_all(2, 6, 3).len(), 2);
        let e = lookup_length(3, 2, 3).unwrap();
        assert_eq!(e.integer(), Some(&BigUint::from(2u8)));
        assert_eq!(lookup_length(3, 5, 6).unwrap().integer(), Some(&BigUint::from(9u8)));
        assert_eq!(lookup_length(2, 15, 7).unwrap().integer(), Some(&BigUint::from(63u8)));
        assert!(lookup_length(4, 4, 4).is_none());
    }

    #[test]
    fn cyclotomic_families() {
        // m = 6: 2^3 + 1 = 9, admissible t with 3 | t is 3 (9 itself excluded).
        let e = lookup_length(2, 7, 5).unwrap();
        assert_eq!(e.integer(), Some(&BigUint::from(21u8)));
        // m = 6, t not divisible by 3 would have to be 1.
        assert_eq!(lookup_length(2, 8, 6).unwrap().integer(), Some(&BigUint::from(63u8)));
    }

    #[test]
    fn closed_form_estimate() {
        let e = lookup_length(101, 5, 3).unwrap();
        let TableValue::Real(v) = e.value else { panic!() };
        let expect = 2.884 * 101f64.powf(2.0 / 3.0) * 101f64.ln().powf(1.0 / 3.0);
        assert!((v - expect).abs() < 1e-9);
        assert!(e.strict);
        assert!(e.length_reached(v.ceil() as usize));
    }
}
