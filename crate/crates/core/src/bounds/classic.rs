use num_bigint::BigUint;
use num_integer::Integer;

use super::value::{BoundResult, BoundValue, Quantity};
use crate::algebra::prime_power;
use crate::error::{Error, Result};

/// Parameters of the code being bounded. `d` is a minimum distance,
/// `d_list`/`list` describe `(d_list, L)` list decodability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    pub q: usize,
    pub n: usize,
    pub d: Option<usize>,
    pub d_list: Option<usize>,
    pub list: usize,
    pub k: Option<usize>,
    pub linear: bool,
}

impl CodeParams {
    pub fn new(q: usize, n: usize) -> Self {
        CodeParams {
            q,
            n,
            d: None,
            d_list: None,
            list: 1,
            k: None,
            linear: false,
        }
    }

    pub fn with_d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn with_list(mut self, d_list: usize, list: usize) -> Self {
        self.d_list = Some(d_list);
        self.list = list;
        self
    }

    pub fn linear(mut self, k: Option<usize>) -> Self {
        self.linear = true;
        self.k = k;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if prime_power(self.q).is_none() {
            return Err(Error::NotPrimePower(self.q));
        }
        if self.n == 0 {
            return Err(Error::BadParams("n must be positive".into()));
        }
        if let Some(d) = self.d {
            if d == 0 || d > self.n {
                return Err(Error::BadParams(format!("need 1 <= d <= n, got d={d} n={}", self.n)));
            }
        }
        if let Some(dl) = self.d_list {
            if dl > self.n {
                return Err(Error::BadParams(format!("d_list={dl} exceeds n={}", self.n)));
            }
        }
        if self.list == 0 {
            return Err(Error::BadParams("list size L must be at least 1".into()));
        }
        if let Some(k) = self.k {
            if k > self.n {
                return Err(Error::BadParams(format!("k={k} exceeds n={}", self.n)));
            }
        }
        Ok(())
    }

    /// The list radius in force: `d_list` if given, else `floor((d-1)/2)`.
    pub fn list_radius(&self) -> Option<usize> {
        self.d_list.or(self.d.map(|d| (d - 1) / 2))
    }

    fn need_d(&self) -> Result<usize> {
        self.d.ok_or(Error::MissingParam("d"))
    }

    fn need_radius(&self) -> Result<usize> {
        self.list_radius().ok_or(Error::MissingParam("d_list"))
    }
}

pub fn big_ball_volume(q: usize, n: usize, r: usize) -> BigUint {
    let mut total = BigUint::from(0u8);
    let mut term = BigUint::from(1u8); // C(n, j) (q-1)^j
    for j in 0..=r.min(n) {
        total += &term;
        term = term * (n - j) * (q - 1) / (j + 1);
    }
    total
}

pub const SINGLETON: &str = "Singleton bound";
pub const ST_LIST: &str = "generalized Singleton bound for list-decodable codes";
pub const REDUNDANCY_LIST: &str = "redundancy bound on covering radius with the covering-code bound";
pub const SPHERE_PACKING: &str = "sphere-packing bound for list-decodable codes";
pub const GRIESMER: &str = "Griesmer bound";
pub const BUSH: &str = "Bush bound";

/// `q^(n-d+1)`.
pub fn singleton(p: &CodeParams) -> Result<BoundResult> {
    let d = p.need_d()?;
    Ok(BoundResult::ok(
        "singleton",
        Quantity::Size,
        BoundValue::power(1u8, p.q, p.n + 1 - d),
        SINGLETON,
    ))
}

/// `L q^(n - floor((L+1) d_list / L))`.
pub fn generalized_singleton_st(p: &CodeParams) -> Result<BoundResult> {
    let dl = p.need_radius()?;
    let l = p.list;
    let cut = (l + 1) * dl / l;
    if cut > p.n {
        return Ok(BoundResult::inapplicable(
            "generalized_singleton_list",
            Quantity::Size,
            ST_LIST,
            format!("floor((L+1)d_list/L) = {cut} exceeds n"),
        ));
    }
    Ok(BoundResult::ok(
        "generalized_singleton_list",
        Quantity::Size,
        BoundValue::power(l, p.q, p.n - cut),
        ST_LIST,
    ))
}

/// `L q^(n - d_list)`.
pub fn redundancy_list_bound(p: &CodeParams) -> Result<BoundResult> {
    let dl = p.need_radius()?;
    Ok(BoundResult::ok(
        "redundancy_list",
        Quantity::Size,
        BoundValue::power(p.list, p.q, p.n - dl),
        REDUNDANCY_LIST,
    ))
}

/// `floor(L q^n / V_q(n, d_list))`, exact.
pub fn sphere_packing_list(p: &CodeParams) -> Result<BoundResult> {
    let dl = p.need_radius()?;
    let num = BigUint::from(p.list) * BigUint::from(p.q).pow(p.n as u32);
    let value = num / big_ball_volume(p.q, p.n, dl);
    Ok(BoundResult::ok("sphere_packing_list", Quantity::Size, BoundValue::Integer(value), SPHERE_PACKING))
}

/// Largest `k` with `sum_{i<k} ceil(d / q^i) <= n`.
pub fn griesmer_max_k(q: usize, n: usize, d: usize) -> usize {
    let d = BigUint::from(d);
    let mut sum = BigUint::from(0u8);
    let mut k = 0;
    let mut qi = BigUint::from(1u8);
    loop {
        sum += d.div_ceil(&qi);
        if sum > BigUint::from(n) {
            return k;
        }
        k += 1;
        qi *= q;
    }
}

/// The Griesmer bound as a size bound `q^k`, for linear codes only.
pub fn griesmer(p: &CodeParams) -> Result<BoundResult> {
    let d = p.need_d()?;
    if !p.linear {
        return Ok(BoundResult::inapplicable(
            "griesmer",
            Quantity::Size,
            GRIESMER,
            "requires a linear code",
        ));
    }
    let k = griesmer_max_k(p.q, p.n, d);
    Ok(BoundResult::ok("griesmer", Quantity::Size, BoundValue::power(1u8, p.q, k), GRIESMER)
        .assume("requires linear")
        .with_reason(format!("k <= {k}")))
}

/// `A_q(q+2, q) <= q^3 - 2` for odd `q`.
pub fn bush_bound(q: usize) -> Result<BoundResult> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if q % 2 == 0 {
        return Err(Error::QEven(q));
    }
    let v = BigUint::from(q).pow(3) - 2u8;
    Ok(BoundResult::ok("bush", Quantity::Size, BoundValue::Integer(v), BUSH)
        .with_reason(format!("A_{q}({}, {q})", q + 2)))
}

/// The Bush bound when `n = q+2` and `d >= q` (larger distances only shrink
/// the optimum).
pub fn bush_for(p: &CodeParams) -> Result<BoundResult> {
    let d = p.need_d()?;
    if p.n != p.q + 2 || d < p.q {
        return Ok(BoundResult::inapplicable(
            "bush",
            Quantity::Size,
            BUSH,
            "needs n = q+2 and d >= q",
        ));
    }
    match bush_bound(p.q) {
        Err(Error::QEven(_)) => Ok(BoundResult::inapplicable("bush", Quantity::Size, BUSH, "q is even")),
        other => other,
    }
}

/// q-ary entropy `r log_q(q-1) - r log_q r - (1-r) log_q(1-r)`, with the
/// endpoint limits `H(0) = 0` and `H(1) = log_q(q-1)`.
pub fn entropy_q(q: usize, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) || r.is_nan() {
        return Err(Error::OutOfRange(r));
    }
    if q < 2 {
        return Err(Error::BadParams(format!("entropy needs q >= 2, got {q}")));
    }
    let lq = (q as f64).ln();
    let xlogx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() / lq };
    Ok(r * ((q - 1) as f64).ln() / lq - xlogx(r) - xlogx(1.0 - r))
}
