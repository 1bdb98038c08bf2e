use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order the tables are built for.
pub const MAX_FIELD_ORDER: usize = 256;

/// A field element, stored as its index `0..q`.
///
/// For an extension field the index is the base-`p` expansion of the
/// polynomial's coefficients, lowest degree first: index `i` stands for
/// `sum_j d_j x^j` where `d_j` is the `j`-th base-`p` digit of `i`.
pub type Symbol = u8;

/// Finite field GF(q) with precomputed operation tables.
///
/// Cloning is cheap; the tables live behind an `Arc`.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

struct Tables {
    q: usize,
    p: usize,
    ext_degree: usize,
    irreducible: Vec<u8>,
    primitive: Symbol,
    add: Vec<Symbol>,
    mul: Vec<Symbol>,
    neg: Vec<Symbol>,
    inv: Vec<Symbol>,
    exp: Vec<Symbol>,
    log: Vec<usize>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.q == other.inner.q && self.inner.irreducible == other.inner.irreducible)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

/// Splits `q` into `(p, m)` with `q = p^m`, or `None` when `q` is not a prime power.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        return Some((q, 1));
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

pub fn is_prime(n: usize) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

fn digits(mut i: usize, p: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = i % p;
        i /= p;
    }
    out
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` divided by the monic polynomial `m` over GF(p); both low-degree-first.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap_or(0);
        if lead != 0 {
            let shift = r.len() - dm;
            for (j, &c) in m[..dm].iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - (lead * c) % p) % p;
            }
        }
    }
    r
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let deg = poly.len() - 1;
    // Any factorisation has a monic factor of degree <= deg / 2.
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut f = digits(low, p, d);
            f.push(1);
            if poly_rem(poly, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree `m` over GF(p),
/// comparing coefficient lists lowest degree first.
fn smallest_irreducible(p: usize, m: usize) -> Vec<usize> {
    // Enumerate (c_0, ..., c_{m-1}) with c_0 most significant.
    let total = p.pow(m as u32);
    (0..total)
        .map(|i| {
            let mut c = digits(i, p, m);
            c.reverse();
            c.push(1);
            c
        })
        .find(|c| is_irreducible(c, p))
        .expect("an irreducible polynomial exists for every degree")
}

impl Field {
    /// Builds GF(q). Deterministic: the extension modulus is the
    /// lexicographically smallest monic irreducible, and the primitive
    /// element is the smallest index of multiplicative order `q - 1`.
    pub fn new(q: usize) -> Result<Field> {
        if !(2..=MAX_FIELD_ORDER).contains(&q) {
            return match prime_power(q) {
                None if q >= 2 => Err(Error::NotPrimePower(q)),
                _ => Err(Error::UnsupportedFieldOrder(q)),
            };
        }
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let irreducible: Vec<usize> = if m == 1 {
            Vec::new()
        } else {
            smallest_irreducible(p, m)
        };

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        let mut neg = vec![0; q];
        for a in 0..q {
            let da = digits(a, p, m);
            let na: Vec<usize> = da.iter().map(|&x| (p - x) % p).collect();
            neg[a] = undigits(&na, p) as Symbol;
            for b in 0..q {
                let db = digits(b, p, m);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum, p) as Symbol;
                let prod = if m == 1 {
                    vec![(a * b) % p]
                } else {
                    poly_rem(&poly_mul(&da, &db, p), &irreducible, p)
                };
                mul[a * q + b] = undigits(&prod, p) as Symbol;
            }
        }

        let order = |g: usize| -> usize {
            let (mut x, mut k) = (g, 1);
            while x != 1 {
                x = mul[x * q + g] as usize;
                k += 1;
            }
            k
        };
        let primitive = (1..q)
            .find(|&g| order(g) == q - 1)
            .expect("the multiplicative group is cyclic");

        let mut exp = vec![0; q - 1];
        let mut log = vec![0; q];
        let mut x = 1usize;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = x as Symbol;
            log[x] = i;
            x = mul[x * q + primitive] as usize;
        }
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = exp[(q - 1 - log[a]) % (q - 1)];
        }

        Ok(Field {
            inner: Arc::new(Tables {
                q,
                p,
                ext_degree: m,
                irreducible: irreducible.iter().map(|&c| c as u8).collect(),
                primitive: primitive as Symbol,
                add,
                mul,
                neg,
                inv,
                exp,
                log,
            }),
        })
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.inner.q
    }

    #[inline]
    pub fn characteristic(&self) -> usize {
        self.inner.p
    }

    #[inline]
    pub fn ext_degree(&self) -> usize {
        self.inner.ext_degree
    }

    /// Coefficients of the defining polynomial, lowest degree first, including
    /// the leading 1. Empty for prime fields.
    pub fn irreducible(&self) -> &[u8] {
        &self.inner.irreducible
    }

    pub fn primitive(&self) -> Symbol {
        self.inner.primitive
    }

    #[inline]
    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        self.inner.add[a as usize * self.inner.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        self.inner.mul[a as usize * self.inner.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Symbol) -> Symbol {
        self.inner.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Symbol) -> Option<Symbol> {
        (a != 0).then(|| self.inner.inv[a as usize])
    }

    /// `primitive^i`, with `i` taken modulo `q - 1`.
    #[inline]
    pub fn exp(&self, i: usize) -> Symbol {
        self.inner.exp[i % (self.inner.q - 1)]
    }

    /// Discrete logarithm to the primitive base; `None` for zero.
    #[inline]
    pub fn log(&self, a: Symbol) -> Option<usize> {
        (a != 0).then(|| self.inner.log[a as usize])
    }

    pub fn pow(&self, a: Symbol, e: usize) -> Symbol {
        if e == 0 {
            return 1;
        }
        match self.log(a) {
            None => 0,
            Some(l) => self.exp((l * (e % (self.q() - 1))) % (self.q() - 1)),
        }
    }

    /// Whether `a` lies in the prime subfield GF(p).
    #[inline]
    pub fn in_prime_subfield(&self, a: Symbol) -> bool {
        (a as usize) < self.inner.p
    }

    pub fn elements(&self) -> impl Iterator<Item = Symbol> {
        (0..self.q()).map(|i| i as Symbol)
    }

    /// Base-`p` coefficient digits of `a`, lowest degree first.
    pub fn coefficients(&self, a: Symbol) -> Vec<u8> {
        digits(a as usize, self.inner.p, self.inner.ext_degree)
            .into_iter()
            .map(|d| d as u8)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PRIME_POWERS: [usize; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

    #[test]
    fn gf2_characteristic_two() {
        let f = Field::new(2).unwrap();
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf4_uses_x2_x_1() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.irreducible(), &[1, 1, 1]);
        // x is index 2, x + 1 is index 3.
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn non_prime_powers_rejected() {
        assert_eq!(Field::new(6).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(Field::new(12).unwrap_err(), Error::NotPrimePower(12));
        assert_eq!(Field::new(1).unwrap_err(), Error::UnsupportedFieldOrder(1));
        assert_eq!(Field::new(512).unwrap_err(), Error::UnsupportedFieldOrder(512));
    }

    #[test]
    fn smallest_irreducibles() {
        // x^3 + x^2 + 1 precedes x^3 + x + 1 when c_0, c_1, ... are compared in order.
        assert_eq!(Field::new(8).unwrap().irreducible(), &[1, 0, 1, 1]);
        assert_eq!(Field::new(9).unwrap().irreducible(), &[1, 0, 1]);
        assert_eq!(Field::new(16).unwrap().irreducible(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn exp_log_roundtrip() {
        for q in PRIME_POWERS.iter().copied().chain([25, 27, 32, 64, 128, 256]) {
            let f = Field::new(q).unwrap();
            for a in 1..q {
                let a = a as Symbol;
                assert_eq!(f.exp(f.log(a).unwrap()), a);
            }
            assert_eq!(f.exp(q - 1), 1);
            assert_eq!(f.log(0), None);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in PRIME_POWERS {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn prime_subfield_is_closed() {
        let f = Field::new(9).unwrap();
        for a in 0..3u8 {
            for b in 0..3u8 {
                assert!(f.in_prime_subfield(f.add(a, b)));
                assert!(f.in_prime_subfield(f.mul(a, b)));
            }
        }
    }
}
