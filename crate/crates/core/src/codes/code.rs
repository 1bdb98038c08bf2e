use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::word::{weight, Packing, Word};
use crate::algebra::{Field, Symbol};
use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};

/// Largest code size for which [`Code::check_linear`] runs.
pub const LINEARITY_CHECK_LIMIT: usize = 1 << 16;

/// An explicit code: a list of distinct codewords in F_q^n.
#[derive(Debug, Clone, PartialEq)]
pub struct Code {
    field: Field,
    n: usize,
    words: Vec<Word>,
    linear: bool,
}

/// `n + 1 - d - floor(log_q |C|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingletonDefect {
    pub defect: usize,
    pub min_distance: usize,
    /// `floor(log_q |C|)`.
    pub log_size: usize,
    /// True when `|C|` is not a power of `q`, so the logarithm was floored.
    pub rounded: bool,
}

/// Largest `t` with `q^t <= size`, and whether equality holds.
pub fn floor_log(q: usize, size: &BigUint) -> (usize, bool) {
    let q = BigUint::from(q);
    let mut pow = BigUint::from(1u8);
    let mut t = 0;
    while &pow * &q <= *size {
        pow *= &q;
        t += 1;
    }
    (t, pow == *size)
}

impl Code {
    /// Validates symbols and lengths; duplicate codewords are an error.
    pub fn new(field: &Field, n: usize, words: Vec<Word>) -> Result<Code> {
        let mut seen = HashSet::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            if w.len() != n {
                return Err(Error::LengthMismatch(w.len(), n));
            }
            if let Some(&bad) = w.iter().find(|&&s| s as usize >= field.q()) {
                return Err(Error::InvalidSymbol {
                    symbol: bad as usize,
                    q: field.q(),
                });
            }
            if !seen.insert(w.as_slice()) {
                return Err(Error::DuplicateCodeword(i));
            }
        }
        Ok(Code {
            field: field.clone(),
            n,
            words,
            linear: false,
        })
    }

    /// Builds a code whose words are already known to be distinct and valid.
    pub(crate) fn from_trusted(field: &Field, n: usize, words: Vec<Word>, linear: bool) -> Code {
        Code {
            field: field.clone(),
            n,
            words,
            linear,
        }
    }

    /// The whole space F_q^n in lexicographic order.
    pub fn full_space(field: &Field, n: usize, budget: Budget) -> Result<Code> {
        let total = pow_sat(field.q(), n);
        budget.check(total)?;
        let words = (0..total as usize)
            .map(|i| super::word::index_to_word(i, field.q(), n))
            .collect();
        Ok(Code::from_trusted(field, n, words, true))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn is_linear(&self) -> bool {
        self.linear
    }

    /// Checks closure under addition and scalar multiplication and records
    /// the result in the linearity flag. Refuses codes above 2^16 words.
    pub fn check_linear(&mut self) -> Result<bool> {
        if self.words.len() > LINEARITY_CHECK_LIMIT {
            return Err(Error::BudgetExceeded {
                needed: self.words.len() as u128,
                limit: LINEARITY_CHECK_LIMIT as u64,
            });
        }
        let f = &self.field;
        let set: HashSet<&[Symbol]> = self.words.iter().map(|w| w.as_slice()).collect();
        let zero = vec![0; self.n];
        let mut linear = set.contains(zero.as_slice());
        // Size must be a power of q for a subspace.
        let (_, exact) = floor_log(f.q(), &BigUint::from(self.words.len()));
        linear &= exact;
        if linear {
            'outer: for a in &self.words {
                for s in f.elements().skip(2) {
                    let scaled: Word = a.iter().map(|&x| f.mul(s, x)).collect();
                    if !set.contains(scaled.as_slice()) {
                        linear = false;
                        break 'outer;
                    }
                }
                for b in &self.words {
                    let sum: Word = a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect();
                    if !set.contains(sum.as_slice()) {
                        linear = false;
                        break 'outer;
                    }
                }
            }
        }
        self.linear = linear;
        Ok(linear)
    }

    pub fn contains(&self, w: &[Symbol]) -> bool {
        self.words.iter().any(|c| c.as_slice() == w)
    }

    /// Minimum pairwise Hamming distance; one step per pair.
    pub fn min_distance(&self, budget: Budget) -> Result<usize> {
        let m = self.words.len();
        if m < 2 {
            return Err(Error::TrivialCode);
        }
        budget.check((m as u128) * (m as u128 - 1) / 2)?;
        let best = if let Some(p) = Packing::for_field(self.field.q(), self.n) {
            let packed: Vec<u128> = self.words.iter().map(|w| p.pack(w)).collect();
            (0..m)
                .into_par_iter()
                .map(|i| {
                    packed[i + 1..]
                        .iter()
                        .map(|&y| p.weight(packed[i] ^ y))
                        .min()
                        .unwrap_or(usize::MAX)
                })
                .min()
        } else {
            (0..m)
                .into_par_iter()
                .map(|i| {
                    self.words[i + 1..]
                        .iter()
                        .map(|y| {
                            self.words[i]
                                .iter()
                                .zip(y)
                                .filter(|(a, b)| a != b)
                                .count()
                        })
                        .min()
                        .unwrap_or(usize::MAX)
                })
                .min()
        };
        Ok(best.expect("at least one pair"))
    }

    pub fn weight_distribution(&self) -> Vec<u64> {
        let mut dist = vec![0u64; self.n + 1];
        for w in &self.words {
            dist[weight(w)] += 1;
        }
        dist
    }

    /// `C x F_q^s`: every codeword followed by every tail in F_q^s.
    pub fn extend_product(&self, s: usize, budget: Budget) -> Result<Code> {
        if s == 0 {
            return Ok(self.clone());
        }
        let tails = pow_sat(self.field.q(), s);
        budget.check(tails.saturating_mul(self.words.len() as u128))?;
        let mut words = Vec::with_capacity(self.words.len() * tails as usize);
        for w in &self.words {
            for t in 0..tails as usize {
                let mut x = w.clone();
                x.extend(super::word::index_to_word(t, self.field.q(), s));
                words.push(x);
            }
        }
        Ok(Code::from_trusted(&self.field, self.n + s, words, self.linear))
    }

    /// Codewords whose coordinates all lie in the prime subfield, as a code
    /// over GF(p).
    pub fn subfield_subcode(&self) -> Result<Code> {
        if self.field.ext_degree() == 1 {
            return Err(Error::NotAnExtension);
        }
        let prime = Field::new(self.field.characteristic())?;
        let words = self
            .words
            .iter()
            .filter(|w| w.iter().all(|&s| self.field.in_prime_subfield(s)))
            .cloned()
            .collect();
        Ok(Code::from_trusted(&prime, self.n, words, self.linear))
    }

    /// Re-reads a code over a prime field as a code over an extension of it.
    pub fn embed_into(&self, ext: &Field) -> Result<Code> {
        if self.field.ext_degree() != 1 || ext.characteristic() != self.field.q() {
            return Err(Error::BadParams(format!(
                "{:?} is not the prime subfield of {:?}",
                self.field, ext
            )));
        }
        // Linearity over GF(p) does not imply linearity over the extension.
        Ok(Code::from_trusted(ext, self.n, self.words.clone(), false))
    }

    pub fn singleton_defect(&self, budget: Budget) -> Result<SingletonDefect> {
        let d = self.min_distance(budget)?;
        let (t, exact) = floor_log(self.field.q(), &BigUint::from(self.words.len()));
        Ok(SingletonDefect {
            defect: (self.n + 1).saturating_sub(d + t),
            min_distance: d,
            log_size: t,
            rounded: !exact,
        })
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.words.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: usize) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn repetition_distance() {
        let c = Code::new(&gf(2), 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        assert_eq!(c.min_distance(Budget::default()).unwrap(), 3);
    }

    #[test]
    fn rejects_duplicates_and_bad_symbols() {
        let f = gf(3);
        assert_eq!(
            Code::new(&f, 2, vec![vec![0, 1], vec![0, 1]]).unwrap_err(),
            Error::DuplicateCodeword(1)
        );
        assert!(matches!(
            Code::new(&f, 2, vec![vec![0, 3]]),
            Err(Error::InvalidSymbol { symbol: 3, q: 3 })
        ));
        assert_eq!(
            Code::new(&f, 2, vec![vec![0]]).unwrap_err(),
            Error::LengthMismatch(1, 2)
        );
    }

    #[test]
    fn trivial_code_has_no_distance() {
        let c = Code::new(&gf(2), 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(c.min_distance(Budget::default()), Err(Error::TrivialCode));
    }

    #[test]
    fn linearity_check() {
        let f = gf(2);
        let mut rep = Code::new(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        assert!(rep.check_linear().unwrap());
        let mut shifted = Code::new(&f, 3, vec![vec![1, 0, 0], vec![0, 1, 1]]).unwrap();
        assert!(!shifted.check_linear().unwrap());
        let f3 = gf(3);
        // Closed under addition of 0 and 1-multiples only if scalar 2 is also present.
        let mut half = Code::new(&f3, 1, vec![vec![0], vec![1]]).unwrap();
        assert!(!half.check_linear().unwrap());
    }

    #[test]
    fn extend_product_sizes() {
        let f = gf(2);
        let c = Code::new(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        assert_eq!(c.extend_product(0, Budget::default()).unwrap(), c);
        let e = c.extend_product(2, Budget::default()).unwrap();
        assert_eq!(e.n(), 5);
        assert_eq!(e.len(), 8);
        assert!(e.contains(&[1, 1, 1, 0, 1]));
    }

    #[test]
    fn subfield_subcode_requires_extension() {
        let c = Code::new(&gf(5), 1, vec![vec![0]]).unwrap();
        assert_eq!(c.subfield_subcode(), Err(Error::NotAnExtension));
    }

    #[test]
    fn prime_code_embedded_then_restricted_is_unchanged() {
        let f2 = gf(2);
        let f8 = gf(8);
        let c = Code::new(&f2, 3, vec![vec![0, 0, 0], vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let back = c.embed_into(&f8).unwrap().subfield_subcode().unwrap();
        assert_eq!(back.words(), c.words());
        assert_eq!(back.field().q(), 2);
    }

    #[test]
    fn defect_of_nonlinear_size_is_floored() {
        // Three words of length 3 at pairwise distance 3 over GF(3); 3 = 3^1, no rounding.
        let f = gf(3);
        let c = Code::new(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        let s = c.singleton_defect(Budget::default()).unwrap();
        assert_eq!((s.defect, s.rounded), (0, false));
        // {000, 111} over GF(3): log_3 2 floors to 0, d = 3, defect 3 + 1 - 3 - 0 = 1.
        let c = Code::new(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        let s = c.singleton_defect(Budget::default()).unwrap();
        assert_eq!((s.defect, s.log_size, s.rounded), (1, 0, true));
    }

    #[test]
    fn floor_log_exactness() {
        assert_eq!(floor_log(2, &BigUint::from(8u8)), (3, true));
        assert_eq!(floor_log(2, &BigUint::from(9u8)), (3, false));
        assert_eq!(floor_log(3, &BigUint::from(1u8)), (0, true));
    }
}
