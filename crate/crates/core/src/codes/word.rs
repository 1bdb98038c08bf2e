use crate::algebra::Symbol;
use crate::error::{Error, Result};

/// A vector in F_q^n, one symbol index per coordinate.
pub type Word = Vec<Symbol>;

/// Number of coordinates in which `a` and `b` differ.
pub fn hamming(a: &[Symbol], b: &[Symbol]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

pub fn weight(a: &[Symbol]) -> usize {
    a.iter().filter(|&&s| s != 0).count()
}

/// Index of `w` in the lexicographic enumeration of F_q^n (first coordinate
/// most significant).
pub fn word_to_index(w: &[Symbol], q: usize) -> usize {
    w.iter().fold(0, |acc, &s| acc * q + s as usize)
}

pub fn index_to_word(mut idx: usize, q: usize, n: usize) -> Word {
    let mut w = vec![0; n];
    for s in w.iter_mut().rev() {
        *s = (idx % q) as Symbol;
        idx /= q;
    }
    w
}

/// Packed representation for characteristic-2 fields: `bits` bits per
/// coordinate, coordinate 0 in the lowest bits. Addition is XOR.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Packing {
    pub bits: u32,
    #[cfg(test)]
    pub n: usize,
    /// Lowest bit of every coordinate slot.
    low_mask: u128,
}

impl Packing {
    /// Available when q is a power of two and the word fits in 128 bits.
    pub fn for_field(q: usize, n: usize) -> Option<Packing> {
        if !q.is_power_of_two() {
            return None;
        }
        let bits = q.trailing_zeros();
        if bits as usize * n > 128 || n == 0 {
            return None;
        }
        let mut low_mask = 0u128;
        for i in 0..n {
            low_mask |= 1u128 << (i as u32 * bits);
        }
        Some(Packing {
            bits,
            #[cfg(test)]
            n,
            low_mask,
        })
    }

    pub fn pack(&self, w: &[Symbol]) -> u128 {
        w.iter()
            .enumerate()
            .fold(0u128, |acc, (i, &s)| acc | (s as u128) << (i as u32 * self.bits))
    }

    #[cfg(test)]
    pub fn unpack(&self, x: u128) -> Word {
        let mask = (1u128 << self.bits) - 1;
        (0..self.n)
            .map(|i| ((x >> (i as u32 * self.bits)) & mask) as Symbol)
            .collect()
    }

    /// Number of nonzero coordinate slots.
    #[inline]
    pub fn weight(&self, x: u128) -> usize {
        if self.bits == 1 {
            return x.count_ones() as usize;
        }
        let mut folded = x;
        for s in 1..self.bits {
            folded |= x >> s;
        }
        (folded & self.low_mask).count_ones() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trip() {
        let p = Packing::for_field(4, 5).unwrap();
        let w = vec![3, 0, 1, 2, 3];
        let x = p.pack(&w);
        assert_eq!(p.unpack(x), w);
        assert_eq!(p.weight(x), 4);
        assert!(Packing::for_field(3, 5).is_none());
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(&[0, 0, 0], &[0, 0, 0]).unwrap(), 0);
        assert_eq!(hamming(&[0, 1, 2], &[0, 2, 2]).unwrap(), 1);
        assert_eq!(hamming(&[1; 9], &[0; 9]).unwrap(), 9);
        assert_eq!(hamming(&[1], &[1, 0]), Err(Error::LengthMismatch(1, 2)));
    }

    #[test]
    fn index_roundtrip_is_lexicographic() {
        assert_eq!(word_to_index(&[0, 1, 1], 2), 3);
        assert_eq!(index_to_word(5, 3, 3), vec![0, 1, 2]);
        let words: Vec<Word> = (0..27).map(|i| index_to_word(i, 3, 3)).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn packed_weight_matches_symbol_weight() {
        let p = Packing::for_field(8, 5).unwrap();
        let w = vec![0, 7, 4, 0, 1];
        assert_eq!(p.weight(p.pack(&w)), 3);
        assert_eq!(p.unpack(p.pack(&w)), w);
        assert!(Packing::for_field(3, 4).is_none());
        assert!(Packing::for_field(2, 129).is_none());
    }

    mod metric {
        use super::*;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        #[test]
        fn metric_axioms_on_random_triples() {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..1000 {
                let q = rng.gen_range(2..=5u8);
                let n = rng.gen_range(1..=32);
                let mut word = || -> Word { (0..n).map(|_| rng.gen_range(0..q)).collect() };
                let (a, b, c) = (word(), word(), word());
                let ab = hamming(&a, &b).unwrap();
                assert_eq!(ab, hamming(&b, &a).unwrap());
                assert_eq!(hamming(&a, &a).unwrap(), 0);
                assert_eq!(ab == 0, a == b);
                assert!(ab <= hamming(&a, &c).unwrap() + hamming(&c, &b).unwrap());
            }
        }
    }
}
