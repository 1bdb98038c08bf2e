use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::code::{Code, SingletonDefect};
use super::word::{weight, Packing, Word};
use crate::algebra::{Field, Matrix, Symbol};
use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};

/// Gray-code chunk handed to one worker.
const CHUNK_BITS: u32 = 14;

/// A linear `[n, k]_q` code given by a full-rank generator matrix. The
/// parity-check matrix is derived on first use.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    generator: Matrix,
    parity_check: OnceLock<Matrix>,
}

impl PartialEq for LinearCode {
    /// Equal as subspaces, regardless of the chosen generator.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.k == other.k
            && self.generator.same_row_space(&other.generator)
    }
}

impl LinearCode {
    pub fn new(generator: Matrix) -> Result<LinearCode> {
        let rank = generator.rank();
        if rank < generator.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: generator.rows(),
            });
        }
        Ok(LinearCode {
            field: generator.field().clone(),
            n: generator.cols(),
            k: generator.rows(),
            generator,
            parity_check: OnceLock::new(),
        })
    }

    /// Generator rows given as words; convenience over [`LinearCode::new`].
    pub fn from_rows(field: &Field, n: usize, rows: &[Word]) -> Result<LinearCode> {
        LinearCode::new(Matrix::from_rows(field, n, rows)?)
    }

    /// The code `{ x : H x^T = 0 }`. `h` may have dependent rows.
    pub fn from_parity_check(h: &Matrix) -> LinearCode {
        let generator = h.nullspace();
        let code = LinearCode {
            field: h.field().clone(),
            n: h.cols(),
            k: generator.rows(),
            generator,
            parity_check: OnceLock::new(),
        };
        let basis = h.row_space_basis();
        // Keep the caller's matrix when it is already full rank so column
        // order and row layout survive.
        let parity = if basis.rows() == h.rows() { h.clone() } else { basis };
        let _ = code.parity_check.set(parity);
        code
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix {
        self.parity_check
            .get_or_init(|| self.generator.nullspace())
    }

    /// `q^k`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.field.q()).pow(self.k as u32)
    }

    pub fn encode(&self, message: &[Symbol]) -> Word {
        self.generator.vec_mul(message)
    }

    /// `H x^T` as a vector of length `n - k`.
    pub fn syndrome(&self, x: &[Symbol]) -> Vec<Symbol> {
        let h = self.parity_check();
        let f = &self.field;
        (0..h.rows())
            .map(|r| {
                x.iter()
                    .enumerate()
                    .fold(0, |acc, (c, &v)| f.add(acc, f.mul(h.get(r, c), v)))
            })
            .collect()
    }

    pub fn contains(&self, x: &[Symbol]) -> bool {
        x.len() == self.n && self.syndrome(x).iter().all(|&s| s == 0)
    }

    pub fn has_all_ones(&self) -> bool {
        self.contains(&vec![1; self.n])
    }

    fn enumeration_cost(&self) -> u128 {
        pow_sat(self.field.q(), self.k)
    }

    /// F_2-spanning set of the code, packed. Only for characteristic 2.
    fn packed_generators(&self, p: &Packing) -> Vec<u128> {
        let mut gens = Vec::with_capacity(self.k * p.bits as usize);
        for r in 0..self.k {
            let row = self.generator.row(r);
            for t in 0..p.bits {
                let scalar = 1u8 << t;
                let scaled: Word = row.iter().map(|&s| self.field.mul(scalar, s)).collect();
                gens.push(p.pack(&scaled));
            }
        }
        gens
    }

    /// Visits every packed codeword in Gray-code order, in parallel chunks.
    /// `fold` accumulates into a per-chunk state, `merge` combines states.
    fn par_fold_packed<S, I, F, M>(&self, p: &Packing, init: I, fold: F, merge: M) -> S
    where
        S: Send,
        I: Fn() -> S + Sync,
        F: Fn(&mut S, u128) + Sync,
        M: Fn(S, S) -> S + Sync + Send,
    {
        let gens = self.packed_generators(p);
        let bits = gens.len() as u32;
        let chunk_bits = bits.min(CHUNK_BITS);
        let chunks = 1u64 << (bits - chunk_bits);
        (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let start = chunk << chunk_bits;
                let gray = start ^ (start >> 1);
                let mut c = gens
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| gray >> i & 1 == 1)
                    .fold(0u128, |acc, (_, g)| acc ^ g);
                let mut state = init();
                fold(&mut state, c);
                for i in start + 1..start + (1u64 << chunk_bits) {
                    c ^= gens[i.trailing_zeros() as usize];
                    fold(&mut state, c);
                }
                state
            })
            .reduce(&init, &merge)
    }

    /// Calls `f` on every codeword, in lexicographic order of messages.
    pub fn for_each_codeword(&self, budget: Budget, mut f: impl FnMut(&[Symbol])) -> Result<()> {
        budget.check(self.enumeration_cost())?;
        let (q, n, k) = (self.field.q(), self.n, self.k);
        let multiples: Vec<Vec<Word>> = (0..k)
            .map(|r| {
                let row = self.generator.row(r);
                self.field
                    .elements()
                    .map(|a| row.iter().map(|&s| self.field.mul(a, s)).collect())
                    .collect()
            })
            .collect();
        let mut digits = vec![0usize; k];
        let mut partial = vec![vec![0 as Symbol; n]; k + 1];
        let mut from = 0;
        loop {
            for level in from..k {
                let (head, tail) = partial.split_at_mut(level + 1);
                let add = &multiples[level][digits[level]];
                for ((t, &h), &a) in tail[0].iter_mut().zip(&head[level]).zip(add) {
                    *t = self.field.add(h, a);
                }
            }
            f(&partial[k]);
            // Odometer step, last digit fastest.
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
            }
            from = i;
        }
    }

    pub fn codewords(&self, budget: Budget) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        self.for_each_codeword(budget, |c| out.push(c.to_vec()))?;
        Ok(out)
    }

    pub fn to_code(&self, budget: Budget) -> Result<Code> {
        Ok(Code::from_trusted(
            &self.field,
            self.n,
            self.codewords(budget)?,
            true,
        ))
    }

    /// `A_0..A_n`; one step per codeword.
    pub fn weight_distribution(&self, budget: Budget) -> Result<Vec<u64>> {
        budget.check(self.enumeration_cost())?;
        let n = self.n;
        if let Some(p) = Packing::for_field(self.field.q(), n) {
            return Ok(self.par_fold_packed(
                &p,
                || vec![0u64; n + 1],
                |acc, c| acc[p.weight(c)] += 1,
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            ));
        }
        let mut dist = vec![0u64; n + 1];
        self.for_each_codeword(budget, |c| dist[weight(c)] += 1)?;
        Ok(dist)
    }

    /// Minimum nonzero weight; one step per codeword.
    pub fn min_distance(&self, budget: Budget) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::TrivialCode);
        }
        budget.check(self.enumeration_cost())?;
        if let Some(p) = Packing::for_field(self.field.q(), self.n) {
            return Ok(self.par_fold_packed(
                &p,
                || usize::MAX,
                |best, c| {
                    if c != 0 {
                        *best = (*best).min(p.weight(c));
                    }
                },
                usize::min,
            ));
        }
        let mut best = usize::MAX;
        self.for_each_codeword(budget, |c| {
            let w = weight(c);
            if w > 0 {
                best = best.min(w);
            }
        })?;
        Ok(best)
    }

    pub fn dual(&self) -> LinearCode {
        let code = LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.n - self.k,
            generator: self.parity_check().clone(),
            parity_check: OnceLock::new(),
        };
        let _ = code.parity_check.set(self.generator.clone());
        code
    }

    /// `C x F_q^s`, generator `[[G, 0], [0, I_s]]`.
    pub fn extend_product(&self, s: usize) -> LinearCode {
        let n = self.n + s;
        let mut g = Matrix::zeros(&self.field, self.k + s, n);
        for r in 0..self.k {
            for c in 0..self.n {
                g.set(r, c, self.generator.get(r, c));
            }
        }
        for i in 0..s {
            g.set(self.k + i, self.n + i, 1);
        }
        LinearCode::new(g).expect("block matrix has full rank")
    }

    /// The subcode of codewords lying in GF(p)^n, as a linear code over GF(p).
    ///
    /// Computed by linear algebra over GF(p): write messages over the
    /// F_p-basis `x^t * g_i` and solve for the combinations whose non-constant
    /// coefficient digits vanish in every coordinate.
    pub fn subfield_subcode(&self) -> Result<LinearCode> {
        let f = &self.field;
        let m = f.ext_degree();
        if m == 1 {
            return Err(Error::NotAnExtension);
        }
        let p = f.characteristic();
        let prime = Field::new(p)?;
        let mut basis_words: Vec<Word> = Vec::with_capacity(self.k * m);
        for r in 0..self.k {
            let row = self.generator.row(r);
            for t in 0..m {
                let scalar = p.pow(t as u32) as Symbol;
                basis_words.push(row.iter().map(|&s| f.mul(scalar, s)).collect());
            }
        }
        // Row j: high coefficient digits of basis word j.
        let high: Vec<Word> = basis_words
            .iter()
            .map(|w| w.iter().flat_map(|&s| f.coefficients(s).into_iter().skip(1)).collect())
            .collect();
        let a = Matrix::from_rows(&prime, self.n * (m - 1), &high)?;
        let kernel = a.transpose().nullspace();
        let mut rows = Vec::with_capacity(kernel.rows());
        for r in 0..kernel.rows() {
            let lambda = kernel.row(r);
            let mut word = vec![0 as Symbol; self.n];
            for (coef, bw) in lambda.iter().zip(&basis_words) {
                if *coef == 0 {
                    continue;
                }
                for (x, &y) in word.iter_mut().zip(bw) {
                    *x = f.add(*x, f.mul(*coef, y));
                }
            }
            debug_assert!(word.iter().all(|&s| f.in_prime_subfield(s)));
            rows.push(word);
        }
        let g = Matrix::from_rows(&prime, self.n, &rows)?.row_space_basis();
        LinearCode::new(g)
    }

    /// Re-reads a code over a prime field as a code over an extension field
    /// (the span of the same generator over the larger field).
    pub fn embed_into(&self, ext: &Field) -> Result<LinearCode> {
        if self.field.ext_degree() != 1 || ext.characteristic() != self.field.q() {
            return Err(Error::BadParams(format!(
                "{:?} is not the prime subfield of {:?}",
                self.field, ext
            )));
        }
        LinearCode::from_rows(ext, self.n, &self.generator.row_vecs())
    }

    pub fn singleton_defect(&self, budget: Budget) -> Result<SingletonDefect> {
        let d = self.min_distance(budget)?;
        Ok(SingletonDefect {
            defect: (self.n + 1).saturating_sub(d + self.k),
            min_distance: d,
            log_size: self.k,
            rounded: false,
        })
    }
}
