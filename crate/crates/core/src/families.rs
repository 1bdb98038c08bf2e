//! Concrete code families. Every constructor checks the returned code
//! against its advertised parameters before handing it out.

use crate::algebra::{Field, Matrix, Symbol};
use crate::budget::{pow_sat, Budget};
use crate::codes::{index_to_word, LinearCode, Word};
use crate::error::{Error, Result};

/// Codes with at most this many codewords get their minimum distance
/// verified by enumeration during construction.
pub const SELF_CHECK_LIMIT: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Hamming { q: usize, m: usize },
    Simplex { q: usize, m: usize },
    GolayBinary,
    GolayTernary,
    /// `points` defaults to the first `n` field elements.
    ReedSolomon { q: usize, n: usize, k: usize, points: Option<Vec<Symbol>> },
    ReedMuller1 { m: usize },
    Kasami { m: usize },
    BlockDiagonal { q: usize, m: usize, u: usize },
    Repetition { q: usize, n: usize },
}

/// Parameters a family promises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Advertised {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

pub const FAMILY_NAMES: [&str; 9] = [
    "hamming",
    "simplex",
    "golay_binary",
    "golay_ternary",
    "reed_solomon",
    "reed_muller1",
    "kasami",
    "block_diagonal",
    "repetition",
];

const GOLAY23: [&str; 12] = [
    "10000000000010101110001",
    "01000000000011111001001",
    "00100000000011010010101",
    "00010000000011000111011",
    "00001000000011001101100",
    "00000100000001100110110",
    "00000010000000110011011",
    "00000001000010110111100",
    "00000000100001011011110",
    "00000000010000101101111",
    "00000000001010111000110",
    "00000000000101011100011",
];

const GOLAY11: [&str; 6] = [
    "10000020121",
    "01000012221",
    "00100011101",
    "00010011022",
    "00001021220",
    "00000102122",
];

fn projective_count(q: usize, m: usize) -> usize {
    (q.pow(m as u32) - 1) / (q - 1)
}

impl FamilySpec {
    /// Builds a spec from a family name and `key=value` parameters.
    /// `points` for Reed-Solomon is a comma-separated list of indices.
    pub fn from_params(name: &str, params: &[(String, String)]) -> Result<FamilySpec> {
        let get = |key: &'static str| -> Result<usize> {
            let (_, v) = params
                .iter()
                .find(|(k, _)| k == key)
                .ok_or(Error::MissingParam(key))?;
            v.parse()
                .map_err(|_| Error::BadParams(format!("{key}={v} is not an integer")))
        };
        Ok(match name {
            "hamming" => FamilySpec::Hamming { q: get("q")?, m: get("m")? },
            "simplex" => FamilySpec::Simplex { q: get("q")?, m: get("m")? },
            "golay_binary" => FamilySpec::GolayBinary,
            "golay_ternary" => FamilySpec::GolayTernary,
            "reed_solomon" => {
                let points = match params.iter().find(|(k, _)| k == "points") {
                    Some((_, v)) => Some(
                        v.split(',')
                            .map(|p| {
                                p.trim().parse::<Symbol>().map_err(|_| {
                                    Error::BadParams(format!("bad evaluation point `{p}`"))
                                })
                            })
                            .collect::<Result<Vec<_>>>()?,
                    ),
                    None => None,
                };
                FamilySpec::ReedSolomon { q: get("q")?, n: get("n")?, k: get("k")?, points }
            }
            "reed_muller1" => FamilySpec::ReedMuller1 { m: get("m")? },
            "kasami" => FamilySpec::Kasami { m: get("m")? },
            "block_diagonal" => FamilySpec::BlockDiagonal {
                q: get("q")?,
                m: get("m")?,
                u: get("u")?,
            },
            "repetition" => FamilySpec::Repetition { q: get("q")?, n: get("n")? },
            other => {
                return Err(Error::BadParams(format!(
                    "unknown family `{other}`; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        })
    }

    /// Advertised `[n, k, d]`, after checking preconditions.
    pub fn advertised(&self) -> Result<Advertised> {
        let bad = |msg: String| Err(Error::BadParams(msg));
        let adv = |n, k, d| Ok(Advertised { n, k, d });
        match *self {
            FamilySpec::Hamming { q, m } | FamilySpec::Simplex { q, m } => {
                Field::new(q)?;
                if m < 2 {
                    return bad(format!("hamming/simplex needs m >= 2, got {m}"));
                }
                if pow_sat(q, m) > 1 << 24 {
                    return bad(format!("q^m = {q}^{m} is too large"));
                }
                let n = projective_count(q, m);
                if matches!(self, FamilySpec::Hamming { .. }) {
                    adv(n, n - m, 3)
                } else {
                    adv(n, m, q.pow(m as u32 - 1))
                }
            }
            FamilySpec::GolayBinary => adv(23, 12, 7),
            FamilySpec::GolayTernary => adv(11, 6, 5),
            FamilySpec::ReedSolomon { q, n, k, ref points } => {
                Field::new(q)?;
                if n > q || k < 1 || k > n {
                    return bad(format!("reed_solomon needs 1 <= k <= n <= q, got q={q} n={n} k={k}"));
                }
                if let Some(p) = points {
                    if p.len() != n {
                        return bad(format!("{} evaluation points for n = {n}", p.len()));
                    }
                    let mut seen = vec![false; q];
                    for &x in p {
                        if x as usize >= q || std::mem::replace(&mut seen[x as usize], true) {
                            return bad(format!("evaluation point {x} is repeated or outside GF({q})"));
                        }
                    }
                }
                adv(n, k, n - k + 1)
            }
            FamilySpec::ReedMuller1 { m } => {
                if !(1..=16).contains(&m) {
                    return bad(format!("reed_muller1 needs 1 <= m <= 16, got {m}"));
                }
                adv(1 << m, m + 1, 1 << (m - 1))
            }
            FamilySpec::Kasami { m } => {
                if !(1..=4).contains(&m) {
                    return bad(format!("kasami needs 1 <= m <= 4 (field GF(2^2m) up to 256), got {m}"));
                }
                let d = (1 << (2 * m - 1)) - (1 << (m - 1));
                adv((1 << (2 * m)) - 1, 3 * m, d)
            }
            FamilySpec::BlockDiagonal { q, m, u } => {
                Field::new(q)?;
                if m < 2 || u < 1 {
                    return bad(format!("block_diagonal needs m >= 2 and u >= 1, got m={m} u={u}"));
                }
                if pow_sat(q, m) > 1 << 20 || u > 64 {
                    return bad(format!("block_diagonal({q},{m},{u}) is too large"));
                }
                let n = projective_count(q, m);
                adv(u * n, u * (n - m), 3)
            }
            FamilySpec::Repetition { q, n } => {
                Field::new(q)?;
                if n < 1 {
                    return bad("repetition needs n >= 1".into());
                }
                adv(n, 1, n)
            }
        }
    }
}

/// Columns of `H_m`: nonzero vectors of F_q^m whose first nonzero entry is 1,
/// in lexicographic order.
pub fn projective_columns(field: &Field, m: usize) -> Vec<Word> {
    let q = field.q();
    (1..q.pow(m as u32))
        .map(|i| index_to_word(i, q, m))
        .filter(|w| w.iter().find(|&&s| s != 0) == Some(&1))
        .collect()
}

/// The `m x (q^m-1)/(q-1)` matrix `H_m`.
pub fn projective_matrix(field: &Field, m: usize) -> Matrix {
    let cols = projective_columns(field, m);
    let mut h = Matrix::zeros(field, m, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, &s) in col.iter().enumerate() {
            h.set(r, c, s);
        }
    }
    h
}

fn parse_constant(field: &Field, rows: &[&str]) -> Result<LinearCode> {
    let words: Vec<Word> = rows
        .iter()
        .map(|r| r.bytes().map(|b| b - b'0').collect())
        .collect();
    LinearCode::from_rows(field, rows[0].len(), &words)
}

fn block_diagonal_parity(field: &Field, m: usize, u: usize) -> Matrix {
    let hm = projective_matrix(field, m);
    let w = hm.cols();
    let mut h = Matrix::zeros(field, u * m, u * w);
    for b in 0..u {
        for r in 0..m {
            for c in 0..w {
                h.set(b * m + r, b * w + c, hm.get(r, c));
            }
        }
    }
    h
}

fn reed_solomon(field: &Field, n: usize, k: usize, points: Option<&[Symbol]>) -> Result<LinearCode> {
    let default: Vec<Symbol> = (0..n as Symbol).collect();
    let pts = points.unwrap_or(&default);
    let rows: Vec<Word> = (0..k)
        .map(|i| pts.iter().map(|&x| field.pow(x, i)).collect())
        .collect();
    LinearCode::from_rows(field, n, &rows)
}

fn reed_muller1(m: usize) -> Result<LinearCode> {
    let f = Field::new(2)?;
    let n = 1usize << m;
    let mut rows = vec![vec![1 as Symbol; n]];
    for bit in (0..m).rev() {
        rows.push((0..n).map(|x| (x >> bit & 1) as Symbol).collect());
    }
    LinearCode::from_rows(&f, n, &rows)
}

/// `Tr(y) = y + y^2 + ... + y^(2^(deg-1))` in a binary field.
fn trace(field: &Field, y: Symbol, deg: usize) -> Symbol {
    let mut acc = 0;
    let mut t = y;
    for _ in 0..deg {
        acc = field.add(acc, t);
        t = field.mul(t, t);
    }
    acc
}

/// Kasami code of length `4^m - 1`: words
/// `Tr_m(a x^(2^m+1)) + Tr_2m(b x)` over nonzero `x = alpha^j`, with the
/// F_2-spans of `a` in GF(2^m) and `b` in GF(2^2m) as generator rows.
fn kasami(m: usize) -> Result<LinearCode> {
    let big = Field::new(1 << (2 * m))?;
    let f2 = Field::new(2)?;
    let n = big.q() - 1;
    let xs: Vec<Symbol> = (0..n).map(|j| big.exp(j)).collect();
    let norm_exp = (1 << m) + 1;
    // A primitive element of the subfield GF(2^m); its first m powers are an
    // F_2-basis because its minimal polynomial has degree m.
    let beta = big.exp(norm_exp);
    let mut rows: Vec<Word> = Vec::with_capacity(3 * m);
    for i in 0..m {
        let a = big.pow(beta, i);
        rows.push(
            xs.iter()
                .map(|&x| trace(&big, big.mul(a, big.pow(x, norm_exp)), m))
                .collect(),
        );
    }
    for t in 0..2 * m {
        let b: Symbol = 1 << t;
        rows.push(xs.iter().map(|&x| trace(&big, big.mul(b, x), 2 * m)).collect());
    }
    if rows.iter().flatten().any(|&s| s > 1) {
        return Err(Error::SelfCheckFailed("kasami trace left GF(2)".into()));
    }
    LinearCode::from_rows(&f2, n, &rows)
        .map_err(|e| Error::SelfCheckFailed(format!("kasami generator: {e}")))
}

/// Constructs a family member and runs its self-check.
pub fn construct(spec: &FamilySpec) -> Result<LinearCode> {
    let adv = spec.advertised()?;
    let code = match spec {
        FamilySpec::Hamming { q, m } => {
            LinearCode::from_parity_check(&projective_matrix(&Field::new(*q)?, *m))
        }
        FamilySpec::Simplex { q, m } => LinearCode::new(projective_matrix(&Field::new(*q)?, *m))?,
        FamilySpec::GolayBinary => parse_constant(&Field::new(2)?, &GOLAY23)?,
        FamilySpec::GolayTernary => parse_constant(&Field::new(3)?, &GOLAY11)?,
        FamilySpec::ReedSolomon { q, n, k, points } => {
            reed_solomon(&Field::new(*q)?, *n, *k, points.as_deref())?
        }
        FamilySpec::ReedMuller1 { m } => reed_muller1(*m)?,
        FamilySpec::Kasami { m } => kasami(*m)?,
        FamilySpec::BlockDiagonal { q, m, u } => {
            LinearCode::from_parity_check(&block_diagonal_parity(&Field::new(*q)?, *m, *u))
        }
        FamilySpec::Repetition { q, n } => {
            LinearCode::from_rows(&Field::new(*q)?, *n, &[vec![1; *n]])?
        }
    };
    self_check(spec, &code, adv)?;
    Ok(code)
}

fn self_check(spec: &FamilySpec, code: &LinearCode, adv: Advertised) -> Result<()> {
    let fail = |what: String| Err(Error::SelfCheckFailed(format!("{spec:?}: {what}")));
    if (code.n(), code.k()) != (adv.n, adv.k) {
        return fail(format!(
            "built [{}, {}], advertised [{}, {}]",
            code.n(),
            code.k(),
            adv.n,
            adv.k
        ));
    }
    if pow_sat(code.field().q(), code.k()) > SELF_CHECK_LIMIT {
        return Ok(());
    }
    let dist = code.weight_distribution(Budget::new(SELF_CHECK_LIMIT as u64))?;
    let d = (1..dist.len()).find(|&w| dist[w] > 0).unwrap_or(0);
    if d != adv.d {
        return fail(format!("minimum distance {d}, advertised {}", adv.d));
    }
    let nonzero: Vec<usize> = (1..dist.len()).filter(|&w| dist[w] > 0).collect();
    match *spec {
        FamilySpec::Kasami { m } if m >= 2 => {
            let mid = 1usize << (2 * m - 1);
            let off = 1usize << (m - 1);
            if nonzero != [mid - off, mid, mid + off] {
                return fail(format!("nonzero weights {nonzero:?} are not three-valued"));
            }
        }
        FamilySpec::Simplex { .. } if nonzero.len() != 1 => {
            return fail(format!("simplex weights {nonzero:?} are not constant"));
        }
        FamilySpec::Hamming { .. } | FamilySpec::GolayBinary | FamilySpec::GolayTernary => {
            // Perfect: the balls of radius (d-1)/2 tile the space.
            let q = code.field().q();
            let r = (adv.d - 1) / 2;
            let volume = crate::budget::ball_volume(q, code.n(), r);
            if pow_sat(q, code.k()).checked_mul(volume) != Some(pow_sat(q, code.n())) {
                return fail("sphere-packing equality fails".into());
            }
        }
        _ => {}
    }
    Ok(())
}
