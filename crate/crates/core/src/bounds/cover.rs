use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;

use super::classic::big_ball_volume;
use super::value::{BoundResult, BoundValue, Quantity};
use crate::budget::Budget;
use crate::codes::AnyCode;
use crate::covering::table::{k_entries, TableEntry, TableKind};
use crate::covering::{delsarte_result, linear_radius, MethodUsed, RadiusResult};
use crate::error::{Error, Result};
use crate::families::{construct, FamilySpec};

pub const COVERING_BOUND: &str = "covering-code bound on list-decodable codes";
pub const DELSARTE_COVER: &str = "dual-weight (Delsarte) covering bound on list-decodable codes";
pub const PERFECT_LIST: &str = "list size forced by a perfect covering code";

/// A code together with a proven upper bound on its covering radius.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifiedCover {
    pub name: String,
    pub q: usize,
    pub n: usize,
    pub size: BigUint,
    /// `log_q |C|` when the code is linear.
    pub dimension: Option<usize>,
    pub radius: usize,
    pub method: MethodUsed,
}

impl VerifiedCover {
    /// Accepts exact radii and the dual-weight upper bound; sampled
    /// estimates are refused.
    pub fn new(name: &str, code: &AnyCode, radius: &RadiusResult) -> Result<VerifiedCover> {
        if !radius.is_sound_upper_bound() {
            return Err(Error::RadiusNotVerified);
        }
        let (size, dimension) = match code {
            AnyCode::Linear(c) => (c.size(), Some(c.k())),
            AnyCode::Explicit(c) => (BigUint::from(c.len()), None),
        };
        Ok(VerifiedCover {
            name: name.to_string(),
            q: code.field().q(),
            n: code.n(),
            size,
            dimension,
            radius: radius.radius,
            method: radius.method,
        })
    }

    pub fn redundancy(&self) -> Option<usize> {
        self.dimension.map(|k| self.n - k)
    }

    pub fn exact(&self) -> bool {
        matches!(self.method, MethodUsed::Exhaustive | MethodUsed::CosetLeader)
    }

    /// `|C'| q^s` for the cover `C' x F_q^s` of length `n`, if `n >= self.n`.
    pub fn extended_size(&self, n: usize) -> Option<BoundValue> {
        let s = n.checked_sub(self.n)?;
        Some(match self.dimension {
            Some(k) => BoundValue::power(1u8, self.q, k + s),
            None => BoundValue::power(self.size.clone(), self.q, s),
        })
    }

    fn citation(&self) -> &'static str {
        if self.method == MethodUsed::DelsarteUpper {
            DELSARTE_COVER
        } else {
            COVERING_BOUND
        }
    }
}

/// `|C| <= L |C'|` for a verified cover of radius at most `d_list`.
pub fn covering_code_bound(cover: &VerifiedCover, d_list: usize, list: usize) -> Result<BoundResult> {
    if cover.radius > d_list {
        return Err(Error::RadiusTooLarge {
            radius: cover.radius,
            limit: d_list,
        });
    }
    let value = cover.extended_size(cover.n).expect("same length").times(list);
    Ok(BoundResult::ok("covering_code", Quantity::Size, value, cover.citation())
        .with_reason(format!("cover {} (radius {} by {})", cover.name, cover.radius, cover.method.name())))
}

/// `|C| <= L K` from a tabulated covering-code size `K_q(n, R)`, `R <= d_list`.
pub fn covering_table_bound(entry: &TableEntry, d_list: usize, list: usize) -> Result<BoundResult> {
    if entry.kind != TableKind::K {
        return Err(Error::BadParams("expected a K_q(n,R) entry".into()));
    }
    if entry.radius > d_list {
        return Err(Error::RadiusTooLarge {
            radius: entry.radius,
            limit: d_list,
        });
    }
    let v = entry.integer().expect("K entries are integers").clone();
    Ok(BoundResult::ok("covering_table", Quantity::Size, BoundValue::Integer(v * list), entry.citation)
        .with_reason(format!("K_{}({},{}) <= {}", entry.q, entry.first, entry.radius, entry.expression)))
}

/// Smallest list size compatible with a code of `code_size` words and a
/// cover of `cover_size` words: `ceil(|C| / |C'|)`.
pub fn implied_list_size(code_size: &BigUint, cover_size: &BigUint) -> BigUint {
    code_size.div_ceil(cover_size)
}

/// `ceil(q^k / |C'|)` for a perfect cover `C'` of the same length.
pub fn list_size_lower_bound(k: usize, cover: &VerifiedCover) -> Result<BigUint> {
    let space = BigUint::from(cover.q).pow(cover.n as u32);
    if !cover.exact() || &cover.size * big_ball_volume(cover.q, cover.n, cover.radius) != space {
        return Err(Error::NotPerfect);
    }
    Ok(implied_list_size(&BigUint::from(cover.q).pow(k as u32), &cover.size))
}

/// Verified covers available to the ladder.
#[derive(Debug, Clone, Default)]
pub struct CoverRegistry {
    pub covers: Vec<VerifiedCover>,
    /// Include the tabulated `K_q(n, R)` values.
    pub use_table: bool,
}

impl CoverRegistry {
    pub fn empty() -> Self {
        CoverRegistry::default()
    }

    pub fn push(&mut self, cover: VerifiedCover) {
        self.covers.push(cover);
    }

    /// Hamming, Golay, first-order Reed-Muller, block-diagonal and Kasami-dual
    /// covers, each with an exactly computed or dual-weight radius.
    pub fn standard() -> &'static CoverRegistry {
        static REG: OnceLock<CoverRegistry> = OnceLock::new();
        REG.get_or_init(build_standard)
    }

    /// Every bound `L |C' x F_q^s|` for covers of radius at most `d_list`
    /// fitting length `n`, plus tabulated entries. One result per cover.
    pub fn bounds(&self, q: usize, n: usize, d_list: usize, list: usize) -> Vec<BoundResult> {
        let mut out = Vec::new();
        for c in &self.covers {
            if c.q != q || c.radius > d_list {
                continue;
            }
            if let Some(v) = c.extended_size(n) {
                let ext = n - c.n;
                let mut b = BoundResult::ok("covering_code", Quantity::Size, v.times(list), c.citation())
                    .with_reason(format!(
                        "cover {} (n={}, radius {} by {}){}",
                        c.name,
                        c.n,
                        c.radius,
                        c.method.name(),
                        if ext > 0 { format!(" extended by F_{q}^{ext}") } else { String::new() }
                    ));
                if c.method == MethodUsed::DelsarteUpper {
                    b = b.assume("radius bounded by the number of dual weights");
                }
                out.push(b);
            }
        }
        if self.use_table {
            for e in k_entries() {
                if e.q != q || e.radius > d_list || e.first > n {
                    continue;
                }
                let ext = n - e.first;
                let v = e.integer().expect("integer").clone() * list;
                out.push(
                    BoundResult::ok("covering_table", Quantity::Size, BoundValue::power(v, q, ext), e.citation)
                        .with_reason(format!(
                            "K_{}({},{}) {} {}{}",
                            e.q,
                            e.first,
                            e.radius,
                            if e.exact { "=" } else { "<=" },
                            e.expression,
                            if ext > 0 { format!(" extended by F_{q}^{ext}") } else { String::new() }
                        )),
                );
            }
        }
        out
    }
}

fn build_standard() -> CoverRegistry {
    let budget = Budget::new(1 << 22);
    let mut reg = CoverRegistry {
        covers: Vec::new(),
        use_table: true,
    };
    let mut exact = |name: String, spec: FamilySpec| {
        if let Ok(code) = construct(&spec) {
            if let Ok(r) = linear_radius(&code, budget) {
                let any = AnyCode::Linear(code);
                reg.covers.push(VerifiedCover::new(&name, &any, &r).expect("exact radius"));
            }
        }
    };
    for (q, max_m) in [(2, 8), (3, 5), (4, 4), (5, 3), (7, 3), (8, 3), (9, 3)] {
        for m in 2..=max_m {
            exact(format!("hamming({q},{m})"), FamilySpec::Hamming { q, m });
        }
    }
    exact("golay_binary".into(), FamilySpec::GolayBinary);
    exact("golay_ternary".into(), FamilySpec::GolayTernary);
    for m in 2..=4 {
        exact(format!("reed_muller1({m})"), FamilySpec::ReedMuller1 { m });
    }
    for (q, m) in [(2, 3), (2, 4), (3, 3)] {
        for u in 2..=3 {
            exact(format!("block_diagonal({q},{m},{u})"), FamilySpec::BlockDiagonal { q, m, u });
        }
    }
    for m in 2..=4 {
        if let Ok(kasami) = construct(&FamilySpec::Kasami { m }) {
            let dual = kasami.dual();
            if let Ok(r) = delsarte_result(&dual, budget) {
                let any = AnyCode::Linear(dual);
                reg.covers
                    .push(VerifiedCover::new(&format!("kasami_dual({m})"), &any, &r).expect("sound"));
            }
        }
    }
    reg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::table::lookup_k as lookup_k_entry;

    fn golay() -> VerifiedCover {
        let c = construct(&FamilySpec::GolayBinary).unwrap();
        let r = linear_radius(&c, Budget::default()).unwrap();
        VerifiedCover::new("golay", &AnyCode::Linear(c), &r).unwrap()
    }

    #[test]
    fn golay_cover_bound() {
        let b = covering_code_bound(&golay(), 3, 2).unwrap();
        assert_eq!(b.exact(), Some(BigUint::from(8192u32)));
        assert_eq!(
            covering_code_bound(&golay(), 2, 1),
            Err(Error::RadiusTooLarge { radius: 3, limit: 2 })
        );
    }

    #[test]
    fn table_cover_bound_and_list_size() {
        let e = lookup_k_entry(2, 16, 3).unwrap();
        let b = covering_table_bound(&e, 3, 1).unwrap();
        assert_eq!(b.exact(), Some(BigUint::from(192u32)));
        let l = implied_list_size(&BigUint::from(512u32), &BigUint::from(192u32));
        assert_eq!(l, BigUint::from(3u8));
    }

    #[test]
    fn perfect_list_sizes() {
        let g = golay();
        assert_eq!(list_size_lower_bound(12, &g).unwrap(), BigUint::from(1u8));
        assert_eq!(list_size_lower_bound(15, &g).unwrap(), BigUint::from(8u8));
        let t = construct(&FamilySpec::GolayTernary).unwrap();
        let r = linear_radius(&t, Budget::default()).unwrap();
        let t = VerifiedCover::new("golay3", &AnyCode::Linear(t), &r).unwrap();
        assert_eq!(list_size_lower_bound(8, &t).unwrap(), BigUint::from(9u8));
        let rm = construct(&FamilySpec::ReedMuller1 { m: 4 }).unwrap();
        let r = linear_radius(&rm, Budget::default()).unwrap();
        let rm = VerifiedCover::new("rm", &AnyCode::Linear(rm), &r).unwrap();
        assert_eq!(list_size_lower_bound(8, &rm), Err(Error::NotPerfect));
    }

    #[test]
    fn estimates_are_refused() {
        let c = AnyCode::Linear(construct(&FamilySpec::Hamming { q: 2, m: 3 }).unwrap());
        let fake = RadiusResult {
            radius: 1,
            method: MethodUsed::SampleLower,
            exact: false,
            witness: None,
        };
        assert_eq!(VerifiedCover::new("x", &c, &fake), Err(Error::RadiusNotVerified));
    }

    #[test]
    fn standard_registry_contents() {
        let reg = CoverRegistry::standard();
        let kd = reg.covers.iter().find(|c| c.name == "kasami_dual(2)").unwrap();
        assert_eq!((kd.n, kd.dimension, kd.radius), (15, Some(9), 3));
        let bd = reg.covers.iter().find(|c| c.name == "block_diagonal(2,3,2)").unwrap();
        assert_eq!((bd.n, bd.radius), (14, 2));
        let bounds = reg.bounds(2, 16, 3, 1);
        let min = bounds.iter().filter_map(|b| b.exact()).min().unwrap();
        assert_eq!(min, BigUint::from(192u32));
    }
}
