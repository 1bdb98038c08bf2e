use super::classic::{
    bush_for, generalized_singleton_st, griesmer, redundancy_list_bound, singleton, sphere_packing_list, CodeParams,
};
use super::cover::CoverRegistry;
use super::generalized::{generalized_bounds, CyclotomicParams};
use super::value::{BoundResult, Quantity};
use crate::error::{Error, Result};

/// Applicable bounds first, ascending by value; the smallest is flagged as
/// tightest. Inapplicable ones keep their relative order at the end.
pub fn sort_and_mark(bounds: &mut [BoundResult]) {
    bounds.sort_by(|a, b| match (a.applicable, b.applicable) {
        (true, true) => a.value.cmp(&b.value),
        (true, false) => std::cmp::Ordering::Less,
        (false, true) => std::cmp::Ordering::Greater,
        (false, false) => std::cmp::Ordering::Equal,
    });
    for b in bounds.iter_mut() {
        b.tightest = false;
    }
    if let Some(first) = bounds.first_mut().filter(|b| b.applicable) {
        first.tightest = true;
    }
}

fn or_skip(name: &str, citation: &str, r: Result<BoundResult>) -> Result<BoundResult> {
    match r {
        Err(Error::MissingParam(p)) => Ok(BoundResult::inapplicable(
            name,
            Quantity::Size,
            citation,
            format!("needs {p}"),
        )),
        other => other,
    }
}

/// Every size bound for the parameters, sorted with the tightest first.
/// Fails with `NothingApplicable` when none applies.
pub fn bound_ladder(
    p: &CodeParams,
    registry: &CoverRegistry,
    aux: Option<&CyclotomicParams>,
    c: Option<f64>,
) -> Result<Vec<BoundResult>> {
    use super::classic::{BUSH, GRIESMER, REDUNDANCY_LIST, SINGLETON, SPHERE_PACKING, ST_LIST};
    p.validate()?;
    let mut out = vec![
        or_skip("singleton", SINGLETON, singleton(p))?,
        or_skip("generalized_singleton_list", ST_LIST, generalized_singleton_st(p))?,
        or_skip("redundancy_list", REDUNDANCY_LIST, redundancy_list_bound(p))?,
        or_skip("sphere_packing_list", SPHERE_PACKING, sphere_packing_list(p))?,
        or_skip("griesmer", GRIESMER, griesmer(p))?,
        or_skip("bush", BUSH, bush_for(p))?,
    ];
    if p.list > 1 {
        // Distance-only bounds say nothing about list size L > 1.
        for b in out.iter_mut().filter(|b| ["singleton", "griesmer", "bush"].contains(&b.name.as_str())) {
            if b.applicable && p.d.is_none() {
                b.applicable = false;
            }
        }
    }
    out.extend(generalized_bounds(p, registry, aux, c)?);
    sort_and_mark(&mut out);
    if !out.first().is_some_and(|b| b.applicable) {
        return Err(Error::NothingApplicable);
    }
    Ok(out)
}
