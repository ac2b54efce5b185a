//! Extremal selections over the enumerated complete labelings.

use crate::error::{Error, Result};
use crate::fas::Fas;
use crate::fuzzy_set::FuzzySet;
use crate::labeling::FuzzyLabeling;

use super::{enumerate_complete, leq_labeling, LabelingSet, Limits, SemanticsId};

/// Keeps the elements whose key is minimal (or maximal) under inclusion.
fn extremes(labs: &[FuzzyLabeling], key: impl Fn(&FuzzyLabeling) -> FuzzySet, maximal: bool) -> LabelingSet {
    let keys: Vec<FuzzySet> = labs.iter().map(key).collect();
    let dominated = |i: usize, j: usize| {
        if maximal {
            keys[i].is_subset(&keys[j]) && keys[i] != keys[j]
        } else {
            keys[j].is_subset(&keys[i]) && keys[i] != keys[j]
        }
    };
    (0..labs.len())
        .filter(|&i| !(0..labs.len()).any(|j| dominated(i, j)))
        .map(|i| labs[i].clone())
        .collect()
}

/// Grounded, preferred, semi-stable or stable labelings on the grid.
pub fn select_extremal(fas: &Fas, s: SemanticsId, limits: &Limits) -> Result<LabelingSet> {
    if !matches!(
        s,
        SemanticsId::Grounded | SemanticsId::Preferred | SemanticsId::SemiStable | SemanticsId::Stable
    ) {
        return Err(Error::Domain(format!("`{s}` is not selected by extremality")));
    }
    let complete = enumerate_complete(fas, limits)?;
    Ok(select_from(complete.as_slice(), s))
}

/// Extremal selection from an already enumerated complete set.
pub(crate) fn select_from(labs: &[FuzzyLabeling], s: SemanticsId) -> LabelingSet {
    match s {
        SemanticsId::Grounded => extremes(labs, FuzzyLabeling::acceptability, false),
        SemanticsId::Preferred => extremes(labs, FuzzyLabeling::acceptability, true),
        SemanticsId::SemiStable => extremes(labs, FuzzyLabeling::undecidability, false),
        SemanticsId::Stable => labs
            .iter()
            .filter(|l| l.iter().all(|(_, t)| t.undec.is_zero()))
            .cloned()
            .collect(),
        other => unreachable!("`{other}` is not selected by extremality"),
    }
}

/// The largest complete labelings below every preferred labeling.
pub fn ideal(fas: &Fas, limits: &Limits) -> Result<LabelingSet> {
    let complete = enumerate_complete(fas, limits)?;
    Ok(ideal_from(complete.as_slice()))
}

pub(crate) fn ideal_from(labs: &[FuzzyLabeling]) -> LabelingSet {
    let preferred = extremes(labs, FuzzyLabeling::acceptability, true);
    let Some(first) = preferred.iter().next() else {
        return LabelingSet::default();
    };
    let mut bound = first.clone();
    for p in preferred.iter().skip(1) {
        bound = bound
            .iter()
            .map(|(id, t)| {
                let q = p.get(id.as_str()).expect("same arguments");
                let mut m = *t;
                m.accept = m.accept.min(q.accept);
                m.reject = m.reject.min(q.reject);
                (id.clone(), m)
            })
            .collect();
    }
    let below: Vec<&FuzzyLabeling> = labs
        .iter()
        .filter(|l| leq_labeling(l, &bound).expect("same arguments"))
        .collect();
    let result: LabelingSet = below
        .iter()
        .filter(|l| {
            !below
                .iter()
                .any(|m| m != *l && leq_labeling(l, m).expect("same arguments"))
        })
        .map(|l| (*l).clone())
        .collect();
    debug_assert!(!result.is_empty(), "grounded labeling always qualifies");
    result
}
