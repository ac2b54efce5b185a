//! Complete labelings: strict weakened plus strict defense, with residual
//! undecidability.

use crate::error::Result;
use crate::fas::{Fas, Topology};
use crate::fuzzy_set::FuzzySet;
use crate::labeling::FuzzyLabeling;

use super::grid::characteristic_values;
use super::{for_each_assignment, LabelingSet, Limits, ResultCollector};
use crate::degree::Degree;

/// Rejectability forced by `accept` through strict weakening.
pub(crate) fn strict_rejectability(topo: &Topology, accept: &[Degree]) -> Vec<Degree> {
    (0..topo.len()).map(|i| topo.incoming(accept, i)).collect()
}

/// True iff `accept[i] = min(defense bound, A(i))` everywhere.
pub(crate) fn strictly_defended(topo: &Topology, accept: &[Degree], reject: &[Degree]) -> bool {
    (0..topo.len()).all(|i| accept[i] == topo.defense_bound(reject, i).min(topo.degrees[i]))
}

pub(crate) fn residual_ok(accept: &[Degree], reject: &[Degree]) -> bool {
    accept.iter().zip(reject).all(|(a, r)| !a.sum_exceeds_one(*r))
}

/// Derives the complete labeling whose acceptability part is `accept`, if
/// one exists. Arguments missing from `accept` have acceptability 0.
pub fn complete_from_acceptability(fas: &Fas, accept: &FuzzySet) -> Option<FuzzyLabeling> {
    let topo = fas.topology();
    let a: Vec<Degree> = topo.names.iter().map(|n| accept.get(n.as_str())).collect();
    complete_from_vector(&topo, &a)
}

pub(crate) fn complete_from_vector(topo: &Topology, accept: &[Degree]) -> Option<FuzzyLabeling> {
    let reject = strict_rejectability(topo, accept);
    if !residual_ok(accept, &reject) || !strictly_defended(topo, accept, &reject) {
        return None;
    }
    super::assemble(topo, accept, &reject)
}

/// All complete labelings whose degrees lie on the characteristic grid.
pub fn enumerate_complete(fas: &Fas, limits: &Limits) -> Result<LabelingSet> {
    limits.check_args(fas)?;
    let topo = fas.topology();
    let grid = characteristic_values(fas);
    // Bounded postulate: acceptability never exceeds the initial degree.
    let choices: Vec<&[Degree]> = topo.degrees.iter().map(|d| grid.up_to(*d)).collect();
    let mut out = ResultCollector::new(limits);
    let mut failure = Ok(());
    for_each_assignment(&choices, |a| {
        if let Some(lab) = complete_from_vector(&topo, a) {
            if let Err(e) = out.push(lab) {
                failure = Err(e);
                return false;
            }
        }
        true
    });
    failure?;
    Ok(out.finish())
}
