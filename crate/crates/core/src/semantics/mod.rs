//! The ten fuzzy labeling semantics.
//!
//! Profile-based semantics (conflict-free, admissible, JV, VJ, complete,
//! stable) are checked directly against their postulates. Enumeration works
//! over the characteristic grid of the system, so preferred, semi-stable and
//! ideal are extremal relative to the complete labelings on that grid.

mod complete;
mod extremal;
mod grid;
mod grounded;
mod members;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fas::{Fas, Topology};
use crate::labeling::{FuzzyLabeling, Triple};
use crate::postulates::{satisfies_all, PostulateId};

pub use complete::{complete_from_acceptability, enumerate_complete};
pub use extremal::{ideal, select_extremal};
pub use grid::{characteristic_values, CharacteristicValueSet};
pub use grounded::{grounded_fixpoint, grounded_fixpoint_with_rounds};
pub use members::{enumerate_members, sample_members};

pub(crate) use extremal::{ideal_from, select_from};
pub(crate) use members::sample_with;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemanticsId {
    ConflictFree,
    Admissible,
    JvAdmissible,
    VjAdmissible,
    Complete,
    Grounded,
    Preferred,
    SemiStable,
    Stable,
    Ideal,
}

impl SemanticsId {
    pub const ALL: [SemanticsId; 10] = [
        SemanticsId::ConflictFree,
        SemanticsId::Admissible,
        SemanticsId::JvAdmissible,
        SemanticsId::VjAdmissible,
        SemanticsId::Complete,
        SemanticsId::Grounded,
        SemanticsId::Preferred,
        SemanticsId::SemiStable,
        SemanticsId::Stable,
        SemanticsId::Ideal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemanticsId::ConflictFree => "conflict-free",
            SemanticsId::Admissible => "admissible",
            SemanticsId::JvAdmissible => "jv-admissible",
            SemanticsId::VjAdmissible => "vj-admissible",
            SemanticsId::Complete => "complete",
            SemanticsId::Grounded => "grounded",
            SemanticsId::Preferred => "preferred",
            SemanticsId::SemiStable => "semi-stable",
            SemanticsId::Stable => "stable",
            SemanticsId::Ideal => "ideal",
        }
    }

    /// The postulates a labeling must satisfy. Extremal semantics inherit
    /// the complete profile.
    pub fn profile(self) -> &'static [PostulateId] {
        use PostulateId::*;
        match self {
            SemanticsId::ConflictFree => &[Bounded, Residual, Uncontroversial, Weakened],
            SemanticsId::Admissible => &[Bounded, Residual, Weakened, Defense],
            SemanticsId::JvAdmissible => &[Bounded, Residual, StrictWeakened, Defense],
            SemanticsId::VjAdmissible => &[Bounded, Residual, Weakened, StrictDefense],
            _ => &[Bounded, Residual, StrictWeakened, StrictDefense],
        }
    }

    /// Whether membership is decided by postulates alone.
    pub fn is_profile_based(self) -> bool {
        matches!(
            self,
            SemanticsId::ConflictFree
                | SemanticsId::Admissible
                | SemanticsId::JvAdmissible
                | SemanticsId::VjAdmissible
                | SemanticsId::Complete
                | SemanticsId::Stable
        )
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemanticsId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.to_ascii_lowercase().replace('_', "-");
        SemanticsId::ALL
            .into_iter()
            .find(|id| id.name() == wanted || id.name().replace('-', "") == wanted)
            .ok_or_else(|| Error::Domain(format!("unknown semantics `{s}`")))
    }
}

impl Serialize for SemanticsId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Bounds on enumeration work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_args: usize,
    pub max_results: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_args: 10,
            max_results: 1_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_args(&self, fas: &Fas) -> Result<()> {
        if fas.len() > self.max_args {
            return Err(Error::CapExceeded {
                found: fas.len(),
                cap: self.max_args,
            });
        }
        Ok(())
    }
}

/// Labelings in canonical order without duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LabelingSet(Vec<FuzzyLabeling>);

impl LabelingSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FuzzyLabeling> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[FuzzyLabeling] {
        &self.0
    }

    pub fn contains(&self, lab: &FuzzyLabeling) -> bool {
        self.0.binary_search(lab).is_ok()
    }

    pub fn into_vec(self) -> Vec<FuzzyLabeling> {
        self.0
    }
}

impl FromIterator<FuzzyLabeling> for LabelingSet {
    fn from_iter<I: IntoIterator<Item = FuzzyLabeling>>(iter: I) -> Self {
        let mut v: Vec<_> = iter.into_iter().collect();
        v.sort();
        v.dedup();
        LabelingSet(v)
    }
}

impl<'a> IntoIterator for &'a LabelingSet {
    type Item = &'a FuzzyLabeling;
    type IntoIter = std::slice::Iter<'a, FuzzyLabeling>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for LabelingSet {
    type Item = FuzzyLabeling;
    type IntoIter = std::vec::IntoIter<FuzzyLabeling>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

pub(crate) struct ResultCollector {
    found: Vec<FuzzyLabeling>,
    limit: usize,
}

impl ResultCollector {
    pub(crate) fn new(limits: &Limits) -> Self {
        ResultCollector {
            found: Vec::new(),
            limit: limits.max_results,
        }
    }

    pub(crate) fn push(&mut self, lab: FuzzyLabeling) -> Result<()> {
        if self.found.len() >= self.limit {
            return Err(Error::TooManyResults { limit: self.limit });
        }
        self.found.push(lab);
        Ok(())
    }

    pub(crate) fn finish(self) -> LabelingSet {
        self.found.into_iter().collect()
    }
}

/// Visits every vector in the product of `choices`, in odometer order, until
/// `visit` returns false. An empty product visits the empty vector once.
pub(crate) fn for_each_assignment<F>(choices: &[&[Degree]], mut visit: F)
where
    F: FnMut(&[Degree]) -> bool,
{
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    let mut current: Vec<Degree> = choices.iter().map(|c| c[0]).collect();
    loop {
        if !visit(&current) {
            return;
        }
        let mut pos = 0;
        loop {
            if pos == choices.len() {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                current[pos] = choices[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            current[pos] = choices[pos][0];
            pos += 1;
        }
    }
}

/// Builds a labeling from parallel accept/reject vectors; `None` if some
/// residual would be negative.
pub(crate) fn assemble(topo: &Topology, accept: &[Degree], reject: &[Degree]) -> Option<FuzzyLabeling> {
    topo.names
        .iter()
        .zip(accept.iter().zip(reject))
        .map(|(n, (a, r))| Triple::residual(*a, *r).map(|t| (n.clone(), t)))
        .collect()
}

/// `l1 ⊑ l2`: pointwise no more accepted and no more rejected.
pub fn leq_labeling(l1: &FuzzyLabeling, l2: &FuzzyLabeling) -> Result<bool> {
    if l1.len() != l2.len() || l1.iter().zip(l2.iter()).any(|((x, _), (y, _))| x != y) {
        return Err(Error::Domain("labelings are over different arguments".into()));
    }
    Ok(l1
        .iter()
        .zip(l2.iter())
        .all(|((_, t1), (_, t2))| t1.accept <= t2.accept && t1.reject <= t2.reject))
}

fn all_zero_undec(lab: &FuzzyLabeling) -> bool {
    lab.iter().all(|(_, t)| t.undec.is_zero())
}

/// Membership test. Grounded uses the fixpoint solver; preferred,
/// semi-stable and ideal compare against the grid enumeration.
pub fn is_labeling(fas: &Fas, lab: &FuzzyLabeling, s: SemanticsId, limits: &Limits) -> Result<bool> {
    lab.ensure_total(fas)?;
    let complete = satisfies_all(fas, lab, SemanticsId::Complete.profile());
    match s {
        SemanticsId::Grounded => Ok(complete && *lab == grounded_fixpoint(fas)),
        SemanticsId::Stable => Ok(complete && all_zero_undec(lab)),
        SemanticsId::Preferred | SemanticsId::SemiStable | SemanticsId::Ideal => {
            Ok(complete && solve(fas, s, limits)?.contains(lab))
        }
        _ => Ok(satisfies_all(fas, lab, s.profile())),
    }
}

/// All labelings of `s` over the characteristic grid, canonically ordered.
pub fn solve(fas: &Fas, s: SemanticsId, limits: &Limits) -> Result<LabelingSet> {
    match s {
        SemanticsId::ConflictFree | SemanticsId::Admissible | SemanticsId::JvAdmissible | SemanticsId::VjAdmissible => {
            enumerate_members(fas, s, limits)
        }
        SemanticsId::Complete => enumerate_complete(fas, limits),
        SemanticsId::Grounded => Ok(std::iter::once(grounded_fixpoint(fas)).collect()),
        SemanticsId::Ideal => ideal(fas, limits),
        SemanticsId::Preferred | SemanticsId::SemiStable | SemanticsId::Stable => select_extremal(fas, s, limits),
    }
}
