//! Fuzzy labelings: a triple of degrees per argument.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::degree::{Degree, Magnitude};
use crate::error::{Error, Result};
use crate::fas::Fas;
use crate::fuzzy_set::{ArgumentId, FuzzySet};

/// Acceptability, rejectability and undecidability degree of one argument.
///
/// Field order gives the canonical `(a, r, u)` ordering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triple {
    #[serde(rename = "a")]
    pub accept: Degree,
    #[serde(rename = "r")]
    pub reject: Degree,
    #[serde(rename = "u")]
    pub undec: Degree,
}

impl Triple {
    pub const UNDECIDED: Triple = Triple {
        accept: Degree::ZERO,
        reject: Degree::ZERO,
        undec: Degree::ONE,
    };

    pub fn new(accept: Degree, reject: Degree, undec: Degree) -> Self {
        Triple { accept, reject, undec }
    }

    /// The triple with `u = 1 - a - r`, if that is non-negative.
    pub fn residual(accept: Degree, reject: Degree) -> Option<Self> {
        accept
            .complement()
            .checked_sub(reject)
            .map(|undec| Triple::new(accept, reject, undec))
    }

    pub fn total(&self) -> Magnitude {
        self.accept.plus(self.reject).plus(self.undec)
    }
}

/// A total assignment of [`Triple`]s to the arguments of a system.
///
/// The derived ordering compares labelings argument by argument in name
/// order, then by `(a, r, u)`; it is the canonical order of labeling sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FuzzyLabeling(BTreeMap<ArgumentId, Triple>);

impl FuzzyLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every argument of `fas` labelled `(0, 0, 1)`.
    pub fn all_undecided(fas: &Fas) -> Self {
        fas.arguments().map(|(id, _)| (id.clone(), Triple::UNDECIDED)).collect()
    }

    pub fn insert(&mut self, id: ArgumentId, triple: Triple) -> Option<Triple> {
        self.0.insert(id, triple)
    }

    pub fn get(&self, id: &str) -> Option<&Triple> {
        self.0.get(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ArgumentId, &Triple)> + '_ {
        self.0.iter()
    }

    fn part(&self, pick: impl Fn(&Triple) -> Degree) -> FuzzySet {
        self.0.iter().map(|(k, t)| (k.clone(), pick(t))).collect()
    }

    /// `FLab^a`.
    pub fn acceptability(&self) -> FuzzySet {
        self.part(|t| t.accept)
    }

    /// `FLab^r`.
    pub fn rejectability(&self) -> FuzzySet {
        self.part(|t| t.reject)
    }

    /// `FLab^u`.
    pub fn undecidability(&self) -> FuzzySet {
        self.part(|t| t.undec)
    }

    /// Fails unless the labeling covers exactly the arguments of `fas`.
    pub fn ensure_total(&self, fas: &Fas) -> Result<()> {
        if let Some((missing, _)) = fas.arguments().find(|(id, _)| !self.0.contains_key(*id)) {
            return Err(Error::LabelingNotTotal(format!("no triple for `{missing}`")));
        }
        if let Some(extra) = self.0.keys().find(|id| !fas.contains(id.as_str())) {
            return Err(Error::LabelingNotTotal(format!("`{extra}` is not an argument")));
        }
        Ok(())
    }

    /// Renames through `f`; arguments missing from `f` keep their name.
    pub fn rename(&self, f: &BTreeMap<ArgumentId, ArgumentId>) -> FuzzyLabeling {
        self.0
            .iter()
            .map(|(id, t)| (f.get(id).unwrap_or(id).clone(), *t))
            .collect()
    }
}

impl FromIterator<(ArgumentId, Triple)> for FuzzyLabeling {
    fn from_iter<I: IntoIterator<Item = (ArgumentId, Triple)>>(iter: I) -> Self {
        FuzzyLabeling(iter.into_iter().collect())
    }
}
