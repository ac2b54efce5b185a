//! Argument names and fuzzy sets over them.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::degree::Degree;
use crate::error::{Error, Result};

/// Name of an argument: a nonempty token of ASCII letters, digits and `_`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || !name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
            return Err(Error::InvalidArgumentName(name));
        }
        Ok(ArgumentId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for ArgumentId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for ArgumentId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl Serialize for ArgumentId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// A finite fuzzy set of arguments.
///
/// Members with grade 0 are never stored; looking up an absent argument
/// yields [`Degree::ZERO`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FuzzySet(BTreeMap<ArgumentId, Degree>);

impl FuzzySet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the grade of `id`, dropping the entry when `degree` is zero.
    pub fn insert(&mut self, id: ArgumentId, degree: Degree) {
        if degree.is_zero() {
            self.0.remove(&id);
        } else {
            self.0.insert(id, degree);
        }
    }

    pub fn get(&self, id: &str) -> Degree {
        self.0.get(id).copied().unwrap_or(Degree::ZERO)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of arguments with nonzero grade.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ArgumentId, Degree)> + '_ {
        self.0.iter().map(|(k, v)| (k, *v))
    }

    pub fn support(&self) -> impl Iterator<Item = &ArgumentId> + '_ {
        self.0.keys()
    }

    fn zip_with(&self, other: &FuzzySet, op: impl Fn(Degree, Degree) -> Degree) -> FuzzySet {
        let keys: BTreeSet<&ArgumentId> = self.0.keys().chain(other.0.keys()).collect();
        keys.into_iter()
            .map(|k| (k.clone(), op(self.get(k.as_str()), other.get(k.as_str()))))
            .collect()
    }

    /// Pointwise maximum.
    pub fn union(&self, other: &FuzzySet) -> FuzzySet {
        self.zip_with(other, Degree::max)
    }

    /// Pointwise minimum.
    pub fn intersection(&self, other: &FuzzySet) -> FuzzySet {
        self.zip_with(other, Degree::min)
    }

    /// `x -> 1 - S(x)` over `universe`, which must contain the support.
    pub fn complement(&self, universe: &BTreeSet<ArgumentId>) -> Result<FuzzySet> {
        if let Some(stray) = self.support().find(|id| !universe.contains(*id)) {
            return Err(Error::Domain(format!(
                "argument `{stray}` of the fuzzy set is outside the universe"
            )));
        }
        Ok(universe
            .iter()
            .map(|id| (id.clone(), self.get(id.as_str()).complement()))
            .collect())
    }

    /// Fuzzy inclusion: `self(x) <= other(x)` for every `x`.
    pub fn is_subset(&self, other: &FuzzySet) -> bool {
        self.iter().all(|(id, d)| d <= other.get(id.as_str()))
    }

    /// Renames every member through `f`; members missing from `f` keep their name.
    pub fn rename(&self, f: &BTreeMap<ArgumentId, ArgumentId>) -> FuzzySet {
        self.iter()
            .map(|(id, d)| (f.get(id).unwrap_or(id).clone(), d))
            .collect()
    }
}

impl FromIterator<(ArgumentId, Degree)> for FuzzySet {
    fn from_iter<I: IntoIterator<Item = (ArgumentId, Degree)>>(iter: I) -> Self {
        let mut set = FuzzySet::new();
        for (id, d) in iter {
            set.insert(id, d);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(pairs: &[(&str, &str)]) -> FuzzySet {
        pairs
            .iter()
            .map(|(n, d)| (ArgumentId::new(*n).unwrap(), d.parse().unwrap()))
            .collect()
    }

    fn universe(names: &[&str]) -> BTreeSet<ArgumentId> {
        names.iter().map(|n| ArgumentId::new(*n).unwrap()).collect()
    }

    #[test]
    fn argument_names() {
        assert!(ArgumentId::new("a_1").is_ok());
        assert!(ArgumentId::new("").is_err());
        assert!(ArgumentId::new("a-b").is_err());
        assert_ne!(ArgumentId::new("A").unwrap(), ArgumentId::new("a").unwrap());
    }

    #[test]
    fn zero_grades_are_not_stored() {
        let s = fs(&[("A", "0"), ("B", "0.3")]);
        assert_eq!(s.len(), 1);
        assert_eq!(s.get("A"), Degree::ZERO);
        assert_eq!(s.get("Z"), Degree::ZERO);
    }

    #[test]
    fn union_examples() {
        let s2 = fs(&[("B", "0.8"), ("C", "0.9")]);
        let s3 = fs(&[("A", "0.8"), ("B", "0.8"), ("C", "1")]);
        // s2 is a subset of s3, so the union is s3 itself.
        assert_eq!(s2.union(&s3), s3);
        assert_eq!(FuzzySet::new().union(&s3), s3);
        let p = fs(&[("A", "0.3")]);
        assert_eq!(p.union(&p), p);
    }

    #[test]
    fn intersection_examples() {
        let s1 = fs(&[("A", "0.5")]);
        let s3 = fs(&[("A", "0.8"), ("B", "0.8"), ("C", "1")]);
        assert_eq!(s1.intersection(&s3), s1);
        assert!(s3.intersection(&FuzzySet::new()).is_empty());
        assert!(fs(&[("A", "0.4")]).intersection(&fs(&[("B", "0.4")])).is_empty());
    }

    #[test]
    fn complement_examples() {
        let s3 = fs(&[("A", "0.8"), ("B", "0.8"), ("C", "1")]);
        let u = universe(&["A", "B", "C"]);
        assert_eq!(s3.complement(&u).unwrap(), fs(&[("A", "0.2"), ("B", "0.2")]));
        assert_eq!(
            FuzzySet::new().complement(&universe(&["A"])).unwrap(),
            fs(&[("A", "1")])
        );
        assert!(fs(&[("A", "1")]).complement(&universe(&["A"])).unwrap().is_empty());
        assert!(matches!(s3.complement(&universe(&["A"])), Err(Error::Domain(_))));
    }

    #[test]
    fn subset_examples() {
        let s1 = fs(&[("A", "0.5")]);
        let s2 = fs(&[("B", "0.8"), ("C", "0.9")]);
        let s3 = fs(&[("A", "0.8"), ("B", "0.8"), ("C", "1")]);
        assert!(s1.is_subset(&s3));
        assert!(s2.is_subset(&s3));
        assert!(!s3.is_subset(&s2));
        assert!(FuzzySet::new().is_subset(&s2));
    }
}
