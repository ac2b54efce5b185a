//! Fuzzy argumentation systems: initial degrees, weighted attacks and the
//! Gödel attack intensity.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fuzzy_set::{ArgumentId, FuzzySet};

/// Attack intensity of an argument with degree `source` along an attack of
/// weight `weight`, under the Gödel t-norm `x * y = min(x, y)`.
pub fn attack_intensity(source: Degree, weight: Degree) -> Degree {
    source.min(weight)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AttackKind {
    Tolerable,
    Sufficient,
}

/// Classifies the attack from `(B, source)` with `weight` on `(A, target)`.
pub fn classify_attack(source: Degree, weight: Degree, target: Degree) -> AttackKind {
    if attack_intensity(source, weight).sum_exceeds_one(target) {
        AttackKind::Sufficient
    } else {
        AttackKind::Tolerable
    }
}

/// A fuzzy argumentation system `<A, R>`.
///
/// Arguments may carry degree 0; attacks of weight 0 are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Fas {
    arguments: BTreeMap<ArgumentId, Degree>,
    attacks: BTreeMap<(ArgumentId, ArgumentId), Degree>,
}

impl Fas {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_argument(&mut self, id: ArgumentId, degree: Degree) -> Result<()> {
        if self.arguments.contains_key(&id) {
            return Err(Error::DuplicateArgument(id.to_string()));
        }
        self.arguments.insert(id, degree);
        Ok(())
    }

    /// Adds the attack `from -> to`. Both endpoints must already be declared.
    pub fn add_attack(&mut self, from: ArgumentId, to: ArgumentId, weight: Degree) -> Result<()> {
        for id in [&from, &to] {
            if !self.arguments.contains_key(id) {
                return Err(Error::UnknownArgument(id.to_string()));
            }
        }
        let key = (from, to);
        if self.attacks.contains_key(&key) {
            return Err(Error::DuplicateAttack(key.0.to_string(), key.1.to_string()));
        }
        if !weight.is_zero() {
            self.attacks.insert(key, weight);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.arguments.contains_key(id)
    }

    /// Initial degree `A(id)`; 0 for unknown arguments.
    pub fn degree(&self, id: &str) -> Degree {
        self.arguments.get(id).copied().unwrap_or(Degree::ZERO)
    }

    /// Attack weight `R(from, to)`; 0 when there is no attack.
    pub fn weight(&self, from: &str, to: &str) -> Degree {
        self.attacks
            .iter()
            .find(|((f, t), _)| f.as_str() == from && t.as_str() == to)
            .map(|(_, w)| *w)
            .unwrap_or(Degree::ZERO)
    }

    pub fn arguments(&self) -> impl Iterator<Item = (&ArgumentId, Degree)> + '_ {
        self.arguments.iter().map(|(k, v)| (k, *v))
    }

    pub fn argument_ids(&self) -> BTreeSet<ArgumentId> {
        self.arguments.keys().cloned().collect()
    }

    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId, Degree)> + '_ {
        self.attacks.iter().map(|((f, t), w)| (f, t, *w))
    }

    /// The initial degrees as a fuzzy set.
    pub fn argument_set(&self) -> FuzzySet {
        self.arguments().map(|(k, v)| (k.clone(), v)).collect()
    }

    fn require(&self, id: &str) -> Result<()> {
        if self.contains(id) {
            Ok(())
        } else {
            Err(Error::UnknownArgument(id.to_string()))
        }
    }

    /// Non-trivial attackers of `target` with their attack weights:
    /// `B` with `A(B) != 0` and `R(B, target) != 0`.
    pub(crate) fn attackers_with_weights<'a>(
        &'a self,
        target: &'a str,
    ) -> impl Iterator<Item = (&'a ArgumentId, Degree)> + 'a {
        self.attacks
            .iter()
            .filter(move |((_, t), _)| t.as_str() == target)
            .filter(|((f, _), _)| !self.degree(f.as_str()).is_zero())
            .map(|((f, _), w)| (f, *w))
    }

    /// `Att(target)`.
    pub fn attackers(&self, target: &str) -> Result<BTreeSet<ArgumentId>> {
        self.require(target)?;
        Ok(self.attackers_with_weights(target).map(|(b, _)| b.clone()).collect())
    }

    /// `max_{B in Att(target)} min(S(B), R(B, target))`, and 0 without attackers.
    pub fn joint_attack_intensity(&self, set: &FuzzySet, target: &str) -> Result<Degree> {
        self.require(target)?;
        Ok(self
            .attackers_with_weights(target)
            .map(|(b, w)| attack_intensity(set.get(b.as_str()), w))
            .max()
            .unwrap_or(Degree::ZERO))
    }

    /// Renames the system through the bijection `f`.
    pub fn apply_isomorphism(&self, f: &BTreeMap<ArgumentId, ArgumentId>) -> Result<Fas> {
        check_bijection(self.arguments.keys(), f)?;
        let mut out = Fas::new();
        for (id, d) in self.arguments() {
            out.add_argument(f[id].clone(), d)?;
        }
        for (from, to, w) in self.attacks() {
            out.add_attack(f[from].clone(), f[to].clone(), w)?;
        }
        Ok(out)
    }

    pub(crate) fn topology(&self) -> Topology {
        Topology::new(self)
    }
}

/// Checks that `f` maps exactly `domain` injectively.
pub(crate) fn check_bijection<'a>(
    domain: impl Iterator<Item = &'a ArgumentId>,
    f: &BTreeMap<ArgumentId, ArgumentId>,
) -> Result<()> {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for id in domain {
        count += 1;
        let image = f
            .get(id)
            .ok_or_else(|| Error::Domain(format!("isomorphism does not map `{id}`")))?;
        if !seen.insert(image) {
            return Err(Error::Domain(format!("isomorphism maps two arguments to `{image}`")));
        }
    }
    if f.len() != count {
        return Err(Error::Domain("isomorphism maps arguments outside the system".into()));
    }
    Ok(())
}

impl Serialize for Fas {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;

        #[derive(Serialize)]
        struct Attack<'a> {
            from: &'a ArgumentId,
            to: &'a ArgumentId,
            weight: Degree,
        }

        let attacks: Vec<Attack<'_>> = self
            .attacks()
            .map(|(from, to, weight)| Attack { from, to, weight })
            .collect();
        let mut st = serializer.serialize_struct("Fas", 2)?;
        st.serialize_field("arguments", &self.arguments)?;
        st.serialize_field("attacks", &attacks)?;
        st.end()
    }
}

/// Index-based view of a system, used by the enumeration kernels.
#[derive(Clone, Debug)]
pub(crate) struct Topology {
    pub names: Vec<ArgumentId>,
    pub degrees: Vec<Degree>,
    /// Non-trivial attackers of each argument as `(attacker, weight)`.
    pub attackers: Vec<Vec<(usize, Degree)>>,
    /// Targets of each argument as `(target, weight)`, restricted to
    /// attacks counted by `attackers`.
    pub targets: Vec<Vec<(usize, Degree)>>,
}

impl Topology {
    fn new(fas: &Fas) -> Self {
        let names: Vec<ArgumentId> = fas.arguments.keys().cloned().collect();
        let index: BTreeMap<&ArgumentId, usize> = names.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let degrees: Vec<Degree> = fas.arguments.values().copied().collect();
        let mut attackers = vec![Vec::new(); names.len()];
        let mut targets = vec![Vec::new(); names.len()];
        for ((from, to), w) in &fas.attacks {
            let (b, a) = (index[from], index[to]);
            if !degrees[b].is_zero() {
                attackers[a].push((b, *w));
                targets[b].push((a, *w));
            }
        }
        Topology {
            names,
            degrees,
            attackers,
            targets,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// `max_B min(values[B], R(B, a))` over the attackers of `a`.
    pub fn incoming(&self, values: &[Degree], a: usize) -> Degree {
        self.attackers[a]
            .iter()
            .map(|&(b, w)| values[b].min(w))
            .max()
            .unwrap_or(Degree::ZERO)
    }

    /// `min_B max(rej[B], 1 - A(B) * R(B, a))`, and 1 without attackers.
    pub fn defense_bound(&self, rej: &[Degree], a: usize) -> Degree {
        self.attackers[a]
            .iter()
            .map(|&(b, w)| rej[b].max(attack_intensity(self.degrees[b], w).complement()))
            .min()
            .unwrap_or(Degree::ONE)
    }
}
