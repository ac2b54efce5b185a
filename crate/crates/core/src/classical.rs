//! Classical abstract argumentation frameworks and their embedding as
//! systems whose degrees and weights are all 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fas::Fas;
use crate::fuzzy_set::ArgumentId;
use crate::labeling::{FuzzyLabeling, Triple};
use crate::semantics::Limits;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Af {
    args: BTreeSet<ArgumentId>,
    atts: BTreeSet<(ArgumentId, ArgumentId)>,
}

impl Af {
    pub fn new() -> Self {
        Af::default()
    }

    pub fn add_argument(&mut self, id: ArgumentId) -> Result<()> {
        if self.args.contains(&id) {
            return Err(Error::DuplicateArgument(id.to_string()));
        }
        self.args.insert(id);
        Ok(())
    }

    pub fn add_attack(&mut self, from: ArgumentId, to: ArgumentId) -> Result<()> {
        for end in [&from, &to] {
            if !self.args.contains(end) {
                return Err(Error::UnknownArgument(end.to_string()));
            }
        }
        if !self.atts.insert((from.clone(), to.clone())) {
            return Err(Error::DuplicateAttack(from.to_string(), to.to_string()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.args.len()
    }

    pub fn is_empty(&self) -> bool {
        self.args.is_empty()
    }

    pub fn arguments(&self) -> impl Iterator<Item = &ArgumentId> + '_ {
        self.args.iter()
    }

    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.atts.iter().map(|(a, b)| (a, b))
    }

    pub fn attackers(&self, target: &str) -> BTreeSet<ArgumentId> {
        self.atts
            .iter()
            .filter(|(_, b)| b.as_str() == target)
            .map(|(a, _)| a.clone())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalLabel {
    In,
    Out,
    Undec,
}

impl fmt::Display for ClassicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalLabel::In => "in",
            ClassicalLabel::Out => "out",
            ClassicalLabel::Undec => "undec",
        })
    }
}

impl FromStr for ClassicalLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "in" => Ok(ClassicalLabel::In),
            "out" => Ok(ClassicalLabel::Out),
            "undec" => Ok(ClassicalLabel::Undec),
            _ => Err(Error::Domain(format!("unknown classical label `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ClassicalLabeling(BTreeMap<ArgumentId, ClassicalLabel>);

impl ClassicalLabeling {
    pub fn new() -> Self {
        ClassicalLabeling::default()
    }

    pub fn insert(&mut self, id: ArgumentId, label: ClassicalLabel) -> Option<ClassicalLabel> {
        self.0.insert(id, label)
    }

    pub fn get(&self, id: &str) -> Option<ClassicalLabel> {
        self.0.get(id).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ArgumentId, ClassicalLabel)> + '_ {
        self.0.iter().map(|(k, v)| (k, *v))
    }

    /// Arguments carrying `label`.
    pub fn with_label(&self, label: ClassicalLabel) -> BTreeSet<ArgumentId> {
        self.0
            .iter()
            .filter(|(_, l)| **l == label)
            .map(|(k, _)| k.clone())
            .collect()
    }
}

impl FromIterator<(ArgumentId, ClassicalLabel)> for ClassicalLabeling {
    fn from_iter<I: IntoIterator<Item = (ArgumentId, ClassicalLabel)>>(iter: I) -> Self {
        ClassicalLabeling(iter.into_iter().collect())
    }
}

/// In iff every attacker is out; out iff some attacker is in.
pub fn is_classical_complete(af: &Af, lab: &ClassicalLabeling) -> bool {
    lab.len() == af.len()
        && af.arguments().all(|a| {
            let Some(label) = lab.get(a.as_str()) else { return false };
            let attackers = af.attackers(a.as_str());
            let all_out = attackers
                .iter()
                .all(|b| lab.get(b.as_str()) == Some(ClassicalLabel::Out));
            let some_in = attackers
                .iter()
                .any(|b| lab.get(b.as_str()) == Some(ClassicalLabel::In));
            match label {
                ClassicalLabel::In => all_out,
                ClassicalLabel::Out => some_in,
                ClassicalLabel::Undec => !all_out && !some_in,
            }
        })
}

/// Every complete labeling, by brute force over the three labels.
pub fn enumerate_classical_complete(af: &Af, limits: &Limits) -> Result<Vec<ClassicalLabeling>> {
    if af.len() > limits.max_args {
        return Err(Error::CapExceeded {
            found: af.len(),
            cap: limits.max_args,
        });
    }
    let names: Vec<&ArgumentId> = af.arguments().collect();
    let labels = [ClassicalLabel::In, ClassicalLabel::Out, ClassicalLabel::Undec];
    let total = 3usize.pow(names.len() as u32);
    let mut found = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let lab: ClassicalLabeling = names
            .iter()
            .map(|n| {
                let l = labels[rest % 3];
                rest /= 3;
                ((*n).clone(), l)
            })
            .collect();
        if is_classical_complete(af, &lab) {
            found.push(lab);
        }
    }
    found.sort();
    Ok(found)
}

/// Degree 1 for every argument and attack.
pub fn af_to_fas(af: &Af) -> Fas {
    let mut fas = Fas::new();
    for a in af.arguments() {
        fas.add_argument(a.clone(), Degree::ONE).expect("arguments are unique");
    }
    for (a, b) in af.attacks() {
        fas.add_attack(a.clone(), b.clone(), Degree::ONE)
            .expect("attacks are unique");
    }
    fas
}

pub fn clab_to_flab(lab: &ClassicalLabeling) -> FuzzyLabeling {
    lab.iter()
        .map(|(id, l)| {
            let t = match l {
                ClassicalLabel::In => Triple::new(Degree::ONE, Degree::ZERO, Degree::ZERO),
                ClassicalLabel::Out => Triple::new(Degree::ZERO, Degree::ONE, Degree::ZERO),
                ClassicalLabel::Undec => Triple::UNDECIDED,
            };
            (id.clone(), t)
        })
        .collect()
}
