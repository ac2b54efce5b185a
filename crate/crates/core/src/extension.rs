//! Fuzzy extensions (f-extensions) and the converters between extensions
//! and labelings.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::degree::{Degree, Magnitude};
use crate::error::{Error, Result};
use crate::fas::{attack_intensity, classify_attack, AttackKind, Fas, Topology};
use crate::fuzzy_set::FuzzySet;
use crate::labeling::{FuzzyLabeling, Triple};
use crate::semantics::{characteristic_values, CharacteristicValueSet, Limits};

/// A fuzzy subset of the argument set of a system.
pub type FExtension = FuzzySet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FExtensionKind {
    ConflictFree,
    Admissible,
    Complete,
    Preferred,
    Grounded,
    Stable,
}

impl FExtensionKind {
    pub const ALL: [FExtensionKind; 6] = [
        FExtensionKind::ConflictFree,
        FExtensionKind::Admissible,
        FExtensionKind::Complete,
        FExtensionKind::Preferred,
        FExtensionKind::Grounded,
        FExtensionKind::Stable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FExtensionKind::ConflictFree => "conflict-free",
            FExtensionKind::Admissible => "admissible",
            FExtensionKind::Complete => "complete",
            FExtensionKind::Preferred => "preferred",
            FExtensionKind::Grounded => "grounded",
            FExtensionKind::Stable => "stable",
        }
    }
}

impl fmt::Display for FExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FExtensionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.to_ascii_lowercase().replace('_', "-");
        FExtensionKind::ALL
            .into_iter()
            .find(|k| k.name() == wanted || k.name().replace('-', "") == wanted)
            .ok_or_else(|| Error::Domain(format!("unknown f-extension kind `{s}`")))
    }
}

/// Degree `(B, b)` is weakened to by a sufficient attack from `(A, a)`.
pub fn weaken(a: Degree, weight: Degree, b: Degree) -> Result<Degree> {
    match classify_attack(a, weight, b) {
        AttackKind::Sufficient => Ok(attack_intensity(a, weight).complement()),
        AttackKind::Tolerable => Err(Error::Domain(format!(
            "attack of intensity {} on degree {b} is tolerable and weakens nothing",
            attack_intensity(a, weight)
        ))),
    }
}

struct Kernel<'a> {
    topo: Topology,
    grid: &'a CharacteristicValueSet,
}

impl Kernel<'_> {
    fn conflict_free(&self, s: &[Degree]) -> bool {
        (0..self.topo.len()).all(|c| {
            self.topo.attackers[c]
                .iter()
                .all(|&(b, w)| !attack_intensity(s[b], w).sum_exceeds_one(s[c]))
        })
    }

    fn defends(&self, s: &[Degree], c: usize, cdeg: Degree) -> bool {
        self.topo.attackers[c].iter().all(|&(b, w)| {
            let bdeg = self.topo.degrees[b];
            if classify_attack(bdeg, w, cdeg) == AttackKind::Tolerable {
                return true;
            }
            self.topo.attackers[b].iter().any(|&(a, wa)| {
                let t = attack_intensity(s[a], wa);
                t.sum_exceeds_one(bdeg) && !attack_intensity(t.complement(), w).sum_exceeds_one(cdeg)
            })
        })
    }

    fn admissible(&self, s: &[Degree]) -> bool {
        self.conflict_free(s) && (0..s.len()).all(|c| self.defends(s, c, s[c]))
    }

    /// No grid degree above `s[x]` (and within the initial degree) is
    /// defended. Defense only gets harder as the degree grows, so the next
    /// grid value decides.
    fn saturated(&self, s: &[Degree]) -> bool {
        (0..s.len()).all(|x| match self.grid.next_above(s[x]) {
            Some(next) if next <= self.topo.degrees[x] => !self.defends(s, x, next),
            _ => true,
        })
    }

    /// Every `(x, c)` with `c > s[x]` is sufficiently attacked by `s`,
    /// i.e. `incoming + s[x] >= 1` wherever `s[x]` falls short of the
    /// initial degree.
    fn stable(&self, s: &[Degree]) -> bool {
        self.conflict_free(s)
            && (0..s.len())
                .all(|x| s[x] >= self.topo.degrees[x] || self.topo.incoming(s, x).plus(s[x]) >= Magnitude::ONE)
    }

    fn check(&self, s: &[Degree], kind: FExtensionKind) -> bool {
        match kind {
            FExtensionKind::ConflictFree => self.conflict_free(s),
            FExtensionKind::Admissible => self.admissible(s),
            FExtensionKind::Complete => self.admissible(s) && self.saturated(s),
            FExtensionKind::Stable => self.stable(s),
            FExtensionKind::Preferred | FExtensionKind::Grounded => unreachable!("selected by extremality"),
        }
    }
}

fn vector(fas: &Fas, topo: &Topology, s: &FExtension) -> Result<Vec<Degree>> {
    if let Some(stray) = s.support().find(|id| !fas.contains(id.as_str())) {
        return Err(Error::UnknownArgument(stray.to_string()));
    }
    topo.names
        .iter()
        .zip(&topo.degrees)
        .map(|(n, d)| {
            let v = s.get(n.as_str());
            if v > *d {
                Err(Error::Domain(format!(
                    "degree {v} of {n} exceeds its initial degree {d}"
                )))
            } else {
                Ok(v)
            }
        })
        .collect()
}

fn to_set(topo: &Topology, s: &[Degree]) -> FExtension {
    topo.names.iter().cloned().zip(s.iter().copied()).collect()
}

/// Whether `s` weakening defends the fuzzy argument `(c, cdeg)`.
pub fn weakening_defends(fas: &Fas, s: &FExtension, c: &str, cdeg: Degree) -> Result<bool> {
    if !fas.contains(c) {
        return Err(Error::UnknownArgument(c.to_string()));
    }
    let grid = characteristic_values(fas);
    let k = Kernel {
        topo: fas.topology(),
        grid: &grid,
    };
    let v = vector(fas, &k.topo, s)?;
    let idx = k
        .topo
        .names
        .iter()
        .position(|n| n.as_str() == c)
        .expect("checked above");
    Ok(k.defends(&v, idx, cdeg))
}

/// Checks conflict-freeness, admissibility, completeness (over the
/// characteristic grid) or stability.
pub fn check_fextension(fas: &Fas, s: &FExtension, kind: FExtensionKind) -> Result<bool> {
    if matches!(kind, FExtensionKind::Preferred | FExtensionKind::Grounded) {
        return Err(Error::Domain(format!("`{kind}` f-extensions are only enumerated")));
    }
    let grid = characteristic_values(fas);
    let k = Kernel {
        topo: fas.topology(),
        grid: &grid,
    };
    let v = vector(fas, &k.topo, s)?;
    Ok(k.check(&v, kind))
}

fn extremes(sets: Vec<FExtension>, maximal: bool) -> Vec<FExtension> {
    let keep: Vec<bool> = sets
        .iter()
        .map(|x| {
            !sets
                .iter()
                .any(|y| x != y && if maximal { x.is_subset(y) } else { y.is_subset(x) })
        })
        .collect();
    sets.into_iter().zip(keep).filter_map(|(s, k)| k.then_some(s)).collect()
}

/// All f-extensions of `kind` with degrees on the characteristic grid, in
/// canonical order.
pub fn enumerate_fextensions(fas: &Fas, kind: FExtensionKind, limits: &Limits) -> Result<Vec<FExtension>> {
    if fas.len() > limits.max_args {
        return Err(Error::CapExceeded {
            found: fas.len(),
            cap: limits.max_args,
        });
    }
    let grid = characteristic_values(fas);
    let k = Kernel {
        topo: fas.topology(),
        grid: &grid,
    };
    let base = match kind {
        FExtensionKind::Preferred => FExtensionKind::Admissible,
        FExtensionKind::Grounded => FExtensionKind::Complete,
        other => other,
    };
    let choices: Vec<&[Degree]> = k.topo.degrees.iter().map(|d| grid.up_to(*d)).collect();
    let mut found = Vec::new();
    let mut overflow = false;
    crate::semantics::for_each_assignment(&choices, |s| {
        if k.check(s, base) {
            if found.len() >= limits.max_results {
                overflow = true;
                return false;
            }
            found.push(to_set(&k.topo, s));
        }
        true
    });
    if overflow {
        return Err(Error::TooManyResults {
            limit: limits.max_results,
        });
    }
    let mut found = match kind {
        FExtensionKind::Preferred => extremes(found, true),
        FExtensionKind::Grounded => extremes(found, false),
        _ => found,
    };
    found.sort();
    found.dedup();
    Ok(found)
}

/// Labels `s` as accepted, what it attacks as rejected, and the rest as
/// undecided.
pub fn ext_to_flab(fas: &Fas, s: &FExtension) -> Result<FuzzyLabeling> {
    let topo = fas.topology();
    let v = vector(fas, &topo, s)?;
    topo.names
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let r = topo.incoming(&v, i);
            Triple::residual(v[i], r)
                .map(|t| (n.clone(), t))
                .ok_or_else(|| Error::Domain(format!("non-residual source set: {n} gets {} + {r} > 1", v[i])))
        })
        .collect()
}

/// The acceptability part of a labeling.
pub fn flab_to_ext(lab: &FuzzyLabeling) -> FExtension {
    lab.acceptability()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn weaken_examples() {
        assert_eq!(weaken(d("0.8"), d("1"), d("0.6")).unwrap(), d("0.2"));
        assert_eq!(weaken(d("0.5"), d("1"), d("0.8")).unwrap(), d("0.5"));
        assert_eq!(weaken(d("1"), d("1"), d("1")).unwrap(), d("0"));
        assert!(weaken(d("0.2"), d("1"), d("0.5")).is_err());
    }

    #[test]
    fn defense_examples() {
        let s = fuzzy_set(&[("A", "0.8")]);
        assert!(weakening_defends(&two_cycle(), &s, "A", d("0.8")).unwrap());
        assert!(!weakening_defends(&chain(), &FuzzySet::new(), "C", d("0.6")).unwrap());
        assert!(weakening_defends(&chain(), &FuzzySet::new(), "A", d("0.8")).unwrap());
        assert!(weakening_defends(&chain(), &FuzzySet::new(), "Z", d("0.8")).is_err());
    }

    #[test]
    fn check_examples() {
        let f = two_cycle();
        assert!(check_fextension(
            &f,
            &fuzzy_set(&[("A", "0.8"), ("B", "0.2")]),
            FExtensionKind::Admissible
        )
        .unwrap());
        assert!(check_fextension(&f, &fuzzy_set(&[("A", "0.4"), ("B", "0.2")]), FExtensionKind::Complete).unwrap());
        assert!(!check_fextension(&f, &fuzzy_set(&[("A", "0.4")]), FExtensionKind::Complete).unwrap());
        assert!(check_fextension(&f, &FuzzySet::new(), FExtensionKind::ConflictFree).unwrap());
        assert!(check_fextension(&f, &fuzzy_set(&[("A", "0.9")]), FExtensionKind::ConflictFree).is_err());
    }

    #[test]
    fn two_cycle_enumerations() {
        let f = two_cycle();
        let l = Limits::default();
        assert_eq!(
            enumerate_fextensions(&f, FExtensionKind::Grounded, &l).unwrap(),
            vec![fuzzy_set(&[("A", "0.4"), ("B", "0.2")])]
        );
        let preferred = enumerate_fextensions(&f, FExtensionKind::Preferred, &l).unwrap();
        let expected = vec![
            fuzzy_set(&[("A", "0.4"), ("B", "0.6")]),
            fuzzy_set(&[("A", "0.6"), ("B", "0.4")]),
            fuzzy_set(&[("A", "0.8"), ("B", "0.2")]),
        ];
        assert_eq!(preferred, expected);
        assert_eq!(enumerate_fextensions(&f, FExtensionKind::Stable, &l).unwrap(), expected);
    }

    #[test]
    fn single_argument_complete() {
        assert_eq!(
            enumerate_fextensions(&single("A", "0.8"), FExtensionKind::Complete, &Limits::default()).unwrap(),
            vec![fuzzy_set(&[("A", "0.8")])]
        );
    }

    #[test]
    fn converters() {
        let f = two_cycle();
        assert_eq!(
            ext_to_flab(&f, &fuzzy_set(&[("A", "0.8"), ("B", "0.2")])).unwrap(),
            two_cycle_flab1()
        );
        assert_eq!(
            ext_to_flab(&chain(), &fuzzy_set(&[("A", "0.8"), ("B", "0.2"), ("C", "0.6")])).unwrap(),
            chain_flab2()
        );
        assert_eq!(
            ext_to_flab(&f, &FuzzySet::new()).unwrap(),
            FuzzyLabeling::all_undecided(&f)
        );
        assert!(ext_to_flab(&f, &fuzzy_set(&[("A", "0.8"), ("B", "0.6")])).is_err());
        assert_eq!(
            flab_to_ext(&chain_flab2()),
            fuzzy_set(&[("A", "0.8"), ("B", "0.2"), ("C", "0.6")])
        );
        assert_eq!(flab_to_ext(&FuzzyLabeling::all_undecided(&f)), FuzzySet::new());
        assert_eq!(
            flab_to_ext(&two_cycle_flab3()),
            fuzzy_set(&[("A", "0.4"), ("B", "0.2")])
        );
    }
}
