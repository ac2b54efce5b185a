//! The seven postulates on fuzzy labelings, with violation witnesses.
//!
//! Empty attacker sets follow two fixed conventions: a maximum over no
//! attackers is 0 (UP, WP, SWP) and a minimum over no attackers is 1
//! (DP, SDP).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::degree::{Degree, Magnitude};
use crate::error::{Error, Result};
use crate::fas::{attack_intensity, classify_attack, AttackKind, Fas};
use crate::fuzzy_set::ArgumentId;
use crate::labeling::{FuzzyLabeling, Triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PostulateId {
    /// BP: `a <= A(A)`.
    Bounded,
    /// RP: `a + r + u = 1`.
    Residual,
    /// UP: `a + max_B B^a * R(B,A) <= 1`.
    Uncontroversial,
    /// WP: `r <= max_B B^a * R(B,A)`.
    Weakened,
    /// SWP: `r = max_B B^a * R(B,A)`.
    StrictWeakened,
    /// DP: `a <= min_B max(B^r, 1 - A(B) * R(B,A))`.
    Defense,
    /// SDP: `a = min(min_B max(B^r, 1 - A(B) * R(B,A)), A(A))`.
    StrictDefense,
}

impl PostulateId {
    pub const ALL: [PostulateId; 7] = [
        PostulateId::Bounded,
        PostulateId::Residual,
        PostulateId::Uncontroversial,
        PostulateId::Weakened,
        PostulateId::StrictWeakened,
        PostulateId::Defense,
        PostulateId::StrictDefense,
    ];

    pub fn abbreviation(self) -> &'static str {
        match self {
            PostulateId::Bounded => "BP",
            PostulateId::Residual => "RP",
            PostulateId::Uncontroversial => "UP",
            PostulateId::Weakened => "WP",
            PostulateId::StrictWeakened => "SWP",
            PostulateId::Defense => "DP",
            PostulateId::StrictDefense => "SDP",
        }
    }
}

impl fmt::Display for PostulateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

impl FromStr for PostulateId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PostulateId::ALL
            .into_iter()
            .find(|p| p.abbreviation().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Domain(format!("unknown postulate `{s}`")))
    }
}

impl Serialize for PostulateId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.abbreviation())
    }
}

/// One violating argument and the two evaluated sides of the postulate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub argument: ArgumentId,
    pub lhs: Magnitude,
    pub rhs: Magnitude,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PostulateReport {
    pub postulate: PostulateId,
    pub satisfied: bool,
    pub witnesses: Vec<Witness>,
}

/// Attackers of `target` whose full-strength attack is sufficient against
/// the target's current acceptability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SufficientAttackerSet {
    pub target: ArgumentId,
    pub members: BTreeSet<ArgumentId>,
}

fn triple<'a>(lab: &'a FuzzyLabeling, id: &str) -> &'a Triple {
    lab.get(id).expect("labeling checked total")
}

/// `max_{B in Att(A)} B^a * R(B,A)`.
pub fn attack_bound(fas: &Fas, lab: &FuzzyLabeling, target: &str) -> Degree {
    fas.attackers_with_weights(target)
        .map(|(b, w)| attack_intensity(triple(lab, b.as_str()).accept, w))
        .max()
        .unwrap_or(Degree::ZERO)
}

/// `min_{B in Att(A)} max(B^r, 1 - A(B) * R(B,A))`.
pub fn defense_bound(fas: &Fas, lab: &FuzzyLabeling, target: &str) -> Degree {
    fas.attackers_with_weights(target)
        .map(|(b, w)| {
            let rej = triple(lab, b.as_str()).reject;
            rej.max(attack_intensity(fas.degree(b.as_str()), w).complement())
        })
        .min()
        .unwrap_or(Degree::ONE)
}

/// Evaluates postulate `p` at one argument: `(holds, lhs, rhs)`.
fn evaluate(fas: &Fas, lab: &FuzzyLabeling, p: PostulateId, id: &str) -> (bool, Magnitude, Magnitude) {
    let t = triple(lab, id);
    let le = |l: Magnitude, r: Magnitude| (l <= r, l, r);
    let eq = |l: Magnitude, r: Magnitude| (l == r, l, r);
    match p {
        PostulateId::Bounded => le(t.accept.into(), fas.degree(id).into()),
        PostulateId::Residual => eq(t.total(), Magnitude::ONE),
        PostulateId::Uncontroversial => le(t.accept.plus(attack_bound(fas, lab, id)), Magnitude::ONE),
        PostulateId::Weakened => le(t.reject.into(), attack_bound(fas, lab, id).into()),
        PostulateId::StrictWeakened => eq(t.reject.into(), attack_bound(fas, lab, id).into()),
        PostulateId::Defense => le(t.accept.into(), defense_bound(fas, lab, id).into()),
        PostulateId::StrictDefense => eq(t.accept.into(), defense_bound(fas, lab, id).min(fas.degree(id)).into()),
    }
}

/// Checks `p` at every argument and reports all violators.
pub fn check_postulate(fas: &Fas, lab: &FuzzyLabeling, p: PostulateId) -> Result<PostulateReport> {
    lab.ensure_total(fas)?;
    Ok(check_total(fas, lab, p))
}

pub(crate) fn check_total(fas: &Fas, lab: &FuzzyLabeling, p: PostulateId) -> PostulateReport {
    let witnesses: Vec<Witness> = fas
        .arguments()
        .filter_map(|(id, _)| {
            let (holds, lhs, rhs) = evaluate(fas, lab, p, id.as_str());
            (!holds).then(|| Witness {
                argument: id.clone(),
                lhs,
                rhs,
            })
        })
        .collect();
    PostulateReport {
        postulate: p,
        satisfied: witnesses.is_empty(),
        witnesses,
    }
}

/// True iff `lab` satisfies every postulate in `profile`. `lab` must be total.
pub(crate) fn satisfies_all(fas: &Fas, lab: &FuzzyLabeling, profile: &[PostulateId]) -> bool {
    profile
        .iter()
        .all(|&p| fas.arguments().all(|(id, _)| evaluate(fas, lab, p, id.as_str()).0))
}

/// One report per requested postulate.
pub fn check_profile(
    fas: &Fas,
    lab: &FuzzyLabeling,
    profile: &[PostulateId],
) -> Result<BTreeMap<PostulateId, PostulateReport>> {
    lab.ensure_total(fas)?;
    Ok(profile.iter().map(|&p| (p, check_total(fas, lab, p))).collect())
}

/// Attackers `B` of `target` such that `(B, A(B))` sufficiently attacks
/// `(target, target^a)`.
pub fn sufficient_attacker_set(fas: &Fas, lab: &FuzzyLabeling, target: &str) -> Result<SufficientAttackerSet> {
    lab.ensure_total(fas)?;
    let target_id = fas
        .arguments()
        .find(|(id, _)| id.as_str() == target)
        .map(|(id, _)| id.clone())
        .ok_or_else(|| Error::UnknownArgument(target.to_string()))?;
    let accept = triple(lab, target).accept;
    let members = fas
        .attackers_with_weights(target)
        .filter(|(b, w)| classify_attack(fas.degree(b.as_str()), *w, accept) == AttackKind::Sufficient)
        .map(|(b, _)| b.clone())
        .collect();
    Ok(SufficientAttackerSet {
        target: target_id,
        members,
    })
}

/// Defense at one argument stated through sufficient attackers only:
/// `target^a <= B^r` for every sufficient attacker `B`.
pub fn defense_by_sufficient_attackers(fas: &Fas, lab: &FuzzyLabeling, target: &str) -> Result<bool> {
    let set = sufficient_attacker_set(fas, lab, target)?;
    let accept = triple(lab, target).accept;
    Ok(set.members.iter().all(|b| accept <= triple(lab, b.as_str()).reject))
}

/// Closed form for strict defense at one argument:
/// `min(min_{B in S} B^r, 1 - max_{B notin S} A(B) * R(B,A), A(A))`
/// where `S` is the sufficient attacker set.
pub fn strict_defense_closed_form(fas: &Fas, lab: &FuzzyLabeling, target: &str) -> Result<Degree> {
    let set = sufficient_attacker_set(fas, lab, target)?;
    let sufficient_min = set
        .members
        .iter()
        .map(|b| triple(lab, b.as_str()).reject)
        .min()
        .unwrap_or(Degree::ONE);
    let tolerable_max = fas
        .attackers_with_weights(target)
        .filter(|(b, _)| !set.members.contains(*b))
        .map(|(b, w)| attack_intensity(fas.degree(b.as_str()), w))
        .max()
        .unwrap_or(Degree::ZERO);
    Ok(sufficient_min.min(tolerable_max.complement()).min(fas.degree(target)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn chain_first_labeling_is_uncontroversial() {
        let report = check_postulate(&chain(), &chain_flab1(), PostulateId::Uncontroversial).unwrap();
        assert!(report.satisfied);
    }

    #[test]
    fn chain_first_labeling_violates_defense_at_c() {
        let report = check_postulate(&chain(), &chain_flab1(), PostulateId::Defense).unwrap();
        assert!(!report.satisfied);
        // B is also undefended: A attacks (B, 0.4) sufficiently and A^r = 0.
        assert_eq!(
            report.witnesses,
            vec![
                Witness {
                    argument: id("B"),
                    lhs: d("0.4").into(),
                    rhs: d("0.2").into(),
                },
                Witness {
                    argument: id("C"),
                    lhs: d("0.6").into(),
                    rhs: d("0.5").into(),
                },
            ]
        );
    }

    #[test]
    fn undecided_labeling_satisfies_weakened() {
        let fas = two_cycle();
        let lab = FuzzyLabeling::all_undecided(&fas);
        assert!(check_postulate(&fas, &lab, PostulateId::Weakened).unwrap().satisfied);
    }

    #[test]
    fn profiles() {
        use PostulateId::*;
        let reports = check_profile(
            &chain(),
            &chain_flab2(),
            &[Bounded, Residual, StrictWeakened, StrictDefense],
        )
        .unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.values().all(|r| r.satisfied));
        let reports = check_profile(
            &chain(),
            &chain_flab1(),
            &[Bounded, Residual, Uncontroversial, Weakened],
        )
        .unwrap();
        assert!(reports.values().all(|r| r.satisfied));
        assert!(check_profile(&chain(), &chain_flab1(), &[]).unwrap().is_empty());
    }

    #[test]
    fn residual_witness_reports_sum() {
        let fas = single("A", "0.8");
        let lab = labeling(&[("A", "0.5", "0.5", "0.5")]);
        let report = check_postulate(&fas, &lab, PostulateId::Residual).unwrap();
        assert_eq!(report.witnesses[0].lhs.to_string(), "1.5");
        assert_eq!(report.witnesses[0].rhs, Magnitude::ONE);
    }

    #[test]
    fn non_total_labeling_is_rejected() {
        let lab = labeling(&[("A", "0.8", "0", "0.2")]);
        assert!(matches!(
            check_postulate(&chain(), &lab, PostulateId::Bounded),
            Err(Error::LabelingNotTotal(_))
        ));
    }

    #[test]
    fn sufficient_attackers() {
        let set = sufficient_attacker_set(&chain(), &chain_flab2(), "C").unwrap();
        assert_eq!(set.members, BTreeSet::from([id("B")]));
        assert!(sufficient_attacker_set(&chain(), &chain_flab2(), "B")
            .unwrap()
            .members
            .is_empty());
        assert!(sufficient_attacker_set(&chain(), &chain_flab2(), "A")
            .unwrap()
            .members
            .is_empty());
        assert!(matches!(
            sufficient_attacker_set(&chain(), &chain_flab2(), "Q"),
            Err(Error::UnknownArgument(_))
        ));
    }

    #[test]
    fn parse_postulate_names() {
        assert_eq!("sdp".parse::<PostulateId>().unwrap(), PostulateId::StrictDefense);
        assert!("XP".parse::<PostulateId>().is_err());
    }
}
