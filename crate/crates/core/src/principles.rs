//! Empirical principle checks: a seeded family of random systems plus a
//! registry of known counterexamples.
//!
//! A sweep can only refute a principle. Cells that survive are reported as
//! `NoViolationFound`, which is not a proof.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fas::Fas;
use crate::fixtures;
use crate::fuzzy_set::ArgumentId;
use crate::labeling::{FuzzyLabeling, Triple};
use crate::postulates::satisfies_all;
use crate::semantics::{
    enumerate_complete, grounded_fixpoint, ideal_from, leq_labeling, sample_with, select_from, LabelingSet, Limits,
    SemanticsId,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrincipleId {
    LanguageIndependence,
    ConflictFreeness,
    Admissibility,
    Completeness,
    Stability,
    Existence,
    Uniqueness,
    IMaximality,
    Clearness,
}

impl PrincipleId {
    pub const ALL: [PrincipleId; 9] = [
        PrincipleId::LanguageIndependence,
        PrincipleId::ConflictFreeness,
        PrincipleId::Admissibility,
        PrincipleId::Completeness,
        PrincipleId::Stability,
        PrincipleId::Existence,
        PrincipleId::Uniqueness,
        PrincipleId::IMaximality,
        PrincipleId::Clearness,
    ];

    pub fn abbreviation(self) -> &'static str {
        match self {
            PrincipleId::LanguageIndependence => "LIP",
            PrincipleId::ConflictFreeness => "CFP",
            PrincipleId::Admissibility => "ADP",
            PrincipleId::Completeness => "COP",
            PrincipleId::Stability => "STP",
            PrincipleId::Existence => "EXP",
            PrincipleId::Uniqueness => "UNP",
            PrincipleId::IMaximality => "IMP",
            PrincipleId::Clearness => "CLP",
        }
    }
}

impl fmt::Display for PrincipleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

impl FromStr for PrincipleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PrincipleId::ALL
            .into_iter()
            .find(|p| p.abbreviation().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown principle `{s}`")))
    }
}

impl Serialize for PrincipleId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.abbreviation())
    }
}

/// Whether the reference satisfaction table marks `p` as satisfied by `s`.
pub fn expected_satisfied(s: SemanticsId, p: PrincipleId) -> bool {
    use PrincipleId::*;
    use SemanticsId::*;
    match p {
        LanguageIndependence | ConflictFreeness => true,
        Admissibility => s != ConflictFree,
        Completeness => !matches!(s, ConflictFree | Admissible | JvAdmissible | VjAdmissible),
        Stability => !matches!(s, ConflictFree | Admissible | JvAdmissible),
        Existence => s != Stable,
        Uniqueness => matches!(s, Grounded | Ideal),
        IMaximality => matches!(s, Grounded | Preferred | SemiStable | Stable | Ideal),
        Clearness => s == Stable,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    NoViolationFound,
    Violated,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::NoViolationFound => "no-violation-found",
            Outcome::Violated => "violated",
        })
    }
}

/// Where a violation was found and the labelings involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrincipleWitness {
    /// Index in the instance family, or `None` for a registry entry.
    pub instance: Option<usize>,
    pub fas: Fas,
    pub labelings: Vec<FuzzyLabeling>,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrincipleVerdict {
    pub semantics: SemanticsId,
    pub principle: PrincipleId,
    pub outcome: Outcome,
    pub witness: Option<PrincipleWitness>,
    /// Instances evaluated, registry entries included.
    pub trials: usize,
    /// Instances skipped because they exceeded the enumeration limits.
    pub skipped: usize,
    pub seed: u64,
}

/// A reproducible family of random systems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceFamily {
    pub seed: u64,
    pub count: usize,
    pub max_args: usize,
    pub degree_grid: Vec<Degree>,
}

impl InstanceFamily {
    /// Multiples of `1/steps` in `[0, 1]`.
    pub fn uniform_grid(steps: u32) -> Vec<Degree> {
        (0..=steps as u64)
            .map(|k| Degree::from_ratio(k, steps as u64).expect("grid step must divide a million"))
            .collect()
    }
}

impl Default for InstanceFamily {
    fn default() -> Self {
        InstanceFamily {
            seed: 1,
            count: 500,
            max_args: 5,
            degree_grid: InstanceFamily::uniform_grid(10),
        }
    }
}

/// The `index`-th system of `family`. Each index has its own random stream,
/// so instances do not depend on one another.
pub fn random_fas(family: &InstanceFamily, index: usize) -> Result<Fas> {
    if index >= family.count {
        return Err(Error::Domain(format!(
            "instance {index} is outside a family of {}",
            family.count
        )));
    }
    if family.degree_grid.is_empty() || family.max_args == 0 {
        return Err(Error::Domain(
            "instance family needs a degree grid and at least one argument".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(family.seed);
    rng.set_stream(index as u64);
    let grid = &family.degree_grid;
    let n = rng.random_range(1..=family.max_args);
    let density: f64 = rng.random();
    let mut fas = Fas::new();
    let names: Vec<ArgumentId> = (0..n)
        .map(|i| ArgumentId::new(format!("a{i}")).expect("valid name"))
        .collect();
    for name in &names {
        fas.add_argument(name.clone(), grid[rng.random_range(0..grid.len())])?;
    }
    for from in &names {
        for to in &names {
            let present = rng.random_bool(density);
            let weight = grid[rng.random_range(0..grid.len())];
            if present && !weight.is_zero() {
                fas.add_attack(from.clone(), to.clone(), weight)?;
            }
        }
    }
    Ok(fas)
}

/// A random labeling of `fas` with degrees from `grid`. The draw mixes
/// unconstrained triples with triples built to meet the residual, strict
/// weakened or strict defense equations, so implications between
/// postulates are exercised on both sides.
pub fn random_labeling(fas: &Fas, grid: &[Degree], seed: u64) -> FuzzyLabeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let topo = fas.topology();
    let n = topo.len();
    let draw = |rng: &mut ChaCha8Rng| grid[rng.random_range(0..grid.len())];
    let mode = rng.random_range(0..4u8);
    let mut accept: Vec<Degree> = (0..n).map(|_| draw(&mut rng)).collect();
    let mut reject: Vec<Degree> = (0..n).map(|_| draw(&mut rng)).collect();
    if mode > 0 {
        for (a, d) in accept.iter_mut().zip(&topo.degrees) {
            *a = (*a).min(*d);
        }
    }
    match mode {
        2 => reject = (0..n).map(|i| topo.incoming(&accept, i)).collect(),
        3 => {
            accept = (0..n)
                .map(|i| topo.defense_bound(&reject, i).min(topo.degrees[i]))
                .collect()
        }
        _ => {}
    }
    topo.names
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let residual = Triple::residual(accept[i], reject[i]);
            let t = match (mode, residual) {
                (0, _) | (_, None) => Triple::new(accept[i], reject[i], draw(&mut rng)),
                (_, Some(t)) => t,
            };
            (name.clone(), t)
        })
        .collect()
}

/// Random labelings drawn per profile-only semantics on each instance.
const SAMPLE_DRAWS: usize = 32;

/// The result sets of every semantics on one system. Profile-only
/// semantics are represented by a deterministic sample.
struct Solved {
    sets: BTreeMap<SemanticsId, LabelingSet>,
}

fn sampled(s: SemanticsId) -> bool {
    matches!(
        s,
        SemanticsId::ConflictFree | SemanticsId::Admissible | SemanticsId::JvAdmissible | SemanticsId::VjAdmissible
    )
}

impl Solved {
    fn new(fas: &Fas, wanted: &[SemanticsId], extra: &[FuzzyLabeling], seed: u64, limits: &Limits) -> Result<Self> {
        let complete = enumerate_complete(fas, limits)?;
        let mut sets = BTreeMap::new();
        for (k, &s) in wanted.iter().enumerate() {
            let set = match s {
                SemanticsId::Complete => complete.clone(),
                SemanticsId::Grounded => std::iter::once(grounded_fixpoint(fas)).collect(),
                SemanticsId::Ideal => ideal_from(complete.as_slice()),
                SemanticsId::Preferred | SemanticsId::SemiStable | SemanticsId::Stable => {
                    select_from(complete.as_slice(), s)
                }
                _ => {
                    let base = sample_with(fas, s, &complete, SAMPLE_DRAWS, seed.wrapping_add(k as u64));
                    let extras = extra
                        .iter()
                        .filter(|l| l.ensure_total(fas).is_ok() && satisfies_all(fas, l, s.profile()));
                    base.into_iter().chain(extras.cloned()).collect()
                }
            };
            sets.insert(s, set);
        }
        Ok(Solved { sets })
    }
}

fn unattacked(fas: &Fas) -> Vec<&ArgumentId> {
    fas.arguments()
        .map(|(id, _)| id)
        .filter(|id| fas.attackers(id.as_str()).map(|a| a.is_empty()).unwrap_or(false))
        .collect()
}

type Finding = (Vec<FuzzyLabeling>, String);
type CellFindings = BTreeMap<CellKey, Option<Finding>>;

fn first_failing(set: &LabelingSet, fas: &Fas, target: SemanticsId) -> Option<Finding> {
    set.iter()
        .find(|l| !satisfies_all(fas, l, target.profile()))
        .map(|l| (vec![l.clone()], format!("labeling is not {target}")))
}

/// Checks a single principle on one system, given the semantics' result set.
fn check(fas: &Fas, s: SemanticsId, p: PrincipleId, set: &LabelingSet, renamed: Option<&Renamed>) -> Option<Finding> {
    match p {
        PrincipleId::LanguageIndependence => renamed.and_then(|r| r.check(fas, s, set)),
        PrincipleId::ConflictFreeness => first_failing(set, fas, SemanticsId::ConflictFree),
        PrincipleId::Admissibility => first_failing(set, fas, SemanticsId::Admissible),
        PrincipleId::Completeness => first_failing(set, fas, SemanticsId::Complete),
        PrincipleId::Stability => {
            let free = unattacked(fas);
            set.iter().find_map(|l| {
                free.iter().find_map(|id| {
                    let t = l.get(id.as_str())?;
                    (t.accept != fas.degree(id.as_str()) || !t.reject.is_zero()).then(|| {
                        (
                            vec![l.clone()],
                            format!("unattacked {id} is labeled ({}, {}, {})", t.accept, t.reject, t.undec),
                        )
                    })
                })
            })
        }
        PrincipleId::Existence => set.is_empty().then(|| (Vec::new(), "no labeling".to_string())),
        PrincipleId::Uniqueness => (set.len() != 1).then(|| {
            (
                set.iter().take(2).cloned().collect(),
                format!("{} labelings", set.len()),
            )
        }),
        PrincipleId::IMaximality => {
            let labs = set.as_slice();
            labs.iter().enumerate().find_map(|(i, l1)| {
                labs.iter().enumerate().find_map(|(j, l2)| {
                    (i != j && leq_labeling(l1, l2).unwrap_or(false)).then(|| {
                        (
                            vec![l1.clone(), l2.clone()],
                            "first labeling is strictly smaller".to_string(),
                        )
                    })
                })
            })
        }
        PrincipleId::Clearness => set.iter().find_map(|l| {
            l.iter()
                .find(|(_, t)| !t.undec.is_zero())
                .map(|(id, t)| (vec![l.clone()], format!("{id} has undecidability {}", t.undec)))
        }),
    }
}

/// A system under a random renaming of its arguments, solved afresh.
struct Renamed {
    forward: BTreeMap<ArgumentId, ArgumentId>,
    backward: BTreeMap<ArgumentId, ArgumentId>,
    fas: Fas,
    solved: Solved,
}

impl Renamed {
    fn new(fas: &Fas, wanted: &[SemanticsId], seed: u64, limits: &Limits) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ids: Vec<ArgumentId> = fas.argument_ids().into_iter().collect();
        let mut targets: Vec<usize> = (0..ids.len()).collect();
        targets.shuffle(&mut rng);
        let forward: BTreeMap<ArgumentId, ArgumentId> = ids
            .iter()
            .zip(&targets)
            .map(|(id, k)| (id.clone(), ArgumentId::new(format!("r{k}")).expect("valid name")))
            .collect();
        let backward = forward.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        let image = fas.apply_isomorphism(&forward)?;
        let solved = Solved::new(&image, wanted, &[], seed ^ 0x5eed, limits)?;
        Ok(Renamed {
            forward,
            backward,
            fas: image,
            solved,
        })
    }

    fn check(&self, fas: &Fas, s: SemanticsId, set: &LabelingSet) -> Option<Finding> {
        let image_set = &self.solved.sets[&s];
        if sampled(s) {
            let member = |f: &Fas, l: &FuzzyLabeling| satisfies_all(f, l, s.profile());
            if let Some(l) = set.iter().find(|l| !member(&self.fas, &l.rename(&self.forward))) {
                return Some((
                    vec![l.clone()],
                    "renamed labeling is not a member of the renamed system".into(),
                ));
            }
            return image_set
                .iter()
                .find(|l| !member(fas, &l.rename(&self.backward)))
                .map(|l| {
                    (
                        vec![l.clone()],
                        "labeling of the renamed system does not map back".into(),
                    )
                });
        }
        let mapped: LabelingSet = set.iter().map(|l| l.rename(&self.forward)).collect();
        (mapped != *image_set).then(|| {
            (
                image_set.iter().cloned().collect(),
                "result set of the renamed system differs from the renamed result set".into(),
            )
        })
    }
}

/// A known violation, checked before any random instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegistryEntry {
    pub semantics: SemanticsId,
    pub principle: PrincipleId,
    pub fas: Fas,
    /// Labelings added to the sample of a profile-only semantics.
    pub candidates: Vec<FuzzyLabeling>,
    pub expected: Outcome,
    pub note: &'static str,
}

/// Witnesses for every violated cell of the reference satisfaction table.
pub fn counterexample_registry() -> Vec<RegistryEntry> {
    use PrincipleId::*;
    use SemanticsId::*;
    let lone = || fixtures::single("A", "0.8");
    let lone_candidates = || {
        vec![
            fixtures::labeling(&[("A", "0", "0", "1")]),
            fixtures::labeling(&[("A", "0.8", "0", "0.2")]),
        ]
    };
    let pair = || fixtures::fas(&[("A", "1"), ("B", "1")], &[("A", "B", "1")]);
    let pair_candidates = || {
        vec![
            fixtures::labeling(&[("A", "1", "0", "0"), ("B", "0", "0", "1")]),
            fixtures::labeling(&[("A", "1", "0", "0"), ("B", "0", "1", "0")]),
        ]
    };
    let entry = |semantics, principle, fas, candidates, note| RegistryEntry {
        semantics,
        principle,
        fas,
        candidates,
        expected: Outcome::Violated,
        note,
    };
    let mut out = vec![
        entry(
            Stable,
            Existence,
            lone(),
            vec![],
            "an unattacked argument below degree 1 is never fully decided",
        ),
        entry(Stable, Uniqueness, lone(), vec![], "no stable labeling at all"),
        entry(
            Complete,
            IMaximality,
            fixtures::two_cycle(),
            vec![],
            "grounded labeling lies below a stable one",
        ),
        entry(
            Complete,
            Uniqueness,
            fixtures::two_cycle(),
            vec![],
            "six complete labelings on the grid",
        ),
        entry(
            Complete,
            Clearness,
            lone(),
            vec![],
            "unattacked argument keeps undecidability 0.2",
        ),
        entry(
            Grounded,
            Clearness,
            lone(),
            vec![],
            "unattacked argument keeps undecidability 0.2",
        ),
        entry(
            Ideal,
            Clearness,
            lone(),
            vec![],
            "unattacked argument keeps undecidability 0.2",
        ),
        entry(
            Preferred,
            Clearness,
            lone(),
            vec![],
            "unattacked argument keeps undecidability 0.2",
        ),
        entry(
            SemiStable,
            Clearness,
            lone(),
            vec![],
            "unattacked argument keeps undecidability 0.2",
        ),
        entry(
            Preferred,
            Uniqueness,
            fixtures::two_cycle(),
            vec![],
            "three preferred labelings",
        ),
        entry(
            SemiStable,
            Uniqueness,
            fixtures::two_cycle(),
            vec![],
            "three semi-stable labelings",
        ),
        entry(
            ConflictFree,
            Admissibility,
            fixtures::chain(),
            vec![fixtures::chain_flab1()],
            "a sufficient attacker of C is not rejected enough",
        ),
    ];
    for s in [ConflictFree, Admissible, JvAdmissible] {
        for p in [Completeness, Stability, Uniqueness, IMaximality, Clearness] {
            out.push(entry(
                s,
                p,
                lone(),
                lone_candidates(),
                "all-undecided labeling of a lone argument",
            ));
        }
    }
    for p in [Completeness, Uniqueness, IMaximality, Clearness] {
        out.push(entry(
            VjAdmissible,
            p,
            pair(),
            pair_candidates(),
            "attacked argument need not be rejected",
        ));
    }
    out.sort_by_key(|e| (e.semantics, e.principle));
    out
}

struct CellResult {
    finding: Option<(Option<usize>, Fas, Finding)>,
    trials: usize,
    skipped: usize,
}

type CellKey = (SemanticsId, PrincipleId);

fn instance_seed(family: &InstanceFamily, index: usize) -> u64 {
    family
        .seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(index as u64)
}

/// Findings for the requested cells on one system.
fn evaluate_system(
    fas: &Fas,
    cells: &[CellKey],
    extra: &[FuzzyLabeling],
    seed: u64,
    limits: &Limits,
) -> Result<BTreeMap<CellKey, Option<Finding>>> {
    let mut wanted: Vec<SemanticsId> = cells.iter().map(|c| c.0).collect();
    wanted.sort();
    wanted.dedup();
    let solved = Solved::new(fas, &wanted, extra, seed, limits)?;
    let renamed = if cells.iter().any(|c| c.1 == PrincipleId::LanguageIndependence) {
        Some(Renamed::new(fas, &wanted, seed, limits)?)
    } else {
        None
    };
    Ok(cells
        .iter()
        .map(|&(s, p)| ((s, p), check(fas, s, p, &solved.sets[&s], renamed.as_ref())))
        .collect())
}

/// Runs the registry and the instance family against every requested cell.
pub fn sweep(family: &InstanceFamily, cells: &[CellKey], limits: &Limits) -> Result<Vec<PrincipleVerdict>> {
    let mut results: BTreeMap<CellKey, CellResult> = cells
        .iter()
        .map(|&c| {
            (
                c,
                CellResult {
                    finding: None,
                    trials: 0,
                    skipped: 0,
                },
            )
        })
        .collect();

    for entry in counterexample_registry() {
        let key = (entry.semantics, entry.principle);
        let Some(cell) = results.get_mut(&key) else { continue };
        cell.trials += 1;
        if cell.finding.is_some() {
            continue;
        }
        let found = evaluate_system(&entry.fas, &[key], &entry.candidates, family.seed, limits)?;
        if let Some(f) = found.into_values().next().flatten() {
            cell.finding = Some((None, entry.fas.clone(), f));
        }
    }

    let per_instance: Vec<(usize, Result<CellFindings>, Fas)> = (0..family.count)
        .into_par_iter()
        .map(|i| {
            let fas = match random_fas(family, i) {
                Ok(f) => f,
                Err(e) => return (i, Err(e), Fas::new()),
            };
            let r = evaluate_system(&fas, cells, &[], instance_seed(family, i), limits);
            (i, r, fas)
        })
        .collect();

    // Instances are visited in index order, so the reported witness is the
    // smallest failing index regardless of scheduling.
    for (i, r, fas) in per_instance {
        match r {
            Ok(map) => {
                for (key, finding) in map {
                    let cell = results.get_mut(&key).expect("requested cell");
                    cell.trials += 1;
                    if cell.finding.is_none() {
                        if let Some(f) = finding {
                            cell.finding = Some((Some(i), fas.clone(), f));
                        }
                    }
                }
            }
            Err(e) if e.is_resource() => {
                for cell in results.values_mut() {
                    cell.skipped += 1;
                }
            }
            Err(e) => return Err(e),
        }
    }

    Ok(results
        .into_iter()
        .map(|((s, p), cell)| PrincipleVerdict {
            semantics: s,
            principle: p,
            outcome: if cell.finding.is_some() {
                Outcome::Violated
            } else {
                Outcome::NoViolationFound
            },
            witness: cell
                .finding
                .map(|(instance, fas, (labelings, details))| PrincipleWitness {
                    instance,
                    fas,
                    labelings,
                    details,
                }),
            trials: cell.trials,
            skipped: cell.skipped,
            seed: family.seed,
        })
        .collect())
}

pub fn evaluate_principle(
    s: SemanticsId,
    p: PrincipleId,
    family: &InstanceFamily,
    limits: &Limits,
) -> Result<PrincipleVerdict> {
    Ok(sweep(family, &[(s, p)], limits)?.remove(0))
}

/// Re-checks a witness from scratch on its own system.
pub fn recheck_witness(s: SemanticsId, p: PrincipleId, witness: &PrincipleWitness, limits: &Limits) -> Result<bool> {
    let found = evaluate_system(&witness.fas, &[(s, p)], &witness.labelings, 0, limits)?;
    Ok(found.into_values().next().flatten().is_some())
}

/// All 90 cells in table order.
pub fn all_cells() -> Vec<CellKey> {
    SemanticsId::ALL
        .into_iter()
        .flat_map(|s| PrincipleId::ALL.into_iter().map(move |p| (s, p)))
        .collect()
}

/// A sweep laid out as rows of semantics and columns of principles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepTable {
    pub family: InstanceFamily,
    pub note: &'static str,
    pub principles: Vec<PrincipleId>,
    pub rows: Vec<SweepRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub semantics: SemanticsId,
    pub cells: Vec<PrincipleVerdict>,
}

pub const SWEEP_NOTE: &str = "no-violation-found means no counterexample was found; it is not a proof";

pub fn sweep_table(family: &InstanceFamily, limits: &Limits) -> Result<SweepTable> {
    let verdicts = sweep(family, &all_cells(), limits)?;
    let mut rows: Vec<SweepRow> = SemanticsId::ALL
        .into_iter()
        .map(|s| SweepRow {
            semantics: s,
            cells: Vec::new(),
        })
        .collect();
    for v in verdicts {
        let row = rows
            .iter_mut()
            .find(|r| r.semantics == v.semantics)
            .expect("known semantics");
        row.cells.push(v);
    }
    Ok(SweepTable {
        family: family.clone(),
        note: SWEEP_NOTE,
        principles: PrincipleId::ALL.to_vec(),
        rows,
    })
}
