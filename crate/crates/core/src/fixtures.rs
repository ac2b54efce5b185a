//! Worked example systems and labelings, plus terse constructors.
//!
//! The constructors panic on malformed input and are meant for tests,
//! benchmarks and documentation.

use crate::degree::Degree;
use crate::fas::Fas;
use crate::fuzzy_set::{ArgumentId, FuzzySet};
use crate::labeling::{FuzzyLabeling, Triple};

pub fn id(name: &str) -> ArgumentId {
    ArgumentId::new(name).expect("valid argument name")
}

pub fn d(literal: &str) -> Degree {
    literal.parse().expect("valid degree literal")
}

/// Builds a system from `(name, degree)` and `(from, to, weight)` lists.
pub fn fas(arguments: &[(&str, &str)], attacks: &[(&str, &str, &str)]) -> Fas {
    let mut f = Fas::new();
    for (n, deg) in arguments {
        f.add_argument(id(n), d(deg)).expect("distinct arguments");
    }
    for (from, to, w) in attacks {
        f.add_attack(id(from), id(to), d(w)).expect("declared endpoints");
    }
    f
}

pub fn fuzzy_set(pairs: &[(&str, &str)]) -> FuzzySet {
    pairs.iter().map(|(n, v)| (id(n), d(v))).collect()
}

/// Builds a labeling from `(name, a, r, u)` rows.
pub fn labeling(rows: &[(&str, &str, &str, &str)]) -> FuzzyLabeling {
    rows.iter()
        .map(|(n, a, r, u)| (id(n), Triple::new(d(a), d(r), d(u))))
        .collect()
}

/// A single unattacked argument.
pub fn single(name: &str, degree: &str) -> Fas {
    fas(&[(name, degree)], &[])
}

/// `A(0.5)` attacking `B(0.8)` with weight 1.
pub fn motivating() -> Fas {
    fas(&[("A", "0.5"), ("B", "0.8")], &[("A", "B", "1")])
}

/// `A(0.8) -> B(0.7) -> C(0.6)` with weights 1 and 0.9.
pub fn chain() -> Fas {
    fas(
        &[("A", "0.8"), ("B", "0.7"), ("C", "0.6")],
        &[("A", "B", "1"), ("B", "C", "0.9")],
    )
}

/// Conflict-free but not admissible labeling of [`chain`].
pub fn chain_flab1() -> FuzzyLabeling {
    labeling(&[
        ("A", "0.5", "0", "0.5"),
        ("B", "0.4", "0.5", "0.1"),
        ("C", "0.6", "0.4", "0"),
    ])
}

/// The complete labeling of [`chain`].
pub fn chain_flab2() -> FuzzyLabeling {
    labeling(&[
        ("A", "0.8", "0", "0.2"),
        ("B", "0.2", "0.8", "0"),
        ("C", "0.6", "0.2", "0.2"),
    ])
}

/// `A(0.8)` and `B(0.6)` attacking each other with weight 1.
pub fn two_cycle() -> Fas {
    fas(&[("A", "0.8"), ("B", "0.6")], &[("A", "B", "1"), ("B", "A", "1")])
}

/// Stable labeling of [`two_cycle`] favouring `A`.
pub fn two_cycle_flab1() -> FuzzyLabeling {
    labeling(&[("A", "0.8", "0.2", "0"), ("B", "0.2", "0.8", "0")])
}

/// Stable labeling of [`two_cycle`] favouring `B`.
pub fn two_cycle_flab2() -> FuzzyLabeling {
    labeling(&[("A", "0.4", "0.6", "0"), ("B", "0.6", "0.4", "0")])
}

/// Grounded labeling of [`two_cycle`].
pub fn two_cycle_flab3() -> FuzzyLabeling {
    labeling(&[("A", "0.4", "0.2", "0.4"), ("B", "0.2", "0.4", "0.4")])
}
