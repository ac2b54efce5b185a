//! Fuzzy argumentation systems evaluated by fuzzy labelings: each argument
//! receives an acceptability, rejectability and undecidability degree.

pub mod classical;
pub mod degree;
pub mod error;
pub mod extension;
pub mod fas;
pub mod fixtures;
pub mod fuzzy_set;
pub mod io;
pub mod labeling;
pub mod postulates;
pub mod principles;
pub mod semantics;

pub use degree::{Degree, Magnitude};
pub use error::{Error, Result};
pub use fas::{attack_intensity, classify_attack, AttackKind, Fas};
pub use fuzzy_set::{ArgumentId, FuzzySet};
pub use labeling::{FuzzyLabeling, Triple};
pub use postulates::{check_postulate, check_profile, PostulateId, PostulateReport};
pub use semantics::{is_labeling, leq_labeling, solve, LabelingSet, Limits, SemanticsId};
