use serde::Serialize;

use crate::degree::Degree;
use crate::fas::{attack_intensity, Fas};

/// Finite value set on which complete labelings are enumerated.
///
/// Holds 0, 1, every initial degree, every attack weight and every
/// full-strength attack intensity, closed under `x -> 1 - x`. The strict
/// weakened and strict defense operators only take minima, maxima and
/// complements of these values, so they map grid labelings to grid
/// labelings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CharacteristicValueSet(Vec<Degree>);

impl CharacteristicValueSet {
    pub fn values(&self) -> &[Degree] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, d: Degree) -> bool {
        self.0.binary_search(&d).is_ok()
    }

    /// Grid values `<= bound`, ascending.
    pub fn up_to(&self, bound: Degree) -> &[Degree] {
        let end = self.0.partition_point(|v| *v <= bound);
        &self.0[..end]
    }

    /// Grid values in `[low, high]`, ascending.
    pub fn between(&self, low: Degree, high: Degree) -> &[Degree] {
        let start = self.0.partition_point(|v| *v < low);
        let end = self.0.partition_point(|v| *v <= high).max(start);
        &self.0[start..end]
    }

    /// Smallest grid value strictly above `d`.
    pub fn next_above(&self, d: Degree) -> Option<Degree> {
        let i = self.0.partition_point(|v| *v <= d);
        self.0.get(i).copied()
    }
}

pub fn characteristic_values(fas: &Fas) -> CharacteristicValueSet {
    let mut values = vec![Degree::ZERO, Degree::ONE];
    values.extend(fas.arguments().map(|(_, d)| d));
    for (from, _, w) in fas.attacks() {
        values.push(w);
        values.push(attack_intensity(fas.degree(from.as_str()), w));
    }
    let complements: Vec<Degree> = values.iter().map(|d| d.complement()).collect();
    values.extend(complements);
    values.sort_unstable();
    values.dedup();
    CharacteristicValueSet(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn grid(values: &[&str]) -> Vec<Degree> {
        values.iter().map(|v| d(v)).collect()
    }

    #[test]
    fn two_cycle_grid() {
        let g = characteristic_values(&two_cycle());
        assert_eq!(g.values(), grid(&["0", "0.2", "0.4", "0.6", "0.8", "1"]).as_slice());
    }

    #[test]
    fn single_argument_grid() {
        let g = characteristic_values(&single("A", "0.8"));
        assert_eq!(g.values(), grid(&["0", "0.2", "0.8", "1"]).as_slice());
    }

    #[test]
    fn empty_system_grid() {
        let g = characteristic_values(&Fas::new());
        assert_eq!(g.values(), [Degree::ZERO, Degree::ONE]);
    }

    #[test]
    fn ranges() {
        let g = characteristic_values(&two_cycle());
        assert_eq!(g.up_to(d("0.5")), grid(&["0", "0.2", "0.4"]).as_slice());
        assert_eq!(g.between(d("0.2"), d("0.6")), grid(&["0.2", "0.4", "0.6"]).as_slice());
        assert!(g.between(d("0.7"), d("0.3")).is_empty());
        assert_eq!(g.next_above(d("0.4")), Some(d("0.6")));
        assert_eq!(g.next_above(Degree::ONE), None);
    }
}
