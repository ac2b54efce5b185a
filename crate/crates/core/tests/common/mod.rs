#![allow(dead_code)]

use fuzzy_labeling::fixtures::id;
use fuzzy_labeling::{Degree, Fas, FuzzyLabeling, FuzzySet, Triple};
use proptest::prelude::*;

/// Degrees `k / steps`.
pub fn degree(steps: u64) -> impl Strategy<Value = Degree> {
    (0..=steps).prop_map(move |k| Degree::from_ratio(k, steps).unwrap())
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// Systems with up to `max_args` arguments and degrees on the grid of
/// `steps`ths.
pub fn system(max_args: usize, steps: u64) -> impl Strategy<Value = Fas> {
    (1..=max_args).prop_flat_map(move |n| {
        (
            prop::collection::vec(degree(steps), n),
            prop::collection::vec(prop::option::weighted(0.4, degree(steps)), n * n),
        )
            .prop_map(move |(degrees, weights)| {
                let ns = names(n);
                let mut fas = Fas::new();
                for (name, d) in ns.iter().zip(&degrees) {
                    fas.add_argument(id(name), *d).unwrap();
                }
                for (k, w) in weights.iter().enumerate() {
                    if let Some(w) = w {
                        if !w.is_zero() {
                            fas.add_attack(id(&ns[k / n]), id(&ns[k % n]), *w).unwrap();
                        }
                    }
                }
                fas
            })
    })
}

/// A system together with an arbitrary labeling of it.
pub fn system_and_labeling(max_args: usize, steps: u64) -> impl Strategy<Value = (Fas, FuzzyLabeling)> {
    system(max_args, steps).prop_flat_map(move |fas| {
        let n = fas.len();
        prop::collection::vec((degree(steps), degree(steps), degree(steps)), n).prop_map(move |triples| {
            let lab: FuzzyLabeling = fas
                .arguments()
                .zip(triples)
                .map(|((name, _), (a, r, u))| (name.clone(), Triple::new(a, r, u)))
                .collect();
            (fas.clone(), lab)
        })
    })
}

pub fn fuzzy_set(max_args: usize, steps: u64) -> impl Strategy<Value = FuzzySet> {
    prop::collection::vec(degree(steps), max_args)
        .prop_map(|ds| names(ds.len()).iter().map(|n| id(n)).zip(ds).collect())
}
