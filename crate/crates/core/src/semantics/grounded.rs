//! Grounded labeling by Kleene iteration from the bottom labeling.

use crate::degree::Degree;
use crate::fas::Fas;
use crate::labeling::FuzzyLabeling;

use super::complete::strict_rejectability;

/// The least complete labeling, with the number of rounds it took.
///
/// Each round recomputes rejectability by strict weakening and then
/// acceptability by strict defense. Both operators are monotone and every
/// iterate stays on the characteristic grid, so the sequence is
/// nondecreasing and reaches its fixpoint within `|grid| * |Args|` rounds.
pub fn grounded_fixpoint_with_rounds(fas: &Fas) -> (FuzzyLabeling, usize) {
    let topo = fas.topology();
    let n = topo.len();
    let mut accept = vec![Degree::ZERO; n];
    let mut reject = vec![Degree::ZERO; n];
    let mut rounds = 0;
    loop {
        rounds += 1;
        let next_reject = strict_rejectability(&topo, &accept);
        let next_accept: Vec<Degree> = (0..n)
            .map(|i| topo.defense_bound(&next_reject, i).min(topo.degrees[i]))
            .collect();
        if next_accept == accept && next_reject == reject {
            break;
        }
        accept = next_accept;
        reject = next_reject;
    }
    let lab = super::assemble(&topo, &accept, &reject)
        .expect("least fixpoint lies below a complete labeling and is residual");
    (lab, rounds)
}

pub fn grounded_fixpoint(fas: &Fas) -> FuzzyLabeling {
    grounded_fixpoint_with_rounds(fas).0
}
