//! c-factors and the closed-form equilibrium outcome.
//!
//! `c_i = b_i + d_i` is what goal `i` would lose if the Eater knew the true
//! goal and the Mover walked straight there. Distances count one banana per
//! cell, so in half-units a distance contributes `2 * d`.
//!
//! All values are exact integers in [`HalfUnits`].

use crate::engine::{ConsumptionVector, EaterView, HalfUnits};
use crate::geometry::{step_counts, GoalIndex, GoalPair, GridPosition};

pub fn c_plus(b_i: HalfUnits, d_i: u64) -> HalfUnits {
    b_i + HalfUnits(2 * d_i as i64)
}

/// The c-factor measured between the Mover's and the Eater's action:
/// current consumption, post-move distance.
pub fn c_hat(b_i: HalfUnits, d_i_next: u64) -> HalfUnits {
    c_plus(b_i, d_i_next)
}

/// `Δc_i = c_i - c_{-i}` at a state.
pub fn delta_c(
    position: GridPosition,
    consumption: ConsumptionVector,
    goals: &GoalPair,
    i: GoalIndex,
) -> HalfUnits {
    let c = |j| c_plus(consumption.get(j), goals.distance(position, j));
    c(i) - c(i.other())
}

/// `Δĉ_i` from what the Eater observes: `b(t)` and the post-move position.
pub fn delta_c_hat(view: &EaterView, i: GoalIndex) -> HalfUnits {
    let c = |j| c_hat(view.consumption.get(j), view.goals.distance(view.new_position, j));
    c(i) - c(i.other())
}

fn signum(v: HalfUnits) -> i64 {
    v.0.signum()
}

/// Consumption at goal `i` when both sides follow the equilibrium strategies
/// from `(position, consumption)` in the game where `i` is the true goal.
///
/// With `n` the number of ambiguous moves left and `Δ = Δc_i` in bananas:
/// `c_i - n (1 + sgn Δ) / 2` when `n <= |Δ|`, else `c_i - (n + Δ) / 2`.
///
/// Assumes `b_1 - b_2` is a whole number of bananas, which holds for every
/// state reachable from whole-banana initial consumption.
pub fn equilibrium_value(
    position: GridPosition,
    consumption: ConsumptionVector,
    goals: &GoalPair,
    i: GoalIndex,
) -> HalfUnits {
    let n = step_counts(position, goals).ambiguous as i64;
    let c_i = c_plus(consumption.get(i), goals.distance(position, i));
    let dc = delta_c(position, consumption, goals, i);
    debug_assert!(dc.is_whole(), "Δc must be a whole number of bananas");
    // n <= |Δ| with Δ in bananas, i.e. 2n <= |dc| in half-units
    if 2 * n <= dc.0.abs() {
        // 0.5 n (1 + sgn) bananas = n (1 + sgn) half-units
        c_i - HalfUnits(n * (1 + signum(dc)))
    } else {
        // 0.5 (n + Δ) bananas = n + dc/2 half-units
        c_i - HalfUnits(n + dc.0 / 2)
    }
}

/// `min_i V_i`: the Eater's worst-case payoff at equilibrium.
pub fn eater_equilibrium_value(
    position: GridPosition,
    consumption: ConsumptionVector,
    goals: &GoalPair,
) -> HalfUnits {
    GoalIndex::BOTH
        .into_iter()
        .map(|i| equilibrium_value(position, consumption, goals, i))
        .min()
        .expect("two goals")
}

/// `c_i - V_i`: how much the Mover saves because the Eater lacks the true goal.
pub fn value_of_information(
    position: GridPosition,
    consumption: ConsumptionVector,
    goals: &GoalPair,
    i: GoalIndex,
) -> HalfUnits {
    c_plus(consumption.get(i), goals.distance(position, i))
        - equilibrium_value(position, consumption, goals, i)
}
