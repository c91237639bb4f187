//! Brute-force best responses and equilibrium audits.
//!
//! Each check fixes one side's strategy and exhaustively searches the other
//! side's deviations on a bounded instance:
//!
//! - [`mover_best_response`]: every goal-reaching path up to `shortest + slack`
//!   moves, played against a fixed Eater.
//! - [`eater_best_response`]: every deterministic Eater strategy against a
//!   fixed pair of Mover strategies (one per game), scored by the worst case
//!   over the two games.
//!
//! [`verify_equilibrium`] runs all three checks and compares the payoffs with
//! the closed form in [`crate::value`].

use serde::Serialize;
use thiserror::Error;

use crate::engine::{
    self, default_horizon_cap, ConsumptionVector, EaterAction, EngineError, GameState, HalfUnits,
    Transcript,
};
use crate::geometry::{manhattan, GoalIndex, GoalPair, GridPosition, MoveDirection};
use crate::strategy::{EaterStrategy, EquilibriumMover, MoverStrategy, ScriptedMover};
use crate::value::{eater_equilibrium_value, equilibrium_value};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("search budget of {budget} exhausted after {explored} evaluations")]
    BoundsExceeded { explored: u64, budget: u64 },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    /// Extra moves allowed beyond the shortest path in Mover searches.
    pub slack: u32,
    /// Maximum number of complete plays evaluated by one search.
    pub budget: u64,
    /// Step limit for any single game; `None` uses the engine default.
    pub horizon_cap: Option<u32>,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self {
            slack: 2,
            budget: 5_000_000,
            horizon_cap: None,
        }
    }
}

impl SearchBounds {
    fn cap_for(&self, start: GridPosition, goals: &GoalPair) -> u32 {
        self.horizon_cap
            .unwrap_or_else(|| default_horizon_cap(start, goals) + self.slack)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Deviator {
    Mover { game: GoalIndex },
    Eater,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A Mover path that strictly lowers consumption at its true goal.
    Mover { transcript: Transcript },
    /// An Eater play that strictly raises the worst-case consumption.
    Eater {
        game1: Transcript,
        game2: Transcript,
    },
}

/// Result of one exhaustive deviation search.
///
/// `witness` is present iff `best_deviation_payoff` is strictly better for the
/// deviator than `equilibrium_payoff` (lower for the Mover, higher for the
/// Eater).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeviationReport {
    pub deviator: Deviator,
    pub checked_count: u64,
    pub best_deviation_payoff: HalfUnits,
    pub equilibrium_payoff: HalfUnits,
    pub witness: Option<Witness>,
    pub bounds: SearchBounds,
}

impl DeviationReport {
    pub fn has_improving_deviation(&self) -> bool {
        self.witness.is_some()
    }
}

/// Plays `mover` against a fixed list of Eater actions.
fn play_with_eater_actions(
    initial: GameState,
    mover: &dyn MoverStrategy,
    actions: &[EaterAction],
) -> Result<Transcript, EngineError> {
    let mut state = initial;
    let mut steps = Vec::with_capacity(actions.len());
    for &eat in actions {
        let dir = mover.choose(&state.mover_view())?;
        let (next, step) = state.apply(dir, eat)?;
        steps.push(step);
        state = next;
    }
    if !state.is_terminal() {
        return Err(EngineError::ReplayMismatch {
            step: steps.len(),
            what: "eater action list ended before the game did",
        });
    }
    Ok(Transcript {
        initial,
        terminal_time: state.clock,
        steps,
    })
}

/// Best value found in a subtree and the Eater actions reaching it, stored in
/// reverse order (deepest first).
struct Best {
    value: HalfUnits,
    rev_actions: [Vec<EaterAction>; 2],
}

struct EaterSearch<'a> {
    movers: [&'a dyn MoverStrategy; 2],
    cap: u32,
    budget: u64,
    explored: u64,
}

impl EaterSearch<'_> {
    fn count(&mut self, n: u64) -> Result<(), OracleError> {
        self.explored += n;
        if self.explored > self.budget {
            return Err(OracleError::BoundsExceeded {
                explored: self.explored,
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn check_horizon(&self, state: &GameState) -> Result<(), OracleError> {
        if state.clock >= self.cap {
            return Err(EngineError::HorizonExceeded { cap: self.cap }.into());
        }
        Ok(())
    }

    /// Both games together. While the Eater's observations coincide, one
    /// action is applied to both games; once they differ, the games decouple.
    fn joint(&mut self, games: [GameState; 2]) -> Result<Best, OracleError> {
        let done = games.map(|g| g.is_terminal());
        if !done[0] && !done[1] {
            for g in &games {
                self.check_horizon(g)?;
            }
            let dirs = [
                self.movers[0].choose(&games[0].mover_view()).map_err(EngineError::from)?,
                self.movers[1].choose(&games[1].mover_view()).map_err(EngineError::from)?,
            ];
            if games[0].eater_view(dirs[0]) == games[1].eater_view(dirs[1]) {
                let mut best: Option<Best> = None;
                for eat in EaterAction::ALL {
                    let next = [
                        games[0].apply(dirs[0], eat)?.0,
                        games[1].apply(dirs[1], eat)?.0,
                    ];
                    let mut sub = self.joint(next)?;
                    if best.as_ref().is_none_or(|b| sub.value > b.value) {
                        sub.rev_actions[0].push(eat);
                        sub.rev_actions[1].push(eat);
                        best = Some(sub);
                    }
                }
                return Ok(best.expect("three actions"));
            }
        }
        let first = self.single(games[0], 0)?;
        let second = self.single(games[1], 1)?;
        Ok(Best {
            value: first.0.min(second.0),
            rev_actions: [first.1, second.1],
        })
    }

    /// Best consumption at the true goal of one game on its own.
    fn single(
        &mut self,
        game: GameState,
        slot: usize,
    ) -> Result<(HalfUnits, Vec<EaterAction>), OracleError> {
        if game.is_terminal() {
            self.count(1)?;
            return Ok((game.consumption.get(game.true_goal()), Vec::new()));
        }
        let mover = self.movers[slot];
        if !mover.reads_consumption() {
            // The path is fixed, so eating at the true goal every step dominates.
            let eat = EaterAction::eat(game.true_goal());
            let mut state = game;
            let mut actions = Vec::new();
            while !state.is_terminal() {
                self.check_horizon(&state)?;
                let dir = mover.choose(&state.mover_view()).map_err(EngineError::from)?;
                state = state.apply(dir, eat)?.0;
                actions.push(eat);
            }
            self.count(1)?;
            return Ok((state.consumption.get(state.true_goal()), actions));
        }
        self.check_horizon(&game)?;
        let dir = mover.choose(&game.mover_view()).map_err(EngineError::from)?;
        let mut best: Option<(HalfUnits, Vec<EaterAction>)> = None;
        for eat in EaterAction::ALL {
            let (value, mut rev) = self.single(game.apply(dir, eat)?.0, slot)?;
            if best.as_ref().is_none_or(|b| value > b.0) {
                rev.push(eat);
                best = Some((value, rev));
            }
        }
        Ok(best.expect("three actions"))
    }
}

/// Searches every deterministic Eater strategy against the given Mover
/// strategies for game 1 and game 2, maximizing the worst-case consumption.
///
/// While the two games look identical to the Eater it must act identically in
/// both. Once they differ each game is optimized separately; when a Mover's
/// path does not depend on consumption the separate optimum is eating at the
/// true goal every step, otherwise the remaining actions are enumerated.
pub fn eater_best_response(
    start: GridPosition,
    initial: ConsumptionVector,
    goals: &GoalPair,
    movers: [&dyn MoverStrategy; 2],
    eater: &dyn EaterStrategy,
    bounds: SearchBounds,
) -> Result<DeviationReport, OracleError> {
    let cap = bounds.cap_for(start, goals);
    let games = [
        GameState::new(start, initial, *goals, GoalIndex::First)?,
        GameState::new(start, initial, *goals, GoalIndex::Second)?,
    ];
    let played = [
        engine::play(games[0], movers[0], eater, cap)?,
        engine::play(games[1], movers[1], eater, cap)?,
    ];
    let equilibrium_payoff = engine::eater_payoff(&played[0], &played[1])?;

    let mut search = EaterSearch {
        movers,
        cap,
        budget: bounds.budget,
        explored: 0,
    };
    let best = search.joint(games)?;
    let witness = if best.value > equilibrium_payoff {
        let [mut a1, mut a2] = best.rev_actions;
        a1.reverse();
        a2.reverse();
        Some(Witness::Eater {
            game1: play_with_eater_actions(games[0], movers[0], &a1)?,
            game2: play_with_eater_actions(games[1], movers[1], &a2)?,
        })
    } else {
        None
    };
    Ok(DeviationReport {
        deviator: Deviator::Eater,
        checked_count: search.explored,
        best_deviation_payoff: best.value,
        equilibrium_payoff,
        witness,
        bounds,
    })
}

/// Visits every path from `start` that first reaches the true goal within
/// `max_len` moves, playing each against `eater`. The visitor receives the
/// path and the final state. Returns the number of paths visited.
#[allow(clippy::too_many_arguments)]
pub fn for_each_mover_path(
    start: GridPosition,
    initial: ConsumptionVector,
    goals: &GoalPair,
    true_goal: GoalIndex,
    eater: &dyn EaterStrategy,
    max_len: u32,
    budget: u64,
    mut visit: impl FnMut(&[MoveDirection], &GameState),
) -> Result<u64, OracleError> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        state: GameState,
        target: GridPosition,
        eater: &dyn EaterStrategy,
        max_len: u32,
        budget: u64,
        path: &mut Vec<MoveDirection>,
        count: &mut u64,
        visit: &mut dyn FnMut(&[MoveDirection], &GameState),
    ) -> Result<(), OracleError> {
        if state.is_terminal() {
            *count += 1;
            if *count > budget {
                return Err(OracleError::BoundsExceeded {
                    explored: *count,
                    budget,
                });
            }
            visit(path, &state);
            return Ok(());
        }
        for dir in MoveDirection::ALL {
            let next_pos = state.position.step(dir);
            if state.clock as u64 + 1 + manhattan(next_pos, target) > max_len as u64 {
                continue;
            }
            let eat = eater.choose(&state.eater_view(dir));
            let (next, _) = state.apply(dir, eat)?;
            path.push(dir);
            go(next, target, eater, max_len, budget, path, count, visit)?;
            path.pop();
        }
        Ok(())
    }

    let state = GameState::new(start, initial, *goals, true_goal)?;
    let mut count = 0;
    go(
        state,
        state.true_goal_position(),
        eater,
        max_len,
        budget,
        &mut Vec::new(),
        &mut count,
        &mut visit,
    )?;
    Ok(count)
}

/// Searches every Mover path of length up to `shortest + slack` against a
/// fixed Eater and reports the lowest consumption at the true goal, compared
/// with what the equilibrium Mover gets against the same Eater.
pub fn mover_best_response(
    start: GridPosition,
    initial: ConsumptionVector,
    goals: &GoalPair,
    true_goal: GoalIndex,
    eater: &dyn EaterStrategy,
    bounds: SearchBounds,
) -> Result<DeviationReport, OracleError> {
    let cap = bounds.cap_for(start, goals);
    let state = GameState::new(start, initial, *goals, true_goal)?;
    let equilibrium_payoff = engine::play(state, &EquilibriumMover, eater, cap)?.true_goal_outcome();

    let max_len = goals.distance(start, true_goal) as u32 + bounds.slack;
    let mut best: Option<(HalfUnits, Vec<MoveDirection>)> = None;
    let checked_count = for_each_mover_path(
        start,
        initial,
        goals,
        true_goal,
        eater,
        max_len,
        bounds.budget,
        |path, end| {
            let payoff = end.consumption.get(true_goal);
            if best.as_ref().is_none_or(|b| payoff < b.0) {
                best = Some((payoff, path.to_vec()));
            }
        },
    )?;
    let (best_payoff, best_path) = best.expect("the shortest paths are always enumerated");
    let witness = if best_payoff < equilibrium_payoff {
        let mover = ScriptedMover::new(best_path, start, goals, true_goal)
            .map_err(EngineError::from)?;
        Some(Witness::Mover {
            transcript: engine::play(state, &mover, eater, max_len.max(1))?,
        })
    } else {
        None
    };
    Ok(DeviationReport {
        deviator: Deviator::Mover { game: true_goal },
        checked_count,
        best_deviation_payoff: best_payoff,
        equilibrium_payoff,
        witness,
        bounds,
    })
}

/// Closed-form equilibrium payoffs at one start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub v1: HalfUnits,
    pub v2: HalfUnits,
    pub ve: HalfUnits,
}

impl ClosedForm {
    pub fn at(start: GridPosition, initial: ConsumptionVector, goals: &GoalPair) -> Self {
        Self {
            v1: equilibrium_value(start, initial, goals, GoalIndex::First),
            v2: equilibrium_value(start, initial, goals, GoalIndex::Second),
            ve: eater_equilibrium_value(start, initial, goals),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum CheckOutcome {
    Done(Box<DeviationReport>),
    /// The search ran out of budget before finishing.
    Inconclusive { reason: String },
}

impl CheckOutcome {
    fn from_result(r: Result<DeviationReport, OracleError>) -> Result<Self, OracleError> {
        match r {
            Ok(report) => Ok(CheckOutcome::Done(Box::new(report))),
            Err(e @ OracleError::BoundsExceeded { .. }) => Ok(CheckOutcome::Inconclusive {
                reason: e.to_string(),
            }),
            Err(e) => Err(e),
        }
    }

    pub fn report(&self) -> Option<&DeviationReport> {
        match self {
            CheckOutcome::Done(r) => Some(r),
            CheckOutcome::Inconclusive { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// All three no-deviation checks at one start.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquilibriumAudit {
    pub start: GridPosition,
    pub initial: ConsumptionVector,
    pub closed_form: ClosedForm,
    pub game1: CheckOutcome,
    pub game2: CheckOutcome,
    pub eater: CheckOutcome,
    pub verdict: Verdict,
}

impl EquilibriumAudit {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// The first improving deviation found, if any.
    pub fn first_witness(&self) -> Option<&Witness> {
        [&self.game1, &self.game2, &self.eater]
            .into_iter()
            .filter_map(|c| c.report())
            .find_map(|r| r.witness.as_ref())
    }
}

/// Checks that the equilibrium Mover (in both games) and `eater` admit no
/// improving deviation within `bounds`, and that the payoffs they produce
/// match the closed form. Pass `EquilibriumEater` to audit the equilibrium
/// itself; any other Eater is expected to fail.
pub fn verify_equilibrium(
    start: GridPosition,
    initial: ConsumptionVector,
    goals: &GoalPair,
    eater: &dyn EaterStrategy,
    bounds: SearchBounds,
) -> Result<EquilibriumAudit, OracleError> {
    let closed_form = ClosedForm::at(start, initial, goals);
    let game = |i| {
        CheckOutcome::from_result(mover_best_response(start, initial, goals, i, eater, bounds))
    };
    let game1 = game(GoalIndex::First)?;
    let game2 = game(GoalIndex::Second)?;
    let eater_check = CheckOutcome::from_result(eater_best_response(
        start,
        initial,
        goals,
        [&EquilibriumMover, &EquilibriumMover],
        eater,
        bounds,
    ))?;

    let expected = [closed_form.v1, closed_form.v2, closed_form.ve];
    let mut verdict = Verdict::Pass;
    for (check, want) in [&game1, &game2, &eater_check].into_iter().zip(expected) {
        match check.report() {
            None => {
                if verdict == Verdict::Pass {
                    verdict = Verdict::Inconclusive;
                }
            }
            Some(r) => {
                if r.has_improving_deviation() || r.equilibrium_payoff != want {
                    verdict = Verdict::Fail;
                }
            }
        }
    }
    Ok(EquilibriumAudit {
        start,
        initial,
        closed_form,
        game1,
        game2,
        eater: eater_check,
        verdict,
    })
}
