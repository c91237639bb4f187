//! Grid sweeps: value maps, classification maps and Mover path comparisons.
//!
//! Rows always come back sorted by `(y, x)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{
    default_horizon_cap, play, ConsumptionVector, EngineError, GameState, HalfUnits,
};
use crate::geometry::{region_of, step_counts, GoalIndex, GoalPair, GridPosition, Region};
use crate::strategy::{
    build_exaggeration_path, build_explicit_first_path, equilibrium_path, EaterStrategy,
    EquilibriumEater, EquilibriumMover, ScriptedMover, StrategyError,
};
use crate::value::equilibrium_value;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("window is empty: x {x_min}..={x_max}, y {y_min}..={y_max}")]
    EmptyWindow {
        x_min: i64,
        x_max: i64,
        y_min: i64,
        y_max: i64,
    },
    #[error("window has {cells} cells, more than the budget of {budget}")]
    TooLarge { cells: u64, budget: u64 },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Inclusive coordinate rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl Window {
    pub fn new(x_min: i64, x_max: i64, y_min: i64, y_max: i64) -> Result<Self, SweepError> {
        let w = Self {
            x_min,
            x_max,
            y_min,
            y_max,
        };
        w.validate()?;
        Ok(w)
    }

    /// Square window of the given half-width around the midpoint of the goals
    /// (rounded toward negative infinity).
    pub fn around(goals: &GoalPair, radius: i64) -> Self {
        let cx = (goals.g1().x + goals.g2().x).div_euclid(2);
        let cy = (goals.g1().y + goals.g2().y).div_euclid(2);
        Self {
            x_min: cx - radius,
            x_max: cx + radius,
            y_min: cy - radius,
            y_max: cy + radius,
        }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if self.x_min > self.x_max || self.y_min > self.y_max {
            return Err(SweepError::EmptyWindow {
                x_min: self.x_min,
                x_max: self.x_max,
                y_min: self.y_min,
                y_max: self.y_max,
            });
        }
        Ok(())
    }

    pub fn cell_count(&self) -> u64 {
        if self.x_min > self.x_max || self.y_min > self.y_max {
            return 0;
        }
        (self.x_max - self.x_min + 1) as u64 * (self.y_max - self.y_min + 1) as u64
    }

    pub fn contains(&self, p: GridPosition) -> bool {
        (self.x_min..=self.x_max).contains(&p.x) && (self.y_min..=self.y_max).contains(&p.y)
    }

    /// Cells ordered by `(y, x)`.
    pub fn cells(&self) -> impl Iterator<Item = GridPosition> + '_ {
        (self.y_min..=self.y_max)
            .flat_map(move |y| (self.x_min..=self.x_max).map(move |x| GridPosition::new(x, y)))
    }

    fn check_budget(&self, budget: u64) -> Result<(), SweepError> {
        self.validate()?;
        let cells = self.cell_count();
        if cells > budget {
            return Err(SweepError::TooLarge { cells, budget });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValueMapRow {
    pub x: i64,
    pub y: i64,
    pub v1: HalfUnits,
    pub v2: HalfUnits,
    pub ve: HalfUnits,
    pub region: Region,
    pub n_a: u64,
    pub n_r1: u64,
    pub n_r2: u64,
}

impl ValueMapRow {
    pub fn position(&self) -> GridPosition {
        GridPosition::new(self.x, self.y)
    }

    /// Which game attains the minimum in `ve`.
    pub fn min_side(&self) -> MinSide {
        match self.v1.cmp(&self.v2) {
            std::cmp::Ordering::Less => MinSide::Game1,
            std::cmp::Ordering::Greater => MinSide::Game2,
            std::cmp::Ordering::Equal => MinSide::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinSide {
    Game1,
    Game2,
    Both,
}

pub fn value_map_row(p: GridPosition, initial: ConsumptionVector, goals: &GoalPair) -> ValueMapRow {
    let sc = step_counts(p, goals);
    let v1 = equilibrium_value(p, initial, goals, GoalIndex::First);
    let v2 = equilibrium_value(p, initial, goals, GoalIndex::Second);
    ValueMapRow {
        x: p.x,
        y: p.y,
        v1,
        v2,
        ve: v1.min(v2),
        region: region_of(p, goals),
        n_a: sc.ambiguous,
        n_r1: sc.explicit[0],
        n_r2: sc.explicit[1],
    }
}

/// Closed-form equilibrium values for every cell of `window`.
pub fn value_map(
    goals: &GoalPair,
    initial: ConsumptionVector,
    window: &Window,
    budget: u64,
) -> Result<Vec<ValueMapRow>, SweepError> {
    window.check_budget(budget)?;
    Ok(window
        .cells()
        .map(|p| value_map_row(p, initial, goals))
        .collect())
}

/// Plays the equilibrium pair in both games from `p`; returns the
/// consumption at the true goal of each game.
pub fn simulate_cell(
    p: GridPosition,
    initial: ConsumptionVector,
    goals: &GoalPair,
) -> Result<[HalfUnits; 2], EngineError> {
    let cap = default_horizon_cap(p, goals);
    let run = |i| -> Result<HalfUnits, EngineError> {
        let state = GameState::new(p, initial, *goals, i)?;
        Ok(play(state, &EquilibriumMover, &EquilibriumEater, cap)?.outcome(i))
    };
    Ok([run(GoalIndex::First)?, run(GoalIndex::Second)?])
}

/// A cell where the closed form and a played game disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub x: i64,
    pub y: i64,
    pub closed_form: [HalfUnits; 2],
    pub simulated: [HalfUnits; 2],
}

/// Re-derives every row by playing the games and lists disagreements.
pub fn simulate_mismatches(
    rows: &[ValueMapRow],
    initial: ConsumptionVector,
    goals: &GoalPair,
) -> Result<Vec<Mismatch>, EngineError> {
    let mut out = Vec::new();
    for row in rows {
        let simulated = simulate_cell(row.position(), initial, goals)?;
        if simulated != [row.v1, row.v2] {
            out.push(Mismatch {
                x: row.x,
                y: row.y,
                closed_form: [row.v1, row.v2],
                simulated,
            });
        }
    }
    Ok(out)
}

/// Cells whose minimizing game differs from that of a 4-neighbour inside the
/// map. These trace where the Eater's worst case switches between games.
pub fn switch_boundary(rows: &[ValueMapRow]) -> Vec<GridPosition> {
    use std::collections::HashMap;
    let side: HashMap<GridPosition, MinSide> =
        rows.iter().map(|r| (r.position(), r.min_side())).collect();
    rows.iter()
        .filter(|r| {
            let here = r.min_side();
            crate::geometry::MoveDirection::ALL.iter().any(|&dir| {
                side.get(&r.position().step(dir))
                    .is_some_and(|&there| there != here)
            })
        })
        .map(|r| r.position())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassifyRow {
    pub x: i64,
    pub y: i64,
    pub region: Region,
    pub n_a: u64,
    pub n_r1: u64,
    pub n_r2: u64,
}

pub fn classify_map(
    goals: &GoalPair,
    window: &Window,
    budget: u64,
) -> Result<Vec<ClassifyRow>, SweepError> {
    window.check_budget(budget)?;
    Ok(window
        .cells()
        .map(|p| {
            let sc = step_counts(p, goals);
            ClassifyRow {
                x: p.x,
                y: p.y,
                region: region_of(p, goals),
                n_a: sc.ambiguous,
                n_r1: sc.explicit[0],
                n_r2: sc.explicit[1],
            }
        })
        .collect())
}

/// The three Mover paths compared against a fixed Eater.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    Equilibrium,
    ExplicitFirst,
    Exaggeration,
}

impl PathKind {
    pub fn label(self) -> &'static str {
        match self {
            PathKind::Equilibrium => "equilibrium",
            PathKind::ExplicitFirst => "explicit_first",
            PathKind::Exaggeration => "exaggeration",
        }
    }
}

/// One played path: positions visited and consumption at the true goal after
/// every step (index 0 is the initial consumption).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathRun {
    pub kind: PathKind,
    pub positions: Vec<GridPosition>,
    pub cumulative: Vec<HalfUnits>,
    pub total: HalfUnits,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathComparison {
    pub start: GridPosition,
    pub true_goal: GoalIndex,
    pub exaggeration_depth: u32,
    pub equilibrium: PathRun,
    pub explicit_first: PathRun,
    /// Fails when no explicit move toward the fake goal is available.
    #[serde(serialize_with = "ser_path_result")]
    pub exaggeration: Result<PathRun, StrategyError>,
}

fn ser_path_result<S: serde::Serializer>(
    r: &Result<PathRun, StrategyError>,
    s: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    #[serde(untagged)]
    enum Out<'a> {
        Run(&'a PathRun),
        Error { error: String },
    }
    match r {
        Ok(run) => Out::Run(run).serialize(s),
        Err(e) => Out::Error {
            error: e.to_string(),
        }
        .serialize(s),
    }
}

impl PathComparison {
    pub fn totals(&self) -> [Option<HalfUnits>; 3] {
        [
            Some(self.equilibrium.total),
            Some(self.explicit_first.total),
            self.exaggeration.as_ref().ok().map(|r| r.total),
        ]
    }

    pub fn runs(&self) -> impl Iterator<Item = &PathRun> {
        [Some(&self.equilibrium), Some(&self.explicit_first), self.exaggeration.as_ref().ok()]
            .into_iter()
            .flatten()
    }
}

fn run_path(
    kind: PathKind,
    path: Vec<crate::geometry::MoveDirection>,
    state: GameState,
    eater: &dyn EaterStrategy,
) -> Result<PathRun, EngineError> {
    let goals = state.goals;
    let mover = ScriptedMover::new(path, state.position, &goals, state.true_goal())?;
    let cap = (mover.path().len() as u32).max(1);
    let tr = play(state, &mover, eater, cap)?;
    let i = state.true_goal();
    let positions = std::iter::once(state.position)
        .chain(tr.steps.iter().map(|s| s.position_after))
        .collect();
    let cumulative = std::iter::once(state.consumption.get(i))
        .chain(tr.steps.iter().map(|s| s.consumption_after.get(i)))
        .collect();
    Ok(PathRun {
        kind,
        positions,
        cumulative,
        total: tr.outcome(i),
    })
}

/// Plays the equilibrium, explicit-first and exaggeration paths against `eater`.
pub fn compare_paths(
    start: GridPosition,
    initial: ConsumptionVector,
    goals: &GoalPair,
    true_goal: GoalIndex,
    exaggeration_depth: u32,
    eater: &dyn EaterStrategy,
) -> Result<PathComparison, EngineError> {
    let state = GameState::new(start, initial, *goals, true_goal)?;
    let equilibrium = run_path(
        PathKind::Equilibrium,
        equilibrium_path(start, goals, true_goal),
        state,
        eater,
    )?;
    let explicit_first = run_path(
        PathKind::ExplicitFirst,
        build_explicit_first_path(start, goals, true_goal),
        state,
        eater,
    )?;
    let exaggeration = match build_exaggeration_path(start, goals, true_goal, exaggeration_depth) {
        Ok(path) => Ok(run_path(PathKind::Exaggeration, path, state, eater)?),
        Err(e) => Err(e),
    };
    Ok(PathComparison {
        start,
        true_goal,
        exaggeration_depth,
        equilibrium,
        explicit_first,
        exaggeration,
    })
}

/// A geometry whose path totals match a searched pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PatternMatch {
    pub goals: GoalPair,
    pub start: GridPosition,
    pub true_goal: GoalIndex,
    pub exaggeration_depth: u32,
}

/// Searches goal pairs `g1 = (0, 0)`, `g2` within `max_separation`, starts
/// within `max_start_distance` of the true goal and exaggeration depths in
/// `1..=max_depth`, with zero initial consumption and the equilibrium Eater,
/// for path totals equal to `pattern` (equilibrium, explicit-first,
/// exaggeration). Results are in search order.
pub fn find_path_total_pattern(
    pattern: [HalfUnits; 3],
    max_separation: i64,
    max_start_distance: i64,
    max_depth: u32,
) -> Result<Vec<PatternMatch>, EngineError> {
    let origin = GridPosition::new(0, 0);
    let mut found = Vec::new();
    for gx in -max_separation..=max_separation {
        for gy in -max_separation..=max_separation {
            let g2 = GridPosition::new(gx, gy);
            let sep = gx.abs() + gy.abs();
            if sep == 0 || sep > max_separation {
                continue;
            }
            let goals = GoalPair::new(origin, g2).expect("distinct");
            for true_goal in GoalIndex::BOTH {
                let target = goals.get(true_goal);
                for dx in -max_start_distance..=max_start_distance {
                    let rest = max_start_distance - dx.abs();
                    for dy in -rest..=rest {
                        let start = GridPosition::new(target.x + dx, target.y + dy);
                        let cmp = compare_paths(
                            start,
                            ConsumptionVector::ZERO,
                            &goals,
                            true_goal,
                            0,
                            &EquilibriumEater,
                        )?;
                        if cmp.equilibrium.total != pattern[0]
                            || cmp.explicit_first.total != pattern[1]
                        {
                            continue;
                        }
                        for k in 1..=max_depth {
                            let Ok(path) = build_exaggeration_path(start, &goals, true_goal, k)
                            else {
                                break;
                            };
                            let state =
                                GameState::new(start, ConsumptionVector::ZERO, goals, true_goal)?;
                            let run =
                                run_path(PathKind::Exaggeration, path, state, &EquilibriumEater)?;
                            if run.total == pattern[2] {
                                found.push(PatternMatch {
                                    goals,
                                    start,
                                    true_goal,
                                    exaggeration_depth: k,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(found)
}
