//! Strategy interfaces and the concrete policies.
//!
//! Mover strategies see a [`MoverView`] (which includes the true goal); Eater
//! strategies see only an [`EaterView`], so one Eater strategy necessarily
//! serves both games.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::engine::{EaterAction, EaterView, MoverView};
use crate::geometry::{
    classify_move, shortening_moves, step_counts, GoalIndex, GoalPair, GridPosition, MoveClass,
    MoveDirection, Region,
};
use crate::value::delta_c_hat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("the Mover is already at its goal {0}")]
    AtGoal(GridPosition),
    #[error("invalid path: {0}")]
    PathInvalid(String),
    #[error("scripted path has no move for step {0}")]
    PathExhausted(u32),
    #[error("no explicit move toward the fake goal exists from {at} (exaggeration step {step}, {region} region)")]
    NoExplicitMoveTowardFake {
        step: u32,
        at: GridPosition,
        region: Region,
    },
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
}

/// A deterministic Mover policy.
pub trait MoverStrategy: Send + Sync {
    fn choose(&self, view: &MoverView) -> Result<MoveDirection, StrategyError>;

    /// Whether the choice can depend on the consumption vector. Policies that
    /// return `false` follow a fixed path regardless of what the Eater does,
    /// which lets the oracle collapse Eater branches once the games diverge.
    fn reads_consumption(&self) -> bool {
        true
    }
}

/// A deterministic Eater policy.
pub trait EaterStrategy: Send + Sync {
    fn choose(&self, view: &EaterView) -> EaterAction;
}

impl<T: MoverStrategy + ?Sized> MoverStrategy for Box<T> {
    fn choose(&self, view: &MoverView) -> Result<MoveDirection, StrategyError> {
        (**self).choose(view)
    }

    fn reads_consumption(&self) -> bool {
        (**self).reads_consumption()
    }
}

impl<T: EaterStrategy + ?Sized> EaterStrategy for Box<T> {
    fn choose(&self, view: &EaterView) -> EaterAction {
        (**self).choose(view)
    }
}

/// Shortest path, ambiguous moves first. Ties go Up > Down > Left > Right.
pub fn equilibrium_move(
    position: GridPosition,
    goals: &GoalPair,
    true_goal: GoalIndex,
) -> Result<MoveDirection, StrategyError> {
    let target = goals.get(true_goal);
    if position == target {
        return Err(StrategyError::AtGoal(position));
    }
    let want_ambiguous = step_counts(position, goals).ambiguous > 0;
    // Outside the goal box some shortening move is ambiguous; inside, every
    // shortening move is explicit.
    Ok(shortening_moves(position, target)
        .find(|&dir| classify_move(position, dir, goals).is_ambiguous() == want_ambiguous)
        .expect("a shortening move of the wanted class always exists"))
}

pub fn equilibrium_mover(view: &MoverView) -> Result<MoveDirection, StrategyError> {
    equilibrium_move(view.position, &view.goals, view.true_goal)
}

/// Conservative after ambiguous moves, exploiting after explicit ones.
pub fn equilibrium_eater(view: &EaterView) -> EaterAction {
    match view.move_class() {
        MoveClass::Ambiguous => match delta_c_hat(view, GoalIndex::First).0.signum() {
            -1 => EaterAction::EatG1,
            1 => EaterAction::EatG2,
            _ => EaterAction::EatHalf,
        },
        MoveClass::Explicit { toward } => EaterAction::eat(toward),
    }
}

/// Exploiting after explicit moves, always half-and-half after ambiguous ones.
pub fn half_half_eater(view: &EaterView) -> EaterAction {
    match view.move_class() {
        MoveClass::Ambiguous => EaterAction::EatHalf,
        MoveClass::Explicit { toward } => EaterAction::eat(toward),
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EquilibriumMover;

impl MoverStrategy for EquilibriumMover {
    fn choose(&self, view: &MoverView) -> Result<MoveDirection, StrategyError> {
        equilibrium_mover(view)
    }

    fn reads_consumption(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EquilibriumEater;

impl EaterStrategy for EquilibriumEater {
    fn choose(&self, view: &EaterView) -> EaterAction {
        equilibrium_eater(view)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct HalfHalfEater;

impl EaterStrategy for HalfHalfEater {
    fn choose(&self, view: &EaterView) -> EaterAction {
        half_half_eater(view)
    }
}

/// Always the same direction.
#[derive(Debug, Clone, Copy)]
pub struct ConstantMover(pub MoveDirection);

impl MoverStrategy for ConstantMover {
    fn choose(&self, _view: &MoverView) -> Result<MoveDirection, StrategyError> {
        Ok(self.0)
    }

    fn reads_consumption(&self) -> bool {
        false
    }
}

/// Always the same action.
#[derive(Debug, Clone, Copy)]
pub struct ConstantEater(pub EaterAction);

impl EaterStrategy for ConstantEater {
    fn choose(&self, _view: &EaterView) -> EaterAction {
        self.0
    }
}

/// Replays a fixed path by step index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptedMover {
    path: Vec<MoveDirection>,
}

impl ScriptedMover {
    /// The path must end on the true goal and must not touch it earlier.
    pub fn new(
        path: Vec<MoveDirection>,
        start: GridPosition,
        goals: &GoalPair,
        true_goal: GoalIndex,
    ) -> Result<Self, StrategyError> {
        let target = goals.get(true_goal);
        let mut at = start;
        for (idx, &dir) in path.iter().enumerate() {
            if at == target {
                return Err(StrategyError::PathInvalid(format!(
                    "reaches the true goal {target} after {idx} of {} moves",
                    path.len()
                )));
            }
            at = at.step(dir);
        }
        if at != target {
            return Err(StrategyError::PathInvalid(format!(
                "ends at {at}, not at the true goal {target}"
            )));
        }
        Ok(Self { path })
    }

    pub fn path(&self) -> &[MoveDirection] {
        &self.path
    }
}

impl MoverStrategy for ScriptedMover {
    fn choose(&self, view: &MoverView) -> Result<MoveDirection, StrategyError> {
        self.path
            .get(view.clock as usize)
            .copied()
            .ok_or(StrategyError::PathExhausted(view.clock))
    }

    fn reads_consumption(&self) -> bool {
        false
    }
}

/// The path the equilibrium Mover walks from `start`.
pub fn equilibrium_path(
    start: GridPosition,
    goals: &GoalPair,
    true_goal: GoalIndex,
) -> Vec<MoveDirection> {
    let target = goals.get(true_goal);
    let mut path = Vec::new();
    let mut at = start;
    while at != target {
        let dir = equilibrium_move(at, goals, true_goal).expect("not at goal");
        path.push(dir);
        at = at.step(dir);
    }
    path
}

/// A shortest path that spends explicit moves as early as it can, then the
/// ambiguous ones. Ties go Up > Down > Left > Right.
pub fn build_explicit_first_path(
    start: GridPosition,
    goals: &GoalPair,
    true_goal: GoalIndex,
) -> Vec<MoveDirection> {
    let target = goals.get(true_goal);
    let mut path = Vec::new();
    let mut at = start;
    while at != target {
        let mut candidates = shortening_moves(at, target);
        let first = candidates.next().expect("not at goal");
        let dir = std::iter::once(first)
            .chain(candidates)
            .find(|&dir| !classify_move(at, dir, goals).is_ambiguous())
            .unwrap_or(first);
        path.push(dir);
        at = at.step(dir);
    }
    path
}

/// `k` explicit moves toward the fake goal, then the equilibrium path.
pub fn build_exaggeration_path(
    start: GridPosition,
    goals: &GoalPair,
    true_goal: GoalIndex,
    k: u32,
) -> Result<Vec<MoveDirection>, StrategyError> {
    let fake = true_goal.other();
    let mut path = Vec::new();
    let mut at = start;
    for step in 0..k {
        let dir = MoveDirection::ALL
            .into_iter()
            .find(|&dir| classify_move(at, dir, goals) == MoveClass::Explicit { toward: fake })
            .ok_or(StrategyError::NoExplicitMoveTowardFake {
                step,
                at,
                region: crate::geometry::region_of(at, goals),
            })?;
        path.push(dir);
        at = at.step(dir);
    }
    path.extend(equilibrium_path(at, goals, true_goal));
    Ok(path)
}

/// Mover strategy names accepted by configs and the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoverSpec {
    Equilibrium,
    ExplicitFirst,
    Exaggeration(u32),
    Path(Vec<MoveDirection>),
}

impl MoverSpec {
    pub fn build(
        &self,
        start: GridPosition,
        goals: &GoalPair,
        true_goal: GoalIndex,
    ) -> Result<Box<dyn MoverStrategy>, StrategyError> {
        Ok(match self {
            MoverSpec::Equilibrium => Box::new(EquilibriumMover),
            MoverSpec::ExplicitFirst => Box::new(ScriptedMover::new(
                build_explicit_first_path(start, goals, true_goal),
                start,
                goals,
                true_goal,
            )?),
            MoverSpec::Exaggeration(k) => Box::new(ScriptedMover::new(
                build_exaggeration_path(start, goals, true_goal, *k)?,
                start,
                goals,
                true_goal,
            )?),
            // A raw path is replayed as given; the engine's horizon cap catches
            // paths that never arrive.
            MoverSpec::Path(path) => Box::new(RawPathMover(path.clone())),
        })
    }
}

/// Replays a path without validating it up front.
#[derive(Debug, Clone)]
struct RawPathMover(Vec<MoveDirection>);

impl MoverStrategy for RawPathMover {
    fn choose(&self, view: &MoverView) -> Result<MoveDirection, StrategyError> {
        self.0
            .get(view.clock as usize)
            .copied()
            .ok_or(StrategyError::PathExhausted(view.clock))
    }

    fn reads_consumption(&self) -> bool {
        false
    }
}

impl FromStr for MoverSpec {
    type Err = StrategyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || StrategyError::UnknownStrategy(s.to_string());
        if s == "equilibrium" {
            return Ok(MoverSpec::Equilibrium);
        }
        if s == "explicit_first" {
            return Ok(MoverSpec::ExplicitFirst);
        }
        if let Some(k) = s.strip_prefix("exaggeration:") {
            return k.trim().parse().map(MoverSpec::Exaggeration).map_err(|_| unknown());
        }
        if let Some(rest) = s.strip_prefix("path:") {
            let inner = rest
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .unwrap_or(rest);
            let path = inner
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<MoveDirection>().map_err(|_| unknown()))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(MoverSpec::Path(path));
        }
        Err(unknown())
    }
}

impl fmt::Display for MoverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoverSpec::Equilibrium => f.write_str("equilibrium"),
            MoverSpec::ExplicitFirst => f.write_str("explicit_first"),
            MoverSpec::Exaggeration(k) => write!(f, "exaggeration:{k}"),
            MoverSpec::Path(path) => {
                let names: Vec<_> = path.iter().map(|d| d.name()).collect();
                write!(f, "path:[{}]", names.join(","))
            }
        }
    }
}

/// Eater strategy names accepted by configs and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EaterSpec {
    Equilibrium,
    HalfHalf,
}

impl EaterSpec {
    pub fn build(self) -> Box<dyn EaterStrategy> {
        match self {
            EaterSpec::Equilibrium => Box::new(EquilibriumEater),
            EaterSpec::HalfHalf => Box::new(HalfHalfEater),
        }
    }
}

impl FromStr for EaterSpec {
    type Err = StrategyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "equilibrium" => Ok(EaterSpec::Equilibrium),
            "half_half" => Ok(EaterSpec::HalfHalf),
            other => Err(StrategyError::UnknownStrategy(other.to_string())),
        }
    }
}

impl fmt::Display for EaterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EaterSpec::Equilibrium => "equilibrium",
            EaterSpec::HalfHalf => "half_half",
        })
    }
}
