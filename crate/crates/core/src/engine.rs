//! The game state machine.
//!
//! Each timestep the Mover moves first, then the Eater (having seen the move)
//! eats. The game ends once the Mover stands on the true goal; the Eater acts
//! after that final move too. All consumption is tracked in integer
//! half-bananas.

use std::fmt;
use std::io::{BufRead, Write};
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    self, step_counts, GoalIndex, GoalPair, GridPosition, MoveClass, MoveDirection,
};
use crate::strategy::{EaterStrategy, MoverStrategy, StrategyError};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("game is already over: the Mover stands on its goal at {0}")]
    AlreadyTerminal(GridPosition),
    #[error("horizon cap exceeded: no termination within {cap} steps")]
    HorizonExceeded { cap: u32 },
    #[error("horizon cap must be at least 1")]
    ZeroHorizon,
    #[error("initial consumption must be a nonnegative whole number of bananas, got {0:?}")]
    BadInitialConsumption(ConsumptionVector),
    #[error("transcripts do not describe the two games from one start: {0}")]
    MismatchedGames(&'static str),
    #[error("replay diverged at step {step}: {what}")]
    ReplayMismatch { step: usize, what: &'static str },
    #[error("transcript record on line {line}: {source}")]
    Record {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("transcript record on line {line} has an unknown move class {class:?}")]
    UnknownMoveClass { line: usize, class: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
}

/// Consumption measured in half-bananas. Two half-units make one banana.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct HalfUnits(pub i64);

impl HalfUnits {
    pub const ZERO: HalfUnits = HalfUnits(0);

    pub fn from_bananas(bananas: i64) -> Self {
        HalfUnits(2 * bananas)
    }

    pub fn bananas(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn is_whole(self) -> bool {
        self.0 % 2 == 0
    }

    /// Exact decimal rendering in bananas, e.g. `3.5` or `-2`.
    pub fn decimal(self) -> String {
        let sign = if self.0 < 0 { "-" } else { "" };
        let abs = self.0.unsigned_abs();
        if abs.is_multiple_of(2) {
            format!("{sign}{}", abs / 2)
        } else {
            format!("{sign}{}.5", abs / 2)
        }
    }
}

impl fmt::Display for HalfUnits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decimal())
    }
}

impl Add for HalfUnits {
    type Output = HalfUnits;
    fn add(self, rhs: Self) -> Self {
        HalfUnits(self.0 + rhs.0)
    }
}

impl AddAssign for HalfUnits {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl Sub for HalfUnits {
    type Output = HalfUnits;
    fn sub(self, rhs: Self) -> Self {
        HalfUnits(self.0 - rhs.0)
    }
}

impl Neg for HalfUnits {
    type Output = HalfUnits;
    fn neg(self) -> Self {
        HalfUnits(-self.0)
    }
}

/// Cumulative consumption at each goal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ConsumptionVector {
    pub b1: HalfUnits,
    pub b2: HalfUnits,
}

impl ConsumptionVector {
    pub const ZERO: ConsumptionVector = ConsumptionVector {
        b1: HalfUnits::ZERO,
        b2: HalfUnits::ZERO,
    };

    pub fn new(b1: HalfUnits, b2: HalfUnits) -> Self {
        Self { b1, b2 }
    }

    pub fn from_bananas(b1: i64, b2: i64) -> Self {
        Self::new(HalfUnits::from_bananas(b1), HalfUnits::from_bananas(b2))
    }

    pub fn get(&self, i: GoalIndex) -> HalfUnits {
        match i {
            GoalIndex::First => self.b1,
            GoalIndex::Second => self.b2,
        }
    }

    pub fn total(&self) -> HalfUnits {
        self.b1 + self.b2
    }

    pub fn after(self, action: EaterAction) -> Self {
        let (d1, d2) = action.increment();
        Self::new(self.b1 + d1, self.b2 + d2)
    }

    fn is_valid_initial(&self) -> bool {
        self.b1.0 >= 0 && self.b2.0 >= 0 && self.b1.is_whole() && self.b2.is_whole()
    }
}

/// What the Eater does in one timestep. Every action eats one banana in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EaterAction {
    EatG1,
    EatG2,
    EatHalf,
}

impl EaterAction {
    pub const ALL: [EaterAction; 3] = [EaterAction::EatG1, EaterAction::EatG2, EaterAction::EatHalf];

    /// Eat a whole banana at goal `i`.
    pub fn eat(i: GoalIndex) -> Self {
        match i {
            GoalIndex::First => EaterAction::EatG1,
            GoalIndex::Second => EaterAction::EatG2,
        }
    }

    pub fn increment(self) -> (HalfUnits, HalfUnits) {
        match self {
            EaterAction::EatG1 => (HalfUnits(2), HalfUnits(0)),
            EaterAction::EatG2 => (HalfUnits(0), HalfUnits(2)),
            EaterAction::EatHalf => (HalfUnits(1), HalfUnits(1)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EaterAction::EatG1 => "eat_g1",
            EaterAction::EatG2 => "eat_g2",
            EaterAction::EatHalf => "eat_half",
        }
    }
}

impl fmt::Display for EaterAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Full configuration of one game at time `clock`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameState {
    pub position: GridPosition,
    pub consumption: ConsumptionVector,
    pub clock: u32,
    pub goals: GoalPair,
    true_goal: GoalIndex,
}

/// Everything the Mover may condition on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoverView {
    pub position: GridPosition,
    pub consumption: ConsumptionVector,
    pub true_goal: GoalIndex,
    pub goals: GoalPair,
    /// Steps taken so far. Scripted movers replay by this index.
    pub clock: u32,
}

/// Everything the Eater may condition on. Carries no true-goal identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EaterView {
    pub prev_position: GridPosition,
    pub new_position: GridPosition,
    pub last_mover_action: MoveDirection,
    pub consumption: ConsumptionVector,
    pub goals: GoalPair,
}

impl EaterView {
    pub fn move_class(&self) -> MoveClass {
        geometry::classify_move(self.prev_position, self.last_mover_action, &self.goals)
    }
}

impl GameState {
    /// Initial state at `clock = 0`. Initial consumption must be whole bananas.
    pub fn new(
        start: GridPosition,
        initial: ConsumptionVector,
        goals: GoalPair,
        true_goal: GoalIndex,
    ) -> Result<Self, EngineError> {
        if !initial.is_valid_initial() {
            return Err(EngineError::BadInitialConsumption(initial));
        }
        Ok(Self {
            position: start,
            consumption: initial,
            clock: 0,
            goals,
            true_goal,
        })
    }

    pub fn true_goal(&self) -> GoalIndex {
        self.true_goal
    }

    pub fn true_goal_position(&self) -> GridPosition {
        self.goals.get(self.true_goal)
    }

    pub fn is_terminal(&self) -> bool {
        self.position == self.true_goal_position()
    }

    pub fn mover_view(&self) -> MoverView {
        MoverView {
            position: self.position,
            consumption: self.consumption,
            true_goal: self.true_goal,
            goals: self.goals,
            clock: self.clock,
        }
    }

    pub fn eater_view(&self, dir: MoveDirection) -> EaterView {
        EaterView {
            prev_position: self.position,
            new_position: self.position.step(dir),
            last_mover_action: dir,
            consumption: self.consumption,
            goals: self.goals,
        }
    }

    /// Applies one full timestep with the given actions.
    pub fn apply(
        &self,
        dir: MoveDirection,
        eat: EaterAction,
    ) -> Result<(GameState, TranscriptStep), EngineError> {
        if self.is_terminal() {
            return Err(EngineError::AlreadyTerminal(self.position));
        }
        let move_class = geometry::classify_move(self.position, dir, &self.goals);
        let next = GameState {
            position: self.position.step(dir),
            consumption: self.consumption.after(eat),
            clock: self.clock + 1,
            ..*self
        };
        let step = TranscriptStep {
            mover_action: dir,
            move_class,
            eater_action: eat,
            consumption_after: next.consumption,
            position_after: next.position,
        };
        Ok((next, step))
    }

    /// Queries both strategies and applies one timestep.
    pub fn advance(
        &self,
        mover: &dyn MoverStrategy,
        eater: &dyn EaterStrategy,
    ) -> Result<(GameState, TranscriptStep), EngineError> {
        if self.is_terminal() {
            return Err(EngineError::AlreadyTerminal(self.position));
        }
        let dir = mover.choose(&self.mover_view())?;
        let eat = eater.choose(&self.eater_view(dir));
        self.apply(dir, eat)
    }
}

/// One recorded timestep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TranscriptStep {
    pub mover_action: MoveDirection,
    pub move_class: MoveClass,
    pub eater_action: EaterAction,
    pub consumption_after: ConsumptionVector,
    pub position_after: GridPosition,
}

/// A finished game: the initial state plus every timestep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub initial: GameState,
    pub steps: Vec<TranscriptStep>,
    pub terminal_time: u32,
}

/// One line of the JSON-lines transcript format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepRecord {
    pub t: u32,
    pub mover_action: MoveDirection,
    pub move_class: String,
    pub eater_action: EaterAction,
    pub b1_half: i64,
    pub b2_half: i64,
    pub x: i64,
    pub y: i64,
}

impl Transcript {
    pub fn final_consumption(&self) -> ConsumptionVector {
        self.steps
            .last()
            .map_or(self.initial.consumption, |s| s.consumption_after)
    }

    pub fn final_position(&self) -> GridPosition {
        self.steps
            .last()
            .map_or(self.initial.position, |s| s.position_after)
    }

    /// `b_i(T)`: consumption at goal `i` when the game ended.
    pub fn outcome(&self, i: GoalIndex) -> HalfUnits {
        self.final_consumption().get(i)
    }

    /// Consumption at the true goal when the game ended.
    pub fn true_goal_outcome(&self) -> HalfUnits {
        self.outcome(self.initial.true_goal())
    }

    pub fn move_classes(&self) -> impl Iterator<Item = MoveClass> + '_ {
        self.steps.iter().map(|s| s.move_class)
    }

    pub fn mover_actions(&self) -> Vec<MoveDirection> {
        self.steps.iter().map(|s| s.mover_action).collect()
    }

    pub fn eater_actions(&self) -> Vec<EaterAction> {
        self.steps.iter().map(|s| s.eater_action).collect()
    }

    /// Re-applies the recorded actions from the initial state and checks every
    /// recorded intermediate state. Returns the final state.
    pub fn replay(&self) -> Result<GameState, EngineError> {
        let mut state = self.initial;
        for (idx, step) in self.steps.iter().enumerate() {
            let (next, replayed) = state.apply(step.mover_action, step.eater_action)?;
            if replayed.position_after != step.position_after {
                return Err(EngineError::ReplayMismatch {
                    step: idx,
                    what: "position",
                });
            }
            if replayed.consumption_after != step.consumption_after {
                return Err(EngineError::ReplayMismatch {
                    step: idx,
                    what: "consumption",
                });
            }
            if replayed.move_class != step.move_class {
                return Err(EngineError::ReplayMismatch {
                    step: idx,
                    what: "move class",
                });
            }
            state = next;
        }
        if !state.is_terminal() {
            return Err(EngineError::ReplayMismatch {
                step: self.steps.len(),
                what: "final position is not the true goal",
            });
        }
        if state.clock != self.terminal_time {
            return Err(EngineError::ReplayMismatch {
                step: self.steps.len(),
                what: "terminal time",
            });
        }
        Ok(state)
    }

    pub fn records(&self) -> impl Iterator<Item = StepRecord> + '_ {
        self.steps.iter().enumerate().map(|(t, s)| StepRecord {
            t: t as u32,
            mover_action: s.mover_action,
            move_class: s.move_class.label(),
            eater_action: s.eater_action,
            b1_half: s.consumption_after.b1.0,
            b2_half: s.consumption_after.b2.0,
            x: s.position_after.x,
            y: s.position_after.y,
        })
    }

    /// Writes one JSON object per step.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<(), EngineError> {
        for record in self.records() {
            let line = serde_json::to_string(&record).expect("step records always serialize");
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    /// Reads a JSON-lines transcript. The format stores only steps, so the
    /// initial state comes from the caller. The result is replay-checked.
    pub fn read_jsonl<R: BufRead>(initial: GameState, input: R) -> Result<Self, EngineError> {
        let mut steps = Vec::new();
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let record: StepRecord = serde_json::from_str(&line)
                .map_err(|source| EngineError::Record { line: idx + 1, source })?;
            let move_class = MoveClass::parse_label(&record.move_class).ok_or_else(|| {
                EngineError::UnknownMoveClass {
                    line: idx + 1,
                    class: record.move_class.clone(),
                }
            })?;
            if record.t as usize != steps.len() {
                return Err(EngineError::ReplayMismatch {
                    step: steps.len(),
                    what: "time index",
                });
            }
            steps.push(TranscriptStep {
                mover_action: record.mover_action,
                move_class,
                eater_action: record.eater_action,
                consumption_after: ConsumptionVector::new(
                    HalfUnits(record.b1_half),
                    HalfUnits(record.b2_half),
                ),
                position_after: GridPosition::new(record.x, record.y),
            });
        }
        let transcript = Transcript {
            initial,
            terminal_time: steps.len() as u32,
            steps,
        };
        transcript.replay()?;
        Ok(transcript)
    }
}

/// `n^a + max(n^r_1, n^r_2) + 32` at the start position.
pub fn default_horizon_cap(start: GridPosition, goals: &GoalPair) -> u32 {
    let sc = step_counts(start, goals);
    (sc.ambiguous + sc.explicit[0].max(sc.explicit[1]) + 32) as u32
}

/// Plays one game to termination.
pub fn play(
    initial: GameState,
    mover: &dyn MoverStrategy,
    eater: &dyn EaterStrategy,
    horizon_cap: u32,
) -> Result<Transcript, EngineError> {
    if horizon_cap == 0 {
        return Err(EngineError::ZeroHorizon);
    }
    let mut state = initial;
    let mut steps = Vec::new();
    while !state.is_terminal() {
        if steps.len() as u32 >= horizon_cap {
            return Err(EngineError::HorizonExceeded { cap: horizon_cap });
        }
        let (next, step) = state.advance(mover, eater)?;
        steps.push(step);
        state = next;
    }
    Ok(Transcript {
        initial,
        terminal_time: state.clock,
        steps,
    })
}

/// The Eater's worst-case payoff `min(b_1(T) in game 1, b_2(T) in game 2)`.
pub fn eater_payoff(game1: &Transcript, game2: &Transcript) -> Result<HalfUnits, EngineError> {
    let (a, b) = (&game1.initial, &game2.initial);
    if a.true_goal() != GoalIndex::First || b.true_goal() != GoalIndex::Second {
        return Err(EngineError::MismatchedGames(
            "first transcript must have true goal 1, second true goal 2",
        ));
    }
    if a.position != b.position || a.consumption != b.consumption || a.goals != b.goals {
        return Err(EngineError::MismatchedGames(
            "start position, initial consumption and goals must agree",
        ));
    }
    Ok(game1
        .outcome(GoalIndex::First)
        .min(game2.outcome(GoalIndex::Second)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::{EquilibriumEater, EquilibriumMover, ConstantMover, ConstantEater};

    fn goals() -> GoalPair {
        GoalPair::new(GridPosition::new(0, 0), GridPosition::new(4, 0)).unwrap()
    }

    fn start(x: i64, y: i64, b: ConsumptionVector, i: GoalIndex) -> GameState {
        GameState::new(GridPosition::new(x, y), b, goals(), i).unwrap()
    }

    #[test]
    fn terminal_only_on_true_goal() {
        let z = ConsumptionVector::ZERO;
        assert!(start(0, 0, z, GoalIndex::First).is_terminal());
        assert!(!start(4, 0, z, GoalIndex::First).is_terminal());
        assert!(!start(1, 0, z, GoalIndex::First).is_terminal());
    }

    #[test]
    fn one_step_endgame() {
        let s = start(1, 0, ConsumptionVector::ZERO, GoalIndex::First);
        let (next, step) = s
            .advance(
                &ConstantMover(MoveDirection::Left),
                &ConstantEater(EaterAction::EatG1),
            )
            .unwrap();
        assert_eq!(next.position, GridPosition::new(0, 0));
        assert_eq!(next.consumption.b1, HalfUnits(2));
        assert!(next.is_terminal());
        assert_eq!(step.eater_action, EaterAction::EatG1);
    }

    #[test]
    fn ambiguous_step_with_split() {
        let s = start(2, 3, ConsumptionVector::ZERO, GoalIndex::First);
        let (next, step) = s
            .advance(
                &ConstantMover(MoveDirection::Down),
                &ConstantEater(EaterAction::EatHalf),
            )
            .unwrap();
        assert_eq!(step.move_class, MoveClass::Ambiguous);
        assert_eq!(next.consumption, ConsumptionVector::new(HalfUnits(1), HalfUnits(1)));
        assert_eq!(next.position, GridPosition::new(2, 2));
        assert_eq!(next.clock, 1);
    }

    #[test]
    fn advance_rejects_terminal_state() {
        let s = start(0, 0, ConsumptionVector::ZERO, GoalIndex::First);
        let err = s
            .advance(&ConstantMover(MoveDirection::Up), &EquilibriumEater)
            .unwrap_err();
        assert!(matches!(err, EngineError::AlreadyTerminal(_)));
    }

    #[test]
    fn play_immediate_termination() {
        let s = start(0, 0, ConsumptionVector::from_bananas(3, 0), GoalIndex::First);
        let tr = play(s, &EquilibriumMover, &EquilibriumEater, 10).unwrap();
        assert_eq!(tr.terminal_time, 0);
        assert!(tr.steps.is_empty());
        assert_eq!(tr.outcome(GoalIndex::First), HalfUnits(6));
    }

    #[test]
    fn play_equilibrium_symmetric_start() {
        let s = start(2, 3, ConsumptionVector::ZERO, GoalIndex::First);
        let tr = play(s, &EquilibriumMover, &EquilibriumEater, 64).unwrap();
        assert_eq!(tr.terminal_time, 5);
        assert_eq!(tr.final_consumption(), ConsumptionVector::new(HalfUnits(7), HalfUnits(3)));
        assert_eq!(tr.outcome(GoalIndex::First), HalfUnits(7));
        assert_eq!(tr.outcome(GoalIndex::Second), HalfUnits(3));
        let eats: Vec<_> = tr.eater_actions();
        assert_eq!(
            eats,
            [
                EaterAction::EatHalf,
                EaterAction::EatHalf,
                EaterAction::EatHalf,
                EaterAction::EatG1,
                EaterAction::EatG1
            ]
        );
    }

    #[test]
    fn play_horizon_exceeded() {
        let s = start(2, 3, ConsumptionVector::ZERO, GoalIndex::First);
        let err = play(s, &ConstantMover(MoveDirection::Up), &EquilibriumEater, 10).unwrap_err();
        assert!(matches!(err, EngineError::HorizonExceeded { cap: 10 }));
        assert!(matches!(
            play(s, &EquilibriumMover, &EquilibriumEater, 0),
            Err(EngineError::ZeroHorizon)
        ));
    }

    #[test]
    fn empty_transcript_outcome() {
        let s = start(0, 0, ConsumptionVector::ZERO, GoalIndex::First);
        let tr = play(s, &EquilibriumMover, &EquilibriumEater, 1).unwrap();
        assert_eq!(tr.outcome(GoalIndex::First), HalfUnits::ZERO);
    }

    #[test]
    fn eater_payoff_takes_the_minimum() {
        let run = |i| {
            play(
                start(0, 3, ConsumptionVector::ZERO, i),
                &EquilibriumMover,
                &EquilibriumEater,
                64,
            )
            .unwrap()
        };
        let (t1, t2) = (run(GoalIndex::First), run(GoalIndex::Second));
        assert_eq!(t1.outcome(GoalIndex::First), HalfUnits(6));
        assert_eq!(t2.outcome(GoalIndex::Second), HalfUnits(8));
        assert_eq!(eater_payoff(&t1, &t2).unwrap(), HalfUnits(6));
        assert!(eater_payoff(&t2, &t1).is_err());

        let other = play(
            start(2, 3, ConsumptionVector::ZERO, GoalIndex::Second),
            &EquilibriumMover,
            &EquilibriumEater,
            64,
        )
        .unwrap();
        assert!(matches!(
            eater_payoff(&t1, &other),
            Err(EngineError::MismatchedGames(_))
        ));
    }

    #[test]
    fn odd_initial_consumption_rejected() {
        let b = ConsumptionVector::new(HalfUnits(1), HalfUnits(0));
        assert!(GameState::new(GridPosition::new(1, 1), b, goals(), GoalIndex::First).is_err());
        let b = ConsumptionVector::new(HalfUnits(-2), HalfUnits(0));
        assert!(GameState::new(GridPosition::new(1, 1), b, goals(), GoalIndex::First).is_err());
    }

    #[test]
    fn jsonl_roundtrip_and_tamper_detection() {
        let s = start(2, 3, ConsumptionVector::ZERO, GoalIndex::First);
        let tr = play(s, &EquilibriumMover, &EquilibriumEater, 64).unwrap();
        let mut buf = Vec::new();
        tr.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 5);
        let first = text.lines().next().unwrap();
        assert_eq!(
            first,
            r#"{"t":0,"mover_action":"down","move_class":"ambiguous","eater_action":"eat_half","b1_half":1,"b2_half":1,"x":2,"y":2}"#
        );
        let back = Transcript::read_jsonl(s, text.as_bytes()).unwrap();
        assert_eq!(back, tr);

        let tampered = text.replacen(r#""b1_half":1"#, r#""b1_half":2"#, 1);
        assert!(matches!(
            Transcript::read_jsonl(s, tampered.as_bytes()),
            Err(EngineError::ReplayMismatch { step: 0, .. })
        ));
        let bad_action = text.replacen("eat_half", "eat_all", 1);
        assert!(matches!(
            Transcript::read_jsonl(s, bad_action.as_bytes()),
            Err(EngineError::Record { line: 1, .. })
        ));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(HalfUnits(7).decimal(), "3.5");
        assert_eq!(HalfUnits(8).decimal(), "4");
        assert_eq!(HalfUnits(-3).decimal(), "-1.5");
        assert_eq!(HalfUnits(0).decimal(), "0");
    }

    #[test]
    fn default_cap() {
        // n^a = 3, max n^r = 4
        assert_eq!(default_horizon_cap(GridPosition::new(0, 3), &goals()), 39);
    }
}
