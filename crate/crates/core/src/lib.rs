//! The Mover-Eater game: a two-player grid game with asymmetric information.
//!
//! A Mover walks to one of two candidate goals (only it knows which one is
//! real). After every step an Eater, who sees only the step, consumes from the
//! goals and tries to maximize the worst-case consumption at the true goal.
//!
//! Modules:
//! - [`geometry`]: distances, move classification, regions and step counts.
//! - [`engine`]: the state machine, transcripts and payoffs.
//! - [`strategy`]: strategy traits and the concrete policies.
//! - [`value`]: c-factors and the closed-form equilibrium outcome.
//! - [`oracle`]: brute-force best responses and equilibrium audits.
//! - [`sweep`]: grid sweeps (value maps, path comparisons) shared by the
//!   CLI and the browser demo.

pub mod engine;
pub mod geometry;
pub mod oracle;
pub mod strategy;
pub mod sweep;
pub mod value;

pub use engine::{
    ConsumptionVector, EaterAction, EaterView, EngineError, GameState, HalfUnits, MoverView,
    Transcript, TranscriptStep,
};
pub use geometry::{
    GoalIndex, GoalPair, GridPosition, MoveClass, MoveDirection, Region, StepCounts,
};
pub use strategy::{EaterStrategy, MoverStrategy};
