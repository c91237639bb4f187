//! Grid arithmetic on the unbounded integer lattice.
//!
//! Axes: `Up` is +y, `Down` is -y, `Left` is -x, `Right` is +x.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("goals must be distinct, both are at {0}")]
    CoincidentGoals(GridPosition),
    #[error("unknown move direction {0:?}")]
    UnknownDirection(String),
    #[error("goal index must be 1 or 2, got {0}")]
    BadGoalIndex(i64),
}

/// A lattice point. Coordinates are exact and unbounded.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct GridPosition {
    pub x: i64,
    pub y: i64,
}

impl GridPosition {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn step(self, dir: MoveDirection) -> Self {
        let (dx, dy) = dir.offset();
        Self::new(self.x + dx, self.y + dy)
    }
}

impl From<(i64, i64)> for GridPosition {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for GridPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Which of the two goals. Serialized as the number 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum GoalIndex {
    First,
    Second,
}

impl GoalIndex {
    pub const BOTH: [GoalIndex; 2] = [GoalIndex::First, GoalIndex::Second];

    pub fn other(self) -> Self {
        match self {
            GoalIndex::First => GoalIndex::Second,
            GoalIndex::Second => GoalIndex::First,
        }
    }

    /// Zero-based slot, for indexing `[T; 2]`.
    pub fn slot(self) -> usize {
        match self {
            GoalIndex::First => 0,
            GoalIndex::Second => 1,
        }
    }

    /// One-based number as used in configs and reports.
    pub fn number(self) -> u8 {
        self.slot() as u8 + 1
    }
}

impl TryFrom<i64> for GoalIndex {
    type Error = GeometryError;

    fn try_from(value: i64) -> Result<Self, Self::Error> {
        match value {
            1 => Ok(GoalIndex::First),
            2 => Ok(GoalIndex::Second),
            other => Err(GeometryError::BadGoalIndex(other)),
        }
    }
}

impl From<GoalIndex> for i64 {
    fn from(value: GoalIndex) -> Self {
        value.number() as i64
    }
}

impl fmt::Display for GoalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// The two candidate goals. Always distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[GridPosition; 2]", into = "[GridPosition; 2]")]
pub struct GoalPair {
    goals: [GridPosition; 2],
}

impl GoalPair {
    pub fn new(g1: GridPosition, g2: GridPosition) -> Result<Self, GeometryError> {
        if g1 == g2 {
            return Err(GeometryError::CoincidentGoals(g1));
        }
        Ok(Self { goals: [g1, g2] })
    }

    pub fn get(&self, i: GoalIndex) -> GridPosition {
        self.goals[i.slot()]
    }

    pub fn g1(&self) -> GridPosition {
        self.goals[0]
    }

    pub fn g2(&self) -> GridPosition {
        self.goals[1]
    }

    /// D: the Manhattan distance between the goals (at least 1).
    pub fn separation(&self) -> u64 {
        manhattan(self.goals[0], self.goals[1])
    }

    /// Distances from `p` to each goal, indexed by [`GoalIndex::slot`].
    pub fn distances(&self, p: GridPosition) -> [u64; 2] {
        [manhattan(p, self.goals[0]), manhattan(p, self.goals[1])]
    }

    pub fn distance(&self, p: GridPosition, i: GoalIndex) -> u64 {
        manhattan(p, self.get(i))
    }

    /// Inclusive bounds `(x_min, x_max, y_min, y_max)` of the goals' bounding box.
    pub fn bounding_box(&self) -> (i64, i64, i64, i64) {
        let [a, b] = self.goals;
        (a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y))
    }
}

impl TryFrom<[GridPosition; 2]> for GoalPair {
    type Error = GeometryError;

    fn try_from([g1, g2]: [GridPosition; 2]) -> Result<Self, Self::Error> {
        GoalPair::new(g1, g2)
    }
}

impl From<GoalPair> for [GridPosition; 2] {
    fn from(value: GoalPair) -> Self {
        value.goals
    }
}

/// One of the four Mover actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveDirection {
    Up,
    Down,
    Left,
    Right,
}

impl MoveDirection {
    /// All directions in tie-break priority order.
    pub const ALL: [MoveDirection; 4] = [
        MoveDirection::Up,
        MoveDirection::Down,
        MoveDirection::Left,
        MoveDirection::Right,
    ];

    pub fn offset(self) -> (i64, i64) {
        match self {
            MoveDirection::Up => (0, 1),
            MoveDirection::Down => (0, -1),
            MoveDirection::Left => (-1, 0),
            MoveDirection::Right => (1, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveDirection::Up => "up",
            MoveDirection::Down => "down",
            MoveDirection::Left => "left",
            MoveDirection::Right => "right",
        }
    }
}

impl fmt::Display for MoveDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveDirection {
    type Err = GeometryError;

    /// Case-insensitive; also accepts the initials `u`, `d`, `l`, `r`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "up" | "u" => Ok(MoveDirection::Up),
            "down" | "d" => Ok(MoveDirection::Down),
            "left" | "l" => Ok(MoveDirection::Left),
            "right" | "r" => Ok(MoveDirection::Right),
            _ => Err(GeometryError::UnknownDirection(s.to_string())),
        }
    }
}

/// Ambiguous moves change both goal distances equally; explicit moves close
/// on one goal while opening on the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveClass {
    Ambiguous,
    Explicit { toward: GoalIndex },
}

impl MoveClass {
    pub fn is_ambiguous(self) -> bool {
        matches!(self, MoveClass::Ambiguous)
    }

    /// Compact label: `ambiguous`, `explicit:1` or `explicit:2`.
    pub fn label(self) -> String {
        match self {
            MoveClass::Ambiguous => "ambiguous".to_string(),
            MoveClass::Explicit { toward } => format!("explicit:{toward}"),
        }
    }

    pub fn parse_label(s: &str) -> Option<Self> {
        match s {
            "ambiguous" => Some(MoveClass::Ambiguous),
            "explicit:1" => Some(MoveClass::Explicit {
                toward: GoalIndex::First,
            }),
            "explicit:2" => Some(MoveClass::Explicit {
                toward: GoalIndex::Second,
            }),
            _ => None,
        }
    }
}

/// Partition of the plane relative to the goals' bounding box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// Closed bounding box of the goals: no ambiguity.
    R1,
    /// Exactly one coordinate outside the goals' range: partial ambiguity.
    R2,
    /// Both coordinates outside: every move is ambiguous.
    R3,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::R1 => "R1",
            Region::R2 => "R2",
            Region::R3 => "R3",
        };
        f.write_str(s)
    }
}

/// Minimum ambiguous and explicit moves on a shortest path to each goal.
/// The ambiguous count is the same for both goals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StepCounts {
    pub ambiguous: u64,
    pub explicit: [u64; 2],
}

impl StepCounts {
    pub fn explicit_to(&self, i: GoalIndex) -> u64 {
        self.explicit[i.slot()]
    }

    /// Length of a shortest path to goal `i`.
    pub fn shortest(&self, i: GoalIndex) -> u64 {
        self.ambiguous + self.explicit_to(i)
    }
}

pub fn manhattan(a: GridPosition, b: GridPosition) -> u64 {
    a.x.abs_diff(b.x) + a.y.abs_diff(b.y)
}

/// Change in distance to `g` caused by stepping from `p` in `dir`. Always ±1.
pub fn delta_distance(p: GridPosition, dir: MoveDirection, g: GridPosition) -> i64 {
    manhattan(p.step(dir), g) as i64 - manhattan(p, g) as i64
}

pub fn classify_move(p: GridPosition, dir: MoveDirection, goals: &GoalPair) -> MoveClass {
    let d1 = delta_distance(p, dir, goals.g1());
    let d2 = delta_distance(p, dir, goals.g2());
    if d1 == d2 {
        MoveClass::Ambiguous
    } else if d1 < d2 {
        MoveClass::Explicit {
            toward: GoalIndex::First,
        }
    } else {
        MoveClass::Explicit {
            toward: GoalIndex::Second,
        }
    }
}

pub fn region_of(p: GridPosition, goals: &GoalPair) -> Region {
    let (x_min, x_max, y_min, y_max) = goals.bounding_box();
    let in_x = (x_min..=x_max).contains(&p.x);
    let in_y = (y_min..=y_max).contains(&p.y);
    match (in_x, in_y) {
        (true, true) => Region::R1,
        (false, false) => Region::R3,
        _ => Region::R2,
    }
}

pub fn step_counts(p: GridPosition, goals: &GoalPair) -> StepCounts {
    let [d1, d2] = goals.distances(p);
    let sep = goals.separation();
    // d1 + d2 >= D by the triangle inequality, and d1 + d2 = D (mod 2).
    let ambiguous = (d1 + d2 - sep) / 2;
    StepCounts {
        ambiguous,
        explicit: [d1 - ambiguous, d2 - ambiguous],
    }
}

/// Manhattan distance from `p` to the closed goal bounding box.
pub fn distance_to_box(p: GridPosition, goals: &GoalPair) -> u64 {
    let (x_min, x_max, y_min, y_max) = goals.bounding_box();
    let gap = |v: i64, lo: i64, hi: i64| -> u64 {
        if v < lo {
            lo.abs_diff(v)
        } else if v > hi {
            v.abs_diff(hi)
        } else {
            0
        }
    };
    gap(p.x, x_min, x_max) + gap(p.y, y_min, y_max)
}

/// Directions from `p` that shorten the distance to `target`, in priority order.
pub fn shortening_moves(
    p: GridPosition,
    target: GridPosition,
) -> impl Iterator<Item = MoveDirection> {
    MoveDirection::ALL
        .into_iter()
        .filter(move |&dir| delta_distance(p, dir, target) < 0)
}
