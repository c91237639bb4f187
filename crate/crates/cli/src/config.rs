use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use mover_eater::engine::ConsumptionVector;
use mover_eater::geometry::{GoalIndex, GoalPair, GridPosition};
use mover_eater::strategy::{EaterSpec, MoverSpec};
use mover_eater::sweep::Window;

/// One scenario, read from a single JSON document. Positions are `[x, y]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub goals: [[i64; 2]; 2],
    #[serde(default)]
    pub start: Option<[i64; 2]>,
    /// Initial consumption in whole bananas.
    #[serde(default)]
    pub b0: [i64; 2],
    #[serde(default)]
    pub true_goal: Option<u8>,
    #[serde(default = "default_strategy")]
    pub mover: String,
    #[serde(default = "default_strategy")]
    pub eater: String,
    #[serde(default)]
    pub window: Option<WindowConfig>,
    #[serde(default)]
    pub horizon_cap: Option<u32>,
    #[serde(default)]
    pub slack: Option<u32>,
    #[serde(default)]
    pub budget: Option<u64>,
    #[serde(default = "default_depth")]
    pub exaggeration_depth: u32,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowConfig {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

fn default_strategy() -> String {
    "equilibrium".into()
}

fn default_depth() -> u32 {
    1
}

fn pos([x, y]: [i64; 2]) -> GridPosition {
    GridPosition::new(x, y)
}

impl ScenarioConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: Self = serde_json::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        config.goal_pair()?;
        config.initial()?;
        if config.horizon_cap == Some(0) {
            bail!("horizon_cap must be positive");
        }
        Ok(config)
    }

    pub fn goal_pair(&self) -> Result<GoalPair> {
        Ok(GoalPair::new(pos(self.goals[0]), pos(self.goals[1]))?)
    }

    pub fn initial(&self) -> Result<ConsumptionVector> {
        let [b1, b2] = self.b0;
        if b1 < 0 || b2 < 0 {
            bail!("b0 must be nonnegative whole bananas, got [{b1}, {b2}]");
        }
        Ok(ConsumptionVector::from_bananas(b1, b2))
    }

    pub fn start(&self) -> Result<GridPosition> {
        self.start
            .map(pos)
            .ok_or_else(|| anyhow!("config needs a start position"))
    }

    pub fn true_goal(&self) -> Result<GoalIndex> {
        let n = self
            .true_goal
            .ok_or_else(|| anyhow!("config needs true_goal (1 or 2)"))?;
        Ok(GoalIndex::try_from(i64::from(n))?)
    }

    pub fn window(&self) -> Result<Window> {
        let w = self
            .window
            .ok_or_else(|| anyhow!("config needs a window for this command"))?;
        Ok(Window::new(w.x_min, w.x_max, w.y_min, w.y_max)?)
    }

    pub fn mover(&self) -> Result<MoverSpec> {
        Ok(self.mover.parse()?)
    }

    pub fn eater(&self) -> Result<EaterSpec> {
        Ok(self.eater.parse()?)
    }
}
