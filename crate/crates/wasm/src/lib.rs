//! Browser bindings. Every export returns a JSON string; values stay in
//! integer half-units and the page divides by two for display.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use mover_eater::engine::{default_horizon_cap, play, ConsumptionVector, GameState};
use mover_eater::geometry::{GoalIndex, GoalPair, GridPosition};
use mover_eater::strategy::{EaterSpec, MoverSpec};
use mover_eater::sweep::{self, switch_boundary, Window};

/// Largest window half-width the page may request.
pub const MAX_RADIUS: i64 = 40;

#[derive(Debug, Clone, Copy)]
pub struct Scene {
    pub goals: GoalPair,
    pub initial: ConsumptionVector,
}

impl Scene {
    pub fn new(g1: (i64, i64), g2: (i64, i64), b0: (i64, i64)) -> Result<Self, String> {
        let goals = GoalPair::new(g1.into(), g2.into()).map_err(|e| e.to_string())?;
        if b0.0 < 0 || b0.1 < 0 {
            return Err("initial consumption must be nonnegative".into());
        }
        Ok(Self {
            goals,
            initial: ConsumptionVector::from_bananas(b0.0, b0.1),
        })
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn goal_index(n: u8) -> Result<GoalIndex, String> {
    GoalIndex::try_from(i64::from(n)).map_err(|e| e.to_string())
}

/// Closed-form value map over the square of half-width `radius` around the
/// goals, plus the cells where the minimizing game switches.
pub fn value_map_json(scene: &Scene, radius: i64) -> Result<String, String> {
    if !(0..=MAX_RADIUS).contains(&radius) {
        return Err(format!("radius must be in 0..={MAX_RADIUS}"));
    }
    let window = Window::around(&scene.goals, radius);
    let rows = sweep::value_map(&scene.goals, scene.initial, &window, u64::MAX)
        .map_err(|e| e.to_string())?;
    let boundary = switch_boundary(&rows);
    to_json(&json!({
        "window": {
            "x_min": window.x_min,
            "x_max": window.x_max,
            "y_min": window.y_min,
            "y_max": window.y_max,
        },
        "goals": scene.goals,
        "rows": rows,
        "boundary": boundary,
    }))
}

/// Equilibrium, explicit-first and exaggeration paths from one start.
pub fn compare_paths_json(
    scene: &Scene,
    start: (i64, i64),
    true_goal: u8,
    depth: u32,
    eater: &str,
) -> Result<String, String> {
    let eater = eater.parse::<EaterSpec>().map_err(|e| e.to_string())?.build();
    let cmp = sweep::compare_paths(
        start.into(),
        scene.initial,
        &scene.goals,
        goal_index(true_goal)?,
        depth,
        &eater,
    )
    .map_err(|e| e.to_string())?;
    to_json(&cmp)
}

/// One full game as transcript records.
pub fn play_json(
    scene: &Scene,
    start: (i64, i64),
    true_goal: u8,
    mover: &str,
    eater: &str,
) -> Result<String, String> {
    let start: GridPosition = start.into();
    let true_goal = goal_index(true_goal)?;
    let mover = mover
        .parse::<MoverSpec>()
        .and_then(|m| m.build(start, &scene.goals, true_goal))
        .map_err(|e| e.to_string())?;
    let eater = eater.parse::<EaterSpec>().map_err(|e| e.to_string())?.build();
    let state = GameState::new(start, scene.initial, scene.goals, true_goal)
        .map_err(|e| e.to_string())?;
    let tr = play(state, &mover, &eater, default_horizon_cap(start, &scene.goals))
        .map_err(|e| e.to_string())?;
    let records: Vec<_> = tr.records().collect();
    to_json(&json!({
        "terminal_time": tr.terminal_time,
        "final": tr.final_consumption(),
        "records": records,
    }))
}

fn scene(g: [i32; 4], b: [i32; 2]) -> Result<Scene, String> {
    Scene::new(
        (g[0].into(), g[1].into()),
        (g[2].into(), g[3].into()),
        (b[0].into(), b[1].into()),
    )
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = valueMap)]
pub fn value_map(
    gx1: i32,
    gy1: i32,
    gx2: i32,
    gy2: i32,
    b1: i32,
    b2: i32,
    radius: i32,
) -> Result<String, JsError> {
    js(scene([gx1, gy1, gx2, gy2], [b1, b2]).and_then(|s| value_map_json(&s, radius.into())))
}

#[wasm_bindgen(js_name = comparePaths)]
#[allow(clippy::too_many_arguments)]
pub fn compare_paths(
    gx1: i32,
    gy1: i32,
    gx2: i32,
    gy2: i32,
    b1: i32,
    b2: i32,
    sx: i32,
    sy: i32,
    true_goal: u8,
    depth: u32,
    eater: &str,
) -> Result<String, JsError> {
    js(scene([gx1, gy1, gx2, gy2], [b1, b2])
        .and_then(|s| compare_paths_json(&s, (sx.into(), sy.into()), true_goal, depth, eater)))
}

#[wasm_bindgen(js_name = playGame)]
#[allow(clippy::too_many_arguments)]
pub fn play_game(
    gx1: i32,
    gy1: i32,
    gx2: i32,
    gy2: i32,
    b1: i32,
    b2: i32,
    sx: i32,
    sy: i32,
    true_goal: u8,
    mover: &str,
    eater: &str,
) -> Result<String, JsError> {
    js(scene([gx1, gy1, gx2, gy2], [b1, b2])
        .and_then(|s| play_json(&s, (sx.into(), sy.into()), true_goal, mover, eater)))
}
