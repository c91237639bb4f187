//! Cross-checks the factored Eater search against raw enumeration of every
//! pair of Eater action sequences on tiny instances.

use mover_eater::engine::{ConsumptionVector, EaterAction, GameState, HalfUnits, MoverView};
use mover_eater::geometry::{
    classify_move, shortening_moves, step_counts, GoalIndex, GoalPair, GridPosition,
    MoveDirection,
};
use mover_eater::oracle::{eater_best_response, SearchBounds};
use mover_eater::strategy::{
    build_explicit_first_path, EquilibriumEater, EquilibriumMover, MoverStrategy, ScriptedMover,
    StrategyError,
};

/// Shortest-path Mover whose move class depends on the consumption vector:
/// it prefers explicit moves while `b1 < b2`, ambiguous ones otherwise.
struct Reactive;

impl MoverStrategy for Reactive {
    fn choose(&self, view: &MoverView) -> Result<MoveDirection, StrategyError> {
        let target = view.goals.get(view.true_goal);
        let prefer_ambiguous = view.consumption.b1 >= view.consumption.b2;
        let moves: Vec<_> = shortening_moves(view.position, target).collect();
        let pick = moves
            .iter()
            .copied()
            .find(|&d| classify_move(view.position, d, &view.goals).is_ambiguous() == prefer_ambiguous)
            .or(moves.first().copied())
            .ok_or(StrategyError::AtGoal(view.position))?;
        Ok(pick)
    }
}

fn sequences(len: usize) -> Vec<Vec<EaterAction>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                EaterAction::ALL.into_iter().map(move |a| {
                    let mut s = s.clone();
                    s.push(a);
                    s
                })
            })
            .collect();
    }
    out
}

/// Plays a game with a fixed action list; returns the Eater's observation
/// at every step and the final consumption at the true goal.
fn run(
    mut state: GameState,
    mover: &dyn MoverStrategy,
    actions: &[EaterAction],
) -> Option<(Vec<mover_eater::engine::EaterView>, HalfUnits)> {
    let mut views = Vec::new();
    for &eat in actions {
        if state.is_terminal() {
            return None;
        }
        let dir = mover.choose(&state.mover_view()).unwrap();
        views.push(state.eater_view(dir));
        state = state.apply(dir, eat).unwrap().0;
    }
    state
        .is_terminal()
        .then(|| (views, state.consumption.get(state.true_goal())))
}

/// Max over every consistent pair of action sequences of the worst case.
/// A pair is consistent when identical observations get identical actions.
fn raw_best(
    start: GridPosition,
    b0: ConsumptionVector,
    goals: &GoalPair,
    movers: [&dyn MoverStrategy; 2],
    lengths: [usize; 2],
) -> HalfUnits {
    let g1 = GameState::new(start, b0, *goals, GoalIndex::First).unwrap();
    let g2 = GameState::new(start, b0, *goals, GoalIndex::Second).unwrap();
    let runs1: Vec<_> = sequences(lengths[0])
        .into_iter()
        .filter_map(|s| run(g1, movers[0], &s).map(|r| (s, r)))
        .collect();
    let runs2: Vec<_> = sequences(lengths[1])
        .into_iter()
        .filter_map(|s| run(g2, movers[1], &s).map(|r| (s, r)))
        .collect();
    let mut best = None;
    for (s1, (v1, o1)) in &runs1 {
        for (s2, (v2, o2)) in &runs2 {
            let consistent = v1
                .iter()
                .zip(v2)
                .zip(s1.iter().zip(s2))
                .all(|((a, b), (x, y))| a != b || x == y);
            if consistent {
                let value = (*o1).min(*o2);
                if best.is_none_or(|b| value > b) {
                    best = Some(value);
                }
            }
        }
    }
    best.expect("at least one consistent pair")
}

fn goals(a: (i64, i64), b: (i64, i64)) -> GoalPair {
    GoalPair::new(a.into(), b.into()).unwrap()
}

#[test]
fn factored_search_matches_raw_enumeration_for_equilibrium_movers() {
    let cases = [
        (goals((0, 0), (4, 0)), (2, 1), (0, 0)),
        (goals((0, 0), (4, 0)), (2, 2), (0, 0)),
        (goals((0, 0), (4, 0)), (2, 3), (0, 0)),
        (goals((0, 0), (4, 0)), (0, 2), (0, 0)),
        (goals((0, 0), (4, 0)), (5, 1), (0, 0)),
        (goals((0, 0), (2, 0)), (1, 3), (1, 0)),
        (goals((0, 0), (2, 2)), (3, 3), (0, 1)),
        (goals((0, 0), (4, 0)), (2, 0), (0, 0)),
    ];
    for (g, (x, y), (b1, b2)) in cases {
        let start = GridPosition::new(x, y);
        let b0 = ConsumptionVector::from_bananas(b1, b2);
        let sc = step_counts(start, &g);
        let lengths = [sc.shortest(GoalIndex::First) as usize, sc.shortest(GoalIndex::Second) as usize];
        assert!(lengths.iter().all(|&l| l <= 6));
        let movers: [&dyn MoverStrategy; 2] = [&EquilibriumMover, &EquilibriumMover];
        let raw = raw_best(start, b0, &g, movers, lengths);
        let report =
            eater_best_response(start, b0, &g, movers, &EquilibriumEater, SearchBounds::default())
                .unwrap();
        assert_eq!(report.best_deviation_payoff, raw, "start {start}");
        assert_eq!(report.equilibrium_payoff, raw, "start {start}");
    }
}

#[test]
fn factored_search_matches_raw_enumeration_for_scripted_movers() {
    let g = goals((0, 0), (4, 0));
    for (x, y) in [(2, 2), (3, 1), (1, 2)] {
        let start = GridPosition::new(x, y);
        let path = |i| build_explicit_first_path(start, &g, i);
        let m1 = ScriptedMover::new(path(GoalIndex::First), start, &g, GoalIndex::First).unwrap();
        let m2 = ScriptedMover::new(path(GoalIndex::Second), start, &g, GoalIndex::Second).unwrap();
        let lengths = [m1.path().len(), m2.path().len()];
        let movers: [&dyn MoverStrategy; 2] = [&m1, &m2];
        let raw = raw_best(start, ConsumptionVector::ZERO, &g, movers, lengths);
        let report = eater_best_response(
            start,
            ConsumptionVector::ZERO,
            &g,
            movers,
            &EquilibriumEater,
            SearchBounds::default(),
        )
        .unwrap();
        assert_eq!(report.best_deviation_payoff, raw, "start {start}");
    }
}

#[test]
fn factored_search_matches_raw_enumeration_for_reactive_movers() {
    let g = goals((0, 0), (4, 0));
    for (x, y) in [(2, 2), (3, 1), (1, 2), (2, 3)] {
        let start = GridPosition::new(x, y);
        let sc = step_counts(start, &g);
        let lengths = [sc.shortest(GoalIndex::First) as usize, sc.shortest(GoalIndex::Second) as usize];
        let movers: [&dyn MoverStrategy; 2] = [&Reactive, &Reactive];
        let raw = raw_best(start, ConsumptionVector::ZERO, &g, movers, lengths);
        let report = eater_best_response(
            start,
            ConsumptionVector::ZERO,
            &g,
            movers,
            &EquilibriumEater,
            SearchBounds::default(),
        )
        .unwrap();
        assert_eq!(report.best_deviation_payoff, raw, "start {start}");
        if let Some(mover_eater::oracle::Witness::Eater { game1, game2 }) = &report.witness {
            game1.replay().unwrap();
            game2.replay().unwrap();
            assert_eq!(
                mover_eater::engine::eater_payoff(game1, game2).unwrap(),
                report.best_deviation_payoff
            );
        }
    }
}
