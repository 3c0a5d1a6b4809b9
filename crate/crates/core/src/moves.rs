//! Local rewrites of event words realising Legendrian isotopies of fronts.
//!
//! Three families of moves are implemented:
//!
//! * `CommuteDistant`: two adjacent events that touch disjoint, non-adjacent
//!   strand ranges exchange x-order, with levels re-indexed.
//! * `Triangle`: `X(a) X(b) X(a)` with `|a - b| = 1` becomes `X(b) X(a) X(b)`.
//! * `CrossingPastCusp`: a strand slides through a cusp, creating or removing
//!   the two crossings with the cusp's branches. The catalog:
//!
//! | pattern            | single event | expanded form          | needs        |
//! |--------------------|--------------|------------------------|--------------|
//! | `LeftAcrossLower`  | `L(k)`       | `L(k+1) X(k) X(k+1)`   | `k <= m`     |
//! | `LeftAcrossUpper`  | `L(k+1)`     | `L(k) X(k+1) X(k)`     | `k >= 1`     |
//! | `RightAcrossLower` | `R(k)`       | `X(k+1) X(k) R(k+1)`   | `k + 2 <= m` |
//! | `RightAcrossUpper` | `R(k+1)`     | `X(k) X(k+1) R(k)`     | `k >= 1`     |
//!
//! Here `m` is the strand count before the event. Forward expands, backward
//! contracts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::front::{Event, EventKind, Front, Orientation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CuspPattern {
    LeftAcrossLower,
    LeftAcrossUpper,
    RightAcrossLower,
    RightAcrossUpper,
}

impl CuspPattern {
    pub const ALL: [CuspPattern; 4] = [
        CuspPattern::LeftAcrossLower,
        CuspPattern::LeftAcrossUpper,
        CuspPattern::RightAcrossLower,
        CuspPattern::RightAcrossUpper,
    ];

    /// The contracted and expanded forms around cusp level `k`.
    fn forms(self, k: usize) -> (Event, [Event; 3]) {
        let (l, x, r) = (Event::left_cusp, Event::crossing, Event::right_cusp);
        match self {
            CuspPattern::LeftAcrossLower => (l(k), [l(k + 1), x(k), x(k + 1)]),
            CuspPattern::LeftAcrossUpper => (l(k + 1), [l(k), x(k + 1), x(k)]),
            CuspPattern::RightAcrossLower => (r(k), [x(k + 1), x(k), r(k + 1)]),
            CuspPattern::RightAcrossUpper => (r(k + 1), [x(k), x(k + 1), r(k)]),
        }
    }

    /// The `k` for which `event` is the contracted form, if the pattern
    /// fits with `m` strands present before it.
    fn contracted_level(self, event: Event, m: usize) -> Option<usize> {
        let j = event.level;
        match (self, event.kind) {
            (CuspPattern::LeftAcrossLower, EventKind::LeftCusp) if j <= m => Some(j),
            (CuspPattern::LeftAcrossUpper, EventKind::LeftCusp) if j >= 2 => Some(j - 1),
            (CuspPattern::RightAcrossLower, EventKind::RightCusp) if j + 2 <= m => Some(j),
            (CuspPattern::RightAcrossUpper, EventKind::RightCusp) if j >= 2 => Some(j - 1),
            _ => None,
        }
    }

    /// The `k` for which `window` is the expanded form.
    fn expanded_level(self, window: &[Event]) -> Option<usize> {
        let anchor = match self {
            CuspPattern::LeftAcrossLower | CuspPattern::LeftAcrossUpper => window[1].level,
            CuspPattern::RightAcrossLower | CuspPattern::RightAcrossUpper => window[2].level,
        };
        let k = match self {
            CuspPattern::LeftAcrossLower => window[1].level,
            CuspPattern::LeftAcrossUpper => window[0].level,
            CuspPattern::RightAcrossLower => window[1].level,
            CuspPattern::RightAcrossUpper => window[0].level,
        };
        (anchor >= 1 && k >= 1 && self.forms(k).1 == window).then_some(k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    CommuteDistant,
    Triangle,
    CrossingPastCusp(CuspPattern),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveDirection {
    Forward,
    Backward,
}

/// A rewrite at event index `position` (0-based).
///
/// `CommuteDistant` and `Triangle` are their own inverses and always use
/// `Forward`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveRewrite {
    pub position: usize,
    pub kind: MoveKind,
    pub direction: MoveDirection,
}

impl MoveRewrite {
    /// The rewrite that undoes this one when applied to its output.
    pub fn inverse(&self) -> MoveRewrite {
        let direction = match (self.kind, self.direction) {
            (MoveKind::CrossingPastCusp(_), MoveDirection::Forward) => MoveDirection::Backward,
            (MoveKind::CrossingPastCusp(_), MoveDirection::Backward) => MoveDirection::Forward,
            (_, d) => d,
        };
        MoveRewrite { direction, ..*self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move {0:?} does not apply")]
    NotApplicable(MoveRewrite),
}

fn raw_commute(first: Event, second: Event) -> Option<(Event, Event)> {
    use EventKind::*;
    let (a, b) = (first.level as isize, second.level as isize);
    let ev = |kind, level: isize| Event {
        kind,
        level: level as usize,
    };
    let pair = |k1, l1, k2, l2| Some((ev(k1, l1), ev(k2, l2)));
    match (first.kind, second.kind) {
        (Crossing, Crossing) if (a - b).abs() >= 2 => pair(Crossing, b, Crossing, a),
        (Crossing, LeftCusp) if b <= a => pair(LeftCusp, b, Crossing, a + 2),
        (Crossing, LeftCusp) if b >= a + 2 => pair(LeftCusp, b, Crossing, a),
        (LeftCusp, Crossing) if b + 2 <= a => pair(Crossing, b, LeftCusp, a),
        (LeftCusp, Crossing) if b >= a + 2 => pair(Crossing, b - 2, LeftCusp, a),
        (Crossing, RightCusp) if b + 2 <= a => pair(RightCusp, b, Crossing, a - 2),
        (Crossing, RightCusp) if b >= a + 2 => pair(RightCusp, b, Crossing, a),
        (RightCusp, Crossing) if b + 2 <= a => pair(Crossing, b, RightCusp, a),
        (RightCusp, Crossing) if b >= a => pair(Crossing, b + 2, RightCusp, a),
        (LeftCusp, LeftCusp) if b <= a => pair(LeftCusp, b, LeftCusp, a + 2),
        (LeftCusp, LeftCusp) if b >= a + 2 => pair(LeftCusp, b - 2, LeftCusp, a),
        (RightCusp, RightCusp) if b + 2 <= a => pair(RightCusp, b, RightCusp, a - 2),
        (RightCusp, RightCusp) if b >= a => pair(RightCusp, b + 2, RightCusp, a),
        (LeftCusp, RightCusp) if b + 2 <= a => pair(RightCusp, b, LeftCusp, a - 2),
        (LeftCusp, RightCusp) if b >= a + 2 => pair(RightCusp, b - 2, LeftCusp, a),
        (RightCusp, LeftCusp) if b <= a => pair(LeftCusp, b, RightCusp, a + 2),
        (RightCusp, LeftCusp) if b > a => pair(LeftCusp, b + 2, RightCusp, a),
        _ => None,
    }
}

/// Exchanges two adjacent events whose strand ranges are disjoint and
/// non-adjacent. Only swaps whose re-swap restores the input are allowed,
/// which keeps the move its own inverse.
pub fn commute(first: Event, second: Event) -> Option<(Event, Event)> {
    let swapped = raw_commute(first, second)?;
    (raw_commute(swapped.0, swapped.1) == Some((first, second))).then_some(swapped)
}

fn triangle(window: &[Event]) -> Option<[Event; 3]> {
    let [x, y, z] = window else { return None };
    let all_crossings = x.is_crossing() && y.is_crossing() && z.is_crossing();
    (all_crossings && x.level == z.level && x.level.abs_diff(y.level) == 1).then_some([*y, *x, *y])
}

fn rewrite(front: &Front, mv: &MoveRewrite) -> Option<Vec<Event>> {
    let events = front.events();
    let i = mv.position;
    let mut out = events.to_vec();
    match (mv.kind, mv.direction) {
        (MoveKind::CommuteDistant, MoveDirection::Forward) => {
            let (a, b) = commute(*events.get(i)?, *events.get(i + 1)?)?;
            out[i] = a;
            out[i + 1] = b;
        }
        (MoveKind::Triangle, MoveDirection::Forward) => {
            let new = triangle(events.get(i..i + 3)?)?;
            out[i..i + 3].copy_from_slice(&new);
        }
        (MoveKind::CrossingPastCusp(p), MoveDirection::Forward) => {
            let k = p.contracted_level(*events.get(i)?, front.strands_before(i))?;
            out.splice(i..i + 1, p.forms(k).1);
        }
        (MoveKind::CrossingPastCusp(p), MoveDirection::Backward) => {
            let k = p.expanded_level(events.get(i..i + 3)?)?;
            out.splice(i..i + 3, [p.forms(k).0]);
        }
        _ => return None,
    }
    Some(out)
}

/// Every rewrite that applies somewhere in the front, ordered by position
/// and then kind.
pub fn applicable(front: &Front) -> Vec<MoveRewrite> {
    let mut moves = Vec::new();
    let forward = |kind| MoveRewrite {
        position: 0,
        kind,
        direction: MoveDirection::Forward,
    };
    for position in 0..front.len() {
        let mut candidates = vec![
            forward(MoveKind::CommuteDistant),
            forward(MoveKind::Triangle),
        ];
        for p in CuspPattern::ALL {
            for direction in [MoveDirection::Forward, MoveDirection::Backward] {
                candidates.push(MoveRewrite {
                    position,
                    kind: MoveKind::CrossingPastCusp(p),
                    direction,
                });
            }
        }
        for mut mv in candidates {
            mv.position = position;
            if rewrite(front, &mv).is_some() {
                moves.push(mv);
            }
        }
    }
    moves.sort();
    moves
}

pub fn apply(front: &Front, mv: &MoveRewrite) -> Result<Front, MoveError> {
    rewrite(front, mv)
        .and_then(|w| Front::new(w).ok())
        .ok_or(MoveError::NotApplicable(*mv))
}

/// Applies a move and carries an orientation of `front` across it.
///
/// Moves keep every cusp and its upper and lower branches; only two left
/// cusps exchanging x-order changes how the cusps are indexed.
pub fn apply_oriented(
    front: &Front,
    orientation: &Orientation,
    mv: &MoveRewrite,
) -> Result<(Front, Orientation), MoveError> {
    let next = apply(front, mv)?;
    let mut upper = orientation.left_cusp_directions();
    let events = front.events();
    let i = mv.position;
    let swaps_left_cusps = mv.kind == MoveKind::CommuteDistant
        && events[i].kind == EventKind::LeftCusp
        && events[i + 1].kind == EventKind::LeftCusp;
    if swaps_left_cusps {
        let ordinal = events[..i]
            .iter()
            .filter(|e| e.kind == EventKind::LeftCusp)
            .count();
        upper.swap(ordinal, ordinal + 1);
    }
    let carried =
        Orientation::from_left_cusps(&next, &upper).expect("moves preserve coherent orientations");
    Ok((next, carried))
}

/// Result of a random walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzOutcome {
    pub front: Front,
    /// The starting front's canonical orientation carried along the walk.
    pub orientation: Orientation,
    pub applied: Vec<MoveRewrite>,
    /// Set when no move applied; holds the number of steps taken before that.
    pub stuck_at: Option<usize>,
}

impl FuzzOutcome {
    pub fn is_stuck(&self) -> bool {
        self.stuck_at.is_some()
    }
}

/// Applies `steps` moves, each drawn uniformly from [`applicable`], using a
/// ChaCha8 stream seeded with `seed`.
pub fn fuzz(front: &Front, seed: u64, steps: usize) -> FuzzOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = front.clone();
    let mut orientation = front.orientation();
    let mut applied = Vec::with_capacity(steps);
    let mut stuck_at = None;
    for step in 0..steps {
        let moves = applicable(&current);
        if moves.is_empty() {
            stuck_at = Some(step);
            break;
        }
        let mv = moves[rng.gen_range(0..moves.len())];
        (current, orientation) =
            apply_oriented(&current, &orientation, &mv).expect("listed moves apply");
        applied.push(mv);
    }
    FuzzOutcome {
        front: current,
        orientation,
        applied,
        stuck_at,
    }
}

/// Reorders a front by commutations so that few strands are live at once.
///
/// Greedily emits next whichever remaining event can be commuted to the
/// front of the remainder, preferring right cusps, then crossings, then left
/// cusps, and the earliest such event on ties.
pub fn narrow(front: &Front) -> Front {
    fn rank(kind: EventKind) -> u8 {
        match kind {
            EventKind::RightCusp => 0,
            EventKind::Crossing => 1,
            EventKind::LeftCusp => 2,
        }
    }
    fn bubble(rest: &[Event], i: usize) -> Option<Vec<Event>> {
        let mut w = rest.to_vec();
        for j in (0..i).rev() {
            let (a, b) = commute(w[j], w[j + 1])?;
            w[j] = a;
            w[j + 1] = b;
        }
        Some(w)
    }
    let mut rest = front.events().to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<((u8, usize), Vec<Event>)> = None;
        for i in 0..rest.len() {
            if let Some(w) = bubble(&rest, i) {
                let key = (rank(w[0].kind), i);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, w));
                }
            }
        }
        let (_, w) = best.expect("the first event always qualifies");
        out.push(w[0]);
        rest = w[1..].to_vec();
    }
    Front::new(out).expect("commutations preserve validity")
}
