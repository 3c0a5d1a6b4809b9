//! Constructors for standard fronts and mirror operations.

use rand::Rng;
use thiserror::Error;

use crate::front::{Event, EventKind, Front};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

fn build(events: Vec<Event>) -> Front {
    Front::new(events).expect("generated words are valid")
}

fn left(k: usize) -> Event {
    Event::left_cusp(k)
}

fn cross(k: usize) -> Event {
    Event::crossing(k)
}

fn right(k: usize) -> Event {
    Event::right_cusp(k)
}

/// The standard unknot: `L1 R1`.
pub fn eye() -> Front {
    build(vec![left(1), right(1)])
}

/// `p` concentric eyes.
pub fn nested_unlink(p: usize) -> Result<Front, GeneratorError> {
    if p == 0 {
        return Err(GeneratorError::InvalidParams("p must be at least 1".into()));
    }
    let mut w: Vec<Event> = (1..=p).map(left).collect();
    w.extend((1..=p).rev().map(right));
    Ok(build(w))
}

/// `p` eyes stacked vertically.
pub fn stacked_unlink(p: usize) -> Result<Front, GeneratorError> {
    if p == 0 {
        return Err(GeneratorError::InvalidParams("p must be at least 1".into()));
    }
    let mut w: Vec<Event> = (0..p).map(|i| left(2 * i + 1)).collect();
    w.extend(std::iter::repeat_n(right(1), p));
    Ok(build(w))
}

/// The eye with one zigzag: `L1 L2 R3 R1`.
pub fn stabilized_eye() -> Front {
    build(vec![left(1), left(2), right(3), right(1)])
}

/// Nested-plat torus front: `p` nested eyes, `q` twist blocks
/// `X1 .. X(p-1)` on the top `p` strands, then the eyes are closed.
///
/// This is a front of the positive torus link `T(p, q)`.
pub fn torus_front(p: usize, q: usize) -> Result<Front, GeneratorError> {
    if p < 2 || q < 1 {
        return Err(GeneratorError::InvalidParams(format!(
            "torus front needs p >= 2 and q >= 1, got p={p}, q={q}"
        )));
    }
    let mut w: Vec<Event> = (1..=p).map(left).collect();
    for _ in 0..q {
        w.extend((1..p).map(cross));
    }
    w.extend((1..=p).rev().map(right));
    Ok(build(w))
}

/// Argyle front of the negative torus link `T(p, -q)`.
///
/// With `a <= b` the smaller and larger of `p, q`, the front has `b` left
/// cusps, `b` right cusps and `(a - 1) * b` crossings arranged as a diamond
/// lattice: `a` stacked eyes braid through a triangle of crossings, `b - a`
/// further eyes open in the middle, and the lattice then fans out to close
/// every eye at the top. This is the maximal Thurston–Bennequin form, with
/// `tb = -p * q`.
pub fn argyle_front(p: usize, q: usize) -> Result<Front, GeneratorError> {
    if p < 2 || q < 2 {
        return Err(GeneratorError::InvalidParams(format!(
            "argyle front needs p, q >= 2, got p={p}, q={q}"
        )));
    }
    let (a, b) = (p.min(q), p.max(q));
    let mut w: Vec<Event> = (0..a).map(|i| left(2 * i + 1)).collect();
    for t in 0..a - 1 {
        w.extend((2 + t..2 * a - 1 - t).step_by(2).map(cross));
    }
    w.extend((0..b - a).map(|i| left(a + 1 + 2 * i)));
    for t in (0..a - 1).rev() {
        w.extend((2 + t..2 * b - 1 - t).step_by(2).map(cross));
    }
    w.extend(std::iter::repeat_n(right(1), b));
    Ok(build(w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TorusVariant {
    /// [`torus_front`]: nested eyes with twist blocks.
    NestedTwist,
    /// [`argyle_front`]: the diamond lattice.
    Argyle,
}

impl TorusVariant {
    pub const ALL: [TorusVariant; 2] = [TorusVariant::NestedTwist, TorusVariant::Argyle];

    pub fn name(self) -> &'static str {
        match self {
            TorusVariant::NestedTwist => "nested",
            TorusVariant::Argyle => "argyle",
        }
    }

    pub fn build(self, p: usize, q: usize) -> Result<Front, GeneratorError> {
        match self {
            TorusVariant::NestedTwist => torus_front(p, q),
            TorusVariant::Argyle => argyle_front(p, q),
        }
    }
}

/// The torus variant wired into [`paper_family`].
pub const FAMILY_VARIANT: TorusVariant = TorusVariant::Argyle;

/// Parameters of the `(4, -(2n+5))` torus knot family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub n: usize,
}

impl FamilyParams {
    pub fn new(n: usize) -> Self {
        FamilyParams { n }
    }

    pub const fn p(&self) -> usize {
        4
    }

    pub fn q(&self) -> usize {
        2 * self.n + 5
    }

    pub fn crossings(&self) -> usize {
        3 * self.q()
    }
}

/// The max-tb front of the torus knot `T(4, -(2n+5))`.
///
/// This is the argyle front of [`argyle_front`]`(4, 2n+5)` with its events
/// reordered by commutations so that at most ten strands are ever present.
/// It splits into a fixed opening, `2n` repeats of the block
/// `L5 X4 X3 X2 R1`, and a fixed closing.
pub fn paper_family(n: usize) -> Front {
    const OPEN: [(EventKind, usize); 10] = [
        (EventKind::LeftCusp, 1),
        (EventKind::LeftCusp, 3),
        (EventKind::Crossing, 2),
        (EventKind::LeftCusp, 5),
        (EventKind::Crossing, 4),
        (EventKind::Crossing, 3),
        (EventKind::LeftCusp, 7),
        (EventKind::Crossing, 6),
        (EventKind::Crossing, 5),
        (EventKind::Crossing, 4),
    ];
    const BLOCK: [(EventKind, usize); 5] = [
        (EventKind::LeftCusp, 5),
        (EventKind::Crossing, 4),
        (EventKind::Crossing, 3),
        (EventKind::Crossing, 2),
        (EventKind::RightCusp, 1),
    ];
    const CLOSE: [(EventKind, usize); 15] = [
        (EventKind::LeftCusp, 5),
        (EventKind::Crossing, 4),
        (EventKind::Crossing, 6),
        (EventKind::Crossing, 3),
        (EventKind::Crossing, 5),
        (EventKind::Crossing, 7),
        (EventKind::Crossing, 2),
        (EventKind::RightCusp, 1),
        (EventKind::Crossing, 2),
        (EventKind::RightCusp, 1),
        (EventKind::Crossing, 2),
        (EventKind::RightCusp, 1),
        (EventKind::Crossing, 2),
        (EventKind::RightCusp, 1),
        (EventKind::RightCusp, 1),
    ];
    let event = |&(kind, level): &(EventKind, usize)| Event { kind, level };
    let mut w: Vec<Event> = OPEN.iter().map(event).collect();
    for _ in 0..2 * n {
        w.extend(BLOCK.iter().map(event));
    }
    w.extend(CLOSE.iter().map(event));
    build(w)
}

/// Mirror through a horizontal line: position `i` becomes `m + 1 - i`.
pub fn flip_vertical(front: &Front) -> Front {
    let w = front
        .events()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let m = front.strands_before(i);
            let level = match e.kind {
                EventKind::LeftCusp => m + 2 - e.level,
                EventKind::Crossing | EventKind::RightCusp => m - e.level,
            };
            Event {
                kind: e.kind,
                level,
            }
        })
        .collect();
    build(w)
}

/// Mirror through a vertical line: the word is reversed and cusps swap sides.
pub fn reverse_x(front: &Front) -> Front {
    let w = front
        .events()
        .iter()
        .rev()
        .map(|e| {
            let kind = match e.kind {
                EventKind::LeftCusp => EventKind::RightCusp,
                EventKind::Crossing => EventKind::Crossing,
                EventKind::RightCusp => EventKind::LeftCusp,
            };
            Event {
                kind,
                level: e.level,
            }
        })
        .collect();
    build(w)
}

/// A random valid front with at most `max_crossings` crossings and at most
/// `max_strands` strands at any slice (`max_strands >= 2`).
pub fn random_front<R: Rng + ?Sized>(
    rng: &mut R,
    max_crossings: usize,
    max_strands: usize,
) -> Front {
    assert!(max_strands >= 2, "a front needs room for two strands");
    let target = rng.gen_range(0..=max_crossings);
    let mut w = Vec::new();
    let (mut m, mut c) = (0usize, 0usize);
    loop {
        if m == 0 {
            if !w.is_empty() && c >= target {
                break;
            }
            w.push(left(1));
            m = 2;
            continue;
        }
        let open = m + 2 <= max_strands && c < target;
        let twist = c < target;
        // Weights: open 1, cross 3, close 1.
        let roll = rng.gen_range(0..5);
        if roll == 0 && open {
            w.push(left(rng.gen_range(1..=m + 1)));
            m += 2;
        } else if roll >= 2 && twist {
            w.push(cross(rng.gen_range(1..m)));
            c += 1;
        } else if roll == 1 || !twist {
            w.push(right(rng.gen_range(1..m)));
            m -= 2;
        }
    }
    build(w)
}
