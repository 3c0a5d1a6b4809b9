//! Front diagrams encoded as event words.
//!
//! A front is read left to right as a sequence of events, each acting on the
//! strands present at that vertical slice. Strand positions are counted from
//! the top starting at 1. The x-coordinate of an event is its index in the
//! word, so cusps and crossings always sit at distinct x-coordinates.
//!
//! Every strand is born at a left cusp and dies at a right cusp; such a strand
//! is called an *arc*. Crossings move arcs between adjacent positions but never
//! end them, so the arcs of a front are exactly two per left cusp.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    LeftCusp,
    Crossing,
    RightCusp,
}

impl EventKind {
    pub fn symbol(self) -> char {
        match self {
            EventKind::LeftCusp => 'L',
            EventKind::Crossing => 'X',
            EventKind::RightCusp => 'R',
        }
    }
}

/// One event of a front at a strand level.
///
/// * `LeftCusp` at level `k` inserts two strands at positions `k, k+1`
///   (valid for `1 <= k <= m+1`).
/// * `Crossing` at level `k` exchanges the strands at `k, k+1`
///   (valid for `1 <= k <= m-1`).
/// * `RightCusp` at level `k` joins and removes the strands at `k, k+1`
///   (valid for `1 <= k <= m-1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event {
    pub kind: EventKind,
    pub level: usize,
}

impl Event {
    pub const fn left_cusp(level: usize) -> Self {
        Event {
            kind: EventKind::LeftCusp,
            level,
        }
    }

    pub const fn crossing(level: usize) -> Self {
        Event {
            kind: EventKind::Crossing,
            level,
        }
    }

    pub const fn right_cusp(level: usize) -> Self {
        Event {
            kind: EventKind::RightCusp,
            level,
        }
    }

    pub fn is_crossing(&self) -> bool {
        self.kind == EventKind::Crossing
    }

    /// Change in strand count caused by this event.
    pub fn strand_delta(&self) -> isize {
        match self.kind {
            EventKind::LeftCusp => 2,
            EventKind::Crossing => 0,
            EventKind::RightCusp => -2,
        }
    }

    /// Whether the level is legal when `strands` strands are present.
    pub fn fits(&self, strands: usize) -> bool {
        let k = self.level;
        match self.kind {
            EventKind::LeftCusp => k >= 1 && k <= strands + 1,
            EventKind::Crossing | EventKind::RightCusp => k >= 1 && k < strands,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.level)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontError {
    #[error("empty event word")]
    EmptyWord,
    #[error("event {index} ({event}): level out of range for {strands} strands")]
    LevelOutOfRange {
        /// 1-based position of the offending event in the word.
        index: usize,
        event: Event,
        strands: usize,
    },
    #[error("word ends with {strands} open strands")]
    NonZeroTermination { strands: usize },
}

/// A validated front diagram.
///
/// Fronts are immutable once built; all derived data is computed up front.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Front {
    events: Vec<Event>,
    /// Strand count before each event, plus the final count (always 0).
    profile: Vec<usize>,
    /// 1-based crossing label of each event, if it is a crossing.
    crossing_labels: Vec<Option<usize>>,
    crossing_events: Vec<usize>,
    /// Arcs touched by each event, upper position first.
    event_arcs: Vec<(usize, usize)>,
    left_cusps: usize,
    right_cusps: usize,
}

/// Builds a [`Front`] from an event word, checking every level bound.
pub fn validate(events: Vec<Event>) -> Result<Front, FrontError> {
    Front::new(events)
}

impl Front {
    pub fn new(events: Vec<Event>) -> Result<Self, FrontError> {
        if events.is_empty() {
            return Err(FrontError::EmptyWord);
        }
        let mut profile = Vec::with_capacity(events.len() + 1);
        let mut crossing_labels = Vec::with_capacity(events.len());
        let mut crossing_events = Vec::new();
        let mut event_arcs = Vec::with_capacity(events.len());
        let mut positions: Vec<usize> = Vec::new();
        let (mut left_cusps, mut right_cusps) = (0, 0);

        for (index, event) in events.iter().enumerate() {
            let strands = positions.len();
            if !event.fits(strands) {
                return Err(FrontError::LevelOutOfRange {
                    index: index + 1,
                    event: *event,
                    strands,
                });
            }
            profile.push(strands);
            let i = event.level - 1;
            match event.kind {
                EventKind::LeftCusp => {
                    let upper = 2 * left_cusps;
                    positions.splice(i..i, [upper, upper + 1]);
                    event_arcs.push((upper, upper + 1));
                    left_cusps += 1;
                    crossing_labels.push(None);
                }
                EventKind::Crossing => {
                    event_arcs.push((positions[i], positions[i + 1]));
                    positions.swap(i, i + 1);
                    crossing_events.push(index);
                    crossing_labels.push(Some(crossing_events.len()));
                }
                EventKind::RightCusp => {
                    event_arcs.push((positions[i], positions[i + 1]));
                    positions.drain(i..i + 2);
                    right_cusps += 1;
                    crossing_labels.push(None);
                }
            }
        }
        if !positions.is_empty() {
            return Err(FrontError::NonZeroTermination {
                strands: positions.len(),
            });
        }
        profile.push(0);

        Ok(Front {
            events,
            profile,
            crossing_labels,
            crossing_events,
            event_arcs,
            left_cusps,
            right_cusps,
        })
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn into_events(self) -> Vec<Event> {
        self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Strand counts `m_0 = 0, m_1, ..., m_N = 0` at every slice.
    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    /// Strand count immediately before event `index` (0-based).
    pub fn strands_before(&self, index: usize) -> usize {
        self.profile[index]
    }

    pub fn max_strands(&self) -> usize {
        self.profile.iter().copied().max().unwrap_or(0)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossing_events.len()
    }

    pub fn left_cusp_count(&self) -> usize {
        self.left_cusps
    }

    pub fn right_cusp_count(&self) -> usize {
        self.right_cusps
    }

    pub fn arc_count(&self) -> usize {
        2 * self.left_cusps
    }

    /// The crossing label (1-based, in x-order) of the event at `index`.
    pub fn crossing_label(&self, index: usize) -> Option<usize> {
        self.crossing_labels[index]
    }

    /// Event index (0-based) of the crossing with the given 1-based label.
    pub fn crossing_event(&self, label: usize) -> Option<usize> {
        label
            .checked_sub(1)
            .and_then(|i| self.crossing_events.get(i))
            .copied()
    }

    /// Arcs involved in the event at `index`, upper position first.
    ///
    /// For a left cusp these are the two arcs it creates; for a crossing the
    /// arcs at `k, k+1` just before it; for a right cusp the two arcs it joins.
    pub fn event_arcs(&self, index: usize) -> (usize, usize) {
        self.event_arcs[index]
    }

    /// The arcs occupying each strand position just after event `index`.
    pub fn arcs_after(&self, index: usize) -> Vec<usize> {
        let mut positions = Vec::new();
        for (event, &(upper, lower)) in self.events.iter().zip(&self.event_arcs).take(index + 1) {
            let i = event.level - 1;
            match event.kind {
                EventKind::LeftCusp => {
                    positions.splice(i..i, [upper, lower]);
                }
                EventKind::Crossing => positions.swap(i, i + 1),
                EventKind::RightCusp => {
                    positions.drain(i..i + 2);
                }
            }
        }
        positions
    }

    /// Event indices (0-based) of the left cusps, in x-order.
    pub fn left_cusp_events(&self) -> impl Iterator<Item = usize> + '_ {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, e)| e.kind == EventKind::LeftCusp)
            .map(|(i, _)| i)
    }

    pub fn right_cusp_events(&self) -> impl Iterator<Item = usize> + '_ {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, e)| e.kind == EventKind::RightCusp)
            .map(|(i, _)| i)
    }

    pub fn components(&self) -> Components {
        components(self)
    }

    /// The canonical orientation, see [`orient`].
    pub fn orientation(&self) -> Orientation {
        orient(self)
    }

    pub fn invariants(&self) -> FrontInvariants {
        FrontInvariants::of(self)
    }
}

impl fmt::Display for Front {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Connected components of a front, as a labelling of its arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component id of each arc; ids are numbered by first left cusp.
    pub arc_component: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn components(front: &Front) -> Components {
    let mut uf = UnionFind::new(front.arc_count());
    for (event, &(upper, lower)) in front.events.iter().zip(&front.event_arcs) {
        if event.kind != EventKind::Crossing {
            uf.union(upper, lower);
        }
    }
    let mut ids = vec![usize::MAX; front.arc_count()];
    let mut arc_component = Vec::with_capacity(front.arc_count());
    let mut count = 0;
    for arc in 0..front.arc_count() {
        let root = uf.find(arc);
        if ids[root] == usize::MAX {
            ids[root] = count;
            count += 1;
        }
        arc_component.push(ids[root]);
    }
    Components {
        count,
        arc_component,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }
}

/// A direction for every arc, coherent along each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arc_direction: Vec<Direction>,
}

impl Orientation {
    /// Builds an orientation from explicit arc directions, checking that the
    /// two arcs at every cusp point opposite ways.
    pub fn from_directions(front: &Front, arc_direction: Vec<Direction>) -> Option<Self> {
        if arc_direction.len() != front.arc_count() {
            return None;
        }
        let coherent = front
            .events
            .iter()
            .zip(&front.event_arcs)
            .filter(|(e, _)| e.kind != EventKind::Crossing)
            .all(|(_, &(u, l))| arc_direction[u] != arc_direction[l]);
        coherent.then_some(Orientation { arc_direction })
    }

    /// Builds an orientation from the direction of the upper arc at each left
    /// cusp, in x-order.
    pub fn from_left_cusps(front: &Front, upper: &[Direction]) -> Option<Self> {
        if upper.len() != front.left_cusp_count() {
            return None;
        }
        let arcs = upper.iter().flat_map(|&d| [d, d.reversed()]).collect();
        Orientation::from_directions(front, arcs)
    }

    /// Direction of the upper arc at each left cusp, in x-order.
    pub fn left_cusp_directions(&self) -> Vec<Direction> {
        self.arc_direction.iter().step_by(2).copied().collect()
    }

    pub fn direction(&self, arc: usize) -> Direction {
        self.arc_direction[arc]
    }

    pub fn directions(&self) -> &[Direction] {
        &self.arc_direction
    }

    /// Reverses every component.
    pub fn reversed(&self) -> Self {
        Orientation {
            arc_direction: self.arc_direction.iter().map(|d| d.reversed()).collect(),
        }
    }
}

/// Canonical orientation: for each component, the upper arc born at its
/// earliest left cusp points rightward. Directions flip across every cusp.
pub fn orient(front: &Front) -> Orientation {
    let arcs = front.arc_count();
    // Each arc has exactly one cusp neighbour at either end.
    let mut left_partner = vec![0; arcs];
    let mut right_partner = vec![0; arcs];
    for (event, &(u, l)) in front.events.iter().zip(&front.event_arcs) {
        match event.kind {
            EventKind::LeftCusp => {
                left_partner[u] = l;
                left_partner[l] = u;
            }
            EventKind::RightCusp => {
                right_partner[u] = l;
                right_partner[l] = u;
            }
            EventKind::Crossing => {}
        }
    }
    let mut direction: Vec<Option<Direction>> = vec![None; arcs];
    // Upper arcs of left cusps have even ids and appear in x-order.
    for start in (0..arcs).step_by(2) {
        if direction[start].is_some() {
            continue;
        }
        let mut arc = start;
        let mut dir = Direction::Rightward;
        let mut via_right = true;
        while direction[arc].is_none() {
            direction[arc] = Some(dir);
            arc = if via_right {
                right_partner[arc]
            } else {
                left_partner[arc]
            };
            via_right = !via_right;
            dir = dir.reversed();
        }
    }
    Orientation {
        arc_direction: direction.into_iter().map(|d| d.unwrap()).collect(),
    }
}

/// Sign of the crossing at event `index`.
///
/// The strand of lesser slope passes over. With strands listed top-down, the
/// arc moving from `k` to `k+1` descends, so it is the over-strand. Working out
/// the smooth sign gives +1 exactly when both strands point the same way
/// horizontally; the plat trefoil `L1 L3 X2 X2 X2 R1 R1` then has writhe 3.
pub fn crossing_sign(front: &Front, orientation: &Orientation, index: usize) -> i64 {
    debug_assert!(front.events[index].is_crossing());
    let (over, under) = front.event_arcs[index];
    if orientation.direction(over) == orientation.direction(under) {
        1
    } else {
        -1
    }
}

pub fn writhe(front: &Front, orientation: &Orientation) -> i64 {
    front
        .crossing_events
        .iter()
        .map(|&i| crossing_sign(front, orientation, i))
        .sum()
}

/// Thurston–Bennequin number: writhe minus the number of right cusps.
pub fn thurston_bennequin(front: &Front, orientation: &Orientation) -> i64 {
    writhe(front, orientation) - front.right_cusps as i64
}

/// Rotation number `(D - U) / 2` from the down- and up-cusps traversed.
pub fn rotation(front: &Front, orientation: &Orientation) -> i64 {
    let mut down_minus_up = 0i64;
    for (event, &(upper, _)) in front.events.iter().zip(&front.event_arcs) {
        let upper_right = orientation.direction(upper) == Direction::Rightward;
        match event.kind {
            // Leaving through the upper branch means the cusp is climbed.
            EventKind::LeftCusp => down_minus_up += if upper_right { -1 } else { 1 },
            // Arriving along the upper branch means the cusp is descended.
            EventKind::RightCusp => down_minus_up += if upper_right { 1 } else { -1 },
            EventKind::Crossing => {}
        }
    }
    debug_assert_eq!(down_minus_up % 2, 0);
    down_minus_up / 2
}

/// The classical invariants of a front under its canonical orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrontInvariants {
    pub crossings: usize,
    pub left_cusps: usize,
    pub components: usize,
    pub tb: i64,
    pub rotation: i64,
}

impl FrontInvariants {
    pub fn of(front: &Front) -> Self {
        let orientation = orient(front);
        FrontInvariants {
            crossings: front.crossing_count(),
            left_cusps: front.left_cusp_count(),
            components: components(front).count,
            tb: thurston_bennequin(front, &orientation),
            rotation: rotation(front, &orientation),
        }
    }
}
