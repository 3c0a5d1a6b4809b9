//! Normal rulings checked by a single left-to-right sweep.
//!
//! The sweep tracks how the strands at the current slice pair up into eyes.
//! Switched crossings are resolved horizontally, so they never change that
//! pairing; all other crossings exchange the eye membership of the two
//! positions they involve.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::front::{Event, EventKind, Front};

/// Pairing of the strands at one slice into eyes.
///
/// Stored 0-based; the public accessors speak in 1-based positions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingState {
    partner: Vec<u16>,
}

impl MatchingState {
    pub fn empty() -> Self {
        MatchingState::default()
    }

    /// Builds a state from 1-based pairs. Returns `None` unless the pairs form
    /// a fixed-point-free involution on `1..=2 * pairs.len()`.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Option<Self> {
        let m = 2 * pairs.len();
        let mut partner = vec![u16::MAX; m];
        for &(a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > m || b > m {
                return None;
            }
            let (a, b) = (a - 1, b - 1);
            if partner[a] != u16::MAX || partner[b] != u16::MAX {
                return None;
            }
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        Some(MatchingState { partner })
    }

    /// Number of strands at this slice.
    pub fn strands(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Partner of the 1-based position `i`.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1] as usize + 1
    }

    /// Eyes as 1-based position pairs `(top, bottom)`, ordered by top strand.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p as usize)
            .map(|(i, &p)| (i + 1, p as usize + 1))
            .collect()
    }

    /// Canonical byte encoding of the partner array.
    pub fn encode(&self) -> Vec<u8> {
        self.partner.iter().flat_map(|p| p.to_le_bytes()).collect()
    }

    /// Applies one event in place. On a violation the state is left unchanged.
    ///
    /// # Panics
    ///
    /// Panics if the event level does not fit the current strand count.
    pub fn apply(&mut self, event: Event, is_switch: bool) -> Result<(), ViolationKind> {
        assert!(
            event.fits(self.strands()),
            "event {event} does not fit {} strands",
            self.strands()
        );
        let i = event.level - 1;
        let p = &mut self.partner;
        match event.kind {
            EventKind::LeftCusp => {
                for q in p.iter_mut() {
                    if *q as usize >= i {
                        *q += 2;
                    }
                }
                p.splice(i..i, [(i + 1) as u16, i as u16]);
            }
            EventKind::Crossing => {
                let (a, b) = (p[i] as usize, p[i + 1] as usize);
                if a == i + 1 {
                    return Err(if is_switch {
                        ViolationKind::SameEyeSwitch
                    } else {
                        ViolationKind::SelfCrossing
                    });
                }
                if is_switch {
                    if !is_normal_switch(i, a, b) {
                        return Err(ViolationKind::Interleaving);
                    }
                } else {
                    p[i] = b as u16;
                    p[i + 1] = a as u16;
                    p[a] = (i + 1) as u16;
                    p[b] = i as u16;
                }
            }
            EventKind::RightCusp => {
                if p[i] as usize != i + 1 {
                    return Err(ViolationKind::EyeClosure);
                }
                p.drain(i..i + 2);
                for q in p.iter_mut() {
                    if *q as usize > i + 1 {
                        *q -= 2;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MatchingState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (a, b)) in self.pairs().into_iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}<->{b}")?;
        }
        f.write_str("}")
    }
}

/// Normality test for a switch at positions `k, k+1` whose partners are
/// `a = partner(k)` and `b = partner(k+1)`, all distinct.
///
/// The two eyes must be disjoint or one must strictly contain the other.
/// Any consistent indexing base works since only comparisons are made.
pub fn is_normal_switch(k: usize, a: usize, b: usize) -> bool {
    (a < k && b > k + 1) || (a < k && b < a) || (b > k + 1 && b < a)
}

/// Pure form of [`MatchingState::apply`].
pub fn step(
    state: &MatchingState,
    event: Event,
    is_switch: bool,
) -> Result<MatchingState, ViolationKind> {
    let mut next = state.clone();
    next.apply(event, is_switch)?;
    Ok(next)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// A crossing between the two strands of one eye was left unresolved.
    SelfCrossing,
    /// A switch joins the two strands of one eye.
    SameEyeSwitch,
    /// A switch between two eyes that neither nest nor sit apart.
    Interleaving,
    /// A right cusp closes strands belonging to different eyes.
    EyeClosure,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::SelfCrossing => "self-crossing",
            ViolationKind::SameEyeSwitch => "same-eye switch",
            ViolationKind::Interleaving => "interleaving",
            ViolationKind::EyeClosure => "eye closure",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
#[error("{kind} at event {at}")]
pub struct Violation {
    pub kind: ViolationKind,
    /// 1-based index of the failing event.
    pub at: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RulingError {
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error("crossing {label} does not exist (front has {crossings} crossings)")]
    UnknownCrossing { label: usize, crossings: usize },
}

/// A normal ruling: its switch labels and eye count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ruling {
    pub switches: BTreeSet<usize>,
    pub eyes: usize,
}

impl Ruling {
    pub fn switch_count(&self) -> usize {
        self.switches.len()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.switches.contains(&label)
    }
}

impl fmt::Display for Ruling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, s) in self.switches.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Runs the sweep with the given switch labels (1-based).
pub fn check_ruling(front: &Front, switches: &[usize]) -> Result<Ruling, RulingError> {
    let crossings = front.crossing_count();
    let set: BTreeSet<usize> = switches.iter().copied().collect();
    if let Some(&label) = set.iter().find(|&&l| l == 0 || l > crossings) {
        return Err(RulingError::UnknownCrossing { label, crossings });
    }
    let mut state = MatchingState::empty();
    for (index, &event) in front.events().iter().enumerate() {
        let switched = front
            .crossing_label(index)
            .is_some_and(|l| set.contains(&l));
        state.apply(event, switched).map_err(|kind| Violation {
            kind,
            at: index + 1,
        })?;
    }
    debug_assert!(state.is_empty());
    Ok(Ruling {
        switches: set,
        eyes: front.left_cusp_count(),
    })
}

/// Sweep for a switch mask where bit `l - 1` marks crossing `l`.
///
/// `state` is scratch space and is cleared first.
pub(crate) fn sweep_mask(front: &Front, mask: u64, state: &mut MatchingState) -> bool {
    state.partner.clear();
    let mut bit = 0;
    for &event in front.events() {
        let switched = if event.is_crossing() {
            let s = mask >> bit & 1 == 1;
            bit += 1;
            s
        } else {
            false
        };
        if state.apply(event, switched).is_err() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Front {
        Front::new(vec![
            Event::left_cusp(1),
            Event::left_cusp(3),
            Event::crossing(2),
            Event::crossing(2),
            Event::crossing(2),
            Event::right_cusp(1),
            Event::right_cusp(1),
        ])
        .unwrap()
    }

    #[test]
    fn nested_switch_is_allowed() {
        let s = MatchingState::from_pairs(&[(1, 4), (2, 3)]).unwrap();
        assert_eq!(step(&s, Event::crossing(1), true), Ok(s.clone()));
    }

    #[test]
    fn interleaved_switch_is_rejected() {
        let s = MatchingState::from_pairs(&[(1, 3), (2, 4)]).unwrap();
        assert_eq!(
            step(&s, Event::crossing(1), true),
            Err(ViolationKind::Interleaving)
        );
    }

    #[test]
    fn crossing_inside_an_eye() {
        let s = MatchingState::from_pairs(&[(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            step(&s, Event::crossing(1), false),
            Err(ViolationKind::SelfCrossing)
        );
        assert_eq!(
            step(&s, Event::crossing(1), true),
            Err(ViolationKind::SameEyeSwitch)
        );
    }

    #[test]
    fn unswitched_crossing_conjugates() {
        let s = MatchingState::from_pairs(&[(1, 2), (3, 4)]).unwrap();
        let t = step(&s, Event::crossing(2), false).unwrap();
        assert_eq!(t.pairs(), vec![(1, 3), (2, 4)]);
        let back = step(&t, Event::crossing(2), false).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn cusps_insert_and_remove_pairs() {
        let s = MatchingState::from_pairs(&[(1, 2)]).unwrap();
        let t = step(&s, Event::left_cusp(2), false).unwrap();
        assert_eq!(t.pairs(), vec![(1, 4), (2, 3)]);
        assert_eq!(
            step(&t, Event::right_cusp(1), false),
            Err(ViolationKind::EyeClosure)
        );
        let u = step(&t, Event::right_cusp(2), false).unwrap();
        assert_eq!(u, s);
    }

    #[test]
    fn from_pairs_rejects_bad_input() {
        assert!(MatchingState::from_pairs(&[(1, 1)]).is_none());
        assert!(MatchingState::from_pairs(&[(1, 2), (2, 3)]).is_none());
        assert!(MatchingState::from_pairs(&[(1, 5), (2, 3)]).is_none());
    }

    #[test]
    fn normality_matches_interval_definition() {
        // Disjoint-or-strictly-nested over all distinct configurations.
        for k in 0..8usize {
            for a in 0..10usize {
                for b in 0..10usize {
                    let distinct = a != k && a != k + 1 && b != k && b != k + 1 && a != b;
                    if !distinct {
                        continue;
                    }
                    let e1 = (a.min(k), a.max(k));
                    let e2 = (b.min(k + 1), b.max(k + 1));
                    let disjoint = e1.1 < e2.0 || e2.1 < e1.0;
                    let nested = (e1.0 < e2.0 && e2.1 < e1.1) || (e2.0 < e1.0 && e1.1 < e2.1);
                    assert_eq!(is_normal_switch(k, a, b), disjoint || nested, "{k} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn trefoil_rulings() {
        let t = trefoil();
        let r = check_ruling(&t, &[1]).unwrap();
        assert_eq!(r.switch_count(), 1);
        assert_eq!(r.eyes, 2);
        assert_eq!(
            check_ruling(&t, &[2]),
            Err(RulingError::Violation(Violation {
                kind: ViolationKind::Interleaving,
                at: 4
            }))
        );
        assert!(check_ruling(&t, &[3]).is_ok());
        assert!(check_ruling(&t, &[1, 2, 3]).is_ok());
        assert!(check_ruling(&t, &[]).is_err());
        assert_eq!(
            check_ruling(&t, &[4]),
            Err(RulingError::UnknownCrossing {
                label: 4,
                crossings: 3
            })
        );
    }

    #[test]
    fn eye_ruling() {
        let eye = Front::new(vec![Event::left_cusp(1), Event::right_cusp(1)]).unwrap();
        let r = check_ruling(&eye, &[]).unwrap();
        assert_eq!((r.switch_count(), r.eyes), (0, 1));
    }

    #[test]
    fn stabilized_eye_fails_eye_closure() {
        let f = Front::new(vec![
            Event::left_cusp(1),
            Event::left_cusp(2),
            Event::right_cusp(3),
            Event::right_cusp(1),
        ])
        .unwrap();
        assert_eq!(
            check_ruling(&f, &[]),
            Err(RulingError::Violation(Violation {
                kind: ViolationKind::EyeClosure,
                at: 3
            }))
        );
    }

    #[test]
    fn sweep_mask_agrees_with_check() {
        let t = trefoil();
        let mut scratch = MatchingState::empty();
        for mask in 0u64..8 {
            let labels: Vec<usize> = (1..=3).filter(|l| mask >> (l - 1) & 1 == 1).collect();
            assert_eq!(
                sweep_mask(&t, mask, &mut scratch),
                check_ruling(&t, &labels).is_ok()
            );
        }
    }

    #[test]
    fn display_forms() {
        let s = MatchingState::from_pairs(&[(1, 4), (2, 3)]).unwrap();
        assert_eq!(s.to_string(), "{1<->4, 2<->3}");
        let r = check_ruling(&trefoil(), &[3, 1, 2]).unwrap();
        assert_eq!(r.to_string(), "{1, 2, 3}");
    }
}
