//! Enumerating and counting normal rulings.
//!
//! Two independent methods are provided. Brute force runs the checker over
//! every switch subset. The dynamic program sweeps once, carrying for every
//! reachable matching state a polynomial that counts partial rulings by
//! switch number.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::front::Front;
use crate::ruling::{sweep_mask, MatchingState, Ruling};

/// Default number of switch subsets brute force may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

const CHUNK: u64 = 1 << 12;

/// Ruling polynomial `sum over rulings of z^(s - c + 1)`, where `s` is the
/// switch count and `c` the number of right cusps.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RulingPolynomial {
    coefficients: BTreeMap<i64, BigUint>,
}

impl RulingPolynomial {
    /// Builds the polynomial from counts indexed by switch number.
    pub fn from_switch_counts(counts: &[BigUint], right_cusps: usize) -> Self {
        let shift = 1 - right_cusps as i64;
        let coefficients = counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| (s as i64 + shift, c.clone()))
            .collect();
        RulingPolynomial { coefficients }
    }

    pub fn coefficient(&self, exponent: i64) -> BigUint {
        self.coefficients
            .get(&exponent)
            .cloned()
            .unwrap_or_default()
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.coefficients.iter().map(|(&e, c)| (e, c))
    }

    /// Sum of coefficients, which is the number of rulings.
    pub fn total(&self) -> BigUint {
        self.coefficients.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl fmt::Display for RulingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let unit = c.is_one();
            match e {
                0 => write!(f, "{c}")?,
                1 if unit => f.write_str("z")?,
                1 => write!(f, "{c}z")?,
                _ if unit => write!(f, "z^{e}")?,
                _ => write!(f, "{c}z^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    DynamicProgramming,
    /// Both methods were run and agreed.
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BruteForce => "brute-force",
            Method::DynamicProgramming => "dynamic-programming",
            Method::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RulingReport {
    pub count: BigUint,
    /// Present only when rulings were listed.
    pub rulings: Option<Vec<Ruling>>,
    pub polynomial: RulingPolynomial,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error(
        "{crossings} crossings give 2^{crossings} subsets, over the budget of {budget}; \
         use the dynamic-programming count instead"
    )]
    BudgetExceeded { crossings: usize, budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniqueRulingError {
    #[error("front has {0} normal rulings, not exactly one")]
    NotUnique(BigUint),
}

/// Lists every normal ruling by brute force, within [`DEFAULT_BUDGET`].
pub fn enumerate(front: &Front) -> Result<RulingReport, EnumerateError> {
    enumerate_with_budget(front, DEFAULT_BUDGET)
}

/// Lists every normal ruling by brute force across the rayon pool.
///
/// Rulings are returned in increasing order of their switch mask, where
/// crossing `l` is bit `l - 1`; the output matches [`enumerate_serial`].
pub fn enumerate_with_budget(front: &Front, budget: u64) -> Result<RulingReport, EnumerateError> {
    brute_force(front, budget, true)
}

/// Single-threaded brute force, identical in output to the parallel version.
pub fn enumerate_serial(front: &Front, budget: u64) -> Result<RulingReport, EnumerateError> {
    brute_force(front, budget, false)
}

fn subset_total(crossings: usize, budget: u64) -> Result<u64, EnumerateError> {
    let over = EnumerateError::BudgetExceeded { crossings, budget };
    if crossings >= 64 {
        return Err(over);
    }
    let total = 1u64 << crossings;
    if total > budget {
        return Err(over);
    }
    Ok(total)
}

fn scan(front: &Front, range: std::ops::Range<u64>) -> Vec<u64> {
    let mut scratch = MatchingState::empty();
    range
        .filter(|&mask| sweep_mask(front, mask, &mut scratch))
        .collect()
}

fn brute_force(front: &Front, budget: u64, parallel: bool) -> Result<RulingReport, EnumerateError> {
    let crossings = front.crossing_count();
    let total = subset_total(crossings, budget)?;
    let chunks = total.div_ceil(CHUNK);
    let range = |c: u64| c * CHUNK..((c + 1) * CHUNK).min(total);
    let found: Vec<Vec<u64>> = if parallel {
        (0..chunks)
            .into_par_iter()
            .map(|c| scan(front, range(c)))
            .collect()
    } else {
        (0..chunks).map(|c| scan(front, range(c))).collect()
    };
    let masks: Vec<u64> = found.into_iter().flatten().collect();

    let mut by_switches = vec![BigUint::zero(); crossings + 1];
    let rulings: Vec<Ruling> = masks
        .iter()
        .map(|&mask| {
            by_switches[mask.count_ones() as usize] += 1u32;
            Ruling {
                switches: (1..=crossings)
                    .filter(|l| mask >> (l - 1) & 1 == 1)
                    .collect(),
                eyes: front.left_cusp_count(),
            }
        })
        .collect();
    Ok(RulingReport {
        count: BigUint::from(rulings.len()),
        rulings: Some(rulings),
        polynomial: RulingPolynomial::from_switch_counts(&by_switches, front.right_cusp_count()),
        method: Method::BruteForce,
    })
}

/// Dense polynomial in the running switch count.
type Weights = Vec<BigUint>;

fn add_shifted(into: &mut Weights, from: &Weights, shift: usize) {
    if into.len() < from.len() + shift {
        into.resize(from.len() + shift, BigUint::zero());
    }
    for (i, c) in from.iter().enumerate() {
        if !c.is_zero() {
            into[i + shift] += c;
        }
    }
}

/// Counts normal rulings with the state-sweep dynamic program.
pub fn count(front: &Front) -> RulingReport {
    count_with_profile(front).0
}

/// As [`count`], also returning the number of live states after each event.
pub fn count_with_profile(front: &Front) -> (RulingReport, Vec<usize>) {
    let mut layer: HashMap<MatchingState, Weights> = HashMap::new();
    layer.insert(MatchingState::empty(), vec![BigUint::one()]);
    let mut profile = Vec::with_capacity(front.len());
    for &event in front.events() {
        let mut next: HashMap<MatchingState, Weights> = HashMap::with_capacity(layer.len() * 2);
        let choices: &[bool] = if event.is_crossing() {
            &[false, true]
        } else {
            &[false]
        };
        for (state, weights) in &layer {
            for &switched in choices {
                let mut s = state.clone();
                if s.apply(event, switched).is_ok() {
                    add_shifted(next.entry(s).or_default(), weights, switched as usize);
                }
            }
        }
        profile.push(next.len());
        layer = next;
    }
    let weights = layer.remove(&MatchingState::empty()).unwrap_or_default();
    let polynomial = RulingPolynomial::from_switch_counts(&weights, front.right_cusp_count());
    let report = RulingReport {
        count: polynomial.total(),
        rulings: None,
        polynomial,
        method: Method::DynamicProgramming,
    };
    (report, profile)
}

/// Number of reachable matching states after each event.
pub fn live_state_profile(front: &Front) -> Vec<usize> {
    count_with_profile(front).1
}

/// Recovers the single normal ruling by tracing the dynamic program backwards.
pub fn unique_ruling(front: &Front) -> Result<Ruling, UniqueRulingError> {
    let events = front.events();
    let mut layers: Vec<HashMap<MatchingState, BigUint>> = Vec::with_capacity(events.len() + 1);
    let mut layer = HashMap::new();
    layer.insert(MatchingState::empty(), BigUint::one());
    for &event in events {
        let mut next: HashMap<MatchingState, BigUint> = HashMap::new();
        for (state, w) in &layer {
            for switched in [false, true] {
                if switched && !event.is_crossing() {
                    continue;
                }
                let mut s = state.clone();
                if s.apply(event, switched).is_ok() {
                    *next.entry(s).or_default() += w;
                }
            }
        }
        layers.push(layer);
        layer = next;
    }
    let total = layer
        .get(&MatchingState::empty())
        .cloned()
        .unwrap_or_default();
    if !total.is_one() {
        return Err(UniqueRulingError::NotUnique(total));
    }

    let mut switches = Vec::new();
    let mut target = MatchingState::empty();
    for (index, &event) in events.iter().enumerate().rev() {
        let (prev, switched) = layers[index]
            .keys()
            .flat_map(|s| {
                [false, true]
                    .into_iter()
                    .filter(|&sw| !sw || event.is_crossing())
                    .map(move |sw| (s, sw))
            })
            .find(|(s, sw)| {
                let mut t = (*s).clone();
                t.apply(event, *sw).is_ok() && t == target
            })
            .expect("a unique ruling has a unique predecessor chain");
        if switched {
            switches.push(front.crossing_label(index).unwrap());
        }
        target = prev.clone();
    }
    Ok(Ruling {
        switches: switches.into_iter().collect(),
        eyes: front.left_cusp_count(),
    })
}
