//! Legendrian link fronts, normal rulings and ruling polynomials.

pub mod dsl;
pub mod enumerate;
pub mod front;
pub mod generators;
pub mod moves;
pub mod render;
pub mod report;
pub mod ruling;

pub use enumerate::{count, enumerate, unique_ruling, RulingPolynomial, RulingReport};
pub use front::{Event, EventKind, Front, FrontError, FrontInvariants};
pub use ruling::{check_ruling, MatchingState, Ruling, Violation, ViolationKind};
