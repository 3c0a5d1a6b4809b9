//! JSON output with a fixed key order.

use serde::Serialize;

use crate::enumerate::RulingReport;
use crate::front::FrontInvariants;

#[derive(Serialize)]
struct InvariantsJson {
    crossings: usize,
    left_cusps: usize,
    components: usize,
    tb: i64,
    rotation: i64,
}

#[derive(Serialize)]
struct ReportJson {
    crossings: usize,
    left_cusps: usize,
    components: usize,
    tb: i64,
    rotation: i64,
    method: &'static str,
    count: String,
    polynomial: Vec<(i64, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rulings: Option<Vec<Vec<usize>>>,
}

/// Serializes a ruling report. Counts and coefficients are decimal strings
/// so that arbitrarily large values survive any JSON reader.
pub fn emit_json(report: &RulingReport, invariants: &FrontInvariants) -> String {
    let json = ReportJson {
        crossings: invariants.crossings,
        left_cusps: invariants.left_cusps,
        components: invariants.components,
        tb: invariants.tb,
        rotation: invariants.rotation,
        method: report.method.as_str(),
        count: report.count.to_string(),
        polynomial: report
            .polynomial
            .terms()
            .map(|(e, c)| (e, c.to_string()))
            .collect(),
        rulings: report.rulings.as_ref().map(|rs| {
            rs.iter()
                .map(|r| r.switches.iter().copied().collect())
                .collect()
        }),
    };
    serde_json::to_string(&json).expect("report serializes")
}

pub fn invariants_json(invariants: &FrontInvariants) -> String {
    let json = InvariantsJson {
        crossings: invariants.crossings,
        left_cusps: invariants.left_cusps,
        components: invariants.components,
        tb: invariants.tb,
        rotation: invariants.rotation,
    };
    serde_json::to_string(&json).expect("invariants serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count, enumerate};
    use crate::generators::{eye, stabilized_eye};
    use crate::Front;

    #[test]
    fn eye_json() {
        let f = eye();
        assert_eq!(
            emit_json(&count(&f), &f.invariants()),
            r#"{"crossings":0,"left_cusps":1,"components":1,"tb":-1,"rotation":0,"method":"dynamic-programming","count":"1","polynomial":[[0,"1"]]}"#
        );
    }

    #[test]
    fn trefoil_json_lists_rulings() {
        let f = Front::new(
            crate::dsl::parse("L1 L3 X2 X2 X2 R1 R1")
                .unwrap()
                .front
                .into_events(),
        )
        .unwrap();
        let json = emit_json(&enumerate(&f).unwrap(), &f.invariants());
        assert!(json.ends_with(
            r#""count":"3","polynomial":[[0,"2"],[2,"1"]],"rulings":[[1],[3],[1,2,3]]}"#
        ));
    }

    #[test]
    fn stabilized_json_is_empty() {
        let f = stabilized_eye();
        let json = emit_json(&count(&f), &f.invariants());
        assert!(json.ends_with(r#""count":"0","polynomial":[]}"#));
        assert!(json.contains(r#""tb":-2"#));
    }

    #[test]
    fn invariants_only() {
        assert_eq!(
            invariants_json(&eye().invariants()),
            r#"{"crossings":0,"left_cusps":1,"components":1,"tb":-1,"rotation":0}"#
        );
    }
}
