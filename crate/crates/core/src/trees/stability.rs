use serde::Serialize;

use super::{MarkedTree, WeightVector};
use crate::error::Result;
use crate::symkernel::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// A slot whose total weight exceeds 1.
    PointWeight {
        component: usize,
        point: usize,
        weight: Rational,
    },
    /// A component on which ω(Σ w_i D_i) has non-positive degree.
    ComponentDegree { component: usize, degree: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub stable: bool,
    pub violations: Vec<Violation>,
}

/// Degree of ω_C(Σ w_i D_i) restricted to component `c`.
pub(crate) fn component_degree(t: &MarkedTree, w: &WeightVector, c: usize, valence: usize) -> Rational {
    let marks = t.components[c]
        .points
        .iter()
        .fold(Rational::zero(), |acc, p| acc + w.point_weight(p));
    marks + Rational::from_int(valence as i64 - 2)
}

/// Checks both stability conditions and lists every violation.
pub fn is_stable(t: &MarkedTree, w: &WeightVector) -> Result<StabilityReport> {
    t.validate(Some(w))?;
    let one = Rational::one();
    let adj = t.neighbors();
    let mut violations = Vec::new();
    for (ci, comp) in t.components.iter().enumerate() {
        for (pi, p) in comp.points.iter().enumerate() {
            let weight = w.point_weight(p);
            if weight > one {
                violations.push(Violation::PointWeight {
                    component: ci,
                    point: pi,
                    weight,
                });
            }
        }
        let degree = component_degree(t, w, ci, adj[ci].len());
        if !degree.is_positive() {
            violations.push(Violation::ComponentDegree { component: ci, degree });
        }
    }
    Ok(StabilityReport {
        stable: violations.is_empty(),
        violations,
    })
}
