//! Exact rational numbers and sparse multivariate polynomials.

mod linalg;
mod parse;
mod poly;
mod rational;
mod univariate;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use linalg::{rank, row_reduce, RowEchelon};
pub use poly::{MPoly, Monomial};
pub use rational::Rational;
pub use univariate::{
    center_of_mass_section, poly_gcd, poly_rem, squarefree_decomposition, univariate_divrem, SquarefreeFactor,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("variable `{0}` has no weight")]
    UnweightedVariable(String),
    #[error("divisor meets the section at infinity (a0 = 0)")]
    DivisorMeetsInfinity,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    ZeroDivision,
    #[error("zero polynomial")]
    ZeroPolynomial,
}

/// Positive integer weights for the variables of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightAssignment(pub BTreeMap<String, u32>);

impl WeightAssignment {
    pub fn new() -> Self {
        WeightAssignment::default()
    }

    pub fn from_pairs(pairs: &[(&str, u32)]) -> Self {
        WeightAssignment(pairs.iter().map(|(k, v)| ((*k).to_string(), *v)).collect())
    }

    pub fn get(&self, var: &str) -> Option<u32> {
        self.0.get(var).copied()
    }

    pub fn set(&mut self, var: impl Into<String>, w: u32) {
        self.0.insert(var.into(), w);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &u32)> {
        self.0.iter()
    }
}

/// `weighted_degree` as a free function.
pub fn weighted_degree(p: &MPoly, w: &WeightAssignment) -> Result<Option<u64>, PolyError> {
    p.weighted_degree(w)
}

/// Parse a polynomial in the text grammar.
pub fn parse_poly(s: &str) -> Result<MPoly, PolyError> {
    s.parse()
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    const VARS: [&str; 3] = ["x", "y", "z"];

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec((-5i64..=5, 1i64..=3, 0u32..3, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
            terms.into_iter().fold(MPoly::zero(), |acc, (n, d, a, b, c)| {
                acc + MPoly::monomial(Rational::new(n, d), &[(VARS[0], a), (VARS[1], b), (VARS[2], c)])
            })
        })
    }

    fn arb_univariate() -> impl Strategy<Value = MPoly> {
        prop::collection::vec((-3i64..=3, 1u32..4), 1..4).prop_map(|factors| {
            factors.into_iter().fold(MPoly::int(2), |acc, (r, e)| {
                acc * (MPoly::var("x") - MPoly::int(r)).pow(e)
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, MPoly::zero());
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly()) {
            let back: MPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn exact_div_undoes_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn weighted_degree_is_additive(a in arb_poly(), b in arb_poly()) {
            let w = WeightAssignment::from_pairs(&[("x", 1), ("y", 2), ("z", 3)]);
            if let (Some(da), Some(db)) = (a.weighted_degree(&w).unwrap(), b.weighted_degree(&w).unwrap()) {
                prop_assert_eq!((&a * &b).weighted_degree(&w).unwrap(), Some(da + db));
            }
        }

        #[test]
        fn squarefree_round_trip(f in arb_univariate()) {
            let (lc, parts) = squarefree_decomposition(&f).unwrap();
            let rebuilt = parts.iter().fold(MPoly::constant(lc), |acc, p| acc * p.factor.pow(p.multiplicity));
            prop_assert_eq!(rebuilt, f);
            for (i, p) in parts.iter().enumerate() {
                prop_assert!(p.factor.leading_term().unwrap().1.is_one());
                let d = p.factor.derivative("x");
                prop_assert!(poly_gcd(&p.factor, &d).unwrap().is_constant());
                for q in &parts[i + 1..] {
                    prop_assert!(poly_gcd(&p.factor, &q.factor).unwrap().is_constant());
                }
            }
        }

        #[test]
        fn center_of_mass_equivariant(
            coeffs in prop::collection::vec(-4i64..=4, 2..6),
            a0 in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
            sa in prop::sample::select(vec![-2i64, -1, 1, 2, 3]),
            sb in -3i64..=3,
        ) {
            let mut cs: Vec<Rational> = coeffs.into_iter().map(Rational::from_int).collect();
            cs.push(Rational::from_int(a0));
            let d = cs.len() - 1;
            let form = univariate::binary_form(&cs);
            let s = center_of_mass_section(&cs).unwrap();
            // coordinates y' = a y + b x, i.e. y = (y' - b x)/a
            let (a, b) = (Rational::from_int(sa), Rational::from_int(sb));
            let y_old = (&MPoly::var("y") - &MPoly::var("x").scale(&b)).scale(&a.recip().unwrap());
            let transformed = form.subs(&[("y", y_old.clone())]).unwrap();
            let new_coeffs: Vec<Rational> = (0..=d)
                .rev()
                .map(|i| transformed.coefficient(&[("x", i as u32), ("y", (d - i) as u32)]))
                .collect();
            let s_new = center_of_mass_section(&new_coeffs).unwrap();
            let s_rewritten = s.subs(&[("y", y_old)]).unwrap();
            prop_assert_eq!(s_new, s_rewritten.scale(&a));
        }
    }
}
