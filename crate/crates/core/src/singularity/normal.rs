use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symkernel::{MPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    /// Coefficients `a_{n−1}, …, a_0` after removing the x^n term.
    pub coeffs: Vec<Rational>,
    /// The shift `s` used in `x ↦ x + s`.
    pub shift: Rational,
    /// All coefficients vanish: the divisor is a single point of full multiplicity.
    pub all_zero: bool,
}

/// Translates a monic degree-(n+1) polynomial so its x^n coefficient vanishes.
pub fn normal_form(f: &MPoly) -> Result<NormalForm> {
    let coeffs = f.univariate_coeffs()?;
    let var = f.univariate_var()?.unwrap_or("x").to_string();
    let deg = coeffs.len() - 1;
    if deg < 1 || !coeffs[deg].is_one() {
        return Err(Error::InvalidInput(format!(
            "normal form needs a monic polynomial of positive degree, got {f}"
        )));
    }
    let n = deg - 1;
    let shift = -(&coeffs[n] / &Rational::from_int(deg as i64));
    let moved = f.subs(&[(var.as_str(), &MPoly::var(&var) + &MPoly::constant(shift.clone()))])?;
    let out = moved.univariate_coeffs()?;
    debug_assert!(deg == 1 || out[n].is_zero());
    let coeffs: Vec<Rational> = (0..n).rev().map(|i| out[i].clone()).collect();
    Ok(NormalForm {
        all_zero: coeffs.iter().all(Rational::is_zero),
        coeffs,
        shift,
    })
}

/// Weights of the weighted projective space underlying the top window.
pub fn wps_weights(n: u32, pointed: bool) -> Result<Vec<u32>> {
    match pointed {
        false if n >= 2 => Ok(if n % 2 == 1 {
            (2..=n + 1).collect()
        } else {
            (2..=n + 1).map(|w| 2 * w).collect()
        }),
        true if n >= 4 => Ok(if n.is_multiple_of(2) {
            std::iter::once(n / 2).chain(1..n).collect()
        } else {
            std::iter::once(n).chain((1..n).map(|w| 2 * w)).collect()
        }),
        _ => Err(Error::UnsupportedIndex {
            kind: if pointed { 'D' } else { 'A' },
            index: n,
        }),
    }
}

fn ratio_pow_eq(ri: &Rational, ej: u32, rj: &Rational, ei: u32) -> bool {
    ri.pow(ej) == rj.pow(ei)
}

/// Decides whether `q = λ·p` in weighted projective space for some λ ≠ 0.
///
/// Weights are first divided by their gcd over the common support, so that a
/// root of unity hidden in a shared factor is not mistaken for equality.
pub fn wps_equal(p: &[Rational], q: &[Rational], w: &[u32]) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch(p.len(), q.len()));
    }
    if p.len() != w.len() {
        return Err(Error::DimensionMismatch(p.len(), w.len()));
    }
    if p.iter().all(Rational::is_zero) || q.iter().all(Rational::is_zero) {
        return Err(Error::ZeroVector);
    }
    if w.contains(&0) {
        return Err(Error::InvalidInput("weights must be positive".into()));
    }
    if p.iter().zip(q).any(|(a, b)| a.is_zero() != b.is_zero()) {
        return Ok(false);
    }
    let support: Vec<usize> = (0..p.len()).filter(|&i| !p[i].is_zero()).collect();
    let g = support.iter().fold(0u32, |acc, &i| acc.gcd(&w[i]));
    let ratios: Vec<(Rational, u32)> = support.iter().map(|&i| (&q[i] / &p[i], w[i] / g)).collect();
    for (i, (ri, ei)) in ratios.iter().enumerate() {
        for (rj, ej) in &ratios[i + 1..] {
            if !ratio_pow_eq(ri, *ej, rj, *ei) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singularity::{versal, SingType};

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&p("x^2*(x - 3)")).unwrap();
        assert_eq!(nf.coeffs, vec![r(-3), r(-2)]);
        assert_eq!(nf.shift, r(1));
        assert!(!nf.all_zero);
        assert!(normal_form(&p("x^5")).unwrap().all_zero);
        assert!(normal_form(&p("2x^2")).is_err());
    }

    #[test]
    fn normal_form_by_symmetric_functions() {
        // roots 1, 1, 1, -3 sum to 0, so no shift is needed
        let nf = normal_form(&p("(x - 1)^3*(x + 3)")).unwrap();
        assert_eq!(nf.shift, r(0));
        let expanded = p("(x - 1)^3*(x + 3)");
        let expect: Vec<Rational> = (0..3).rev().map(|i| expanded.coefficient(&[("x", i)])).collect();
        assert_eq!(nf.coeffs, expect);
        assert_eq!(nf.coeffs, vec![r(-6), r(8), r(-3)]);
    }

    #[test]
    fn weights_match_displays() {
        assert_eq!(wps_weights(5, false).unwrap(), vec![2, 3, 4, 5, 6]);
        assert_eq!(wps_weights(4, false).unwrap(), vec![4, 6, 8, 10]);
        assert_eq!(wps_weights(5, true).unwrap(), vec![5, 2, 4, 6, 8]);
        assert_eq!(wps_weights(4, true).unwrap(), vec![2, 1, 2, 3]);
        assert!(wps_weights(3, true).is_err());
    }

    #[test]
    fn weights_are_parameter_weights() {
        for n in 2..=12 {
            let fam = versal(SingType::a(n)).unwrap();
            let mut got: Vec<u32> = fam.params.iter().map(|a| fam.weights.get(a).unwrap()).collect();
            got.sort();
            let mut want = wps_weights(n, false).unwrap();
            want.sort();
            assert_eq!(got, want, "A{n}");
        }
        for n in 4..=12 {
            let fam = versal(SingType::d(n)).unwrap();
            let got: Vec<u32> = fam.params.iter().map(|a| fam.weights.get(a).unwrap()).collect();
            assert_eq!(got, wps_weights(n, true).unwrap(), "D{n}");
        }
    }

    #[test]
    fn wps_equality() {
        let w = [2, 3];
        assert!(wps_equal(&[r(1), r(1)], &[r(1), r(1)], &w).unwrap());
        assert!(wps_equal(&[r(1), r(1)], &[r(4), r(8)], &w).unwrap());
        assert!(!wps_equal(&[r(1), r(1)], &[r(4), r(9)], &w).unwrap());
        assert!(!wps_equal(&[r(1), r(0)], &[r(1), r(1)], &w).unwrap());
        assert!(matches!(
            wps_equal(&[r(0), r(0)], &[r(1), r(1)], &w),
            Err(Error::ZeroVector)
        ));
        // λ² = 1 and λ² = −1 cannot both hold
        assert!(!wps_equal(&[r(1), r(1)], &[r(1), r(-1)], &[2, 2]).unwrap());
        assert!(wps_equal(&[r(1), r(1)], &[r(-1), r(1)], &[1, 2]).unwrap());
    }
}
