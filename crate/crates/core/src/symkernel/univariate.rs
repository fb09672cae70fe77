use serde::Serialize;

use super::{MPoly, PolyError, Rational};

/// One factor `g^m` of a squarefree decomposition; `g` is monic and squarefree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquarefreeFactor {
    pub factor: MPoly,
    pub multiplicity: u32,
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Rational::is_zero) {
        v.pop();
    }
}

fn dense(f: &MPoly) -> Result<Vec<Rational>, PolyError> {
    let mut v = f.univariate_coeffs()?;
    trim(&mut v);
    Ok(v)
}

fn divrem_dense(a: &[Rational], b: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>), PolyError> {
    let Some(lead) = b.last() else {
        return Err(PolyError::ZeroDivision);
    };
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return Ok((vec![], rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let q = rem.last().unwrap().checked_div(lead)?;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &(&q * c);
        }
        quot[shift] = q;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    Ok((quot, rem))
}

fn monic(v: &[Rational]) -> Vec<Rational> {
    match v.last() {
        Some(lead) if !lead.is_one() => v.iter().map(|c| c / lead).collect(),
        _ => v.to_vec(),
    }
}

fn gcd_dense(a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>, PolyError> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = divrem_dense(&a, &b)?;
        a = b;
        b = r;
    }
    Ok(monic(&a))
}

fn deriv_dense(v: &[Rational]) -> Vec<Rational> {
    v.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * &Rational::from_int(i as i64))
        .collect()
}

/// The variable shared by two univariate inputs.
fn common_var(a: &MPoly, b: &MPoly) -> Result<String, PolyError> {
    let va = a.univariate_var()?;
    let vb = b.univariate_var()?;
    match (va, vb) {
        (Some(x), Some(y)) if x != y => Err(PolyError::NotUnivariate),
        (Some(x), _) | (None, Some(x)) => Ok(x.to_string()),
        (None, None) => Ok("x".to_string()),
    }
}

/// Quotient and remainder of univariate division.
pub fn univariate_divrem(a: &MPoly, b: &MPoly) -> Result<(MPoly, MPoly), PolyError> {
    let var = common_var(a, b)?;
    let (q, r) = divrem_dense(&dense(a)?, &dense(b)?)?;
    Ok((MPoly::from_univariate(&var, &q), MPoly::from_univariate(&var, &r)))
}

pub fn poly_rem(a: &MPoly, b: &MPoly) -> Result<MPoly, PolyError> {
    univariate_divrem(a, b).map(|(_, r)| r)
}

/// Monic gcd of two univariate polynomials (zero if both are zero).
pub fn poly_gcd(a: &MPoly, b: &MPoly) -> Result<MPoly, PolyError> {
    let var = common_var(a, b)?;
    Ok(MPoly::from_univariate(&var, &gcd_dense(&dense(a)?, &dense(b)?)?))
}

/// Yun's algorithm: `f = lc * Π g_i^i`, factors listed by increasing multiplicity.
pub fn squarefree_decomposition(f: &MPoly) -> Result<(Rational, Vec<SquarefreeFactor>), PolyError> {
    let fv = dense(f)?;
    if fv.is_empty() {
        return Err(PolyError::ZeroPolynomial);
    }
    let var = f.univariate_var()?.unwrap_or("x").to_string();
    let lc = fv.last().unwrap().clone();
    let fm = monic(&fv);
    let mut out = Vec::new();
    if fm.len() == 1 {
        return Ok((lc, out));
    }
    let d = deriv_dense(&fm);
    let a0 = gcd_dense(&fm, &d)?;
    let mut b = divrem_dense(&fm, &a0)?.0;
    let c = divrem_dense(&d, &a0)?.0;
    let mut dd = sub_dense(&c, &deriv_dense(&b));
    let mut i = 1u32;
    while b.len() > 1 {
        let a = gcd_dense(&b, &dd)?;
        let b_next = divrem_dense(&b, &a)?.0;
        let c_next = divrem_dense(&dd, &a)?.0;
        if a.len() > 1 {
            out.push(SquarefreeFactor {
                factor: MPoly::from_univariate(&var, &a),
                multiplicity: i,
            });
        }
        dd = sub_dense(&c_next, &deriv_dense(&b_next));
        b = b_next;
        i += 1;
    }
    Ok((lc, out))
}

fn sub_dense(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    let mut v: Vec<Rational> = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(&mut v);
    v
}

#[cfg(test)]
/// `Σ a_i x^i y^(d-i)` from coefficients listed `a_d, …, a_0`.
pub(crate) fn binary_form(coeffs: &[Rational]) -> MPoly {
    let d = coeffs.len().saturating_sub(1);
    coeffs.iter().enumerate().fold(MPoly::zero(), |acc, (idx, c)| {
        let i = (d - idx) as u32;
        acc + MPoly::monomial(c.clone(), &[("x", i), ("y", d as u32 - i)])
    })
}

/// The section `y + a_1/(d a_0) x` through the barycenter of the divisor of
/// `a_d x^d + … + a_1 x y^(d-1) + a_0 y^d`; coefficients are given `a_d, …, a_0`.
pub fn center_of_mass_section(coeffs: &[Rational]) -> Result<MPoly, PolyError> {
    let Some(a0) = coeffs.last() else {
        return Err(PolyError::ZeroPolynomial);
    };
    if a0.is_zero() {
        return Err(PolyError::DivisorMeetsInfinity);
    }
    let d = coeffs.len() - 1;
    if d == 0 {
        return Ok(MPoly::var("y"));
    }
    let a1 = &coeffs[d - 1];
    let slope = a1.checked_div(&(a0 * &Rational::from_int(d as i64)))?;
    Ok(MPoly::var("y") + MPoly::var("x").scale(&slope))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    fn profile(f: &str) -> Vec<(MPoly, u32)> {
        squarefree_decomposition(&p(f))
            .unwrap()
            .1
            .into_iter()
            .map(|s| (s.factor, s.multiplicity))
            .collect()
    }

    #[test]
    fn yun_examples() {
        assert_eq!(profile("x^3*(x-1)^2"), vec![(p("x - 1"), 2), (p("x"), 3)]);
        assert_eq!(profile("x^2 - 1"), vec![(p("x^2 - 1"), 1)]);
        assert_eq!(profile("x^5 + 2x^4 + x^3"), vec![(p("x + 1"), 2), (p("x"), 3)]);
    }

    #[test]
    fn leading_coefficient_is_kept() {
        let (lc, parts) = squarefree_decomposition(&p("3x^2 - 6x + 3")).unwrap();
        assert_eq!(lc, Rational::from_int(3));
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].factor, p("x - 1"));
    }

    #[test]
    fn rejects_bivariate_and_zero() {
        assert_eq!(squarefree_decomposition(&p("x*y")), Err(PolyError::NotUnivariate));
        assert_eq!(squarefree_decomposition(&MPoly::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn center_of_mass_examples() {
        let r = |n| Rational::from_int(n);
        assert_eq!(center_of_mass_section(&[r(1), r(2), r(1)]).unwrap(), p("y + x"));
        assert_eq!(center_of_mass_section(&[r(5), r(0), r(-2)]).unwrap(), p("y"));
        assert_eq!(
            center_of_mass_section(&[r(1), r(1), r(0)]),
            Err(PolyError::DivisorMeetsInfinity)
        );
    }

    #[test]
    fn gcd_and_remainder() {
        assert_eq!(poly_gcd(&p("x^2 - 1"), &p("x^2 + 2x + 1")).unwrap(), p("x + 1"));
        assert_eq!(poly_rem(&p("x^3 + 1"), &p("x - 1")).unwrap(), p("2"));
    }
}
