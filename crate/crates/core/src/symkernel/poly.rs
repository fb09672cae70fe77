use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PolyError, Rational, WeightAssignment};

/// Exponent vector ordered graded-lexicographically.
///
/// Comparison is only meaningful between monomials over the same variable list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()
            .map(Monomial)
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Variables are kept sorted alphabetically and only variables that occur in
/// some term are retained, so two polynomials are equal exactly when they are
/// equal as mathematical objects.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(vec![]), c);
        }
        MPoly { vars: vec![], terms }
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(Rational::from_int(n))
    }

    pub fn var(name: &str) -> Self {
        MPoly::monomial(Rational::one(), &[(name, 1)])
    }

    /// `coeff * Π name^exp`; repeated names multiply.
    pub fn monomial(coeff: Rational, factors: &[(&str, u32)]) -> Self {
        let mut map: BTreeMap<String, u32> = BTreeMap::new();
        for (name, e) in factors {
            *map.entry((*name).to_string()).or_default() += e;
        }
        let vars: Vec<String> = map.keys().cloned().collect();
        let exps: Vec<u32> = map.values().copied().collect();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Monomial(exps), coeff);
        }
        MPoly { vars, terms }.canonical()
    }

    /// Builds a polynomial from `(coefficient, [(var, exp)])` pairs.
    pub fn from_terms<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<(&'a str, u32)>)>,
    {
        terms
            .into_iter()
            .fold(MPoly::zero(), |acc, (c, f)| acc + MPoly::monomial(c, &f))
    }

    /// Univariate polynomial in `var` from coefficients listed low degree first.
    pub fn from_univariate(var: &str, coeffs: &[Rational]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(Monomial(vec![i as u32]), c.clone());
            }
        }
        MPoly {
            vars: vec![var.to_string()],
            terms,
        }
        .canonical()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m.degree() == 0)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Iterates terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    /// Terms with exponents keyed by variable name, descending order.
    pub fn named_terms(&self) -> Vec<(BTreeMap<String, u32>, Rational)> {
        self.terms()
            .map(|(m, c)| {
                let exps = self
                    .vars
                    .iter()
                    .zip(&m.0)
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| (v.clone(), e))
                    .collect();
                (exps, c.clone())
            })
            .collect()
    }

    /// Coefficient of the monomial given by `exps` (missing names mean exponent 0).
    pub fn coefficient(&self, exps: &[(&str, u32)]) -> Rational {
        let mut want = vec![0u32; self.vars.len()];
        for (name, e) in exps {
            if *e == 0 {
                continue;
            }
            match self.vars.iter().position(|v| v == name) {
                Some(i) => want[i] += e,
                None => return Rational::zero(),
            }
        }
        self.terms.get(&Monomial(want)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Drops unused variables. Every constructor funnels through here.
    fn canonical(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(m, c)| {
                let exps = m.0.into_iter().zip(&used).filter(|(_, &u)| u).map(|(e, _)| e).collect();
                (Monomial(exps), c)
            })
            .collect();
        MPoly { vars, terms }
    }

    fn merged_vars(&self, other: &MPoly) -> Vec<String> {
        let set: BTreeSet<&String> = self.vars.iter().chain(&other.vars).collect();
        set.into_iter().cloned().collect()
    }

    /// Re-expresses the terms over a superset `universe` of this polynomial's variables.
    fn terms_over(&self, universe: &[String]) -> BTreeMap<Monomial, Rational> {
        if universe == self.vars.as_slice() {
            return self.terms.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| universe.iter().position(|u| u == v).expect("universe"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; universe.len()];
                for (i, &e) in m.0.iter().enumerate() {
                    exps[map[i]] = e;
                }
                (Monomial(exps), c.clone())
            })
            .collect()
    }

    pub fn checked_add(&self, other: &MPoly) -> MPoly {
        let vars = self.merged_vars(other);
        let mut terms = self.terms_over(&vars);
        for (m, c) in other.terms_over(&vars) {
            *terms.entry(m).or_default() += &c;
        }
        MPoly { vars, terms }.canonical()
    }

    pub fn scale(&self, k: &Rational) -> MPoly {
        if k.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        let vars = self.merged_vars(other);
        let a = self.terms_over(&vars);
        let b = other.terms_over(&vars);
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(a.len() * b.len());
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let m = ma.checked_mul(mb)?;
                *acc.entry(m).or_default() += &(ca * cb);
            }
        }
        Ok(MPoly {
            vars,
            terms: acc.into_iter().collect(),
        }
        .canonical())
    }

    pub fn checked_pow(&self, e: u32) -> Result<MPoly, PolyError> {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        self.checked_pow(e).expect("exponent overflow")
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::ZeroDivision);
        }
        let vars = self.merged_vars(divisor);
        let mut rem = self.terms_over(&vars);
        let d = divisor.terms_over(&vars);
        let (dlm, dlc) = d.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut quot: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((lm, lc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !dlm.divides(&lm) {
                return Err(PolyError::NotDivisible);
            }
            let qm = lm.div(&dlm);
            let qc = lc.checked_div(&dlc)?;
            for (m, c) in &d {
                let prod = qm.checked_mul(m)?;
                let entry = rem.entry(prod.clone()).or_default();
                *entry -= &(&qc * c);
                if entry.is_zero() {
                    rem.remove(&prod);
                }
            }
            *quot.entry(qm).or_default() += &qc;
        }
        Ok(MPoly { vars, terms: quot }.canonical())
    }

    /// Simultaneous substitution `var ↦ poly`; unbound variables pass through.
    pub fn substitute(&self, bindings: &BTreeMap<String, MPoly>) -> Result<MPoly, PolyError> {
        if bindings.is_empty() || !self.vars.iter().any(|v| bindings.contains_key(v)) {
            return Ok(self.clone());
        }
        // cache powers per variable
        let mut powers: Vec<Vec<MPoly>> = self
            .vars
            .iter()
            .map(|v| vec![MPoly::one(), bindings.get(v).cloned().unwrap_or_else(|| MPoly::var(v))])
            .collect();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().checked_mul(&powers[i][1])?;
                    powers[i].push(next);
                }
                t = t.checked_mul(&powers[i][e])?;
            }
            out = out.checked_add(&t);
        }
        Ok(out)
    }

    /// Convenience wrapper over [`MPoly::substitute`] with `&str` keys.
    pub fn subs(&self, bindings: &[(&str, MPoly)]) -> Result<MPoly, PolyError> {
        let map = bindings.iter().map(|(k, v)| ((*k).to_string(), v.clone())).collect();
        self.substitute(&map)
    }

    /// Substitutes rational values for the named variables.
    pub fn eval_partial(&self, values: &BTreeMap<String, Rational>) -> MPoly {
        let map = values
            .iter()
            .map(|(k, v)| (k.clone(), MPoly::constant(v.clone())))
            .collect();
        self.substitute(&map).expect("constant substitution cannot overflow")
    }

    pub fn derivative(&self, var: &str) -> MPoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return MPoly::zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| {
                let mut exps = m.0.clone();
                let e = exps[i];
                exps[i] -= 1;
                (Monomial(exps), c * &Rational::from_int(e as i64))
            })
            .collect();
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
        .canonical()
    }

    /// Common weighted degree of all terms, or `None` when terms disagree.
    ///
    /// The zero polynomial has no degree.
    pub fn weighted_degree(&self, w: &WeightAssignment) -> Result<Option<u64>, PolyError> {
        let weights: Vec<u64> = self
            .vars
            .iter()
            .map(|v| {
                w.get(v)
                    .map(|x| x as u64)
                    .ok_or_else(|| PolyError::UnweightedVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut degree = None;
        for m in self.terms.keys() {
            let d: u64 = m.0.iter().zip(&weights).map(|(&e, &wt)| e as u64 * wt).sum();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Ok(None),
                _ => {}
            }
        }
        Ok(degree)
    }

    /// Expands as a polynomial in `var` with polynomial coefficients, low degree first.
    pub fn coefficients_in(&self, var: &str) -> Vec<MPoly> {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let mut out: Vec<BTreeMap<Monomial, Rational>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps[i] as usize;
            exps[i] = 0;
            out[e].insert(Monomial(exps), c.clone());
        }
        out.into_iter()
            .map(|terms| {
                MPoly {
                    vars: self.vars.clone(),
                    terms,
                }
                .canonical()
            })
            .collect()
    }

    /// The single variable of a univariate polynomial (`None` for constants).
    pub fn univariate_var(&self) -> Result<Option<&str>, PolyError> {
        match self.vars.len() {
            0 => Ok(None),
            1 => Ok(Some(self.vars[0].as_str())),
            _ => Err(PolyError::NotUnivariate),
        }
    }

    /// Dense coefficients (low degree first) of a univariate polynomial.
    pub fn univariate_coeffs(&self) -> Result<Vec<Rational>, PolyError> {
        self.univariate_var()?;
        let deg = self.terms.keys().map(|m| m.degree()).max().unwrap_or(0) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.degree() as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }

    /// Keeps only the terms for which `keep` returns true.
    pub fn filter_terms<F>(&self, mut keep: F) -> MPoly
    where
        F: FnMut(&BTreeMap<String, u32>) -> bool,
    {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| {
                let named = self
                    .vars
                    .iter()
                    .zip(&m.0)
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| (v.clone(), e))
                    .collect();
                keep(&named)
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
        .canonical()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs)
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        self.checked_add(&rhs)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_add(&-rhs)
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Panics on exponent overflow; see [`MPoly::checked_mul`].
impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("exponent overflow")
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x + 1") * &p("x - 1"), p("x^2 - 1"));
    }

    #[test]
    fn pow_zero_is_one() {
        assert_eq!(p("y").pow(0), MPoly::one());
    }

    #[test]
    fn exact_division_in_transform() {
        let g = p("x^3 + 2*x + 5");
        let dividend = &p("x*u^2 + b*u*x") - &(&p("x") * &g);
        let q = dividend.exact_div(&p("x")).unwrap();
        assert_eq!(q, &p("u^2 + b*u") - &g);
        assert_eq!(&q * &p("x"), dividend);
    }

    #[test]
    fn exact_division_rejects_remainder() {
        assert_eq!(p("x^2 + 1").exact_div(&p("x")), Err(PolyError::NotDivisible));
        assert_eq!(p("x").exact_div(&MPoly::zero()), Err(PolyError::ZeroDivision));
    }

    #[test]
    fn unused_variables_are_dropped() {
        let a = &p("x + y") - &p("y");
        assert_eq!(a, p("x"));
        assert_eq!(a.vars(), &["x".to_string()]);
    }

    #[test]
    fn substitution_expands() {
        let f = p("y^2 - x^3");
        let g = f.subs(&[("y", p("x*u + b"))]).unwrap();
        assert_eq!(g, p("x^2*u^2 + 2*b*x*u + b^2 - x^3"));
        assert_eq!(p("x^2 + a0").subs(&[("a0", p("b0^2"))]).unwrap(), p("x^2 + b0^2"));
        assert_eq!(f.substitute(&BTreeMap::new()).unwrap(), f);
    }

    #[test]
    fn substitution_is_simultaneous() {
        let f = p("x - y");
        let g = f.subs(&[("x", p("y")), ("y", p("x"))]).unwrap();
        assert_eq!(g, p("y - x"));
    }

    #[test]
    fn weighted_degrees() {
        let w = WeightAssignment::from_pairs(&[("x", 2), ("y", 3), ("a0", 6)]);
        assert_eq!(p("y^2 - x^3").weighted_degree(&w).unwrap(), Some(6));
        assert_eq!(p("y^2 - x^3 - a0").weighted_degree(&w).unwrap(), Some(6));
        let w2 = WeightAssignment::from_pairs(&[("x", 1), ("y", 2)]);
        assert_eq!(p("x + y").weighted_degree(&w2).unwrap(), None);
        assert_eq!(
            p("z").weighted_degree(&w2),
            Err(PolyError::UnweightedVariable("z".into()))
        );
    }

    #[test]
    fn exponent_overflow_is_an_error() {
        let big = MPoly::monomial(Rational::one(), &[("x", u32::MAX)]);
        assert_eq!(big.checked_mul(&p("x")), Err(PolyError::ExponentOverflow));
    }

    #[test]
    fn derivative_and_coefficients() {
        let f = p("x^3*y + 2*x*y^2 + 7");
        assert_eq!(f.derivative("x"), p("3*x^2*y + 2*y^2"));
        let cs = f.coefficients_in("y");
        assert_eq!(cs, vec![p("7"), p("x^3"), p("2*x")]);
        assert_eq!(f.coefficient(&[("x", 1), ("y", 2)]), Rational::from_int(2));
        assert_eq!(f.coefficient(&[("z", 1)]), Rational::zero());
    }

    #[test]
    fn display_ordering_is_grlex_descending() {
        let f = p("1 + x + y^2 - 3/4*x*y");
        assert_eq!(f.to_string(), "-3/4*x*y + y^2 + x + 1");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(MPoly::zero().to_string(), "0");
    }
}
