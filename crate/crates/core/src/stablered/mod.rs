//! Explicit stable reduction of A_k (and, through the section trick, D_n)
//! families: finite base change, blow-up charts and the exceptional tails.

mod dside;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::singularity::{classify_branch_profile, versal, SingType};
use crate::symkernel::{squarefree_decomposition, MPoly, Rational, WeightAssignment};
use crate::trees::{label_of, stratum_label, MarkedPoint, MarkedTree, StratumLabel, WeightVector};

pub use dside::{completed_matches_translated_versal, d_stable_reduction, DReduction, SectionChart};

pub(crate) fn a_param(i: u32) -> String {
    format!("a{i}")
}

pub(crate) fn b_param(i: u32) -> String {
    format!("b{i}")
}

pub(crate) fn c_param(i: u32) -> String {
    format!("c{i}")
}

fn u() -> MPoly {
    MPoly::var("u")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseChange {
    pub k: u32,
    /// a_i ↦ b_i^{k+1−i}.
    pub substitutions: BTreeMap<String, MPoly>,
    pub equation: MPoly,
    pub weights: WeightAssignment,
}

/// Pull the versal A_k family back along a_i = b_i^{k+1−i}.
pub fn base_change(k: u32) -> Result<BaseChange> {
    base_change_impl(k, false)
}

/// With `translation`, the family also carries a_k x^k (a_k = b_k), the
/// extra parameter moving a marked point x = 0 off the centre.
fn base_change_impl(k: u32, translation: bool) -> Result<BaseChange> {
    if k == 0 {
        return Err(Error::InvalidInput("base change needs k >= 1".into()));
    }
    let fam = versal(SingType::a(k))?;
    let wx = fam.weights.get("x").expect("x weighted");
    let mut weights = WeightAssignment::new();
    weights.set("x", wx);
    weights.set("y", fam.weights.get("y").expect("y weighted"));
    let mut equation = fam.equation.clone();
    let mut param_weights = fam.weights.clone();
    if translation {
        equation = &equation - &MPoly::monomial(Rational::one(), &[(&a_param(k), 1), ("x", k)]);
        param_weights.set(a_param(k), wx);
    }
    let mut substitutions = BTreeMap::new();
    for i in 0..k + translation as u32 {
        let e = k + 1 - i;
        let wa = param_weights.get(&a_param(i)).expect("param weighted");
        if wa % e != 0 {
            return Err(Error::NotQuasiHomogeneous(format!(
                "weight {wa} of a{i} not divisible by {e}"
            )));
        }
        weights.set(b_param(i), wa / e);
        substitutions.insert(a_param(i), MPoly::var(&b_param(i)).pow(e));
    }
    let equation = equation.substitute(&substitutions)?;
    Ok(BaseChange {
        k,
        substitutions,
        equation,
        weights,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChartFamily {
    pub k: u32,
    pub j: u32,
    /// y² − x^{k+1} − Σ_{i≠j} c_i^{k+1−i} u^{k+1−i} x^i − u^{k+1−j} x^j.
    pub equation: MPoly,
    /// The exceptional divisor of the base blow-up, u = 0.
    pub exceptional: MPoly,
    pub params: Vec<String>,
    /// Weights of the weighted blow-up: x, u ↦ 2, y ↦ k+1, chart coordinates c ↦ 0.
    pub weights: WeightAssignment,
}

/// b_i ↦ u c_i for i ≠ j, b_j ↦ u.
pub fn chart_substitution(k: u32, j: u32) -> Result<BTreeMap<String, MPoly>> {
    chart_substitution_impl(k, j, false)
}

fn chart_substitution_impl(k: u32, j: u32, translation: bool) -> Result<BTreeMap<String, MPoly>> {
    let count = k + translation as u32;
    if j >= count {
        return Err(Error::ChartOutOfRange { k, j });
    }
    Ok((0..count)
        .map(|i| {
            let img = if i == j { u() } else { &u() * &MPoly::var(&c_param(i)) };
            (b_param(i), img)
        })
        .collect())
}

pub fn chart(k: u32, j: u32) -> Result<ChartFamily> {
    chart_impl(k, j, false)
}

pub(crate) fn chart_impl(k: u32, j: u32, translation: bool) -> Result<ChartFamily> {
    let subs = chart_substitution_impl(k, j, translation)?;
    let bc = base_change_impl(k, translation)?;
    let equation = bc.equation.substitute(&subs)?;
    let params: Vec<String> = (0..k + translation as u32).filter(|&i| i != j).map(c_param).collect();
    let mut weights = WeightAssignment::from_pairs(&[("x", 2), ("u", 2), ("y", k + 1)]);
    for p in &params {
        weights.set(p.clone(), 0);
    }
    Ok(ChartFamily {
        k,
        j,
        equation,
        exceptional: u(),
        params,
        weights,
    })
}

pub fn charts(k: u32) -> Result<Vec<ChartFamily>> {
    (0..k).map(|j| chart(k, j)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailFamily {
    pub k: u32,
    pub j: u32,
    pub equation: MPoly,
    pub params: Vec<String>,
    /// (x, u, y) ↦ (2, 2, k+1).
    pub weights: WeightAssignment,
    pub weighted_degree: u64,
}

/// The chart equation read in P(2,2,k+1) over E ∩ U_j.
pub fn tail_family(c: &ChartFamily) -> Result<TailFamily> {
    let expected = 2 * (c.k as u64 + 1);
    match c.equation.weighted_degree(&c.weights)? {
        Some(d) if d == expected => Ok(TailFamily {
            k: c.k,
            j: c.j,
            equation: c.equation.clone(),
            params: c.params.clone(),
            weights: c.weights.clone(),
            weighted_degree: d,
        }),
        Some(d) => Err(Error::NotQuasiHomogeneous(format!("degree {d}, expected {expected}"))),
        None => Err(Error::NotQuasiHomogeneous(format!(
            "{} is not weighted homogeneous",
            c.equation
        ))),
    }
}

impl TailFamily {
    /// Branch form in the u = 1 patch, still symbolic in the c's: monic of degree k+1.
    pub fn branch_polynomial(&self) -> Result<MPoly> {
        let y_free = self.equation.subs(&[("u", MPoly::one()), ("y", MPoly::zero())])?;
        Ok(-y_free)
    }
}

/// Points of P(2, k+1) on y² = x^{k+1}: the attaching locus of the tail.
///
/// Fix x = 1; the stabiliser μ_2 of that slice acts on the two solutions
/// y = ±1 by (−1)^{k+1}, so they are identified unless gcd(2, k+1) = 2.
pub fn attaching_points(k: u32) -> u32 {
    let (wx, wy) = (2u64, k as u64 + 1);
    let solutions = 2u64;
    let orbit = wx / Rational::gcd_int(wx, wy);
    (solutions / orbit) as u32
}

/// Specialization values: `c{i}` sets c_i, `e{i}` sets c_i^{k+1−i} directly
/// (over an algebraically closed field every value of the power is attained).
pub fn specialize_branch(t: &TailFamily, spec: &BTreeMap<String, Rational>) -> Result<MPoly> {
    let mut p = t.branch_polynomial()?;
    for name in &t.params {
        let i: u32 = name[1..].parse().expect("c-index");
        let e = t.k + 1 - i;
        let power = match (spec.get(name), spec.get(&format!("e{i}"))) {
            (Some(c), None) => c.pow(e),
            (None, Some(v)) => v.clone(),
            (Some(_), Some(_)) => {
                return Err(Error::InvalidInput(format!("both c{i} and e{i} given")));
            }
            (None, None) => return Err(Error::InvalidInput(format!("no value for {name}"))),
        };
        // c_i only occurs through c_i^{k+1−i}
        let (q, r) = split_by_power(&p, name, e)?;
        p = &(&q * &MPoly::constant(power)) + &r;
    }
    for key in spec.keys() {
        let idx = key.get(1..).and_then(|s| s.parse::<u32>().ok());
        let known =
            matches!(key.chars().next(), Some('c') | Some('e')) && idx.is_some_and(|i| t.params.contains(&c_param(i)));
        if !known {
            return Err(Error::InvalidInput(format!(
                "{key} is not a parameter of chart {}",
                t.j
            )));
        }
    }
    Ok(p)
}

/// p = q · v^e + r with v absent from q and r.
fn split_by_power(p: &MPoly, v: &str, e: u32) -> Result<(MPoly, MPoly)> {
    let coeffs = p.coefficients_in(v);
    let mut q = MPoly::zero();
    let mut r = MPoly::zero();
    for (d, c) in coeffs.into_iter().enumerate() {
        match d as u32 {
            0 => r = c,
            d if d == e => q = c,
            _ if c.is_zero() => {}
            d => {
                return Err(Error::InvalidInput(format!("{v}^{d} occurs; expected only {v}^{e}")));
            }
        }
    }
    Ok((q, r))
}

pub(crate) fn tail_tree(p: &MPoly, marked: Option<&Rational>) -> Result<MarkedTree> {
    let (_, parts) = squarefree_decomposition(p)?;
    let mut points = Vec::new();
    let mut chi_placed = marked.is_none();
    for part in &parts {
        let mut count = part.factor.degree_in("x");
        if let Some(at) = marked {
            let vals = BTreeMap::from([("x".to_string(), at.clone())]);
            if !chi_placed && part.factor.eval_partial(&vals).is_zero() {
                points.push(MarkedPoint::chi(part.multiplicity));
                chi_placed = true;
                count -= 1;
            }
        }
        points.extend(std::iter::repeat_n(
            MarkedPoint::branch(part.multiplicity),
            count as usize,
        ));
    }
    if !chi_placed {
        points.push(MarkedPoint::chi(0));
    }
    Ok(MarkedTree::single(points))
}

/// Stratum of the tail over one point of E ∩ U_j, as a point of H_k[k−1].
pub fn verify_tail_membership(t: &TailFamily, spec: &BTreeMap<String, Rational>) -> Result<StratumLabel> {
    let p = specialize_branch(t, spec)?;
    if let Some(worst) = classify_branch_profile(&p, None)?.iter().map(|b| b.multiplicity).max() {
        if worst > t.k {
            return Err(Error::DegenerateSpecialization(format!(
                "branch point of multiplicity {worst} on the tail of A_{}",
                t.k
            )));
        }
    }
    let tree = tail_tree(&p, None)?;
    if t.k >= 2 {
        let w = WeightVector::for_window(t.k, t.k - 1, None)?;
        stratum_label(&tree, &w)
    } else {
        label_of(&tree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingFormCheck {
    pub monic_degree: bool,
    pub centered: bool,
    pub chart_term_unit: bool,
}

impl LeadingFormCheck {
    /// A monic centered form with a unit x^j coefficient is never (x − r)^{k+1}.
    pub fn excludes_total_collision(&self) -> bool {
        self.monic_degree && self.centered && self.chart_term_unit
    }
}

/// Symbolic check that no specialization of the tail has a (k+1)-fold root.
pub fn leading_form_check(t: &TailFamily) -> Result<LeadingFormCheck> {
    let p = t.branch_polynomial()?;
    let coeffs = p.coefficients_in("x");
    let k = t.k as usize;
    let at = |d: usize| coeffs.get(d).cloned().unwrap_or_else(MPoly::zero);
    Ok(LeadingFormCheck {
        monic_degree: coeffs.len() == k + 2 && at(k + 1) == MPoly::one(),
        centered: at(k).is_zero(),
        chart_term_unit: at(t.j as usize).as_constant().is_some_and(|c| !c.is_zero()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralFiber {
    /// Restriction to u = 0: the pulled-back central fibre y² = x^{k+1}.
    pub strict_transform: MPoly,
    pub attaching_points: u32,
    pub tail_degree: u64,
    /// Genus of a generic tail.
    pub tail_genus: u32,
    /// Tail genus + attaching points − 1; must equal δ(A_k).
    pub genus_contribution: u32,
}

pub fn central_fiber(c: &ChartFamily) -> Result<CentralFiber> {
    let strict_transform = c.equation.subs(&[("u", MPoly::zero())])?;
    let tail = tail_family(c)?;
    let generic = MarkedTree::single(vec![MarkedPoint::branch(1); c.k as usize + 1]);
    let tail_genus = crate::trees::arithmetic_genus(&generic)?.genus;
    let att = attaching_points(c.k);
    Ok(CentralFiber {
        strict_transform,
        attaching_points: att,
        tail_degree: tail.weighted_degree,
        tail_genus,
        genus_contribution: tail_genus + att - 1,
    })
}

/// Replace w·v by 1 wherever w pairs with v; fails if a bare w survives.
fn clear_inverse(p: &MPoly, w: &str, v: &str) -> Result<MPoly> {
    let mut out = MPoly::zero();
    for (exps, coeff) in p.named_terms() {
        let a = exps.get(w).copied().unwrap_or(0);
        let b = exps.get(v).copied().unwrap_or(0);
        if a > b {
            return Err(Error::InvalidInput(format!("{w}^{a} exceeds {v}^{b}")));
        }
        let factors: Vec<(&str, u32)> = exps
            .iter()
            .filter(|(n, _)| n.as_str() != w && n.as_str() != v)
            .map(|(n, e)| (n.as_str(), *e))
            .chain(std::iter::once((v, b - a)))
            .collect();
        out = &out + &MPoly::monomial(coeff, &factors);
    }
    Ok(out)
}

/// Chart j' pulled back to chart j by u' = u c_{j'}, c'_i = c_i / c_{j'},
/// c'_j = 1 / c_{j'}; true when it reproduces chart j exactly.
pub fn charts_compatible(k: u32, j: u32, j2: u32) -> Result<bool> {
    let a = chart(k, j)?;
    let b = chart(k, j2)?;
    if j == j2 {
        return Ok(true);
    }
    let inv = "__inv";
    let cj2 = MPoly::var(&c_param(j2));
    let mut subs = BTreeMap::new();
    subs.insert("u".to_string(), &u() * &cj2);
    for i in 0..k {
        if i == j2 {
            continue;
        }
        let img = if i == j {
            MPoly::var(inv)
        } else {
            &MPoly::var(&c_param(i)) * &MPoly::var(inv)
        };
        subs.insert(c_param(i), img);
    }
    let pulled = b.equation.substitute(&subs)?;
    Ok(clear_inverse(&pulled, inv, &c_param(j2))? == a.equation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn base_change_small() {
        let bc = base_change(2).unwrap();
        assert_eq!(bc.substitutions["a1"], p("b1^2"));
        assert_eq!(bc.substitutions["a0"], p("b0^3"));
        assert_eq!(bc.equation, p("y^2 - x^3 - b1^2*x - b0^3"));
        assert!(bc.equation.weighted_degree(&bc.weights).unwrap().is_some());
        let bc = base_change(1).unwrap();
        assert_eq!(bc.substitutions["a0"], p("b0^2"));
    }

    #[test]
    fn chart_equations() {
        // derived from the substitutions: the x-term carries u^{k+1-j}
        assert_eq!(chart(2, 1).unwrap().equation, p("y^2 - x^3 - u^2*x - c0^3*u^3"));
        assert_eq!(chart(2, 0).unwrap().equation, p("y^2 - x^3 - c1^2*u^2*x - u^3"));
        assert!(matches!(chart(2, 2), Err(Error::ChartOutOfRange { k: 2, j: 2 })));
        for k in 1..=6 {
            for c in charts(k).unwrap() {
                let cf = central_fiber(&c).unwrap();
                assert_eq!(cf.strict_transform, p(&format!("y^2 - x^{}", k + 1)));
                let zeros: BTreeMap<String, Rational> =
                    c.params.iter().map(|n| (n.clone(), Rational::zero())).collect();
                let slice = c.equation.eval_partial(&zeros);
                let expect = p(&format!("y^2 - x^{} - u^{}*x^{}", k + 1, k + 1 - c.j, c.j));
                assert_eq!(slice, expect);
            }
        }
    }

    #[test]
    fn tails_and_attaching() {
        for k in 1..=8 {
            for c in charts(k).unwrap() {
                let t = tail_family(&c).unwrap();
                assert_eq!(t.weighted_degree, 2 * (k as u64 + 1));
                assert!(leading_form_check(&t).unwrap().excludes_total_collision());
                let cf = central_fiber(&c).unwrap();
                assert_eq!(cf.genus_contribution, SingType::a(k).delta());
            }
            assert_eq!(attaching_points(k), if k % 2 == 1 { 2 } else { 1 });
        }
        let mut bad = chart(3, 0).unwrap();
        bad.equation = &bad.equation + &p("x");
        assert!(matches!(tail_family(&bad), Err(Error::NotQuasiHomogeneous(_))));
    }

    #[test]
    fn compatibility() {
        for k in 1..=5 {
            for j in 0..k {
                for j2 in 0..k {
                    assert!(charts_compatible(k, j, j2).unwrap(), "k={k} {j}->{j2}");
                }
            }
        }
    }

    #[test]
    fn membership() {
        let r = Rational::new;
        let t = tail_family(&chart(3, 1).unwrap()).unwrap();
        // generic point
        let spec = BTreeMap::from([("c0".to_string(), r(1, 1)), ("c2".to_string(), r(2, 1))]);
        let l = verify_tail_membership(&t, &spec).unwrap();
        assert_eq!(l.codim, 0);
        // (x − 1/2)^3 (x + 3/2) = x^4 − 3/2 x^2 + x − 3/16: an A_2 on the tail
        let spec = BTreeMap::from([("e0".to_string(), r(-3, 16)), ("e2".to_string(), r(-3, 2))]);
        let l = verify_tail_membership(&t, &spec).unwrap();
        assert_eq!(l.singularities, vec![SingType::a(2)]);
        // all c zero: x^4 + x = x (x^3 + 1), smooth
        let zeros = BTreeMap::from([("c0".to_string(), r(0, 1)), ("c2".to_string(), r(0, 1))]);
        assert_eq!(verify_tail_membership(&t, &zeros).unwrap().codim, 0);
        assert!(verify_tail_membership(&t, &BTreeMap::new()).is_err());
    }
}
