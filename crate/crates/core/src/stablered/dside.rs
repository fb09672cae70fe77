use std::collections::BTreeMap;

use serde::Serialize;

use super::{a_param, c_param, chart_impl, specialize_branch, tail_family, tail_tree};
use crate::error::{Error, Result};
use crate::singularity::{a_to_d_transform, versal, versal_with_section, SingKind, SingType};
use crate::symkernel::{MPoly, Rational};
use crate::trees::{label_of, StratumLabel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionChart {
    pub j: u32,
    /// A_{n−1} chart equation (with the x^{n−1} translation term) in y − b/2.
    pub equation: MPoly,
    /// Image of b²/4 in this chart.
    pub a0_pullback: MPoly,
    /// b² − 4·a0_pullback: the double cover of the chart on which b lives.
    pub relation: MPoly,
    /// Σ as equations in chart coordinates.
    pub section: [String; 2],
    pub section_on_chart: bool,
    /// Pointed tail over a generic point of E ∩ U_j, χ at x = 0.
    pub generic_tail: StratumLabel,
    pub within_target: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DReduction {
    pub n: u32,
    pub k: u32,
    pub l: u32,
    /// D_n is already allowed: nothing to do.
    pub identity: bool,
    pub provenance: Vec<String>,
    /// y² − b y − x^n − …: the A_{n−1} family with its section.
    pub section_family: MPoly,
    /// Its transform x u² + u b − …, the versal D_n family.
    pub d_family: MPoly,
    pub inverse_consistent: bool,
    /// Completed square y ↦ y + b/2: an A_{n−1} family with a_0 = b²/4 and a
    /// translation term a_{n−1} x^{n−1}.
    pub completed: MPoly,
    pub charts: Vec<SectionChart>,
}

/// Σ_d c_d b^d with b² replaced by `r`.
fn reduce_square(p: &MPoly, b: &str, r: &MPoly) -> MPoly {
    let mut out = MPoly::zero();
    for (d, c) in p.coefficients_in(b).into_iter().enumerate() {
        let d = d as u32;
        let odd = if d % 2 == 1 { MPoly::var(b) } else { MPoly::one() };
        out = &out + &(&(&c * &r.pow(d / 2)) * &odd);
    }
    out
}

fn within(label: &StratumLabel, k: u32, l: u32) -> bool {
    label.singularities.iter().all(|s| match s.kind {
        SingKind::A => s.index <= k,
        SingKind::D => s.index <= l,
    })
}

/// Reduce the versal D_n family towards H_n[k, ℓ] via its A_{n−1}-with-section form.
pub fn d_stable_reduction(n: u32, k: u32, l: u32) -> Result<DReduction> {
    if n < 3 || k == 0 || l == 0 || l > (k + 1).min(n) {
        return Err(Error::IllegalTarget { n, k, l });
    }
    let with_section = versal_with_section(n)?;
    let d_family = a_to_d_transform(&with_section)?;
    let renamed = d_family.equation.subs(&[("u", MPoly::var("y"))])?;
    let inverse_consistent = renamed == versal(SingType::d(n))?.equation;

    let half_b = MPoly::var("b").scale(&Rational::new(1, 2));
    let completed = with_section.equation.subs(&[("y", &MPoly::var("y") + &half_b)])?;
    let mut provenance = vec![
        format!("section family of A_{}: {}", n - 1, with_section.equation),
        format!("blow-up of the conjugate section gives D_{n}: {}", d_family.equation),
        "complete the square: y -> y + b/2".to_string(),
    ];

    let identity = l >= n;
    let mut charts = Vec::new();
    if !identity {
        let ka = n - 1;
        provenance.push(format!(
            "A-side data: a0 = b^2/4, a(m) = old a(m-1) for 1 <= m <= {ka}; base change and charts of A_{ka} with translation"
        ));
        for j in 0..=ka {
            let ch = chart_impl(ka, j, true)?;
            let a0 = if j == 0 {
                MPoly::var("u").pow(n)
            } else {
                (&MPoly::var("u") * &MPoly::var(&c_param(0))).pow(n)
            };
            let relation = &MPoly::var("b").pow(2) - &a0.scale(&Rational::from_int(4));
            let on_section = ch.equation.subs(&[("x", MPoly::zero()), ("y", -&half_b)])?;
            let section_on_chart = reduce_square(&on_section, "b", &a0.scale(&Rational::from_int(4))).is_zero();

            let tail = tail_family(&ch)?;
            let spec: BTreeMap<String, Rational> = tail
                .params
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), Rational::from_int(i as i64 + 2)))
                .collect();
            let branch = specialize_branch(&tail, &spec)?;
            let generic_tail = label_of(&tail_tree(&branch, Some(&Rational::zero()))?)?;
            let within_target = within(&generic_tail, k, l);
            charts.push(SectionChart {
                j,
                equation: ch.equation,
                a0_pullback: a0,
                relation,
                section: ["x = 0".into(), "y = -b/2".into()],
                section_on_chart,
                generic_tail,
                within_target,
            });
        }
        provenance.push(format!("{} charts, u = 0 cuts the exceptional divisor", charts.len()));
    }
    Ok(DReduction {
        n,
        k,
        l,
        identity,
        provenance,
        section_family: with_section.equation,
        d_family: d_family.equation,
        inverse_consistent,
        completed,
        charts,
    })
}

/// Is the completed square y² − x^n − Σ_{m<n} A_m x^m with A_0 = b²/4, A_m = a_{m−1}?
pub fn completed_matches_translated_versal(n: u32) -> Result<bool> {
    let rec = d_stable_reduction(n, n - 1, n)?;
    let mut expect = &MPoly::var("y").pow(2) - &MPoly::var("x").pow(n);
    expect = &expect - &MPoly::var("b").pow(2).scale(&Rational::new(1, 4));
    for m in 1..n {
        expect = &expect - &MPoly::monomial(Rational::one(), &[(&a_param(m - 1), 1), ("x", m)]);
    }
    Ok(expect == rec.completed)
}
