use serde::Serialize;

use super::SingType;
use crate::error::Result;
use crate::symkernel::{squarefree_decomposition, MPoly, PolyError, Rational};

/// One singularity of the double cover branched along the roots of `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchSingularity {
    pub sing: SingType,
    /// Branch multiplicity of the cluster.
    pub multiplicity: u32,
    /// Squarefree factor whose roots carry this multiplicity.
    pub factor: MPoly,
}

fn eval(f: &MPoly, var: &str, at: &Rational) -> Rational {
    let v = std::iter::once((var.to_string(), at.clone())).collect();
    f.eval_partial(&v).constant_term()
}

/// Order of vanishing of `f` at `at`.
fn root_multiplicity(f: &MPoly, var: &str, at: &Rational) -> u32 {
    let mut g = f.clone();
    let mut m = 0;
    while !g.is_zero() && eval(&g, var, at).is_zero() {
        g = g.derivative(var);
        m += 1;
    }
    m
}

/// Singularities of `y² = f(x)`, with an optional marked x-coordinate.
///
/// A cluster of multiplicity m ≥ 2 gives A_{m−1}; the marked point on a cluster
/// of multiplicity m ≥ 1 gives D_m instead. The marked entry comes first, then
/// A-types by increasing index.
pub fn classify_branch_profile(f: &MPoly, marked: Option<&Rational>) -> Result<Vec<BranchSingularity>> {
    let (_, parts) = squarefree_decomposition(f)?;
    let var = f.univariate_var()?.unwrap_or("x").to_string();
    let mut out = Vec::new();
    let mut marked_mult = 0;
    if let Some(at) = marked {
        marked_mult = root_multiplicity(f, &var, at);
        if marked_mult > 0 {
            let part = parts
                .iter()
                .find(|p| p.multiplicity == marked_mult)
                .ok_or(PolyError::NotDivisible)?;
            out.push(BranchSingularity {
                sing: SingType::d(marked_mult),
                multiplicity: marked_mult,
                factor: part.factor.clone(),
            });
        }
    }
    for part in &parts {
        if part.multiplicity < 2 {
            continue;
        }
        let mut count = part.factor.degree_in(&var);
        if part.multiplicity == marked_mult {
            count -= 1;
        }
        for _ in 0..count {
            out.push(BranchSingularity {
                sing: SingType::a(part.multiplicity - 1),
                multiplicity: part.multiplicity,
                factor: part.factor.clone(),
            });
        }
    }
    Ok(out)
}
