use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{SingKind, SingType};
use crate::error::{Error, Result};
use crate::symkernel::{MPoly, Rational, WeightAssignment};

/// Equation, parameters and G_m weights of a versal deformation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VersalFamily {
    pub equation: MPoly,
    pub curve_vars: (String, String),
    /// Listed from the highest-index coefficient down, with `b` first for D.
    pub params: Vec<String>,
    pub weights: WeightAssignment,
}

impl VersalFamily {
    pub fn weighted_degree(&self) -> Result<Option<u64>> {
        Ok(self.equation.weighted_degree(&self.weights)?)
    }

    /// The fibre over the origin of the parameter space.
    pub fn central_fiber(&self) -> MPoly {
        let zeros: BTreeMap<String, Rational> = self.params.iter().map(|p| (p.clone(), Rational::zero())).collect();
        self.equation.eval_partial(&zeros)
    }
}

fn a_param(i: u32) -> String {
    format!("a{i}")
}

fn xpow(e: u32) -> MPoly {
    MPoly::monomial(Rational::one(), &[("x", e)])
}

fn term(param: &str, xexp: u32) -> MPoly {
    MPoly::monomial(Rational::one(), &[(param, 1), ("x", xexp)])
}

/// Versal deformation of `A_n` or `D_n` (n ≥ 3) with its G_m weights.
pub fn versal(t: SingType) -> Result<VersalFamily> {
    match t.kind {
        SingKind::A => Ok(versal_a(t.index)),
        SingKind::D if t.index >= 3 => Ok(versal_d(t.index)),
        SingKind::D => Err(t.unsupported()),
    }
}

fn versal_a(n: u32) -> VersalFamily {
    let mut rhs = xpow(n + 1);
    for i in 0..n {
        rhs = rhs + term(&a_param(i), i);
    }
    let equation = MPoly::var("y").pow(2) - rhs;
    let mut w = WeightAssignment::new();
    // λ acts on a_i with weight (n+1-i)·wx
    let (wx, wy) = if n.is_multiple_of(2) {
        (2, n + 1)
    } else {
        (1, n.div_ceil(2))
    };
    w.set("x", wx);
    w.set("y", wy);
    for i in 0..n {
        w.set(a_param(i), wx * (n + 1 - i));
    }
    VersalFamily {
        equation,
        curve_vars: ("x".into(), "y".into()),
        params: (0..n).rev().map(a_param).collect(),
        weights: w,
    }
}

fn d_weights(n: u32, second: &str) -> WeightAssignment {
    let (wx, wy, wb) = if n.is_multiple_of(2) {
        (1, (n - 2) / 2, n / 2)
    } else {
        (2, n - 2, n)
    };
    let mut w = WeightAssignment::new();
    w.set("x", wx);
    w.set(second, wy);
    w.set("b", wb);
    for i in 0..=n - 2 {
        w.set(a_param(i), wx * (n - 1 - i));
    }
    w
}

fn d_params(n: u32) -> Vec<String> {
    std::iter::once("b".to_string())
        .chain((0..=n - 2).rev().map(a_param))
        .collect()
}

fn d_family(n: u32, second: &str) -> MPoly {
    let s = MPoly::var(second);
    let mut rhs = xpow(n - 1);
    for i in 0..=n - 2 {
        rhs = rhs + term(&a_param(i), i);
    }
    &(&(&MPoly::var("x") * &s.pow(2)) + &(&MPoly::var("b") * &s)) - &rhs
}

fn versal_d(n: u32) -> VersalFamily {
    VersalFamily {
        equation: d_family(n, "y"),
        curve_vars: ("x".into(), "y".into()),
        params: d_params(n),
        weights: d_weights(n, "y"),
    }
}

/// Miniversal family of `A_{n-1}` with the section `x = y = 0`:
/// `y² − b y − x^n − a_{n−2} x^{n−1} − … − a_0 x`.
pub fn versal_with_section(n: u32) -> Result<VersalFamily> {
    if n < 3 {
        return Err(Error::UnsupportedIndex { kind: 'D', index: n });
    }
    let y = MPoly::var("y");
    let mut eq = &(&y.pow(2) - &(&MPoly::var("b") * &y)) - &xpow(n);
    for i in 0..=n - 2 {
        eq = eq - term(&a_param(i), i + 1);
    }
    let mut w = d_weights(n, "y");
    // y = x u + b forces weight(y) = weight(b)
    let wb = w.get("b").expect("b weighted");
    w.set("y", wb);
    Ok(VersalFamily {
        equation: eq,
        curve_vars: ("x".into(), "y".into()),
        params: d_params(n),
        weights: w,
    })
}

/// Substitutes `y = x u + b` and divides by `x`.
pub fn a_to_d_transform(fam: &VersalFamily) -> Result<VersalFamily> {
    let (xv, yv) = (&fam.curve_vars.0, &fam.curve_vars.1);
    let x = MPoly::var(xv);
    let sub = &(&x * &MPoly::var("u")) + &MPoly::var("b");
    let substituted = fam.equation.subs(&[(yv.as_str(), sub)])?;
    let equation = substituted.exact_div(&x)?;
    let mut weights = WeightAssignment::new();
    for (k, v) in fam.weights.iter() {
        if k != yv {
            weights.set(k.clone(), *v);
        }
    }
    let wy = fam.weights.get(yv);
    let wx = fam.weights.get(xv);
    if let (Some(wy), Some(wx)) = (wy, wx) {
        if wy > wx {
            weights.set("u", wy - wx);
        }
    }
    let mut params = fam.params.clone();
    if !params.iter().any(|p| p == "b") {
        params.insert(0, "b".into());
    }
    Ok(VersalFamily {
        equation,
        curve_vars: (xv.clone(), "u".into()),
        params,
        weights,
    })
}
