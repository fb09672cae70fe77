use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{alpha, beta, DivClass, PicSymbol};
use crate::error::{Error, Result};
use crate::singularity::thresholds_to_types;
use crate::symkernel::{MPoly, Rational};

/// ψ + 2αΔ_s − Δ_even − Δ_odd, plus (α+β)Δ_σ∩χ when pointed.
pub fn ample_template(pointed: bool) -> DivClass {
    let mut c = DivClass::psi(pointed);
    c.add_term(PicSymbol::DeltaS, &alpha().scale(&Rational::from_int(2)));
    c.add_term(PicSymbol::DeltaEven, &MPoly::int(-1));
    c.add_term(PicSymbol::DeltaOdd, &MPoly::int(-1));
    if pointed {
        c.add_term(PicSymbol::DeltaSigmaChi, &(alpha() + beta()));
    }
    c
}

fn legal(a: &Rational, b: Option<&Rational>) -> bool {
    let ok_a = a.is_positive() && *a <= Rational::new(1, 2);
    let ok_b = b.is_none_or(|b| b.is_positive() && *b <= Rational::one() - a);
    ok_a && ok_b
}

/// Does `c`, at (α, β), coincide with the ample template, with the weights legal?
/// The ampleness of the template itself is the cited criterion, not checked here.
pub fn ample_form_check(c: &DivClass, a: &Rational, b: Option<&Rational>) -> bool {
    if b.is_some() != c.pointed || !legal(a, b) {
        return false;
    }
    c.evaluate(a, b) == ample_template(c.pointed).evaluate(a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    GrowK,
    GrowL,
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grow_k" | "grow-k" | "k" => Ok(Direction::GrowK),
            "grow_l" | "grow-l" | "grow_ℓ" | "l" => Ok(Direction::GrowL),
            _ => Err(Error::InvalidInput(format!("direction {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub value: Rational,
    /// -1, 0 or 1.
    pub sign: i8,
    pub effective: bool,
}

/// Coefficient of the exceptional divisor in the discrepancy of the reduction:
/// 1 − (k+2)α for k → k+1, 1 − (ℓ+1)α − β for ℓ → ℓ+1.
pub fn discrepancy(dir: Direction, k: u32, l: u32, a: &Rational, b: &Rational) -> Result<Discrepancy> {
    if !legal(a, Some(b)) && !(dir == Direction::GrowK && legal(a, None)) {
        return Err(Error::WeightOutOfRange(format!("alpha = {a}, beta = {b}")));
    }
    let one = Rational::one();
    let value = match dir {
        Direction::GrowK => one - Rational::from_int(k as i64 + 2) * a.clone(),
        Direction::GrowL => one - Rational::from_int(l as i64 + 1) * a.clone() - b.clone(),
    };
    let sign = match value.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    };
    Ok(Discrepancy {
        value,
        sign,
        effective: sign >= 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogMmpModel {
    pub n: u32,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    /// Weight α on the branch divisor of the matching H_{n,α(,β)}.
    pub weight_alpha: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_beta: Option<Rational>,
    pub model: String,
    pub description: String,
}

/// Which H_n[k] (resp. H_n[k, ℓ]) is the log canonical model.
///
/// Unpointed: `a` is the coefficient of δ_irr in K + aδ_irr + δ_red, so the
/// window is (1/2 + 1/(k+2), 1/2 + 1/(k+1)]. Pointed: `a`, `b` are the
/// weights of H_{n,α,β}, and the divisor is K + (α+½)δ_irr + (2α+2β−1)δ_W + δ_red.
pub fn log_mmp_model(n: u32, a: &Rational, b: Option<&Rational>) -> Result<LogMmpModel> {
    let half = Rational::new(1, 2);
    match b {
        None => {
            let w = a.clone() - half.clone();
            if !legal(&w, None) {
                return Err(Error::WeightOutOfRange(format!("coefficient {a} outside (1/2, 1]")));
            }
            let t = thresholds_to_types(&w, None, n.max(2))?;
            let k = t.raw_k as u32;
            if k == 0 || k > n.saturating_sub(1) {
                return Err(Error::WeightOutOfRange(format!(
                    "coefficient {a} gives k = {k} for n = {n}"
                )));
            }
            Ok(LogMmpModel {
                n,
                k,
                l: None,
                weight_alpha: w,
                weight_beta: None,
                model: format!("H_{n}[{k}]"),
                description: format!("H_{n}[{k}] = Proj R(H_{n}[1], K + {a} δ_irr + δ_red)"),
            })
        }
        Some(b) => {
            if n < 4 {
                return Err(Error::InvalidInput(format!("pointed models need n >= 4, got {n}")));
            }
            if !legal(a, Some(b)) {
                return Err(Error::WeightOutOfRange(format!("alpha = {a}, beta = {b}")));
            }
            let t = thresholds_to_types(a, Some(b), n)?;
            let k = t.raw_k as u32;
            let l = t.raw_l.expect("pointed") as u32;
            if k == 0 || k > n - 1 || l == 0 || l > (k + 1).min(n - 1) {
                return Err(Error::WeightOutOfRange(format!(
                    "alpha = {a}, beta = {b} gives (k, l) = ({k}, {l}) for n = {n}"
                )));
            }
            let irr = a.clone() + half.clone();
            let w = Rational::from_int(2) * a.clone() + Rational::from_int(2) * b.clone() - Rational::one();
            Ok(LogMmpModel {
                n,
                k,
                l: Some(l),
                weight_alpha: a.clone(),
                weight_beta: Some(b.clone()),
                model: format!("H_{n}[{k},{l}]"),
                description: format!("H_{n}[{k},{l}] = Proj R(H_{n}[1,1], K + {irr} δ_irr + {w} δ_W + δ_red)"),
            })
        }
    }
}
