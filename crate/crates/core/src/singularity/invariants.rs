use num_traits::ToPrimitive;
use serde::Serialize;

use super::{SingKind, SingType};
use crate::error::{Error, Result};
use crate::symkernel::Rational;

/// Log canonical threshold: (n+3)/(2(n+1)) for A_n, n/(2(n−1)) for D_n.
pub fn lct(t: SingType) -> Result<Rational> {
    let n = t.index as i64;
    match t.kind {
        SingKind::A => Ok(Rational::new(n + 3, 2 * (n + 1))),
        SingKind::D if n >= 2 => Ok(Rational::new(n, 2 * (n - 1))),
        SingKind::D => Err(t.unsupported()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LctWindow {
    pub threshold: Rational,
    pub lct: Rational,
    pub coincide: bool,
}

/// The right endpoint 1/2 + 1/(k+1) of the k-th window next to lct(A_k).
pub fn lct_window_check(k: u32) -> Result<LctWindow> {
    if k == 0 {
        return Err(Error::UnsupportedIndex { kind: 'A', index: 0 });
    }
    let threshold = Rational::new(1, 2) + Rational::new(1, k as i64 + 1);
    let lct = lct(SingType::a(k))?;
    Ok(LctWindow {
        coincide: threshold == lct,
        threshold,
        lct,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    /// Raw values before clamping to k ≤ n−1, l ≤ min(k+1, n−1).
    pub raw_k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw_l: Option<u64>,
    pub out_of_range: bool,
}

fn floor_u64(r: &Rational) -> u64 {
    r.floor().to_u64().unwrap_or(u64::MAX)
}

/// Solves 1/(k+2) < α ≤ 1/(k+1) and 1−(l+1)α < β ≤ 1−lα.
pub fn thresholds_to_types(alpha: &Rational, beta: Option<&Rational>, n: u32) -> Result<Thresholds> {
    let half = Rational::new(1, 2);
    if !alpha.is_positive() || alpha > &half {
        return Err(Error::WeightOutOfRange(format!("alpha = {alpha} not in (0, 1/2]")));
    }
    let one = Rational::one();
    if let Some(b) = beta {
        if !b.is_positive() || b > &(&one - alpha) {
            return Err(Error::WeightOutOfRange(format!("beta = {b} not in (0, 1 - alpha]")));
        }
    }
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n} must be at least 2")));
    }
    let inv = alpha.recip()?;
    let raw_k = floor_u64(&inv) - 1;
    let raw_l = beta.map(|b| floor_u64(&(&one - b).checked_div(alpha).expect("alpha > 0")));
    let k_cap = (n - 1) as u64;
    let k = raw_k.min(k_cap);
    let l = raw_l.map(|l| l.min(k + 1).min(k_cap));
    let out_of_range = k != raw_k || l != raw_l;
    Ok(Thresholds {
        k: k as u32,
        l: l.map(|v| v as u32),
        raw_k,
        raw_l,
        out_of_range,
    })
}
