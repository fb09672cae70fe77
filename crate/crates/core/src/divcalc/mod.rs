//! Divisor classes on M̄_{0,A} with coefficients in Q[alpha, beta], and their
//! relation to boundary divisors on the stacks of covers.

mod identities;
mod mmp;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symkernel::{MPoly, Rational};

pub use identities::{verify_identities, IdentityCheck};
pub use mmp::{ample_form_check, ample_template, discrepancy, log_mmp_model, Direction, Discrepancy, LogMmpModel};

pub const ALPHA: &str = "alpha";
pub const BETA: &str = "beta";

pub fn alpha() -> MPoly {
    MPoly::var(ALPHA)
}

pub fn beta() -> MPoly {
    MPoly::var(BETA)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PicSymbol {
    PsiTau,
    PsiSigma,
    PsiChi,
    DeltaS,
    DeltaEven,
    DeltaOdd,
    DeltaSigmaChi,
}

impl PicSymbol {
    pub const ALL: [PicSymbol; 7] = [
        PicSymbol::PsiTau,
        PicSymbol::PsiSigma,
        PicSymbol::PsiChi,
        PicSymbol::DeltaS,
        PicSymbol::DeltaEven,
        PicSymbol::DeltaOdd,
        PicSymbol::DeltaSigmaChi,
    ];

    fn pointed_only(self) -> bool {
        matches!(self, PicSymbol::PsiChi | PicSymbol::DeltaSigmaChi)
    }
}

impl fmt::Display for PicSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PicSymbol::PsiTau => "ψ_τ",
            PicSymbol::PsiSigma => "ψ_σ",
            PicSymbol::PsiChi => "ψ_χ",
            PicSymbol::DeltaS => "Δ_s",
            PicSymbol::DeltaEven => "Δ_even",
            PicSymbol::DeltaOdd => "Δ_odd",
            PicSymbol::DeltaSigmaChi => "Δ_σ∩χ",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HSymbol {
    KH,
    DeltaIrr,
    DeltaRed,
    DeltaW,
}

impl fmt::Display for HSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HSymbol::KH => "K_H",
            HSymbol::DeltaIrr => "δ_irr",
            HSymbol::DeltaRed => "δ_red",
            HSymbol::DeltaW => "δ_W",
        })
    }
}

/// Linear combination over a symbol set with polynomial coefficients; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Combination<S: Ord> {
    pub pointed: bool,
    pub coefficients: BTreeMap<S, MPoly>,
}

pub type DivClass = Combination<PicSymbol>;
pub type HDivisor = Combination<HSymbol>;

impl<S: Ord + Copy> Combination<S> {
    pub fn zero(pointed: bool) -> Self {
        Combination {
            pointed,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (S, MPoly)>>(pointed: bool, terms: I) -> Self {
        let mut c = Self::zero(pointed);
        for (s, k) in terms {
            c.add_term(s, &k);
        }
        c
    }

    pub fn add_term(&mut self, s: S, k: &MPoly) {
        let next = self.get(s) + k.clone();
        if next.is_zero() {
            self.coefficients.remove(&s);
        } else {
            self.coefficients.insert(s, next);
        }
    }

    pub fn get(&self, s: S) -> MPoly {
        self.coefficients.get(&s).cloned().unwrap_or_else(MPoly::zero)
    }

    pub fn scale(&self, k: &MPoly) -> Self {
        let mut out = Self::zero(self.pointed);
        for (s, c) in &self.coefficients {
            out.add_term(*s, &(c * k));
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.pointed |= other.pointed;
        for (s, c) in &other.coefficients {
            out.add_term(*s, c);
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&MPoly::int(-1)))
    }

    /// Coefficients with alpha and beta replaced by numbers.
    pub fn evaluate(&self, a: &Rational, b: Option<&Rational>) -> Self {
        let mut vals = BTreeMap::from([(ALPHA.to_string(), a.clone())]);
        if let Some(b) = b {
            vals.insert(BETA.to_string(), b.clone());
        }
        let mut out = Self::zero(self.pointed);
        for (s, c) in &self.coefficients {
            out.add_term(*s, &c.eval_partial(&vals));
        }
        out
    }
}

impl DivClass {
    pub fn check(&self) -> Result<()> {
        if !self.pointed {
            if let Some(s) = self.coefficients.keys().find(|s| s.pointed_only()) {
                return Err(Error::InvalidInput(format!("{s} in an unpointed class")));
            }
        }
        Ok(())
    }

    /// ψ = ψ_τ + ψ_σ (+ ψ_χ).
    pub fn psi(pointed: bool) -> Self {
        let mut syms = vec![PicSymbol::PsiTau, PicSymbol::PsiSigma];
        if pointed {
            syms.push(PicSymbol::PsiChi);
        }
        Self::from_terms(pointed, syms.into_iter().map(|s| (s, MPoly::one())))
    }

    pub fn symbol(pointed: bool, s: PicSymbol) -> Self {
        Self::from_terms(pointed, [(s, MPoly::one())])
    }
}

impl HDivisor {
    pub fn check(&self) -> Result<()> {
        if !self.pointed && self.coefficients.contains_key(&HSymbol::DeltaW) {
            return Err(Error::InvalidInput("δ_W in an unpointed divisor".into()));
        }
        Ok(())
    }

    pub fn symbol(pointed: bool, s: HSymbol) -> Self {
        Self::from_terms(pointed, [(s, MPoly::one())])
    }
}

impl<S: Ord + Copy + fmt::Display> fmt::Display for Combination<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.coefficients.iter().enumerate() {
            let text = c.to_string();
            let (neg, body) = match c.as_constant() {
                Some(k) if k.is_negative() => (true, (-k).to_string()),
                Some(k) => (false, k.to_string()),
                None => (false, format!("({text})")),
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if body != "1" {
                write!(f, "{body}*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn q(n: i64, d: i64) -> MPoly {
    MPoly::constant(Rational::new(n, d))
}

/// ψ − Δ_s − 2Δ_even − (3/2)Δ_odd, plus (1/2)Δ_σ∩χ and ψ_χ when pointed.
pub fn canonical_class(pointed: bool) -> DivClass {
    let mut c = DivClass::psi(pointed);
    c.add_term(PicSymbol::DeltaS, &q(-1, 1));
    c.add_term(PicSymbol::DeltaEven, &q(-2, 1));
    c.add_term(PicSymbol::DeltaOdd, &q(-3, 2));
    if pointed {
        c.add_term(PicSymbol::DeltaSigmaChi, &q(1, 2));
    }
    c
}

/// Canonical class of M̄_{0,A}: ψ − 2Δ.
pub fn k_m0a(pointed: bool) -> DivClass {
    let mut c = DivClass::psi(pointed);
    c.add_term(PicSymbol::DeltaEven, &q(-2, 1));
    c.add_term(PicSymbol::DeltaOdd, &q(-2, 1));
    c
}

/// Ramification correction for pulling K back through the branch map:
/// −Δ_s from the quotient, +½Δ_odd (and +½Δ_σ∩χ) from the branch morphism.
pub fn hurwitz_correction(pointed: bool) -> DivClass {
    let mut c = DivClass::zero(pointed);
    c.add_term(PicSymbol::DeltaS, &q(-1, 1));
    c.add_term(PicSymbol::DeltaOdd, &q(1, 2));
    if pointed {
        c.add_term(PicSymbol::DeltaSigmaChi, &q(1, 2));
    }
    c
}

fn transport_symbol(s: HSymbol, pointed: bool) -> DivClass {
    match s {
        HSymbol::KH => canonical_class(pointed),
        HSymbol::DeltaIrr => DivClass::from_terms(pointed, [(PicSymbol::DeltaS, MPoly::int(2))]),
        HSymbol::DeltaRed => DivClass::from_terms(
            pointed,
            [(PicSymbol::DeltaEven, MPoly::one()), (PicSymbol::DeltaOdd, q(1, 2))],
        ),
        HSymbol::DeltaW => DivClass::from_terms(pointed, [(PicSymbol::DeltaSigmaChi, q(1, 2))]),
    }
}

/// Pull a divisor on the cover stack back to M̄_{0,A}, extended linearly.
pub fn transport(h: &HDivisor) -> Result<DivClass> {
    h.check()?;
    let mut out = DivClass::zero(h.pointed);
    for (s, c) in &h.coefficients {
        out = out.plus(&transport_symbol(*s, h.pointed).scale(c));
    }
    Ok(out)
}

/// K_H + (α+½)δ_irr + δ_red (+ (2α+2β−1)δ_W when pointed), α and β symbolic.
pub fn log_canonical_divisor(pointed: bool) -> HDivisor {
    let mut h = HDivisor::symbol(pointed, HSymbol::KH);
    h.add_term(HSymbol::DeltaIrr, &(alpha() + q(1, 2)));
    h.add_term(HSymbol::DeltaRed, &MPoly::one());
    if pointed {
        h.add_term(
            HSymbol::DeltaW,
            &(alpha().scale(&2.into()) + beta().scale(&2.into()) - MPoly::one()),
        );
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_displays() {
        assert_eq!(
            canonical_class(false).to_string(),
            "ψ_τ + ψ_σ - Δ_s - 2*Δ_even - 3/2*Δ_odd"
        );
        let diff = canonical_class(true).minus(&canonical_class(false));
        assert_eq!(diff.to_string(), "ψ_χ + 1/2*Δ_σ∩χ");
    }

    #[test]
    fn hurwitz_step() {
        for pointed in [false, true] {
            assert_eq!(
                k_m0a(pointed).plus(&hurwitz_correction(pointed)),
                canonical_class(pointed)
            );
        }
    }

    #[test]
    fn transport_rules() {
        let irr = transport(&HDivisor::symbol(false, HSymbol::DeltaIrr)).unwrap();
        assert_eq!(irr.to_string(), "2*Δ_s");
        let unp = transport(&log_canonical_divisor(false)).unwrap();
        assert_eq!(unp, ample_template(false));
        assert_eq!(unp.to_string(), "ψ_τ + ψ_σ + (2*alpha)*Δ_s - Δ_even - Δ_odd");
        let p = transport(&log_canonical_divisor(true)).unwrap();
        assert_eq!(p, ample_template(true));
        assert!(transport(&HDivisor::symbol(false, HSymbol::DeltaW)).is_err());
    }

    #[test]
    fn json_shape() {
        let c = canonical_class(true);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["coefficients"]["delta_odd"], "-3/2");
        assert_eq!(v["coefficients"]["psi_chi"], "1");
        let back: DivClass = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
