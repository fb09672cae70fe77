use serde::Serialize;

use super::{
    ample_template, canonical_class, hurwitz_correction, k_m0a, log_canonical_divisor, transport, DivClass, HDivisor,
    HSymbol, PicSymbol,
};
use crate::symkernel::{MPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

fn check(name: &str, lhs: DivClass, rhs: DivClass) -> IdentityCheck {
    IdentityCheck {
        name: name.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        holds: lhs == rhs,
    }
}

fn literal(pointed: bool, terms: &[(PicSymbol, Rational)]) -> DivClass {
    DivClass::from_terms(pointed, terms.iter().map(|(s, c)| (*s, MPoly::constant(c.clone()))))
}

/// Every symbolic divisor identity, each side printed; α and β stay symbols.
pub fn verify_identities() -> Vec<IdentityCheck> {
    use PicSymbol::*;
    let r = Rational::new;
    let one = || r(1, 1);
    let mut out = vec![
        check(
            "canonical_class_unpointed",
            canonical_class(false),
            literal(
                false,
                &[
                    (PsiTau, one()),
                    (PsiSigma, one()),
                    (DeltaS, r(-1, 1)),
                    (DeltaEven, r(-2, 1)),
                    (DeltaOdd, r(-3, 2)),
                ],
            ),
        ),
        check(
            "canonical_class_pointed",
            canonical_class(true),
            literal(
                true,
                &[
                    (PsiTau, one()),
                    (PsiSigma, one()),
                    (PsiChi, one()),
                    (DeltaS, r(-1, 1)),
                    (DeltaEven, r(-2, 1)),
                    (DeltaOdd, r(-3, 2)),
                    (DeltaSigmaChi, r(1, 2)),
                ],
            ),
        ),
        check(
            "pointed_minus_unpointed",
            canonical_class(true).minus(&canonical_class(false)),
            literal(true, &[(PsiChi, one()), (DeltaSigmaChi, r(1, 2))]),
        ),
    ];
    for pointed in [false, true] {
        let tag = if pointed { "pointed" } else { "unpointed" };
        out.push(check(
            &format!("hurwitz_{tag}"),
            k_m0a(pointed).plus(&hurwitz_correction(pointed)),
            canonical_class(pointed),
        ));
    }
    out.push(check(
        "transport_delta_irr",
        transport(&HDivisor::symbol(false, HSymbol::DeltaIrr)).expect("unpointed symbol"),
        literal(false, &[(DeltaS, r(2, 1))]),
    ));
    for pointed in [false, true] {
        let tag = if pointed { "pointed" } else { "unpointed" };
        out.push(check(
            &format!("transport_log_canonical_{tag}"),
            transport(&log_canonical_divisor(pointed)).expect("consistent flags"),
            ample_template(pointed),
        ));
    }
    out
}
