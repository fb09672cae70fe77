//! A and D singularities: versal families, Tjurina bases, thresholds and normal forms.

mod classify;
mod invariants;
mod normal;
mod tjurina;
mod versal;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classify::{classify_branch_profile, BranchSingularity};
pub use invariants::{lct, lct_window_check, thresholds_to_types, LctWindow, Thresholds};
pub use normal::{normal_form, wps_equal, wps_weights, NormalForm};
pub use tjurina::{graded_quotient_basis, tjurina_basis, tjurina_generators, TjurinaIdeal};
pub use versal::{a_to_d_transform, versal, versal_with_section, VersalFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SingKind {
    A,
    D,
}

/// `A_k` (k ≥ 1) or `D_l` (l ≥ 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SingType {
    pub kind: SingKind,
    pub index: u32,
}

impl SingType {
    pub fn new(kind: SingKind, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::UnsupportedIndex {
                kind: kind.letter(),
                index,
            });
        }
        Ok(SingType { kind, index })
    }

    pub fn a(index: u32) -> Self {
        SingType::new(SingKind::A, index).expect("index >= 1")
    }

    pub fn d(index: u32) -> Self {
        SingType::new(SingKind::D, index).expect("index >= 1")
    }

    /// Local genus drop: ⌈k/2⌉ for A_k; 0, 1, ⌈(l+1)/2⌉ for D_1, D_2, D_l.
    pub fn delta(&self) -> u32 {
        match (self.kind, self.index) {
            (SingKind::A, k) => k.div_ceil(2),
            (SingKind::D, 1) => 0,
            (SingKind::D, 2) => 1,
            (SingKind::D, l) => (l + 1).div_ceil(2),
        }
    }

    fn unsupported(&self) -> Error {
        Error::UnsupportedIndex {
            kind: self.kind.letter(),
            index: self.index,
        }
    }
}

impl SingKind {
    pub fn letter(self) -> char {
        match self {
            SingKind::A => 'A',
            SingKind::D => 'D',
        }
    }
}

impl fmt::Display for SingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)
    }
}

impl FromStr for SingType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("singularity type {s:?}"));
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => SingKind::A,
            Some('D') => SingKind::D,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let index: u32 = rest.parse().map_err(|_| bad())?;
        SingType::new(kind, index)
    }
}

impl FromStr for SingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(SingKind::A),
            "D" | "d" => Ok(SingKind::D),
            other => Err(Error::InvalidInput(format!("singularity kind {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_table() {
        let a: Vec<u32> = (1..=6).map(|k| SingType::a(k).delta()).collect();
        assert_eq!(a, vec![1, 1, 2, 2, 3, 3]);
        let d: Vec<u32> = (1..=6).map(|l| SingType::d(l).delta()).collect();
        assert_eq!(d, vec![0, 1, 2, 3, 3, 4]);
        // D3 and A3 are the same germ
        assert_eq!(SingType::d(3).delta(), SingType::a(3).delta());
    }

    #[test]
    fn parse_and_json() {
        assert_eq!("A2".parse::<SingType>().unwrap(), SingType::a(2));
        assert_eq!("d_4".parse::<SingType>().unwrap(), SingType::d(4));
        assert!("A0".parse::<SingType>().is_err());
        assert!("E6".parse::<SingType>().is_err());
        let json = serde_json::to_string(&SingType::a(2)).unwrap();
        assert_eq!(json, r#"{"kind":"A","index":2}"#);
    }
}
