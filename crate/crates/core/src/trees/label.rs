use serde::Serialize;

use super::{is_stable, MarkedTree, WeightVector};
use crate::error::{Error, Result};
use crate::singularity::SingType;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StratumLabel {
    pub in_delta_irr: bool,
    pub in_delta_red: bool,
    pub in_delta_w: bool,
    pub codim: u32,
    pub singularities: Vec<SingType>,
}

/// Boundary membership and codimension read off the tree, without a stability check.
pub fn label_of(t: &MarkedTree) -> Result<StratumLabel> {
    t.validate(None)?;
    let mut singularities = Vec::new();
    let mut codim = t.edges.len() as u32;
    let mut in_delta_irr = false;
    let mut in_delta_w = false;
    for p in t.components.iter().flat_map(|c| &c.points) {
        codim += p.mult.saturating_sub(1);
        if p.mult >= 2 {
            in_delta_irr = true;
        }
        if p.chi && p.mult >= 1 {
            in_delta_w = true;
            codim += 1;
            singularities.push(SingType::d(p.mult));
        } else if p.mult >= 2 {
            singularities.push(SingType::a(p.mult - 1));
        }
    }
    singularities.sort();
    Ok(StratumLabel {
        in_delta_irr,
        in_delta_red: !t.edges.is_empty(),
        in_delta_w,
        codim,
        singularities,
    })
}

pub fn stratum_label(t: &MarkedTree, w: &WeightVector) -> Result<StratumLabel> {
    let rep = is_stable(t, w)?;
    if !rep.stable {
        return Err(Error::Unstable(format!("{} violation(s)", rep.violations.len())));
    }
    label_of(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symkernel::Rational;
    use crate::trees::MarkedPoint;

    #[test]
    fn examples() {
        let w = WeightVector::unpointed(5, Rational::new(1, 3)).unwrap();
        let smooth = MarkedTree::single(vec![MarkedPoint::branch(1); 6]);
        let l = stratum_label(&smooth, &w).unwrap();
        assert_eq!(
            (l.in_delta_irr, l.in_delta_red, l.in_delta_w, l.codim),
            (false, false, false, 0)
        );

        let mut pts = vec![MarkedPoint::branch(2)];
        pts.extend(vec![MarkedPoint::branch(1); 4]);
        let l = stratum_label(&MarkedTree::single(pts), &w).unwrap();
        assert!(l.in_delta_irr && !l.in_delta_red);
        assert_eq!((l.codim, l.singularities), (1, vec![SingType::a(1)]));

        let wp = WeightVector::pointed(5, Rational::new(1, 3), Rational::new(1, 2)).unwrap();
        let mut pts = vec![MarkedPoint::chi(1)];
        pts.extend(vec![MarkedPoint::branch(1); 4]);
        let l = stratum_label(&MarkedTree::single(pts), &wp).unwrap();
        assert!(l.in_delta_w && !l.in_delta_irr);
        assert_eq!((l.codim, l.singularities), (1, vec![SingType::d(1)]));
    }

    #[test]
    fn unstable_is_rejected() {
        let w = WeightVector::unpointed(2, Rational::new(1, 2)).unwrap();
        let t = MarkedTree::single(vec![MarkedPoint::branch(3)]);
        assert!(matches!(stratum_label(&t, &w), Err(Error::Unstable(_))));
    }
}
