use super::{is_stable, stability::component_degree, Component, MarkedPoint, MarkedTree, WeightVector};
use crate::error::{Error, Result};

/// Reduction of a w-stable tree to the w'-stable one, for w' at least as small.
///
/// Leaves (away from τ) of non-positive w'-degree collapse onto their parent as
/// a single slot carrying their total multiplicity and χ, until none remain.
pub fn contract(t: &MarkedTree, w: &WeightVector, w_new: &WeightVector) -> Result<MarkedTree> {
    let (from, to) = (w.window(), w_new.window());
    let legal = w.degree == w_new.degree
        && w.pointed_flag() == w_new.pointed_flag()
        && from.0 <= to.0
        && match (from.1, to.1) {
            (Some(a), Some(b)) => a <= b,
            (None, None) => true,
            _ => false,
        };
    if !legal {
        return Err(Error::IllegalReduction { from, to });
    }
    let rep = is_stable(t, w)?;
    if !rep.stable {
        return Err(Error::Unstable(format!(
            "input tree has {} violation(s)",
            rep.violations.len()
        )));
    }

    let mut cur = t.clone();
    loop {
        let (_, parent) = cur.rooted();
        let adj = cur.neighbors();
        let victim = (0..cur.components.len())
            .find(|&c| parent[c].is_some() && adj[c].len() == 1 && !component_degree(&cur, w_new, c, 1).is_positive());
        let Some(leaf) = victim else { break };
        let p = parent[leaf].expect("leaf has a parent");
        let merged = MarkedPoint {
            mult: cur.components[leaf].mass(),
            tau: false,
            chi: cur.components[leaf].has_chi(),
        };
        cur.components[p].points.push(merged);
        cur = remove_component(&cur, leaf);
    }

    let rep = is_stable(&cur, w_new)?;
    if !rep.stable {
        return Err(Error::Unstable(format!(
            "the tau component does not survive: {} violation(s) after contraction",
            rep.violations.len()
        )));
    }
    Ok(cur)
}

fn remove_component(t: &MarkedTree, gone: usize) -> MarkedTree {
    let remap = |i: usize| if i > gone { i - 1 } else { i };
    let components: Vec<Component> = t
        .components
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != gone)
        .map(|(_, c)| c.clone())
        .collect();
    let edges = t
        .edges
        .iter()
        .filter(|&&(a, b)| a != gone && b != gone)
        .map(|&(a, b)| (remap(a), remap(b)))
        .collect();
    MarkedTree { components, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symkernel::Rational;

    fn tail_tree(n: u32, k: u32) -> MarkedTree {
        let mut root = vec![MarkedPoint::tau()];
        root.extend(vec![MarkedPoint::branch(1); (n + 1 - (k + 2)) as usize]);
        MarkedTree {
            components: vec![
                Component { points: root },
                Component {
                    points: vec![MarkedPoint::branch(1); k as usize + 2],
                },
            ],
            edges: vec![(0, 1)],
        }
    }

    #[test]
    fn tail_collapses_one_step_down() {
        let (n, k) = (8, 2);
        let t = tail_tree(n, k);
        let w = WeightVector::for_window(n, k, None).unwrap();
        let w2 = WeightVector::for_window(n, k + 1, None).unwrap();
        let c = contract(&t, &w, &w2).unwrap();
        assert_eq!(c.components.len(), 1);
        assert!(c.components[0].points.contains(&MarkedPoint::branch(k + 2)));
        // same window: nothing happens
        assert_eq!(contract(&t, &w, &w).unwrap(), t);
    }

    #[test]
    fn nested_tails_collapse_iteratively() {
        let n = 8;
        let t = MarkedTree {
            components: vec![
                Component {
                    points: vec![
                        MarkedPoint::tau(),
                        MarkedPoint::branch(1),
                        MarkedPoint::branch(1),
                        MarkedPoint::branch(1),
                    ],
                },
                Component {
                    points: vec![MarkedPoint::branch(1), MarkedPoint::branch(1)],
                },
                Component {
                    points: vec![MarkedPoint::branch(1); 4],
                },
            ],
            edges: vec![(0, 1), (1, 2)],
        };
        let w = WeightVector::unpointed(n, Rational::new(1, 2)).unwrap();
        assert!(is_stable(&t, &w).unwrap().stable);
        let w2 = WeightVector::for_window(n, 6, None).unwrap();
        let c = contract(&t, &w, &w2).unwrap();
        assert_eq!(c.certificate(), "[1,1,1,6]");
    }

    #[test]
    fn illegal_direction() {
        let t = tail_tree(8, 3);
        let w = WeightVector::for_window(8, 3, None).unwrap();
        let w2 = WeightVector::for_window(8, 2, None).unwrap();
        assert!(matches!(contract(&t, &w, &w2), Err(Error::IllegalReduction { .. })));
    }
}
