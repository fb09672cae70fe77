use std::collections::HashMap;
use std::rc::Rc;

use super::{label_of, CanonicalNode, MarkedTree, WeightVector};
use crate::error::{Error, Result};
use crate::symkernel::Rational;

/// Environment variable overriding the default cap n ≤ 10.
pub const MAX_N_ENV: &str = "ADCOVER_MAX_N";
const DEFAULT_CAP: u32 = 10;

pub fn size_cap() -> u32 {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// Partitions of `total` into parts of size ≤ `max_part`, parts non-increasing.
fn partitions(total: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_part, &mut Vec::new(), &mut out);
    out
}

/// Multisets of size `k` drawn from `0..n`, as non-decreasing index lists.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

struct Enumerator<'a> {
    w: &'a WeightVector,
    zero_beta: Rational,
    memo: HashMap<(u32, bool), Rc<Vec<CanonicalNode>>>,
}

impl<'a> Enumerator<'a> {
    fn pw(&self, mult: u32, chi: bool) -> Rational {
        let mut w = &self.w.alpha * &Rational::from_int(mult as i64);
        if chi {
            w += self.w.beta.as_ref().unwrap_or(&self.zero_beta);
        }
        w
    }

    /// Slot multisets on one component with branch mass `p`, optionally holding χ.
    fn point_sets(&self, p: u32, chi: bool) -> Vec<Vec<(u32, bool)>> {
        let one = Rational::one();
        let max_part = (1..=p).take_while(|&m| self.pw(m, false) <= one).last().unwrap_or(0);
        let mut out = Vec::new();
        for parts in partitions(p, max_part.max(if p == 0 { 0 } else { 1 })) {
            if parts.iter().any(|&m| self.pw(m, false) > one) {
                continue;
            }
            let base: Vec<(u32, bool)> = parts.iter().map(|&m| (m, false)).collect();
            if !chi {
                let mut v = base;
                v.sort();
                out.push(v);
                continue;
            }
            let mut alone = base.clone();
            alone.push((0, true));
            alone.sort();
            out.push(alone);
            let mut values = parts.clone();
            values.dedup();
            for m in values {
                if self.pw(m, true) > one {
                    continue;
                }
                let mut v = base.clone();
                let i = v.iter().position(|&(x, _)| x == m).expect("present");
                v[i].1 = true;
                v.sort();
                out.push(v);
            }
        }
        out
    }

    fn subtrees(&mut self, mass: u32, chi: bool) -> Rc<Vec<CanonicalNode>> {
        if let Some(v) = self.memo.get(&(mass, chi)) {
            return v.clone();
        }
        let nodes = Rc::new(self.nodes(mass, chi, false));
        self.memo.insert((mass, chi), nodes.clone());
        nodes
    }

    /// Multisets of child subtrees with total branch mass `total`, χ below iff `chi`.
    fn child_sets(&mut self, total: u32, chi: bool, min_parts: usize) -> Vec<Vec<CanonicalNode>> {
        let mut out = Vec::new();
        for parts in partitions(total, total) {
            if parts.len() < min_parts {
                continue;
            }
            // which part value carries χ (if any)
            let mut chi_choices: Vec<Option<u32>> = Vec::new();
            if chi {
                let mut values = parts.clone();
                values.dedup();
                chi_choices.extend(values.into_iter().map(Some));
            } else {
                chi_choices.push(None);
            }
            for chi_part in chi_choices {
                // groups of (mass, chi flag, count)
                let mut groups: Vec<(u32, bool, usize)> = Vec::new();
                let mut chi_left = chi_part;
                for &m in &parts {
                    let flag = chi_left == Some(m);
                    if flag {
                        chi_left = None;
                    }
                    match groups.iter_mut().find(|g| g.0 == m && g.1 == flag) {
                        Some(g) => g.2 += 1,
                        None => groups.push((m, flag, 1)),
                    }
                }
                let mut partial: Vec<Vec<CanonicalNode>> = vec![Vec::new()];
                for (m, flag, count) in groups {
                    let pool = self.subtrees(m, flag);
                    if pool.is_empty() {
                        partial.clear();
                        break;
                    }
                    let picks = multisets(pool.len(), count);
                    let mut next = Vec::with_capacity(partial.len() * picks.len());
                    for base in &partial {
                        for pick in &picks {
                            let mut v = base.clone();
                            v.extend(pick.iter().map(|&i| pool[i].clone()));
                            next.push(v);
                        }
                    }
                    partial = next;
                }
                for mut kids in partial {
                    kids.sort();
                    out.push(kids);
                }
            }
        }
        out
    }

    fn nodes(&mut self, mass: u32, chi: bool, is_root: bool) -> Vec<CanonicalNode> {
        let mut out = Vec::new();
        let one = Rational::one();
        for p in 0..=mass {
            let chi_here_options: &[bool] = if chi { &[true, false] } else { &[false] };
            for &chi_here in chi_here_options {
                let point_sets = self.point_sets(p, chi_here);
                if point_sets.is_empty() {
                    continue;
                }
                // a pointless non-root component needs two children (also stops self-recursion)
                let min_parts = if is_root || p > 0 || chi_here { 0 } else { 2 };
                let kid_sets = self.child_sets(mass - p, chi && !chi_here, min_parts);
                for pts in &point_sets {
                    let marks = pts.iter().fold(Rational::zero(), |acc, &(m, c)| acc + self.pw(m, c));
                    for kids in &kid_sets {
                        let valence = kids.len() as i64 + if is_root { 0 } else { 1 };
                        let tau = if is_root { one.clone() } else { Rational::zero() };
                        let degree = Rational::from_int(valence - 2) + &marks + tau;
                        if degree.is_positive() {
                            out.push(CanonicalNode {
                                points: pts.clone(),
                                children: kids.clone(),
                            });
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// All w-stable trees in canonical form, sorted.
pub fn enumerate_canonical(w: &WeightVector) -> Vec<CanonicalNode> {
    let mut e = Enumerator {
        w,
        zero_beta: Rational::zero(),
        memo: HashMap::new(),
    };
    e.nodes(w.degree, w.pointed_flag(), true)
}

/// Isomorphism classes of w-stable marked trees for H_n, optionally up to a codimension.
pub fn enumerate_strata(n: u32, w: &WeightVector, max_codim: Option<u32>) -> Result<Vec<MarkedTree>> {
    let cap = size_cap();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    w.check()?;
    if w.n() != n {
        return Err(Error::InvalidInput(format!(
            "weights are for n = {}, requested n = {n}",
            w.n()
        )));
    }
    let mut out = Vec::new();
    for node in enumerate_canonical(w) {
        let tree = node.to_tree();
        if let Some(max) = max_codim {
            if label_of(&tree)?.codim > max {
                continue;
            }
        }
        out.push(tree);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{is_stable, MarkedPoint};

    fn certs(trees: &[MarkedTree]) -> Vec<String> {
        trees.iter().map(MarkedTree::certificate).collect()
    }

    #[test]
    fn degree_three_at_half() {
        let w = WeightVector::unpointed(2, Rational::new(1, 2)).unwrap();
        let strata = enumerate_strata(2, &w, None).unwrap();
        assert_eq!(certs(&strata), vec!["[1,1,1]", "[1,2]"]);
    }

    #[test]
    fn unique_codim_zero_stratum() {
        for n in 2..=6 {
            for k in 1..n {
                let w = WeightVector::for_window(n, k, None).unwrap();
                let open = enumerate_strata(n, &w, Some(0)).unwrap();
                assert_eq!(open.len(), 1);
                assert_eq!(
                    open[0],
                    MarkedTree::single(vec![MarkedPoint::branch(1); n as usize + 1])
                );
            }
        }
    }

    #[test]
    fn all_outputs_are_stable_and_distinct() {
        let w = WeightVector::for_window(6, 1, Some(2)).unwrap();
        let strata = enumerate_strata(6, &w, None).unwrap();
        assert!(!strata.is_empty());
        for t in &strata {
            assert!(is_stable(t, &w).unwrap().stable, "{}", t.certificate());
        }
        let mut c = certs(&strata);
        let before = c.len();
        c.dedup();
        assert_eq!(c.len(), before);
    }

    #[test]
    fn guard() {
        let w = WeightVector::for_window(11, 1, None).unwrap();
        assert!(matches!(
            enumerate_strata(11, &w, None),
            Err(Error::TooLarge { n: 11, cap: 10 })
        ));
    }
}
