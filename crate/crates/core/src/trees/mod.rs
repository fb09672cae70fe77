//! Divisorially marked rational trees: the dual combinatorics of covers.

mod contract;
mod enumerate;
mod label;
mod parity;
mod stability;

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::singularity::thresholds_to_types;
use crate::symkernel::Rational;

pub use contract::contract;
pub use enumerate::{enumerate_canonical, enumerate_strata, size_cap, MAX_N_ENV};
pub use label::{label_of, stratum_label, StratumLabel};
pub use parity::{arithmetic_genus, odd_points, parity_certificate, GenusReport, OddPoints};
pub use stability::{is_stable, StabilityReport, Violation};

/// A marked slot on a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedPoint {
    #[serde(default)]
    pub mult: u32,
    #[serde(default)]
    pub tau: bool,
    #[serde(default)]
    pub chi: bool,
}

impl MarkedPoint {
    pub fn branch(mult: u32) -> Self {
        MarkedPoint {
            mult,
            tau: false,
            chi: false,
        }
    }

    pub fn tau() -> Self {
        MarkedPoint {
            mult: 0,
            tau: true,
            chi: false,
        }
    }

    pub fn chi(mult: u32) -> Self {
        MarkedPoint {
            mult,
            tau: false,
            chi: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Component {
    pub points: Vec<MarkedPoint>,
}

impl Component {
    pub fn mass(&self) -> u32 {
        self.points.iter().map(|p| p.mult).sum()
    }

    pub fn has_tau(&self) -> bool {
        self.points.iter().any(|p| p.tau)
    }

    pub fn has_chi(&self) -> bool {
        self.points.iter().any(|p| p.chi)
    }
}

/// A tree of rational components with τ, optional χ and branch multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedTree {
    pub components: Vec<Component>,
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
}

/// Weights `(1, β?, α^d)` on τ, χ and the branch divisor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVector {
    pub alpha: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Rational>,
    /// Degree of the branch divisor: n+1 unpointed, n pointed.
    pub degree: u32,
}

impl WeightVector {
    pub fn unpointed(n: u32, alpha: Rational) -> Result<Self> {
        let w = WeightVector {
            alpha,
            beta: None,
            degree: n + 1,
        };
        w.check()?;
        Ok(w)
    }

    pub fn pointed(n: u32, alpha: Rational, beta: Rational) -> Result<Self> {
        let w = WeightVector {
            alpha,
            beta: Some(beta),
            degree: n,
        };
        w.check()?;
        Ok(w)
    }

    /// Midpoint weights of the window (k, l): α halfway through (1/(k+2), 1/(k+1)],
    /// β halfway through (max(0, 1−(l+1)α), 1−lα].
    pub fn for_window(n: u32, k: u32, l: Option<u32>) -> Result<Self> {
        if k == 0 || l == Some(0) || l.is_some_and(|l| l > k + 1) {
            return Err(Error::InvalidInput(format!("no window (k, l) = ({k}, {l:?})")));
        }
        let k = k as i64;
        let alpha = (Rational::new(1, k + 2) + Rational::new(1, k + 1)) / Rational::from_int(2);
        match l {
            None => WeightVector::unpointed(n, alpha),
            Some(l) => {
                let l = Rational::from_int(l as i64);
                let one = Rational::one();
                let hi = &one - &(&l * &alpha);
                let lo = &one - &(&(&l + &one) * &alpha);
                let lo = if lo.is_negative() { Rational::zero() } else { lo };
                let beta = (lo + hi) / Rational::from_int(2);
                WeightVector::pointed(n, alpha, beta)
            }
        }
    }

    pub fn check(&self) -> Result<()> {
        let half = Rational::new(1, 2);
        if !self.alpha.is_positive() || self.alpha > half {
            return Err(Error::WeightOutOfRange(format!("alpha = {}", self.alpha)));
        }
        if let Some(b) = &self.beta {
            if !b.is_positive() || b > &(Rational::one() - &self.alpha) {
                return Err(Error::WeightOutOfRange(format!("beta = {b}")));
            }
        }
        Ok(())
    }

    pub fn pointed_flag(&self) -> bool {
        self.beta.is_some()
    }

    /// The index n of H_n: degree − 1 unpointed, degree pointed.
    pub fn n(&self) -> u32 {
        if self.pointed_flag() {
            self.degree
        } else {
            self.degree.saturating_sub(1)
        }
    }

    pub fn point_weight(&self, p: &MarkedPoint) -> Rational {
        let mut w = &self.alpha * &Rational::from_int(p.mult as i64);
        if p.chi {
            w += self.beta.as_ref().unwrap_or(&Rational::zero());
        }
        if p.tau {
            w += &Rational::one();
        }
        w
    }

    /// (k, l) from the threshold inequalities, without clamping.
    pub fn window(&self) -> (u32, Option<u32>) {
        let t = thresholds_to_types(&self.alpha, self.beta.as_ref(), self.n().max(2))
            .expect("weights checked on construction");
        (t.raw_k as u32, t.raw_l.map(|l| l as u32))
    }
}

impl MarkedTree {
    /// One component carrying τ and the given points.
    pub fn single(points: Vec<MarkedPoint>) -> Self {
        let mut all = vec![MarkedPoint::tau()];
        all.extend(points);
        MarkedTree {
            components: vec![Component { points: all }],
            edges: vec![],
        }
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().map(Component::mass).sum()
    }

    pub fn has_chi(&self) -> bool {
        self.components.iter().any(Component::has_chi)
    }

    pub fn tau_component(&self) -> Option<usize> {
        self.components.iter().position(Component::has_tau)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.components.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Structural checks; with `w`, also degree and χ consistency.
    pub fn validate(&self, w: Option<&WeightVector>) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTree(m));
        let c = self.components.len();
        if c == 0 {
            return bad("no components".into());
        }
        if self.edges.len() != c - 1 {
            return bad(format!("{} edges on {c} components", self.edges.len()));
        }
        for &(a, b) in &self.edges {
            if a >= c || b >= c || a == b {
                return bad(format!("edge ({a}, {b})"));
            }
        }
        // connected + c−1 edges ⟹ tree
        let adj = self.neighbors();
        let mut seen = vec![false; c];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("edges do not connect the components".into());
        }
        let points = || self.components.iter().flat_map(|c| &c.points);
        let taus = points().filter(|p| p.tau).count();
        if taus != 1 {
            return bad(format!("{taus} points carry tau"));
        }
        if points().filter(|p| p.chi).count() > 1 {
            return bad("more than one point carries chi".into());
        }
        for p in points() {
            if p.tau && (p.mult > 0 || p.chi) {
                return bad("tau point must carry nothing else".into());
            }
            if !p.tau && !p.chi && p.mult == 0 {
                return bad("empty marked point".into());
            }
        }
        if let Some(w) = w {
            if self.degree() != w.degree {
                return bad(format!(
                    "branch degree {} but weights expect {}",
                    self.degree(),
                    w.degree
                ));
            }
            if self.has_chi() != w.pointed_flag() {
                return bad("chi must be present exactly when beta is".into());
            }
        }
        Ok(())
    }

    /// Breadth-first order from the τ component, with parent pointers.
    pub(crate) fn rooted(&self) -> (Vec<usize>, Vec<Option<usize>>) {
        let root = self.tau_component().expect("validated tree has tau");
        let adj = self.neighbors();
        let mut parent = vec![None; self.components.len()];
        let mut order = vec![root];
        let mut seen = vec![false; self.components.len()];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(v);
                    order.push(u);
                }
            }
            i += 1;
        }
        (order, parent)
    }

    /// Branch mass of the subtree hanging below each component (rooted at τ).
    pub(crate) fn subtree_masses(&self) -> (Vec<u32>, Vec<Option<usize>>) {
        let (order, parent) = self.rooted();
        let mut mass: Vec<u32> = self.components.iter().map(Component::mass).collect();
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                mass[p] += mass[v];
            }
        }
        (mass, parent)
    }

    pub fn canonical(&self) -> CanonicalNode {
        let (order, parent) = self.rooted();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); self.components.len()];
        for &v in &order {
            if let Some(p) = parent[v] {
                children[p].push(v);
            }
        }
        fn build(t: &MarkedTree, v: usize, children: &[Vec<usize>]) -> CanonicalNode {
            let mut points: Vec<(u32, bool)> = t.components[v]
                .points
                .iter()
                .filter(|p| !p.tau)
                .map(|p| (p.mult, p.chi))
                .collect();
            points.sort();
            let mut kids: Vec<CanonicalNode> = children[v].iter().map(|&c| build(t, c, children)).collect();
            kids.sort();
            CanonicalNode { points, children: kids }
        }
        build(self, order[0], &children)
    }

    /// Equality up to relabelling components and slots, fixing τ and χ.
    pub fn isomorphic(&self, other: &MarkedTree) -> bool {
        self.canonical() == other.canonical()
    }

    /// Compact text form of the canonical tree, e.g. `[1,1,2c|[1,3]]`.
    pub fn certificate(&self) -> String {
        self.canonical().to_string()
    }

    /// Graphviz rendering of the dual tree with multiplicity labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dual_tree {\n");
        for (i, c) in self.components.iter().enumerate() {
            let labels: Vec<String> = c
                .points
                .iter()
                .map(|p| match (p.tau, p.chi) {
                    (true, _) => "τ".to_string(),
                    (_, true) => format!("χ{}", p.mult),
                    _ => p.mult.to_string(),
                })
                .collect();
            let _ = writeln!(s, "  c{i} [label=\"{}\"];", labels.join(" "));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(s, "  c{a} -- c{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// Canonical rooted form: sorted (mult, has_chi) slots and sorted child subtrees.
/// The τ slot is implicit on the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalNode {
    pub points: Vec<(u32, bool)>,
    pub children: Vec<CanonicalNode>,
}

impl CanonicalNode {
    pub fn mass(&self) -> u32 {
        self.points.iter().map(|p| p.0).sum::<u32>() + self.children.iter().map(CanonicalNode::mass).sum::<u32>()
    }

    pub fn has_chi(&self) -> bool {
        self.points.iter().any(|p| p.1) || self.children.iter().any(CanonicalNode::has_chi)
    }

    pub fn to_tree(&self) -> MarkedTree {
        let mut tree = MarkedTree {
            components: Vec::new(),
            edges: Vec::new(),
        };
        let mut queue = VecDeque::from([(self, None::<usize>)]);
        while let Some((node, parent)) = queue.pop_front() {
            let idx = tree.components.len();
            let mut points = Vec::new();
            if parent.is_none() {
                points.push(MarkedPoint::tau());
            }
            points.extend(
                node.points
                    .iter()
                    .map(|&(mult, chi)| MarkedPoint { mult, tau: false, chi }),
            );
            tree.components.push(Component { points });
            if let Some(p) = parent {
                tree.edges.push((p, idx));
            }
            for c in &node.children {
                queue.push_back((c, Some(idx)));
            }
        }
        tree
    }
}

impl std::fmt::Display for CanonicalNode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for (m, chi) in &self.points {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{m}{}", if *chi { "c" } else { "" })?;
        }
        for c in &self.children {
            write!(f, "|{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_one() -> MarkedTree {
        MarkedTree {
            components: vec![
                Component {
                    points: vec![MarkedPoint::tau(), MarkedPoint::branch(4), MarkedPoint::branch(2)],
                },
                Component {
                    points: vec![MarkedPoint::branch(1), MarkedPoint::branch(3)],
                },
            ],
            edges: vec![(0, 1)],
        }
    }

    #[test]
    fn json_schema_round_trip() {
        let t = figure_one();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.contains(r#""edges":[[0,1]]"#));
        let back: MarkedTree = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        let terse: MarkedTree =
            serde_json::from_str(r#"{"components":[{"points":[{"tau":true},{"mult":3}]}]}"#).unwrap();
        assert_eq!(terse, MarkedTree::single(vec![MarkedPoint::branch(3)]));
    }

    #[test]
    fn validation() {
        assert!(figure_one().validate(None).is_ok());
        let mut t = figure_one();
        t.edges.push((1, 0));
        assert!(t.validate(None).is_err());
        let mut t = figure_one();
        t.components[1].points.push(MarkedPoint::tau());
        assert!(t.validate(None).is_err());
        let w = WeightVector::unpointed(9, Rational::new(1, 5)).unwrap();
        assert!(figure_one().validate(Some(&w)).is_ok());
        let w = WeightVector::unpointed(8, Rational::new(1, 5)).unwrap();
        assert!(figure_one().validate(Some(&w)).is_err());
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let t = figure_one();
        let relabeled = MarkedTree {
            components: vec![
                Component {
                    points: vec![MarkedPoint::branch(3), MarkedPoint::branch(1)],
                },
                Component {
                    points: vec![MarkedPoint::branch(2), MarkedPoint::branch(4), MarkedPoint::tau()],
                },
            ],
            edges: vec![(1, 0)],
        };
        assert!(t.isomorphic(&relabeled));
        assert_eq!(t.certificate(), "[2,4|[1,3]]");
        assert!(t.canonical().to_tree().isomorphic(&t));
    }

    #[test]
    fn window_weights_land_in_their_window() {
        for k in 1..=8u32 {
            let w = WeightVector::for_window(10, k, None).unwrap();
            assert_eq!(w.window(), (k, None));
            for l in 1..=k + 1 {
                let w = WeightVector::for_window(10, k, Some(l)).unwrap();
                assert_eq!(w.window(), (k, Some(l)), "k={k} l={l}");
            }
        }
    }
}
