//! Independent oracles for the integration and acceptance tests. Nothing here
//! calls into the library's algorithms; only `Rational` arithmetic and the
//! plain tree/weight data types are shared.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use adcover::singularity::SingKind;
use adcover::symkernel::Rational;
use adcover::trees::{Component, MarkedPoint, MarkedTree};

/// Rank over Q by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].checked_div(&piv).unwrap();
                for j in c..cols {
                    let t = rows[r][j].clone() * f.clone();
                    rows[i][j] = rows[i][j].clone() - t;
                }
            }
        }
        r += 1;
    }
    r
}

// ---------- δ by normalization ----------

/// A branch t ↦ (cx t^ex, cy t^ey).
struct Branch {
    cx: i64,
    ex: u32,
    cy: i64,
    ey: u32,
}

fn branches(kind: SingKind, idx: u32) -> Vec<Branch> {
    let b = |cx, ex, cy, ey| Branch { cx, ex, cy, ey };
    // y² = x^m
    let cusp = |m: u32| -> Vec<Branch> {
        if m.is_multiple_of(2) {
            vec![b(1, 1, 1, m / 2), b(1, 1, -1, m / 2)]
        } else {
            vec![b(1, 2, 1, m)]
        }
    };
    match (kind, idx) {
        (SingKind::A, k) => cusp(k + 1),
        (SingKind::D, 2) => cusp(2),
        (SingKind::D, l) => {
            let mut v = vec![b(0, 0, 1, 1)];
            v.extend(cusp(l - 2));
            v
        }
    }
}

/// dim Õ/O, read off from the images of x^a y^b in Π K[t]/t^N.
pub fn delta_brute(kind: SingKind, idx: u32) -> u32 {
    let br = branches(kind, idx);
    let dim_at = |n: u32| -> u32 {
        let mut rows = Vec::new();
        for a in 0..=n {
            for bb in 0..=n {
                let mut row = vec![Rational::zero(); br.len() * n as usize];
                for (i, b) in br.iter().enumerate() {
                    // x ≡ 0 on a branch with cx = 0
                    if b.cx == 0 && a > 0 {
                        continue;
                    }
                    let e = a * b.ex + bb * b.ey;
                    if e < n {
                        let c = Rational::from_int(b.cx).pow(a) * Rational::from_int(b.cy).pow(bb);
                        row[i * n as usize + e as usize] = c;
                    }
                }
                rows.push(row);
            }
        }
        (br.len() as u32 * n) - rank(rows) as u32
    };
    let n = 4 * idx + 8;
    let d = dim_at(n);
    assert_eq!(d, dim_at(n + 3), "truncation not yet stable");
    d
}

// ---------- Tjurina number by truncated linear algebra ----------

type Poly = BTreeMap<(u32, u32), i64>;

fn poly(terms: &[((u32, u32), i64)]) -> Poly {
    terms.iter().copied().filter(|t| t.1 != 0).collect()
}

fn d_dx(p: &Poly) -> Poly {
    p.iter()
        .filter(|((a, _), _)| *a > 0)
        .map(|(&(a, b), &c)| ((a - 1, b), c * a as i64))
        .collect()
}

fn d_dy(p: &Poly) -> Poly {
    p.iter()
        .filter(|((_, b), _)| *b > 0)
        .map(|(&(a, b), &c)| ((a, b - 1), c * b as i64))
        .collect()
}

fn shift(p: &Poly, da: u32, db: u32) -> Poly {
    p.iter().map(|(&(a, b), &c)| ((a + da, b + db), c)).collect()
}

/// dim K[x,y]/(I + m^N).
fn quotient_dim(gens: &[Poly], n: u32) -> usize {
    let monos: Vec<(u32, u32)> = (0..n).flat_map(|d| (0..=d).map(move |a| (a, d - a))).collect();
    let index: BTreeMap<(u32, u32), usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        for &(a, b) in &monos {
            let mut row = vec![Rational::zero(); monos.len()];
            let mut any = false;
            for (m, c) in shift(g, a, b) {
                if let Some(&i) = index.get(&m) {
                    row[i] = Rational::from_int(c);
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    monos.len() - rank(rows)
}

/// Tjurina number of A_n, D_n (n ≥ 3); for D₂ the marked-node count dim m/(f, m·J).
pub fn tjurina_dim(kind: SingKind, idx: u32) -> usize {
    let (f, marked) = match (kind, idx) {
        (SingKind::A, n) => (poly(&[((0, 2), 1), ((n + 1, 0), -1)]), false),
        (SingKind::D, 2) => (poly(&[((0, 2), 1), ((2, 0), -1)]), true),
        (SingKind::D, n) => (poly(&[((1, 2), 1), ((n - 1, 0), -1)]), false),
    };
    let (fx, fy) = (d_dx(&f), d_dy(&f));
    let gens: Vec<Poly> = if marked {
        vec![
            f.clone(),
            shift(&fx, 1, 0),
            shift(&fx, 0, 1),
            shift(&fy, 1, 0),
            shift(&fy, 0, 1),
        ]
    } else {
        vec![f.clone(), fx, fy]
    };
    let n = idx + 4;
    let d = quotient_dim(&gens, n);
    assert_eq!(d, quotient_dim(&gens, n + 2), "truncation not yet stable");
    if marked {
        d - 1
    } else {
        d
    }
}

// ---------- labeled brute-force strata ----------

/// Weights for the oracle: branch weight α, χ weight β (pointed iff Some).
#[derive(Clone, Debug)]
pub struct OracleWeights {
    pub alpha: Rational,
    pub beta: Option<Rational>,
    pub degree: u32,
}

/// A rooted labeled tree: `parent[i] < i`, τ on component 0; points are (mult, χ).
#[derive(Clone, Debug)]
pub struct LabeledTree {
    pub parent: Vec<usize>,
    pub points: Vec<Vec<(u32, bool)>>,
}

impl LabeledTree {
    fn children(&self, v: usize) -> Vec<usize> {
        (1..self.parent.len()).filter(|&i| self.parent[i] == v).collect()
    }

    /// AHU-style string with τ implicit at the root.
    pub fn code(&self) -> String {
        self.code_at(0)
    }

    fn code_at(&self, v: usize) -> String {
        let mut pts: Vec<String> = self.points[v]
            .iter()
            .map(|&(m, c)| if c { format!("{m}*") } else { m.to_string() })
            .collect();
        pts.sort();
        let mut kids: Vec<String> = self.children(v).into_iter().map(|c| self.code_at(c)).collect();
        kids.sort();
        format!("({};{})", pts.join(","), kids.concat())
    }

    pub fn to_marked(&self) -> MarkedTree {
        let components = self
            .points
            .iter()
            .enumerate()
            .map(|(i, ps)| {
                let mut points: Vec<MarkedPoint> = ps
                    .iter()
                    .map(|&(m, c)| if c { MarkedPoint::chi(m) } else { MarkedPoint::branch(m) })
                    .collect();
                if i == 0 {
                    points.insert(0, MarkedPoint::tau());
                }
                Component { points }
            })
            .collect();
        let edges = (1..self.parent.len()).map(|i| (self.parent[i], i)).collect();
        MarkedTree { components, edges }
    }
}

/// Root at the τ component, then the same code as `LabeledTree::code`.
pub fn code_of(t: &MarkedTree) -> String {
    let n = t.components.len();
    let root = (0..n)
        .find(|&i| t.components[i].points.iter().any(|p| p.tau))
        .expect("τ present");
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &t.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &u in &adj[v] {
            if parent[u] == usize::MAX {
                parent[u] = v;
                order.push(u);
            }
        }
        i += 1;
    }
    let pos: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let lt = LabeledTree {
        parent: order
            .iter()
            .map(|v| if *v == root { 0 } else { pos[&parent[*v]] })
            .collect(),
        points: order
            .iter()
            .map(|&v| {
                t.components[v]
                    .points
                    .iter()
                    .filter(|p| !p.tau)
                    .map(|p| (p.mult, p.chi))
                    .collect()
            })
            .collect(),
    };
    lt.code()
}

/// Every parent array with parent[i] < i, nondecreasing (BFS labelings).
fn shapes(c: usize) -> Vec<Vec<usize>> {
    fn go(c: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == c {
            out.push(cur.clone());
            return;
        }
        let i = cur.len();
        let lo = if i == 1 { 0 } else { cur[i - 1] };
        for p in lo..i {
            cur.push(p);
            go(c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(c, &mut vec![0], &mut out);
    out
}

fn partitions(m: u32, max: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=m.min(max)).rev() {
        for mut rest in partitions(m - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Point sets of mass m: a partition, plus optionally χ on one part value or alone.
fn point_sets(m: u32, with_chi: bool) -> Vec<Vec<(u32, bool)>> {
    let mut out = Vec::new();
    for p in partitions(m, m) {
        let plain: Vec<(u32, bool)> = p.iter().map(|&v| (v, false)).collect();
        if !with_chi {
            out.push(plain);
            continue;
        }
        let mut alone = plain.clone();
        alone.push((0, true));
        out.push(alone);
        let distinct: BTreeSet<u32> = p.iter().copied().collect();
        for v in distinct {
            let mut q = plain.clone();
            let at = q.iter().position(|x| x.0 == v).unwrap();
            q[at].1 = true;
            out.push(q);
        }
    }
    out
}

impl OracleWeights {
    fn weight(&self, (m, c): (u32, bool)) -> Rational {
        let mut w = Rational::from_int(m as i64) * self.alpha.clone();
        if c {
            w = w + self.beta.clone().expect("χ only when pointed");
        }
        w
    }

    /// Both stability conditions on one component; τ counted on the root.
    fn component_ok(&self, pts: &[(u32, bool)], valence: usize, root: bool) -> bool {
        let one = Rational::one();
        if pts.iter().any(|&p| self.weight(p) > one) {
            return false;
        }
        let mut s = pts.iter().fold(Rational::zero(), |acc, &p| acc + self.weight(p));
        if root {
            s = s + one;
        }
        s + Rational::from_int(valence as i64 - 2) > Rational::zero()
    }
}

/// Stable point sets of one component, keyed by (mass, valence, root, with χ).
type PointSets = Vec<Vec<(u32, bool)>>;

struct Options<'a> {
    w: &'a OracleWeights,
    cache: BTreeMap<(u32, usize, bool, bool), PointSets>,
}

impl Options<'_> {
    fn get(&mut self, m: u32, valence: usize, root: bool, chi: bool) -> &Vec<Vec<(u32, bool)>> {
        let w = self.w;
        self.cache.entry((m, valence, root, chi)).or_insert_with(|| {
            point_sets(m, chi)
                .into_iter()
                .filter(|p| w.component_ok(p, valence, root))
                .collect()
        })
    }

    /// Least mass any stable point set can have here (χ or not).
    fn min_mass(&mut self, valence: usize, root: bool, pointed: bool, degree: u32) -> u32 {
        (0..=degree)
            .find(|&m| {
                !self.get(m, valence, root, false).is_empty()
                    || (pointed && !self.get(m, valence, root, true).is_empty())
            })
            .unwrap_or(degree + 1)
    }
}

/// All W-stable trees up to isomorphism, by brute force over BFS-labeled
/// shapes and per-component point sets, deduplicated by `code`.
pub fn brute_force_strata(w: &OracleWeights) -> BTreeMap<String, LabeledTree> {
    let pointed = w.beta.is_some();
    let mut found = BTreeMap::new();
    let mut opts = Options {
        w,
        cache: BTreeMap::new(),
    };
    // each non-root leaf needs mass ≥ 2 (≥ 1 with χ): c ≤ degree + 2
    for c in 1..=(w.degree as usize + 2) {
        for parent in shapes(c) {
            let mut valence = vec![0usize; c];
            for i in 1..c {
                valence[i] += 1;
                valence[parent[i]] += 1;
            }
            // suffix sums of lower bounds on mass
            let mut need = vec![0u32; c + 1];
            for i in (0..c).rev() {
                need[i] = need[i + 1] + opts.min_mass(valence[i], i == 0, pointed, w.degree);
            }
            if need[0] > w.degree {
                continue;
            }
            let mut points = vec![Vec::new(); c];
            let mut st = Search {
                parent: &parent,
                valence: &valence,
                need: &need,
                points: &mut points,
                found: &mut found,
            };
            st.fill(&mut opts, 0, w.degree, pointed);
        }
    }
    found
}

struct Search<'a> {
    parent: &'a [usize],
    valence: &'a [usize],
    need: &'a [u32],
    points: &'a mut Vec<Vec<(u32, bool)>>,
    found: &'a mut BTreeMap<String, LabeledTree>,
}

impl Search<'_> {
    fn fill(&mut self, opts: &mut Options, i: usize, remaining: u32, chi_left: bool) {
        if i == self.parent.len() {
            if remaining == 0 && !chi_left {
                let t = LabeledTree {
                    parent: self.parent.to_vec(),
                    points: self.points.clone(),
                };
                self.found.entry(t.code()).or_insert(t);
            }
            return;
        }
        if remaining < self.need[i] {
            return;
        }
        let (v, root) = (self.valence[i], i == 0);
        for m in 0..=remaining - self.need[i + 1] {
            for chi in [false, true] {
                if chi && !chi_left {
                    continue;
                }
                let sets = opts.get(m, v, root, chi).clone();
                for pts in sets {
                    self.points[i] = pts;
                    self.fill(opts, i + 1, remaining - m, chi_left && !chi);
                }
            }
        }
        self.points[i].clear();
    }
}
