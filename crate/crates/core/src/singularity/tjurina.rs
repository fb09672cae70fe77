use super::{SingKind, SingType};
use crate::error::{Error, Result};
use crate::symkernel::{row_reduce, MPoly, Rational, WeightAssignment};

/// Weighted-homogeneous generators of an ideal in K[x, y].
#[derive(Debug, Clone)]
pub struct TjurinaIdeal {
    pub normal_form: MPoly,
    pub generators: Vec<MPoly>,
    pub wx: u32,
    pub wy: u32,
    /// The quotient is taken inside the maximal ideal (the marked-point variant).
    pub inside_maximal_ideal: bool,
}

/// Generators `(f, f_x, f_y)` of the Tjurina ideal of the normal form of `t`.
///
/// `D_2` is the marked node: the quotient `m / (f, m·J)` for `f = y² − x²`.
pub fn tjurina_generators(t: SingType) -> Result<TjurinaIdeal> {
    let x = MPoly::var("x");
    let y = MPoly::var("y");
    let n = t.index;
    let (f, wx, wy) = match (t.kind, n) {
        (SingKind::A, _) => {
            let f = &y.pow(2) - &x.pow(n + 1);
            if n.is_multiple_of(2) {
                (f, 2, n + 1)
            } else {
                (f, 1, n.div_ceil(2))
            }
        }
        (SingKind::D, 1) => return Err(t.unsupported()),
        (SingKind::D, 2) => {
            let f = &y.pow(2) - &x.pow(2);
            let fx = f.derivative("x");
            let fy = f.derivative("y");
            let generators = vec![f.clone(), &x * &fx, &y * &fx, &x * &fy, &y * &fy];
            return Ok(TjurinaIdeal {
                normal_form: f,
                generators,
                wx: 1,
                wy: 1,
                inside_maximal_ideal: true,
            });
        }
        (SingKind::D, _) => {
            let f = &(&x * &y.pow(2)) - &x.pow(n - 1);
            if n.is_multiple_of(2) {
                (f, 1, (n - 2) / 2)
            } else {
                (f, 2, n - 2)
            }
        }
    };
    let generators = vec![f.clone(), f.derivative("x"), f.derivative("y")];
    Ok(TjurinaIdeal {
        normal_form: f,
        generators,
        wx,
        wy,
        inside_maximal_ideal: false,
    })
}

/// Monomial basis of the Tjurina algebra of the normal form of `t`.
pub fn tjurina_basis(t: SingType) -> Result<Vec<MPoly>> {
    let ideal = tjurina_generators(t)?;
    graded_quotient_basis(&ideal)
}

fn xy(a: u32, b: u32) -> MPoly {
    MPoly::monomial(Rational::one(), &[("x", a), ("y", b)])
}

/// Monomials `x^a y^b` of weighted degree `d`, most y-heavy first.
fn monomials_of_degree(d: u64, wx: u64, wy: u64) -> Vec<(u32, u32)> {
    (0..=d / wy)
        .rev()
        .filter(|b| (d - b * wy).is_multiple_of(wx))
        .map(|b| (((d - b * wy) / wx) as u32, b as u32))
        .collect()
}

/// Degree-by-degree reduction of monomials modulo a weighted-homogeneous ideal.
///
/// In each weighted degree the ideal is spanned by monomial multiples of the
/// generators; monomials not hit by a pivot form the basis. y-heavy monomials
/// are pivoted first so the basis favours powers of x.
pub fn graded_quotient_basis(ideal: &TjurinaIdeal) -> Result<Vec<MPoly>> {
    let w = WeightAssignment::from_pairs(&[("x", ideal.wx), ("y", ideal.wy)]);
    let (wx, wy) = (ideal.wx as u64, ideal.wy as u64);
    let mut gens = Vec::new();
    for g in &ideal.generators {
        let d = g
            .weighted_degree(&w)?
            .ok_or_else(|| Error::NotQuasiHomogeneous(g.to_string()))?;
        gens.push((g, d));
    }
    let max_gen = gens.iter().map(|(_, d)| *d).max().unwrap_or(0);
    // beyond twice the top generator degree the quotient of a zero-dimensional
    // quasi-homogeneous ideal in two variables is empty; the margin is checked below
    let bound = 2 * max_gen + wx + wy;
    let mut basis = Vec::new();
    let mut last_nonzero = 0;
    for d in 0..=bound + wx.max(wy) * 2 {
        let cols = monomials_of_degree(d, wx, wy);
        if cols.is_empty() {
            continue;
        }
        let mut rows = Vec::new();
        for (g, dg) in &gens {
            if *dg > d {
                continue;
            }
            for (a, b) in monomials_of_degree(d - dg, wx, wy) {
                let prod = *g * &xy(a, b);
                let row: Vec<Rational> = cols
                    .iter()
                    .map(|&(ca, cb)| prod.coefficient(&[("x", ca), ("y", cb)]))
                    .collect();
                rows.push(row);
            }
        }
        let pivots = row_reduce(&rows).pivots;
        for (idx, &(a, b)) in cols.iter().enumerate() {
            if pivots.contains(&idx) {
                continue;
            }
            if ideal.inside_maximal_ideal && a == 0 && b == 0 {
                continue;
            }
            basis.push(xy(a, b));
            last_nonzero = d;
        }
    }
    if last_nonzero > bound {
        return Err(Error::InvalidInput("ideal does not have finite colength".into()));
    }
    Ok(basis)
}
