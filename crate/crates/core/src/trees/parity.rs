use serde::Serialize;

use super::MarkedTree;
use crate::error::{Error, Result};
use crate::singularity::SingType;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddPoints {
    /// Odd edges as (parent, child) with the parent on the τ side.
    pub edges: Vec<(usize, usize)>,
    pub tau_odd: bool,
}

impl OddPoints {
    pub fn is_odd_edge(&self, a: usize, b: usize) -> bool {
        self.edges.iter().any(|&(p, c)| (p, c) == (a, b) || (p, c) == (b, a))
    }
}

/// An edge is odd when the branch mass beyond it (away from τ) is odd; τ is
/// odd when the total branch degree is.
pub fn odd_points(t: &MarkedTree) -> Result<OddPoints> {
    t.validate(None)?;
    let (mass, parent) = t.subtree_masses();
    let mut edges: Vec<(usize, usize)> = (0..t.components.len())
        .filter_map(|v| parent[v].filter(|_| mass[v] % 2 == 1).map(|p| (p, v)))
        .collect();
    edges.sort();
    Ok(OddPoints {
        edges,
        tau_odd: t.degree() % 2 == 1,
    })
}

/// Per component: own branch mass + odd incident edges + [odd τ here]. Always even.
pub fn parity_certificate(t: &MarkedTree) -> Result<Vec<u32>> {
    let odd = odd_points(t)?;
    let cert = corrected_degrees(t, &odd);
    if let Some(bad) = cert.iter().position(|d| d % 2 == 1) {
        return Err(Error::ParityViolation(bad));
    }
    Ok(cert)
}

fn odd_special_points(t: &MarkedTree, odd: &OddPoints) -> Vec<u32> {
    let mut count = vec![0u32; t.components.len()];
    for &(p, c) in &odd.edges {
        count[p] += 1;
        count[c] += 1;
    }
    if odd.tau_odd {
        count[t.tau_component().expect("tau")] += 1;
    }
    count
}

fn corrected_degrees(t: &MarkedTree, odd: &OddPoints) -> Vec<u32> {
    odd_special_points(t, odd)
        .into_iter()
        .zip(&t.components)
        .map(|(s, c)| s + c.mass())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub genus: u32,
    pub normalization_genus: u32,
    pub delta_total: u32,
    pub cover_nodes: u32,
    pub cover_components: u32,
    pub singularities: Vec<SingType>,
}

/// Arithmetic genus of the double cover over the tree.
///
/// Over each component the cover is branched at r points (odd clusters and odd
/// special points); it is one curve of genus r/2 − 1 when r > 0 and two
/// rational curves otherwise. Even edges lift to two nodes, odd edges to one.
/// χ on a cluster of multiplicity m ≥ 3 adds the extra line of the D_m germ.
pub fn arithmetic_genus(t: &MarkedTree) -> Result<GenusReport> {
    let odd = odd_points(t)?;
    let special = odd_special_points(t, &odd);
    let mut normalization_genus = 0i64;
    let mut components = 0i64;
    let mut delta = 0u32;
    let mut singularities = Vec::new();
    for (ci, comp) in t.components.iter().enumerate() {
        let odd_clusters = comp.points.iter().filter(|p| p.mult % 2 == 1).count() as u32;
        let r = odd_clusters + special[ci];
        if r % 2 == 1 {
            return Err(Error::ParityViolation(ci));
        }
        if r > 0 {
            normalization_genus += r as i64 / 2 - 1;
            components += 1;
        } else {
            components += 2;
        }
        for p in &comp.points {
            let sing = match (p.chi, p.mult) {
                (true, m) if m >= 1 => SingType::d(m),
                (false, m) if m >= 2 => SingType::a(m - 1),
                _ => continue,
            };
            if sing.kind == crate::singularity::SingKind::D && sing.index >= 3 {
                components += 1;
            }
            delta += sing.delta();
            singularities.push(sing);
        }
    }
    let nodes: u32 = t
        .edges
        .iter()
        .map(|&(a, b)| if odd.is_odd_edge(a, b) { 1 } else { 2 })
        .sum();
    let genus = normalization_genus + delta as i64 + nodes as i64 - components + 1;
    singularities.sort();
    Ok(GenusReport {
        genus: u32::try_from(genus).map_err(|_| Error::InvalidTree(format!("negative genus {genus}")))?,
        normalization_genus: normalization_genus as u32,
        delta_total: delta,
        cover_nodes: nodes,
        cover_components: components as u32,
        singularities,
    })
}
