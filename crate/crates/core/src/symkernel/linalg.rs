use super::Rational;

/// Reduced row echelon form of a rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelon {
    /// Nonzero rows only, each with leading entry 1.
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination; columns are scanned left to right, so earlier
/// columns are preferred as pivots.
pub fn row_reduce(matrix: &[Vec<Rational>]) -> RowEchelon {
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let ncols = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut m {
        row.resize(ncols, Rational::zero());
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][col].recip().expect("nonzero pivot");
        for c in col..ncols {
            m[r][c] *= &inv;
        }
        for i in 0..m.len() {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].clone();
            for c in col..ncols {
                let delta = &factor * &m[r][c];
                m[i][c] -= &delta;
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    RowEchelon { rows: m, pivots }
}

pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    row_reduce(matrix).pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
            .collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        assert_eq!(rank(&m(&[])), 0);
    }

    #[test]
    fn reduced_form() {
        let e = row_reduce(&m(&[&[0, 2, 4], &[1, 1, 1]]));
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows, m(&[&[1, 0, -1], &[0, 1, 2]]));
    }
}
