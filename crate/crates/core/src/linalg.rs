//! Exact Gaussian elimination over a field of scalars.

use num_traits::Num;

use crate::subset::Subset;

pub type Matrix<S> = Vec<Vec<S>>;

/// Reduced row echelon form and the pivot columns.
pub fn rref<S: Num + Clone>(m: &[Vec<S>]) -> (Matrix<S>, Vec<usize>) {
    let mut a: Matrix<S> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = S::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = a[i][j].clone() - f.clone() * a[r][j].clone();
                    a[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<S: Num + Clone>(m: &[Vec<S>]) -> usize {
    rref(m).1.len()
}

/// Determinant of a square matrix.
pub fn determinant<S: Num + Clone>(m: &[Vec<S>]) -> S {
    let n = m.len();
    let mut a: Matrix<S> = m.to_vec();
    let mut det = S::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return S::zero();
        };
        if p != c {
            a.swap(p, c);
            det = S::zero() - det;
        }
        let piv = a[c][c].clone();
        det = det * piv.clone();
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = a[i][c].clone() / piv.clone();
                for j in c..n {
                    let v = a[i][j].clone() - f.clone() * a[c][j].clone();
                    a[i][j] = v;
                }
            }
        }
    }
    det
}

/// A basis of the right kernel `{x : m x = 0}`.
pub fn kernel<S: Num + Clone>(m: &[Vec<S>], cols: usize) -> Matrix<S> {
    let (a, pivots) = rref(m);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![S::zero(); cols];
        v[free] = S::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = S::zero() - a[row][free].clone();
        }
        out.push(v);
    }
    out
}

/// The `r × r` minor on the given columns of an `r × m` matrix.
pub fn minor<S: Num + Clone>(m: &[Vec<S>], cols: Subset) -> S {
    let sub: Matrix<S> = m
        .iter()
        .map(|row| cols.iter().map(|c| row[c].clone()).collect())
        .collect();
    determinant(&sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracts::Fp;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn mat(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&mat(&[&[1, 2], &[3, 4]])), q(-2));
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), q(-1));
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])), q(0));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = mat(&[&[1, 1, 1, 1], &[1, 2, 3, 4]]);
        let k = kernel(&m, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(q(0), |acc, (a, b)| acc + a.clone() * b.clone());
                assert_eq!(dot, q(0));
            }
        }
    }

    #[test]
    fn rank_mod_p() {
        let m: Matrix<Fp<3>> = vec![
            vec![Fp::new(1), Fp::new(1), Fp::new(0)],
            vec![Fp::new(1), Fp::new(-2), Fp::new(0)],
        ];
        // the rows agree modulo 3
        assert_eq!(rank(&m), 1);
    }
}
