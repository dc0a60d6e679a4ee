//! Oracles and instance generators shared by the integration tests. The
//! oracles deliberately avoid the library's own linear algebra and matroid
//! code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tract_matroids::gp::GPFunction;
use tract_matroids::tracts::{Fp, Sign};
use tract_matroids::vectors::Vector;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn sign_of(x: &BigRational) -> Option<Sign> {
    if x.is_zero() {
        None
    } else if x.is_negative() {
        Some(Sign::Neg)
    } else {
        Some(Sign::Pos)
    }
}

pub fn sv(v: &[i8]) -> Vector<Sign> {
    Vector::new(
        v.iter()
            .map(|&x| match x.signum() {
                0 => None,
                1 => Some(Sign::Pos),
                _ => Some(Sign::Neg),
            })
            .collect(),
    )
}

pub fn random_q_matrix(rng: &mut ChaCha8Rng, r: usize, m: usize) -> Vec<Vec<BigRational>> {
    (0..r)
        .map(|_| (0..m).map(|_| q(rng.gen_range(-3..=3))).collect())
        .collect()
}

pub fn random_gf3_matrix(rng: &mut ChaCha8Rng, r: usize, m: usize) -> Vec<Vec<Fp<3>>> {
    (0..r)
        .map(|_| (0..m).map(|_| Fp::new(rng.gen_range(0..3))).collect())
        .collect()
}

/// Nullspace of the columns `cols` of `a`, by elimination written out
/// here rather than taken from the library.
fn nullspace<S: Num + Clone>(a: &[Vec<S>], cols: &[usize]) -> Vec<Vec<S>> {
    let mut rows: Vec<Vec<S>> = a
        .iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let n = cols.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut next = 0;
    for c in 0..n {
        let Some(p) = (next..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let lead = rows[next][c].clone();
        for x in rows[next].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        for i in 0..rows.len() {
            if i != next && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[next].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
        pivot_of_col[c] = Some(next);
        next += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| pivot_of_col[c].is_none()) {
        let mut v = vec![S::zero(); n];
        v[free] = S::one();
        for c in 0..n {
            if let Some(r) = pivot_of_col[c] {
                v[c] = S::zero() - rows[r][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// The circuits of the column matroid of `a` as kernel vectors: a column
/// set whose kernel is a line spanned by a vector of full support.
pub fn kernel_circuits<S: Num + Clone>(a: &[Vec<S>]) -> Vec<Vec<S>> {
    let m = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let cols: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let ns = nullspace(a, &cols);
        if ns.len() == 1 && ns[0].iter().all(|x| !x.is_zero()) {
            let mut full = vec![S::zero(); m];
            for (k, &c) in cols.iter().enumerate() {
                full[c] = ns[0][k].clone();
            }
            out.push(full);
        }
    }
    out
}

/// Determinant by cofactor expansion.
pub fn cofactor_det<S: Num + Clone>(a: &[Vec<S>]) -> S {
    let n = a.len();
    if n == 0 {
        return S::one();
    }
    let mut total = S::zero();
    for j in 0..n {
        let sub: Vec<Vec<S>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = a[0][j].clone() * cofactor_det(&sub);
        total = if j % 2 == 0 {
            total + term
        } else {
            total - term
        };
    }
    total
}

/// Whether the downward closure of `bases` (bitmasks, all of size `r`)
/// satisfies the independence augmentation axiom.
pub fn bases_form_matroid(m: usize, bases: &[u32]) -> bool {
    let mut independent = vec![false; 1 << m];
    for &b in bases {
        for s in 0u32..(1 << m) {
            if s & b == s {
                independent[s as usize] = true;
            }
        }
    }
    let sets: Vec<u32> = (0u32..(1 << m))
        .filter(|&s| independent[s as usize])
        .collect();
    for &i in &sets {
        for &j in &sets {
            if i.count_ones() < j.count_ones() {
                let ok = (0..m).any(|x| {
                    j >> x & 1 == 1 && i >> x & 1 == 0 && independent[(i | 1 << x) as usize]
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    // maximal independent sets must be exactly the listed bases
    sets.iter().all(|&s| {
        let maximal = (0..m).all(|x| s >> x & 1 == 1 || !independent[(s | 1 << x) as usize]);
        !maximal || bases.contains(&s)
    })
}

/// Number of rank-`r` matroids on `m` labelled elements.
pub fn count_matroids(m: usize, r: usize) -> usize {
    let candidates: Vec<u32> = (0u32..(1 << m))
        .filter(|s| s.count_ones() as usize == r)
        .collect();
    let n = candidates.len();
    (1u64..(1 << n))
        .filter(|mask| {
            let bases: Vec<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            bases_form_matroid(m, &bases)
        })
        .count()
}

/// Labelled matroids on `n` elements for `n = 0..=5`, all ranks together.
pub const LABELLED_MATROIDS: [usize; 6] = [1, 2, 5, 16, 68, 406];

/// Values of `φ` as a plain list, for comparisons in tests.
pub fn values_of<U: Clone + PartialEq>(phi: &GPFunction<U>) -> Vec<Option<U>> {
    phi.values().to_vec()
}
