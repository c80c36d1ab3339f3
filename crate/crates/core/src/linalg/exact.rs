use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntMatrix, Matrix};

/// Determinant by Bareiss fraction-free elimination.
pub fn det_exact(a: &IntMatrix) -> BigInt {
    let n = a.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.rows().map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                debug_assert!(num.is_multiple_of(&prev));
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank of a rectangular integer matrix given as rows, by fraction-free
/// elimination with column skipping.
pub fn rank_int_rows(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..n_rows {
            for j in c + 1..n_cols {
                let num = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                debug_assert!(num.is_multiple_of(&prev));
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}

pub fn rank_rat_rows(rows: &[Vec<BigRational>]) -> usize {
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    rank_int_rows(&int_rows)
}

/// Rank of a square integer or rational matrix.
pub fn rank_exact<T: RankInput>(a: &Matrix<T>) -> usize {
    T::rank(a)
}

/// Scalars accepted by [`rank_exact`].
pub trait RankInput: Sized {
    fn rank(a: &Matrix<Self>) -> usize;
}

impl RankInput for BigInt {
    fn rank(a: &Matrix<Self>) -> usize {
        let rows: Vec<Vec<BigInt>> = a.rows().map(|r| r.to_vec()).collect();
        rank_int_rows(&rows)
    }
}

impl RankInput for BigRational {
    fn rank(a: &Matrix<Self>) -> usize {
        let rows: Vec<Vec<BigRational>> = a.rows().map(|r| r.to_vec()).collect();
        rank_rat_rows(&rows)
    }
}

/// Basis of the right nullspace of a `rows × cols` rational matrix, read off
/// the reduced row echelon form: one vector per free column, with a 1 in that
/// column.
pub fn nullspace_rational(rows: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let n_rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        for i in 0..n_rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let delta = &f * &m[r][j];
                m[i][j] = &m[i][j] - delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::RatMatrix;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    // Cofactor expansion, independent of the elimination path.
    fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for c in 0..n {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][c] * det_cofactor(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_exact(&IntMatrix::identity(5)), BigInt::one());
        assert_eq!(det_exact(&fixtures::durer()), BigInt::zero());
        assert_eq!(det_exact(&fixtures::type_b_order8()), BigInt::zero());
        let a = IntMatrix::from_rows(&[&[0, 2, 1], &[3, 0, 4], &[1, 1, 0]]).unwrap();
        assert_eq!(det_exact(&a), BigInt::from(11));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = IntMatrix::from_rows(&[
            &[3, -7, 2, 0, 5],
            &[1, 4, -6, 2, 2],
            &[0, 0, 9, -1, 3],
            &[-8, 2, 1, 1, 0],
            &[4, 4, 4, -3, 7],
        ])
        .unwrap();
        let rows: Vec<Vec<BigInt>> = a.rows().map(|r| r.to_vec()).collect();
        assert_eq!(det_exact(&a), det_cofactor(&rows));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&IntMatrix::identity(6)), 6);
        assert_eq!(rank_exact(&fixtures::type_b_order6()), 4);
        assert_eq!(rank_exact(&fixtures::type_b_order8()), 5);
        assert_eq!(rank_exact(&IntMatrix::zeros(3)), 0);
        assert_eq!(rank_exact(&IntMatrix::ones(4)), 1);
        let half = RatMatrix::new(2, vec![rat(1, 2), rat(1, 3), rat(1, 4), rat(1, 6)]).unwrap();
        assert_eq!(rank_exact(&half), 1);
    }

    #[test]
    fn nullspace_examples() {
        let id: Vec<Vec<BigRational>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { rat(1, 1) } else { rat(0, 1) }).collect())
            .collect();
        assert!(nullspace_rational(&id, 3).is_empty());

        let ones = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]];
        let basis = nullspace_rational(&ones, 2);
        assert_eq!(basis.len(), 1);
        assert_eq!(&basis[0][0] + &basis[0][1], rat(0, 1));
        assert!(!basis[0][0].is_zero());
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let rows = vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1), rat(8, 1)],
            vec![rat(0, 1), rat(1, 2), rat(-1, 3), rat(1, 1)],
        ];
        let basis = nullspace_rational(&rows, 4);
        assert_eq!(basis.len() + rank_rat_rows(&rows), 4);
        for v in &basis {
            for r in &rows {
                let dot = r.iter().zip(v).fold(rat(0, 1), |a, (x, y)| a + x * y);
                assert!(dot.is_zero());
            }
        }
    }
}
