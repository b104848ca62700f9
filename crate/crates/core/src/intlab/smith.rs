use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::IntMatrix;

/// Smith normal form `D = U * M * V` together with its unimodular
/// certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    #[serde(serialize_with = "serialize_factors")]
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

fn serialize_factors<S: serde::Serializer>(
    factors: &[BigInt],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_seq(factors.iter().map(ToString::to_string))
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in self.a.iter_mut().chain(self.v.iter_mut()) {
                row.swap(i, j);
            }
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let (d, s) = pair_mut(m, dst, src);
            for (x, y) in d.iter_mut().zip(s.iter()) {
                if !y.is_zero() {
                    *x += factor * y;
                }
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            if !row[src].is_zero() {
                let delta = factor * &row[src];
                row[dst] += delta;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -std::mem::take(x);
        }
    }

    /// Position of the nonzero entry of least absolute value in the
    /// trailing submatrix starting at `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in self.a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.magnitude() < self.a[bi][bj].magnitude(),
                };
                if better {
                    best = Some((i, j));
                    if x.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }
}

fn pair_mut<T>(m: &mut [T], dst: usize, src: usize) -> (&mut T, &T) {
    assert_ne!(dst, src);
    if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    }
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn to_matrix(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
    let r = rows.len();
    IntMatrix::new(r, cols, rows.into_iter().flatten().collect())
        .expect("rectangular by construction")
}

/// Smith normal form by row and column reduction, always pivoting on the
/// entry of least absolute value. Total on every shape, including empty
/// matrices.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: (0..rows).map(|i| m.row(i).to_vec()).collect(),
        u: identity_rows(rows),
        v: identity_rows(cols),
    };

    let mut t = 0;
    'diag: while t < rows.min(cols) {
        loop {
            let Some((pi, pj)) = w.min_pivot(t) else {
                break 'diag;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.add_row(i, t, &-q);
                clean &= w.a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.add_col(j, t, &-q);
                clean &= w.a[t][j].is_zero();
            }
            if !clean {
                // a nonzero remainder is now smaller than the pivot
                continue;
            }

            let pivot = w.a[t][t].clone();
            let offender =
                (t + 1..rows).find(|&i| w.a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }

    let invariant_factors = (0..t).map(|i| w.a[i][i].clone()).collect();
    SmithDecomposition {
        u: to_matrix(w.u, rows),
        d: to_matrix(w.a, cols),
        v: to_matrix(w.v, cols),
        invariant_factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(m);
        let umv = snf.u.mul(m).unwrap().mul(&snf.v).unwrap();
        assert_eq!(umv, snf.d, "U*M*V != D for {m:?}");
        assert!(snf.u.determinant().unwrap().magnitude().is_one());
        assert!(snf.v.determinant().unwrap().magnitude().is_one());
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        for pair in snf.invariant_factors.windows(2) {
            assert!(pair[1].is_multiple_of(&pair[0]));
        }
        snf
    }

    fn factors(snf: &SmithDecomposition) -> Vec<i64> {
        snf.invariant_factors
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn zero_one_by_one() {
        let snf = check(&IntMatrix::from_rows(&[[0]]));
        assert_eq!(snf.d, IntMatrix::from_rows(&[[0]]));
        assert!(snf.invariant_factors.is_empty());
    }

    #[test]
    fn identity_is_fixed() {
        for k in 0..5 {
            let snf = check(&IntMatrix::identity(k));
            assert_eq!(snf.d, IntMatrix::identity(k));
            assert_eq!(factors(&snf), vec![1; k]);
        }
    }

    #[test]
    fn coprime_diagonal_merges() {
        let snf = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(factors(&snf), vec![1, 6]);
    }

    #[test]
    fn non_coprime_diagonal_reorders() {
        let snf = check(&IntMatrix::from_rows(&[[4, 0], [0, 6]]));
        assert_eq!(factors(&snf), vec![2, 12]);
    }

    #[test]
    fn negative_pivot_normalized() {
        let snf = check(&IntMatrix::from_rows(&[[-5]]));
        assert_eq!(factors(&snf), vec![5]);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let snf = check(&IntMatrix::zeros(r, c));
            assert_eq!((snf.u.rows(), snf.v.rows()), (r, c));
            assert!(snf.invariant_factors.is_empty());
        }
    }

    #[test]
    fn rectangular_with_torsion() {
        // Z^3 / image of [[2,4,4],[-6,6,12],[10,-4,-16]] = Z/2 + Z/6 + Z/12
        let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
        assert_eq!(factors(&check(&m)), vec![2, 6, 12]);
        let m = IntMatrix::from_rows(&[[1, 2, 3], [4, 5, 6]]);
        assert_eq!(factors(&check(&m)), vec![1, 3]);
    }
}
