use fillcheck_core::intlab::{
    cokernel, kernel_rank, kronecker, rank_mod_p, rank_over_q, smith_normal_form,
};
use fillcheck_core::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Fraction-free (Bareiss) rank, on i128.
fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(p) = (rank..m).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..m {
            for j in col + 1..n {
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    rank
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (0usize..=8, 0usize..=8).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r)
    })
}

fn low_rank_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    // products of thin factors have rank deficiency more often than uniform draws
    (1usize..=6, 1usize..=6, 1usize..=3).prop_flat_map(|(r, c, k)| {
        (
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), r),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), k),
        )
            .prop_map(move |(a, b)| {
                (0..r)
                    .map(|i| {
                        (0..c)
                            .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                            .collect()
                    })
                    .collect()
            })
    })
}

fn build(rows: &[Vec<i64>], cols_hint: usize) -> IntMatrix {
    if rows.is_empty() {
        IntMatrix::zeros(0, cols_hint)
    } else {
        IntMatrix::from_rows(rows)
    }
}

fn assert_certificate(m: &IntMatrix) {
    let s = smith_normal_form(m);
    assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
    assert!(s.u.determinant().unwrap().abs().is_one());
    assert!(s.v.determinant().unwrap().abs().is_one());
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j {
                assert!(s.d.get(i, j).is_zero());
            }
        }
    }
    let diag: Vec<BigInt> = (0..m.rows().min(m.cols()))
        .map(|i| s.d.get(i, i).clone())
        .collect();
    assert!(diag.iter().all(|x| !x.is_negative()));
    for w in diag.windows(2) {
        if !w[0].is_zero() {
            assert!(
                w[1].is_multiple_of(&w[0]),
                "{} does not divide {}",
                w[0],
                w[1]
            );
        } else {
            assert!(w[1].is_zero());
        }
    }
    let nonzero: Vec<BigInt> = diag.into_iter().filter(|x| !x.is_zero()).collect();
    assert_eq!(s.invariant_factors, nonzero);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_certificate(rows in matrix(), c in 0usize..=8) {
        let m = build(&rows, c);
        assert_certificate(&m);
        let rank = oracle_rank(&rows);
        prop_assert_eq!(smith_normal_form(&m).rank(), rank);
        prop_assert_eq!(rank_over_q(&m), rank);
        prop_assert_eq!(kernel_rank(&m), m.cols() - rank);
    }

    #[test]
    fn smith_certificate_low_rank(rows in low_rank_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        assert_certificate(&m);
        prop_assert_eq!(rank_over_q(&m), oracle_rank(&rows));
    }

    #[test]
    fn rank_mod_p_counts_factors_prime_to_p(rows in matrix(), c in 0usize..=8) {
        let m = build(&rows, c);
        let factors = smith_normal_form(&m).invariant_factors;
        for p in [2u64, 3, 5, 7, 11, 13] {
            let expected = factors
                .iter()
                .filter(|f| !(*f % BigInt::from(p)).is_zero())
                .count();
            prop_assert_eq!(rank_mod_p(&m, p).unwrap(), expected);
        }
    }

    #[test]
    fn square_cokernel_order_is_determinant(rows in (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), n)
    })) {
        let m = IntMatrix::from_rows(&rows);
        let det = m.determinant().unwrap();
        let coker = cokernel(&m);
        if det.is_zero() {
            prop_assert!(coker.free_rank > 0);
        } else {
            prop_assert_eq!(coker.free_rank, 0);
            let order = coker.torsion.iter().fold(BigInt::one(), |acc, t| acc * t);
            prop_assert_eq!(order, det.abs());
        }
    }

    #[test]
    fn kronecker_laws(a in matrix(), b in matrix(), c in matrix()) {
        prop_assume!(!a.is_empty() && !b.is_empty() && !c.is_empty());
        prop_assume!(a.len() * b.len() * c.len() <= 64);
        let (ma, mb, mc) = (IntMatrix::from_rows(&a), IntMatrix::from_rows(&b), IntMatrix::from_rows(&c));
        prop_assert_eq!(
            kronecker(&kronecker(&ma, &mb), &mc),
            kronecker(&ma, &kronecker(&mb, &mc))
        );
        prop_assert_eq!(
            rank_over_q(&kronecker(&ma, &mb)),
            rank_over_q(&ma) * rank_over_q(&mb)
        );
        prop_assert_eq!(kronecker(&ma, &mb).transpose(), kronecker(&ma.transpose(), &mb.transpose()));
    }

    #[test]
    fn kronecker_determinant(
        a in (1usize..=3).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-5i64..=5, n), n)),
        b in (1usize..=3).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-5i64..=5, n), n)),
    ) {
        let (ma, mb) = (IntMatrix::from_rows(&a), IntMatrix::from_rows(&b));
        let (n, m) = (a.len() as u32, b.len() as u32);
        let expected = ma.determinant().unwrap().pow(m) * mb.determinant().unwrap().pow(n);
        prop_assert_eq!(kronecker(&ma, &mb).determinant().unwrap(), expected);
    }

    #[test]
    fn json_round_trip(rows in matrix(), c in 0usize..=8) {
        let m = build(&rows, c);
        let text = serde_json::to_string(&m).unwrap();
        let back: IntMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }
}

#[test]
fn oracle_rank_sanity() {
    assert_eq!(oracle_rank(&[vec![1, 2, 3], vec![2, 4, 6]]), 1);
    assert_eq!(oracle_rank(&[vec![0, 0], vec![0, 0]]), 0);
    assert_eq!(
        oracle_rank(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
        3
    );
}

#[test]
fn big_entries_survive() {
    let big = "123456789012345678901234567890".parse::<BigInt>().unwrap();
    let m = IntMatrix::new(
        2,
        2,
        vec![big.clone(), BigInt::zero(), BigInt::zero(), big.clone() * 2],
    )
    .unwrap();
    let s = smith_normal_form(&m);
    assert_eq!(s.invariant_factors, vec![big.clone(), big * 2]);
}
