use fillcheck_core::brieskorn::{
    exotic_sphere_verdict, is_homology_sphere, link_homology, milnor_number, seifert_matrix,
    subcritical_embedding_verdict, BrieskornLink,
};
use fillcheck_core::intlab::smith_normal_form;
use fillcheck_core::{cite, Field, IntMatrix, Status};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Seifert entry from multi-indices: a product of per-coordinate bidiagonal
/// entries, built without going through the Kronecker product.
fn oracle_intersection(exponents: &[u64]) -> Vec<Vec<i64>> {
    let dims: Vec<usize> = exponents.iter().map(|&a| a as usize - 1).collect();
    let mu: usize = dims.iter().product();
    let n = exponents.len() - 1;
    let index = |mut flat: usize| {
        let mut idx = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            idx[k] = flat % dims[k];
            flat /= dims[k];
        }
        idx
    };
    let seifert = |i: &[usize], j: &[usize]| -> i64 {
        i.iter().zip(j).all(|(&a, &b)| b == a || b == a + 1).into()
    };
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    (0..mu)
        .map(|r| {
            (0..mu)
                .map(|c| {
                    let (ir, ic) = (index(r), index(c));
                    seifert(&ir, &ic) + sign * seifert(&ic, &ir)
                })
                .collect()
        })
        .collect()
}

fn tuples_with_mu_at_most(len: usize, cap: u64) -> Vec<Vec<u64>> {
    fn go(len: usize, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let used: u64 = prefix.iter().map(|a| a - 1).product();
        let mut a = 2;
        while used * (a - 1) <= cap {
            prefix.push(a);
            go(len, cap, prefix, out);
            prefix.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    go(len, cap, &mut Vec::new(), &mut out);
    out
}

fn link(e: &[u64]) -> BrieskornLink {
    BrieskornLink::new(&e.iter().map(|&a| a as i64).collect::<Vec<_>>()).unwrap()
}

#[test]
fn seifert_construction_matches_oracle() {
    for len in 2..=5 {
        for e in tuples_with_mu_at_most(len, 24) {
            let l = link(&e);
            let a = seifert_matrix(&l).unwrap();
            let s = fillcheck_core::brieskorn::intersection_form(&a, l.n()).unwrap();
            assert_eq!(s, IntMatrix::from_rows(&oracle_intersection(&e)), "{e:?}");
        }
    }
}

#[test]
fn subcritical_sweep_matches_oracle() {
    for n in 3..=5 {
        for e in tuples_with_mu_at_most(n + 1, 60) {
            let s = oracle_intersection(&e);
            let nonzero = s.iter().flatten().any(|&x| x != 0);
            let v = subcritical_embedding_verdict(&link(&e)).unwrap();
            assert_eq!(v.is_obstructed(), nonzero, "{e:?}");
            if e.iter().all(|&a| a == 2) {
                assert_eq!(v.status == Status::Inconclusive, n % 2 == 1, "{e:?}");
            } else {
                assert!(v.is_obstructed(), "{e:?}");
            }
            if v.is_obstructed() {
                assert!(v.citations().any(|c| c == cite::INTERSECTION_OBSTRUCTION));
            }
        }
    }
}

#[test]
fn oracle_determinants() {
    let cases: &[(&[u64], i64)] = &[
        (&[2, 3, 5], 1),
        (&[2, 2, 2, 3, 5], 1),
        (&[2, 2, 2], 2),
        (&[2, 2, 2, 2], 0),
        (&[3, 2, 2, 2], 1),
        (&[2, 2, 2, 2, 2], 2),
        (&[2, 3, 7], 1),
        (&[2, 2, 3, 5], 1),
        (&[2, 2, 2, 2, 3, 5], 1),
    ];
    for &(e, det) in cases {
        let s = IntMatrix::from_rows(&oracle_intersection(e));
        assert_eq!(s.determinant().unwrap(), BigInt::from(det), "{e:?}");
        let homology_sphere = det.abs() == 1;
        assert_eq!(
            is_homology_sphere(&link(e)).unwrap(),
            homology_sphere,
            "{e:?}"
        );
    }
}

#[test]
fn oracle_smith_forms() {
    let factors = |e: &[u64]| {
        smith_normal_form(&IntMatrix::from_rows(&oracle_intersection(e)))
            .invariant_factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(factors(&[3, 3]), vec!["1", "1"]);
    assert_eq!(factors(&[3, 3, 3]), vec!["1", "1", "1", "1", "1", "3"]);
    assert_eq!(factors(&[2, 3, 5]), vec!["1"; 8]);
}

#[test]
fn link_homology_333() {
    let l = link(&[3, 3, 3]);
    let q = link_homology(&l, Field::Rational).unwrap();
    assert_eq!(q.h_n_minus_1.to_string(), "Z^2 + Z/3");
    assert_eq!(q.betti.ranks(), &[1, 2, 2, 1]);
    let f3 = link_homology(&l, Field::Prime(3)).unwrap();
    assert_eq!(f3.betti.ranks(), &[1, 3, 3, 1]);
    let f2 = link_homology(&l, Field::Prime(2)).unwrap();
    assert_eq!(f2.betti.ranks(), &[1, 2, 2, 1]);
}

#[test]
fn classics() {
    let l = link(&[2, 3, 5]);
    assert_eq!(milnor_number(&l), 8);
    let e = link(&[2, 2, 2, 3, 5]);
    let v = exotic_sphere_verdict(&e).unwrap();
    assert!(v.is_obstructed());
    assert!(v.citations().any(|c| c == cite::EXOTIC_SPHERE));
    let v = exotic_sphere_verdict(&link(&[2, 2, 2, 2, 2])).unwrap();
    assert_eq!(v.status, Status::Inconclusive);
}

fn exponents() -> impl Strategy<Value = Vec<u64>> {
    (3usize..=5)
        .prop_flat_map(|len| proptest::collection::vec(2u64..=4, len))
        .prop_filter("mu <= 48", |e| {
            e.iter().map(|a| a - 1).product::<u64>() <= 48
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn link_homology_is_poincare_dual(e in exponents(), p in prop::sample::select(vec![0u64, 2, 3, 5])) {
        let field = if p == 0 { Field::Rational } else { Field::Prime(p) };
        let h = link_homology(&link(&e), field).unwrap();
        prop_assert!(h.betti.is_poincare_dual());
        prop_assert_eq!(h.betti.euler_characteristic(), 0);
        let n = e.len() - 1;
        prop_assert_eq!(h.betti.dim(), 2 * n - 1);
        // (n-2)-connected
        for d in 1..n.saturating_sub(1) {
            prop_assert_eq!(h.betti.get(d as i64), 0);
        }
    }

    #[test]
    fn rational_middle_betti_is_nullity(e in exponents()) {
        let l = link(&e);
        let s = IntMatrix::from_rows(&oracle_intersection(&e));
        let nullity = s.cols() - smith_normal_form(&s).rank();
        let h = link_homology(&l, Field::Rational).unwrap();
        let n = l.n() as i64;
        prop_assert_eq!(h.betti.get(n), nullity as u64);
        prop_assert_eq!(h.betti.get(n - 1), nullity as u64);
    }
}
