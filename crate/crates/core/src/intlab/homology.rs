use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^free_rank + Z/t1 + ... + Z/tk`
/// with `t1 | t2 | ... | tk` and every `ti >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of torsion summands whose order is divisible by `p`.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|t| t.is_multiple_of(&p)).count()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion: Vec<String> = self.torsion.iter().map(ToString::to_string).collect();
        let mut st = serializer.serialize_struct("HomologyGroup", 3)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

pub fn rank_over_q(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

/// Cokernel of `m` viewed as a map `Z^cols -> Z^rows`.
pub fn cokernel(m: &IntMatrix) -> HomologyGroup {
    let snf = smith_normal_form(m);
    HomologyGroup {
        free_rank: m.rows() - snf.rank(),
        torsion: snf
            .invariant_factors
            .into_iter()
            .filter(|d| !d.is_one())
            .collect(),
    }
}

/// Rank of the kernel of `m` viewed as a map `Z^cols -> Z^rows`. The kernel
/// of an integer matrix is free, so the rank determines it.
pub fn kernel_rank(m: &IntMatrix) -> usize {
    m.cols() - rank_over_q(m)
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Rank of `m` over the prime field `F_p`, by Gaussian elimination on the
/// reduced residues.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let modulus = BigInt::from(p);
    let mut a: Vec<Vec<u128>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.mod_floor(&modulus).to_u128().expect("residue fits"))
                .collect()
        })
        .collect();
    let p = u128::from(p);
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot) = (rank..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_inverse(a[rank][col], p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

fn mod_inverse(x: u128, p: u128) -> u128 {
    // Fermat: x^(p-2) mod p
    let mut base = x % p;
    let mut exp = p - 2;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_examples() {
        let c = cokernel(&IntMatrix::from_rows(&[[2]]));
        assert_eq!(c.free_rank, 0);
        assert_eq!(c.torsion, vec![BigInt::from(2)]);
        assert_eq!(c.to_string(), "Z/2");

        let c = cokernel(&IntMatrix::from_rows(&[[0]]));
        assert_eq!(c, HomologyGroup::free(1));

        assert!(cokernel(&IntMatrix::identity(3)).is_trivial());
        assert_eq!(cokernel(&IntMatrix::zeros(0, 0)).to_string(), "0");
    }

    #[test]
    fn kernel_rank_examples() {
        assert_eq!(kernel_rank(&IntMatrix::from_rows(&[[0]])), 1);
        assert_eq!(kernel_rank(&IntMatrix::identity(4)), 0);
        assert_eq!(kernel_rank(&IntMatrix::from_rows(&[[1, 1], [1, 1]])), 1);
    }

    #[test]
    fn rank_mod_p_examples() {
        let two = IntMatrix::from_rows(&[[2]]);
        assert_eq!(rank_mod_p(&two, 2).unwrap(), 0);
        assert_eq!(rank_mod_p(&two, 3).unwrap(), 1);
        let m = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        assert_eq!(rank_mod_p(&m, 3).unwrap(), 1);
        assert_eq!(rank_mod_p(&m, 5).unwrap(), 2);
        let neg = IntMatrix::from_rows(&[[-1, 4], [2, -8]]);
        assert_eq!(rank_mod_p(&neg, 7).unwrap(), 1);
    }

    #[test]
    fn rank_mod_p_rejects_non_primes() {
        let m = IntMatrix::identity(1);
        for bad in [0, 1, 4, 9, 15] {
            assert_eq!(rank_mod_p(&m, bad), Err(Error::NotPrime(bad)));
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
    }
}
