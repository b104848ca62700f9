//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers. Matrices are
//! dense and row-major; `0 x k` and `k x 0` shapes are legal so that empty
//! Seifert forms flow through every operation.

mod homology;
mod smith;

pub(crate) use homology::is_prime;
pub use homology::{cokernel, kernel_rank, rank_mod_p, rank_over_q, HomologyGroup};
pub use smith::{smith_normal_form, SmithDecomposition};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.entries[i * size + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small-integer rows. Panics on ragged input, so
    /// it is meant for literals and tests.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::try_from_rows(rows).expect("ragged matrix literal")
    }

    pub fn try_from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn add(&self, other: &IntMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scaled(&self, factor: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && self.add(&self.transpose()).is_ok_and(|s| s.is_zero())
    }

    /// Determinant by Bareiss fraction-free elimination. The empty matrix
    /// has determinant 1.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    fn entries_as_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }
}

/// Kronecker (tensor) product with lexicographic index flattening:
/// entry `((i1, i2), (j1, j2))` is `a[i1, j1] * b[i2, j2]`.
pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = IntMatrix::zeros(rows, cols);
    for i1 in 0..a.rows {
        for j1 in 0..a.cols {
            let x = a.get(i1, j1);
            if x.is_zero() {
                continue;
            }
            for i2 in 0..b.rows {
                for j2 in 0..b.cols {
                    let y = b.get(i2, j2);
                    if !y.is_zero() {
                        out.set(i1 * b.rows + i2, j1 * b.cols + j2, x * y);
                    }
                }
            }
        }
    }
    out
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.entries_as_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.entries_as_rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("IntMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &self.entries_as_rows())?;
        st.end()
    }
}

/// An integer entry on the wire: decimal string, or a plain JSON integer
/// for hand-written inputs.
#[derive(Deserialize)]
#[serde(untagged)]
enum WireInt {
    Text(String),
    Small(i64),
}

impl WireInt {
    fn into_bigint(self) -> std::result::Result<BigInt, String> {
        match self {
            WireInt::Small(v) => Ok(BigInt::from(v)),
            WireInt::Text(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| format!("entry {s:?} is not a decimal integer")),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WireMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<WireInt>>,
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = WireMatrix::deserialize(deserializer)?;
        if wire.entries.len() != wire.rows {
            return Err(de::Error::custom(format!(
                "entries: {} rows listed, header says {}",
                wire.entries.len(),
                wire.rows
            )));
        }
        let mut entries = Vec::with_capacity(wire.rows * wire.cols);
        for (i, row) in wire.entries.into_iter().enumerate() {
            if row.len() != wire.cols {
                return Err(de::Error::custom(format!(
                    "entries: row {i} has {} entries, header says {}",
                    row.len(),
                    wire.cols
                )));
            }
            for x in row {
                entries.push(x.into_bigint().map_err(de::Error::custom)?);
            }
        }
        Ok(IntMatrix {
            rows: wire.rows,
            cols: wire.cols,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_unit_is_identity_map() {
        let b = IntMatrix::from_rows(&[[1, 2], [3, 4], [5, 6]]);
        assert_eq!(kronecker(&IntMatrix::identity(1), &b), b);
    }

    #[test]
    fn kronecker_of_bidiagonal_blocks() {
        let j = IntMatrix::from_rows(&[[1, 1], [0, 1]]);
        let expect =
            IntMatrix::from_rows(&[[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]]);
        assert_eq!(kronecker(&j, &j), expect);
    }

    #[test]
    fn kronecker_with_empty_factor() {
        let a = IntMatrix::from_rows(&[[1, 2], [3, 4]]);
        let k = kronecker(&a, &IntMatrix::zeros(0, 0));
        assert_eq!((k.rows(), k.cols()), (0, 0));
        let k = kronecker(&a, &IntMatrix::zeros(0, 3));
        assert_eq!((k.rows(), k.cols()), (0, 6));
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
        let m = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(-1));
        let m = IntMatrix::from_rows(&[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(4));
        assert!(IntMatrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn new_rejects_wrong_entry_count() {
        assert!(IntMatrix::new(2, 2, vec![BigInt::one(); 3]).is_err());
        assert!(IntMatrix::try_from_rows(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn json_uses_decimal_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = IntMatrix::new(1, 2, vec![big.clone(), BigInt::from(-3)]).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"rows":1,"cols":2,"entries":[["123456789012345678901234567890","-3"]]}"#
        );
        let back: IntMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn json_accepts_plain_integers_and_checks_shape() {
        let m: IntMatrix =
            serde_json::from_str(r#"{"rows":2,"cols":2,"entries":[[1,0],["0",1]]}"#).unwrap();
        assert_eq!(m, IntMatrix::identity(2));
        assert!(
            serde_json::from_str::<IntMatrix>(r#"{"rows":2,"cols":2,"entries":[[1,0]]}"#).is_err()
        );
        assert!(
            serde_json::from_str::<IntMatrix>(r#"{"rows":1,"cols":2,"entries":[["x",0]]}"#)
                .is_err()
        );
        let empty: IntMatrix = serde_json::from_str(r#"{"rows":0,"cols":0,"entries":[]}"#).unwrap();
        assert_eq!(empty.rows(), 0);
    }

    #[test]
    fn symmetry_predicates() {
        let s = IntMatrix::from_rows(&[[2, 1], [1, 2]]);
        let a = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        assert!(s.is_symmetric() && !s.is_antisymmetric());
        assert!(a.is_antisymmetric() && !a.is_symmetric());
    }
}
