//! Graded Betti profiles over a coefficient field.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlab::is_prime;

/// Coefficient field: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::BadField(s.to_string()))?;
        Field::prime(p)
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Betti numbers `b_0, ..., b_dim` of a manifold of dimension `dim`.
/// Degrees outside `[0, dim]` read as zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedBetti {
    dim: usize,
    ranks: Vec<u64>,
    field: Field,
    closed_orientable: bool,
}

impl GradedBetti {
    /// `ranks[d]` is `b_d`; a short vector is padded with zeros. Profiles
    /// flagged closed-orientable must be Poincare dual.
    pub fn new(dim: usize, ranks: Vec<u64>, field: Field, closed_orientable: bool) -> Result<Self> {
        if ranks.len() > dim + 1 {
            let extra = ranks[dim + 1..].iter().position(|&r| r != 0);
            if let Some(off) = extra {
                return Err(Error::Profile(format!(
                    "nonzero rank in degree {} beyond dimension {dim}",
                    dim + 1 + off
                )));
            }
        }
        let mut ranks = ranks;
        ranks.resize(dim + 1, 0);
        let profile = GradedBetti {
            dim,
            ranks,
            field,
            closed_orientable,
        };
        if closed_orientable {
            profile.check_poincare_dual()?;
        }
        Ok(profile)
    }

    /// Closed orientable profile over the rationals.
    pub fn closed(ranks: &[u64]) -> Result<Self> {
        let dim = ranks
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Profile("a closed profile needs at least one degree".into()))?;
        Self::new(dim, ranks.to_vec(), Field::Rational, true)
    }

    /// Profile over the rationals with no duality requirement, e.g. a
    /// filling with boundary.
    pub fn open(dim: usize, ranks: &[u64]) -> Result<Self> {
        Self::new(dim, ranks.to_vec(), Field::Rational, false)
    }

    /// Betti numbers of the standard sphere `S^dim`.
    pub fn sphere(dim: usize, field: Field) -> Self {
        let mut ranks = vec![0; dim + 1];
        ranks[0] += 1;
        ranks[dim] += 1;
        Self::new(dim, ranks, field, true).expect("spheres are Poincare dual")
    }

    /// Betti numbers of a ball (a point) viewed as a manifold of dimension `dim`.
    pub fn ball(dim: usize, field: Field) -> Self {
        let mut ranks = vec![0; dim + 1];
        ranks[0] = 1;
        Self::new(dim, ranks, field, false).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn closed_orientable(&self) -> bool {
        self.closed_orientable
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    /// `b_degree`, zero outside `[0, dim]`.
    pub fn get(&self, degree: i64) -> u64 {
        usize::try_from(degree)
            .ok()
            .and_then(|d| self.ranks.get(d))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    pub fn total_rank(&self) -> u64 {
        self.ranks.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(d, &r)| if d % 2 == 0 { r as i128 } else { -(r as i128) })
            .sum()
    }

    pub fn is_poincare_dual(&self) -> bool {
        self.check_poincare_dual().is_ok()
    }

    fn check_poincare_dual(&self) -> Result<()> {
        for low in 0..=self.dim / 2 {
            let high = self.dim - low;
            if self.ranks[low] != self.ranks[high] {
                return Err(Error::NotPoincareDual {
                    low,
                    low_rank: self.ranks[low],
                    high,
                    high_rank: self.ranks[high],
                });
            }
        }
        Ok(())
    }

    /// Same ranks reinterpreted in a different ambient dimension, e.g. a
    /// closed `n`-manifold `L` viewed as the homotopy type of its `2n`-dimensional
    /// disc cotangent bundle.
    pub fn regraded(&self, dim: usize, closed_orientable: bool) -> Result<Self> {
        Self::new(dim, self.ranks.clone(), self.field, closed_orientable)
    }

    pub(crate) fn require_same_field(&self, other: &GradedBetti) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for GradedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks: Vec<String> = self.ranks.iter().map(ToString::to_string).collect();
        write!(f, "[{}] over {}", ranks.join(","), self.field)
    }
}

impl Serialize for GradedBetti {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let ranks = RanksByDegree(&self.ranks);
        let mut st = serializer.serialize_struct("GradedBetti", 4)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("ranks", &ranks)?;
        st.serialize_field("closed_orientable", &self.closed_orientable)?;
        st.end()
    }
}

/// Serializes dense ranks as `{"0": b0, "1": b1, ...}` in degree order.
struct RanksByDegree<'a>(&'a [u64]);

impl Serialize for RanksByDegree<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.0.iter().enumerate().map(|(d, r)| (d.to_string(), r)))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WireRanks {
    ByDegree(BTreeMap<String, u64>),
    Dense(Vec<u64>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WireProfile {
    dim: usize,
    #[serde(default)]
    field: Field,
    ranks: WireRanks,
    #[serde(default)]
    closed_orientable: bool,
}

impl<'de> Deserialize<'de> for GradedBetti {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = WireProfile::deserialize(deserializer)?;
        let ranks = match wire.ranks {
            WireRanks::Dense(v) => v,
            WireRanks::ByDegree(map) => {
                let mut dense = vec![0u64; wire.dim + 1];
                for (key, rank) in map {
                    let degree: i64 = key
                        .trim()
                        .parse()
                        .map_err(|_| de::Error::custom(format!("ranks: bad degree key {key:?}")))?;
                    match usize::try_from(degree).ok().filter(|&d| d <= wire.dim) {
                        Some(d) => dense[d] = rank,
                        None if rank == 0 => {}
                        None => {
                            return Err(de::Error::custom(format!(
                                "ranks: nonzero rank in degree {degree} outside [0, {}]",
                                wire.dim
                            )))
                        }
                    }
                }
                dense
            }
        };
        GradedBetti::new(wire.dim, ranks, wire.field, wire.closed_orientable)
            .map_err(de::Error::custom)
    }
}
