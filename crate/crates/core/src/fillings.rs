//! Betti-number constraints between a contact boundary `Sigma^{2n-1}` and
//! its fillings `W^{2n}`.

use std::collections::BTreeSet;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::betti::GradedBetti;
use crate::error::{Error, Result};

/// Half-dimension `n` of a boundary profile of dimension `2n - 1`.
fn boundary_half_dim(sigma: &GradedBetti, what: &str) -> Result<usize> {
    let dim = sigma.dim();
    if dim.is_multiple_of(2) {
        return Err(Error::Dimension(format!(
            "{what} must be odd-dimensional (2n - 1), got dimension {dim}"
        )));
    }
    Ok(dim.div_ceil(2))
}

fn filling_half_dim(w: &GradedBetti, what: &str) -> Result<usize> {
    let dim = w.dim();
    if dim % 2 == 1 || dim == 0 {
        return Err(Error::Dimension(format!(
            "{what} must have even positive dimension 2n, got dimension {dim}"
        )));
    }
    Ok(dim / 2)
}

fn require_nonzero(profile: &GradedBetti, what: &str) -> Result<()> {
    if profile.is_zero() {
        return Err(Error::Inconsistent(format!(
            "{what} is an all-zero profile"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DualityViolation {
    pub degree: usize,
    /// `b_p(Sigma)`
    pub sigma: u64,
    /// `b_p(W) + b_{2n-p-1}(W)`
    pub filling: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub holds: bool,
    pub violations: Vec<DualityViolation>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DualityMode {
    /// Field tags must agree.
    #[default]
    Strict,
    /// Report-only: mismatched field tags are noted instead of rejected.
    Lax,
}

/// Checks `b_p(Sigma) = b_p(W) + b_{2n-p-1}(W)` for every `p` in `[0, 2n-1]`.
pub fn duality_check(sigma: &GradedBetti, w: &GradedBetti) -> Result<DualityReport> {
    duality_check_with(sigma, w, DualityMode::Strict)
}

pub fn duality_check_with(
    sigma: &GradedBetti,
    w: &GradedBetti,
    mode: DualityMode,
) -> Result<DualityReport> {
    let n = boundary_half_dim(sigma, "sigma")?;
    if w.dim() != 2 * n {
        return Err(Error::Dimension(format!(
            "filling has dimension {} but the boundary has dimension {}; expected {}",
            w.dim(),
            sigma.dim(),
            2 * n
        )));
    }
    let mut notes = Vec::new();
    match mode {
        DualityMode::Strict => sigma.require_same_field(w)?,
        DualityMode::Lax if sigma.field() != w.field() => notes.push(format!(
            "lax mode: comparing ranks over {} with ranks over {}",
            sigma.field(),
            w.field()
        )),
        DualityMode::Lax => {}
    }

    let violations: Vec<DualityViolation> = (0..2 * n)
        .filter_map(|p| {
            let lhs = sigma.get(p as i64);
            let rhs = w.get(p as i64) + w.get((2 * n - p - 1) as i64);
            (lhs != rhs).then_some(DualityViolation {
                degree: p,
                sigma: lhs,
                filling: rhs,
            })
        })
        .collect();
    Ok(DualityReport {
        n,
        holds: violations.is_empty(),
        violations,
        notes,
    })
}

/// The pair-sum constraint `b_{n-1}(W) + b_n(W) = sum`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairConstraint {
    pub degrees: (usize, usize),
    pub sum: u64,
    pub resolved: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingBettiSolution {
    pub n: usize,
    /// `determined[p]` is `Some(b_p(W))` where forced, for `p` in `[0, 2n]`.
    pub determined: Vec<Option<u64>>,
    pub constrained: Option<PairConstraint>,
    pub fully_determined: bool,
}

impl FillingBettiSolution {
    pub fn get(&self, degree: usize) -> Option<u64> {
        self.determined.get(degree).copied().flatten()
    }

    /// The filling profile, when every degree is forced.
    pub fn profile(&self, like: &GradedBetti) -> Option<GradedBetti> {
        if !self.fully_determined {
            return None;
        }
        let ranks = self.determined.iter().map(|r| r.unwrap_or(0)).collect();
        GradedBetti::new(2 * self.n, ranks, like.field(), false).ok()
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum RankCell {
    Known(u64),
    Unknown(&'static str),
}

struct CellsByDegree<'a>(&'a [Option<u64>]);

impl Serialize for CellsByDegree<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.0.iter().enumerate().map(|(d, r)| {
            let cell = match r {
                Some(v) => RankCell::Known(*v),
                None => RankCell::Unknown("undetermined"),
            };
            (d.to_string(), cell)
        }))
    }
}

impl Serialize for FillingBettiSolution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FillingBettiSolution", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("determined", &CellsByDegree(&self.determined))?;
        st.serialize_field("constrained", &self.constrained)?;
        st.serialize_field("fully_determined", &self.fully_determined)?;
        st.end()
    }
}

/// Betti numbers of a Stein filling of `Sigma` when `Sigma` embeds in
/// `R^{2n}`, `n >= 3`.
pub fn stein_filling_betti(sigma: &GradedBetti, subcritical: bool) -> Result<FillingBettiSolution> {
    let n = boundary_half_dim(sigma, "sigma")?;
    if n < 3 {
        return Err(Error::Hypothesis(format!(
            "Stein filling reconstruction needs n >= 3, got n = {n}"
        )));
    }
    require_nonzero(sigma, "sigma")?;
    let (below, middle) = (sigma.get(n as i64 - 1), sigma.get(n as i64));
    if below != middle {
        return Err(Error::Inconsistent(format!(
            "b_{}(Sigma) = {below} but b_{n}(Sigma) = {middle}; they must agree",
            n - 1
        )));
    }

    let mut determined = vec![None; 2 * n + 1];
    for (p, slot) in determined.iter_mut().enumerate() {
        if p + 2 <= n {
            *slot = Some(sigma.get(p as i64));
        } else if p > n {
            *slot = Some(0);
        }
    }
    let constraint = |resolved| PairConstraint {
        degrees: (n - 1, n),
        sum: middle,
        resolved,
    };
    let constrained = if subcritical {
        determined[n] = Some(0);
        determined[n - 1] = Some(below);
        constraint(true)
    } else if middle == 0 {
        determined[n] = Some(0);
        determined[n - 1] = Some(0);
        constraint(true)
    } else {
        constraint(false)
    };
    Ok(FillingBettiSolution {
        n,
        determined,
        fully_determined: constrained.resolved,
        constrained: Some(constrained),
    })
}

/// `rank HC_k^0(Sigma)` as a sum of Betti numbers of `Sigma`.
pub fn hc_rank_from_sigma(sigma: &GradedBetti, k: i64) -> Result<u64> {
    let n = boundary_half_dim(sigma, "sigma")?;
    if n < 3 {
        return Err(Error::Hypothesis(format!(
            "the contact homology rank formula needs n >= 3, got n = {n}"
        )));
    }
    let n = n as i64;
    let lo = (2 * n - 2 - k).max(0);
    let hi = n - 1;
    Ok((lo..=hi)
        .filter(|p| (p - k).rem_euclid(2) == 0)
        .map(|p| sigma.get(p))
        .sum())
}

/// `rank HC_k^0(Sigma)` as `sum_{m >= 0} b_{2n-2-k+2m}(W)`, truncated to the
/// degrees `[0, 2n]` where `W` can have homology.
pub fn hc_rank_from_filling(w: &GradedBetti, k: i64) -> Result<u64> {
    let n = filling_half_dim(w, "filling")? as i64;
    let top = 2 * n;
    let mut degree = 2 * n - 2 - k;
    if degree < 0 {
        // first nonnegative degree of the same parity
        degree = degree.rem_euclid(2);
    }
    let mut total = 0;
    while degree <= top {
        total += w.get(degree);
        degree += 2;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HcRankRow {
    pub k: i64,
    pub from_sigma: u64,
    pub from_filling: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HcConsistency {
    pub holds: bool,
    pub rows: Vec<HcRankRow>,
}

/// Compares both contact-homology rank routes for every `k` in `[-2n, 4n]`.
/// Requires the duality identity to hold for the pair.
pub fn hc_consistency(sigma: &GradedBetti, w: &GradedBetti) -> Result<HcConsistency> {
    let report = duality_check(sigma, w)?;
    if !report.holds {
        let degrees: Vec<String> = report
            .violations
            .iter()
            .map(|v| v.degree.to_string())
            .collect();
        return Err(Error::Hypothesis(format!(
            "the pair violates b_p(Sigma) = b_p(W) + b_(2n-p-1)(W) in degrees {}",
            degrees.join(", ")
        )));
    }
    let n = report.n as i64;
    let rows = (-2 * n..=4 * n)
        .map(|k| {
            Ok(HcRankRow {
                k,
                from_sigma: hc_rank_from_sigma(sigma, k)?,
                from_filling: hc_rank_from_filling(w, k)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HcConsistency {
        holds: rows.iter().all(|r| r.from_sigma == r.from_filling),
        rows,
    })
}

/// One admissible `(b_2(Sigma^+), b_2(W^+))` after surgery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurgeryPossibility {
    Exact {
        b2_sigma: u64,
        b2_w: u64,
    },
    /// `b_2(Sigma^+)` anywhere in `[lo, hi]`, with `b_2(W^+)` fixed.
    SigmaRange {
        lo: u64,
        hi: u64,
        b2_w: u64,
    },
}

impl Serialize for SurgeryPossibility {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            SurgeryPossibility::Exact { b2_sigma, b2_w } => [b2_sigma, b2_w].serialize(serializer),
            SurgeryPossibility::SigmaRange { lo, hi, b2_w } => {
                let mut st = serializer.serialize_struct("SigmaRange", 2)?;
                st.serialize_field("interval", &[lo, hi])?;
                st.serialize_field("b2_w", &b2_w)?;
                st.end()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryOutcome {
    pub possibilities: Vec<SurgeryPossibility>,
    pub unchanged_degrees: Vec<usize>,
}

impl SurgeryOutcome {
    /// Every admissible pair, with intervals expanded.
    pub fn pairs(&self) -> BTreeSet<(u64, u64)> {
        let mut out = BTreeSet::new();
        for p in &self.possibilities {
            match *p {
                SurgeryPossibility::Exact { b2_sigma, b2_w } => {
                    out.insert((b2_sigma, b2_w));
                }
                SurgeryPossibility::SigmaRange { lo, hi, b2_w } => {
                    out.extend((lo..=hi).map(|s| (s, b2_w)));
                }
            }
        }
        out
    }
}

/// Effect on `(b_2(Sigma), b_2(W))` of contact surgery along an isotropic
/// `(k-1)`-sphere, `3 <= k <= n`.
///
/// A branch in which a rank would drop below zero cannot occur and is left
/// out.
pub fn surgery_transform(b2_sigma: u64, b2_w: u64, k: usize, n: usize) -> Result<SurgeryOutcome> {
    if !(3..=n).contains(&k) {
        return Err(Error::Hypothesis(format!(
            "handle index k = {k} must lie in [3, n] = [3, {n}]"
        )));
    }
    let unchanged = SurgeryPossibility::Exact { b2_sigma, b2_w };
    let dropped = (b2_sigma >= 1 && b2_w >= 1).then(|| SurgeryPossibility::Exact {
        b2_sigma: b2_sigma - 1,
        b2_w: b2_w - 1,
    });
    let possibilities = if k >= 4 {
        vec![unchanged]
    } else if k < n {
        dropped
            .into_iter()
            .chain([SurgeryPossibility::SigmaRange {
                lo: 0,
                hi: b2_sigma,
                b2_w,
            }])
            .collect()
    } else {
        [Some(unchanged), dropped].into_iter().flatten().collect()
    };
    let unchanged_degrees = (0..=2 * n).filter(|&j| j + 1 != k && j != k).collect();
    Ok(SurgeryOutcome {
        possibilities,
        unchanged_degrees,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvBound {
    pub n: usize,
    /// Upper bound on `b_j(W_1)` for `j` in `[0, 2n]`.
    pub bounds: Vec<u64>,
}

impl Serialize for MvBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct ByDegree<'a>(&'a [u64]);
        impl Serialize for ByDegree<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_map(self.0.iter().enumerate().map(|(d, b)| (d.to_string(), b)))
            }
        }
        let mut st = serializer.serialize_struct("MvBound", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("bounds", &ByDegree(&self.bounds))?;
        st.end()
    }
}

/// `b_j(W_1) <= b_j(Sigma_1) + min(0, b_j(Sigma_2) - b_j(W_2 \ V_1))`,
/// floored at zero.
pub fn mv_bound(
    sigma1: &GradedBetti,
    sigma2: &GradedBetti,
    complement: &GradedBetti,
) -> Result<MvBound> {
    let n = boundary_half_dim(sigma1, "sigma1")?;
    if sigma2.dim() != sigma1.dim() {
        return Err(Error::Dimension(format!(
            "sigma1 has dimension {} but sigma2 has dimension {}",
            sigma1.dim(),
            sigma2.dim()
        )));
    }
    if complement.dim() != 2 * n {
        return Err(Error::Dimension(format!(
            "complement must have dimension {}, got {}",
            2 * n,
            complement.dim()
        )));
    }
    sigma1.require_same_field(sigma2)?;
    sigma1.require_same_field(complement)?;
    let bounds = (0..=2 * n as i64)
        .map(|j| {
            let slack = sigma2.get(j) as i128 - complement.get(j) as i128;
            let bound = sigma1.get(j) as i128 + slack.min(0);
            bound.max(0) as u64
        })
        .collect();
    Ok(MvBound { n, bounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::Field;

    fn closed(r: &[u64]) -> GradedBetti {
        GradedBetti::closed(r).unwrap()
    }

    fn open(dim: usize, r: &[u64]) -> GradedBetti {
        GradedBetti::open(dim, r).unwrap()
    }

    #[test]
    fn duality_sphere_and_ball() {
        for n in 1..6 {
            let r = duality_check(
                &GradedBetti::sphere(2 * n - 1, Field::Rational),
                &GradedBetti::ball(2 * n, Field::Rational),
            )
            .unwrap();
            assert!(r.holds, "n = {n}");
        }
    }

    #[test]
    fn duality_disc_bundle_over_s2() {
        let r = duality_check(&closed(&[1, 0, 1, 1, 0, 1]), &open(6, &[1, 0, 1])).unwrap();
        assert!(r.holds);
        assert_eq!(r.n, 3);
    }

    #[test]
    fn duality_circle_bundle_over_torus_fails_in_degree_two() {
        let r = duality_check(&closed(&[1, 2, 2, 1]), &open(4, &[1, 2, 1, 0])).unwrap();
        assert!(!r.holds);
        assert!(r.violations.contains(&DualityViolation {
            degree: 2,
            sigma: 2,
            filling: 3
        }));
    }

    #[test]
    fn duality_errors() {
        let s5 = GradedBetti::sphere(5, Field::Rational);
        assert!(matches!(
            duality_check(&s5, &open(4, &[1])),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            duality_check(&open(4, &[1]), &open(4, &[1])),
            Err(Error::Dimension(_))
        ));
        let b6_f2 = GradedBetti::ball(6, Field::Prime(2));
        assert!(matches!(
            duality_check(&s5, &b6_f2),
            Err(Error::FieldMismatch(_, _))
        ));
        let lax = duality_check_with(&s5, &b6_f2, DualityMode::Lax).unwrap();
        assert!(lax.holds);
        assert_eq!(lax.notes.len(), 1);
    }

    #[test]
    fn stein_filling_of_sphere() {
        let sol = stein_filling_betti(&GradedBetti::sphere(5, Field::Rational), true).unwrap();
        assert!(sol.fully_determined);
        let ranks: Vec<_> = sol.determined.iter().map(|r| r.unwrap()).collect();
        assert_eq!(ranks, vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn stein_filling_subcritical_and_not() {
        let sigma = closed(&[1, 0, 1, 1, 0, 1]);
        let sub = stein_filling_betti(&sigma, true).unwrap();
        assert!(sub.fully_determined);
        assert_eq!(
            (0..4).map(|p| sub.get(p).unwrap()).collect::<Vec<_>>(),
            vec![1, 0, 1, 0]
        );

        let gen = stein_filling_betti(&sigma, false).unwrap();
        assert!(!gen.fully_determined);
        assert_eq!((gen.get(0), gen.get(1)), (Some(1), Some(0)));
        assert_eq!((gen.get(2), gen.get(3)), (None, None));
        assert_eq!(
            gen.constrained,
            Some(PairConstraint {
                degrees: (2, 3),
                sum: 1,
                resolved: false
            })
        );
        let text = serde_json::to_string(&gen).unwrap();
        assert!(text.contains(r#""2":"undetermined""#), "{text}");
    }

    #[test]
    fn stein_filling_errors() {
        assert!(matches!(
            stein_filling_betti(&GradedBetti::sphere(3, Field::Rational), true),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            stein_filling_betti(&open(5, &[1, 0, 1, 0, 0, 1]), true),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            stein_filling_betti(&open(5, &[]), true),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn hc_ranks_of_the_sphere() {
        let s5 = GradedBetti::sphere(5, Field::Rational);
        assert_eq!(hc_rank_from_sigma(&s5, 4).unwrap(), 1);
        assert_eq!(hc_rank_from_sigma(&s5, 5).unwrap(), 0);
        assert_eq!(hc_rank_from_sigma(&s5, 2).unwrap(), 0);
        assert_eq!(hc_rank_from_sigma(&s5, -3).unwrap(), 0);
        let ball = GradedBetti::ball(6, Field::Rational);
        assert_eq!(hc_rank_from_filling(&ball, 4).unwrap(), 1);
        assert_eq!(hc_rank_from_filling(&ball, 3).unwrap(), 0);
        assert_eq!(hc_rank_from_filling(&ball, 40).unwrap(), 1);
        assert_eq!(hc_rank_from_filling(&ball, 41).unwrap(), 0);
    }

    #[test]
    fn hc_ranks_of_disc_bundle_pair() {
        let sigma = closed(&[1, 0, 1, 1, 0, 1]);
        assert_eq!(hc_rank_from_sigma(&sigma, 2).unwrap(), 1);
        assert_eq!(hc_rank_from_sigma(&sigma, 4).unwrap(), 2);
        let w = open(6, &[1, 0, 1]);
        assert_eq!(hc_rank_from_filling(&w, 2).unwrap(), 1);
        let c = hc_consistency(&sigma, &w).unwrap();
        assert!(c.holds);
        assert_eq!(c.rows.len(), 19);
    }

    #[test]
    fn hc_consistency_detects_non_subcritical_filling() {
        // duality holds, but b_3(W) != 0 so the filling is not subcritical
        let sigma = closed(&[1, 0, 1, 1, 0, 1]);
        let w = open(6, &[1, 0, 0, 1]);
        assert!(duality_check(&sigma, &w).unwrap().holds);
        assert!(!hc_consistency(&sigma, &w).unwrap().holds);
    }

    #[test]
    fn hc_consistency_requires_duality() {
        let r = hc_consistency(&closed(&[1, 2, 2, 1]), &open(4, &[1, 2, 1]));
        assert!(matches!(r, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn surgery_cases() {
        let o = surgery_transform(5, 2, 4, 5).unwrap();
        assert_eq!(o.pairs(), BTreeSet::from([(5, 2)]));
        assert!(!o.unchanged_degrees.contains(&3) && !o.unchanged_degrees.contains(&4));
        assert_eq!(o.unchanged_degrees.len(), 9);

        let o = surgery_transform(5, 2, 3, 4).unwrap();
        let mut expect: BTreeSet<_> = (0..=5).map(|s| (s, 2)).collect();
        expect.insert((4, 1));
        assert_eq!(o.pairs(), expect);

        let o = surgery_transform(5, 2, 3, 3).unwrap();
        assert_eq!(o.pairs(), BTreeSet::from([(5, 2), (4, 1)]));

        let o = surgery_transform(0, 0, 3, 3).unwrap();
        assert_eq!(o.pairs(), BTreeSet::from([(0, 0)]));

        assert!(surgery_transform(1, 1, 2, 5).is_err());
        assert!(surgery_transform(1, 1, 6, 5).is_err());
    }

    #[test]
    fn surgery_json_shapes() {
        let o = surgery_transform(2, 1, 3, 4).unwrap();
        let text = serde_json::to_string(&o.possibilities).unwrap();
        assert_eq!(text, r#"[[1,0],{"interval":[0,2],"b2_w":1}]"#);
    }

    #[test]
    fn mv_bound_cases() {
        let s1 = closed(&[1, 0, 1, 1, 0, 1]);
        // sigma2 dominates the complement: bound is b_j(sigma1)
        let s2 = closed(&[1, 1, 1, 1, 1, 1]);
        let c = open(6, &[1, 1, 1]);
        assert_eq!(
            mv_bound(&s1, &s2, &c).unwrap().bounds,
            vec![1, 0, 1, 1, 0, 1, 0]
        );

        // homology sphere sigma2 and complement with b_2 = 1
        let s5 = GradedBetti::sphere(5, Field::Rational);
        let c = open(6, &[1, 0, 1]);
        let b = mv_bound(&s1, &s5, &c).unwrap();
        assert_eq!(b.bounds[2], 0);
        assert_eq!(b.bounds[3], 1);

        // floored at zero
        let c = open(6, &[1, 1]);
        assert_eq!(mv_bound(&s1, &s5, &c).unwrap().bounds[1], 0);

        assert!(mv_bound(&s1, &GradedBetti::sphere(3, Field::Rational), &c).is_err());
        assert!(mv_bound(&s1, &s5, &open(4, &[1])).is_err());
    }
}
