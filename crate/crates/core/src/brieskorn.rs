//! Milnor-fiber invariants of Brieskorn links `Sigma(a_0, ..., a_n)`, the
//! links of `z_0^{a_0} + ... + z_n^{a_n} = 0`.
//!
//! The Seifert form is the Kronecker product of upper bidiagonal blocks in
//! exponent order. No global sign or basis orientation is applied; every
//! verdict here depends only on `S != 0`, `|det S|` and the kernel and
//! cokernel of `S`, none of which see that ambiguity.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

use crate::betti::{Field, GradedBetti};
use crate::cite;
use crate::error::{Error, Result};
use crate::intlab::{self, kronecker, HomologyGroup, IntMatrix};
use crate::verdict::{Status, TraceBuilder, Verdict};

/// Default cap on the Milnor number before any matrix is built.
pub const DEFAULT_MAX_MU: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BrieskornLink {
    exponents: Vec<u64>,
    mu: u128,
    max_mu: u64,
}

impl BrieskornLink {
    pub fn new(exponents: &[i64]) -> Result<Self> {
        if exponents.len() < 2 {
            return Err(Error::TooFewExponents(exponents.len()));
        }
        let mut checked = Vec::with_capacity(exponents.len());
        let mut mu: u128 = 1;
        for (index, &value) in exponents.iter().enumerate() {
            if value < 2 {
                return Err(Error::BadExponent { index, value });
            }
            let a = value as u64;
            mu = mu
                .checked_mul(u128::from(a - 1))
                .ok_or(Error::MilnorNumberOverflow)?;
            checked.push(a);
        }
        Ok(BrieskornLink {
            exponents: checked,
            mu,
            max_mu: DEFAULT_MAX_MU,
        })
    }

    /// Replaces the Milnor-number cap that guards matrix construction.
    pub fn with_max_mu(mut self, cap: u64) -> Self {
        self.max_mu = cap;
        self
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Complex dimension parameter: the link has `n + 1` exponents.
    pub fn n(&self) -> usize {
        self.exponents.len() - 1
    }

    pub fn link_dimension(&self) -> usize {
        2 * self.n() - 1
    }

    pub fn max_mu(&self) -> u64 {
        self.max_mu
    }

    pub fn all_twos(&self) -> bool {
        self.exponents.iter().all(|&a| a == 2)
    }

    fn mu_within_cap(&self) -> Result<usize> {
        if self.mu > u128::from(self.max_mu) {
            return Err(Error::MilnorNumberTooLarge {
                mu: self.mu,
                cap: self.max_mu,
            });
        }
        Ok(self.mu as usize)
    }
}

impl fmt::Display for BrieskornLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(ToString::to_string).collect();
        write!(f, "Sigma({})", parts.join(","))
    }
}

impl Serialize for BrieskornLink {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            exponents: &'a [u64],
        }
        Wire {
            exponents: &self.exponents,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BrieskornLink {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            exponents: Vec<i64>,
        }
        let wire = Wire::deserialize(deserializer)?;
        BrieskornLink::new(&wire.exponents).map_err(de::Error::custom)
    }
}

/// Integral middle homology of the link and its Betti numbers over a field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkHomologyProfile {
    pub n: usize,
    pub h_n: HomologyGroup,
    pub h_n_minus_1: HomologyGroup,
    pub betti: GradedBetti,
}

pub fn milnor_number(link: &BrieskornLink) -> u128 {
    link.mu
}

/// The `(a-1) x (a-1)` block with ones on the diagonal and superdiagonal.
pub fn seifert_block(a: i64) -> Result<IntMatrix> {
    if a < 2 {
        return Err(Error::BadBlockSize(a));
    }
    let k = (a - 1) as usize;
    let mut m = IntMatrix::identity(k);
    for i in 0..k.saturating_sub(1) {
        m.set(i, i + 1, BigInt::one());
    }
    Ok(m)
}

/// Kronecker product of the Seifert blocks in exponent order; `mu x mu`.
pub fn seifert_matrix(link: &BrieskornLink) -> Result<IntMatrix> {
    link.mu_within_cap()?;
    let mut acc = IntMatrix::identity(1);
    for &a in &link.exponents {
        acc = kronecker(&acc, &seifert_block(a as i64)?);
    }
    Ok(acc)
}

/// `S = A + (-1)^n A^t`.
pub fn intersection_form(a: &IntMatrix, n: usize) -> Result<IntMatrix> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "intersection form needs a square Seifert matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    a.add(&a.transpose().scaled(&BigInt::from(sign)))
}

fn link_intersection_form(link: &BrieskornLink) -> Result<IntMatrix> {
    intersection_form(&seifert_matrix(link)?, link.n())
}

fn require_n_at_least_2(link: &BrieskornLink) -> Result<()> {
    if link.n() < 2 {
        return Err(Error::Hypothesis(format!(
            "{link} has n = {}; the Milnor sequence computation needs n >= 2",
            link.n()
        )));
    }
    Ok(())
}

/// Homology of the link from the kernel and cokernel of the intersection
/// form, with Betti numbers assembled from connectivity, Poincare duality
/// and universal coefficients.
pub fn link_homology(link: &BrieskornLink, field: Field) -> Result<LinkHomologyProfile> {
    require_n_at_least_2(link)?;
    let n = link.n();
    let s = link_intersection_form(link)?;
    let snf = intlab::smith_normal_form(&s);
    let h_n = HomologyGroup::free(s.cols() - snf.rank());
    let h_n_minus_1 = HomologyGroup {
        free_rank: s.rows() - snf.rank(),
        torsion: snf
            .invariant_factors
            .into_iter()
            .filter(|d| !d.is_one())
            .collect(),
    };

    let dim = 2 * n - 1;
    let torsion_term = match field {
        Field::Rational => 0,
        Field::Prime(p) => h_n_minus_1.p_torsion_count(p) as u64,
    };
    let mut ranks = vec![0u64; dim + 1];
    ranks[0] = 1;
    ranks[dim] = 1;
    ranks[n - 1] += h_n_minus_1.free_rank as u64 + torsion_term;
    ranks[n] += h_n.free_rank as u64 + torsion_term;
    let betti = GradedBetti::new(dim, ranks, field, true)?;

    Ok(LinkHomologyProfile {
        n,
        h_n,
        h_n_minus_1,
        betti,
    })
}

/// True iff `|det S| = 1`, i.e. the link is an integral homology sphere.
pub fn is_homology_sphere(link: &BrieskornLink) -> Result<bool> {
    require_n_at_least_2(link)?;
    let s = link_intersection_form(link)?;
    Ok(is_unimodular(&s))
}

fn is_unimodular(s: &IntMatrix) -> bool {
    let snf = intlab::smith_normal_form(s);
    s.is_square() && snf.rank() == s.rows() && snf.invariant_factors.iter().all(One::is_one)
}

fn exponent_list(link: &BrieskornLink) -> String {
    let parts: Vec<String> = link.exponents.iter().map(|a| format!("({a}-1)")).collect();
    parts.join("")
}

/// Whether the link can embed as a contact hypersurface in a subcritical
/// Stein manifold. Obstructed when `n >= 3` and the intersection form is
/// nonzero.
pub fn subcritical_embedding_verdict(link: &BrieskornLink) -> Result<Verdict> {
    let n = link.n();
    let mu = link.mu;
    let mut t = TraceBuilder::new();
    t.step(
        cite::MILNOR_NUMBER,
        format!("mu = {} = {mu} for {link}", exponent_list(link)),
    );
    if n < 3 {
        t.step(
            cite::HYPOTHESIS,
            format!("n = {n} < 3: H_2(W, Sigma) need not vanish, so the intersection-form criterion does not apply"),
        );
        return Ok(t.finish(Status::Inconclusive));
    }

    let s = link_intersection_form(link)?;
    let parity = if n.is_multiple_of(2) {
        "symmetric"
    } else {
        "antisymmetric"
    };
    t.step(
        cite::SEIFERT_FORM,
        format!(
            "S = A + (-1)^{n} A^t is the {mu}x{mu} {parity} intersection form of the Milnor fiber"
        ),
    );

    if s.is_zero() {
        if link.all_twos() {
            t.step(
                cite::ALL_TWOS,
                format!("all exponents are 2 and n = {n} is odd, so A = [1] and S = A - A^t = 0; no conclusion"),
            );
        } else {
            t.step(
                cite::INTERSECTION_OBSTRUCTION,
                "S = 0, so the intersection-form criterion gives no obstruction",
            );
        }
        return Ok(t.finish(Status::Inconclusive));
    }

    t.step(
        cite::MILNOR_SEQUENCE,
        "S != 0, so the image ker S of H_n(Sigma) -> H_n(W) is a proper subgroup: the map is not onto",
    );
    t.step(
        cite::SUBCRITICAL_ONTO,
        format!(
            "W is a wedge of {n}-spheres and 2n - 2 = {} > n, so H_2(W, Sigma) = H^{}(W) = 0; a subcritical Stein embedding would force H_*(Sigma) -> H_*(W) onto",
            2 * n - 2,
            2 * n - 2
        ),
    );
    if mu >= 2 {
        t.step(
            cite::MILNOR_NUMBER_OBSTRUCTION,
            format!("mu = {mu} >= 2: the tensor-product Seifert form is neither symmetric nor antisymmetric"),
        );
    } else {
        t.step(
            cite::ALL_TWOS,
            format!("all exponents are 2 and n = {n} is even, so S = A + A^t = [2] != 0"),
        );
    }
    t.step(
        cite::INTERSECTION_OBSTRUCTION,
        format!("{link} admits no contact embedding in a subcritical Stein manifold"),
    );
    Ok(t.finish(Status::Obstructed))
}

/// Whether the Milnor-fiber contact structure on a Brieskorn sphere is
/// exotic. `Obstructed` here means "not the standard contact sphere".
pub fn exotic_sphere_verdict(link: &BrieskornLink) -> Result<Verdict> {
    let n = link.n();
    let mut t = TraceBuilder::new();
    if n < 2 {
        t.step(
            cite::HYPOTHESIS,
            format!("n = {n} < 3: the exotic-sphere criterion needs n >= 3"),
        );
        return Ok(t.finish(Status::Inconclusive));
    }

    let s = link_intersection_form(link)?;
    let h_n_minus_1 = intlab::cokernel(&s);
    let h_n = intlab::kernel_rank(&s);
    if !(h_n == 0 && h_n_minus_1.is_trivial()) {
        t.step(
            cite::MILNOR_SEQUENCE,
            format!(
                "H_{n}(Sigma) = {} and H_{}(Sigma) = {h_n_minus_1}: the link is not a sphere",
                HomologyGroup::free(h_n),
                n - 1
            ),
        );
        return Ok(t.finish(Status::Inconclusive));
    }
    if n < 3 {
        t.step(
            cite::MILNOR_SEQUENCE,
            "|det S| = 1, so Sigma is an integral homology sphere",
        );
        t.step(
            cite::HYPOTHESIS,
            format!("n = {n} < 3: the exotic-sphere criterion needs n >= 3"),
        );
        return Ok(t.finish(Status::Inconclusive));
    }

    t.step(
        cite::MILNOR_SEQUENCE,
        "|det S| = 1, so ker S = coker S = 0 and Sigma is an integral homology sphere",
    );
    t.step(
        cite::HOMOTOPY_SPHERE,
        format!(
            "Sigma is {}-connected with n = {n} >= 3, hence simply connected and a homotopy sphere",
            n - 2
        ),
    );
    t.step(
        cite::INTERSECTION_OBSTRUCTION,
        format!("S is unimodular of size mu = {} >= 1, hence nonzero; Sigma has no contact embedding in a subcritical Stein manifold such as R^{}", link.mu, 2 * n),
    );
    t.step(
        cite::EXOTIC_SPHERE,
        format!("the contact structure on {link} inherited from the Milnor fiber is exotic"),
    );
    t.caveat(
        "only the integral homology is computed; identification of Sigma with the standard smooth sphere is assumed, not verified",
    );
    Ok(t.finish(Status::Obstructed))
}
