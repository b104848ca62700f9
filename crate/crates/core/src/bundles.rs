//! Gysin computations for unit cotangent bundles `ST*L` and unit circle
//! bundles of negative line bundles, with the embedding obstructions they
//! feed.
//!
//! Euler-class flags are relative to the coefficient field of the profile:
//! an Euler number of 2 is nonzero over Q but zero over F_2.

use serde::{Deserialize, Serialize};

use crate::betti::{Field, GradedBetti};
use crate::cite;
use crate::error::{Error, Result};
use crate::fillings::duality_check;
use crate::verdict::{Status, TraceBuilder, Verdict};

fn fmt_ranks(profile: &GradedBetti) -> String {
    let parts: Vec<String> = profile.ranks().iter().map(u64::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn require_closed_base(base: &GradedBetti, what: &str) -> Result<()> {
    if !base.closed_orientable() {
        return Err(Error::Hypothesis(format!(
            "{what} must be flagged closed_orientable"
        )));
    }
    if base.get(0) != 1 {
        return Err(Error::Hypothesis(format!(
            "{what} must be connected (b_0 = 1), got b_0 = {}",
            base.get(0)
        )));
    }
    Ok(())
}

/// Betti numbers of `ST*L` (dimension `2n - 1`) from those of `L^n`.
///
/// With `euler_nonzero` the base must be flagged closed-orientable, since
/// the middle degrees are read off through Poincare duality of `L`.
pub fn sphere_bundle_betti(base: &GradedBetti, euler_nonzero: bool) -> Result<GradedBetti> {
    let n = base.dim();
    if n < 2 {
        return Err(Error::Hypothesis(format!(
            "base must have dimension n >= 2, got {n}"
        )));
    }
    if euler_nonzero && !base.closed_orientable() {
        return Err(Error::Hypothesis(
            "a nonzero Euler class needs a closed orientable base".into(),
        ));
    }
    let shift = n as i64 - 1;
    let mut ranks: Vec<u64> = (0..2 * n as i64)
        .map(|p| base.get(p) + base.get(p - shift))
        .collect();
    if euler_nonzero {
        ranks[n - 1] = base.get(1);
        ranks[n] = base.get(1);
    }
    GradedBetti::new(2 * n - 1, ranks, base.field(), base.closed_orientable())
}

/// Warns when the Euler flag disagrees with `chi(L)` over the profile field.
fn euler_flag_caveat(t: &mut TraceBuilder, base: &GradedBetti, euler_nonzero: bool) {
    let chi = base.euler_characteristic();
    let chi_nonzero = match base.field() {
        Field::Rational => chi != 0,
        Field::Prime(p) => chi.rem_euclid(p as i128) != 0,
    };
    if chi_nonzero != euler_nonzero {
        t.caveat(format!(
            "euler_nonzero = {euler_nonzero} but chi(L) = {chi} is {} over {}; for the tangent bundle e(TL) = chi(L)",
            if chi_nonzero { "nonzero" } else { "zero" },
            base.field()
        ));
    }
}

/// Whether `ST*L` can embed in `R^{2n}`.
pub fn cotangent_r2n_verdict(base: &GradedBetti, euler_nonzero: bool) -> Result<Verdict> {
    require_closed_base(base, "base L")?;
    let n = base.dim();
    let mut t = TraceBuilder::new();
    euler_flag_caveat(&mut t, base, euler_nonzero);
    if n < 3 {
        t.step(
            cite::HYPOTHESIS,
            format!("n = {n} < 3: the R^2n duality identity needs n >= 3"),
        );
        return Ok(t.finish(Status::Inconclusive));
    }
    let st = sphere_bundle_betti(base, euler_nonzero)?;
    t.step(
        cite::SPHERE_BUNDLE,
        format!(
            "e(L) {} 0 over {}: b(ST*L) = {}",
            if euler_nonzero { "!=" } else { "=" },
            base.field(),
            fmt_ranks(&st)
        ),
    );
    let w = base.regraded(2 * n, false)?;
    let report = duality_check(&st, &w)?;

    if !euler_nonzero {
        debug_assert!(report.holds);
        t.step(
            cite::R2N_DUALITY,
            format!(
                "with W = DT*L ~ L the identity reads b_(p-{})(L) = b_({}-p)(L), which is Poincare duality of L and holds",
                n - 1,
                2 * n - 1
            ),
        )
        .step(
            cite::HYPOTHESIS,
            "the Euler class vanishes, so no obstruction follows",
        );
        return Ok(t.finish(Status::Inconclusive));
    }

    let (b1, bn1, bn) = (base.get(1), base.get(n as i64 - 1), base.get(n as i64));
    t.step(
        cite::R2N_DUALITY,
        format!(
            "with W = DT*L ~ L (H_2(W, ST*L) = 0 for n >= 3), degree {}: b_{}(ST*L) = b_1(L) = {b1} must equal b_{}(L) + b_{}(L) = {}",
            n - 1,
            n - 1,
            n - 1,
            n,
            bn1 + bn
        ),
    )
    .step(
        cite::POINCARE_DUALITY,
        format!("b_1(L) = b_{}(L) = {bn1}, so the identity forces b_{n}(L) = 0", n - 1),
    )
    .step(
        cite::COTANGENT_R2N,
        format!("but b_{n}(L) = b_0(L) = {bn} for closed orientable L: no contact embedding in R^{}", 2 * n),
    );
    debug_assert!(!report.holds);
    Ok(t.finish(Status::Obstructed))
}

/// Whether `ST*L` can embed in a subcritical Stein manifold.
pub fn cotangent_subcritical_verdict(base: &GradedBetti, euler_nonzero: bool) -> Result<Verdict> {
    require_closed_base(base, "base L")?;
    let n = base.dim();
    if n < 3 {
        return Err(Error::Hypothesis(format!(
            "base must have dimension n >= 3, got {n}"
        )));
    }
    let mut t = TraceBuilder::new();
    euler_flag_caveat(&mut t, base, euler_nonzero);
    if !euler_nonzero {
        t.step(
            cite::HYPOTHESIS,
            "the Euler class vanishes, so the Gysin argument does not apply",
        );
        return Ok(t.finish(Status::Inconclusive));
    }
    t.step(
        cite::GYSIN_EULER_CAP,
        format!(
            "cap with e: H_{n}(L) -> H_0(L) is injective (b_{n}(L) = b_0(L) = 1, e != 0 over {}), so H_{n}(ST*L) -> H_{n}(L) is zero",
            base.field()
        ),
    )
    .step(
        cite::SUBCRITICAL_ONTO,
        format!(
            "W = DT*L has H_2(W, ST*L) = 0 and H_{n}(W) = H_{n}(L) != 0; a subcritical embedding would make H_{n}(ST*L) -> H_{n}(W) onto"
        ),
    )
    .step(
        cite::COTANGENT_SUBCRITICAL,
        "contradiction: ST*L has no contact embedding in a subcritical Stein manifold",
    );
    Ok(t.finish(Status::Obstructed))
}

/// Base data for the unit circle bundle `Sigma^{2n-1}` of a negative line
/// bundle over `N^{2n-2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleBundleInput {
    base_betti: GradedBetti,
    cup_rank: u64,
    symplectically_aspherical: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WireCircleBundle {
    base_betti: GradedBetti,
    #[serde(default)]
    cup_rank: u64,
    #[serde(default)]
    symplectically_aspherical: bool,
}

impl<'de> Deserialize<'de> for CircleBundleInput {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireCircleBundle::deserialize(d)?;
        CircleBundleInput::new(w.base_betti, w.cup_rank, w.symplectically_aspherical)
            .map_err(serde::de::Error::custom)
    }
}

impl CircleBundleInput {
    pub fn new(
        base_betti: GradedBetti,
        cup_rank: u64,
        symplectically_aspherical: bool,
    ) -> Result<Self> {
        let dim = base_betti.dim();
        if dim < 2 || dim % 2 == 1 {
            return Err(Error::Dimension(format!(
                "base_betti: N must have even dimension 2n - 2 >= 2, got {dim}"
            )));
        }
        let cap = base_betti.get(1).min(base_betti.get(3));
        if cup_rank > cap {
            return Err(Error::Profile(format!(
                "cup_rank: {cup_rank} exceeds min(b_1(N), b_3(N)) = {cap}"
            )));
        }
        if base_betti.get(2) == 0 {
            return Err(Error::Profile(
                "base_betti: b_2(N) = 0, but a negative line bundle has nonzero c_1".into(),
            ));
        }
        Ok(Self {
            base_betti,
            cup_rank,
            symplectically_aspherical,
        })
    }

    pub fn base_betti(&self) -> &GradedBetti {
        &self.base_betti
    }

    pub fn cup_rank(&self) -> u64 {
        self.cup_rank
    }

    pub fn symplectically_aspherical(&self) -> bool {
        self.symplectically_aspherical
    }

    /// Half-dimension `n` of the total space `Sigma^{2n-1}`.
    pub fn n(&self) -> usize {
        self.base_betti.dim() / 2 + 1
    }
}

/// `b_2(Sigma) = (b_2(N) - 1) + (b_1(N) - cup_rank)`.
pub fn circle_bundle_b2(input: &CircleBundleInput) -> u64 {
    let n = &input.base_betti;
    (n.get(2) - 1) + (n.get(1) - input.cup_rank)
}

/// Whether the circle bundle can embed in `R^{2n}`.
pub fn circle_bundle_r2n_verdict(input: &CircleBundleInput) -> Result<Verdict> {
    let base = &input.base_betti;
    if !base.closed_orientable() {
        return Err(Error::Hypothesis(
            "base_betti: N must be flagged closed_orientable".into(),
        ));
    }
    let n = input.n();
    let b2 = circle_bundle_b2(input);
    let (b1n, b2n) = (base.get(1), base.get(2));
    let mut t = TraceBuilder::new();
    t.step(
        cite::CIRCLE_GYSIN,
        format!(
            "b_2(Sigma) = (b_2(N) - 1) + (b_1(N) - cup_rank) = ({b2n} - 1) + ({b1n} - {}) = {b2}",
            input.cup_rank
        ),
    )
    .step(
        cite::POINCARE_DUALITY,
        format!(
            "the disc bundle W retracts to N, so b_2(W) = {b2n} and b_{}(W) = b_{}(N) = b_1(N) = {b1n}",
            2 * n - 3,
            2 * n - 3
        ),
    )
    .step(
        cite::CIRCLE_R2N,
        format!(
            "b_2(Sigma) = {b2} < {} = b_2(W) + b_{}(W)",
            b2n + b1n,
            2 * n - 3
        ),
    )
    .step(
        cite::R2N_DUALITY,
        "the identity b_2(Sigma) = b_2(W) + b_(2n-3)(W) fails, so there is no contact embedding in R^2n",
    );
    let status = if input.symplectically_aspherical {
        t.caveat("symplectic asphericity of N is assumed, not verified");
        Status::Obstructed
    } else {
        t.step(
            cite::HYPOTHESIS,
            "N is not flagged symplectically aspherical; the argument needs it (CP^(n-1) bounds the standard sphere)",
        );
        t.caveat("N is not flagged symplectically aspherical: verdict downgraded to Inconclusive");
        Status::Inconclusive
    };
    Ok(t.finish(status))
}

/// Whether the circle bundle over `N` can bound a subcritical Stein
/// manifold with `c_1 = 0`.
pub fn circle_bundle_subcritical_verdict(base: &GradedBetti, c1_zero: bool) -> Result<Verdict> {
    if base.dim() % 2 == 1 {
        return Err(Error::Dimension(format!(
            "N must have even dimension, got {}",
            base.dim()
        )));
    }
    if base.get(0) != 1 {
        return Err(Error::Hypothesis(format!(
            "N must be connected (b_0 = 1), got b_0 = {}",
            base.get(0)
        )));
    }
    let n = base.dim() / 2 + 1;
    let mut t = TraceBuilder::new();
    if !c1_zero {
        t.step(cite::HYPOTHESIS, "c_1(TN) = 0 is not asserted");
        return Ok(t.finish(Status::Inconclusive));
    }
    if n < 2 {
        t.step(cite::HYPOTHESIS, format!("n = {n} < 2"));
        return Ok(t.finish(Status::Inconclusive));
    }
    let star = 3 - n as i64;
    t.caveat("c_1(TN) = 0 is assumed, not verified")
        .caveat("symplectic asphericity of N is assumed, not verified")
        .step(
            cite::CIRCLE_SUBCRITICAL,
            format!(
                "SH^+_*(Sigma) = H_(*+{})(W, Sigma) = H_(*+{})(N); at * = {star} this is H_0(N), of rank b_0(N) = 1",
                n - 1,
                n as i64 - 3
            ),
        )
        .step(
            cite::STEIN_DIMENSION,
            format!(
                "a subcritical filling M has SH^+_{star}(Sigma) = H^{}(M) = 0, as M has homotopy dimension <= {} < {}",
                2 * n - 2,
                n - 1,
                2 * n - 2
            ),
        )
        .step(
            cite::CIRCLE_SUBCRITICAL,
            "contradiction: Sigma bounds no subcritical Stein manifold with c_1 = 0",
        );
    Ok(t.finish(Status::Obstructed))
}
