use fillcheck_core::brieskorn::{
    exotic_sphere_verdict, intersection_form, link_homology, milnor_number, seifert_matrix,
    subcritical_embedding_verdict, BrieskornLink, DEFAULT_MAX_MU,
};
use fillcheck_core::bundles::{
    circle_bundle_b2, circle_bundle_r2n_verdict, circle_bundle_subcritical_verdict,
    cotangent_r2n_verdict, cotangent_subcritical_verdict, sphere_bundle_betti, CircleBundleInput,
};
use fillcheck_core::fillings::{
    duality_check, duality_check_with, hc_consistency, hc_rank_from_filling, hc_rank_from_sigma,
    mv_bound, stein_filling_betti, surgery_transform, DualityMode,
};
use fillcheck_core::intlab::{cokernel, smith_normal_form};
use fillcheck_core::{cite, Field, GradedBetti, IntMatrix};
use num_traits::Signed;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::report::{CliError, Command, Report, ReportBuilder, Request};

/// Settings that apply to every request of an invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub max_mu: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            max_mu: DEFAULT_MAX_MU,
        }
    }
}

type CmdResult = Result<Report, CliError>;

/// Validates the payload and runs the command.
pub fn execute(req: &Request, opts: &Options) -> CmdResult {
    let p = &req.payload;
    let out = match req.command {
        Command::Brieskorn => brieskorn(p, opts),
        Command::LinkHomology => link_homology_cmd(p, opts),
        Command::CheckDuality => check_duality(p),
        Command::SteinFill => stein_fill(p),
        Command::HcRank => hc_rank(p),
        Command::SphereBundle => sphere_bundle(p),
        Command::CircleBundle => circle_bundle(p),
        Command::Surgery => surgery(p),
        Command::MvBound => mv(p),
        Command::Snf => snf(p),
    };
    out.map_err(|e| e.context(req.command.name()))
}

fn parse<T: DeserializeOwned>(payload: &Value) -> Result<T, CliError> {
    serde_json::from_value(payload.clone())
        .map_err(|e| CliError::Validation(format!("payload: {e}")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinkPayload {
    exponents: Vec<i64>,
    #[serde(default)]
    field: Field,
}

impl LinkPayload {
    fn link(&self, opts: &Options) -> Result<BrieskornLink, CliError> {
        Ok(BrieskornLink::new(&self.exponents)?.with_max_mu(opts.max_mu))
    }
}

fn brieskorn(payload: &Value, opts: &Options) -> CmdResult {
    let p: LinkPayload = parse(payload)?;
    let link = p.link(opts)?;
    let n = link.n();
    let s = intersection_form(&seifert_matrix(&link)?, n)?;
    let det = s.determinant()?;
    let homology = if n >= 2 {
        to_value(&link_homology(&link, p.field)?)
    } else {
        Value::Null
    };
    let mut rb = ReportBuilder::new(Command::Brieskorn, payload.clone());
    rb.cite(cite::MILNOR_NUMBER).cite(cite::SEIFERT_FORM);
    rb.verdict(
        "subcritical_embedding",
        subcritical_embedding_verdict(&link)?,
    );
    rb.verdict("exotic_sphere", exotic_sphere_verdict(&link)?);
    Ok(rb.finish(json!({
        "link": link.to_string(),
        "n": n,
        "link_dimension": link.link_dimension(),
        "mu": milnor_number(&link).to_string(),
        "intersection_form": {
            "zero": s.is_zero(),
            "symmetric": s.is_symmetric(),
            "antisymmetric": s.is_antisymmetric(),
            "det": det.to_string(),
            "abs_det": det.abs().to_string(),
        },
        "homology_sphere": det.abs() == 1.into(),
        "link_homology": homology,
    })))
}

fn link_homology_cmd(payload: &Value, opts: &Options) -> CmdResult {
    let p: LinkPayload = parse(payload)?;
    let link = p.link(opts)?;
    let profile = link_homology(&link, p.field)?;
    let mut rb = ReportBuilder::new(Command::LinkHomology, payload.clone());
    rb.cite(cite::MILNOR_SEQUENCE)
        .cite(cite::MILNOR_FIBER_TOPOLOGY)
        .cite(cite::POINCARE_DUALITY);
    if let Field::Prime(_) = p.field {
        rb.cite(cite::UNIVERSAL_COEFFICIENTS);
    }
    Ok(rb.finish(json!({
        "link": link.to_string(),
        "mu": milnor_number(&link).to_string(),
        "homology": profile,
    })))
}

#[derive(Deserialize, Default, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum ModeArg {
    #[default]
    Strict,
    Lax,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DualityPayload {
    sigma: GradedBetti,
    w: GradedBetti,
    #[serde(default)]
    mode: ModeArg,
}

fn check_duality(payload: &Value) -> CmdResult {
    let p: DualityPayload = parse(payload)?;
    let mode = match p.mode {
        ModeArg::Strict => DualityMode::Strict,
        ModeArg::Lax => DualityMode::Lax,
    };
    let report = duality_check_with(&p.sigma, &p.w, mode)?;
    let mut rb = ReportBuilder::new(Command::CheckDuality, payload.clone());
    rb.cite(cite::R2N_DUALITY);
    for note in &report.notes {
        rb.warn(note.clone());
    }
    Ok(rb.finish(to_value(&report)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SteinPayload {
    sigma: GradedBetti,
    #[serde(default)]
    subcritical: bool,
}

fn stein_fill(payload: &Value) -> CmdResult {
    let p: SteinPayload = parse(payload)?;
    let sol = stein_filling_betti(&p.sigma, p.subcritical)?;
    let mut rb = ReportBuilder::new(Command::SteinFill, payload.clone());
    rb.cite(cite::STEIN_RECONSTRUCTION)
        .cite(cite::STEIN_DIMENSION)
        .warn("sigma is assumed to embed in R^2n as the boundary of the Stein filling; this is not checked");
    if p.subcritical {
        rb.warn("the filling is assumed subcritical; this is not checked");
    }
    let check = match sol.profile(&p.sigma) {
        Some(w) => to_value(&duality_check(&p.sigma, &w)?.holds),
        None => Value::Null,
    };
    let mut results = to_value(&sol);
    results["duality_holds"] = check;
    Ok(rb.finish(results))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HcPayload {
    sigma: Option<GradedBetti>,
    w: Option<GradedBetti>,
    degree: Option<i64>,
}

fn hc_rank(payload: &Value) -> CmdResult {
    let p: HcPayload = parse(payload)?;
    let mut rb = ReportBuilder::new(Command::HcRank, payload.clone());
    rb.warn("c_1(xi) = 0, a subcritical Stein filling and a contact embedding in R^2n are assumed, not verified");
    let half = match (&p.sigma, &p.w) {
        (Some(s), _) => s.dim().div_ceil(2),
        (None, Some(w)) => w.dim() / 2,
        (None, None) => {
            return Err(CliError::Validation(
                "payload: at least one of `sigma` and `w` is required".into(),
            ))
        }
    } as i64;
    if p.sigma.is_some() {
        rb.cite(cite::HC_RANK);
    }
    if p.w.is_some() {
        rb.cite(cite::YAU_ISOMORPHISM);
    }

    if let (Some(s), Some(w), None) = (&p.sigma, &p.w, p.degree) {
        let c = hc_consistency(s, w)?;
        rb.cite(cite::R2N_DUALITY);
        return Ok(rb.finish(json!({ "rows": c.rows, "consistent": c.holds })));
    }

    let degrees: Vec<i64> = match p.degree {
        Some(k) => vec![k],
        None => (-2 * half..=4 * half).collect(),
    };
    let mut rows = Vec::with_capacity(degrees.len());
    let mut consistent = true;
    for k in degrees {
        let a = p
            .sigma
            .as_ref()
            .map(|s| hc_rank_from_sigma(s, k))
            .transpose()?;
        let b =
            p.w.as_ref()
                .map(|w| hc_rank_from_filling(w, k))
                .transpose()?;
        if let (Some(a), Some(b)) = (a, b) {
            consistent &= a == b;
        }
        rows.push(json!({ "k": k, "from_sigma": a, "from_filling": b }));
    }
    let consistent = if p.sigma.is_some() && p.w.is_some() {
        Value::Bool(consistent)
    } else {
        Value::Null
    };
    Ok(rb.finish(json!({ "rows": rows, "consistent": consistent })))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpherePayload {
    base: GradedBetti,
    euler_nonzero: bool,
}

fn sphere_bundle(payload: &Value) -> CmdResult {
    let p: SpherePayload = parse(payload)?;
    let total = sphere_bundle_betti(&p.base, p.euler_nonzero)?;
    let n = p.base.dim();
    let mut rb = ReportBuilder::new(Command::SphereBundle, payload.clone());
    rb.cite(cite::SPHERE_BUNDLE).warn(format!(
        "euler_nonzero = {} is caller-supplied and read over {}",
        p.euler_nonzero,
        p.base.field()
    ));
    if p.base.closed_orientable() && p.base.get(0) == 1 {
        rb.verdict(
            "r2n_embedding",
            cotangent_r2n_verdict(&p.base, p.euler_nonzero)?,
        );
        if n >= 3 {
            rb.verdict(
                "subcritical_embedding",
                cotangent_subcritical_verdict(&p.base, p.euler_nonzero)?,
            );
        }
    } else {
        rb.warn("verdicts skipped: the base is not a connected profile flagged closed_orientable");
    }
    Ok(rb.finish(json!({ "n": n, "total_space": total })))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CirclePayload {
    base_betti: GradedBetti,
    cup_rank: Option<u64>,
    #[serde(default)]
    symplectically_aspherical: bool,
    #[serde(default)]
    c1_zero: bool,
}

fn circle_bundle(payload: &Value) -> CmdResult {
    let p: CirclePayload = parse(payload)?;
    let input = CircleBundleInput::new(
        p.base_betti.clone(),
        p.cup_rank.unwrap_or(0),
        p.symplectically_aspherical,
    )?;
    let mut rb = ReportBuilder::new(Command::CircleBundle, payload.clone());
    rb.cite(cite::CIRCLE_GYSIN);
    if p.cup_rank.is_none() {
        rb.warn("cup_rank not supplied; assumed 0");
    }
    rb.verdict("r2n_embedding", circle_bundle_r2n_verdict(&input)?);
    rb.verdict(
        "subcritical_filling",
        circle_bundle_subcritical_verdict(&p.base_betti, p.c1_zero)?,
    );
    let base = input.base_betti();
    Ok(rb.finish(json!({
        "n": input.n(),
        "b2_sigma": circle_bundle_b2(&input),
        "b2_w": base.get(2),
        "b_2n_minus_3_w": base.get(1),
        "bound": base.get(2) + base.get(1),
    })))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SurgeryPayload {
    b2_sigma: u64,
    b2_w: u64,
    k: usize,
    n: usize,
}

fn surgery(payload: &Value) -> CmdResult {
    let p: SurgeryPayload = parse(payload)?;
    let outcome = surgery_transform(p.b2_sigma, p.b2_w, p.k, p.n)?;
    let mut rb = ReportBuilder::new(Command::Surgery, payload.clone());
    rb.cite(if p.k >= 4 {
        cite::SURGERY_HIGH
    } else {
        cite::SURGERY_INDEX_3
    })
    .cite(cite::SURGERY_ASPHERICAL);
    Ok(rb.finish(to_value(&outcome)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MvPayload {
    sigma1: GradedBetti,
    sigma2: GradedBetti,
    complement: GradedBetti,
}

fn mv(payload: &Value) -> CmdResult {
    let p: MvPayload = parse(payload)?;
    let bound = mv_bound(&p.sigma1, &p.sigma2, &p.complement)?;
    let mut rb = ReportBuilder::new(Command::MvBound, payload.clone());
    rb.cite(cite::MV_BOUND).warn(
        "sigma1 is assumed to separate the subcritical Stein domain bounded by sigma2, with an admissible filling",
    );
    Ok(rb.finish(to_value(&bound)))
}

fn snf(payload: &Value) -> CmdResult {
    let m: IntMatrix = parse(payload)?;
    let s = smith_normal_form(&m);
    let rb = ReportBuilder::new(Command::Snf, payload.clone());
    let mut results = to_value(&s);
    results["rank"] = json!(s.rank());
    results["cokernel"] = to_value(&cokernel(&m));
    Ok(rb.finish(results))
}
