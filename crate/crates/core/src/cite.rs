//! Embedded table of the results that verdict traces may cite.
//!
//! Trace steps refer to entries by key. Reports resolve keys against this
//! table, so a trace can never carry a free-form citation.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub key: &'static str,
    pub label: &'static str,
    pub statement: &'static str,
}

macro_rules! citations {
    ($($ident:ident => $key:literal, $label:literal, $statement:literal;)*) => {
        $(pub const $ident: &str = $key;)*

        pub const TABLE: &[Citation] = &[
            $(Citation { key: $key, label: $label, statement: $statement },)*
        ];
    };
}

citations! {
    MILNOR_SEQUENCE => "milnor-sequence",
        "Milnor fiber exact sequence",
        "For n >= 2 the pair (W, Sigma) of a Milnor fiber W and link Sigma gives 0 -> H_n(Sigma) -> H_n(W) -S-> Hom(H_n(W), Z) -> H_{n-1}(Sigma) -> 0, where S is the intersection form.";
    MILNOR_FIBER_TOPOLOGY => "milnor-fiber-topology",
        "Milnor fiber is a wedge of spheres",
        "The Milnor fiber W is homotopy equivalent to a wedge of mu spheres of dimension n; the link is (n-2)-connected.";
    MILNOR_NUMBER => "brieskorn-milnor-number",
        "Milnor number of a Brieskorn singularity",
        "For z_0^{a_0} + ... + z_n^{a_n} the Milnor number is mu = (a_0 - 1)...(a_n - 1).";
    SEIFERT_FORM => "brieskorn-seifert-form",
        "Seifert form of a Brieskorn singularity",
        "The Seifert form A is the tensor product of upper bidiagonal all-ones blocks of size a_i - 1, and the intersection form is S = A + (-1)^n A^t.";
    SUBCRITICAL_ONTO => "subcritical-surjectivity",
        "Surjectivity for fillings inside subcritical Stein manifolds",
        "If Sigma embeds as a contact hypersurface in a subcritical Stein manifold and W is a symplectically aspherical filling with H_2(W, Sigma) = 0 or Sigma simply connected, then H_*(Sigma) -> H_*(W) is onto in every degree.";
    INTERSECTION_OBSTRUCTION => "intersection-form-obstruction",
        "Nonzero intersection form obstructs subcritical embeddings",
        "For n >= 3, the link of an isolated hypersurface singularity whose Milnor fiber has nonzero middle intersection form admits no contact embedding in a subcritical Stein manifold.";
    MILNOR_NUMBER_OBSTRUCTION => "brieskorn-mu-obstruction",
        "Brieskorn links with mu >= 2",
        "Brieskorn manifolds of dimension 2n - 1, n >= 3, with Milnor number at least 2 have a Seifert form that is neither symmetric nor antisymmetric, hence S != 0 and no subcritical Stein embedding exists.";
    ALL_TWOS => "brieskorn-all-twos",
        "Brieskorn links with all exponents 2",
        "mu = 1 exactly when every exponent is 2, and then Sigma is the unit cotangent bundle of S^n. For n even S = 2 is nonzero; for n odd S = 0 and no conclusion is drawn.";
    EXOTIC_SPHERE => "brieskorn-exotic-sphere",
        "Exotic contact structures on Brieskorn spheres",
        "For n >= 3, a Brieskorn manifold diffeomorphic to S^{2n-1} carries a contact structure inherited from the Milnor fiber that is not the standard one, since it admits no contact embedding in R^{2n}.";
    HOMOTOPY_SPHERE => "homology-to-homotopy-sphere",
        "Simply connected homology spheres",
        "A simply connected closed manifold with the integral homology of a sphere is a homotopy sphere (Hurewicz and Whitehead); an (n-2)-connected link with n >= 3 is simply connected.";
    R2N_DUALITY => "r2n-betti-duality",
        "Betti duality for hypersurfaces of R^2n",
        "If Sigma^{2n-1} has a contact embedding in R^{2n} and W is a symplectically aspherical filling meeting the gluing hypotheses, then b_p(Sigma) = b_p(W) + b_{2n-p-1}(W) for all p, and all such fillings share Betti numbers.";
    STEIN_RECONSTRUCTION => "stein-filling-reconstruction",
        "Stein fillings of hypersurfaces in R^2n",
        "For n >= 3 and a Stein filling W of Sigma embedded in R^{2n}: b_p(Sigma) = b_p(W) for 0 <= p <= n - 2 and b_{n-1}(Sigma) = b_n(Sigma) = b_n(W) + b_{n-1}(W). W is determined if b_n(Sigma) = 0 or W is subcritical.";
    STEIN_DIMENSION => "stein-homotopy-dimension",
        "Homotopy dimension of Stein domains",
        "A Stein domain of real dimension 2n has the homotopy type of a CW complex of dimension <= n, and of dimension <= n - 1 when subcritical.";
    HC_RANK => "contact-homology-rank",
        "Rank of cylindrical contact homology",
        "If c_1(xi) = 0, Sigma has a subcritical Stein filling and embeds in R^{2n}, then rank HC_k^0(Sigma) = sum of b_p(Sigma) over 2n - 2 - k <= p <= n - 1 with p = k mod 2.";
    YAU_ISOMORPHISM => "yau-isomorphism",
        "Contact homology of subcritical fillings",
        "For a subcritical Stein filling W with c_1 = 0, HC_*^0(Sigma) is isomorphic to H_*(W, Sigma) tensor H_*(CP^infinity) shifted by 2, so HC_k = sum over m >= 0 of H^{2n-2-k+2m}(W).";
    SPHERE_BUNDLE => "sphere-bundle-dichotomy",
        "Gysin dichotomy for unit cotangent bundles",
        "If e(L) = 0 then b_p(ST*L) = b_p(L) + b_{p-(n-1)}(L); if e(L) != 0 the same holds for p != n - 1, n and b_n(ST*L) = b_{n-1}(ST*L) = b_{n-1}(L) = b_1(L).";
    COTANGENT_R2N => "cotangent-r2n-obstruction",
        "Unit cotangent bundles in R^2n",
        "For an orientable L^n, n >= 3, with nonzero Euler class, ST*L has no contact embedding in R^{2n}: the duality identity would force b_n(L) = 0.";
    COTANGENT_SUBCRITICAL => "cotangent-subcritical-obstruction",
        "Unit cotangent bundles in subcritical Stein manifolds",
        "For an orientable closed L of dimension >= 3 with nonzero Euler class, ST*L has no contact embedding in a subcritical Stein manifold: the Gysin sequence makes H_n(ST*L) -> H_n(L) vanish.";
    CIRCLE_GYSIN => "circle-bundle-gysin",
        "Degree-two Gysin computation for circle bundles",
        "For the unit circle bundle Sigma of a negative line bundle over N with c_1 = -[beta]: H^2(Sigma) = H^2(N)/<[beta]> + ker([beta] cup : H^1(N) -> H^3(N)).";
    CIRCLE_R2N => "circle-bundle-r2n-obstruction",
        "Circle bundles over aspherical bases in R^2n",
        "The unit circle bundle of a negative line bundle over a symplectically aspherical N^{2n-2} has no contact embedding in R^{2n} with aspherical glued filling, since b_2(Sigma) < b_2(N) + b_1(N) = b_2(W) + b_{2n-3}(W).";
    CIRCLE_SUBCRITICAL => "circle-bundle-subcritical-obstruction",
        "Circle bundles and subcritical Stein fillings",
        "For a negative line bundle over a symplectically aspherical N with c_1(TN) = 0 and n >= 2, the unit circle bundle bounds no subcritical Stein manifold with c_1 = 0: SH^+_*(Sigma) = H_{*+n-3}(N) is nonzero at * = 3 - n, while a subcritical filling forces it to vanish.";
    SURGERY_HIGH => "surgery-index-at-least-4",
        "Contact surgery of index k >= 4",
        "Attaching a handle of index k >= 4 leaves b_2 of the boundary and of the filling unchanged, since H_j(D^k, dD^k) = 0 for j = 2, 3.";
    SURGERY_INDEX_3 => "surgery-index-3",
        "Contact surgery of index 3",
        "For k = 3 < n, either the connecting map is injective and both b_2(W) and b_2(Sigma) drop by one, or it vanishes, b_2(W) is unchanged and b_2(Sigma^+) <= b_2(Sigma^-). For k = n = 3, b_2(Sigma^+) is b_2(Sigma^-) or b_2(Sigma^-) - 1, dropping exactly when b_2(W) drops.";
    SURGERY_ASPHERICAL => "surgery-keeps-asphericity",
        "Surgery of index >= 3 keeps fillings aspherical",
        "pi_2(W^+, W^-) = pi_2(D^k, dD^k) = 0 for k >= 3, so attaching the handle preserves symplectic asphericity.";
    MV_BOUND => "mayer-vietoris-bound",
        "Betti bound for fillings inside subcritical Stein domains",
        "If Sigma_1 separates a subcritical Stein domain W_2 with boundary Sigma_2 and V_1 is the bounded part, any admissible filling W_1 satisfies b_j(W_1) <= b_j(Sigma_1) + min(0, b_j(Sigma_2) - b_j(W_2 minus V_1)).";
    POINCARE_DUALITY => "poincare-duality",
        "Poincare duality",
        "A closed orientable m-manifold has b_p = b_{m-p} over any field.";
    UNIVERSAL_COEFFICIENTS => "universal-coefficients",
        "Universal coefficient theorem",
        "H_k(X; F) = H_k(X; Z) tensor F + Tor(H_{k-1}(X; Z), F).";
    GYSIN_EULER_CAP => "gysin-euler-cap",
        "Gysin sequence of a sphere bundle",
        "For an oriented S^{n-1}-bundle over a closed oriented L^n, H_n(ST*L) -> H_n(L) -> H_0(L) is exact and the second map is the cap product with e, an isomorphism when e != 0.";
    HYPOTHESIS => "hypothesis-gate",
        "Hypotheses of the applicable result",
        "The results above apply only under their stated hypotheses (dimension bounds, parity, Euler class, asphericity, c_1 = 0); when a hypothesis fails the verdict is inconclusive.";
}

pub fn lookup(key: &str) -> Option<&'static Citation> {
    TABLE.iter().find(|c| c.key == key)
}
