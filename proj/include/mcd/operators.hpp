#pragma once

// Discrete realization of the magnetic convection-diffusion operator
//   L_{A,q} u = d_t u - (1/sqrt|g|)(d_j + iA_j)(sqrt|g| g^{jk}(d_k + iA_k) u) + q u
// in expanded form, together with its analytic conjugations
//   e^{-rho} L (e^{rho} w)
// for phase functions rho = phi_s + i psi whose derivatives are known in
// closed form. Weights are never exponentiated: conjugation contributes a
// complex convection 2 grad(rho) . grad and zeroth-order terms only.

#include "mcd/coefficients.hpp"
#include "mcd/geometry.hpp"
#include "mcd/grid.hpp"

namespace mcd {

// Analytic phase data for rho(t,x): d_t rho (constant), the spatial covector
// components d_j rho (time-independent), and Delta_g rho.
struct ConjProfile {
    cplx dt_rho = 0.0;
    Field3 g1, gr, gth;   // covector components
    Field3 lap;
    bool active = false;

    static ConjProfile none() { return {}; }
    // sigma(t,x) := -rho(T-t,x), the profile of the time-reversed conjugation
    ConjProfile reversed() const;
};

// rho = sign * (lam^2 beta^2 t + lam x1 - s (x1+2l)^2 / 2)
ConjProfile profile_phi(const SpaceGrid& g, double lambda, double beta, double s,
                        double ell, int sign = +1);

// rho = phi_sign * phi + i psi_sign * psi, psi = lam sqrt(1-beta^2) dist(y0, .).
// For a center other than the chart's own, the chart must be euclidean-polar.
ConjProfile profile_phi_psi(const ProductMetric& m, const SpaceGrid& g, double lambda,
                            double beta, double s, int phi_sign, int psi_sign,
                            const std::array<double, 2>& y0);

// psi-only profile (i * psi_sign * psi); used to conjugate sources.
ConjProfile profile_psi(const ProductMetric& m, const SpaceGrid& g, double lambda,
                        double beta, int psi_sign, const std::array<double, 2>& y0);

// Spatial part S of the (conjugated) operator at one time slice, so that
// L_rho w = d_t w + S w. Holds centered-stencil coefficient arrays plus the
// raw first/zeroth-order data for generic one-sided application.
struct SpatialOp {
    const SpaceGrid* g = nullptr;
    RealField3 invP;              // g^{theta theta}
    Field3 beta1, betar, betath;  // first-order coefficients: -beta . grad
    Field3 z;                     // zeroth-order
    // centered 7-point stencil arrays (theta fastest)
    Field3 cc, cxm, cxp, crm, crp, ctm, ctp;

    // out := S u on the interior (fast path; boundary nodes untouched)
    void apply_interior(const cplx* u, cplx* out) const;
    // S u at a single node, centered interior / one-sided at boundary
    cplx apply_at(const Field3& u, int i, int j, int k) const;
};

// Build S for coefficients (A,q) at time level kt, optionally conjugated by
// the profile, optionally with A negated (the transpose operator's spatial
// part is that of -A) and q conjugated.
struct OpBuild {
    bool negate_A = false;
    bool conj_q = false;
    const ConjProfile* profile = nullptr;
};
SpatialOp build_spatial_op(const ProductMetric& m, const CoefficientField& c, int kt,
                           const OpBuild& opts = {});

// Discrete L_{A,q} u (or its conjugation by profile) on a space-time field:
// centered second order in space (one-sided at spatial boundary nodes),
// centered in t at interior levels, first-order one-sided at t = 0, T.
Field4 apply_L(const ProductMetric& m, const CoefficientField& c, const Field4& u,
               const OpBuild& opts = {});

// Discrete transpose operator L^T_{A,q} v = -d_t v - M_{-A} v + q v (the
// formal adjoint under the bilinear pairing; equals the L2 adjoint up to
// conjugation of q).
Field4 apply_L_transpose(const ProductMetric& m, const CoefficientField& c, const Field4& u);

// Coefficients of the reversed transpose problem: A -> -A(T-t), q -> q(T-t).
CoefficientField reversed_negA(const CoefficientField& c);
// Plain time reversal of a space-time field.
Field4 time_reversed(const Field4& f);

} // namespace mcd
