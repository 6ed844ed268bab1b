#pragma once

// Geometric-optics solutions: eikonal phase psi = lam sqrt(1-beta^2) r,
// transport amplitudes T_g / T_d with the phase correction Phi solved along
// complexified characteristics, and numerically solved remainders with their
// source norms. Solutions are handled in the conjugated frame throughout:
// the assembled pair is u = e^{phi + i psi}(T + R), but the exponential
// weights are never materialized.

#include "mcd/solver.hpp"

namespace mcd {

enum class GOSign { Growing, Decaying };

enum class CutoffKind { SmoothBump, Poly48 };

struct GOCutoff {
    CutoffKind kind = CutoffKind::SmoothBump;
    double center_frac = 0.5;  // bump center as a fraction of T
    double width_frac = 0.45;  // bump half-width as a fraction of T
    double omega = 0.0;        // modulation e^{i omega t}

    cplx operator()(double t, double T) const;
    // time derivative (analytic)
    cplx dt(double t, double T) const;
};

struct GOThetaWeight {
    bool is_bump = false;      // otherwise h == 1
    double center = 0.0, width = 1.0;

    double operator()(double th) const {
        return is_bump ? bump(th, center, width) : 1.0;
    }
};

// Geometry of the ray family from an external center, tabulated on the grid.
struct RayChart {
    std::array<double, 2> y0{};
    bool own_center = true;
    RealField3 rk;    // distance to y0
    RealField3 cosx;  // e_{r_k} . e_r
    RealField3 sinx;  // e_{r_k} . e_th
    RealField3 thk;   // polar angle about y0
};
RayChart make_ray_chart(const ProductMetric& m, const SpaceGrid& g,
                        const std::array<double, 2>& y0);

struct GOParams {
    GOSign sign = GOSign::Growing;
    double lambda = 8.0;
    double beta = 0.8;
    double mu = 1.0;
    std::array<double, 2> center{0.0, 0.0};
    GOCutoff cutoff;
    GOThetaWeight htheta;
};

struct GOAnsatz {
    GOParams prm;
    RayChart chart;
    RealField3 psi;       // eikonal phase (spatial)
    Field4 Phi;           // phase correction
    Field4 T_amp;         // transport amplitude
    Field4 R;             // remainder, so that u = e^{rho}(T_amp + R)
    double residual_norm = 0;  // L2(M_T) norm of the conjugated remainder source
    SolveStats stats;
};

// psi = lam sqrt(1-beta^2) * dist(y0, .) evaluated on the grid.
RealField3 eikonal_phase(const ProductMetric& m, const SpaceGrid& g, double lambda,
                         double beta, const std::array<double, 2>& y0);

// |grad_g psi|_g^2 by centered differences (the eikonal check).
RealField3 eikonal_gradsq(const ProductMetric& m, const SpaceGrid& g, const RealField3& psi);

// Phase correction: solves d_1 Phi + i c d_{r_k} Phi = -sgn (A_1 + i c A_{r_k})
// with Phi = 0 on the inflow edge x1 = -ell, by an implicit first-order march
// in x1 (centered d_r with one-sided closure). sgn = +1 growing, -1 decaying.
Field4 phase_correction(const ProductMetric& m, const CoefficientField& c, GOSign sign,
                        double beta, const RayChart& rc);

// Residual of the Phi equation by centered plug-back (own-center charts).
Field4 phase_residual(const ProductMetric& m, const CoefficientField& c, GOSign sign,
                      double beta, const RayChart& rc, const Field4& Phi);

// Transport amplitude per the WKB formulas.
Field4 amplitude(const ProductMetric& m, const GOParams& prm, const RayChart& rc,
                 const Field4& Phi);

// Discrete transport-equation residual of an amplitude (divided by 2 lambda).
Field4 transport_residual(const ProductMetric& m, const CoefficientField& c,
                          const GOParams& prm, const RayChart& rc, const Field4& T_amp);

// Remainder solve in the conjugated frame; fills R, residual_norm, stats.
void solve_remainder(const ProductMetric& m, const CoefficientField& c, GOAnsatz& a,
                     const SolveOptions& opt = {});

// Full construction.
GOAnsatz build_go(const ProductMetric& m, const CoefficientField& c, const GOParams& prm,
                  const SpaceGrid& g, const TimeGrid& tg, const SolveOptions& opt = {});

// Conjugated profile of the ansatz family: rho = phi + i psi (growing) or the
// reversed-transpose profile used for the decaying solve.
ConjProfile go_profile(const ProductMetric& m, const SpaceGrid& g, const GOParams& prm);

// Weighted residual |e^{-phi} L u| = |L_rho (T + R)| of the assembled solution.
double assembled_residual(const ProductMetric& m, const CoefficientField& c,
                          const GOAnsatz& a);

} // namespace mcd
