#pragma once

// Implicit time stepping for the IBVP and its conjugated/transposed variants,
// plus DN-map extraction on boundary faces.

#include "mcd/operators.hpp"

#include <map>
#include <optional>

namespace mcd {

enum class TimeScheme { BackwardEuler, Trapezoidal };

struct SolveOptions {
    TimeScheme scheme = TimeScheme::BackwardEuler;
    double tol = 1e-10;   // relative residual per step
    int maxit = 600;
    const ConjProfile* profile = nullptr;  // conjugation of the operator
    bool negate_A = false;                 // spatial operator of -A (transpose form)
    bool conj_q = false;
};

struct SolveStats {
    int total_iters = 0;
    int max_step_iters = 0;
    double worst_rel_residual = 0.0;
};

struct IBVPProblem {
    const ProductMetric* metric = nullptr;
    const CoefficientField* coeffs = nullptr;
    const Field4* dirichlet = nullptr;  // boundary trace; nullptr = homogeneous
    const Field4* source = nullptr;     // nullptr = source-free
    const Field3* initial = nullptr;    // test mode only; nullptr = zero (Eq. forced)
};

// Forward march of d_t u + S u = F, u(0) given, Dirichlet data imposed at
// boundary nodes of every level. Throws std::runtime_error with the residual
// if a step's linear solve fails.
Field4 solve_ibvp(const IBVPProblem& p, const SpaceGrid& g, const TimeGrid& tg,
                  const SolveOptions& opt = {}, SolveStats* stats = nullptr);

// Final-value problem for the transpose operator L^T v = -d_t v - M_{-A} v + q v,
// conjugated as e^{rho'} L^T e^{-rho'} when opt.profile is given (the profile
// argument is rho'). Solved by time reversal of an equivalent forward march.
Field4 solve_transpose_fvp(const IBVPProblem& p, const SpaceGrid& g, const TimeGrid& tg,
                           const SolveOptions& opt = {}, SolveStats* stats = nullptr);

// DN records ----------------------------------------------------------------

struct DNRecord {
    std::vector<Face> faces;
    // per face: values[face][kt * face_nodes + m], magnetic normal derivative
    std::map<Face, std::vector<cplx>> values;
    std::map<Face, FaceQuad> quad;
    const TimeGrid* tg = nullptr;

    double sup_norm() const;
    // sup over faces/nodes/times of |a - b|; records must share layout
    static double sup_diff(const DNRecord& a, const DNRecord& b);
};

// Magnetic normal derivative d_nu u + i (nu . A) u sampled on the requested
// faces with surface quadrature weights. Second-order one-sided differences.
DNRecord dn_map(const ProductMetric& m, const CoefficientField& c, const SpaceGrid& g,
                const TimeGrid& tg, const Field4& u, const std::vector<Face>& faces);

// Flux d_nu u alone (no magnetic term); used by the conjugated identity
// machinery where the lateral trace of the unknown vanishes.
DNRecord dn_flux(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                 const Field4& u, const std::vector<Face>& faces);

// L2(M_T) norm of a space-time field with dV_g dt quadrature.
double spacetime_l2(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                    const Field4& u);

// L2(M) norm of one slice.
double slice_l2(const ProductMetric& m, const SpaceGrid& g, const Field3& u);

} // namespace mcd
