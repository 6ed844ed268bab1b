#pragma once

// Time-dependent covector fields A = A1 dx1 + Ar dr + Ath dth, complex
// potentials q, gauge functions Psi, their derived quantities, and the
// synthetic phantom library used by the experiments.

#include "mcd/geometry.hpp"
#include "mcd/grid.hpp"

#include <functional>

namespace mcd {

// scalar function of (t, x1, r, th)
using ScalarFn = std::function<double(double, double, double, double)>;

struct CoefficientField {
    const SpaceGrid* g = nullptr;
    const TimeGrid* tg = nullptr;
    RealField4 A1, Ar, Ath;
    Field4 q;

    CoefficientField() = default;
    CoefficientField(const SpaceGrid& grid, const TimeGrid& time)
        : g(&grid), tg(&time), A1(grid, time), Ar(grid, time), Ath(grid, time), q(grid, time) {}

    static CoefficientField sample(const SpaceGrid& grid, const TimeGrid& time,
                                   const ScalarFn& a1, const ScalarFn& ar,
                                   const ScalarFn& ath, const ScalarFn& qre,
                                   const ScalarFn& qim = nullptr);

    void check_finite() const;
};

struct GaugeFunction {
    const SpaceGrid* g = nullptr;
    const TimeGrid* tg = nullptr;
    RealField4 psi;

    GaugeFunction() = default;
    GaugeFunction(const SpaceGrid& grid, const TimeGrid& time)
        : g(&grid), tg(&time), psi(grid, time) {}
    static GaugeFunction sample(const SpaceGrid& grid, const TimeGrid& time, const ScalarFn& f);
    // max |psi| over boundary nodes of every time level
    double boundary_sup() const;
};

// delta_g A = (1/sqrt|g|) d_j (g^{jk} sqrt|g| A_k) on one time slice.
RealField3 divergence(const ProductMetric& m, const CoefficientField& c, int kt);

// |A|_g^2 = A1^2 + Ar^2 + Ath^2 / P on one time slice.
RealField3 a_norm2(const ProductMetric& m, const CoefficientField& c, int kt);

// q~ = q + i delta_g A - |A|_g^2 on one time slice.
Field3 q_tilde(const ProductMetric& m, const CoefficientField& c, int kt);

// A + grad_x Psi (spatial gradient only); q carried over unchanged.
CoefficientField apply_gauge(const CoefficientField& c, const GaugeFunction& psi);

// (x1,r)-component of dA: d1 Ar - dr A1, per time slice. Vanishes (to O(h^2))
// iff A is locally a spatial gradient in those variables.
RealField3 curl_x1r(const CoefficientField& c, int kt);

// Smooth compactly supported bump: exp(1 - 1/(1-s^2)) for |s|<1, else 0.
double bump01(double s);
// bump((x-c)/w), supported on (c-w, c+w)
double bump(double x, double c, double w);
// d/dx of bump(x,c,w)
double dbump(double x, double c, double w);
// C^inf transition 0 -> 1 on [0,1]
double smooth_step(double x);
// C^inf plateau on (a,b): 0 outside, 1 on [a+delta, b-delta]
double plateau(double x, double a, double b, double delta);
// d/dx of plateau
double dplateau(double x, double a, double b, double delta);

// Phantom library -----------------------------------------------------------

struct PhantomPair {
    CoefficientField c1, c2;
    GaugeFunction psi;       // set for gradient pairs
    bool gradient_pair = false;
    bool equal_on_boundary = false;
};

struct PhantomConfig {
    double amplitude = 0.1;
    // background magnetic field / potential shared by both coefficient sets
    double background_a = 0.05;
    double background_q = 0.2;
    bool time_dependent_gauge = false;  // static gauges keep the DN map invariant
};

// (a) gradient pair: A2 = A1 + grad_x Psi, Psi supported in the interior
PhantomPair gradient_pair(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                          const PhantomConfig& cfg = {});
// (b) non-gradient pair: A2 - A1 = (0, c(t) x1, 0) * cutoff
PhantomPair nongradient_pair(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                             const PhantomConfig& cfg = {});
// (c) q-phantom pair: A equal, q2 = q1 + smooth bump in (t, x1, r)
PhantomPair q_pair(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                   const PhantomConfig& cfg = {});
// identical coefficients on both sides
PhantomPair equal_pair(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                       const PhantomConfig& cfg = {});

} // namespace mcd
