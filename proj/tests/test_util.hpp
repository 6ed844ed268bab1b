#pragma once

// Shared helpers for the test suites: high-accuracy derivatives of analytic
// callables (independent of the grid operators they check) and common
// manifold/grid setups.

#include "mcd/coefficients.hpp"
#include "mcd/geometry.hpp"

#include <cmath>
#include <functional>

namespace mcd::testutil {

// Fourth-order central difference; accuracy ~1e-10 for smooth f, good enough
// to serve as a reference for O(h^2) grid operators.
inline double dnum(const std::function<double(double)>& f, double x, double h = 1e-4) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

inline ProductMetric desk_metric() {
    ProductMetric m;
    m.chart = BaseChart{};
    m.ell = 1.0;
    return m;
}

// A smooth non-separable covector field with all three components.
struct SmoothA {
    double a1(double t, double x1, double r, double th) const {
        return 0.3 * std::sin(x1 + 0.5 * r) * std::cos(th) * (1 + 0.2 * t);
    }
    double ar(double t, double x1, double r, double th) const {
        return 0.25 * std::cos(0.7 * x1) * std::sin(r) * (1 + 0.1 * std::sin(th)) +
               0.05 * t;
    }
    double ath(double t, double x1, double r, double th) const {
        return 0.2 * std::sin(0.4 * x1 + th) * r * (1 - 0.1 * t);
    }
};

inline CoefficientField sample_smooth(const SpaceGrid& g, const TimeGrid& tg,
                                      double qamp = 0.3) {
    SmoothA A;
    return CoefficientField::sample(
        g, tg, [&](double t, double x1, double r, double th) { return A.a1(t, x1, r, th); },
        [&](double t, double x1, double r, double th) { return A.ar(t, x1, r, th); },
        [&](double t, double x1, double r, double th) { return A.ath(t, x1, r, th); },
        [&](double t, double x1, double r, double th) {
            return qamp * std::cos(x1) * std::sin(0.5 * r + th) * (1 + 0.3 * t);
        },
        [&](double t, double x1, double r, double) {
            return 0.1 * qamp * std::sin(x1 + r) * (1 - 0.2 * t);
        });
}

} // namespace mcd::testutil
