#pragma once

// Product manifold M = [-l,l] x M0 where M0 = {(r,theta)} is a geodesic
// rectangle in the polar normal chart of an external center y0. Metric
// g = diag(1, 1, P(r,theta)), |g| = b = det P, dV_g = sqrt(b) dx1 dr dth.

#include "mcd/grid.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace mcd {

enum class MetricKind { EuclideanPolar, CustomP };

struct BaseChart {
    std::array<double, 2> y0{0.0, 0.0};   // chart center in the plane (Cartesian)
    double rmin = 1.0, rmax = 3.0;
    double thmin = -M_PI / 6, thmax = M_PI / 6;
    MetricKind kind = MetricKind::EuclideanPolar;

    // Custom metric hook: P(r,th) with its first derivatives. Unused for
    // euclidean-polar (P = r^2, dP/dr = 2r, dP/dth = 0).
    std::function<double(double, double)> P_fn, dPdr_fn, dPdth_fn;

    void validate() const;

    bool in_range(double r, double th) const {
        const double eps = 1e-12;
        return r >= rmin - eps && r <= rmax + eps && th >= thmin - eps && th <= thmax + eps;
    }
    double P(double r, double th) const {
        return kind == MetricKind::EuclideanPolar ? r * r : P_fn(r, th);
    }
    double dPdr(double r, double th) const {
        return kind == MetricKind::EuclideanPolar ? 2 * r : dPdr_fn(r, th);
    }
    double dPdth(double r, double th) const {
        return kind == MetricKind::EuclideanPolar ? 0.0 : dPdth_fn(r, th);
    }
    double b(double r, double th) const { return P(r, th); }       // 1x1 block
    double sqrtb(double r, double th) const { return std::sqrt(b(r, th)); }

    // Cartesian position of a chart point.
    std::array<double, 2> cart(double r, double th) const {
        return {y0[0] + r * std::cos(th), y0[1] + r * std::sin(th)};
    }
};

struct ProductMetric {
    BaseChart chart;
    double ell = 1.0;    // x1 in [-ell, ell]

    void validate() const;
    SpaceGrid make_grid(int n1, int nr, int nth) const {
        return SpaceGrid(n1, nr, nth, -ell, ell, chart.rmin, chart.rmax,
                         chart.thmin, chart.thmax);
    }
};

struct MetricAt {
    std::array<double, 3> diag;  // g = diag(1, 1, P)
    double sqrt_det;
};

// g and sqrt|g| at a chart point. Throws std::domain_error outside the chart.
MetricAt metric_at(const BaseChart& chart, double r, double th);

// Boundary faces of the coordinate box.
enum class Face { X1Minus, X1Plus, RMinus, RPlus, ThMinus, ThPlus };
constexpr std::array<Face, 6> all_faces = {Face::X1Minus, Face::X1Plus, Face::RMinus,
                                           Face::RPlus, Face::ThMinus, Face::ThPlus};
std::string face_name(Face f);

// Sign of d_nu(phi) with phi = x1 on a face: +1, -1, or 0 (flat faces).
int face_nu_e1(Face f);

struct BoundaryDecomposition {
    double eps = 0.1;
    std::vector<Face> plus;          // d_nu phi >= 0
    std::vector<Face> minus;         // d_nu phi <= 0
    std::vector<Face> plus_eps;      // d_nu phi > eps/2   (measured set Sigma_{+,eps/2})
    std::vector<Face> minus_eps;     // d_nu phi < -eps/2

    bool in_plus_eps(Face f) const;
    bool in_minus_eps(Face f) const;
};

// Classify the six faces by the sign of d_nu(x1). Requires 0 < eps < 2 so the
// strict sets are exactly the two x1-faces; eps >= 2 leaves no measured face.
BoundaryDecomposition classify_boundary(const ProductMetric& metric, double eps);

// Length of the radial geodesic from y0 in direction th across M0, measured
// from entry at r = rmin. Throws std::domain_error if th is outside the chart.
double ray_exit_length(const BaseChart& chart, double th);

// Quadrature helpers --------------------------------------------------------

// Volume weights w = trapezoid(x1) * trapezoid(r) * trapezoid(th) * sqrt(b).
RealField3 volume_weights(const ProductMetric& m, const SpaceGrid& g);

// integral of f over M with dV_g
double volume_integral(const ProductMetric& m, const SpaceGrid& g, const RealField3& f);

// Per-node surface weight on a face (trapezoid in the two tangential
// directions, with the induced measure: sqrt(b) on x1- and r-faces, 1 on
// theta-faces). index mapping follows the face's tangential grid order.
struct FaceQuad {
    Face face;
    std::vector<std::array<int, 3>> nodes;  // (i,j,k) grid indices
    std::vector<double> w;                  // surface weights dS_g
};
FaceQuad face_quadrature(const ProductMetric& m, const SpaceGrid& g, Face f);

} // namespace mcd
