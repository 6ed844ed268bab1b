#include "mcd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcd {

void BaseChart::validate() const {
    if (!(rmin > 0))
        throw std::invalid_argument("chart: rmin must be positive (center lies outside M0)");
    if (!(rmax > rmin) || !(thmax > thmin))
        throw std::invalid_argument("chart: empty r or theta range");
    if (kind == MetricKind::CustomP) {
        if (!P_fn || !dPdr_fn || !dPdth_fn)
            throw std::invalid_argument("chart: custom metric requires P and its derivatives");
        // spot-check positivity on a coarse lattice
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= 8; ++j) {
                double r = rmin + (rmax - rmin) * i / 8.0;
                double th = thmin + (thmax - thmin) * j / 8.0;
                if (!(P_fn(r, th) > 0))
                    throw std::invalid_argument("chart: P(r,theta) must be positive definite");
            }
    }
}

void ProductMetric::validate() const {
    chart.validate();
    if (!(ell > 0)) throw std::invalid_argument("metric: ell must be positive");
}

MetricAt metric_at(const BaseChart& chart, double r, double th) {
    if (!chart.in_range(r, th))
        throw std::domain_error("metric_at: point outside chart ranges");
    double P = chart.P(r, th);
    if (!(P > 0)) throw std::domain_error("metric_at: P not positive at point");
    return {{1.0, 1.0, P}, std::sqrt(P)};
}

std::string face_name(Face f) {
    switch (f) {
        case Face::X1Minus: return "x1-";
        case Face::X1Plus: return "x1+";
        case Face::RMinus: return "r-";
        case Face::RPlus: return "r+";
        case Face::ThMinus: return "th-";
        case Face::ThPlus: return "th+";
    }
    return "?";
}

int face_nu_e1(Face f) {
    if (f == Face::X1Plus) return 1;
    if (f == Face::X1Minus) return -1;
    return 0;
}

bool BoundaryDecomposition::in_plus_eps(Face f) const {
    return std::find(plus_eps.begin(), plus_eps.end(), f) != plus_eps.end();
}
bool BoundaryDecomposition::in_minus_eps(Face f) const {
    return std::find(minus_eps.begin(), minus_eps.end(), f) != minus_eps.end();
}

BoundaryDecomposition classify_boundary(const ProductMetric& metric, double eps) {
    metric.validate();
    if (!(eps > 0)) throw std::invalid_argument("classify_boundary: eps must be positive");
    BoundaryDecomposition d;
    d.eps = eps;
    for (Face f : all_faces) {
        int s = face_nu_e1(f);
        if (s >= 0) d.plus.push_back(f);
        if (s <= 0) d.minus.push_back(f);
        if (s > eps / 2) d.plus_eps.push_back(f);
        if (-s > eps / 2) d.minus_eps.push_back(f);
    }
    if (d.plus_eps.empty())
        throw std::invalid_argument("classify_boundary: eps too large, measured set is empty");
    return d;
}

double ray_exit_length(const BaseChart& chart, double th) {
    const double eps = 1e-12;
    if (th < chart.thmin - eps || th > chart.thmax + eps)
        throw std::domain_error("ray_exit_length: direction outside chart");
    return chart.rmax - chart.rmin;
}

RealField3 volume_weights(const ProductMetric& m, const SpaceGrid& g) {
    RealField3 w(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k)
                w(i, j, k) = g.quadw(i, j, k) * m.chart.sqrtb(g.r(j), g.th(k));
    return w;
}

double volume_integral(const ProductMetric& m, const SpaceGrid& g, const RealField3& f) {
    RealField3 w = volume_weights(m, g);
    double s = 0;
    for (std::size_t n = 0; n < f.size(); ++n) s += w.v[n] * f.v[n];
    return s;
}

FaceQuad face_quadrature(const ProductMetric& m, const SpaceGrid& g, Face f) {
    FaceQuad q;
    q.face = f;
    auto tw = SpaceGrid::trapw;
    switch (f) {
        case Face::X1Minus:
        case Face::X1Plus: {
            int i = (f == Face::X1Plus) ? g.n1 - 1 : 0;
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    q.nodes.push_back({i, j, k});
                    q.w.push_back(tw(j, g.nr, g.hr()) * tw(k, g.nth, g.hth()) *
                                  m.chart.sqrtb(g.r(j), g.th(k)));
                }
            break;
        }
        case Face::RMinus:
        case Face::RPlus: {
            int j = (f == Face::RPlus) ? g.nr - 1 : 0;
            for (int i = 0; i < g.n1; ++i)
                for (int k = 0; k < g.nth; ++k) {
                    q.nodes.push_back({i, j, k});
                    // induced metric diag(1, P): dS = sqrt(P) dx1 dth
                    q.w.push_back(tw(i, g.n1, g.h1()) * tw(k, g.nth, g.hth()) *
                                  m.chart.sqrtb(g.r(j), g.th(k)));
                }
            break;
        }
        case Face::ThMinus:
        case Face::ThPlus: {
            int k = (f == Face::ThPlus) ? g.nth - 1 : 0;
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.nr; ++j) {
                    q.nodes.push_back({i, j, k});
                    // induced metric diag(1, 1): dS = dx1 dr
                    q.w.push_back(tw(i, g.n1, g.h1()) * tw(j, g.nr, g.hr()));
                }
            break;
        }
    }
    return q;
}

} // namespace mcd
