#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcd/fd.hpp"
#include "mcd/solver.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace mcd;
using namespace mcd::testutil;

namespace {

using CFn = std::function<cplx(double, double, double, double)>;

Field4 sample4(const SpaceGrid& g, const TimeGrid& tg, const CFn& f) {
    Field4 u(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt)
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k)
                    u(kt, i, j, k) = f(tg.t(kt), g.x1(i), g.r(j), g.th(k));
    return u;
}

double sup4(const Field4& u) {
    double s = 0;
    for (cplx z : u.v) s = std::max(s, std::abs(z));
    return s;
}

} // namespace

TEST_CASE("apply_L: pure time derivative") {
    ProductMetric m = desk_metric();
    TimeGrid tg(8, 1.0);
    SpaceGrid g = m.make_grid(9, 9, 9);
    CoefficientField c(g, tg);  // A = 0, q = 0
    Field4 u = sample4(g, tg, [](double t, double, double, double) { return cplx(3.5 * t); });
    Field4 out = apply_L(m, c, u);
    for (cplx z : out.v) CHECK(std::abs(z - 3.5) < 1e-11);
}

TEST_CASE("apply_L: log r is harmonic for the polar base metric") {
    ProductMetric m = desk_metric();
    TimeGrid tg(4, 1.0);
    auto run = [&](int n) {
        SpaceGrid g = m.make_grid(5, n, 5);
        CoefficientField c(g, tg);
        Field4 u = sample4(g, tg, [](double, double, double r, double) {
            return cplx(std::log(r));
        });
        Field4 out = apply_L(m, c, u);
        double s = 0;
        // interior in r (one-sided second differences at the r-faces are lower order)
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (int i = 0; i < g.n1; ++i)
                for (int j = 1; j < g.nr - 1; ++j)
                    for (int k = 0; k < g.nth; ++k)
                        s = std::max(s, std::abs(out(kt, i, j, k)));
        return s;
    };
    double e1 = run(17), e2 = run(33);
    CHECK(e1 < 5e-3);
    CHECK(e1 / e2 > 3.0);
}

TEST_CASE("apply_L: random smooth field against the refined-grid oracle") {
    ProductMetric m = desk_metric();
    TimeGrid tg(6, 1.0);
    auto fn = [](double t, double x1, double r, double th) {
        return cplx(std::sin(1.3 * x1 + 0.7 * r) * std::cos(th), 0.4 * std::cos(x1 * r)) *
               (1 + 0.5 * t);
    };
    auto diff_to_fine = [&](int n) {
        SpaceGrid gc = m.make_grid(n, n, n);
        SpaceGrid gf = gc.refined();
        CoefficientField cc = sample_smooth(gc, tg), cf = sample_smooth(gf, tg);
        Field4 uc = sample4(gc, tg, fn), uf = sample4(gf, tg, fn);
        Field4 oc = apply_L(m, cc, uc), of = apply_L(m, cf, uf);
        double err = 0;
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (int i = 1; i < gc.n1 - 1; ++i)
                for (int j = 1; j < gc.nr - 1; ++j)
                    for (int k = 1; k < gc.nth - 1; ++k)
                        err = std::max(err, std::abs(oc(kt, i, j, k) - of(kt, 2 * i, 2 * j, 2 * k)));
        return err;
    };
    double e1 = diff_to_fine(9), e2 = diff_to_fine(17);
    CHECK(e1 / e2 > 3.0);  // O(h^2) consistency against the oracle
}

TEST_CASE("solve_ibvp: zero data gives the zero solution") {
    ProductMetric m = desk_metric();
    TimeGrid tg(8, 1.0);
    SpaceGrid g = m.make_grid(9, 9, 9);
    CoefficientField c = sample_smooth(g, tg);
    IBVPProblem p;
    p.metric = &m;
    p.coeffs = &c;
    Field4 u = solve_ibvp(p, g, tg);
    CHECK(sup4(u) == 0.0);
}

TEST_CASE("solve_ibvp: manufactured solution, spatial order >= 1.8") {
    ProductMetric m = desk_metric();
    TimeGrid tg(12, 1.0);

    auto X = [](double x1, double r, double th) {
        (void)th;
        // smooth arch in r, vanishing at both r-faces
        return std::sin(M_PI * (x1 + 1.0) / 2.0) * std::sin(M_PI * (r - 1.0) / 2.0);
    };

    auto solve_err = [&](int n) {
        SpaceGrid g = m.make_grid(n, n, 7);
        SpaceGrid gf = g.refined();
        CoefficientField c = sample_smooth(g, tg, 0.2);
        CoefficientField cf = sample_smooth(gf, tg, 0.2);

        // F = X + t * (S_fine X) restricted; time part of u* = t X is exact
        Field4 F(g, tg);
        Field3 Xc(g), Xf(gf);
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) Xc(i, j, k) = X(g.x1(i), g.r(j), g.th(k));
        for (int i = 0; i < gf.n1; ++i)
            for (int j = 0; j < gf.nr; ++j)
                for (int k = 0; k < gf.nth; ++k) Xf(i, j, k) = X(gf.x1(i), gf.r(j), gf.th(k));
        for (int kt = 0; kt <= tg.nt; ++kt) {
            SpatialOp op = build_spatial_op(m, cf, kt, {});
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.nr; ++j)
                    for (int k = 0; k < g.nth; ++k)
                        F(kt, i, j, k) = Xc(i, j, k) + tg.t(kt) * op.apply_at(Xf, 2 * i, 2 * j, 2 * k);
        }
        Field4 f = sample4(g, tg, [&](double t, double x1, double r, double th) {
            return cplx(t * X(x1, r, th));
        });
        IBVPProblem p;
        p.metric = &m;
        p.coeffs = &c;
        p.dirichlet = &f;
        p.source = &F;
        Field4 u = solve_ibvp(p, g, tg);
        double err = 0;
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k)
                    err = std::max(err, std::abs(u(tg.nt, i, j, k) - X(g.x1(i), g.r(j), g.th(k))));
        return err;
    };

    double e1 = solve_err(9), e2 = solve_err(17);
    double order = std::log2(e1 / e2);
    CHECK(order >= 1.8);
}

TEST_CASE("solve_ibvp: backward Euler temporal order >= 0.9") {
    ProductMetric m = desk_metric();
    SpaceGrid g = m.make_grid(11, 11, 7);

    auto X = [](double x1, double r, double th) {
        (void)th;
        return std::sin(M_PI * (x1 + 1.0) / 2.0) * bump(r, 2.0, 0.85);
    };
    Field3 Xc(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) Xc(i, j, k) = X(g.x1(i), g.r(j), g.th(k));

    auto solve_err = [&](int nt) {
        TimeGrid tg(nt, 1.0);
        CoefficientField c = sample_smooth(g, tg, 0.2);
        // u* = t^2 X; F = 2 t X + t^2 S X with S the solver's own spatial operator
        Field4 F(g, tg);
        for (int kt = 0; kt <= tg.nt; ++kt) {
            SpatialOp op = build_spatial_op(m, c, kt, {});
            double t = tg.t(kt);
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.nr; ++j)
                    for (int k = 0; k < g.nth; ++k)
                        F(kt, i, j, k) = 2 * t * Xc(i, j, k) + t * t * op.apply_at(Xc, i, j, k);
        }
        Field4 f = sample4(g, tg, [&](double t, double x1, double r, double th) {
            return cplx(t * t * X(x1, r, th));
        });
        IBVPProblem p;
        p.metric = &m;
        p.coeffs = &c;
        p.dirichlet = &f;
        p.source = &F;
        Field4 u = solve_ibvp(p, g, tg);
        double err = 0;
        for (std::size_t n = 0; n < g.size(); ++n)
            err = std::max(err, std::abs(u.slice(tg.nt)[n] - Xc.v[n]));
        return err;
    };
    double e1 = solve_err(8), e2 = solve_err(16);
    double order = std::log2(e1 / e2);
    CHECK(order >= 0.9);
    CHECK(order < 1.5);  // backward Euler should not look second order here
}

TEST_CASE("solve_ibvp: trapezoidal scheme is more accurate in time") {
    ProductMetric m = desk_metric();
    SpaceGrid g = m.make_grid(9, 9, 7);
    TimeGrid tg(8, 1.0);
    CoefficientField c = sample_smooth(g, tg, 0.2);
    auto X = [](double x1, double r, double) {
        return std::sin(M_PI * (x1 + 1.0) / 2.0) * bump(r, 2.0, 0.85);
    };
    Field3 Xc(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) Xc(i, j, k) = X(g.x1(i), g.r(j), g.th(k));
    Field4 F(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        SpatialOp op = build_spatial_op(m, c, kt, {});
        double t = tg.t(kt);
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k)
                    F(kt, i, j, k) = 2 * t * Xc(i, j, k) + t * t * op.apply_at(Xc, i, j, k);
    }
    Field4 f = sample4(g, tg, [&](double t, double x1, double r, double th) {
        return cplx(t * t * X(x1, r, th));
    });
    IBVPProblem p;
    p.metric = &m;
    p.coeffs = &c;
    p.dirichlet = &f;
    p.source = &F;
    Field4 ube = solve_ibvp(p, g, tg);
    SolveOptions cn;
    cn.scheme = TimeScheme::Trapezoidal;
    Field4 ucn = solve_ibvp(p, g, tg, cn);
    double ebe = 0, ecn = 0;
    for (std::size_t n = 0; n < g.size(); ++n) {
        ebe = std::max(ebe, std::abs(ube.slice(tg.nt)[n] - Xc.v[n]));
        ecn = std::max(ecn, std::abs(ucn.slice(tg.nt)[n] - Xc.v[n]));
    }
    CHECK(ecn < 0.5 * ebe);
}

TEST_CASE("gauge covariance: static gauge with zero boundary trace") {
    ProductMetric m = desk_metric();

    auto gap_at = [&](int n, int nt) {
        TimeGrid tg(nt, 1.0);
        SpaceGrid g = m.make_grid(n, n, n);
        CoefficientField c1 = sample_smooth(g, tg, 0.2);
        auto psi = GaugeFunction::sample(g, tg, [&](double, double x1, double r, double th) {
            return 0.4 * bump(x1, 0.0, 0.85) * bump(r, 2.0, 0.8) * bump(th, 0.0, 0.8 * M_PI / 6);
        });
        // analytic gradient via high-accuracy differences of the gauge function
        CoefficientField c2 = c1;
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.nr; ++j)
                    for (int k = 0; k < g.nth; ++k) {
                        double x1 = g.x1(i), r = g.r(j), th = g.th(k);
                        auto f1 = [&](double x) {
                            return 0.4 * bump(x, 0.0, 0.85) * bump(r, 2.0, 0.8) *
                                   bump(th, 0.0, 0.8 * M_PI / 6);
                        };
                        auto fr = [&](double x) {
                            return 0.4 * bump(x1, 0.0, 0.85) * bump(x, 2.0, 0.8) *
                                   bump(th, 0.0, 0.8 * M_PI / 6);
                        };
                        auto fth = [&](double x) {
                            return 0.4 * bump(x1, 0.0, 0.85) * bump(r, 2.0, 0.8) *
                                   bump(x, 0.0, 0.8 * M_PI / 6);
                        };
                        c2.A1(kt, i, j, k) += dnum(f1, x1);
                        c2.Ar(kt, i, j, k) += dnum(fr, r);
                        c2.Ath(kt, i, j, k) += dnum(fth, th);
                    }

        Field4 f = sample4(g, tg, [](double t, double x1, double r, double th) {
            return cplx(t * std::sin(x1 + th) * std::cos(r), 0.3 * t * std::cos(x1 * r));
        });
        IBVPProblem p1;
        p1.metric = &m;
        p1.coeffs = &c1;
        p1.dirichlet = &f;
        Field4 u1 = solve_ibvp(p1, g, tg);
        IBVPProblem p2 = p1;
        p2.coeffs = &c2;
        Field4 u2 = solve_ibvp(p2, g, tg);

        double gap = 0;
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.nr; ++j)
                    for (int k = 0; k < g.nth; ++k) {
                        cplx phase = std::exp(cplx(0, -psi.psi(kt, i, j, k)));
                        gap = std::max(gap, std::abs(u2(kt, i, j, k) - phase * u1(kt, i, j, k)));
                    }
        return gap;
    };

    double g1 = gap_at(9, 8), g2 = gap_at(17, 16);
    CHECK(g2 < g1);
    CHECK(g1 < 0.05);
}

TEST_CASE("dn_map: zero solution and the stationary linear profile") {
    ProductMetric m = desk_metric();
    TimeGrid tg(6, 1.0);
    SpaceGrid g = m.make_grid(9, 9, 9);
    CoefficientField c(g, tg);

    Field4 zero(g, tg);
    DNRecord r0 = dn_map(m, c, g, tg, zero, {Face::X1Plus, Face::X1Minus});
    CHECK(r0.sup_norm() == 0.0);

    // stationary trick: u = x1 solves the discrete equation with F=0, u0=x1
    Field4 f = sample4(g, tg, [](double, double x1, double, double) { return cplx(x1); });
    Field3 u0(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) u0(i, j, k) = g.x1(i);
    IBVPProblem p;
    p.metric = &m;
    p.coeffs = &c;
    p.dirichlet = &f;
    p.initial = &u0;
    Field4 u = solve_ibvp(p, g, tg);
    DNRecord rec = dn_map(m, c, g, tg, u, {Face::X1Plus, Face::X1Minus});
    for (cplx z : rec.values[Face::X1Plus]) CHECK(std::abs(z - 1.0) < 1e-9);
    for (cplx z : rec.values[Face::X1Minus]) CHECK(std::abs(z + 1.0) < 1e-9);
}

TEST_CASE("integration by parts: bilinear identity on analytic pairs") {
    ProductMetric m = desk_metric();

    auto defect_at = [&](int n, int nt) {
        TimeGrid tg(nt, 1.0);
        SpaceGrid g = m.make_grid(n, n, n);
        CoefficientField c = sample_smooth(g, tg, 0.3);
        // u vanishes on the lateral boundary and at t=0 (resolved, first-order zeros)
        Field4 u = sample4(g, tg, [](double t, double x1, double r, double th) {
            return cplx(t, 0.4 * t * t) * std::sin(M_PI * (x1 + 1) / 2) *
                   std::sin(M_PI * (r - 1) / 2) * std::sin(M_PI * (th + M_PI / 6) / (M_PI / 3));
        });
        // v vanishes at t=T only
        Field4 v = sample4(g, tg, [](double t, double x1, double r, double th) {
            return cplx(1.0 - t, 0.2) * (1 - t) * std::cos(0.5 * x1 + th) * std::sin(0.4 * r);
        });
        Field4 Lu = apply_L(m, c, u);
        Field4 Ltv = apply_L_transpose(m, c, v);

        RealField3 w = volume_weights(m, g);
        cplx lhs = 0;
        for (int kt = 0; kt <= tg.nt; ++kt) {
            cplx s1 = 0, s2 = 0;
            for (std::size_t nn = 0; nn < g.size(); ++nn) {
                s1 += w.v[nn] * Lu.slice(kt)[nn] * v.slice(kt)[nn];
                s2 += w.v[nn] * u.slice(kt)[nn] * Ltv.slice(kt)[nn];
            }
            lhs += tg.trapw(kt) * (s1 - s2);
        }
        // final-time term (u(0) = 0)
        cplx ft = 0;
        for (std::size_t nn = 0; nn < g.size(); ++nn)
            ft += w.v[nn] * u.slice(tg.nt)[nn] * v.slice(tg.nt)[nn];
        // flux term over the full lateral boundary
        DNRecord flux = dn_flux(m, g, tg, u, std::vector<Face>(all_faces.begin(), all_faces.end()));
        cplx bt = 0;
        for (Face fc : all_faces) {
            const auto& q = flux.quad[fc];
            const auto& vals = flux.values[fc];
            for (int kt = 0; kt <= tg.nt; ++kt)
                for (std::size_t nn = 0; nn < q.nodes.size(); ++nn) {
                    auto [i, j, k] = q.nodes[nn];
                    bt += tg.trapw(kt) * q.w[nn] * vals[std::size_t(kt) * q.nodes.size() + nn] *
                          v(kt, i, j, k);
                }
        }
        double scale = spacetime_l2(m, g, tg, u) * spacetime_l2(m, g, tg, v);
        return std::abs(lhs - ft + bt) / scale;
    };

    double d1 = defect_at(9, 10), d2 = defect_at(17, 20);
    CHECK(d1 < 0.01);
    CHECK(d1 / d2 > 2.5);
}

TEST_CASE("transpose operator: time-reversal conjugation identity") {
    ProductMetric m = desk_metric();
    TimeGrid tg(5, 1.0);
    SpaceGrid g = m.make_grid(7, 7, 7);
    CoefficientField c = sample_smooth(g, tg, 0.3);
    Field4 u = sample4(g, tg, [](double t, double x1, double r, double th) {
        return cplx(std::sin(x1 + r + th) * (1 + t), std::cos(x1 - r) * t);
    });

    // J w := conj(w(T - t)); then L^T u = J( L_{A(T-t), conj(q)(T-t)} (J u) )
    CoefficientField cjr(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        int src = tg.nt - kt;
        for (std::size_t nn = 0; nn < g.size(); ++nn) {
            cjr.A1.slice(kt)[nn] = c.A1.slice(src)[nn];
            cjr.Ar.slice(kt)[nn] = c.Ar.slice(src)[nn];
            cjr.Ath.slice(kt)[nn] = c.Ath.slice(src)[nn];
            cjr.q.slice(kt)[nn] = std::conj(c.q.slice(src)[nn]);
        }
    }
    auto J = [&](const Field4& w) {
        Field4 out(g, tg);
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (std::size_t nn = 0; nn < g.size(); ++nn)
                out.slice(kt)[nn] = std::conj(w.slice(tg.nt - kt)[nn]);
        return out;
    };
    Field4 lhs = apply_L_transpose(m, c, u);
    Field4 rhs = J(apply_L(m, cjr, J(u)));
    double err = 0;
    for (std::size_t nn = 0; nn < lhs.v.size(); ++nn)
        err = std::max(err, std::abs(lhs.v[nn] - rhs.v[nn]));
    CHECK(err < 1e-11);
}

TEST_CASE("solve_transpose_fvp: manufactured final-value problem converges") {
    ProductMetric m = desk_metric();
    auto X = [](double x1, double r, double th) {
        return std::sin(M_PI * (x1 + 1.0) / 2.0) * bump(r, 2.0, 0.85) * std::cos(th);
    };
    auto err_at = [&](int n, int nt) {
        SpaceGrid g = m.make_grid(n, n, 7);
        TimeGrid tg(nt, 1.0);
        CoefficientField c = sample_smooth(g, tg, 0.2);
        // v* = (T - t) X vanishes at T; F = L^T v* needs -d_t v* = +X
        Field3 Xc(g);
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) Xc(i, j, k) = X(g.x1(i), g.r(j), g.th(k));
        Field4 F(g, tg);
        OpBuild ob;
        ob.negate_A = true;
        for (int kt = 0; kt <= tg.nt; ++kt) {
            SpatialOp op = build_spatial_op(m, c, kt, ob);
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.nr; ++j)
                    for (int k = 0; k < g.nth; ++k)
                        F(kt, i, j, k) =
                            Xc(i, j, k) + (1.0 - tg.t(kt)) * op.apply_at(Xc, i, j, k);
        }
        Field4 f = sample4(g, tg, [&](double t, double x1, double r, double th) {
            return cplx((1.0 - t) * X(x1, r, th));
        });
        IBVPProblem p;
        p.metric = &m;
        p.coeffs = &c;
        p.dirichlet = &f;
        p.source = &F;
        Field4 v = solve_transpose_fvp(p, g, tg);
        // final level is exactly zero, compare at t = 0
        double err = 0;
        for (std::size_t nn = 0; nn < g.size(); ++nn)
            err = std::max(err, std::abs(v.slice(0)[nn] - Xc.v[nn]));
        return err;
    };
    // time part is linear and the spatial part uses the solver's own operator,
    // so the march reproduces v* to solver tolerance
    double e1 = err_at(9, 8), e2 = err_at(17, 16);
    CHECK(e1 < 1e-7);
    CHECK(e2 < 1e-7);
}

TEST_CASE("energy decay with zero data and test-mode initial condition") {
    ProductMetric m = desk_metric();
    TimeGrid tg(16, 1.0);
    SpaceGrid g = m.make_grid(11, 11, 11);
    CoefficientField c(g, tg);  // A = 0, q = 0
    Field3 u0(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k)
                u0(i, j, k) = bump(g.x1(i), 0.0, 0.9) * bump(g.r(j), 2.0, 0.9) *
                              bump(g.th(k), 0.0, 0.9 * M_PI / 6);
    IBVPProblem p;
    p.metric = &m;
    p.coeffs = &c;
    p.initial = &u0;
    Field4 u = solve_ibvp(p, g, tg);
    double prev = 1e300;
    for (int kt = 0; kt <= tg.nt; ++kt) {
        Field3 s(g);
        std::copy(u.slice(kt), u.slice(kt) + g.size(), s.v.begin());
        double nrm = slice_l2(m, g, s);
        CHECK(nrm <= prev + 1e-14);
        prev = nrm;
    }
}

TEST_CASE("max-norm stability: bounded data, nonnegative potential") {
    ProductMetric m = desk_metric();
    TimeGrid tg(12, 2.0);
    SpaceGrid g = m.make_grid(9, 9, 9);
    auto c = CoefficientField::sample(g, tg, nullptr, nullptr, nullptr,
                                      [](double, double x1, double r, double) {
                                          return 0.5 + 0.5 * std::sin(x1 * r);  // q >= 0
                                      });
    Field4 f = sample4(g, tg, [](double t, double x1, double r, double th) {
        return cplx(std::sin(3 * t + x1) * std::cos(2 * r + th));
    });
    Field4 F = sample4(g, tg, [](double t, double x1, double, double) {
        return cplx(0.5 * std::cos(5 * t * x1));
    });
    IBVPProblem p;
    p.metric = &m;
    p.coeffs = &c;
    p.dirichlet = &f;
    p.source = &F;
    Field4 u = solve_ibvp(p, g, tg);
    double fb = sup4(f);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        double s = 0;
        for (std::size_t nn = 0; nn < g.size(); ++nn)
            s = std::max(s, std::abs(u.slice(kt)[nn]));
        CHECK(s <= fb + tg.t(kt) * 0.5 + 1e-10);
    }
}
