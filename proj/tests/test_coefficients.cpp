#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcd/coefficients.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace mcd;
using namespace mcd::testutil;

namespace {
struct Setup {
    ProductMetric m = desk_metric();
    TimeGrid tg{4, 1.0};
    SpaceGrid g;
    Setup(int n = 17) : g(m.make_grid(n, n, n)) {}
};
} // namespace

TEST_CASE("divergence: zero field") {
    Setup s;
    CoefficientField c(s.g, s.tg);
    RealField3 d = divergence(s.m, c, 0);
    for (double x : d.v) CHECK(x == 0.0);
}

TEST_CASE("divergence: Ar = r gives exactly 2 on the euclidean-polar chart") {
    Setup s;
    auto c = CoefficientField::sample(
        s.g, s.tg, nullptr, [](double, double, double r, double) { return r; }, nullptr, nullptr);
    RealField3 d = divergence(s.m, c, 1);
    // (1/r) d_r(r * r) = 2; discrete differences are exact on quadratics
    for (double x : d.v) CHECK(x == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("divergence: gradient of x1^2") {
    Setup s;
    auto c = CoefficientField::sample(
        s.g, s.tg, [](double, double x1, double, double) { return 2 * x1; }, nullptr, nullptr,
        nullptr);
    RealField3 d = divergence(s.m, c, 0);
    for (double x : d.v) CHECK(x == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("divergence: oscillatory field matches the analytic oracle at O(h^2)") {
    auto run = [](int n) {
        Setup s(n);
        SmoothA A;
        auto c = CoefficientField::sample(
            s.g, s.tg,
            [&](double t, double x1, double r, double th) { return A.a1(t, x1, r, th); },
            [&](double t, double x1, double r, double th) { return A.ar(t, x1, r, th); },
            [&](double t, double x1, double r, double th) { return A.ath(t, x1, r, th); },
            nullptr);
        RealField3 d = divergence(s.m, c, 2);
        double t = s.tg.t(2);
        double err = 0;
        for (int i = 1; i < s.g.n1 - 1; ++i)
            for (int j = 1; j < s.g.nr - 1; ++j)
                for (int k = 1; k < s.g.nth - 1; ++k) {
                    double x1 = s.g.x1(i), r = s.g.r(j), th = s.g.th(k);
                    // delta_g A = (1/r)[d1(r A1) + dr(r Ar) + dth(Ath / r)]
                    double want =
                        dnum([&](double x) { return r * A.a1(t, x, r, th); }, x1) / r +
                        dnum([&](double rr) { return rr * A.ar(t, x1, rr, th); }, r) / r +
                        dnum([&](double u) { return A.ath(t, x1, r, u) / r; }, th) / r;
                    err = std::max(err, std::abs(d(i, j, k) - want));
                }
        return err;
    };
    double e1 = run(9), e2 = run(17);
    CHECK(e2 < e1);
    CHECK(e1 / e2 > 3.0);  // O(h^2): factor ~4 under halving
}

TEST_CASE("q_tilde: trivial cases and linearity/quadratic structure") {
    Setup s;
    // A = 0, q = 1 => q~ = 1
    auto c = CoefficientField::sample(s.g, s.tg, nullptr, nullptr, nullptr,
                                      [](double, double, double, double) { return 1.0; });
    Field3 qt = q_tilde(s.m, c, 0);
    for (cplx z : qt.v) CHECK(std::abs(z - 1.0) < 1e-14);

    // constant A1 = a, q = 0 => q~ = -a^2
    double a = 0.7;
    auto c2 = CoefficientField::sample(
        s.g, s.tg, [=](double, double, double, double) { return a; }, nullptr, nullptr, nullptr);
    Field3 qt2 = q_tilde(s.m, c2, 0);
    for (cplx z : qt2.v) CHECK(std::abs(z - (-a * a)) < 1e-12);

    // q_tilde(metric, 0, q) = q exactly
    auto c3 = CoefficientField::sample(s.g, s.tg, nullptr, nullptr, nullptr,
                                       [](double, double x1, double r, double) { return x1 * r; },
                                       [](double, double x1, double, double) { return 0.3 * x1; });
    Field3 qt3 = q_tilde(s.m, c3, 1);
    for (int i = 0; i < s.g.n1; ++i)
        for (int j = 0; j < s.g.nr; ++j)
            for (int k = 0; k < s.g.nth; ++k)
                CHECK(std::abs(qt3(i, j, k) - c3.q(1, i, j, k)) < 1e-14);
}

TEST_CASE("q_tilde: oscillatory A matches the analytic oracle") {
    Setup s(17);
    auto c = sample_smooth(s.g, s.tg);
    Field3 qt = q_tilde(s.m, c, 1);
    SmoothA A;
    double t = s.tg.t(1);
    double h2 = s.g.hmax() * s.g.hmax();
    for (int i = 1; i < s.g.n1 - 1; i += 3)
        for (int j = 1; j < s.g.nr - 1; j += 3)
            for (int k = 1; k < s.g.nth - 1; k += 3) {
                double x1 = s.g.x1(i), r = s.g.r(j), th = s.g.th(k);
                double div = dnum([&](double x) { return r * A.a1(t, x, r, th); }, x1) / r +
                             dnum([&](double rr) { return rr * A.ar(t, x1, rr, th); }, r) / r +
                             dnum([&](double u) { return A.ath(t, x1, r, u) / r; }, th) / r;
                double n2 = A.a1(t, x1, r, th) * A.a1(t, x1, r, th) +
                            A.ar(t, x1, r, th) * A.ar(t, x1, r, th) +
                            A.ath(t, x1, r, th) * A.ath(t, x1, r, th) / (r * r);
                cplx want = c.q(1, i, j, k) + cplx(0, 1) * div - n2;
                CHECK(std::abs(qt(i, j, k) - want) < 20 * h2);
            }
}

TEST_CASE("apply_gauge: trivial and closed-form cases") {
    Setup s;
    auto c = sample_smooth(s.g, s.tg);

    GaugeFunction zero(s.g, s.tg);
    auto c1 = apply_gauge(c, zero);
    for (std::size_t n = 0; n < c.A1.v.size(); ++n) CHECK(c1.A1.v[n] == c.A1.v[n]);

    // A = 0, Psi = x1 -> A' = (1,0,0)
    CoefficientField c0(s.g, s.tg);
    auto psi = GaugeFunction::sample(s.g, s.tg,
                                     [](double, double x1, double, double) { return x1; });
    auto cg = apply_gauge(c0, psi);
    for (double v : cg.A1.v) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : cg.Ar.v) CHECK(std::abs(v) < 1e-12);

    // Psi = sin(pi r): A'_r = pi cos(pi r) + O(h^2)
    auto psir = GaugeFunction::sample(s.g, s.tg,
                                      [](double, double, double r, double) { return std::sin(M_PI * r); });
    auto cr = apply_gauge(c0, psir);
    double h2 = s.g.hr() * s.g.hr();
    for (int i = 0; i < s.g.n1; ++i)
        for (int j = 1; j < s.g.nr - 1; ++j)
            for (int k = 0; k < s.g.nth; ++k)
                CHECK(std::abs(cr.Ar(0, i, j, k) - M_PI * std::cos(M_PI * s.g.r(j))) <
                      10 * h2);
}

TEST_CASE("curl_x1r: gradient fields, shear field, oracle") {
    Setup s;
    // gradient field: curl vanishes to O(h^2)
    CoefficientField c0(s.g, s.tg);
    auto psi = GaugeFunction::sample(s.g, s.tg, [](double, double x1, double r, double) {
        return std::sin(x1) * std::cos(0.8 * r);
    });
    auto cg = apply_gauge(c0, psi);
    RealField3 w = curl_x1r(cg, 0);
    double h2 = s.g.hmax() * s.g.hmax();
    for (double x : w.v) CHECK(std::abs(x) < 20 * h2);

    // A = (0, x1, 0): curl = 1 exactly
    auto cs = CoefficientField::sample(
        s.g, s.tg, nullptr, [](double, double x1, double, double) { return x1; }, nullptr,
        nullptr);
    RealField3 w2 = curl_x1r(cs, 0);
    for (double x : w2.v) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));

    // random smooth field vs analytic oracle
    SmoothA A;
    auto ca = sample_smooth(s.g, s.tg);
    RealField3 w3 = curl_x1r(ca, 2);
    double t = s.tg.t(2);
    for (int i = 1; i < s.g.n1 - 1; i += 2)
        for (int j = 1; j < s.g.nr - 1; j += 2)
            for (int k = 0; k < s.g.nth; k += 2) {
                double x1 = s.g.x1(i), r = s.g.r(j), th = s.g.th(k);
                double want = dnum([&](double x) { return A.ar(t, x, r, th); }, x1) -
                              dnum([&](double rr) { return A.a1(t, x1, rr, th); }, r);
                CHECK(std::abs(w3(i, j, k) - want) < 20 * h2);
            }
}

TEST_CASE("property: gauge closure of the curl witness") {
    Setup s;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        double a = U(rng), b = U(rng), w0 = 1.2 + 0.5 * U(rng);
        auto c = sample_smooth(s.g, s.tg, 0.2);
        auto psi = GaugeFunction::sample(s.g, s.tg, [&](double, double x1, double r, double th) {
            return a * std::sin(w0 * x1 + 0.3 * th) * std::cos(0.5 * r) + b * x1 * r;
        });
        auto cg = apply_gauge(c, psi);
        RealField3 w1 = curl_x1r(c, 1), w2 = curl_x1r(cg, 1);
        double h2 = s.g.hmax() * s.g.hmax();
        // interior nodes: centered everywhere, O(h^2) cancellation
        for (int i = 1; i < s.g.n1 - 1; ++i)
            for (int j = 1; j < s.g.nr - 1; ++j)
                for (int k = 1; k < s.g.nth - 1; ++k)
                    CHECK(std::abs(w1(i, j, k) - w2(i, j, k)) < 50 * h2);
    }
}

TEST_CASE("property: divergence annihilates fields with sqrt(b) g^{jk} A_k constant") {
    Setup s;
    // euclidean-polar: sqrt(b) Ar = const  =>  Ar = c / r
    auto c = CoefficientField::sample(
        s.g, s.tg, nullptr, [](double, double, double r, double) { return 1.7 / r; }, nullptr,
        nullptr);
    RealField3 d = divergence(s.m, c, 0);
    double h2 = s.g.hr() * s.g.hr();
    for (double x : d.v) CHECK(std::abs(x) < 5 * h2);
}

TEST_CASE("phantom pairs: hypothesis flags and boundary equality") {
    Setup s;
    auto p = gradient_pair(s.m, s.g, s.tg);
    CHECK(p.gradient_pair);
    CHECK(p.equal_on_boundary);
    CHECK(p.psi.boundary_sup() == 0.0);
    // difference vanishes on the spatial boundary
    for (int kt = 0; kt <= s.tg.nt; ++kt)
        for (int i = 0; i < s.g.n1; ++i)
            for (int j = 0; j < s.g.nr; ++j)
                for (int k = 0; k < s.g.nth; ++k)
                    if (s.g.boundary(i, j, k)) {
                        CHECK(p.c1.A1(kt, i, j, k) == p.c2.A1(kt, i, j, k));
                        CHECK(p.c1.Ar(kt, i, j, k) == p.c2.Ar(kt, i, j, k));
                        CHECK(p.c1.Ath(kt, i, j, k) == p.c2.Ath(kt, i, j, k));
                    }

    auto pn = nongradient_pair(s.m, s.g, s.tg);
    CHECK_FALSE(pn.gradient_pair);
    // its difference has an order-one curl somewhere
    CoefficientField diff(s.g, s.tg);
    for (std::size_t n = 0; n < diff.Ar.v.size(); ++n)
        diff.Ar.v[n] = pn.c2.Ar.v[n] - pn.c1.Ar.v[n];
    RealField3 w = curl_x1r(diff, s.tg.nt / 2);
    double mx = 0;
    for (double x : w.v) mx = std::max(mx, std::abs(x));
    CHECK(mx > 0.01);

    auto pq = q_pair(s.m, s.g, s.tg);
    double qd = 0;
    for (std::size_t n = 0; n < pq.c1.q.v.size(); ++n)
        qd = std::max(qd, std::abs(pq.c2.q.v[n] - pq.c1.q.v[n]));
    CHECK(qd > 0.01);
    for (std::size_t n = 0; n < pq.c1.A1.v.size(); ++n) {
        CHECK(pq.c1.A1.v[n] == pq.c2.A1.v[n]);
        CHECK(pq.c1.Ar.v[n] == pq.c2.Ar.v[n]);
    }
}
