#include "mcd/coefficients.hpp"
#include "mcd/fd.hpp"

#include <cmath>
#include <stdexcept>

namespace mcd {

CoefficientField CoefficientField::sample(const SpaceGrid& grid, const TimeGrid& time,
                                          const ScalarFn& a1, const ScalarFn& ar,
                                          const ScalarFn& ath, const ScalarFn& qre,
                                          const ScalarFn& qim) {
    CoefficientField c(grid, time);
    for (int kt = 0; kt <= time.nt; ++kt) {
        double t = time.t(kt);
        for (int i = 0; i < grid.n1; ++i)
            for (int j = 0; j < grid.nr; ++j)
                for (int k = 0; k < grid.nth; ++k) {
                    double x1 = grid.x1(i), r = grid.r(j), th = grid.th(k);
                    if (a1) c.A1(kt, i, j, k) = a1(t, x1, r, th);
                    if (ar) c.Ar(kt, i, j, k) = ar(t, x1, r, th);
                    if (ath) c.Ath(kt, i, j, k) = ath(t, x1, r, th);
                    double re = qre ? qre(t, x1, r, th) : 0.0;
                    double im = qim ? qim(t, x1, r, th) : 0.0;
                    c.q(kt, i, j, k) = cplx(re, im);
                }
    }
    return c;
}

void CoefficientField::check_finite() const {
    for (double x : A1.v)
        if (!std::isfinite(x)) throw std::runtime_error("coefficients: non-finite A1");
    for (double x : Ar.v)
        if (!std::isfinite(x)) throw std::runtime_error("coefficients: non-finite Ar");
    for (double x : Ath.v)
        if (!std::isfinite(x)) throw std::runtime_error("coefficients: non-finite Ath");
    for (cplx z : q.v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::runtime_error("coefficients: non-finite q");
}

GaugeFunction GaugeFunction::sample(const SpaceGrid& grid, const TimeGrid& time,
                                    const ScalarFn& f) {
    GaugeFunction g(grid, time);
    for (int kt = 0; kt <= time.nt; ++kt)
        for (int i = 0; i < grid.n1; ++i)
            for (int j = 0; j < grid.nr; ++j)
                for (int k = 0; k < grid.nth; ++k)
                    g.psi(kt, i, j, k) = f(time.t(kt), grid.x1(i), grid.r(j), grid.th(k));
    return g;
}

double GaugeFunction::boundary_sup() const {
    double s = 0;
    for (int kt = 0; kt <= tg->nt; ++kt)
        for (int i = 0; i < g->n1; ++i)
            for (int j = 0; j < g->nr; ++j)
                for (int k = 0; k < g->nth; ++k)
                    if (g->boundary(i, j, k))
                        s = std::max(s, std::abs(psi(kt, i, j, k)));
    return s;
}

namespace {
// copy one time slice of a real space-time component into a Field3
RealField3 slice_of(const RealField4& f, int kt) {
    RealField3 out(*f.g);
    const double* src = f.slice(kt);
    std::copy(src, src + f.g->size(), out.v.begin());
    return out;
}
} // namespace

RealField3 divergence(const ProductMetric& m, const CoefficientField& c, int kt) {
    const SpaceGrid& g = *c.g;
    RealField3 w1(g), wr(g), wth(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) {
                double r = g.r(j), th = g.th(k);
                double sq = m.chart.sqrtb(r, th);
                double P = m.chart.P(r, th);
                w1(i, j, k) = sq * c.A1(kt, i, j, k);
                wr(i, j, k) = sq * c.Ar(kt, i, j, k);
                wth(i, j, k) = sq / P * c.Ath(kt, i, j, k);
            }
    RealField3 out(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) {
                double sq = m.chart.sqrtb(g.r(j), g.th(k));
                out(i, j, k) = (fd1(w1, Dir::X1, i, j, k) + fd1(wr, Dir::R, i, j, k) +
                                fd1(wth, Dir::Th, i, j, k)) / sq;
            }
    return out;
}

RealField3 a_norm2(const ProductMetric& m, const CoefficientField& c, int kt) {
    const SpaceGrid& g = *c.g;
    RealField3 out(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) {
                double P = m.chart.P(g.r(j), g.th(k));
                double a1 = c.A1(kt, i, j, k), ar = c.Ar(kt, i, j, k), ath = c.Ath(kt, i, j, k);
                out(i, j, k) = a1 * a1 + ar * ar + ath * ath / P;
            }
    return out;
}

Field3 q_tilde(const ProductMetric& m, const CoefficientField& c, int kt) {
    const SpaceGrid& g = *c.g;
    RealField3 div = divergence(m, c, kt);
    RealField3 n2 = a_norm2(m, c, kt);
    Field3 out(g);
    const cplx* qs = c.q.slice(kt);
    for (std::size_t n = 0; n < g.size(); ++n)
        out.v[n] = qs[n] + cplx(0, 1) * div.v[n] - n2.v[n];
    return out;
}

CoefficientField apply_gauge(const CoefficientField& c, const GaugeFunction& psi) {
    CoefficientField out = c;
    const SpaceGrid& g = *c.g;
    for (int kt = 0; kt <= c.tg->nt; ++kt) {
        RealField3 p = slice_of(psi.psi, kt);
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    out.A1(kt, i, j, k) += fd1(p, Dir::X1, i, j, k);
                    out.Ar(kt, i, j, k) += fd1(p, Dir::R, i, j, k);
                    out.Ath(kt, i, j, k) += fd1(p, Dir::Th, i, j, k);
                }
    }
    return out;
}

RealField3 curl_x1r(const CoefficientField& c, int kt) {
    const SpaceGrid& g = *c.g;
    RealField3 a1 = slice_of(c.A1, kt), ar = slice_of(c.Ar, kt);
    RealField3 out(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k)
                out(i, j, k) = fd1(ar, Dir::X1, i, j, k) - fd1(a1, Dir::R, i, j, k);
    return out;
}

double bump01(double s) {
    double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s2));
}

double bump(double x, double c, double w) { return bump01((x - c) / w); }

double dbump(double x, double c, double w) {
    double s = (x - c) / w;
    double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    double d = 1.0 - s2;
    return bump01(s) * (-2.0 * s / (d * d)) / w;
}

namespace {
double expm(double x) { return x > 0 ? std::exp(-1.0 / x) : 0.0; }
double dexpm(double x) { return x > 0 ? std::exp(-1.0 / x) / (x * x) : 0.0; }
} // namespace

double smooth_step(double x) {
    double a = expm(x), b = expm(1.0 - x);
    return a / (a + b);
}

double plateau(double x, double a, double b, double delta) {
    return smooth_step((x - a) / delta) * smooth_step((b - x) / delta);
}

double dplateau(double x, double a, double b, double delta) {
    auto dstep = [](double s) {
        double u = expm(s), v = expm(1.0 - s);
        if (u + v == 0) return 0.0;
        double du = dexpm(s), dv = -dexpm(1.0 - s);
        return (du * (u + v) - u * (du + dv)) / ((u + v) * (u + v));
    };
    return dstep((x - a) / delta) / delta * smooth_step((b - x) / delta) -
           smooth_step((x - a) / delta) * dstep((b - x) / delta) / delta;
}

namespace {

struct Box {
    double rmid, rhalf, thmid, thhalf, ell, T;
};

Box box_of(const ProductMetric& m, const TimeGrid& tg) {
    return {0.5 * (m.chart.rmin + m.chart.rmax), 0.5 * (m.chart.rmax - m.chart.rmin),
            0.5 * (m.chart.thmin + m.chart.thmax), 0.5 * (m.chart.thmax - m.chart.thmin),
            m.ell, tg.T};
}

CoefficientField background(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                            const PhantomConfig& cfg) {
    Box bx = box_of(m, tg);
    double ba = cfg.background_a, bq = cfg.background_q;
    return CoefficientField::sample(
        g, tg,
        [=](double, double x1, double r, double th) {
            return ba * std::cos(th) * std::exp(-x1 * x1) * (r / bx.rmid);
        },
        [=](double t, double x1, double r, double) {
            return ba * 0.5 * std::sin(0.5 * x1) * std::cos(M_PI * t / bx.T) *
                   bump(r, bx.rmid, 1.2 * bx.rhalf);
        },
        [=](double, double x1, double r, double) { return ba * 0.4 * std::sin(x1) * r; },
        [=](double t, double x1, double r, double th) {
            return bq * (0.6 + 0.4 * std::cos(th) * std::sin(M_PI * t / bx.T)) *
                   bump(x1, 0.0, 1.5 * bx.ell) * bump(r, bx.rmid, 1.5 * bx.rhalf);
        });
}

} // namespace

PhantomPair gradient_pair(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                          const PhantomConfig& cfg) {
    Box bx = box_of(m, tg);
    double amp = cfg.amplitude;
    double thmin = m.chart.thmin, thmax = m.chart.thmax;
    double del = 0.2 * (thmax - thmin);
    auto tau = [=](double t) {
        return cfg.time_dependent_gauge ? bump(t, 0.5 * bx.T, 0.45 * bx.T) : 1.0;
    };
    auto psi_fn = [=](double t, double x1, double r, double th) {
        return amp * tau(t) * bump(x1, 0.0, 0.8 * bx.ell) * bump(r, bx.rmid, 0.8 * bx.rhalf) *
               plateau(th, thmin, thmax, del);
    };

    PhantomPair p;
    p.c1 = background(m, g, tg, cfg);
    p.c2 = p.c1;
    // analytic spatial gradient of psi
    for (int kt = 0; kt <= tg.nt; ++kt) {
        double t = tg.t(kt);
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double x1 = g.x1(i), r = g.r(j), th = g.th(k);
                    double b1 = bump(x1, 0.0, 0.8 * bx.ell);
                    double br = bump(r, bx.rmid, 0.8 * bx.rhalf);
                    double pth = plateau(th, thmin, thmax, del);
                    p.c2.A1(kt, i, j, k) +=
                        amp * tau(t) * dbump(x1, 0.0, 0.8 * bx.ell) * br * pth;
                    p.c2.Ar(kt, i, j, k) +=
                        amp * tau(t) * b1 * dbump(r, bx.rmid, 0.8 * bx.rhalf) * pth;
                    p.c2.Ath(kt, i, j, k) +=
                        amp * tau(t) * b1 * br * dplateau(th, thmin, thmax, del);
                }
    }
    p.psi = GaugeFunction::sample(g, tg, psi_fn);
    p.gradient_pair = true;
    p.equal_on_boundary = true;
    return p;
}

PhantomPair nongradient_pair(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                             const PhantomConfig& cfg) {
    Box bx = box_of(m, tg);
    double amp = cfg.amplitude;
    PhantomPair p;
    p.c1 = background(m, g, tg, cfg);
    p.c2 = p.c1;
    for (int kt = 0; kt <= tg.nt; ++kt) {
        double t = tg.t(kt);
        double ct = cfg.time_dependent_gauge ? (0.4 + 0.6 * bump(t, 0.5 * bx.T, 0.45 * bx.T)) : 1.0;
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double x1 = g.x1(i), r = g.r(j), th = g.th(k);
                    double cut = bump(x1, 0.0, 0.9 * bx.ell) * bump(r, bx.rmid, 0.9 * bx.rhalf) *
                                 plateau(th, m.chart.thmin, m.chart.thmax,
                                         0.2 * (m.chart.thmax - m.chart.thmin));
                    p.c2.Ar(kt, i, j, k) += amp * ct * x1 * cut / bx.ell;
                }
    }
    p.gradient_pair = false;
    p.equal_on_boundary = true;
    return p;
}

PhantomPair q_pair(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                   const PhantomConfig& cfg) {
    Box bx = box_of(m, tg);
    double amp = cfg.amplitude;
    PhantomPair p;
    p.c1 = background(m, g, tg, cfg);
    p.c2 = p.c1;
    for (int kt = 0; kt <= tg.nt; ++kt) {
        double t = tg.t(kt);
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double x1 = g.x1(i), r = g.r(j);
                    p.c2.q(kt, i, j, k) += amp * bump(t, 0.5 * bx.T, 0.4 * bx.T) *
                                           bump(x1, 0.0, 0.7 * bx.ell) *
                                           bump(r, bx.rmid, 0.7 * bx.rhalf);
                }
    }
    p.gradient_pair = false;
    p.equal_on_boundary = true;
    return p;
}

PhantomPair equal_pair(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                       const PhantomConfig& cfg) {
    PhantomPair p;
    p.c1 = background(m, g, tg, cfg);
    p.c2 = p.c1;
    p.gradient_pair = true;  // trivially a gradient pair (Psi = 0)
    p.equal_on_boundary = true;
    return p;
}

} // namespace mcd
