#include "mcd/operators.hpp"
#include "mcd/fd.hpp"
#include "mcd/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace mcd {

ConjProfile ConjProfile::reversed() const {
    ConjProfile out = *this;
    for (auto& v : out.g1.v) v = -v;
    for (auto& v : out.gr.v) v = -v;
    for (auto& v : out.gth.v) v = -v;
    for (auto& v : out.lap.v) v = -v;
    // d_tau(-rho(T-tau)) = +d_t rho
    return out;
}

ConjProfile profile_phi(const SpaceGrid& g, double lambda, double beta, double s,
                        double ell, int sign) {
    ConjProfile p;
    p.active = true;
    p.dt_rho = double(sign) * lambda * lambda * beta * beta;
    p.g1 = Field3(g);
    p.gr = Field3(g);
    p.gth = Field3(g);
    p.lap = Field3(g);
    for (int i = 0; i < g.n1; ++i) {
        double d1 = sign * (lambda - s * (g.x1(i) + 2 * ell));
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) {
                p.g1(i, j, k) = d1;
                p.lap(i, j, k) = sign * (-s);
            }
    }
    return p;
}

namespace {

void add_psi(ConjProfile& p, const ProductMetric& m, const SpaceGrid& g, double lambda,
             double beta, int psi_sign, const std::array<double, 2>& y0) {
    double c = std::sqrt(1.0 - beta * beta);
    bool own_center = std::abs(y0[0] - m.chart.y0[0]) < 1e-14 &&
                      std::abs(y0[1] - m.chart.y0[1]) < 1e-14;
    if (!own_center && m.chart.kind != MetricKind::EuclideanPolar)
        throw std::invalid_argument("profile: off-center psi requires euclidean-polar chart");
    const cplx is = cplx(0, psi_sign);
    for (int j = 0; j < g.nr; ++j)
        for (int k = 0; k < g.nth; ++k) {
            double r = g.r(j), th = g.th(k);
            double dpsidr, dpsidth, lap;
            if (own_center) {
                // psi = lam c r in the chart's own polar normal coordinates
                dpsidr = lambda * c;
                dpsidth = 0.0;
                lap = lambda * c * m.chart.dPdr(r, th) / (2 * m.chart.P(r, th));
            } else {
                auto pt = m.chart.cart(r, th);
                double dx = pt[0] - y0[0], dy = pt[1] - y0[1];
                double rk = std::hypot(dx, dy);
                double ex = dx / rk, ey = dy / rk;
                double er_x = std::cos(th), er_y = std::sin(th);
                double eth_x = -std::sin(th), eth_y = std::cos(th);
                dpsidr = lambda * c * (ex * er_x + ey * er_y);
                dpsidth = lambda * c * r * (ex * eth_x + ey * eth_y);
                lap = lambda * c / rk;
            }
            for (int i = 0; i < g.n1; ++i) {
                p.gr(i, j, k) += is * dpsidr;
                p.gth(i, j, k) += is * dpsidth;
                p.lap(i, j, k) += is * lap;
            }
        }
}

} // namespace

ConjProfile profile_phi_psi(const ProductMetric& m, const SpaceGrid& g, double lambda,
                            double beta, double s, int phi_sign, int psi_sign,
                            const std::array<double, 2>& y0) {
    ConjProfile p = profile_phi(g, lambda, beta, s, m.ell, phi_sign);
    add_psi(p, m, g, lambda, beta, psi_sign, y0);
    return p;
}

ConjProfile profile_psi(const ProductMetric& m, const SpaceGrid& g, double lambda,
                        double beta, int psi_sign, const std::array<double, 2>& y0) {
    ConjProfile p;
    p.active = true;
    p.dt_rho = 0.0;
    p.g1 = Field3(g);
    p.gr = Field3(g);
    p.gth = Field3(g);
    p.lap = Field3(g);
    add_psi(p, m, g, lambda, beta, psi_sign, y0);
    return p;
}

SpatialOp build_spatial_op(const ProductMetric& m, const CoefficientField& c, int kt,
                           const OpBuild& opts) {
    const SpaceGrid& g = *c.g;
    SpatialOp op;
    op.g = &g;
    op.invP = RealField3(g);
    op.beta1 = Field3(g);
    op.betar = Field3(g);
    op.betath = Field3(g);
    op.z = Field3(g);

    const double asign = opts.negate_A ? -1.0 : 1.0;
    RealField3 div = divergence(m, c, kt);
    RealField3 n2 = a_norm2(m, c, kt);
    const cplx I(0, 1);
    const ConjProfile* pr = (opts.profile && opts.profile->active) ? opts.profile : nullptr;

    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) {
                double r = g.r(j), th = g.th(k);
                double P = m.chart.P(r, th);
                double dPdr = m.chart.dPdr(r, th);
                double dPdth = m.chart.dPdth(r, th);
                op.invP(i, j, k) = 1.0 / P;

                double a1 = asign * c.A1(kt, i, j, k);
                double ar = asign * c.Ar(kt, i, j, k);
                double ath = asign * c.Ath(kt, i, j, k);
                cplx q = c.q(kt, i, j, k);
                if (opts.conj_q) q = std::conj(q);

                cplx b1 = 2.0 * I * a1;  // sqrt(b) is x1-independent
                cplx br = dPdr / (2 * P) + 2.0 * I * ar;
                cplx bth = -dPdth / (2 * P * P) + 2.0 * I * ath / P;
                cplx z = -I * (asign * div(i, j, k)) + n2(i, j, k) + q;

                if (pr) {
                    cplx r1 = pr->g1(i, j, k), rr = pr->gr(i, j, k), rth = pr->gth(i, j, k);
                    b1 += 2.0 * r1;
                    br += 2.0 * rr;
                    bth += 2.0 * rth / P;
                    cplx gradsq = r1 * r1 + rr * rr + rth * rth / P;
                    cplx adotrho = a1 * r1 + ar * rr + ath * rth / P;
                    z += pr->dt_rho - gradsq - pr->lap(i, j, k) - 2.0 * I * adotrho;
                }

                op.beta1(i, j, k) = b1;
                op.betar(i, j, k) = br;
                op.betath(i, j, k) = bth;
                op.z(i, j, k) = z;
            }

    // centered stencil arrays
    op.cc = Field3(g);
    op.cxm = Field3(g);
    op.cxp = Field3(g);
    op.crm = Field3(g);
    op.crp = Field3(g);
    op.ctm = Field3(g);
    op.ctp = Field3(g);
    const double ih1 = 1.0 / (g.h1() * g.h1()), ihr = 1.0 / (g.hr() * g.hr());
    const double ihth = 1.0 / (g.hth() * g.hth());
    const double d1 = 1.0 / (2 * g.h1()), dr = 1.0 / (2 * g.hr()), dth = 1.0 / (2 * g.hth());
    for (std::size_t n = 0; n < g.size(); ++n) {
        double iP = op.invP.v[n];
        op.cc.v[n] = 2 * ih1 + 2 * ihr + 2 * iP * ihth + op.z.v[n];
        op.cxm.v[n] = -ih1 + op.beta1.v[n] * d1;
        op.cxp.v[n] = -ih1 - op.beta1.v[n] * d1;
        op.crm.v[n] = -ihr + op.betar.v[n] * dr;
        op.crp.v[n] = -ihr - op.betar.v[n] * dr;
        op.ctm.v[n] = -iP * ihth + op.betath.v[n] * dth;
        op.ctp.v[n] = -iP * ihth - op.betath.v[n] * dth;
    }
    return op;
}

void SpatialOp::apply_interior(const cplx* u, cplx* out) const {
    const SpaceGrid& grid = *g;
    const std::ptrdiff_t sx = std::ptrdiff_t(grid.nr) * grid.nth;
    const std::ptrdiff_t sy = grid.nth;
    const auto& k = kernels::active();
    for (int i = 1; i < grid.n1 - 1; ++i)
        for (int j = 1; j < grid.nr - 1; ++j) {
            std::size_t lo = grid.idx(i, j, 1);
            std::size_t hi = grid.idx(i, j, grid.nth - 1);
            k.stencil7(out, u, cc.data(), cxm.data(), cxp.data(), crm.data(), crp.data(),
                       ctm.data(), ctp.data(), lo, hi, sx, sy);
        }
}

cplx SpatialOp::apply_at(const Field3& u, int i, int j, int k) const {
    cplx lap = fd2(u, Dir::X1, i, j, k) + fd2(u, Dir::R, i, j, k) +
               invP(i, j, k) * fd2(u, Dir::Th, i, j, k);
    cplx conv = beta1(i, j, k) * fd1(u, Dir::X1, i, j, k) +
                betar(i, j, k) * fd1(u, Dir::R, i, j, k) +
                betath(i, j, k) * fd1(u, Dir::Th, i, j, k);
    return -lap - conv + z(i, j, k) * u(i, j, k);
}

Field4 apply_L(const ProductMetric& m, const CoefficientField& c, const Field4& u,
               const OpBuild& opts) {
    const SpaceGrid& g = *u.g;
    const TimeGrid& tg = *u.tg;
    Field4 out(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        SpatialOp op = build_spatial_op(m, c, kt, opts);
        Field3 slice(g);
        std::copy(u.slice(kt), u.slice(kt) + g.size(), slice.v.begin());
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k)
                    out(kt, i, j, k) = fdt(u, kt, i, j, k) + op.apply_at(slice, i, j, k);
    }
    return out;
}

Field4 apply_L_transpose(const ProductMetric& m, const CoefficientField& c, const Field4& u) {
    const SpaceGrid& g = *u.g;
    const TimeGrid& tg = *u.tg;
    OpBuild opts;
    opts.negate_A = true;
    Field4 out(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        SpatialOp op = build_spatial_op(m, c, kt, opts);
        Field3 slice(g);
        std::copy(u.slice(kt), u.slice(kt) + g.size(), slice.v.begin());
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k)
                    out(kt, i, j, k) = -fdt(u, kt, i, j, k) + op.apply_at(slice, i, j, k);
    }
    return out;
}

CoefficientField reversed_negA(const CoefficientField& c) {
    CoefficientField out(*c.g, *c.tg);
    int nt = c.tg->nt;
    std::size_t ns = c.g->size();
    for (int kt = 0; kt <= nt; ++kt) {
        int src = nt - kt;
        for (std::size_t n = 0; n < ns; ++n) {
            out.A1.slice(kt)[n] = -c.A1.slice(src)[n];
            out.Ar.slice(kt)[n] = -c.Ar.slice(src)[n];
            out.Ath.slice(kt)[n] = -c.Ath.slice(src)[n];
            out.q.slice(kt)[n] = c.q.slice(src)[n];
        }
    }
    return out;
}

Field4 time_reversed(const Field4& f) {
    Field4 out(*f.g, *f.tg);
    int nt = f.tg->nt;
    std::size_t ns = f.g->size();
    for (int kt = 0; kt <= nt; ++kt)
        std::copy(f.slice(nt - kt), f.slice(nt - kt) + ns, out.slice(kt));
    return out;
}

} // namespace mcd
