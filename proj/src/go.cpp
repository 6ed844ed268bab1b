#include "mcd/go.hpp"
#include "mcd/fd.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mcd {

cplx GOCutoff::operator()(double t, double T) const {
    double base;
    if (kind == CutoffKind::SmoothBump) {
        base = bump(t, center_frac * T, width_frac * T);
    } else {
        double u = t * (T - t);
        base = (u <= 0) ? 0.0 : 256.0 * u * u * u * u / std::pow(T, 8);
    }
    if (omega == 0.0) return base;
    return base * std::exp(cplx(0, omega * t));
}

cplx GOCutoff::dt(double t, double T) const {
    double base, dbase;
    if (kind == CutoffKind::SmoothBump) {
        base = bump(t, center_frac * T, width_frac * T);
        dbase = dbump(t, center_frac * T, width_frac * T);
    } else {
        double u = t * (T - t);
        base = (u <= 0) ? 0.0 : 256.0 * u * u * u * u / std::pow(T, 8);
        dbase = (u <= 0) ? 0.0 : 256.0 * 4 * u * u * u * (T - 2 * t) / std::pow(T, 8);
    }
    if (omega == 0.0) return dbase;
    cplx ph = std::exp(cplx(0, omega * t));
    return ph * (dbase + cplx(0, omega) * base);
}

RayChart make_ray_chart(const ProductMetric& m, const SpaceGrid& g,
                        const std::array<double, 2>& y0) {
    RayChart rc;
    rc.y0 = y0;
    rc.own_center = std::abs(y0[0] - m.chart.y0[0]) < 1e-14 &&
                    std::abs(y0[1] - m.chart.y0[1]) < 1e-14;
    if (!rc.own_center && m.chart.kind != MetricKind::EuclideanPolar)
        throw std::invalid_argument("ray chart: off-center family needs euclidean-polar metric");
    rc.rk = RealField3(g);
    rc.cosx = RealField3(g);
    rc.sinx = RealField3(g);
    rc.thk = RealField3(g);
    for (int j = 0; j < g.nr; ++j)
        for (int k = 0; k < g.nth; ++k) {
            double r = g.r(j), th = g.th(k);
            double rkv, cosv, sinv, thv;
            if (rc.own_center) {
                rkv = r;
                cosv = 1.0;
                sinv = 0.0;
                thv = th;
            } else {
                auto pt = m.chart.cart(r, th);
                double dx = pt[0] - y0[0], dy = pt[1] - y0[1];
                rkv = std::hypot(dx, dy);
                double ex = dx / rkv, ey = dy / rkv;
                cosv = ex * std::cos(th) + ey * std::sin(th);
                sinv = -ex * std::sin(th) + ey * std::cos(th);
                thv = std::atan2(dy, dx);
            }
            for (int i = 0; i < g.n1; ++i) {
                rc.rk(i, j, k) = rkv;
                rc.cosx(i, j, k) = cosv;
                rc.sinx(i, j, k) = sinv;
                rc.thk(i, j, k) = thv;
            }
        }
    return rc;
}

RealField3 eikonal_phase(const ProductMetric& m, const SpaceGrid& g, double lambda,
                         double beta, const std::array<double, 2>& y0) {
    RayChart rc = make_ray_chart(m, g, y0);
    double c = std::sqrt(1.0 - beta * beta);
    RealField3 psi(g);
    for (std::size_t n = 0; n < g.size(); ++n) psi.v[n] = lambda * c * rc.rk.v[n];
    return psi;
}

RealField3 eikonal_gradsq(const ProductMetric& m, const SpaceGrid& g, const RealField3& psi) {
    RealField3 out(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) {
                double P = m.chart.P(g.r(j), g.th(k));
                double d1 = fd1(psi, Dir::X1, i, j, k);
                double dr = fd1(psi, Dir::R, i, j, k);
                double dth = fd1(psi, Dir::Th, i, j, k);
                out(i, j, k) = d1 * d1 + dr * dr + dth * dth / P;
            }
    return out;
}

namespace {

// Dense complex LU with partial pivoting for the small r-column systems.
struct DenseLU {
    int n = 0;
    std::vector<cplx> a;
    std::vector<int> piv;

    void factor(std::vector<cplx> mat, int n_) {
        n = n_;
        a = std::move(mat);
        piv.resize(n);
        for (int col = 0; col < n; ++col) {
            int p = col;
            double best = std::abs(a[std::size_t(col) * n + col]);
            for (int row = col + 1; row < n; ++row) {
                double v = std::abs(a[std::size_t(row) * n + col]);
                if (v > best) {
                    best = v;
                    p = row;
                }
            }
            if (best == 0) throw std::runtime_error("phase march: singular column system");
            piv[col] = p;
            if (p != col)
                for (int k = 0; k < n; ++k)
                    std::swap(a[std::size_t(col) * n + k], a[std::size_t(p) * n + k]);
            cplx d = a[std::size_t(col) * n + col];
            for (int row = col + 1; row < n; ++row) {
                cplx f = a[std::size_t(row) * n + col] / d;
                a[std::size_t(row) * n + col] = f;
                for (int k = col + 1; k < n; ++k)
                    a[std::size_t(row) * n + k] -= f * a[std::size_t(col) * n + k];
            }
        }
    }

    void solve(std::vector<cplx>& x) const {
        for (int col = 0; col < n; ++col) {
            if (piv[col] != col) std::swap(x[col], x[piv[col]]);
            for (int row = col + 1; row < n; ++row)
                x[row] -= a[std::size_t(row) * n + col] * x[col];
        }
        for (int row = n - 1; row >= 0; --row) {
            for (int k = row + 1; k < n; ++k) x[row] -= a[std::size_t(row) * n + k] * x[k];
            x[row] /= a[std::size_t(row) * n + row];
        }
    }
};

// I + i c h1 D_r with centered D_r and one-sided closure at the ends.
DenseLU march_matrix(int nr, double hr, double h1, double c) {
    std::vector<cplx> M(std::size_t(nr) * nr, cplx(0));
    const cplx f = cplx(0, c * h1);
    auto at = [&](int r, int col) -> cplx& { return M[std::size_t(r) * nr + col]; };
    for (int r = 0; r < nr; ++r) at(r, r) = 1.0;
    for (int r = 1; r < nr - 1; ++r) {
        at(r, r - 1) += f * (-1.0 / (2 * hr));
        at(r, r + 1) += f * (1.0 / (2 * hr));
    }
    at(0, 0) += f * (-3.0 / (2 * hr));
    at(0, 1) += f * (4.0 / (2 * hr));
    at(0, 2) += f * (-1.0 / (2 * hr));
    at(nr - 1, nr - 1) += f * (3.0 / (2 * hr));
    at(nr - 1, nr - 2) += f * (-4.0 / (2 * hr));
    at(nr - 1, nr - 3) += f * (1.0 / (2 * hr));
    DenseLU lu;
    lu.factor(std::move(M), nr);
    return lu;
}

// bilinear interpolation of a (r, th)-slice stored with th fastest
double bilin(const double* sl, const SpaceGrid& g, int i, double r, double th) {
    double fr = (r - g.rmin) / g.hr();
    double fth = (th - g.thmin) / g.hth();
    fr = std::min(std::max(fr, 0.0), double(g.nr - 1));
    fth = std::min(std::max(fth, 0.0), double(g.nth - 1));
    int j = std::min(int(fr), g.nr - 2);
    int k = std::min(int(fth), g.nth - 2);
    double a = fr - j, b = fth - k;
    auto at = [&](int jj, int kk) { return sl[g.idx(i, jj, kk)]; };
    return (1 - a) * (1 - b) * at(j, k) + a * (1 - b) * at(j + 1, k) +
           (1 - a) * b * at(j, k + 1) + a * b * at(j + 1, k + 1);
}

} // namespace

Field4 phase_correction(const ProductMetric& m, const CoefficientField& c, GOSign sign,
                        double beta, const RayChart& rc) {
    const SpaceGrid& g = *c.g;
    const TimeGrid& tg = *c.tg;
    const double cc = std::sqrt(1.0 - beta * beta);
    const double sgn = (sign == GOSign::Growing) ? 1.0 : -1.0;
    Field4 Phi(g, tg);

    if (rc.own_center) {
        DenseLU lu = march_matrix(g.nr, g.hr(), g.h1(), cc);
        std::vector<cplx> col(g.nr);
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (int k = 0; k < g.nth; ++k) {
                for (int j = 0; j < g.nr; ++j) Phi(kt, 0, j, k) = 0.0;  // inflow edge
                for (int i = 0; i + 1 < g.n1; ++i) {
                    for (int j = 0; j < g.nr; ++j) {
                        cplx S = -sgn * (c.A1(kt, i + 1, j, k) +
                                         cplx(0, cc) * c.Ar(kt, i + 1, j, k));
                        col[j] = Phi(kt, i, j, k) + g.h1() * S;
                    }
                    lu.solve(col);
                    for (int j = 0; j < g.nr; ++j) Phi(kt, i + 1, j, k) = col[j];
                }
            }
        return Phi;
    }

    // off-center family: march on an auxiliary polar rectangle about y0 and
    // interpolate the result back to the grid nodes
    double rkmin = 1e300, rkmax = -1e300, tkmin = 1e300, tkmax = -1e300;
    for (int j = 0; j < g.nr; ++j)
        for (int k = 0; k < g.nth; ++k) {
            rkmin = std::min(rkmin, rc.rk(0, j, k));
            rkmax = std::max(rkmax, rc.rk(0, j, k));
            tkmin = std::min(tkmin, rc.thk(0, j, k));
            tkmax = std::max(tkmax, rc.thk(0, j, k));
        }
    double rpad = 0.02 * (rkmax - rkmin) + 1e-9, tpad = 0.02 * (tkmax - tkmin) + 1e-9;
    rkmin -= rpad;
    rkmax += rpad;
    tkmin -= tpad;
    tkmax += tpad;
    const int nrk = g.nr + 4, ntk = g.nth + 4;
    const double hrk = (rkmax - rkmin) / (nrk - 1);
    const double htk = (tkmax - tkmin) / (ntk - 1);

    DenseLU lu = march_matrix(nrk, hrk, g.h1(), cc);
    std::vector<cplx> col(nrk);
    std::vector<cplx> aux(std::size_t(g.n1) * nrk * ntk);
    auto aidx = [&](int i, int j, int k) { return (std::size_t(i) * nrk + j) * ntk + k; };

    for (int kt = 0; kt <= tg.nt; ++kt) {
        const double* a1s = c.A1.slice(kt);
        const double* ars = c.Ar.slice(kt);
        const double* aths = c.Ath.slice(kt);
        for (int k = 0; k < ntk; ++k) {
            double thk = tkmin + k * htk;
            for (int j = 0; j < nrk; ++j) aux[aidx(0, j, k)] = 0.0;
            for (int i = 0; i + 1 < g.n1; ++i) {
                for (int j = 0; j < nrk; ++j) {
                    double rk = rkmin + j * hrk;
                    double px = rc.y0[0] + rk * std::cos(thk);
                    double py = rc.y0[1] + rk * std::sin(thk);
                    double dx = px - m.chart.y0[0], dy = py - m.chart.y0[1];
                    double r = std::hypot(dx, dy);
                    double th = std::atan2(dy, dx);
                    double a1 = bilin(a1s, g, i + 1, r, th);
                    double ar = bilin(ars, g, i + 1, r, th);
                    double ath = bilin(aths, g, i + 1, r, th);
                    double rcl = std::min(std::max(r, g.rmin), g.rmax);
                    double ex = std::cos(thk), ey = std::sin(thk);
                    double cosv = ex * std::cos(th) + ey * std::sin(th);
                    double sinv = -ex * std::sin(th) + ey * std::cos(th);
                    double ark = ar * cosv + ath / rcl * sinv;
                    cplx S = -sgn * (a1 + cplx(0, cc) * ark);
                    col[j] = aux[aidx(i, j, k)] + g.h1() * S;
                }
                lu.solve(col);
                for (int j = 0; j < nrk; ++j) aux[aidx(i + 1, j, k)] = col[j];
            }
        }
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double fr = (rc.rk(i, j, k) - rkmin) / hrk;
                    double ft = (rc.thk(i, j, k) - tkmin) / htk;
                    int jj = std::min(std::max(int(fr), 0), nrk - 2);
                    int kk = std::min(std::max(int(ft), 0), ntk - 2);
                    double a = fr - jj, b = ft - kk;
                    Phi(kt, i, j, k) = (1 - a) * (1 - b) * aux[aidx(i, jj, kk)] +
                                       a * (1 - b) * aux[aidx(i, jj + 1, kk)] +
                                       (1 - a) * b * aux[aidx(i, jj, kk + 1)] +
                                       a * b * aux[aidx(i, jj + 1, kk + 1)];
                }
    }
    return Phi;
}

Field4 phase_residual(const ProductMetric& m, const CoefficientField& c, GOSign sign,
                      double beta, const RayChart& rc, const Field4& Phi) {
    (void)m;
    if (!rc.own_center)
        throw std::invalid_argument("phase_residual: only for the chart's own family");
    const SpaceGrid& g = *c.g;
    const TimeGrid& tg = *c.tg;
    const double cc = std::sqrt(1.0 - beta * beta);
    const double sgn = (sign == GOSign::Growing) ? 1.0 : -1.0;
    Field4 res(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        Field3 s3(g);
        std::copy(Phi.slice(kt), Phi.slice(kt) + g.size(), s3.v.begin());
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    cplx d1 = fd1(s3, Dir::X1, i, j, k);
                    cplx dr = fd1(s3, Dir::R, i, j, k);
                    res(kt, i, j, k) = d1 + cplx(0, cc) * dr +
                                       sgn * (c.A1(kt, i, j, k) +
                                              cplx(0, cc) * c.Ar(kt, i, j, k));
                }
    }
    return res;
}

Field4 amplitude(const ProductMetric& m, const GOParams& prm, const RayChart& rc,
                 const Field4& Phi) {
    const SpaceGrid& g = *Phi.g;
    const TimeGrid& tg = *Phi.tg;
    const double cc = std::sqrt(1.0 - prm.beta * prm.beta);
    Field4 T(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        cplx phit = prm.cutoff(tg.t(kt), tg.T);
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double b = rc.own_center ? m.chart.b(g.r(j), g.th(k))
                                             : rc.rk(i, j, k) * rc.rk(i, j, k);
                    cplx val = phit * std::exp(cplx(0, 1) * Phi(kt, i, j, k)) *
                               std::pow(b, -0.25) * prm.htheta(rc.thk(i, j, k));
                    if (prm.sign == GOSign::Growing) {
                        val *= std::exp(cplx(0, prm.mu * cc * g.x1(i))) *
                               std::exp(-prm.mu * rc.rk(i, j, k));
                    }
                    T(kt, i, j, k) = val;
                }
    }
    return T;
}

Field4 transport_residual(const ProductMetric& m, const CoefficientField& c,
                          const GOParams& prm, const RayChart& rc, const Field4& T_amp) {
    const SpaceGrid& g = *T_amp.g;
    const TimeGrid& tg = *T_amp.tg;
    const double cc = std::sqrt(1.0 - prm.beta * prm.beta);
    const double sgn = (prm.sign == GOSign::Growing) ? 1.0 : -1.0;
    Field4 res(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        Field3 s3(g);
        std::copy(T_amp.slice(kt), T_amp.slice(kt) + g.size(), s3.v.begin());
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double r = g.r(j), th = g.th(k);
                    double P = m.chart.P(r, th);
                    // analytic psi derivatives per unit lambda
                    double psr = cc * rc.cosx(i, j, k);
                    double psth = cc * r * rc.sinx(i, j, k);
                    double lappsi = rc.own_center ? cc * m.chart.dPdr(r, th) / (2 * P)
                                                  : cc / rc.rk(i, j, k);
                    cplx d1 = fd1(s3, Dir::X1, i, j, k);
                    cplx dr = fd1(s3, Dir::R, i, j, k);
                    cplx dth = fd1(s3, Dir::Th, i, j, k);
                    cplx gradpsi_dT = psr * dr + psth * dth / P;
                    double gradpsi_A =
                        psr * c.Ar(kt, i, j, k) + psth * c.Ath(kt, i, j, k) / P;
                    // (2 lam)^-1 of the transport operator; all terms are
                    // lambda-homogeneous so the result is lambda-free
                    res(kt, i, j, k) =
                        d1 + cplx(0, 1) * gradpsi_dT +
                        sgn * (cplx(0, 1) * c.A1(kt, i, j, k) * s3(i, j, k) -
                               gradpsi_A * s3(i, j, k)) +
                        cplx(0, 0.5) * lappsi * s3(i, j, k);
                }
    }
    return res;
}

ConjProfile go_profile(const ProductMetric& m, const SpaceGrid& g, const GOParams& prm) {
    return profile_phi_psi(m, g, prm.lambda, prm.beta, 0.0, +1, +1, prm.center);
}

void solve_remainder(const ProductMetric& m, const CoefficientField& c, GOAnsatz& a,
                     const SolveOptions& opt) {
    const SpaceGrid& g = *c.g;
    const TimeGrid& tg = *c.tg;
    ConjProfile prof = profile_phi(g, a.prm.lambda, a.prm.beta, 0.0, m.ell, +1);
    SolveOptions o = opt;
    o.profile = &prof;

    IBVPProblem p;
    p.metric = &m;
    p.coeffs = &c;

    Field4 src(g, tg);
    if (a.prm.sign == GOSign::Growing) {
        Field4 LT = apply_L(m, c, a.T_amp);
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (std::size_t n = 0; n < g.size(); ++n)
                src.slice(kt)[n] = -std::exp(cplx(0, a.psi.v[n])) * LT.slice(kt)[n];
        p.source = &src;
        Field4 w = solve_ibvp(p, g, tg, o, &a.stats);
        a.R = Field4(g, tg);
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (std::size_t n = 0; n < g.size(); ++n)
                a.R.slice(kt)[n] = std::exp(cplx(0, -a.psi.v[n])) * w.slice(kt)[n];
    } else {
        Field4 LTt = apply_L_transpose(m, c, a.T_amp);
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (std::size_t n = 0; n < g.size(); ++n)
                src.slice(kt)[n] = -std::exp(cplx(0, -a.psi.v[n])) * LTt.slice(kt)[n];
        p.source = &src;
        Field4 w = solve_transpose_fvp(p, g, tg, o, &a.stats);
        a.R = Field4(g, tg);
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (std::size_t n = 0; n < g.size(); ++n)
                a.R.slice(kt)[n] = std::exp(cplx(0, a.psi.v[n])) * w.slice(kt)[n];
    }
    a.residual_norm = spacetime_l2(m, g, tg, src);
}

GOAnsatz build_go(const ProductMetric& m, const CoefficientField& c, const GOParams& prm,
                  const SpaceGrid& g, const TimeGrid& tg, const SolveOptions& opt) {
    (void)tg;
    GOAnsatz a;
    a.prm = prm;
    a.chart = make_ray_chart(m, g, prm.center);
    a.psi = eikonal_phase(m, g, prm.lambda, prm.beta, prm.center);
    a.Phi = phase_correction(m, c, prm.sign, prm.beta, a.chart);
    a.T_amp = amplitude(m, prm, a.chart, a.Phi);
    solve_remainder(m, c, a, opt);
    return a;
}

double assembled_residual(const ProductMetric& m, const CoefficientField& c,
                          const GOAnsatz& a) {
    const SpaceGrid& g = *c.g;
    const TimeGrid& tg = *c.tg;
    ConjProfile rho = go_profile(m, g, a.prm);
    ConjProfile rho_rev;
    OpBuild ob;
    double tsign = 1.0;
    if (a.prm.sign == GOSign::Growing) {
        ob.profile = &rho;
    } else {
        rho_rev = rho.reversed();
        ob.profile = &rho_rev;
        ob.negate_A = true;
        tsign = -1.0;
    }
    Field4 U(g, tg);
    for (std::size_t n = 0; n < U.v.size(); ++n) U.v[n] = a.T_amp.v[n] + a.R.v[n];
    Field4 res(g, tg);
    for (int kt = 0; kt <= tg.nt; ++kt) {
        SpatialOp op = build_spatial_op(m, c, kt, ob);
        Field3 s3(g);
        std::copy(U.slice(kt), U.slice(kt) + g.size(), s3.v.begin());
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k)
                    res(kt, i, j, k) = tsign * fdt(U, kt, i, j, k) + op.apply_at(s3, i, j, k);
    }
    return spacetime_l2(m, g, tg, res);
}

} // namespace mcd
