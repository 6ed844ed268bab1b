#include "mcd/carleman.hpp"
#include "mcd/fd.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mcd {

CarlemanWeight::CarlemanWeight(double lambda_, double beta_, double s_, double ell_)
    : lambda(lambda_), beta(beta_), s(s_), ell(ell_) {
    if (!(beta > 1.0 / std::sqrt(3.0) && beta < 1.0))
        throw std::invalid_argument("CarlemanWeight: beta must lie in (1/sqrt(3), 1)");
    if (lambda < 0 || s < 0 || !(ell > 0))
        throw std::invalid_argument("CarlemanWeight: bad parameters");
}

WeightEval weight_eval(const CarlemanWeight& w, double t, double x1) {
    return {w.phi(t, x1), w.phi_s(t, x1), w.K(x1)};
}

ConjugatedParts conjugated_parts(const ProductMetric& m, const CoefficientField& c,
                                 const CarlemanWeight& w, const Field4& v) {
    const SpaceGrid& g = *v.g;
    const TimeGrid& tg = *v.tg;
    ConjugatedParts out{Field4(g, tg), Field4(g, tg), Field4(g, tg)};
    const cplx I(0, 1);

    for (int kt = 0; kt <= tg.nt; ++kt) {
        RealField3 div = divergence(m, c, kt);
        RealField3 n2 = a_norm2(m, c, kt);
        Field3 s3(g);
        std::copy(v.slice(kt), v.slice(kt) + g.size(), s3.v.begin());
        for (int i = 0; i < g.n1; ++i) {
            double x1 = g.x1(i);
            double conv = w.lambda - w.s * (x1 + 2 * w.ell);
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double r = g.r(j), th = g.th(k);
                    double P = m.chart.P(r, th);
                    double dPdr = m.chart.dPdr(r, th);
                    double dPdth = m.chart.dPdth(r, th);

                    cplx d1 = fd1(s3, Dir::X1, i, j, k);
                    cplx dr = fd1(s3, Dir::R, i, j, k);
                    cplx dth = fd1(s3, Dir::Th, i, j, k);
                    cplx lap_base = fd2(s3, Dir::R, i, j, k) + dPdr / (2 * P) * dr +
                                    fd2(s3, Dir::Th, i, j, k) / P -
                                    dPdth / (2 * P * P) * dth;
                    cplx vv = s3(i, j, k);

                    out.p1(kt, i, j, k) = fdt(v, kt, i, j, k) - 2.0 * conv * d1 + 4 * w.s * vv;
                    out.p2(kt, i, j, k) =
                        -fd2(s3, Dir::X1, i, j, k) - lap_base + (w.K(x1) - 3 * w.s) * vv;
                    // first/zeroth-order magnetic part, signs matching Eq. (1.2)
                    cplx adotgrad = c.A1(kt, i, j, k) * d1 + c.Ar(kt, i, j, k) * dr +
                                    c.Ath(kt, i, j, k) * dth / P;
                    out.p3(kt, i, j, k) =
                        -2.0 * I * adotgrad - 2.0 * I * conv * c.A1(kt, i, j, k) * vv +
                        (c.q(kt, i, j, k) - I * div(i, j, k) + n2(i, j, k)) * vv;
                }
        }
    }
    return out;
}

std::vector<Field4> carleman_samples(const SpaceGrid& g, const TimeGrid& tg, int count,
                                     unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<Field4> out;
    out.reserve(count);
    double ell = 0.5 * (g.x1max - g.x1min);
    double rmid = 0.5 * (g.rmin + g.rmax), rhalf = 0.5 * (g.rmax - g.rmin);
    double thmid = 0.5 * (g.thmin + g.thmax), thhalf = 0.5 * (g.thmax - g.thmin);
    for (int n = 0; n < count; ++n) {
        double amp = 0.5 + 1.5 * U(rng);
        int mode = 1 + int(2 * U(rng));  // 1 or 2 arches in x1: nonzero face flux
        double cr = rmid + 0.4 * rhalf * (2 * U(rng) - 1);
        double wr = (0.45 + 0.15 * U(rng)) * rhalf;
        double cth = thmid + 0.3 * thhalf * (2 * U(rng) - 1);
        double wth = (0.45 + 0.15 * U(rng)) * thhalf;
        Field4 v(g, tg);
        for (int kt = 0; kt <= tg.nt; ++kt) {
            double tf = tg.t(kt) / tg.T;
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.nr; ++j)
                    for (int k = 0; k < g.nth; ++k) {
                        double arch = std::sin(mode * M_PI * (g.x1(i) + ell) / (2 * ell));
                        v(kt, i, j, k) = amp * tf * arch * bump(g.r(j), cr, wr) *
                                         bump(g.th(k), cth, wth);
                    }
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

double st_wnorm2(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                 const Field4& f) {
    RealField3 w = volume_weights(m, g);
    double s = 0;
    for (int kt = 0; kt <= tg.nt; ++kt) {
        const cplx* p = f.slice(kt);
        double acc = 0;
        for (std::size_t n = 0; n < g.size(); ++n) acc += w.v[n] * std::norm(p[n]);
        s += tg.trapw(kt) * acc;
    }
    return s;
}

double grad_norm2_slice(const ProductMetric& m, const SpaceGrid& g, const Field3& s3) {
    RealField3 w = volume_weights(m, g);
    double acc = 0;
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k) {
                double P = m.chart.P(g.r(j), g.th(k));
                double gg = std::norm(fd1(s3, Dir::X1, i, j, k)) +
                            std::norm(fd1(s3, Dir::R, i, j, k)) +
                            std::norm(fd1(s3, Dir::Th, i, j, k)) / P;
                acc += w(i, j, k) * gg;
            }
    return acc;
}

Field3 slice(const Field4& f, int kt) {
    Field3 out(*f.g);
    std::copy(f.slice(kt), f.slice(kt) + f.g->size(), out.v.begin());
    return out;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = int(xs.size());
    for (int i = 0; i < n; ++i) {
        double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

BoundaryEstimateReport verify_boundary_estimate(const ProductMetric& m,
                                                const CoefficientField& c, double beta,
                                                const std::vector<double>& lambdas,
                                                const std::vector<Field4>& samples) {
    BoundaryEstimateReport rep;
    if (samples.empty() || lambdas.empty())
        throw std::invalid_argument("verify_boundary_estimate: empty inputs");
    const SpaceGrid& g = *samples[0].g;
    const TimeGrid& tg = *samples[0].tg;

    // admissibility: v(0,.) = 0 and v = 0 on the lateral boundary
    for (std::size_t si = 0; si < samples.size(); ++si) {
        const Field4& v = samples[si];
        for (std::size_t n = 0; n < g.size(); ++n)
            if (std::abs(v.slice(0)[n]) > 1e-13)
                throw std::invalid_argument("sample " + std::to_string(si) +
                                            " rejected: nonzero initial data");
        for (int kt = 0; kt <= tg.nt; ++kt)
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.nr; ++j)
                    for (int k = 0; k < g.nth; ++k)
                        if (g.boundary(i, j, k) && std::abs(v(kt, i, j, k)) > 1e-13)
                            throw std::invalid_argument("sample " + std::to_string(si) +
                                                        " rejected: nonzero lateral trace");
    }

    double max_ratio_prev = 0, max_ratio_last = 0, max_ratio = 0;
    std::vector<std::vector<double>> gains(samples.size()), zgains(samples.size());
    bool finite = true;
    double lam_prev = lambdas.size() > 1 ? lambdas[lambdas.size() - 2] : lambdas.back();

    for (std::size_t si = 0; si < samples.size(); ++si) {
        const Field4& v = samples[si];
        double v2 = st_wnorm2(m, g, tg, v);
        for (double lam : lambdas) {
            double s = lam / (3 * m.ell);
            CarlemanWeight w(lam, beta, s, m.ell);
            ConjugatedParts parts = conjugated_parts(m, c, w, v);
            Field4 Ps(g, tg);
            for (std::size_t n = 0; n < Ps.v.size(); ++n)
                Ps.v[n] = parts.p1.v[n] + parts.p2.v[n] + parts.p3.v[n];

            BoundaryEstimateRow row;
            row.sample = int(si);
            row.lambda = lam;
            row.s = s;
            row.Ps_norm2 = st_wnorm2(m, g, tg, Ps);
            row.zeroth = s * lam * lam * v2;

            double grad_st = 0;
            for (int kt = 0; kt <= tg.nt; ++kt)
                grad_st += tg.trapw(kt) * grad_norm2_slice(m, g, slice(v, kt));
            row.grad = s * grad_st;
            row.gradT = grad_norm2_slice(m, g, slice(v, tg.nt));
            {
                RealField3 wq = volume_weights(m, g);
                double acc = 0;
                const cplx* p = v.slice(tg.nt);
                for (std::size_t n = 0; n < g.size(); ++n) acc += wq.v[n] * std::norm(p[n]);
                row.vT = lam * lam * acc;
            }

            // only the x1-faces carry <nu, e1> != 0
            DNRecord flux = dn_flux(m, g, tg, v, {Face::X1Plus, Face::X1Minus});
            for (Face fc : {Face::X1Plus, Face::X1Minus}) {
                const auto& q = flux.quad[fc];
                const auto& vals = flux.values[fc];
                int sgn = face_nu_e1(fc);
                double x1 = (sgn > 0) ? g.x1max : g.x1min;
                double coef = lam - s * (x1 + 2 * m.ell);
                double acc = 0;
                for (int kt = 0; kt <= tg.nt; ++kt)
                    for (std::size_t nq = 0; nq < q.nodes.size(); ++nq)
                        acc += tg.trapw(kt) * q.w[nq] *
                               std::norm(vals[std::size_t(kt) * q.nodes.size() + nq]);
                if (sgn > 0) {
                    row.bt_plus = coef * acc;
                    row.bt_plus_abs = lam * acc;
                } else {
                    row.bt_minus = -coef * acc;
                    row.bt_minus_abs = lam * acc;
                }
            }

            double net = row.zeroth + row.grad + row.gradT + row.bt_plus - row.vT + row.bt_minus;
            row.ratio = (net > 0) ? net / row.Ps_norm2 : 0.0;
            row.op_gain = std::sqrt(row.Ps_norm2 / v2);

            // zeroth-order coefficient of P_s = P1 + P2 + P3
            {
                Field4 zv(g, tg);
                for (int kt = 0; kt <= tg.nt; ++kt) {
                    RealField3 div = divergence(m, c, kt);
                    RealField3 n2 = a_norm2(m, c, kt);
                    for (int i = 0; i < g.n1; ++i) {
                        double x1 = g.x1(i);
                        double conv = lam - s * (x1 + 2 * m.ell);
                        cplx zr = w.K(x1) + s;
                        for (int j = 0; j < g.nr; ++j)
                            for (int k = 0; k < g.nth; ++k) {
                                cplx Z = zr - cplx(0, 2) * conv * c.A1(kt, i, j, k) +
                                         c.q(kt, i, j, k) - cplx(0, 1) * div(i, j, k) +
                                         n2(i, j, k);
                                zv(kt, i, j, k) = Z * v(kt, i, j, k);
                            }
                    }
                }
                row.zeroth_gain = std::sqrt(st_wnorm2(m, g, tg, zv) / v2);
            }
            if (!std::isfinite(row.ratio) || !std::isfinite(row.op_gain)) finite = false;

            max_ratio = std::max(max_ratio, row.ratio);
            if (lam == lam_prev) max_ratio_prev = std::max(max_ratio_prev, row.ratio);
            if (lam == lambdas.back()) max_ratio_last = std::max(max_ratio_last, row.ratio);
            gains[si].push_back(row.op_gain);
            zgains[si].push_back(row.zeroth_gain);
            rep.rows.push_back(row);
        }
    }

    rep.fitted_C = (max_ratio > 0) ? 1.0 / max_ratio : 0.0;
    double min_slope = 1e300, op_slope = 1e300;
    for (auto& gv : zgains) min_slope = std::min(min_slope, fit_slope(lambdas, gv));
    for (auto& gv : gains) op_slope = std::min(op_slope, fit_slope(lambdas, gv));
    rep.min_slope = min_slope;
    rep.op_slope = op_slope;
    rep.uniformity = (max_ratio_prev > 0) ? max_ratio_last / max_ratio_prev : 0.0;
    rep.pass = finite && rep.fitted_C > 0 && rep.uniformity <= 1.25 && rep.min_slope >= 1.8;
    std::ostringstream os;
    os << "fitted C = " << rep.fitted_C << ", zeroth-order slope >= " << rep.min_slope
       << " (operator gain slope " << rep.op_slope << "), last-rung ratio drift "
       << rep.uniformity;
    rep.detail = os.str();
    return rep;
}

InteriorScalingReport verify_interior_scaling(const ProductMetric& m,
                                              const CoefficientField& c, double beta,
                                              const std::vector<double>& lambdas,
                                              const std::vector<Field4>& samples) {
    InteriorScalingReport rep;
    rep.note = "semiclassical negative-order norms are not discretized; "
               "only the H1_lambda - L2 scaling is checked";
    const SpaceGrid& g = *samples[0].g;
    const TimeGrid& tg = *samples[0].tg;

    double max_ratio = 0, min_slope = 1e300;
    bool finite = true;
    for (std::size_t si = 0; si < samples.size(); ++si) {
        const Field4& v = samples[si];
        double v2 = st_wnorm2(m, g, tg, v);
        double grad_st = 0;
        for (int kt = 0; kt <= tg.nt; ++kt)
            grad_st += tg.trapw(kt) * grad_norm2_slice(m, g, slice(v, kt));

        for (bool adjoint : {false, true}) {
            std::vector<double> zgains;
            for (double lam : lambdas) {
                ConjProfile prof = profile_phi(g, lam, beta, 0.0, m.ell, +1);
                ConjProfile prof_adj;
                OpBuild ob;
                ob.profile = &prof;
                if (adjoint) {
                    prof_adj = prof.reversed();
                    ob.profile = &prof_adj;
                    ob.negate_A = true;
                }
                Field4 Lv(g, tg), Zv(g, tg);
                for (int kt = 0; kt <= tg.nt; ++kt) {
                    SpatialOp op = build_spatial_op(m, c, kt, ob);
                    Field3 s3 = slice(v, kt);
                    double tsign = adjoint ? -1.0 : 1.0;
                    for (int i = 0; i < g.n1; ++i)
                        for (int j = 0; j < g.nr; ++j)
                            for (int k = 0; k < g.nth; ++k) {
                                Lv(kt, i, j, k) =
                                    tsign * fdt(v, kt, i, j, k) + op.apply_at(s3, i, j, k);
                                Zv(kt, i, j, k) = op.z(i, j, k) * s3(i, j, k);
                            }
                }
                InteriorScalingRow row;
                row.sample = int(si);
                row.lambda = lam;
                row.adjoint = adjoint;
                row.lhs = lam * lam * v2 + grad_st;
                row.rhs = st_wnorm2(m, g, tg, Lv);
                row.ratio = row.lhs / row.rhs;
                if (!std::isfinite(row.ratio)) finite = false;
                max_ratio = std::max(max_ratio, row.ratio);
                zgains.push_back(std::sqrt(st_wnorm2(m, g, tg, Zv) / v2));
                rep.rows.push_back(row);
            }
            min_slope = std::min(min_slope, fit_slope(lambdas, zgains));
        }
    }
    rep.fitted_C = max_ratio;
    rep.min_slope = min_slope;
    rep.pass = finite && max_ratio < 1e6 && min_slope >= 1.8;
    return rep;
}

CommutatorIntegrals commutator_integrals(const ProductMetric& m, const CarlemanWeight& w,
                                         const Field4& v) {
    const SpaceGrid& g = *v.g;
    const TimeGrid& tg = *v.tg;
    RealField3 wq = volume_weights(m, g);
    CommutatorIntegrals I;

    for (int kt = 0; kt <= tg.nt; ++kt) {
        Field3 s3 = slice(v, kt);
        for (int i = 0; i < g.n1; ++i) {
            double x1 = g.x1(i);
            double conv = w.lambda - w.s * (x1 + 2 * w.ell);
            double K = w.K(x1);
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double P = m.chart.P(g.r(j), g.th(k));
                    double dPdr = m.chart.dPdr(g.r(j), g.th(k));
                    double dPdth = m.chart.dPdth(g.r(j), g.th(k));
                    double lap = (fd2(s3, Dir::X1, i, j, k) + fd2(s3, Dir::R, i, j, k) +
                                  dPdr / (2 * P) * fd1(s3, Dir::R, i, j, k) +
                                  fd2(s3, Dir::Th, i, j, k) / P -
                                  dPdth / (2 * P * P) * fd1(s3, Dir::Th, i, j, k))
                                     .real();
                    double vt = fdt(v, kt, i, j, k).real();
                    double vx = fd1(s3, Dir::X1, i, j, k).real();
                    double vv = s3(i, j, k).real();
                    double ww = tg.trapw(kt) * wq(i, j, k);
                    I.I1 += ww * (-vt * lap);
                    I.I2 += ww * 4 * w.s * K * vv * vv;
                    I.I3 += ww * K * vv * vt;  // (1/2) d_t |v|^2 for real v
                    I.I4 += ww * (-4 * w.s * vv * lap);
                    I.I5 += ww * 2 * conv * vx * lap;
                    I.I6 += ww * (-K * conv * 2 * vv * vx);  // d_1 |v|^2 = 2 v v_x
                }
        }
    }
    return I;
}

double i6_closed_form(const ProductMetric& m, const CarlemanWeight& w, const Field4& v) {
    const SpaceGrid& g = *v.g;
    const TimeGrid& tg = *v.tg;
    RealField3 wq = volume_weights(m, g);
    double m0 = 0, m1 = 0, m2 = 0;  // moments of |v|^2 against (x1+2l)^k
    for (int kt = 0; kt <= tg.nt; ++kt) {
        const cplx* p = v.slice(kt);
        for (int i = 0; i < g.n1; ++i) {
            double wgt = g.x1(i) + 2 * w.ell;
            for (int j = 0; j < g.nr; ++j)
                for (int k = 0; k < g.nth; ++k) {
                    double val = tg.trapw(kt) * wq(i, j, k) * std::norm(p[g.idx(i, j, k)]);
                    m0 += val;
                    m1 += val * wgt;
                    m2 += val * wgt * wgt;
                }
        }
    }
    double lam = w.lambda, s = w.s, beta = w.beta;
    // the middle coefficient is -6 lam s^2 (one s from -sK', one from the
    // convexified convection), not the -6 lam s sometimes quoted
    return s * lam * lam * (3 - beta * beta) * m0 - 6 * lam * s * s * m1 + 3 * s * s * s * m2;
}

} // namespace mcd
