#include "mcd/solver.hpp"
#include "mcd/fd.hpp"
#include "mcd/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mcd {

namespace {

// One implicit step: (I + a dt S) x = rhs with Dirichlet rows pinned.
// Matrix-free preconditioned BiCGStab (Jacobi preconditioner).
struct StepSystem {
    const SpaceGrid* g;
    const SpatialOp* op;
    double adt;                       // a * dt
    const std::vector<char>* bdry;    // 1 at boundary nodes
    std::vector<cplx> diag_inv;

    void init() {
        std::size_t n = g->size();
        diag_inv.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            cplx d = (*bdry)[i] ? cplx(1.0) : 1.0 + adt * op->cc.v[i];
            diag_inv[i] = (std::abs(d) > 0) ? 1.0 / d : cplx(1.0);
        }
    }

    void apply(const cplx* x, cplx* out, std::vector<cplx>& tmp) const {
        std::size_t n = g->size();
        op->apply_interior(x, tmp.data());
        const std::vector<char>& b = *bdry;
        for (std::size_t i = 0; i < n; ++i)
            out[i] = b[i] ? x[i] : x[i] + adt * tmp[i];
    }
};

int bicgstab(const StepSystem& sys, const std::vector<cplx>& rhs, std::vector<cplx>& x,
             double tol, int maxit, double& rel_out) {
    const auto& K = kernels::active();
    std::size_t n = rhs.size();
    std::vector<cplx> r(n), r0(n), p(n), v(n), s(n), t(n), tmp(n), y(n), zv(n);

    sys.apply(x.data(), tmp.data(), v);
    for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - tmp[i];
    double bnorm = std::sqrt(K.nrm2sq(rhs.data(), n));
    if (bnorm == 0) {
        std::fill(x.begin(), x.end(), cplx(0));
        rel_out = 0;
        return 0;
    }
    double rnorm = std::sqrt(K.nrm2sq(r.data(), n));
    if (rnorm / bnorm < tol) {
        rel_out = rnorm / bnorm;
        return 0;
    }
    r0 = r;
    cplx rho_old = 1, alpha = 1, omega = 1;
    std::fill(p.begin(), p.end(), cplx(0));
    std::fill(v.begin(), v.end(), cplx(0));

    for (int it = 1; it <= maxit; ++it) {
        cplx rho = K.dotc(r0.data(), r.data(), n);
        if (std::abs(rho) < 1e-300) break;
        cplx beta = (rho / rho_old) * (alpha / omega);
        // p = r + beta (p - omega v)
        K.axpy(p.data(), -omega, v.data(), n);
        K.xpby(p.data(), r.data(), beta, n);
        // y = K^-1 p ; v = A y
        K.cmul(y.data(), sys.diag_inv.data(), p.data(), n);
        sys.apply(y.data(), v.data(), tmp);
        cplx denom = K.dotc(r0.data(), v.data(), n);
        if (std::abs(denom) < 1e-300) break;
        alpha = rho / denom;
        s = r;
        K.axpy(s.data(), -alpha, v.data(), n);
        double snorm = std::sqrt(K.nrm2sq(s.data(), n));
        if (snorm / bnorm < tol) {
            K.axpy(x.data(), alpha, y.data(), n);
            rel_out = snorm / bnorm;
            return it;
        }
        // z = K^-1 s ; t = A z
        K.cmul(zv.data(), sys.diag_inv.data(), s.data(), n);
        sys.apply(zv.data(), t.data(), tmp);
        double tt = K.nrm2sq(t.data(), n);
        if (tt == 0) break;
        omega = K.dotc(t.data(), s.data(), n) / tt;
        K.axpy(x.data(), alpha, y.data(), n);
        K.axpy(x.data(), omega, zv.data(), n);
        r = s;
        K.axpy(r.data(), -omega, t.data(), n);
        rnorm = std::sqrt(K.nrm2sq(r.data(), n));
        rel_out = rnorm / bnorm;
        if (rnorm / bnorm < tol) return it;
        if (std::abs(omega) < 1e-300) break;
        rho_old = rho;
    }
    return -1;
}

std::vector<char> boundary_mask(const SpaceGrid& g) {
    std::vector<char> b(g.size(), 0);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.nr; ++j)
            for (int k = 0; k < g.nth; ++k)
                if (g.boundary(i, j, k)) b[g.idx(i, j, k)] = 1;
    return b;
}

} // namespace

Field4 solve_ibvp(const IBVPProblem& p, const SpaceGrid& g, const TimeGrid& tg,
                  const SolveOptions& opt, SolveStats* stats) {
    const double dt = tg.dt();
    Field4 u(g, tg);
    std::vector<char> bdry = boundary_mask(g);
    std::size_t n = g.size();

    // initial level
    if (p.initial) std::copy(p.initial->v.begin(), p.initial->v.end(), u.slice(0));
    if (p.dirichlet)
        for (std::size_t i = 0; i < n; ++i)
            if (bdry[i]) u.slice(0)[i] = p.dirichlet->slice(0)[i];

    OpBuild ob;
    ob.negate_A = opt.negate_A;
    ob.conj_q = opt.conj_q;
    ob.profile = opt.profile;

    SpatialOp op_prev;
    if (opt.scheme == TimeScheme::Trapezoidal)
        op_prev = build_spatial_op(*p.metric, *p.coeffs, 0, ob);

    std::vector<cplx> rhs(n), x(n), tmp(n);
    SolveStats local;

    for (int kt = 1; kt <= tg.nt; ++kt) {
        SpatialOp op = build_spatial_op(*p.metric, *p.coeffs, kt, ob);
        const cplx* uprev = u.slice(kt - 1);

        double a = (opt.scheme == TimeScheme::BackwardEuler) ? 1.0 : 0.5;
        StepSystem sys{&g, &op, a * dt, &bdry, {}};
        sys.init();

        // rhs on interior nodes
        if (opt.scheme == TimeScheme::BackwardEuler) {
            for (std::size_t i = 0; i < n; ++i) rhs[i] = uprev[i];
            if (p.source) {
                const cplx* F = p.source->slice(kt);
                for (std::size_t i = 0; i < n; ++i)
                    if (!bdry[i]) rhs[i] += dt * F[i];
            }
        } else {
            op_prev.apply_interior(uprev, tmp.data());
            for (std::size_t i = 0; i < n; ++i)
                rhs[i] = bdry[i] ? uprev[i] : uprev[i] - 0.5 * dt * tmp[i];
            if (p.source) {
                const cplx* F1 = p.source->slice(kt);
                const cplx* F0 = p.source->slice(kt - 1);
                for (std::size_t i = 0; i < n; ++i)
                    if (!bdry[i]) rhs[i] += 0.5 * dt * (F1[i] + F0[i]);
            }
        }
        // boundary rows carry the Dirichlet data
        for (std::size_t i = 0; i < n; ++i)
            if (bdry[i]) rhs[i] = p.dirichlet ? p.dirichlet->slice(kt)[i] : cplx(0);

        // initial guess: previous level with the new boundary data
        std::copy(uprev, uprev + n, x.begin());
        for (std::size_t i = 0; i < n; ++i)
            if (bdry[i]) x[i] = rhs[i];

        double rel = 0;
        int its = bicgstab(sys, rhs, x, opt.tol, opt.maxit, rel);
        if (its < 0) {
            std::ostringstream os;
            os << "solve_ibvp: linear solve failed at step " << kt
               << " (relative residual " << rel << ")";
            throw std::runtime_error(os.str());
        }
        local.total_iters += its;
        local.max_step_iters = std::max(local.max_step_iters, its);
        local.worst_rel_residual = std::max(local.worst_rel_residual, rel);

        std::copy(x.begin(), x.end(), u.slice(kt));
        if (opt.scheme == TimeScheme::Trapezoidal) op_prev = std::move(op);
    }
    if (stats) *stats = local;
    return u;
}

Field4 solve_transpose_fvp(const IBVPProblem& p, const SpaceGrid& g, const TimeGrid& tg,
                           const SolveOptions& opt, SolveStats* stats) {
    // L^T v = F with v(T) = 0 becomes, under t -> T - t, a forward problem for
    // the operator with A -> -A(T-t), q -> q(T-t), conjugated by -rho(T-t,.).
    CoefficientField crev = reversed_negA(*p.coeffs);
    if (opt.conj_q)
        for (auto& z : crev.q.v) z = std::conj(z);

    ConjProfile prof_rev;
    SolveOptions o2 = opt;
    o2.negate_A = false;
    o2.conj_q = false;
    if (opt.profile && opt.profile->active) {
        prof_rev = opt.profile->reversed();
        o2.profile = &prof_rev;
    }

    Field4 srcrev;
    IBVPProblem p2;
    p2.metric = p.metric;
    p2.coeffs = &crev;
    if (p.source) {
        srcrev = time_reversed(*p.source);
        p2.source = &srcrev;
    }
    Field4 dirrev;
    if (p.dirichlet) {
        dirrev = time_reversed(*p.dirichlet);
        p2.dirichlet = &dirrev;
    }
    p2.initial = p.initial;  // interpreted as final data

    Field4 wrev = solve_ibvp(p2, g, tg, o2, stats);
    return time_reversed(wrev);
}

namespace {

cplx one_sided_normal(const Field4& u, const SpaceGrid& g, Face f, int kt, int i, int j, int k,
                      double invsqrtP) {
    auto at = [&](int a, int b, int c) { return u(kt, a, b, c); };
    switch (f) {
        case Face::X1Plus: {
            double h = g.h1();
            return (3.0 * at(i, j, k) - 4.0 * at(i - 1, j, k) + at(i - 2, j, k)) / (2 * h);
        }
        case Face::X1Minus: {
            double h = g.h1();
            return (3.0 * at(i, j, k) - 4.0 * at(i + 1, j, k) + at(i + 2, j, k)) / (2 * h);
        }
        case Face::RPlus: {
            double h = g.hr();
            return (3.0 * at(i, j, k) - 4.0 * at(i, j - 1, k) + at(i, j - 2, k)) / (2 * h);
        }
        case Face::RMinus: {
            double h = g.hr();
            return (3.0 * at(i, j, k) - 4.0 * at(i, j + 1, k) + at(i, j + 2, k)) / (2 * h);
        }
        case Face::ThPlus: {
            double h = g.hth();
            return invsqrtP *
                   (3.0 * at(i, j, k) - 4.0 * at(i, j, k - 1) + at(i, j, k - 2)) / (2 * h);
        }
        default: {
            double h = g.hth();
            return invsqrtP *
                   (3.0 * at(i, j, k) - 4.0 * at(i, j, k + 1) + at(i, j, k + 2)) / (2 * h);
        }
    }
}

DNRecord dn_impl(const ProductMetric& m, const CoefficientField* c, const SpaceGrid& g,
                 const TimeGrid& tg, const Field4& u, const std::vector<Face>& faces) {
    DNRecord rec;
    rec.faces = faces;
    rec.tg = &tg;
    for (Face f : faces) {
        FaceQuad q = face_quadrature(m, g, f);
        std::vector<cplx> vals(std::size_t(tg.levels()) * q.nodes.size());
        for (int kt = 0; kt <= tg.nt; ++kt) {
            for (std::size_t nidx = 0; nidx < q.nodes.size(); ++nidx) {
                auto [i, j, k] = q.nodes[nidx];
                double P = m.chart.P(g.r(j), g.th(k));
                cplx dn = one_sided_normal(u, g, f, kt, i, j, k, 1.0 / std::sqrt(P));
                if (c) {
                    // i (nu . A) u with unit conormal
                    double nuA = 0;
                    switch (f) {
                        case Face::X1Plus: nuA = c->A1(kt, i, j, k); break;
                        case Face::X1Minus: nuA = -c->A1(kt, i, j, k); break;
                        case Face::RPlus: nuA = c->Ar(kt, i, j, k); break;
                        case Face::RMinus: nuA = -c->Ar(kt, i, j, k); break;
                        case Face::ThPlus: nuA = c->Ath(kt, i, j, k) / std::sqrt(P); break;
                        case Face::ThMinus: nuA = -c->Ath(kt, i, j, k) / std::sqrt(P); break;
                    }
                    dn += cplx(0, 1) * nuA * u(kt, i, j, k);
                }
                vals[std::size_t(kt) * q.nodes.size() + nidx] = dn;
            }
        }
        rec.values[f] = std::move(vals);
        rec.quad[f] = std::move(q);
    }
    return rec;
}

} // namespace

DNRecord dn_map(const ProductMetric& m, const CoefficientField& c, const SpaceGrid& g,
                const TimeGrid& tg, const Field4& u, const std::vector<Face>& faces) {
    return dn_impl(m, &c, g, tg, u, faces);
}

DNRecord dn_flux(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                 const Field4& u, const std::vector<Face>& faces) {
    return dn_impl(m, nullptr, g, tg, u, faces);
}

double DNRecord::sup_norm() const {
    double s = 0;
    for (const auto& [f, vals] : values)
        for (cplx z : vals) s = std::max(s, std::abs(z));
    return s;
}

double DNRecord::sup_diff(const DNRecord& a, const DNRecord& b) {
    double s = 0;
    for (const auto& [f, vals] : a.values) {
        const auto& w = b.values.at(f);
        for (std::size_t i = 0; i < vals.size(); ++i)
            s = std::max(s, std::abs(vals[i] - w[i]));
    }
    return s;
}

double spacetime_l2(const ProductMetric& m, const SpaceGrid& g, const TimeGrid& tg,
                    const Field4& u) {
    RealField3 w = volume_weights(m, g);
    const auto& K = kernels::active();
    double s = 0;
    for (int kt = 0; kt <= tg.nt; ++kt)
        s += tg.trapw(kt) * K.wnrm2sq(w.data(), u.slice(kt), g.size());
    return std::sqrt(s);
}

double slice_l2(const ProductMetric& m, const SpaceGrid& g, const Field3& u) {
    RealField3 w = volume_weights(m, g);
    return std::sqrt(kernels::active().wnrm2sq(w.data(), u.data(), g.size()));
}

} // namespace mcd
