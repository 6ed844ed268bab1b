#include "mcd/kernels.hpp"

namespace mcd::kernels {

namespace {

void axpy_s(cplx* y, cplx a, const cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpby_s(cplx* y, const cplx* x, cplx b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + b * y[i];
}

cplx dotc_s(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0, im = 0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double nrm2sq_s(const cplx* x, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void cmul_s(cplx* z, const cplx* x, const cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        z[i] = cplx(x[i].real() * y[i].real() - x[i].imag() * y[i].imag(),
                    x[i].real() * y[i].imag() + x[i].imag() * y[i].real());
}

double wnrm2sq_s(const double* w, const cplx* x, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
        s += w[i] * (x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
    return s;
}

cplx wdotu_s(const double* w, const cplx* x, const cplx* y, std::size_t n) {
    double re = 0, im = 0;
    for (std::size_t i = 0; i < n; ++i) {
        re += w[i] * (x[i].real() * y[i].real() - x[i].imag() * y[i].imag());
        im += w[i] * (x[i].real() * y[i].imag() + x[i].imag() * y[i].real());
    }
    return {re, im};
}

void stencil7_s(cplx* out, const cplx* u,
                const cplx* cc, const cplx* cxm, const cplx* cxp,
                const cplx* cym, const cplx* cyp,
                const cplx* czm, const cplx* czp,
                std::size_t lo, std::size_t hi,
                std::ptrdiff_t sx, std::ptrdiff_t sy) {
    for (std::size_t i = lo; i < hi; ++i) {
        out[i] = cc[i] * u[i]
               + cxm[i] * u[i - sx] + cxp[i] * u[i + sx]
               + cym[i] * u[i - sy] + cyp[i] * u[i + sy]
               + czm[i] * u[i - 1] + czp[i] * u[i + 1];
    }
}

} // namespace

const Ops scalar_ops = {axpy_s, xpby_s, dotc_s, nrm2sq_s, cmul_s,
                        wnrm2sq_s, wdotu_s, stencil7_s, "scalar"};

} // namespace mcd::kernels
