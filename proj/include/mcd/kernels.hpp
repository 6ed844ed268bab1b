#pragma once

// Hot inner loops of the solver: complex vector arithmetic and the 7-point
// stencil apply. Scalar reference kernels always exist; AVX2 (x86-64) and
// NEON (aarch64) variants are selected at runtime and equivalence-tested
// against the scalar path.
//
// Complex arrays are std::complex<double> reinterpreted as interleaved
// (re,im) doubles, which the standard guarantees is layout-compatible.

#include <complex>
#include <cstddef>
#include <string>

namespace mcd::kernels {

using cplx = std::complex<double>;

struct Ops {
    // y[i] += a * x[i]
    void (*axpy)(cplx* y, cplx a, const cplx* x, std::size_t n);
    // y[i] = x[i] + b * y[i]
    void (*xpby)(cplx* y, const cplx* x, cplx b, std::size_t n);
    // sum conj(x[i]) * y[i]
    cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
    // sum |x[i]|^2
    double (*nrm2sq)(const cplx* x, std::size_t n);
    // z[i] = x[i] * y[i]
    void (*cmul)(cplx* z, const cplx* x, const cplx* y, std::size_t n);
    // sum w[i] * |x[i]|^2  (real weights)
    double (*wnrm2sq)(const double* w, const cplx* x, std::size_t n);
    // sum w[i] * x[i] * y[i]  (real weights, bilinear: no conjugation)
    cplx (*wdotu)(const double* w, const cplx* x, const cplx* y, std::size_t n);
    // 7-point stencil on interior span [lo, hi):
    // out[i] = cc[i]*u[i] + cxm[i]*u[i-sx] + cxp[i]*u[i+sx]
    //        + cym[i]*u[i-sy] + cyp[i]*u[i+sy] + czm[i]*u[i-1] + czp[i]*u[i+1]
    void (*stencil7)(cplx* out, const cplx* u,
                     const cplx* cc, const cplx* cxm, const cplx* cxp,
                     const cplx* cym, const cplx* cyp,
                     const cplx* czm, const cplx* czp,
                     std::size_t lo, std::size_t hi,
                     std::ptrdiff_t sx, std::ptrdiff_t sy);
    const char* name;
};

// Scalar reference kernels (always available).
extern const Ops scalar_ops;

#if defined(__x86_64__) || defined(_M_X64)
// Defined when the AVX2 translation unit is compiled in; null entries otherwise.
extern const Ops avx2_ops;
bool avx2_supported();
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

// Active kernel set. Selection order: MCDLAB_KERNELS env var
// ("scalar", "avx2", "neon", "auto"), then best supported at runtime.
const Ops& active();
// Force a backend by name; returns false if unavailable. "auto" re-detects.
bool select(const std::string& name);
std::string active_name();

} // namespace mcd::kernels
