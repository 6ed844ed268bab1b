// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma;
// callers must gate on avx2_supported() before selecting these.

#if defined(__x86_64__) || defined(_M_X64)

#include "mcd/kernels.hpp"
#include <immintrin.h>

namespace mcd::kernels {

namespace {

inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// [a0,b0,a1,b1] * [c0,d0,c1,d1] -> [a0c0-b0d0, a0d0+b0c0, ...]
inline __m256d cmul2(__m256d x, __m256d y) {
    __m256d re = _mm256_movedup_pd(x);          // [a0,a0,a1,a1]
    __m256d im = _mm256_permute_pd(x, 0xF);     // [b0,b0,b1,b1]
    __m256d ys = _mm256_permute_pd(y, 0x5);     // [d0,c0,d1,c1]
    return _mm256_fmaddsub_pd(re, y, _mm256_mul_pd(im, ys));
}

void axpy_v(cplx* y, cplx a, const cplx* x, std::size_t n) {
    const __m256d are = _mm256_set1_pd(a.real());
    const __m256d aim = _mm256_setr_pd(-a.imag(), a.imag(), -a.imag(), a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(dp(x) + 2 * i);
        __m256d yv = _mm256_loadu_pd(dp(y) + 2 * i);
        __m256d xs = _mm256_permute_pd(xv, 0x5);
        yv = _mm256_fmadd_pd(are, xv, yv);
        yv = _mm256_fmadd_pd(aim, xs, yv);
        _mm256_storeu_pd(dp(y) + 2 * i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void xpby_v(cplx* y, const cplx* x, cplx b, std::size_t n) {
    const __m256d bre = _mm256_set1_pd(b.real());
    const __m256d bim = _mm256_setr_pd(-b.imag(), b.imag(), -b.imag(), b.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(dp(x) + 2 * i);
        __m256d yv = _mm256_loadu_pd(dp(y) + 2 * i);
        __m256d ys = _mm256_permute_pd(yv, 0x5);
        __m256d r = _mm256_fmadd_pd(bre, yv, xv);
        r = _mm256_fmadd_pd(bim, ys, r);
        _mm256_storeu_pd(dp(y) + 2 * i, r);
    }
    for (; i < n; ++i) y[i] = x[i] + b * y[i];
}

cplx dotc_v(const cplx* x, const cplx* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(dp(x) + 2 * i);
        __m256d yv = _mm256_loadu_pd(dp(y) + 2 * i);
        __m256d re = _mm256_movedup_pd(xv);
        __m256d im = _mm256_permute_pd(xv, 0xF);
        __m256d ys = _mm256_permute_pd(yv, 0x5);
        // conj(x)*y: even lanes a*c + b*d, odd lanes a*d - b*c
        __m256d t = _mm256_fmsubadd_pd(re, yv, _mm256_mul_pd(im, ys));
        acc = _mm256_add_pd(acc, t);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double rr = lanes[0] + lanes[2], ri = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        rr += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        ri += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {rr, ri};
}

double nrm2sq_v(const cplx* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(dp(x) + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i)
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void cmul_v(cplx* z, const cplx* x, const cplx* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(dp(x) + 2 * i);
        __m256d yv = _mm256_loadu_pd(dp(y) + 2 * i);
        _mm256_storeu_pd(dp(z) + 2 * i, cmul2(xv, yv));
    }
    for (; i < n; ++i) z[i] = x[i] * y[i];
}

inline __m256d wpair(const double* w, std::size_t i) {
    __m128d lo = _mm_loadu_pd(w + i);
    return _mm256_permute4x64_pd(_mm256_castpd128_pd256(lo), 0x50); // [w0,w0,w1,w1]
}

double wnrm2sq_v(const double* w, const cplx* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(dp(x) + 2 * i);
        acc = _mm256_fmadd_pd(wpair(w, i), _mm256_mul_pd(xv, xv), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i)
        s += w[i] * (x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
    return s;
}

cplx wdotu_v(const double* w, const cplx* x, const cplx* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(dp(x) + 2 * i);
        __m256d yv = _mm256_loadu_pd(dp(y) + 2 * i);
        acc = _mm256_fmadd_pd(wpair(w, i), cmul2(xv, yv), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double rr = lanes[0] + lanes[2], ri = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        rr += w[i] * (x[i].real() * y[i].real() - x[i].imag() * y[i].imag());
        ri += w[i] * (x[i].real() * y[i].imag() + x[i].imag() * y[i].real());
    }
    return {rr, ri};
}

void stencil7_v(cplx* out, const cplx* u,
                const cplx* cc, const cplx* cxm, const cplx* cxp,
                const cplx* cym, const cplx* cyp,
                const cplx* czm, const cplx* czp,
                std::size_t lo, std::size_t hi,
                std::ptrdiff_t sx, std::ptrdiff_t sy) {
    std::size_t i = lo;
    for (; i + 2 <= hi; i += 2) {
        const double* ub = dp(u) + 2 * i;
        __m256d acc = cmul2(_mm256_loadu_pd(dp(cc) + 2 * i), _mm256_loadu_pd(ub));
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(dp(cxm) + 2 * i),
                                       _mm256_loadu_pd(ub - 2 * sx)));
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(dp(cxp) + 2 * i),
                                       _mm256_loadu_pd(ub + 2 * sx)));
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(dp(cym) + 2 * i),
                                       _mm256_loadu_pd(ub - 2 * sy)));
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(dp(cyp) + 2 * i),
                                       _mm256_loadu_pd(ub + 2 * sy)));
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(dp(czm) + 2 * i),
                                       _mm256_loadu_pd(ub - 2)));
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(dp(czp) + 2 * i),
                                       _mm256_loadu_pd(ub + 2)));
        _mm256_storeu_pd(dp(out) + 2 * i, acc);
    }
    for (; i < hi; ++i) {
        out[i] = cc[i] * u[i]
               + cxm[i] * u[i - sx] + cxp[i] * u[i + sx]
               + cym[i] * u[i - sy] + cyp[i] * u[i + sy]
               + czm[i] * u[i - 1] + czp[i] * u[i + 1];
    }
}

} // namespace

const Ops avx2_ops = {axpy_v, xpby_v, dotc_v, nrm2sq_v, cmul_v,
                      wnrm2sq_v, wdotu_v, stencil7_v, "avx2"};

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

} // namespace mcd::kernels

#endif // x86-64
