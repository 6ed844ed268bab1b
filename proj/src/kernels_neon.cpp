// NEON variants for aarch64. One float64x2_t holds one complex double.

#if defined(__aarch64__)

#include "mcd/kernels.hpp"
#include <arm_neon.h>

namespace mcd::kernels {

namespace {

inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// [a,b] * [c,d] -> [ac-bd, ad+bc]
inline float64x2_t cmul1(float64x2_t x, float64x2_t y) {
    float64x2_t t = vmulq_laneq_f64(y, x, 0);              // [ac, ad]
    float64x2_t ys = vextq_f64(y, y, 1);                   // [d, c]
    float64x2_t s = vmulq_laneq_f64(ys, x, 1);             // [bd, bc]
    const float64x2_t sgn = {-1.0, 1.0};
    return vfmaq_f64(t, s, sgn);                           // [ac-bd, ad+bc]
}

void axpy_v(cplx* y, cplx a, const cplx* x, std::size_t n) {
    const float64x2_t av = vld1q_f64(dp(&a));
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(dp(x) + 2 * i);
        float64x2_t yv = vld1q_f64(dp(y) + 2 * i);
        vst1q_f64(dp(y) + 2 * i, vaddq_f64(yv, cmul1(av, xv)));
    }
}

void xpby_v(cplx* y, const cplx* x, cplx b, std::size_t n) {
    const float64x2_t bv = vld1q_f64(dp(&b));
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(dp(x) + 2 * i);
        float64x2_t yv = vld1q_f64(dp(y) + 2 * i);
        vst1q_f64(dp(y) + 2 * i, vaddq_f64(xv, cmul1(bv, yv)));
    }
}

cplx dotc_v(const cplx* x, const cplx* y, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    const float64x2_t sgn = {1.0, -1.0};
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(dp(x) + 2 * i);
        float64x2_t yv = vld1q_f64(dp(y) + 2 * i);
        // conj(x)*y = [ac+bd, ad-bc]
        float64x2_t t = vmulq_laneq_f64(yv, xv, 0);        // [ac, ad]
        float64x2_t ys = vextq_f64(yv, yv, 1);             // [d, c]
        float64x2_t s = vmulq_laneq_f64(ys, xv, 1);        // [bd, bc]
        acc = vaddq_f64(acc, vfmaq_f64(t, s, sgn));
    }
    return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

double nrm2sq_v(const cplx* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(dp(x) + 2 * i);
        acc = vfmaq_f64(acc, xv, xv);
    }
    return vaddvq_f64(acc);
}

void cmul_v(cplx* z, const cplx* x, const cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(dp(x) + 2 * i);
        float64x2_t yv = vld1q_f64(dp(y) + 2 * i);
        vst1q_f64(dp(z) + 2 * i, cmul1(xv, yv));
    }
}

double wnrm2sq_v(const double* w, const cplx* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(dp(x) + 2 * i);
        acc = vfmaq_f64(acc, vmulq_n_f64(xv, w[i]), xv);
    }
    return vaddvq_f64(acc);
}

cplx wdotu_v(const double* w, const cplx* x, const cplx* y, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(dp(x) + 2 * i);
        float64x2_t yv = vld1q_f64(dp(y) + 2 * i);
        acc = vfmaq_f64(acc, cmul1(xv, yv), vdupq_n_f64(w[i]));
    }
    return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

void stencil7_v(cplx* out, const cplx* u,
                const cplx* cc, const cplx* cxm, const cplx* cxp,
                const cplx* cym, const cplx* cyp,
                const cplx* czm, const cplx* czp,
                std::size_t lo, std::size_t hi,
                std::ptrdiff_t sx, std::ptrdiff_t sy) {
    for (std::size_t i = lo; i < hi; ++i) {
        const double* ub = dp(u) + 2 * i;
        float64x2_t acc = cmul1(vld1q_f64(dp(cc) + 2 * i), vld1q_f64(ub));
        acc = vaddq_f64(acc, cmul1(vld1q_f64(dp(cxm) + 2 * i), vld1q_f64(ub - 2 * sx)));
        acc = vaddq_f64(acc, cmul1(vld1q_f64(dp(cxp) + 2 * i), vld1q_f64(ub + 2 * sx)));
        acc = vaddq_f64(acc, cmul1(vld1q_f64(dp(cym) + 2 * i), vld1q_f64(ub - 2 * sy)));
        acc = vaddq_f64(acc, cmul1(vld1q_f64(dp(cyp) + 2 * i), vld1q_f64(ub + 2 * sy)));
        acc = vaddq_f64(acc, cmul1(vld1q_f64(dp(czm) + 2 * i), vld1q_f64(ub - 2)));
        acc = vaddq_f64(acc, cmul1(vld1q_f64(dp(czp) + 2 * i), vld1q_f64(ub + 2)));
        vst1q_f64(dp(out) + 2 * i, acc);
    }
}

} // namespace

const Ops neon_ops = {axpy_v, xpby_v, dotc_v, nrm2sq_v, cmul_v,
                      wnrm2sq_v, wdotu_v, stencil7_v, "neon"};

} // namespace mcd::kernels

#endif // aarch64
