#include "mcd/kernels.hpp"

#include <cstdlib>

namespace mcd::kernels {

namespace {

const Ops* detect_best() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return &avx2_ops;
#endif
#if defined(__aarch64__)
    return &neon_ops;
#endif
    return &scalar_ops;
}

const Ops* initial() {
    if (const char* env = std::getenv("MCDLAB_KERNELS")) {
        std::string want(env);
        if (want == "scalar") return &scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
        if (want == "avx2" && avx2_supported()) return &avx2_ops;
#endif
#if defined(__aarch64__)
        if (want == "neon") return &neon_ops;
#endif
    }
    return detect_best();
}

const Ops*& current() {
    static const Ops* ops = initial();
    return ops;
}

} // namespace

const Ops& active() { return *current(); }

bool select(const std::string& name) {
    if (name == "auto") { current() = detect_best(); return true; }
    if (name == "scalar") { current() = &scalar_ops; return true; }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2" && avx2_supported()) { current() = &avx2_ops; return true; }
#endif
#if defined(__aarch64__)
    if (name == "neon") { current() = &neon_ops; return true; }
#endif
    return false;
}

std::string active_name() { return current()->name; }

} // namespace mcd::kernels
