#include <cstdlib>
#include <cstring>

#include "cylwig/simd.hpp"

namespace cylwig::simd {

namespace {

const Kernels* pick() {
    const char* env = std::getenv("CYLWIG_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
    const bool cpu_ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (env && std::strcmp(env, "avx2") == 0) return cpu_ok && avx2_kernels() ? avx2_kernels() : &scalar_kernels();
    if (cpu_ok && avx2_kernels()) return avx2_kernels();
#endif
    return &scalar_kernels();
}

}  // namespace

const Kernels& active() {
    static const Kernels* k = pick();
    return *k;
}

}  // namespace cylwig::simd
