// NEON variants of the row-update kernels (aarch64). Same bit-exactness
// contract as the AVX2 path: plain mul+add, no fused contraction.

#include <arm_neon.h>

#include "superfuzz/kernels.hpp"

namespace superfuzz::kernels {

namespace {

void plus_times_neon(double a, const double* b, double* c, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        float64x2_t vb = vld1q_f64(b + j);
        float64x2_t vc = vld1q_f64(c + j);
        vc = vaddq_f64(vc, vmulq_f64(va, vb));
        vst1q_f64(c + j, vc);
    }
    for (; j < n; ++j)
        c[j] += a * b[j];
}

void max_min_neon(double a, const double* b, double* c, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        float64x2_t vb = vld1q_f64(b + j);
        float64x2_t vc = vld1q_f64(c + j);
        vc = vmaxq_f64(vc, vminq_f64(va, vb));
        vst1q_f64(c + j, vc);
    }
    for (; j < n; ++j) {
        double m = b[j] < a ? b[j] : a;
        if (m > c[j])
            c[j] = m;
    }
}

void min_broadcast_neon(double a, const double* b, double* c, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2)
        vst1q_f64(c + j, vminq_f64(va, vld1q_f64(b + j)));
    for (; j < n; ++j)
        c[j] = b[j] < a ? b[j] : a;
}

} // namespace

const Backend& neon_backend() {
    static const Backend backend{"neon", &plus_times_neon, &max_min_neon, &min_broadcast_neon};
    return backend;
}

} // namespace superfuzz::kernels
