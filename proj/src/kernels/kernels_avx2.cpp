// AVX2 variants of the row-update kernels. Built with -mavx2 and selected at
// runtime only when the CPU reports AVX2. mul+add is used instead of fmadd so
// results stay bit-equal to the scalar reference.

#include <immintrin.h>

#include "superfuzz/kernels.hpp"

namespace superfuzz::kernels {

namespace {

void plus_times_avx2(double a, const double* b, double* c, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d vb = _mm256_loadu_pd(b + j);
        __m256d vc = _mm256_loadu_pd(c + j);
        vc = _mm256_add_pd(vc, _mm256_mul_pd(va, vb));
        _mm256_storeu_pd(c + j, vc);
    }
    for (; j < n; ++j)
        c[j] += a * b[j];
}

void max_min_avx2(double a, const double* b, double* c, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d vb = _mm256_loadu_pd(b + j);
        __m256d vc = _mm256_loadu_pd(c + j);
        vc = _mm256_max_pd(vc, _mm256_min_pd(va, vb));
        _mm256_storeu_pd(c + j, vc);
    }
    for (; j < n; ++j) {
        double m = b[j] < a ? b[j] : a;
        if (m > c[j])
            c[j] = m;
    }
}

void min_broadcast_avx2(double a, const double* b, double* c, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4)
        _mm256_storeu_pd(c + j, _mm256_min_pd(va, _mm256_loadu_pd(b + j)));
    for (; j < n; ++j)
        c[j] = b[j] < a ? b[j] : a;
}

} // namespace

const Backend& avx2_backend() {
    static const Backend backend{"avx2", &plus_times_avx2, &max_min_avx2, &min_broadcast_avx2};
    return backend;
}

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

} // namespace superfuzz::kernels
