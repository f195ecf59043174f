#include "superfuzz/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace superfuzz::kernels {

namespace {

void plus_times_scalar(double a, const double* b, double* c, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j)
        c[j] += a * b[j];
}

void max_min_scalar(double a, const double* b, double* c, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double m = b[j] < a ? b[j] : a;
        if (m > c[j])
            c[j] = m;
    }
}

void min_broadcast_scalar(double a, const double* b, double* c, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j)
        c[j] = b[j] < a ? b[j] : a;
}

} // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", &plus_times_scalar, &max_min_scalar, &min_broadcast_scalar};
    return backend;
}

#if defined(SUPERFUZZ_HAVE_AVX2)
const Backend& avx2_backend(); // kernels_avx2.cpp
bool avx2_supported();
#endif
#if defined(SUPERFUZZ_HAVE_NEON)
const Backend& neon_backend(); // kernels_neon.cpp
#endif

std::vector<const Backend*> available_backends() {
    std::vector<const Backend*> out{&scalar_backend()};
#if defined(SUPERFUZZ_HAVE_AVX2)
    if (avx2_supported())
        out.push_back(&avx2_backend());
#endif
#if defined(SUPERFUZZ_HAVE_NEON)
    out.push_back(&neon_backend());
#endif
    return out;
}

const Backend& active_backend() {
    static const Backend* chosen = [] {
        auto backends = available_backends();
        if (const char* env = std::getenv("SUPERFUZZ_KERNEL")) {
            for (const Backend* b : backends)
                if (std::strcmp(b->name, env) == 0)
                    return b;
            // unknown or unavailable name: fall back to the reference path
            return backends.front();
        }
        return backends.back(); // widest compiled-and-supported backend
    }();
    return *chosen;
}

} // namespace superfuzz::kernels
