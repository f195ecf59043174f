#pragma once

#include <cstddef>
#include <vector>

namespace superfuzz::kernels {

// Row-update primitives behind the semiring products. All operate on one
// contiguous row segment:
//
//   plus_times:    c[j] += a * b[j]
//   max_min:       c[j]  = max(c[j], min(a, b[j]))
//   min_broadcast: c[j]  = min(a, b[j])
//
// The scalar backend is the reference; SIMD backends must produce bit-equal
// results on finite inputs (no FMA contraction in the AVX2 path).
using RowUpdateFn = void (*)(double a, const double* b, double* c, std::size_t n);

struct Backend {
    const char* name;
    RowUpdateFn plus_times;
    RowUpdateFn max_min;
    RowUpdateFn min_broadcast;
};

const Backend& scalar_backend();

/// Every backend compiled into this binary (scalar first).
std::vector<const Backend*> available_backends();

/// The backend used by the library. Picked once: SUPERFUZZ_KERNEL=scalar|avx2|neon
/// forces a choice, otherwise the widest backend the CPU supports wins.
const Backend& active_backend();

} // namespace superfuzz::kernels
