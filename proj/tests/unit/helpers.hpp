#pragma once

#include <random>
#include <string>
#include <vector>

#include "superfuzz/json_io.hpp"
#include "superfuzz/matrix.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
    return std::string(SUPERFUZZ_FIXTURE_DIR) + "/" + name;
}

inline superfuzz::SuperMatrix load_fixture_matrix(const std::string& name) {
    return superfuzz::load_matrix(fixture(name));
}

// Random integer-valued matrix (exact in double arithmetic).
inline superfuzz::SuperMatrix random_int_matrix(std::mt19937& rng, int rows, int cols,
                                                superfuzz::PartitionScheme scheme = {}, int lo = -5,
                                                int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<double> e(static_cast<std::size_t>(rows) * cols);
    for (auto& x : e)
        x = d(rng);
    return superfuzz::SuperMatrix(rows, cols, std::move(e), std::move(scheme));
}

// Random fuzzy matrix on the grid {0, 0.1, ..., 1}.
inline superfuzz::SuperMatrix random_fuzzy_matrix(std::mt19937& rng, int rows, int cols,
                                                  superfuzz::PartitionScheme scheme = {}) {
    std::uniform_int_distribution<int> d(0, 10);
    std::vector<double> e(static_cast<std::size_t>(rows) * cols);
    for (auto& x : e)
        x = d(rng) / 10.0;
    return superfuzz::SuperMatrix(rows, cols, std::move(e), std::move(scheme));
}

inline std::vector<int> random_cuts(std::mt19937& rng, int dim) {
    std::vector<int> cuts;
    for (int k = 1; k < dim; ++k)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
            cuts.push_back(k);
    return cuts;
}

// Naive flat semiring product, independent of the blockwise path.
inline superfuzz::SuperMatrix flat_product_oracle(const superfuzz::SuperMatrix& a,
                                                  const superfuzz::SuperMatrix& b,
                                                  superfuzz::Semiring s) {
    using superfuzz::Semiring;
    superfuzz::SuperMatrix out = superfuzz::SuperMatrix::zeros(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            double acc = 0.0;
            for (int k = 0; k < a.cols(); ++k) {
                if (s == Semiring::PlusTimes)
                    acc += a(i, k) * b(k, j);
                else
                    acc = std::max(acc, std::min(a(i, k), b(k, j)));
            }
            out.at(i, j) = acc;
        }
    return out;
}

} // namespace testutil
