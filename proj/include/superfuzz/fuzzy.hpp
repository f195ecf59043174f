#pragma once

#include <vector>

#include "superfuzz/algebra.hpp"
#include "superfuzz/matrix.hpp"

namespace superfuzz {

/// A SuperMatrix whose every entry lies in [0,1]. Range violations are
/// construction-time errors, not silent clamps.
class FuzzyMatrix {
public:
    explicit FuzzyMatrix(SuperMatrix m);

    const SuperMatrix& matrix() const { return m_; }
    int rows() const { return m_.rows(); }
    int cols() const { return m_.cols(); }

private:
    SuperMatrix m_;
};

enum class StateDomain {
    Binary,  // {0,1}
    Bipolar, // {-1,0,1}
    Scaled,  // integers in [-scale, scale]
    Fuzzy,   // [0,1]
};

const char* state_domain_name(StateDomain d);

/// A 1 x n state row vector with a declared value domain and a partition
/// (one block per expert). Entries are validated against the domain.
struct SuperStateVector {
    StateDomain domain = StateDomain::Binary;
    int scale = 0; // Scaled only
    std::vector<int> cuts;
    std::vector<double> values;

    static SuperStateVector make(StateDomain domain, std::vector<double> values,
                                 std::vector<int> cuts = {}, int scale = 0);

    int size() const { return static_cast<int>(values.size()); }
    std::vector<int> on_set() const; // indices of nonzero coordinates

    bool operator==(const SuperStateVector&) const = default;
};

/// min(A', A) of a 1 x n fuzzy row supervector with column cuts C: the n x n
/// matrix of pairwise minima, carrying scheme (C, C). Always flat-symmetric;
/// a symmetric supermatrix whenever C is nonempty.
FuzzyMatrix super_pseudo_product(const FuzzyMatrix& a);

/// Max-min product of a special row supermatrix with its own transpose
/// (x x^t when x carries no row cuts; x^t x for a special column matrix with
/// no column cuts). The result is a plain symmetric fuzzy matrix whose
/// diagonal holds the row maxima.
SuperMatrix minor_product_moment(const FuzzyMatrix& x);

/// Threshold-and-update: 1 where raw > 0 or the index is clamped, else 0.
/// The clamp is the set of initially-on coordinates; pass {} for the space
/// that did not receive the stimulus.
SuperStateVector threshold_update(const std::vector<double>& raw, const std::vector<int>& cuts,
                                  const std::vector<int>& clamp);

/// Threshold binary signal: 1 above the threshold, 0 below, and the previous
/// signal on exact equality.
SuperStateVector bam_signal(const std::vector<double>& raw, const std::vector<double>& previous,
                            const std::vector<double>& thresholds, const std::vector<int>& cuts);

} // namespace superfuzz
