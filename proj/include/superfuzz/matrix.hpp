#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "superfuzz/partition.hpp"

namespace superfuzz {

/// Dense row-major real matrix plus a partition scheme.
///
/// This is the single representation for plain matrices, supermatrices and
/// the row/column supervectors: a supervector is a 1 x n (or n x 1) matrix
/// whose nonempty cut list carries the partition. Entries are validated to
/// be NaN-free and the scheme to fit the shape at construction.
class SuperMatrix {
public:
    SuperMatrix() = default; // empty placeholder; real matrices are >= 1x1

    SuperMatrix(int rows, int cols, std::vector<double> entries, PartitionScheme scheme = {});

    static SuperMatrix zeros(int rows, int cols, PartitionScheme scheme = {});
    static SuperMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows,
                                 PartitionScheme scheme = {});

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    double& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<const double> row(int i) const {
        return {entries_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
    }
    double* row_data(int i) { return entries_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row_data(int i) const { return entries_.data() + static_cast<std::size_t>(i) * cols_; }

    const std::vector<double>& entries() const { return entries_; }
    const PartitionScheme& scheme() const { return scheme_; }

    /// Replaces the scheme (revalidated against the current shape).
    void set_scheme(PartitionScheme scheme);

    bool operator==(const SuperMatrix&) const = default; // strict: shape + entries + scheme

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> entries_;
    PartitionScheme scheme_;
};

/// Places the given blocks on a diagonal grid, zero elsewhere; cuts at the
/// cumulative block boundaries (none for a single block). Blocks must be
/// plain matrices (no internal cuts).
SuperMatrix super_diagonal(const std::vector<SuperMatrix>& blocks);

} // namespace superfuzz
