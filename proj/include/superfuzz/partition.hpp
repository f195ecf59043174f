#pragma once

#include <cstdint>
#include <vector>

namespace superfuzz {

/// Row/column cut positions defining a supermatrix's block grid.
///
/// A cut at k separates row (or column) k-1 from row k of 0-based storage,
/// i.e. cuts use 1-based boundary positions in 1..dim-1. Cut lists are kept
/// sorted ascending with no duplicates; empty lists describe a plain matrix.
struct PartitionScheme {
    std::vector<int> row_cuts;
    std::vector<int> col_cuts;

    bool operator==(const PartitionScheme&) const = default;
    bool trivial() const { return row_cuts.empty() && col_cuts.empty(); }
};

enum class PartitionClass {
    Trivial,
    General,
    Symmetric,
    Pseudo,
    SymmetricAndPseudo,
    Cell,
};

const char* partition_class_name(PartitionClass c);

/// Throws Error(OutOfRangeCut | UnsortedCuts | DuplicateCut) if the cut list
/// is not strictly increasing inside 1..dim-1.
void validate_cuts(const std::vector<int>& cuts, int dim);

/// Validates a full scheme against a rows x cols matrix. Throws on violation.
void validate_scheme(const PartitionScheme& scheme, int rows, int cols);

/// Most specific class of a (valid) scheme. Cell takes precedence; Trivial
/// is reported only for the empty scheme. Symmetric and Pseudo require a
/// square matrix.
PartitionClass classify_partition(const PartitionScheme& scheme, int rows, int cols);

/// All nontrivial schemes of a rows x cols matrix, lexicographic on
/// (row_cuts, col_cuts). Size is 2^(rows-1) * 2^(cols-1) - 1.
std::vector<PartitionScheme> enumerate_partitions(int rows, int cols);

std::uint64_t count_partitions(int rows, int cols);
std::uint64_t count_symmetric_partitions(int n);

// Block structure induced by a cut list on a dimension.
std::vector<int> block_sizes(const std::vector<int>& cuts, int dim);
std::vector<int> block_offsets(const std::vector<int>& cuts, int dim); // size = #blocks+1, first 0, last dim

/// True iff row_cuts = { n - c : c in col_cuts } as sets. This makes the
/// column->row and row->column directions of the pseudo-partition rule a
/// single symmetric condition.
bool cuts_are_pseudo_pair(const std::vector<int>& row_cuts,
                          const std::vector<int>& col_cuts, int n);

} // namespace superfuzz
