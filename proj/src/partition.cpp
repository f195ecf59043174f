#include "superfuzz/partition.hpp"

#include <algorithm>
#include <string>

#include "superfuzz/error.hpp"

namespace superfuzz {

const char* partition_class_name(PartitionClass c) {
    switch (c) {
    case PartitionClass::Trivial: return "trivial";
    case PartitionClass::General: return "general";
    case PartitionClass::Symmetric: return "symmetric";
    case PartitionClass::Pseudo: return "pseudo";
    case PartitionClass::SymmetricAndPseudo: return "symmetric_and_pseudo";
    case PartitionClass::Cell: return "cell";
    }
    return "?";
}

void validate_cuts(const std::vector<int>& cuts, int dim) {
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i] < 1 || cuts[i] > dim - 1)
            throw Error(Errc::OutOfRangeCut,
                        "cut " + std::to_string(cuts[i]) + " outside 1.." + std::to_string(dim - 1));
        if (i > 0) {
            if (cuts[i] == cuts[i - 1])
                throw Error(Errc::DuplicateCut, "cut " + std::to_string(cuts[i]) + " repeated");
            if (cuts[i] < cuts[i - 1])
                throw Error(Errc::UnsortedCuts, "cut list not ascending at position " + std::to_string(i));
        }
    }
}

void validate_scheme(const PartitionScheme& scheme, int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw Error(Errc::InvalidArgument, "matrix dimensions must be >= 1");
    validate_cuts(scheme.row_cuts, rows);
    validate_cuts(scheme.col_cuts, cols);
}

bool cuts_are_pseudo_pair(const std::vector<int>& row_cuts, const std::vector<int>& col_cuts, int n) {
    if (row_cuts.size() != col_cuts.size())
        return false;
    std::vector<int> mirrored;
    mirrored.reserve(col_cuts.size());
    for (auto it = col_cuts.rbegin(); it != col_cuts.rend(); ++it)
        mirrored.push_back(n - *it);
    return mirrored == row_cuts;
}

static bool is_full_cut_set(const std::vector<int>& cuts, int dim) {
    if (static_cast<int>(cuts.size()) != dim - 1)
        return false;
    for (int i = 0; i < dim - 1; ++i)
        if (cuts[i] != i + 1)
            return false;
    return true;
}

PartitionClass classify_partition(const PartitionScheme& scheme, int rows, int cols) {
    validate_scheme(scheme, rows, cols);
    if (scheme.trivial())
        return PartitionClass::Trivial;
    if (is_full_cut_set(scheme.row_cuts, rows) && is_full_cut_set(scheme.col_cuts, cols))
        return PartitionClass::Cell;
    if (rows == cols) {
        bool sym = !scheme.row_cuts.empty() && scheme.row_cuts == scheme.col_cuts;
        bool pseudo = !scheme.row_cuts.empty() && cuts_are_pseudo_pair(scheme.row_cuts, scheme.col_cuts, rows);
        if (sym && pseudo)
            return PartitionClass::SymmetricAndPseudo;
        if (sym)
            return PartitionClass::Symmetric;
        if (pseudo)
            return PartitionClass::Pseudo;
    }
    return PartitionClass::General;
}

// Subsets of {1..dim-1} in lexicographic order of their sorted element lists:
// {}, {1}, {1,2}, {1,2,3}, ..., {1,3}, ..., {2}, ...
static void subsets_lex(int dim, std::vector<std::vector<int>>& out) {
    out.emplace_back();
    std::vector<int> cur;
    // depth-first extension by the next larger element
    auto extend = [&](auto&& self, int from) -> void {
        for (int v = from; v <= dim - 1; ++v) {
            cur.push_back(v);
            out.push_back(cur);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    extend(extend, 1);
}

std::vector<PartitionScheme> enumerate_partitions(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw Error(Errc::InvalidArgument, "matrix dimensions must be >= 1");
    std::vector<std::vector<int>> rsets, csets;
    subsets_lex(rows, rsets);
    subsets_lex(cols, csets);
    std::vector<PartitionScheme> out;
    out.reserve(rsets.size() * csets.size() - 1);
    for (const auto& r : rsets)
        for (const auto& c : csets) {
            if (r.empty() && c.empty())
                continue;
            out.push_back({r, c});
        }
    return out;
}

std::uint64_t count_partitions(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw Error(Errc::InvalidArgument, "matrix dimensions must be >= 1");
    return (std::uint64_t{1} << (rows - 1)) * (std::uint64_t{1} << (cols - 1)) - 1;
}

std::uint64_t count_symmetric_partitions(int n) {
    if (n < 1)
        throw Error(Errc::InvalidArgument, "matrix dimension must be >= 1");
    return (std::uint64_t{1} << (n - 1)) - 1;
}

std::vector<int> block_offsets(const std::vector<int>& cuts, int dim) {
    std::vector<int> off;
    off.reserve(cuts.size() + 2);
    off.push_back(0);
    off.insert(off.end(), cuts.begin(), cuts.end());
    off.push_back(dim);
    return off;
}

std::vector<int> block_sizes(const std::vector<int>& cuts, int dim) {
    auto off = block_offsets(cuts, dim);
    std::vector<int> sizes(off.size() - 1);
    for (std::size_t i = 0; i + 1 < off.size(); ++i)
        sizes[i] = off[i + 1] - off[i];
    return sizes;
}

} // namespace superfuzz
