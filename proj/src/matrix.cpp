#include "superfuzz/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "superfuzz/error.hpp"

namespace superfuzz {

SuperMatrix::SuperMatrix(int rows, int cols, std::vector<double> entries, PartitionScheme scheme)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), scheme_(std::move(scheme)) {
    validate_scheme(scheme_, rows_, cols_);
    if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw Error(Errc::ShapeMismatch, "entries length " + std::to_string(entries_.size()) +
                                             " != " + std::to_string(rows_) + "*" + std::to_string(cols_));
    for (double v : entries_)
        if (std::isnan(v))
            throw Error(Errc::InvalidArgument, "NaN entry");
}

SuperMatrix SuperMatrix::zeros(int rows, int cols, PartitionScheme scheme) {
    return SuperMatrix(rows, cols, std::vector<double>(static_cast<std::size_t>(rows) * cols, 0.0),
                       std::move(scheme));
}

SuperMatrix SuperMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows,
                                   PartitionScheme scheme) {
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(r) * c);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw Error(Errc::ShapeMismatch, "ragged row list");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return SuperMatrix(r, c, std::move(flat), std::move(scheme));
}

void SuperMatrix::set_scheme(PartitionScheme scheme) {
    validate_scheme(scheme, rows_, cols_);
    scheme_ = std::move(scheme);
}

SuperMatrix super_diagonal(const std::vector<SuperMatrix>& blocks) {
    if (blocks.empty())
        throw Error(Errc::EmptyBlockList, "super_diagonal needs at least one block");
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        if (b.empty())
            throw Error(Errc::InvalidArgument, "empty block");
        if (!b.scheme().trivial())
            throw Error(Errc::InvalidArgument, "blocks must carry no internal cuts");
        rows += b.rows();
        cols += b.cols();
    }
    PartitionScheme scheme;
    int r = 0, c = 0;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
        r += blocks[i].rows();
        c += blocks[i].cols();
        scheme.row_cuts.push_back(r);
        scheme.col_cuts.push_back(c);
    }
    SuperMatrix out = SuperMatrix::zeros(rows, cols, std::move(scheme));
    r = c = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                out.at(r + i, c + j) = b(i, j);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

} // namespace superfuzz
