#include "superfuzz/algebra.hpp"

#include <cmath>
#include <string>

#include "superfuzz/error.hpp"
#include "superfuzz/kernels.hpp"

namespace superfuzz {

const char* semiring_name(Semiring s) {
    return s == Semiring::PlusTimes ? "plus_times" : "max_min";
}

SuperMatrix transpose(const SuperMatrix& a) {
    SuperMatrix out = SuperMatrix::zeros(a.cols(), a.rows(), {a.scheme().col_cuts, a.scheme().row_cuts});
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.at(j, i) = a(i, j);
    return out;
}

SuperMatrix pseudo_transpose(const SuperMatrix& a) {
    const int m = a.rows(), n = a.cols();
    PartitionScheme scheme;
    for (auto it = a.scheme().col_cuts.rbegin(); it != a.scheme().col_cuts.rend(); ++it)
        scheme.row_cuts.push_back(n - *it);
    for (auto it = a.scheme().row_cuts.rbegin(); it != a.scheme().row_cuts.rend(); ++it)
        scheme.col_cuts.push_back(m - *it);
    SuperMatrix out = SuperMatrix::zeros(n, m, std::move(scheme));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            out.at(i, j) = a(m - 1 - j, n - 1 - i);
    return out;
}

static std::string cuts_str(const std::vector<int>& cuts) {
    std::string s = "[";
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(cuts[i]);
    }
    return s + "]";
}

SuperMatrix add(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(Errc::ShapeMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                             " + " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    if (!(a.scheme() == b.scheme()))
        throw Error(Errc::SchemeMismatch,
                    "addition needs identical schemes; lhs rows " + cuts_str(a.scheme().row_cuts) +
                        " cols " + cuts_str(a.scheme().col_cuts) + ", rhs rows " +
                        cuts_str(b.scheme().row_cuts) + " cols " + cuts_str(b.scheme().col_cuts));
    std::vector<double> sum(a.entries().size());
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = a.entries()[i] + b.entries()[i];
    return SuperMatrix(a.rows(), a.cols(), std::move(sum), a.scheme());
}

SuperMatrix multiply(const SuperMatrix& a, const SuperMatrix& b, Semiring s) {
    if (a.cols() != b.rows())
        throw Error(Errc::ShapeMismatch, "inner dimensions " + std::to_string(a.cols()) + " vs " +
                                             std::to_string(b.rows()));
    if (a.scheme().col_cuts != b.scheme().row_cuts)
        throw Error(Errc::BlockMismatch, "lhs col_cuts " + cuts_str(a.scheme().col_cuts) +
                                             " != rhs row_cuts " + cuts_str(b.scheme().row_cuts));

    SuperMatrix out = SuperMatrix::zeros(a.rows(), b.cols(),
                                         {a.scheme().row_cuts, b.scheme().col_cuts});
    const auto& k = kernels::active_backend();
    kernels::RowUpdateFn update = s == Semiring::PlusTimes ? k.plus_times : k.max_min;

    // Blockwise over the product grid: for each block row R and block column
    // C, accumulate the contributions of every inner block T. Inner blocks
    // are walked in ascending order so plus-times accumulation matches the
    // flat product's rounding exactly.
    auto roff = block_offsets(a.scheme().row_cuts, a.rows());
    auto toff = block_offsets(a.scheme().col_cuts, a.cols());
    auto coff = block_offsets(b.scheme().col_cuts, b.cols());
    for (std::size_t rb = 0; rb + 1 < roff.size(); ++rb)
        for (std::size_t tb = 0; tb + 1 < toff.size(); ++tb)
            for (std::size_t cb = 0; cb + 1 < coff.size(); ++cb) {
                const std::size_t width = static_cast<std::size_t>(coff[cb + 1] - coff[cb]);
                for (int i = roff[rb]; i < roff[rb + 1]; ++i) {
                    double* crow = out.row_data(i) + coff[cb];
                    for (int t = toff[tb]; t < toff[tb + 1]; ++t)
                        update(a(i, t), b.row_data(t) + coff[cb], crow, width);
                }
            }
    return out;
}

SuperMatrix identity(int n) {
    SuperMatrix out = SuperMatrix::zeros(n, n);
    for (int i = 0; i < n; ++i)
        out.at(i, i) = 1.0;
    return out;
}

bool flat_equal(const SuperMatrix& a, const SuperMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.entries() == b.entries();
}

bool flat_equal(const SuperMatrix& a, const SuperMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (std::abs(a.entries()[i] - b.entries()[i]) > tol)
            return false;
    return true;
}

bool is_flat_symmetric(const SuperMatrix& a, double tol) {
    if (a.rows() != a.cols())
        return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > tol)
                return false;
    return true;
}

bool is_symmetric_supermatrix(const SuperMatrix& a) {
    if (a.rows() != a.cols())
        return false;
    auto cls = classify_partition(a.scheme(), a.rows(), a.cols());
    bool scheme_symmetric = cls == PartitionClass::Symmetric ||
                            cls == PartitionClass::SymmetricAndPseudo || cls == PartitionClass::Cell;
    if (!scheme_symmetric)
        return false;

    auto off = block_offsets(a.scheme().row_cuts, a.rows());
    const std::size_t nb = off.size() - 1;
    for (std::size_t bi = 0; bi < nb; ++bi)
        for (std::size_t bj = bi; bj < nb; ++bj)
            for (int i = off[bi]; i < off[bi + 1]; ++i)
                for (int j = off[bj]; j < off[bj + 1]; ++j) {
                    // diagonal block symmetric; block(i,j) = block(j,i)^t
                    if (a(i, j) != a(j, i))
                        return false;
                }
    return true;
}

bool is_symmetric_supermatrix_flat(const SuperMatrix& a) {
    if (a.rows() != a.cols() || !is_flat_symmetric(a))
        return false;
    auto cls = classify_partition(a.scheme(), a.rows(), a.cols());
    return cls == PartitionClass::Symmetric || cls == PartitionClass::SymmetricAndPseudo ||
           cls == PartitionClass::Cell;
}

bool is_pseudo_symmetric(const SuperMatrix& a) {
    if (a.rows() != a.cols())
        return false;
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a(i, j) != a(n - 1 - j, n - 1 - i))
                return false;
    return true;
}

bool is_pseudo_symmetric_supermatrix(const SuperMatrix& a) {
    if (!is_pseudo_symmetric(a))
        return false;
    auto cls = classify_partition(a.scheme(), a.rows(), a.cols());
    return cls == PartitionClass::Pseudo || cls == PartitionClass::SymmetricAndPseudo ||
           cls == PartitionClass::Cell;
}

} // namespace superfuzz
