#pragma once

#include "superfuzz/matrix.hpp"
#include "superfuzz/semiring.hpp"

namespace superfuzz {

/// Flat transpose; the scheme's row and column cuts swap with it.
SuperMatrix transpose(const SuperMatrix& a);

/// Reflection across the anti-diagonal: for an m x n input the result is
/// n x m with result(i,j) = a(m+1-j, n+1-i) in 1-based terms. Cuts map by
/// the same index reversal (row_cuts = {n-c}, col_cuts = {m-r}) so applying
/// it twice is the identity on entries and scheme.
SuperMatrix pseudo_transpose(const SuperMatrix& a);

/// Entrywise sum. Requires equal shapes and equal schemes (submatrices of
/// unequal order cannot be added).
SuperMatrix add(const SuperMatrix& a, const SuperMatrix& b);

/// Block-conformable product: a.cols == b.rows and a's column cuts must
/// equal b's row cuts. Computed blockwise over the block grid; the result
/// carries (a.row_cuts, b.col_cuts) and equals the flat semiring product
/// entrywise. Minor and major products are both instances of this: the
/// distinction lives entirely in the operands' schemes.
SuperMatrix multiply(const SuperMatrix& a, const SuperMatrix& b, Semiring s);

SuperMatrix identity(int n);

/// Equality of the simple forms: same shape and entries, schemes ignored.
bool flat_equal(const SuperMatrix& a, const SuperMatrix& b);
bool flat_equal(const SuperMatrix& a, const SuperMatrix& b, double tol);

bool is_flat_symmetric(const SuperMatrix& a, double tol = 0.0);

/// Symmetric supermatrix check via the block conditions: a nontrivial
/// symmetric scheme, symmetric square diagonal blocks, and
/// block(i,j) = block(j,i)^t off the diagonal. A symmetric plain matrix
/// with no cuts is reported false.
bool is_symmetric_supermatrix(const SuperMatrix& a);

/// Same predicate through the equivalent route (flat symmetry and a
/// symmetric scheme); kept separate so the two can be checked against
/// each other.
bool is_symmetric_supermatrix_flat(const SuperMatrix& a);

/// Square and equal to its pseudo transpose (scheme ignored).
bool is_pseudo_symmetric(const SuperMatrix& a);

/// Pseudo symmetric and carrying a pseudo partition.
bool is_pseudo_symmetric_supermatrix(const SuperMatrix& a);

} // namespace superfuzz
