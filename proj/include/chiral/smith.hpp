#ifndef CHIRAL_SMITH_HPP
#define CHIRAL_SMITH_HPP

#include <vector>

#include "chiral/int_matrix.hpp"

namespace chiral {

/// Smith normal form U*A*V = D of an integer matrix A.
///
/// U (rows x rows) and V (cols x cols) are unimodular, D is diagonal with
/// non-negative entries d_1 | d_2 | ... The diagonal is unique; U and V are
/// whatever the deterministic reduction produced.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    /// The diagonal of D, length min(rows, cols).
    std::vector<Int> diagonal() const;
};

/// Computes the Smith normal form of an arbitrary (possibly non-square,
/// possibly empty) integer matrix.
///
/// Pivoting is deterministic: the entry of smallest nonzero absolute value
/// in the remaining submatrix, ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace chiral

#endif
