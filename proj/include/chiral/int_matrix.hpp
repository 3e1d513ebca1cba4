#ifndef CHIRAL_INT_MATRIX_HPP
#define CHIRAL_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "chiral/integer.hpp"

namespace chiral {

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// Holds Seifert matrices and the presentation matrices built from them.
/// Knot presentation matrices are tiny (2g x 2g), so no sparse storage.
class IntMatrix {
  public:
    IntMatrix() = default;  // 0x0
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator*(const IntMatrix& other) const;

    bool operator==(const IntMatrix& other) const = default;

    // In-place elementary operations; used by the normal-form routines.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);  // row dst += c*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Dense matrix of exact rationals. Companion type for inverses and
/// linking-form Gram matrices; no floating point anywhere.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    explicit RationalMatrix(const IntMatrix& m);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;

    bool operator==(const RationalMatrix& other) const = default;

    bool is_identity() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

/// Exact signed determinant by fraction-free (Bareiss) elimination.
/// Throws ContractError on non-square input. det of the 0x0 matrix is 1.
Int determinant(const IntMatrix& a);

/// Exact rational inverse. Throws ContractError on non-square input and
/// DomainError("singular presentation matrix") when det = 0.
RationalMatrix rational_inverse(const IntMatrix& a);

}  // namespace chiral

#endif
