#include "chiral/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "chiral/errors.hpp"

namespace chiral {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw ContractError("ragged initializer for IntMatrix");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ContractError("matrix addition: dimension mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        s.entries_[k] = entries_[k] + other.entries_[k];
    return s;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw ContractError("matrix product: dimension mismatch");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p(i, j) += a * other(k, j);
        }
    return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ',';
            out << (*this)(i, j).get_str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

RationalMatrix::RationalMatrix(const IntMatrix& m)
    : RationalMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_)
        throw ContractError("matrix product: dimension mismatch");
    RationalMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p(i, j) += a * other(k, j);
        }
    return p;
}

bool RationalMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw ContractError("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;  // empty product

    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && w(r, k) == 0) ++r;
            if (r == n) return 0;
            w.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

RationalMatrix rational_inverse(const IntMatrix& a) {
    if (!a.is_square())
        throw ContractError("rational_inverse: matrix is not square");
    const std::size_t n = a.rows();
    RationalMatrix w(a);
    RationalMatrix inv = RationalMatrix::identity(n);

    // Gauss-Jordan over Q; exact, so any nonzero pivot will do.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && w(r, k) == 0) ++r;
        if (r == n) throw DomainError("singular presentation matrix");
        if (r != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(k, j), w(r, j));
                std::swap(inv(k, j), inv(r, j));
            }
        Rat piv = w(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            w(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w(i, k) == 0) continue;
            Rat f = w(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

}  // namespace chiral
