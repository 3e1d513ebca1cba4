#include "chiral/smith.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

namespace chiral {

namespace {

// Smallest nonzero |entry| in the submatrix d[t.., t..]; ties by (row, col).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(
    const IntMatrix& d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = s.d;

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        auto piv = find_pivot(d, t);
        if (!piv) break;  // submatrix is zero; done

        d.swap_rows(t, piv->first);
        s.u.swap_rows(t, piv->first);
        d.swap_cols(t, piv->second);
        s.v.swap_cols(t, piv->second);

        for (;;) {
            // Knock entries in column/row t down below |pivot|. Quotients are
            // rounded to nearest so remainders shrink fast.
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d(i, t).get_mpz_t(),
                            d(t, t).get_mpz_t());
                if (2 * abs(r) > abs(d(t, t))) q += 1;
                d.add_row_multiple(i, t, -q);
                s.u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d(t, j).get_mpz_t(),
                            d(t, t).get_mpz_t());
                if (2 * abs(r) > abs(d(t, t))) q += 1;
                d.add_col_multiple(j, t, -q);
                s.v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Residues survived; a strictly smaller pivot now exists in
                // row/column t. Re-pick and go again.
                auto p2 = find_pivot(d, t);
                d.swap_rows(t, p2->first);
                s.u.swap_rows(t, p2->first);
                d.swap_cols(t, p2->second);
                s.v.swap_cols(t, p2->second);
                continue;
            }

            // Divisibility pass: the pivot must divide the whole remaining
            // submatrix before we move on, or the chain d_t | d_{t+1} breaks.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        s.u.add_row_multiple(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }

    for (std::size_t i = 0; i < steps; ++i)
        if (d(i, i) < 0) {
            d.negate_row(i);
            s.u.negate_row(i);
        }
    return s;
}

}  // namespace chiral
