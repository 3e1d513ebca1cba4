#ifndef CHIRAL_TESTS_SUPPORT_HPP
#define CHIRAL_TESTS_SUPPORT_HPP

#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "chiral/abelian_group.hpp"
#include "chiral/int_matrix.hpp"
#include "chiral/integer.hpp"
#include "chiral/linking_form.hpp"
#include "chiral/number_theory.hpp"

// Test-only helpers: deterministic random inputs and brute-force oracles
// that recompute library answers along independent code paths.
namespace chiral::testing {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                               std::size_t cols, long max_abs) {
    std::uniform_int_distribution<long> entry(-max_abs, max_abs);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

/// A random 2g x 2g matrix A with A - A^T the standard symplectic form,
/// i.e. an abstract Seifert matrix. Its symmetrization always has odd
/// determinant, like a genuine knot presentation.
inline IntMatrix random_seifert(std::mt19937& rng, std::size_t genus,
                                long max_abs) {
    std::uniform_int_distribution<long> entry(-max_abs, max_abs);
    const std::size_t n = 2 * genus;
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            long v = entry(rng);
            a(i, j) = v;
            a(j, i) = v;
        }
    for (std::size_t g = 0; g < genus; ++g) a(2 * g, 2 * g + 1) += 1;
    return a;
}

/// Product of random elementary row operations applied to the identity;
/// always unimodular (det = +-1).
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n,
                                   unsigned steps) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> index(0, n - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, 5);
    for (unsigned s = 0; s < steps; ++s) {
        std::size_t i = index(rng), j = index(rng);
        if (i == j) continue;
        switch (kind(rng)) {
            case 0: m.swap_rows(i, j); break;
            case 1: m.negate_row(i); break;
            default: m.add_row_multiple(i, j, coef(rng)); break;
        }
    }
    return m;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline IntMatrix submatrix(const IntMatrix& a, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
    return s;
}

/// k-th determinantal divisor: gcd of all k x k minors (0 if all vanish).
/// Independent route to the Smith diagonal, using only `determinant`.
inline Int determinantal_divisor(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> rows(k), cols(k);
    Int g = 0;
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            g = gcd(g, determinant(submatrix(a, rows, cols)));
        } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
    return abs(g);
}

/// Smith diagonal via minor gcds: d_k = D_k / D_{k-1}; once some D_k = 0
/// every later entry is 0.
inline std::vector<Int> diagonal_via_minors(const IntMatrix& a) {
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> d(n, 0);
    Int prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Int dk = determinantal_divisor(a, k);
        if (dk == 0) break;
        d[k - 1] = dk / prev;
        prev = dk;
    }
    return d;
}

/// Every element of the group as a generator-coordinate vector. Caller
/// keeps the order small.
inline std::vector<std::vector<Int>> all_elements(const AbelianGroup& g) {
    const auto& f = g.invariant_factors();
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(f.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < f.size()) {
            cur[i] += 1;
            if (cur[i] < f[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == f.size()) break;
    }
    return out;
}

inline Int order_of_element(const std::vector<Int>& coords,
                            const AbelianGroup& g) {
    const auto& f = g.invariant_factors();
    Int ord = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        ord = lcm(ord, f[i] / gcd(f[i], coords[i]));
    return ord;
}

/// Adjoint injectivity by enumeration: every nonzero element must pair
/// nontrivially with something.
inline bool brute_force_nonsingular(const TorsionLinkingForm& f) {
    auto elements = all_elements(f.group());
    for (const auto& a : elements) {
        bool zero_elt = true;
        for (const Int& c : a)
            if (c != 0) zero_elt = false;
        if (zero_elt) continue;
        bool pairs = false;
        for (const auto& b : elements)
            if (f.pairing(a, b) != 0) {
                pairs = true;
                break;
            }
        if (!pairs) return false;
    }
    return true;
}

/// All elements of the p-primary part, as coordinates in the full group:
/// the generator of the p-part inside Z_{f_i} with f_i = p^e * m is m*g_i.
inline std::vector<std::vector<Int>> primary_elements(const AbelianGroup& g,
                                                      const Int& p) {
    const auto& f = g.invariant_factors();
    std::vector<std::size_t> idx;
    std::vector<Int> cofactor, part_order;
    for (std::size_t i = 0; i < f.size(); ++i) {
        unsigned v = valuation(f[i], p);
        if (v == 0) continue;
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), v);
        idx.push_back(i);
        part_order.push_back(pe);
        cofactor.push_back(f[i] / pe);
    }
    std::vector<std::vector<Int>> out;
    std::vector<Int> digits(idx.size(), 0);
    while (true) {
        std::vector<Int> coords(f.size(), 0);
        for (std::size_t t = 0; t < idx.size(); ++t)
            coords[idx[t]] = digits[t] * cofactor[t];
        out.push_back(std::move(coords));
        std::size_t t = 0;
        while (t < idx.size()) {
            digits[t] += 1;
            if (digits[t] < part_order[t]) break;
            digits[t] = 0;
            ++t;
        }
        if (t == idx.size()) break;
    }
    return out;
}

/// Smallest value of k*r^2 mod p^n over units r: a canonical label for the
/// square class of k, computed with no quadratic-residue theory. Two cyclic
/// forms are isometric exactly when their labels agree.
inline Int canonical_square_class(const CyclicLinkingForm& f) {
    Int m = f.modulus();
    Int best = -1;
    for (Int r = 1; r < m; ++r) {
        if (gcd(r, f.prime) != 1) continue;
        Int v = (f.k * r * r) % m;
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace chiral::testing

#endif
