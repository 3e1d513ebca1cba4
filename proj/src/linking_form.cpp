#include "chiral/linking_form.hpp"

#include <algorithm>

#include "chiral/errors.hpp"
#include "chiral/number_theory.hpp"
#include "chiral/smith.hpp"

namespace chiral {

TorsionLinkingForm::TorsionLinkingForm(AbelianGroup group, RationalMatrix gram)
    : group_(std::move(group)), gram_(std::move(gram)) {
    const auto& f = group_.invariant_factors();
    const std::size_t r = f.size();
    if (gram_.rows() != r || gram_.cols() != r)
        throw ContractError("TorsionLinkingForm: gram size != number of generators");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Rat& q = gram_(i, j);
            if (q < 0 || q >= 1)
                throw ContractError("TorsionLinkingForm: entries must lie in [0,1)");
            if (q != gram_(j, i))
                throw ContractError("TorsionLinkingForm: gram is not symmetric");
            // f_min * lambda(g_i, g_j) must vanish in Q/Z.
            const Rat scaled = q * f[std::min(i, j)];
            if (scaled.get_den() != 1)
                throw ContractError(
                    "TorsionLinkingForm: entry incompatible with generator order");
        }
}

Rat TorsionLinkingForm::pairing(const std::vector<Int>& a,
                                const std::vector<Int>& b) const {
    const std::size_t r = group_.invariant_factors().size();
    if (a.size() != r || b.size() != r)
        throw ContractError("pairing: coordinate length != number of generators");
    Rat acc = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (b[j] == 0) continue;
            acc += Rat(a[i] * b[j]) * gram_(i, j);
        }
    }
    return mod1(acc);
}

Int CyclicLinkingForm::modulus() const {
    Int m;
    mpz_pow_ui(m.get_mpz_t(), prime.get_mpz_t(), exponent);
    return m;
}

CyclicLinkingForm cyclic_form(const Int& p, unsigned n, const Int& k) {
    if (!is_prime(p)) throw ContractError("cyclic_form: p is not prime");
    if (n == 0) throw ContractError("cyclic_form: exponent must be >= 1");
    CyclicLinkingForm f{p, n, 0};
    Int m = f.modulus();
    mpz_fdiv_r(f.k.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    if (gcd(f.k, p) != 1)
        throw DomainError("form is singular: k shares a factor with p");
    return f;
}

TorsionLinkingForm linking_form_from_seifert(const IntMatrix& seifert) {
    if (!seifert.is_square())
        throw ContractError("linking_form_from_seifert: Seifert matrix not square");
    const IntMatrix presentation = seifert + seifert.transpose();
    const std::size_t n = presentation.rows();
    if (n == 0) return TorsionLinkingForm{};

    SmithDecomposition snf = smith_normal_form(presentation);
    // rational_inverse rejects det = 0 as "singular presentation matrix".
    RationalMatrix m_inv = rational_inverse(presentation);
    RationalMatrix u_inv = rational_inverse(snf.u);  // integral: U is unimodular

    // Generator i of the cokernel is the class of the i-th column of U^{-1},
    // so the Gram matrix of lambda(x, y) = x^T (A+A^T)^{-1} y on those
    // generators is U^{-T} (A+A^T)^{-1} U^{-1}.
    RationalMatrix w = u_inv.transpose() * m_inv * u_inv;

    std::vector<Int> diag = snf.diagonal();
    std::vector<std::size_t> keep;
    std::vector<Int> factors;
    for (std::size_t i = 0; i < n; ++i)
        if (diag[i] > 1) {
            keep.push_back(i);
            factors.push_back(diag[i]);
        }

    RationalMatrix gram(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            gram(a, b) = mod1(w(keep[a], keep[b]));

    return TorsionLinkingForm(AbelianGroup(std::move(factors)), std::move(gram));
}

TorsionLinkingForm negate(const TorsionLinkingForm& f) {
    const std::size_t r = f.gram().rows();
    RationalMatrix neg(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) neg(i, j) = mod1(-f.gram()(i, j));
    return TorsionLinkingForm(f.group(), std::move(neg));
}

TorsionLinkingForm restrict_to_primary(const TorsionLinkingForm& f, const Int& p) {
    if (!is_prime(p)) throw ContractError("restrict_to_primary: p is not prime");
    const auto& factors = f.group().invariant_factors();

    std::vector<std::size_t> keep;
    std::vector<Int> part_factors;
    std::vector<Int> cofactor;  // m with f_i = p^e * m; m*g_i generates the p-part
    for (std::size_t i = 0; i < factors.size(); ++i) {
        unsigned v = valuation(factors[i], p);
        if (v == 0) continue;
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), v);
        keep.push_back(i);
        part_factors.push_back(pe);
        cofactor.push_back(factors[i] / pe);
    }

    RationalMatrix gram(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            gram(a, b) =
                mod1(Rat(cofactor[a] * cofactor[b]) * f.gram()(keep[a], keep[b]));

    return TorsionLinkingForm(AbelianGroup(std::move(part_factors)), std::move(gram));
}

CyclicLinkingForm cyclic_parameter(const TorsionLinkingForm& f) {
    const auto& factors = f.group().invariant_factors();
    if (factors.size() != 1)
        throw ContractError("cyclic_parameter: group is not nontrivial cyclic");
    Factorization fac = factorize(factors[0]);
    if (fac.factors.size() != 1)
        throw ContractError("cyclic_parameter: group order is not a prime power");
    const Int& p = fac.factors[0].first;
    const unsigned n = fac.factors[0].second;

    Int modulus;
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), n);
    const Rat& v = f.gram()(0, 0);  // = k / p^n in lowest terms
    Int k = v.get_num() * (modulus / v.get_den());
    if (gcd(k, p) != 1)
        throw DomainError("form is singular: the adjoint map has nontrivial kernel");
    return CyclicLinkingForm{p, n, k};
}

bool cyclic_isometric(const CyclicLinkingForm& f, const CyclicLinkingForm& g) {
    if (f.prime != g.prime || f.exponent != g.exponent) return false;
    Int m = f.modulus();
    if (gcd(f.k, f.prime) != 1 || gcd(g.k, g.prime) != 1)
        throw ContractError("cyclic_isometric: k must be a unit mod p");
    Int k_inv;
    mpz_invert(k_inv.get_mpz_t(), f.k.get_mpz_t(), m.get_mpz_t());
    Int ratio;
    Int prod = g.k * k_inv;
    mpz_fdiv_r(ratio.get_mpz_t(), prod.get_mpz_t(), m.get_mpz_t());
    return is_square_unit_mod_prime_power(ratio, f.prime, f.exponent);
}

std::optional<std::uint64_t> self_negation_witness(const CyclicLinkingForm& f,
                                                   std::uint64_t bound) {
    // 64-bit products below stay exact only while m^2 < 2^64.
    constexpr std::uint64_t kMaxEnumerable = 4'000'000'000ULL;
    if (bound > kMaxEnumerable)
        throw ContractError("self_negation_witness: bound exceeds exact 64-bit range");
    if (!is_prime(f.prime))
        throw ContractError("self_negation_witness: p is not prime");
    if (f.exponent == 0)
        throw ContractError("self_negation_witness: exponent must be >= 1");

    Int modulus = f.modulus();
    if (modulus > Int(static_cast<unsigned long>(bound)))
        throw OracleBoundError("oracle bound exceeded: p^n = " + to_string(modulus) +
                               " > " + std::to_string(bound));

    const std::uint64_t m = modulus.get_ui();
    const std::uint64_t p = f.prime.get_ui();
    Int k_red;
    mpz_fdiv_r(k_red.get_mpz_t(), f.k.get_mpz_t(), modulus.get_mpz_t());
    const std::uint64_t k = k_red.get_ui();
    if (k % p == 0)
        throw ContractError("self_negation_witness: k must be a unit mod p");

    const std::uint64_t target = m - k;  // -k mod m; k is a nonzero unit
    for (std::uint64_t r = 1; r < m; ++r) {
        if (r % p == 0) continue;  // not a unit
        if (k * ((r * r) % m) % m == target) return r;
    }
    return std::nullopt;
}

bool brute_force_self_negation_isometric(const CyclicLinkingForm& f,
                                         std::uint64_t bound) {
    return self_negation_witness(f, bound).has_value();
}

}  // namespace chiral
