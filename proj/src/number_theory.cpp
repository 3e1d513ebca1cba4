#include "chiral/number_theory.hpp"

#include "chiral/errors.hpp"

namespace chiral {

Int Factorization::value() const {
    Int v = 1;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Factorization factorize(const Int& n) {
    if (n < 1) throw ContractError("factorize: argument must be >= 1");
    Factorization f;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) f.factors.emplace_back(p, e);
    };
    strip(2);
    for (Int d = 3; d * d <= rest; d += 2) strip(d);
    if (rest > 1) f.factors.emplace_back(rest, 1);
    return f;
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw ContractError("valuation: undefined for 0");
    if (p < 2) throw ContractError("valuation: base must be >= 2");
    unsigned v = 0;
    Int rest = abs(n);
    while (rest % p == 0) {
        rest /= p;
        ++v;
    }
    return v;
}

bool is_quadratic_residue(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p))
        throw ContractError("is_quadratic_residue: modulus must be an odd prime");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (r == 0)
        throw ContractError("is_quadratic_residue: argument divisible by p");
    Int e = (p - 1) / 2;
    Int res;
    mpz_powm(res.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return res == 1;
}

int mod4_class(const Int& p) {
    if (p == 2) throw ContractError("mod4_class: 2 has no odd residue class");
    if (!is_prime(p)) throw ContractError("mod4_class: argument is not prime");
    return static_cast<int>(mpz_fdiv_ui(p.get_mpz_t(), 4));
}

bool is_square_unit_mod_prime_power(const Int& a, const Int& p, unsigned n) {
    if (!is_prime(p))
        throw ContractError("is_square_unit_mod_prime_power: p is not prime");
    if (n == 0) throw ContractError("is_square_unit_mod_prime_power: n must be >= 1");
    Int modulus;
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), n);
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    if (gcd(r, p) != 1)
        throw ContractError("is_square_unit_mod_prime_power: argument is not a unit");
    if (p == 2) {
        if (n == 1) return true;
        if (n == 2) return r % 4 == 1;
        return r % 8 == 1;
    }
    // Odd p: a unit is a square mod p^n iff it is one mod p.
    return is_quadratic_residue(r, p);
}

}  // namespace chiral
