#ifndef CHIRAL_NUMBER_THEORY_HPP
#define CHIRAL_NUMBER_THEORY_HPP

#include <utility>
#include <vector>

#include "chiral/integer.hpp"

namespace chiral {

/// Full prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, multiplicity)

    Int value() const;  // product of p^e
};

/// Trial-division primality test. Desk-scale inputs only.
bool is_prime(const Int& n);

/// Trial division up to sqrt(n). Throws ContractError for n < 1.
Factorization factorize(const Int& n);

/// The p-adic valuation v_p(n) for n != 0.
unsigned valuation(const Int& n, const Int& p);

/// Euler's criterion a^((p-1)/2) mod p, by modular exponentiation.
/// Requires p an odd prime and gcd(a, p) = 1; ContractError otherwise.
bool is_quadratic_residue(const Int& a, const Int& p);

/// p mod 4 for an odd prime; ContractError for p = 2 or non-prime.
int mod4_class(const Int& p);

/// Whether a unit a is a square in (Z/p^n)*. For odd p this reduces to
/// Euler's criterion mod p via Hensel lifting; for p = 2 the classical
/// congruence conditions mod 4 / mod 8 apply.
bool is_square_unit_mod_prime_power(const Int& a, const Int& p, unsigned n);

}  // namespace chiral

#endif
