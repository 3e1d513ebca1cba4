#ifndef CHIRAL_ABELIAN_GROUP_HPP
#define CHIRAL_ABELIAN_GROUP_HPP

#include <functional>
#include <vector>

#include "chiral/int_matrix.hpp"
#include "chiral/number_theory.hpp"

namespace chiral {

/// A finite abelian group in invariant-factor normal form: the direct sum
/// of Z_{f_1} + ... + Z_{f_r} with f_1 | f_2 | ... and every f_i >= 2.
/// The trivial group is the empty factor list.
class AbelianGroup {
  public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<Int> factors);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    Int order() const;
    bool is_trivial() const { return factors_.empty(); }
    bool is_cyclic() const { return factors_.size() <= 1; }

    bool operator==(const AbelianGroup& other) const = default;

  private:
    std::vector<Int> factors_;
};

/// The p-primary part of a group: the direct sum of Z_{p^{e_i}} with
/// e_1 <= e_2 <= ... Zero part has an empty exponent list.
struct PrimaryPart {
    Int prime;
    std::vector<unsigned> exponents;

    bool is_zero() const { return exponents.empty(); }
    bool is_cyclic() const { return exponents.size() <= 1; }
    Int order() const;

    bool operator==(const PrimaryPart& other) const = default;
};

/// The cokernel of a square nonsingular integer matrix, read off the Smith
/// normal form diagonal. Throws DomainError when det = 0 (the group would
/// be infinite) and ContractError for non-square input.
AbelianGroup group_from_presentation(const IntMatrix& m);

/// p-adic valuations of the invariant factors, zero valuations dropped.
/// Throws ContractError when p is not prime.
PrimaryPart primary_part(const AbelianGroup& g, const Int& p);

/// All nonzero primary parts, primes ascending. Trial-division
/// factorization of the order by default; pass a custom factorizer for
/// inputs beyond desk scale.
using Factorizer = std::function<Factorization(const Int&)>;
std::vector<PrimaryPart> primary_decomposition(const AbelianGroup& g);
std::vector<PrimaryPart> primary_decomposition(const AbelianGroup& g,
                                               const Factorizer& factorizer);

}  // namespace chiral

#endif
