#ifndef CHIRAL_LINKING_FORM_HPP
#define CHIRAL_LINKING_FORM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "chiral/abelian_group.hpp"
#include "chiral/int_matrix.hpp"

namespace chiral {

/// A symmetric bilinear pairing H x H -> Q/Z on a finite abelian group,
/// stored as the Gram matrix over the invariant-factor generators.
///
/// Entry (i, j) is the pairing of the i-th and j-th generators, kept as a
/// reduced exact rational in [0, 1). Exactness is mandatory here: a Q/Z
/// value that drifts by any epsilon is a different group element.
class TorsionLinkingForm {
  public:
    TorsionLinkingForm() = default;  // form on the trivial group

    /// Validates symmetry and order compatibility: the (i, j) entry times
    /// the smaller of the two generator orders must be an integer.
    TorsionLinkingForm(AbelianGroup group, RationalMatrix gram);

    const AbelianGroup& group() const { return group_; }
    const RationalMatrix& gram() const { return gram_; }

    /// Pairing of two elements given by generator coordinates; result in [0, 1).
    Rat pairing(const std::vector<Int>& a, const std::vector<Int>& b) const;

    bool operator==(const TorsionLinkingForm& other) const = default;

  private:
    AbelianGroup group_;
    RationalMatrix gram_;
};

/// A linking form on the cyclic group Z_{p^n}: (a, b) -> k*a*b / p^n mod 1,
/// with k a unit mod p. Such forms classify pairings on cyclic p-groups.
struct CyclicLinkingForm {
    Int prime;
    unsigned exponent = 1;  // n >= 1
    Int k;                  // reduced to [1, p^n), coprime to p

    Int modulus() const;  // p^n

    bool operator==(const CyclicLinkingForm& other) const = default;
};

/// Validating constructor: checks p prime, n >= 1, reduces k mod p^n and
/// requires it to stay a unit.
CyclicLinkingForm cyclic_form(const Int& p, unsigned n, const Int& k);

/// The linking form of the double branched cover from a Seifert matrix A:
/// the group presented by A + A^T, paired via the inverse of A + A^T read
/// mod 1 in the Smith normal form basis.
///
/// Throws DomainError("singular presentation matrix") when det(A + A^T) = 0
/// and ContractError for non-square input. The 0x0 matrix gives the trivial
/// form (unknot).
TorsionLinkingForm linking_form_from_seifert(const IntMatrix& seifert);

/// The form with every value negated in Q/Z; mirrors orientation reversal
/// of the covering manifold.
TorsionLinkingForm negate(const TorsionLinkingForm& f);

/// Restriction to the p-primary part. The generator of order p^e inside
/// Z_{f_i} with f_i = p^e * m is m * g_i; restricting is evaluating the
/// pairing on those elements. The restriction of a nonsingular form stays
/// nonsingular, and distinct primary parts pair to zero.
TorsionLinkingForm restrict_to_primary(const TorsionLinkingForm& f, const Int& p);

/// Reads off (p, n, k) with lambda(1, 1) = k/p^n from a form on a cyclic
/// p-group. Throws ContractError if the group is not a nontrivial cyclic
/// p-group, and DomainError("form is singular") when p divides k (such a
/// pairing has the subgroup of order p in the kernel of its adjoint).
CyclicLinkingForm cyclic_parameter(const TorsionLinkingForm& f);

/// Number-theoretic isometry test for cyclic forms: (p, n, k) and
/// (p, n, k') are isometric iff k'/k is a square in the units mod p^n,
/// decided by Euler's criterion. Mismatched (p, n) is just "false".
bool cyclic_isometric(const CyclicLinkingForm& f, const CyclicLinkingForm& g);

inline constexpr std::uint64_t kDefaultOracleBound = 1'000'000;

/// Exhaustive search for a unit r mod p^n with -k = k*r^2, i.e. for an
/// isometry between the form and its negative given by multiplication by r.
/// Returns the smallest witness, or nullopt when none exists. This is the
/// enumeration-side counterpart of the quadratic-residue criterion and is
/// deliberately independent of it.
///
/// Throws OracleBoundError when p^n exceeds `bound`; bounds beyond what the
/// 64-bit enumeration can do exactly are rejected with ContractError.
std::optional<std::uint64_t> self_negation_witness(
    const CyclicLinkingForm& f, std::uint64_t bound = kDefaultOracleBound);

/// True iff the form on Z_{p^n} is isometric to its own negative.
bool brute_force_self_negation_isometric(
    const CyclicLinkingForm& f, std::uint64_t bound = kDefaultOracleBound);

}  // namespace chiral

#endif
