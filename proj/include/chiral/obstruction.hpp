#ifndef CHIRAL_OBSTRUCTION_HPP
#define CHIRAL_OBSTRUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "chiral/abelian_group.hpp"
#include "chiral/linking_form.hpp"

namespace chiral {

enum class Verdict { kObstructed, kInconclusive };

/// Outcome of the brute-force confirmation that an obstructing cyclic
/// p-part really admits no isometry to its negative.
enum class OracleStatus {
    kNotApplicable,  // prime does not obstruct, nothing to confirm
    kConfirmed,      // exhaustive search found no isometry
    kBoundExceeded,  // p^n too large for the enumeration bound
};

/// Per-prime bookkeeping for one knot: what each obstruction said and why.
struct PrimeEvidence {
    Int prime;
    int mod4 = 0;            // 1 or 3
    unsigned valuation = 0;  // multiplicity of p in the determinant
    std::vector<unsigned> primary_exponents;
    bool theorem1_fires = false;
    bool goeritz_fires = false;
    bool goeritz_strong_fires = false;
    OracleStatus oracle = OracleStatus::kNotApplicable;

    bool operator==(const PrimeEvidence& other) const = default;
};

/// Full machine-checkable verdict on one knot. OBSTRUCTED means "provably
/// chiral"; INCONCLUSIVE is never a claim of amphichirality.
struct ChiralityReport {
    std::string knot_label;
    Int determinant;  // positive; equals the group order
    AbelianGroup group;
    std::vector<PrimeEvidence> per_prime;
    Verdict verdict = Verdict::kInconclusive;
    std::vector<Int> obstructing_primes;

    bool operator==(const ChiralityReport& other) const = default;
};

/// The linking-form obstruction: fires iff p = 3 mod 4 and the p-primary
/// part of G is nonzero and cyclic. A firing check proves the knot chiral.
bool theorem1_check(const AbelianGroup& g, const Int& p);

/// The determinant-only obstruction: fires iff p = 3 mod 4 and p divides
/// the determinant exactly once. Throws DomainError on even determinants
/// (knot determinants are odd; even input is not knot data).
bool goeritz_check(const Int& det, const Int& p);

/// Sharper variant: fires iff p = 3 mod 4 and the p-adic valuation of the
/// determinant is odd.
bool goeritz_strong_check(const Int& det, const Int& p);

/// |Delta(-1)| from ascending-degree coefficients of the Alexander
/// polynomial. Throws DomainError when the value is 0.
Int determinant_from_alexander(const std::vector<Int>& coeffs);

/// Assembles the evidence for a prebuilt linking form. The verdict depends
/// only on the group structure and p mod 4, so it is invariant under
/// negating the form; the form is consumed for the oracle confirmations.
ChiralityReport report_from_form(const std::string& label,
                                 const TorsionLinkingForm& form,
                                 std::uint64_t oracle_bound = kDefaultOracleBound);

/// The whole pipeline for one knot: validates the Seifert input, presents
/// the homology of the double branched cover, builds its linking form, and
/// applies every obstruction per prime dividing the determinant.
///
/// When Alexander coefficients are supplied, |Delta(-1)| must agree with
/// |det(A + A^T)|; mismatch throws DomainError("inconsistent knot data").
ChiralityReport full_report(
    const std::string& label, const IntMatrix& seifert,
    const std::optional<std::vector<Int>>& alexander_coeffs = std::nullopt,
    std::uint64_t oracle_bound = kDefaultOracleBound);

}  // namespace chiral

#endif
