#include "chiral/abelian_group.hpp"

#include <algorithm>

#include "chiral/errors.hpp"
#include "chiral/smith.hpp"

namespace chiral {

AbelianGroup::AbelianGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw ContractError("AbelianGroup: invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw ContractError("AbelianGroup: divisibility chain violated");
    }
}

Int AbelianGroup::order() const {
    Int o = 1;
    for (const Int& f : factors_) o *= f;
    return o;
}

Int PrimaryPart::order() const {
    Int o = 1;
    for (unsigned e : exponents) {
        Int q;
        mpz_pow_ui(q.get_mpz_t(), prime.get_mpz_t(), e);
        o *= q;
    }
    return o;
}

AbelianGroup group_from_presentation(const IntMatrix& m) {
    if (!m.is_square())
        throw ContractError("group_from_presentation: matrix is not square");
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<Int> factors;
    for (const Int& d : snf.diagonal()) {
        if (d == 0)
            throw DomainError(
                "infinite homology: input is not the presentation matrix of a "
                "knot's branched cover");
        if (d > 1) factors.push_back(d);
    }
    return AbelianGroup(std::move(factors));
}

PrimaryPart primary_part(const AbelianGroup& g, const Int& p) {
    if (!is_prime(p)) throw ContractError("primary_part: p is not prime");
    PrimaryPart part{p, {}};
    for (const Int& f : g.invariant_factors()) {
        unsigned v = valuation(f, p);
        if (v > 0) part.exponents.push_back(v);
    }
    // The divisibility chain makes the valuations non-decreasing already;
    // sort anyway so the contract never depends on that.
    std::sort(part.exponents.begin(), part.exponents.end());
    return part;
}

std::vector<PrimaryPart> primary_decomposition(const AbelianGroup& g) {
    return primary_decomposition(g, [](const Int& n) { return factorize(n); });
}

std::vector<PrimaryPart> primary_decomposition(const AbelianGroup& g,
                                               const Factorizer& factorizer) {
    std::vector<PrimaryPart> parts;
    for (const auto& [p, e] : factorizer(g.order()).factors)
        parts.push_back(primary_part(g, p));
    return parts;
}

}  // namespace chiral
