#include "doctest.h"

#include <map>
#include <random>

#include "chiral/abelian_group.hpp"
#include "chiral/errors.hpp"
#include "chiral/smith.hpp"
#include "support.hpp"

using namespace chiral;
namespace tst = chiral::testing;

namespace {

// Element-order census, the enumeration oracle for primary structure.
std::map<Int, int> order_census(const AbelianGroup& g) {
    std::map<Int, int> census;
    for (const auto& e : tst::all_elements(g))
        ++census[tst::order_of_element(e, g)];
    return census;
}

}  // namespace

TEST_SUITE("abelian-groups") {

TEST_CASE("group construction validates the invariant-factor form") {
    CHECK(AbelianGroup{}.is_trivial());
    CHECK(AbelianGroup({9}).is_cyclic());
    CHECK_FALSE(AbelianGroup({3, 3}).is_cyclic());
    CHECK_THROWS_AS(AbelianGroup({1, 3}), ContractError);
    CHECK_THROWS_AS(AbelianGroup({3, 5}), ContractError);  // 3 does not divide 5
}

TEST_CASE("group from presentation examples") {
    CHECK(group_from_presentation(IntMatrix{{2, 1}, {1, -4}}).invariant_factors() ==
          std::vector<Int>{9});
    CHECK(group_from_presentation(IntMatrix::identity(2)).is_trivial());
    CHECK(group_from_presentation(IntMatrix{{3, 0}, {0, 3}}).invariant_factors() ==
          std::vector<Int>{3, 3});
    CHECK_THROWS_AS(group_from_presentation(IntMatrix(2, 3)), ContractError);
    CHECK_THROWS_AS(group_from_presentation(IntMatrix{{1, 1}, {1, 1}}), DomainError);
}

TEST_CASE("order examples") {
    CHECK(AbelianGroup({9}).order() == 9);
    CHECK(AbelianGroup{}.order() == 1);
    CHECK(AbelianGroup({3, 3}).order() == 9);
}

TEST_CASE("primary part examples") {
    PrimaryPart p3 = primary_part(AbelianGroup({9}), 3);
    CHECK(p3.exponents == std::vector<unsigned>{2});
    CHECK(p3.is_cyclic());
    CHECK_FALSE(p3.is_zero());

    PrimaryPart p7 = primary_part(AbelianGroup({9}), 7);
    CHECK(p7.is_zero());

    PrimaryPart mixed = primary_part(AbelianGroup({3, 9}), 3);
    CHECK(mixed.exponents == std::vector<unsigned>{1, 2});
    CHECK_FALSE(mixed.is_cyclic());
    CHECK(mixed.order() == 27);

    CHECK_THROWS_AS(primary_part(AbelianGroup({9}), 6), ContractError);
}

TEST_CASE("element-order census of Z_3 + Z_9 confirms the exponents [1,2]") {
    std::map<Int, int> census = order_census(AbelianGroup({3, 9}));
    // Z_3 + Z_9: 1 identity, gcd-counting gives 8 of order 3, 18 of order 9.
    CHECK(census[Int(1)] == 1);
    CHECK(census[Int(3)] == 8);
    CHECK(census[Int(9)] == 18);
    // Z_27 by contrast has 18 elements of order 27; the censuses differ,
    // so the census genuinely separates cyclic from non-cyclic.
    std::map<Int, int> cyclic = order_census(AbelianGroup({27}));
    CHECK(cyclic[Int(27)] == 18);
    CHECK(cyclic[Int(3)] == 2);
}

TEST_CASE("order equals |det| of the presentation") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int seen = 0;
    while (seen < 80) {
        std::size_t n = dim(rng);
        IntMatrix m = tst::random_matrix(rng, n, n, 9);
        Int det = determinant(m);
        if (det == 0) continue;
        ++seen;
        CHECK(group_from_presentation(m).order() == abs(det));
    }
}

TEST_CASE("primary decomposition multiplies back to the order") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int seen = 0;
    while (seen < 60) {
        std::size_t n = dim(rng);
        IntMatrix m = tst::random_matrix(rng, n, n, 6);
        if (determinant(m) == 0) continue;
        ++seen;
        AbelianGroup g = group_from_presentation(m);
        Int product = 1;
        for (const PrimaryPart& part : primary_decomposition(g))
            product *= part.order();
        CHECK(product == g.order());
    }
}

TEST_CASE("recomputing a primary part from its own presentation is stable") {
    AbelianGroup g({3, 9, 45});
    PrimaryPart part = primary_part(g, 3);
    REQUIRE(part.exponents == std::vector<unsigned>{1, 2, 2});
    IntMatrix pres(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), Int(3).get_mpz_t(), part.exponents[i]);
        pres(i, i) = pe;
    }
    CHECK(primary_part(group_from_presentation(pres), 3).exponents ==
          part.exponents);
}

TEST_CASE("presented group is invariant under unimodular changes") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    int seen = 0;
    while (seen < 60) {
        std::size_t n = dim(rng);
        IntMatrix m = tst::random_matrix(rng, n, n, 6);
        if (determinant(m) == 0) continue;
        ++seen;
        IntMatrix p = tst::random_unimodular(rng, n, 12);
        IntMatrix q = tst::random_unimodular(rng, n, 12);
        CHECK(group_from_presentation(p * m * q) == group_from_presentation(m));
    }
}

TEST_CASE("pluggable factorizer is used for the decomposition") {
    AbelianGroup g({45});
    int calls = 0;
    auto counting = [&calls](const Int& n) {
        ++calls;
        return factorize(n);
    };
    auto parts = primary_decomposition(g, counting);
    CHECK(calls == 1);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].prime == 3);
    CHECK(parts[0].exponents == std::vector<unsigned>{2});
    CHECK(parts[1].prime == 5);
    CHECK(parts[1].exponents == std::vector<unsigned>{1});
}

}  // TEST_SUITE
