#include "doctest.h"

#include <random>

#include "chiral/errors.hpp"
#include "chiral/int_matrix.hpp"
#include "chiral/smith.hpp"
#include "support.hpp"

using namespace chiral;
namespace tst = chiral::testing;

namespace {

bool is_unimodular(const IntMatrix& m) {
    Int d = determinant(m);
    return d == 1 || d == -1;
}

void check_smith_invariants(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    CHECK(snf.u.rows() == a.rows());
    CHECK(snf.v.rows() == a.cols());
    CHECK(snf.u * a * snf.v == snf.d);
    CHECK(is_unimodular(snf.u));
    CHECK(is_unimodular(snf.v));
    std::vector<Int> diag = snf.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i] != 0)
            CHECK(diag[i + 1] % diag[i] == 0);
        if (i + 1 < diag.size() && diag[i] == 0) CHECK(diag[i + 1] == 0);
    }
    // Off-diagonal of D is zero.
    for (std::size_t i = 0; i < snf.d.rows(); ++i)
        for (std::size_t j = 0; j < snf.d.cols(); ++j)
            if (i != j) CHECK(snf.d(i, j) == 0);
}

}  // namespace

TEST_SUITE("exact-linalg") {

TEST_CASE("matrix construction and arithmetic") {
    IntMatrix a{{1, 0}, {1, -2}};
    CHECK(a.rows() == 2);
    CHECK(a(1, 1) == -2);
    IntMatrix sym = a + a.transpose();
    CHECK(sym == IntMatrix{{2, 1}, {1, -4}});
    CHECK(IntMatrix::identity(2) * a == a);
    CHECK_THROWS_AS(IntMatrix({{1, 2}, {3}}), ContractError);
    CHECK(IntMatrix{}.to_string() == "[]");
    CHECK(a.to_string() == "[[1,0],[1,-2]]");
}

TEST_CASE("smith normal form of the stevedore presentation is diag(1, 9)") {
    SmithDecomposition snf = smith_normal_form(IntMatrix{{2, 1}, {1, -4}});
    CHECK(snf.diagonal() == std::vector<Int>{1, 9});
    check_smith_invariants(IntMatrix{{2, 1}, {1, -4}});
}

TEST_CASE("smith normal form of the identity") {
    SmithDecomposition snf = smith_normal_form(IntMatrix::identity(2));
    CHECK(snf.diagonal() == std::vector<Int>{1, 1});
}

TEST_CASE("smith normal form of the trefoil presentation is diag(1, 3)") {
    SmithDecomposition snf = smith_normal_form(IntMatrix{{-2, 1}, {1, -2}});
    CHECK(snf.diagonal() == std::vector<Int>{1, 3});
}

TEST_CASE("smith normal form of empty and rectangular input") {
    CHECK(smith_normal_form(IntMatrix{}).diagonal().empty());
    IntMatrix wide(2, 3);
    wide(0, 0) = 2;
    wide(0, 1) = 4;
    wide(1, 2) = 6;
    check_smith_invariants(wide);
    check_smith_invariants(wide.transpose());
}

TEST_CASE("determinant examples") {
    CHECK(determinant(IntMatrix{{2, 1}, {1, -4}}) == -9);
    CHECK(determinant(IntMatrix{{2, 1}, {1, -2}}) == -5);
    CHECK(determinant(IntMatrix{}) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), ContractError);
}

TEST_CASE("rational inverse examples") {
    RationalMatrix inv = rational_inverse(IntMatrix{{2, 1}, {1, -4}});
    // (1/-9) * [[-4,-1],[-1,2]]
    CHECK(inv(0, 0) == Rat(4, 9));
    CHECK(inv(0, 1) == Rat(1, 9));
    CHECK(inv(1, 0) == Rat(1, 9));
    CHECK(inv(1, 1) == Rat(-2, 9));

    CHECK(rational_inverse(IntMatrix::identity(3)).is_identity());
    CHECK(rational_inverse(IntMatrix{{3}})(0, 0) == Rat(1, 3));

    CHECK_THROWS_WITH_AS(rational_inverse(IntMatrix{{1, 1}, {1, 1}}),
                         "singular presentation matrix", DomainError);
}

TEST_CASE("random smith decompositions satisfy all invariants") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int i = 0; i < 300; ++i)
        check_smith_invariants(tst::random_matrix(rng, dim(rng), dim(rng), 9));
}

TEST_CASE("smith diagonal matches the gcd-of-minors computation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int i = 0; i < 60; ++i) {
        IntMatrix a = tst::random_matrix(rng, dim(rng), dim(rng), 6);
        CHECK(smith_normal_form(a).diagonal() == tst::diagonal_via_minors(a));
    }
}

TEST_CASE("determinant magnitude equals product of smith diagonal") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int seen = 0;
    while (seen < 100) {
        std::size_t n = dim(rng);
        IntMatrix a = tst::random_matrix(rng, n, n, 9);
        Int det = determinant(a);
        if (det == 0) continue;
        ++seen;
        Int prod = 1;
        for (const Int& d : smith_normal_form(a).diagonal()) prod *= d;
        CHECK(prod == abs(det));
    }
}

TEST_CASE("rational inverse times original is the identity, exactly") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int seen = 0;
    while (seen < 60) {
        std::size_t n = dim(rng);
        IntMatrix a = tst::random_matrix(rng, n, n, 9);
        if (determinant(a) == 0) continue;
        ++seen;
        CHECK((rational_inverse(a) * RationalMatrix(a)).is_identity());
    }
}

TEST_CASE("smith normal form is deterministic") {
    std::mt19937 rng(17);
    for (int i = 0; i < 20; ++i) {
        IntMatrix a = tst::random_matrix(rng, 4, 4, 9);
        SmithDecomposition first = smith_normal_form(a);
        SmithDecomposition second = smith_normal_form(a);
        CHECK(first.d == second.d);
        CHECK(first.u == second.u);
        CHECK(first.v == second.v);
    }
}

TEST_CASE("bareiss determinant agrees with cofactor expansion on 3x3") {
    std::mt19937 rng(19);
    for (int i = 0; i < 50; ++i) {
        IntMatrix a = tst::random_matrix(rng, 3, 3, 9);
        Int cof = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                  a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                  a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        CHECK(determinant(a) == cof);
    }
}

}  // TEST_SUITE
