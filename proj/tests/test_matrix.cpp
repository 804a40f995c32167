#include "doctest.h"

#include "corpus.hpp"
#include "idemsys/matrix.hpp"

using namespace idemsys;

TEST_CASE("identity times anything") {
    testing::Rng rng(7);
    const SquareMatrix m = rng.matrix(4, 9);
    CHECK(SquareMatrix::identity(4) * m == m);
    CHECK(m * SquareMatrix::identity(4) == m);
}

TEST_CASE("orthogonal elementary matrices multiply to zero") {
    const SquareMatrix a = SquareMatrix::unit(3, 0, 0);
    const SquareMatrix b = SquareMatrix::unit(3, 1, 1);
    CHECK((a * b).is_zero());
}

TEST_CASE("hand-computed product") {
    const SquareMatrix a{{0, 1}, {0, 0}};
    const SquareMatrix b{{0, 0}, {1, 0}};
    const SquareMatrix expected{{1, 0}, {0, 0}};
    CHECK(a * b == expected);
}

TEST_CASE("order mismatch is an error") {
    CHECK_THROWS_AS(SquareMatrix::identity(2) * SquareMatrix::identity(3), OrderMismatchError);
    CHECK_THROWS_AS(SquareMatrix::identity(2) + SquareMatrix::identity(3), OrderMismatchError);
}

TEST_CASE("trace") {
    CHECK(SquareMatrix::identity(4).trace() == Rational(4));
    CHECK(SquareMatrix::unit(4, 2, 2).trace() == Rational(1));
}

TEST_CASE("every rank-1 idempotent of a system has trace 1") {
    for (const auto& phi :
         {testing::one_class_system(3), testing::hamming_system(2, 2), testing::hamming_system(2, 3)}) {
        for (int i = 0; i <= phi.d(); ++i) {
            CHECK(phi.E(i).trace() == Rational(1));
            CHECK(phi.Estar(i).trace() == Rational(1));
        }
    }
}

TEST_CASE("trace is a commutator invariant") {
    testing::Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        const SquareMatrix a = rng.matrix(5, 6);
        const SquareMatrix b = rng.matrix(5, 6);
        CHECK((a * b).trace() == (b * a).trace());
    }
}

TEST_CASE("tridiagonal shape predicates") {
    SquareMatrix m{{1, 2, 0}, {3, 4, 5}, {0, 6, 7}};
    CHECK(m.is_tridiagonal());
    CHECK(m.is_irreducible_tridiagonal());
    m.at(0, 1) = Rational(0);
    CHECK(m.is_tridiagonal());
    CHECK_FALSE(m.is_irreducible_tridiagonal());
    m.at(0, 2) = Rational(1);
    CHECK_FALSE(m.is_tridiagonal());
    CHECK(SquareMatrix::identity(1).is_irreducible_tridiagonal());
}

TEST_CASE("transpose and diagonal") {
    testing::Rng rng(3);
    const SquareMatrix m = rng.matrix(4, 9);
    CHECK(m.transpose().transpose() == m);
    CHECK(SquareMatrix::diagonal({Rational(1), Rational(2)}).is_diagonal());
}

TEST_CASE("residual norm") {
    SquareMatrix m(2);
    CHECK(residual_norm(m) == "0");
    m.at(0, 1) = Rational(-3, 8);
    m.at(1, 0) = Rational(1, 6);
    // common denominator 24: entries -9/24 and 4/24
    CHECK(residual_norm(m) == "9");
}
