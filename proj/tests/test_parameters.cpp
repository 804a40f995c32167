#include "doctest.h"

#include "corpus.hpp"
#include "idemsys/parameters.hpp"

using namespace idemsys;

TEST_CASE("trivial system scalars") {
    const auto phi = testing::trivial_system();
    const auto [m, mstar] = scalar_m(phi);
    CHECK(m == Vector{Rational(1)});
    CHECK(mstar == Vector{Rational(1)});
    CHECK(scalar_nu(phi) == Rational(1));
    const auto [k, kstar] = valencies(phi, m, mstar, Rational(1));
    CHECK(k == Vector{Rational(1)});
}

TEST_CASE("H(3,2) multiplicity fractions") {
    const auto phi = testing::hamming_system(3, 2);
    const auto [m, mstar] = scalar_m(phi);
    const Vector expected{Rational(1, 8), Rational(3, 8), Rational(3, 8), Rational(1, 8)};
    CHECK(m == expected);
    CHECK(mstar == expected);
}

TEST_CASE("m sums to one on every corpus member") {
    for (const auto& entry : testing::corpus()) {
        const auto [m, mstar] = scalar_m(entry.system);
        Rational sm(0), sms(0);
        for (const auto& x : m) sm += x;
        for (const auto& x : mstar) sms += x;
        CHECK(sm == Rational(1));
        CHECK(sms == Rational(1));
    }
}

TEST_CASE("nu counts the vertices of the cube") {
    long want = 2;
    for (int n = 1; n <= 4; ++n) {
        CHECK(scalar_nu(testing::hamming_system(n, 2)) == Rational(want));
        want *= 2;
    }
    CHECK(scalar_nu(testing::hamming_system(2, 3)) == Rational(9));
}

TEST_CASE("valencies") {
    const auto ps = compute_parameters(testing::hamming_system(3, 2));
    CHECK(ps.k == Vector{Rational(1), Rational(3), Rational(3), Rational(1)});
    CHECK(ps.kstar == ps.k);
    for (const auto& entry : testing::corpus()) {
        const auto p = compute_parameters(entry.system);
        CHECK(p.k[0] == Rational(1));
        Rational sum(0);
        for (const auto& x : p.k) sum += x;
        CHECK(sum == p.nu);
    }
}

TEST_CASE("rho maps the unit to E*_0 and E_0 to nu^-1 I") {
    const auto phi = testing::hamming_system(3, 2);
    const Rational nu = scalar_nu(phi);
    CHECK(rho(phi, SquareMatrix::identity(4)) == phi.Estar(0));
    CHECK(rho(phi, phi.E(0)) == nu.inverse() * SquareMatrix::identity(4));
}

TEST_CASE("rho composed with the dual rho rescales by nu") {
    const auto phi = testing::hamming_system(2, 3);
    const auto psi = phi.dual();
    const Rational nu = scalar_nu(phi);
    testing::Rng rng(91);
    for (int t = 0; t < 5; ++t) {
        SquareMatrix y(phi.order());
        for (int i = 0; i <= phi.d(); ++i) y += rng.rational(9, 4) * phi.E(i);
        CHECK(rho(psi, rho(phi, y)) == nu.inverse() * y);
    }
}

TEST_CASE("rho rejects arguments outside the algebra") {
    const auto phi = testing::hamming_system(2, 2);
    CHECK_THROWS_AS(rho(phi, SquareMatrix::unit(3, 0, 1)), NotInAlgebraError);
}

TEST_CASE("eigenvalue tables") {
    const auto phi = testing::hamming_system(3, 2);
    const auto ps = compute_parameters(phi);
    for (int j = 0; j <= 3; ++j) CHECK(ps.p_table[0][static_cast<std::size_t>(j)] == Rational(1));
    for (int i = 0; i <= 3; ++i) {
        CHECK(ps.p_table[static_cast<std::size_t>(i)][0] == ps.k[static_cast<std::size_t>(i)]);
    }
    // Krawtchouk first row: K_1(j) = 3 - 2j.
    CHECK(ps.p_table[1] == Vector{Rational(3), Rational(1), Rational(-1), Rational(-3)});
}

TEST_CASE("A-elements") {
    const auto phi = testing::hamming_system(3, 2);
    const auto ps = compute_parameters(phi);
    CHECK(ps.a[0] == SquareMatrix::identity(4));
    CHECK(ps.astar[0] == SquareMatrix::identity(4));
    // Adjacency action on the distance shells of the 3-cube.
    const SquareMatrix b1{{0, 3, 0, 0}, {1, 0, 2, 0}, {0, 2, 0, 1}, {0, 0, 3, 0}};
    CHECK(ps.a[1] == b1);
    const auto triv = compute_parameters(testing::trivial_system());
    CHECK(triv.a == std::vector<SquareMatrix>{SquareMatrix::identity(1)});
}

TEST_CASE("structure constants on the 3-cube") {
    const auto ps = compute_parameters(testing::hamming_system(3, 2));
    const auto pn = [&](int h, int i, int j) {
        return ps.p_num[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)]
                       [static_cast<std::size_t>(j)];
    };
    CHECK(pn(2, 1, 1) == Rational(2));
    CHECK(pn(1, 1, 1) == Rational(0));
    CHECK(pn(3, 1, 1) == Rational(0));
    for (int h = 0; h <= 3; ++h) {
        for (int i = 0; i <= 3; ++i) {
            CHECK(pn(h, i, 0) == Rational(h == i ? 1 : 0));
            CHECK(pn(0, h, i) == (h == i ? ps.k[static_cast<std::size_t>(h)] : Rational(0)));
        }
    }
}

TEST_CASE("structure constants are symmetric and associative") {
    const auto ps = compute_parameters(testing::hamming_system(3, 3));
    const int n = ps.d + 1;
    const auto pn = [&](int h, int i, int j) {
        return ps.p_num[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)]
                       [static_cast<std::size_t>(j)];
    };
    for (int h = 0; h < n; ++h) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                CHECK(pn(h, i, j) == pn(h, j, i));
                CHECK(ps.k[static_cast<std::size_t>(h)] * pn(h, i, j) ==
                      ps.k[static_cast<std::size_t>(i)] * pn(i, j, h));
            }
        }
    }
    for (int h = 0; h < n; ++h) {
        for (int i = 0; i < n; ++i) {
            Rational row(0);
            for (int j = 0; j < n; ++j) row += pn(h, i, j);
            CHECK(row == ps.k[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("larger orders stay exact") {
    const auto ps = compute_parameters(testing::hamming_system(7, 2));
    CHECK(ps.nu == Rational(128));
    Rational sum(0);
    for (const auto& x : ps.k) sum += x;
    CHECK(sum == Rational(128));
    CHECK(ps.k[3] == Rational(35));
    CHECK(ps.p_table[1][0] == Rational(7));
}

TEST_CASE("one-class scheme parameters") {
    const auto ps = compute_parameters(testing::one_class_system(5));
    CHECK(ps.nu == Rational(5));
    CHECK(ps.k == Vector{Rational(1), Rational(4)});
    CHECK(ps.p_table[1] == Vector{Rational(4), Rational(-1)});
}
