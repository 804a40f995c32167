#include <algorithm>

#include "doctest.h"

#include "corpus.hpp"
#include "idemsys/parameters.hpp"

using namespace idemsys;
using idemsys::testing::Rng;

namespace {

bool has_failure(const ValidationReport& r, AxiomFailure::Kind kind, const std::string& family,
                 int index) {
    return std::any_of(r.failures.begin(), r.failures.end(), [&](const AxiomFailure& f) {
        return f.kind == kind && f.family == family && !f.indices.empty() && f.indices[0] == index;
    });
}

}  // namespace

TEST_CASE("the order-1 system validates") {
    const auto v = IdempotentSystem::validate({SquareMatrix::identity(1)},
                                              {SquareMatrix::identity(1)});
    CHECK(v.report.ok);
    REQUIRE(v.system.has_value());
    CHECK(v.system->d() == 0);
}

TEST_CASE("H(3,2) validates") {
    const auto phi = testing::hamming_system(3, 2);
    const auto again = IdempotentSystem::validate(phi.E(), phi.Estar());
    CHECK(again.report.ok);
}

TEST_CASE("rank tampering is reported by name") {
    const auto phi = testing::hamming_system(3, 2);
    auto e = phi.E();
    e[1] = e[1] + e[2];  // rank-2 idempotent
    const auto v = IdempotentSystem::validate(e, phi.Estar());
    CHECK_FALSE(v.report.ok);
    CHECK(has_failure(v.report, AxiomFailure::Kind::RankOne, "E", 1));
    // The violated axiom identifier names the offending element.
    bool found = false;
    for (const auto& f : v.report.failures) {
        if (f.id() == "rank(E_1)=1") found = true;
    }
    CHECK(found);
}

TEST_CASE("idempotency tampering is reported by name") {
    const auto phi = testing::hamming_system(2, 2);
    auto e = phi.E();
    e[1].at(0, 0) += Rational(1, 7);
    const auto v = IdempotentSystem::validate(e, phi.Estar());
    CHECK_FALSE(v.report.ok);
    CHECK(has_failure(v.report, AxiomFailure::Kind::Idempotency, "E", 1));
}

TEST_CASE("vanishing E_0 E*_i E_0 is reported by name") {
    // Both families are valid alone, but E_0 E*_0 E_0 = 0.
    const SquareMatrix d00 = SquareMatrix::unit(2, 0, 0);
    const SquareMatrix d11 = SquareMatrix::unit(2, 1, 1);
    const auto v = IdempotentSystem::validate({d11, d00}, {d00, d11});
    CHECK_FALSE(v.report.ok);
    CHECK(has_failure(v.report, AxiomFailure::Kind::Nonvanishing, "E*", 0));
    CHECK(has_failure(v.report, AxiomFailure::Kind::Nonvanishing, "E", 0));
    bool found = false;
    for (const auto& f : v.report.failures) {
        if (f.id() == "E_0 E*_0 E_0 != 0") found = true;
    }
    CHECK(found);
}

TEST_CASE("validation reports every violation, not just the first") {
    const auto phi = testing::hamming_system(3, 2);
    auto e = phi.E();
    e[1] = e[1] + e[2];
    const auto v = IdempotentSystem::validate(e, phi.Estar());
    CHECK(v.report.failures.size() > 1);
}

TEST_CASE("shape problems throw") {
    CHECK_THROWS_AS(IdempotentSystem::validate({}, {}), ShapeError);
    CHECK_THROWS_AS(IdempotentSystem::validate({SquareMatrix::identity(2)},
                                               {SquareMatrix::identity(2), SquareMatrix::identity(2)}),
                    ShapeError);
    CHECK_THROWS_AS(IdempotentSystem::validate({SquareMatrix::identity(1), SquareMatrix::identity(1)},
                                               {SquareMatrix::identity(1), SquareMatrix::identity(1)}),
                    ShapeError);  // two matrices but order 1 != d+1
    // Shapes fine, axioms violated: reported, not thrown.
    const auto v = IdempotentSystem::validate({SquareMatrix::identity(2), SquareMatrix::identity(2)},
                                              {SquareMatrix::identity(2), SquareMatrix::identity(2)});
    CHECK_FALSE(v.report.ok);
}

TEST_CASE("dual swaps the families and is involutive") {
    const auto phi = testing::hamming_system(3, 2);
    const auto psi = phi.dual();
    CHECK(psi.E() == phi.Estar());
    CHECK(psi.Estar() == phi.E());
    CHECK(psi.dual() == phi);
    const auto triv = testing::trivial_system();
    CHECK(triv.dual() == triv);
}

TEST_CASE("nu is self-dual") {
    const auto phi = testing::hamming_system(3, 2);
    CHECK(scalar_nu(phi) == scalar_nu(phi.dual()));
}

TEST_CASE("symmetrizer of the trivial system") {
    const auto form = symmetrizer(testing::trivial_system());
    CHECK(form.gram() == SquareMatrix::identity(1));
}

TEST_CASE("symmetrizer of H(3,2) is K") {
    const auto phi = testing::hamming_system(3, 2);
    const auto form = symmetrizer(phi);
    CHECK(form.gram() ==
          SquareMatrix::diagonal({Rational(1), Rational(3), Rational(3), Rational(1)}));
    CHECK(form.gram() == form.gram().transpose());
}

TEST_CASE("breaking one family kills the symmetrizer") {
    const auto phi = testing::asymmetric_system();
    CHECK_THROWS_AS(symmetrizer(phi), NotSymmetricError);
}

TEST_CASE("dagger fixes the idempotents and the A-elements") {
    const auto phi = testing::hamming_system(3, 2);
    const auto form = symmetrizer(phi);
    for (int i = 0; i <= phi.d(); ++i) {
        CHECK(apply_dagger(form, phi.E(i)) == phi.E(i));
        CHECK(apply_dagger(form, phi.Estar(i)) == phi.Estar(i));
    }
    const auto params = compute_parameters(phi);
    for (int i = 0; i <= phi.d(); ++i) {
        CHECK(apply_dagger(form, params.a[static_cast<std::size_t>(i)]) ==
              params.a[static_cast<std::size_t>(i)]);
        CHECK(apply_dagger(form, params.astar[static_cast<std::size_t>(i)]) ==
              params.astar[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("dagger is an involutive antiautomorphism") {
    const auto phi = testing::hamming_system(2, 3);
    const auto form = symmetrizer(phi);
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        const SquareMatrix a = rng.matrix(phi.order(), 5);
        const SquareMatrix b = rng.matrix(phi.order(), 5);
        CHECK(apply_dagger(form, apply_dagger(form, a)) == a);
        CHECK(apply_dagger(form, a * b) == apply_dagger(form, b) * apply_dagger(form, a));
    }
    CHECK_THROWS_AS(apply_dagger(form, SquareMatrix::identity(7)), OrderMismatchError);
}

TEST_CASE("conjugation preserves every scalar output") {
    const auto phi = testing::hamming_system(2, 2);
    const auto base = compute_parameters(phi);
    Rng rng(57);
    const SquareMatrix s = rng.invertible_matrix(phi.order(), 3);
    const auto conj = compute_parameters(testing::conjugated(phi, s));
    CHECK(conj.nu == base.nu);
    CHECK(conj.m == base.m);
    CHECK(conj.k == base.k);
    CHECK(conj.p_table == base.p_table);
    CHECK(conj.p_num == base.p_num);
}

TEST_CASE("sum of each family is the identity") {
    for (const auto& entry : testing::corpus()) {
        SquareMatrix se(entry.system.order()), ses(entry.system.order());
        for (int i = 0; i <= entry.system.d(); ++i) {
            se += entry.system.E(i);
            ses += entry.system.Estar(i);
        }
        CHECK(se == SquareMatrix::identity(entry.system.order()));
        CHECK(ses == SquareMatrix::identity(entry.system.order()));
    }
}
