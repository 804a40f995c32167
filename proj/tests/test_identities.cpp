#include <algorithm>

#include "doctest.h"

#include "corpus.hpp"
#include "idemsys/identities.hpp"

using namespace idemsys;

namespace {

IdentityReport run_suite(const IdempotentSystem& phi) {
    const auto form = symmetrizer(phi);
    const auto params = compute_parameters(phi);
    const auto tables = build_tables(params);
    return verify_identities(phi, form, params, tables);
}

}  // namespace

TEST_CASE("every identity passes with zero residual on H(3,2)") {
    const auto report = run_suite(testing::hamming_system(3, 2));
    CHECK(report.all_pass());
    for (const auto& c : report.checks) {
        CHECK(c.pass);
        CHECK(c.residual == "0");
    }
}

TEST_CASE("every identity passes on the trivial system") {
    CHECK(run_suite(testing::trivial_system()).all_pass());
}

TEST_CASE("the catalog contains the expected entries") {
    const auto report = run_suite(testing::trivial_system());
    const auto has = [&](const char* id) {
        return std::any_of(report.checks.begin(), report.checks.end(),
                           [&](const IdentityCheck& c) { return c.id == id; });
    };
    for (const char* id :
         {"lemma-4.2-i", "lemma-4.4-ii", "lemma-4.6", "lemma-4.7-i", "lemma-4.8-ii", "lemma-7.4-iv",
          "lemma-7.5", "lemma-7.6", "lemma-8.2-i", "lemma-9.1-i", "lemma-9.2-iv", "lemma-9.3-ii",
          "lemma-9.4-i", "lemma-9.5-iii", "lemma-10.5-i", "lemma-10.6-ii", "lemma-10.7-i",
          "lemma-10.8-ii", "lemma-10.10-i", "lemma-10.11-ii", "lemma-10.12-i", "lemma-10.15-i",
          "lemma-10.16-iv", "lemma-10.17-ii", "lemma-10.18-i", "lemma-10.19-ii", "lemma-11.7-i",
          "lemma-11.8-ii", "lemma-11.9-i", "lemma-11.10-ii", "lemma-11.11-i", "lemma-11.12-ii",
          "lemma-11.13-i", "lemma-12.1-iv", "lemma-12.2-i", "lemma-12.3-iii", "lemma-12.4-ii",
          "lemma-12.5", "lemma-12.6-iv", "lemma-13.2-i", "lemma-13.3", "lemma-13.4",
          "lemma-13.5-iii", "lemma-13.6", "lemma-13.7", "lemma-13.8-iv", "lemma-13.9-i"}) {
        CAPTURE(id);
        CHECK(has(id));
    }
    CHECK(report.checks.size() == 117);
}

TEST_CASE("a tampered intersection number is caught") {
    const auto phi = testing::hamming_system(3, 2);
    const auto form = symmetrizer(phi);
    auto params = compute_parameters(phi);
    params.p_num[2][1][1] += Rational(1);
    const auto tables = build_tables(params);
    const auto report = verify_identities(phi, form, params, tables);
    CHECK_FALSE(report.all_pass());
    const auto failing = report.failing_ids();
    CHECK(std::find(failing.begin(), failing.end(), "lemma-13.9-i") != failing.end());
    // The residual of a failing check is a nonzero count or numerator.
    for (const auto& c : report.checks) {
        if (!c.pass) CHECK(c.residual != "0");
    }
}

TEST_CASE("catalog order is deterministic") {
    const auto a = run_suite(testing::one_class_system(3));
    const auto b = run_suite(testing::one_class_system(5));
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].id == b.checks[i].id);
}
