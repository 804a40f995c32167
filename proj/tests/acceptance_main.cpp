// Acceptance suite: runs every criterion and prints one pass/fail line
// each. Exits nonzero if any criterion fails. argv[1] must be the path
// to the CLI binary (used by the negative-path criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "corpus.hpp"
#include "idemsys/json_io.hpp"
#include "idemsys/leonard.hpp"
#include "idemsys/report.hpp"
#include "oracle_cube.hpp"

using namespace idemsys;
using idemsys::testing::corpus;

namespace {

std::string g_cli_path;

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

struct Analysis {
    IdempotentSystem phi;
    SymmetrizingForm form;
    ParameterSet params;
    MatrixTables tables;

    explicit Analysis(const IdempotentSystem& system)
        : phi(system),
          form(symmetrizer(phi)),
          params(compute_parameters(phi)),
          tables(build_tables(params)) {}
};

// ---- criteria ----------------------------------------------------------

void criterion_identity_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& entry : corpus()) {
        Analysis a(entry.system);
        const IdentityReport report = verify_identities(a.phi, a.form, a.params, a.tables);
        for (const auto& check : report.checks) {
            require(check.pass && check.residual == "0",
                    entry.name + ": " + check.id + " failed with residual " + check.residual);
        }
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(dt < 5.0, "identity suite took " + std::to_string(dt) + "s, exceeding 5s");
}

void criterion_cube_oracle() {
    for (int n : {3, 4}) {
        const auto oracle = testing::cube_intersection_numbers(n, 2);
        const auto params = compute_parameters(testing::hamming_system(n, 2));
        for (int h = 0; h <= n; ++h) {
            for (int i = 0; i <= n; ++i) {
                for (int j = 0; j <= n; ++j) {
                    const Rational computed =
                        params.p_num[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(j)];
                    const long counted = oracle[static_cast<std::size_t>(h)]
                                               [static_cast<std::size_t>(i)]
                                               [static_cast<std::size_t>(j)];
                    require(computed == Rational(counted),
                            "H(" + std::to_string(n) + ",2) p^" + std::to_string(h) + "_{" +
                                std::to_string(i) + "," + std::to_string(j) + "} = " +
                                computed.str() + " but the cube counts " + std::to_string(counted));
                }
            }
        }
    }
}

void criterion_eigenmatrix_inversion() {
    for (const auto& entry : corpus()) {
        Analysis a(entry.system);
        const SquareMatrix nu_id = a.params.nu * SquareMatrix::identity(a.phi.order());
        require(a.tables.p * a.tables.q == nu_id && a.tables.q * a.tables.p == nu_id,
                entry.name + ": P Q = Q P = nu I fails");
    }
    const std::array<std::pair<int, int>, 8> hamming{{{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2},
                                                      {6, 2}, {2, 3}, {3, 3}}};
    for (const auto& [n, q] : hamming) {
        const auto params = compute_parameters(testing::hamming_system(n, q));
        for (int i = 0; i <= n; ++i) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q - 1),
                          static_cast<unsigned long>(i));
            const mpz_class scaled = binomial(static_cast<unsigned long>(n), i) * pw;
            const Rational want(scaled);
            require(params.k[static_cast<std::size_t>(i)] == want,
                    "H(n,q) valency k_i != C(n,i)(q-1)^i");
            require(params.kstar[static_cast<std::size_t>(i)] == want,
                    "Hamming self-duality k*_i = k_i fails");
        }
    }
}

IdempotentSystem permuted_hamming32() {
    EigenmatrixInput input = hamming_eigenmatrix(3, 2);
    for (int i = 0; i < 4; ++i) std::swap(input.p.at(i, 1), input.p.at(i, 2));
    auto v = from_eigenmatrix(input);
    require(v.system.has_value(), "permuted H(3,2) eigenmatrix should still validate");
    return *std::move(v.system);
}

void criterion_pq_agreement() {
    for (const auto& entry : corpus()) {
        if (entry.system.d() < 1) continue;
        Analysis a(entry.system);
        const bool pattern = is_p_polynomial(a.params).holds;
        const bool via_b1 = is_p_polynomial_via_b1(a.tables);
        require(pattern == via_b1, entry.name + ": the two P-polynomial routes disagree");
        require(pattern, entry.name + ": expected P-polynomial");
        require(is_q_polynomial(a.phi, a.params).holds, entry.name + ": expected Q-polynomial");
    }
    Analysis p(permuted_hamming32());
    const auto verdict = is_p_polynomial(p.params);
    require(!verdict.holds, "permuted H(3,2) must not be P-polynomial");
    require(verdict.witness.has_value(), "permuted H(3,2) must come with a witness triple");
    require(!is_p_polynomial_via_b1(p.tables), "B_1 route must agree on the permuted system");
}

void criterion_leonard_certificates() {
    for (const auto& entry : corpus()) {
        if (entry.system.d() < 1) continue;
        Analysis a(entry.system);
        if (!is_p_polynomial(a.params).holds || !is_q_polynomial(a.phi, a.params).holds) continue;
        const BasisBundle bundle = make_bundle(a.phi, a.form, a.params);
        const LeonardSystem ls = to_leonard_system(a.phi, a.params, a.tables, bundle);
        require(ls.cert_std_a.is_irreducible_tridiagonal() && ls.cert_std_astar.is_diagonal(),
                entry.name + ": standard-basis certificate fails");
        require(ls.cert_star_astar.is_irreducible_tridiagonal() && ls.cert_star_a.is_diagonal(),
                entry.name + ": star-standard-basis certificate fails");
        require(ls.eigenvalues == a.params.p_table[1],
                entry.name + ": Leonard eigenvalues differ from row 1 of the eigenvalue table");
        for (std::size_t i = 0; i < ls.eigenvalues.size(); ++i) {
            for (std::size_t j = i + 1; j < ls.eigenvalues.size(); ++j) {
                require(ls.eigenvalues[i] != ls.eigenvalues[j],
                        entry.name + ": eigenvalues are not pairwise distinct");
            }
        }
    }
}

void criterion_three_term_recurrence() {
    for (const auto& entry : corpus()) {
        if (entry.system.d() < 1) continue;
        const auto params = compute_parameters(entry.system);
        if (!is_p_polynomial(params).holds) continue;
        const auto seq = orthogonal_polys(params, tridiagonal_data(params));
        for (int i = 0; i <= params.d; ++i) {
            require(seq.f[static_cast<std::size_t>(i)](params.a[1]) ==
                        params.a[static_cast<std::size_t>(i)],
                    entry.name + ": f_i(A_1) != A_i at i = " + std::to_string(i));
        }
    }
    const auto params = compute_parameters(testing::hamming_system(3, 2));
    const auto seq = orthogonal_polys(params, tridiagonal_data(params));
    const Polynomial expected(Vector{Rational(-3, 2), Rational(0), Rational(1, 2)});
    require(seq.f[2] == expected, "H(3,2): f_2 != (x^2 - 3)/2");
}

void criterion_symmetrizer() {
    for (const auto& entry : corpus()) {
        // Dimension of the intertwiner space, computed directly.
        std::vector<MatrixConstraint> constraints;
        for (int i = 0; i <= entry.system.d(); ++i) {
            constraints.push_back(
                {MatrixTerm{Rational(1), std::nullopt, entry.system.E(i), false},
                 MatrixTerm{Rational(-1), entry.system.E(i).transpose(), std::nullopt, false}});
            constraints.push_back(
                {MatrixTerm{Rational(1), std::nullopt, entry.system.Estar(i), false},
                 MatrixTerm{Rational(-1), entry.system.Estar(i).transpose(), std::nullopt, false}});
        }
        const auto space = solve_linear_space(entry.system.order(), constraints);
        require(space.size() == 1, entry.name + ": intertwiner space has dimension " +
                                       std::to_string(space.size()));
        const SymmetrizingForm form = symmetrizer(entry.system);
        require(form.gram() == form.gram().transpose(), entry.name + ": form is not symmetric");
        require(rank(form.gram()) == entry.system.order(), entry.name + ": form is singular");
        // Every corpus member is ingested in the representation whose
        // standard-basis Gram matrix is proportional to K; with k_0 = 1
        // the normalized solution is exactly K.
        const auto params = compute_parameters(entry.system);
        require(form.gram() == SquareMatrix::diagonal(params.k),
                entry.name + ": form is not proportional to K");
    }
}

void criterion_proposition_tables() {
    for (const auto& phi : {testing::hamming_system(3, 2), testing::hamming_system(2, 3)}) {
        Analysis a(phi);
        const BasisBundle partnered = make_bundle(a.phi, a.form, a.params);
        require(partners(a.phi, a.form, partnered.xi, partnered.zeta),
                "default bundle must be partnered");
        const BasisBundle skew =
            make_bundle(a.phi, a.params, partnered.xi, Rational(3) * partnered.zeta,
                        partnered.xistar, Rational(2) * partnered.zetastar);
        require(!partners(a.phi, a.form, skew.xi, skew.zeta), "skew bundle must not be partnered");
        for (const auto& bundle : {partnered, skew}) {
            representation_table(a.phi, a.params, a.tables, bundle);
            inner_product_table(a.phi, a.form, a.params, a.tables, bundle);
            transition_table(a.phi, a.form, a.params, a.tables, bundle);
        }
    }
}

void criterion_isomorphism_invariance() {
    const IdempotentSystem phi = testing::hamming_system(3, 2);
    const ParameterSet base = compute_parameters(phi);
    const bool base_p = is_p_polynomial(base).holds;
    const bool base_q = is_q_polynomial(phi, base).holds;
    testing::Rng rng(20260808);
    for (int t = 0; t < 5; ++t) {
        const SquareMatrix s = rng.invertible_matrix(phi.order(), 4);
        const IdempotentSystem conj = testing::conjugated(phi, s);
        const ParameterSet params = compute_parameters(conj);
        require(params.nu == base.nu, "conjugation changed nu");
        require(params.m == base.m, "conjugation changed m");
        require(params.k == base.k, "conjugation changed k");
        require(params.p_table == base.p_table, "conjugation changed the eigenvalue table");
        require(params.p_num == base.p_num, "conjugation changed the intersection numbers");
        require(is_p_polynomial(params).holds == base_p, "conjugation changed the P verdict");
        require(is_q_polynomial(conj, params).holds == base_q, "conjugation changed the Q verdict");
    }
}

void criterion_negative_paths() {
    const IdempotentSystem phi = testing::hamming_system(3, 2);

    auto e_rank = phi.E();
    e_rank[1] = e_rank[1] + e_rank[2];
    const auto rank_report = IdempotentSystem::validate(e_rank, phi.Estar()).report;
    bool found = false;
    for (const auto& f : rank_report.failures) found |= f.id() == "rank(E_1)=1";
    require(!rank_report.ok && found, "rank tampering must name rank(E_1)=1");

    auto e_idem = phi.E();
    e_idem[2].at(1, 1) += Rational(1, 5);
    const auto idem_report = IdempotentSystem::validate(e_idem, phi.Estar()).report;
    found = false;
    for (const auto& f : idem_report.failures) {
        found |= f.kind == AxiomFailure::Kind::Idempotency && f.indices == std::vector<int>{2};
    }
    require(!idem_report.ok && found, "idempotency tampering must name E_2");

    const SquareMatrix d00 = SquareMatrix::unit(2, 0, 0);
    const SquareMatrix d11 = SquareMatrix::unit(2, 1, 1);
    const auto vanish_report = IdempotentSystem::validate({d11, d00}, {d00, d11}).report;
    found = false;
    for (const auto& f : vanish_report.failures) found |= f.id() == "E_0 E*_0 E_0 != 0";
    require(!vanish_report.ok && found, "nonvanishing violation must be named");

    // CLI side: verify must exit 1 and print the failing identifier.
    require(!g_cli_path.empty(), "CLI path missing (pass it as argv[1])");
    const std::string tampered = "/tmp/idemsys_acceptance_tampered.json";
    {
        Json doc = system_to_json(phi);
        doc["E"][1] = to_json(phi.E(1) + phi.E(2));
        std::ofstream out(tampered);
        out << doc.dump(2) << "\n";
    }
    const CommandResult r = run_command(g_cli_path + " verify " + tampered);
    require(r.exit_code == 1, "verify on a tampered file must exit 1, got " +
                                  std::to_string(r.exit_code));
    require(r.output.find("rank(E_1)=1") != std::string::npos,
            "verify must print the failing identifier, got: " + r.output);
    std::remove(tampered.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    const std::array<std::pair<const char*, std::function<void()>>, 10> criteria{{
        {"identity-suite-soundness", criterion_identity_suite},
        {"brute-force-oracle-equivalence", criterion_cube_oracle},
        {"eigenmatrix-inversion", criterion_eigenmatrix_inversion},
        {"pq-polynomial-agreement", criterion_pq_agreement},
        {"leonard-certification", criterion_leonard_certificates},
        {"three-term-recurrence", criterion_three_term_recurrence},
        {"symmetrizer-correctness", criterion_symmetrizer},
        {"proposition-tables", criterion_proposition_tables},
        {"isomorphism-invariance", criterion_isomorphism_invariance},
        {"negative-path-behavior", criterion_negative_paths},
    }};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string note;
        bool ok = true;
        try {
            criteria[i].second();
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        std::printf("criterion %02zu %-32s %s\n", i + 1, criteria[i].first, ok ? "PASS" : "FAIL");
        if (!ok) {
            std::printf("            %s\n", note.c_str());
            ++failures;
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
