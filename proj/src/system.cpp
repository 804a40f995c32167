#include "idemsys/system.hpp"

namespace idemsys {

namespace {

std::string subscript(const std::string& family, int i) {
    return family + "_" + std::to_string(i);
}

void check_family_axioms(const std::string& family, const std::vector<SquareMatrix>& f,
                         std::vector<AxiomFailure>& failures) {
    const int n = static_cast<int>(f.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const SquareMatrix prod = f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
            if (i == j) {
                const SquareMatrix residual = prod - f[static_cast<std::size_t>(i)];
                if (!residual.is_zero()) {
                    failures.push_back({AxiomFailure::Kind::Idempotency, family, {i},
                                        subscript(family, i) + " is not idempotent"});
                }
            } else if (!prod.is_zero()) {
                failures.push_back({AxiomFailure::Kind::Orthogonality, family, {i, j},
                                    subscript(family, i) + " " + subscript(family, j) + " != 0"});
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        const int r = rank(f[static_cast<std::size_t>(i)]);
        if (r != 1) {
            failures.push_back({AxiomFailure::Kind::RankOne, family, {i},
                                "rank(" + subscript(family, i) + ")=1 violated: rank is " +
                                    std::to_string(r)});
        }
    }
}

void check_nonvanishing(const std::string& outer_family, const SquareMatrix& outer,
                        const std::string& inner_family, const std::vector<SquareMatrix>& inner,
                        std::vector<AxiomFailure>& failures) {
    for (int i = 0; i < static_cast<int>(inner.size()); ++i) {
        if ((outer * inner[static_cast<std::size_t>(i)] * outer).is_zero()) {
            failures.push_back({AxiomFailure::Kind::Nonvanishing, inner_family, {i},
                                subscript(outer_family, 0) + " " + subscript(inner_family, i) +
                                    " " + subscript(outer_family, 0) + " = 0"});
        }
    }
}

}  // namespace

std::string AxiomFailure::id() const {
    switch (kind) {
        case Kind::Idempotency:
            return subscript(family, indices[0]) + " " + subscript(family, indices[0]) + " = " +
                   subscript(family, indices[0]);
        case Kind::Orthogonality:
            return subscript(family, indices[0]) + " " + subscript(family, indices[1]) + " = 0";
        case Kind::RankOne:
            return "rank(" + subscript(family, indices[0]) + ")=1";
        case Kind::Nonvanishing: {
            const std::string outer = family == "E" ? "E*_0" : "E_0";
            return outer + " " + subscript(family, indices[0]) + " " + outer + " != 0";
        }
    }
    return "unknown";
}

IdempotentSystem::Validated IdempotentSystem::validate(std::vector<SquareMatrix> e,
                                                       std::vector<SquareMatrix> estar) {
    if (e.empty() || e.size() != estar.size()) {
        throw ShapeError("idempotent families must be nonempty and of equal length");
    }
    const int order = static_cast<int>(e.size());
    for (const auto& m : e) {
        if (m.order() != order) throw ShapeError("E_i must have order d+1");
    }
    for (const auto& m : estar) {
        if (m.order() != order) throw ShapeError("E*_i must have order d+1");
    }

    Validated out;
    check_family_axioms("E", e, out.report.failures);
    check_family_axioms("E*", estar, out.report.failures);
    // E_0 E*_i E_0 != 0 and E*_0 E_i E*_0 != 0.
    check_nonvanishing("E", e.front(), "E*", estar, out.report.failures);
    check_nonvanishing("E*", estar.front(), "E", e, out.report.failures);

    out.report.ok = out.report.failures.empty();
    if (out.report.ok) {
        out.system = IdempotentSystem(order - 1, std::move(e), std::move(estar));
    }
    return out;
}

IdempotentSystem IdempotentSystem::dual() const { return {d_, estar_, e_}; }

SymmetrizingForm::SymmetrizingForm(SquareMatrix gram, std::string normalization)
    : gram_(std::move(gram)), gram_inv_(inverse(gram_)), normalization_(std::move(normalization)) {}

Rational SymmetrizingForm::pair(const Vector& u, const Vector& v) const {
    return dot(u, gram_ * v);
}

SymmetrizingForm symmetrizer(const IdempotentSystem& phi) {
    std::vector<MatrixConstraint> constraints;
    for (int i = 0; i <= phi.d(); ++i) {
        // X E_i - E_i^t X = 0, and the same for E*_i.
        constraints.push_back({MatrixTerm{Rational(1), std::nullopt, phi.E(i), false},
                               MatrixTerm{Rational(-1), phi.E(i).transpose(), std::nullopt, false}});
        constraints.push_back({MatrixTerm{Rational(1), std::nullopt, phi.Estar(i), false},
                               MatrixTerm{Rational(-1), phi.Estar(i).transpose(), std::nullopt, false}});
    }
    const auto space = solve_linear_space(phi.order(), constraints);
    if (space.empty()) {
        throw NotSymmetricError("no nonzero form intertwines both idempotent families");
    }
    if (space.size() > 1) {
        throw AmbiguousFormError("form space has dimension " + std::to_string(space.size()));
    }
    SquareMatrix g = space.front();
    // Scale so the first nonzero entry (row-major) is 1.
    Rational leading(0);
    for (int i = 0; i < g.order() && leading.is_zero(); ++i) {
        for (int j = 0; j < g.order() && leading.is_zero(); ++j) {
            if (!g.at(i, j).is_zero()) leading = g.at(i, j);
        }
    }
    g = leading.inverse() * g;
    if (g != g.transpose()) {
        throw NotSymmetricError("the intertwining form is not symmetric");
    }
    if (rank(g) != g.order()) {
        throw NotSymmetricError("the intertwining form is degenerate");
    }
    return {std::move(g), "first nonzero entry scaled to 1"};
}

SquareMatrix apply_dagger(const SymmetrizingForm& form, const SquareMatrix& a) {
    if (a.order() != form.gram().order()) {
        throw OrderMismatchError("apply_dagger: order mismatch");
    }
    return form.gram_inverse() * a.transpose() * form.gram();
}

}  // namespace idemsys
