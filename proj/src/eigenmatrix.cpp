#include "idemsys/eigenmatrix.hpp"

namespace idemsys {

IdempotentSystem::Validated from_eigenmatrix(const EigenmatrixInput& input) {
    const SquareMatrix& p = input.p;
    const int n = p.order();
    if (input.nu.is_zero()) throw EigenmatrixError("nu must be nonzero");
    Rational row0_sum(0);
    for (int i = 0; i < n; ++i) {
        if (p.at(i, 0) != Rational(1)) {
            throw EigenmatrixError("column 0 of P must be all ones (row " + std::to_string(i) + ")");
        }
    }
    for (int j = 0; j < n; ++j) {
        if (p.at(0, j).is_zero()) {
            throw EigenmatrixError("row 0 of P lists the valencies and must be nonzero (column " +
                                   std::to_string(j) + ")");
        }
        row0_sum += p.at(0, j);
    }
    if (row0_sum != input.nu) {
        throw EigenmatrixError("row 0 of P must sum to nu");
    }

    SquareMatrix q(n);
    try {
        q = input.nu * inverse(p);
    } catch (const SingularMatrixError&) {
        throw SingularEigenmatrixError("eigenmatrix P is singular");
    }

    // k*_j = Q[0][j]; a zero here means E*_0 E_j E*_0 = 0 in the system
    // the data describes, so report it as that axiom failure.
    IdempotentSystem::Validated out;
    for (int j = 0; j < n; ++j) {
        if (q.at(0, j).is_zero()) {
            out.report.failures.push_back({AxiomFailure::Kind::Nonvanishing, "E", {j},
                                           "k*_" + std::to_string(j) + " = 0"});
        }
    }
    if (!out.report.failures.empty()) return out;

    const SquareMatrix k = SquareMatrix::diagonal(p.row(0));
    const SquareMatrix kstar = SquareMatrix::diagonal(q.row(0));
    const SquareMatrix u = q * inverse(kstar);
    const SquareMatrix ustar = p * inverse(k);

    std::vector<SquareMatrix> e, estar;
    const Rational nu_inv = input.nu.inverse();
    for (int r = 0; r < n; ++r) {
        e.push_back(nu_inv * (u * kstar * SquareMatrix::unit(n, r, r) * ustar * k));
        estar.push_back(SquareMatrix::unit(n, r, r));
    }
    out = IdempotentSystem::validate(std::move(e), std::move(estar));
    if (out.system) {
        // The working representation must be symmetrized by K itself
        // (K has leading entry k_0 = 1, matching the normalization).
        const SymmetrizingForm form = symmetrizer(*out.system);
        if (form.gram() != k) {
            throw NotSymmetricError("constructed system is not symmetrized by K");
        }
    }
    return out;
}

EigenmatrixInput hamming_eigenmatrix(int n, int q) {
    if (n < 1 || q < 2) throw EigenmatrixError("hamming_eigenmatrix requires n >= 1, q >= 2");
    const int order = n + 1;
    SquareMatrix p(order);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            mpz_class sum(0);
            for (int l = 0; l <= j; ++l) {
                mpz_class term = binomial(static_cast<unsigned long>(i), l) *
                                 binomial(static_cast<unsigned long>(n - i), j - l);
                if (term == 0) continue;
                mpz_class qpow;
                mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q - 1),
                              static_cast<unsigned long>(j - l));
                term *= qpow;
                if (l % 2 == 0) {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            p.at(i, j) = Rational(sum);
        }
    }
    mpz_class nu;
    mpz_ui_pow_ui(nu.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
    return {Rational(nu), std::move(p)};
}

}  // namespace idemsys
