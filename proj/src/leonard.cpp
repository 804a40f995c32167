#include "idemsys/leonard.hpp"

namespace idemsys {

Polynomial::Polynomial(Vector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
    trim();
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Polynomial::degree() const {
    if (coeffs_.size() == 1 && coeffs_[0].is_zero()) return -1;
    return static_cast<int>(coeffs_.size()) - 1;
}

Rational Polynomial::leading_coefficient() const { return coeffs_.back(); }

Rational Polynomial::operator()(const Rational& v) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
}

SquareMatrix Polynomial::operator()(const SquareMatrix& m) const {
    SquareMatrix acc(m.order());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * m;
        for (int t = 0; t < m.order(); ++t) acc.at(t, t) += coeffs_[i];
    }
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Vector c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (Rational(-1) * b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Vector c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    Vector v = a.coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

namespace {

PatternVerdict pattern_verdict(const Triple& num) {
    const int n = static_cast<int>(num.size());
    for (int h = 0; h < n; ++h) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const Rational& v = num[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(j)];
                const bool above = h > i + j || i > j + h || j > h + i;
                const bool on_edge = h == i + j || i == j + h || j == h + i;
                if (above && !v.is_zero()) return {false, {{h, i, j}}};
                if (on_edge && v.is_zero()) return {false, {{h, i, j}}};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace

PatternVerdict is_p_polynomial(const ParameterSet& params) { return pattern_verdict(params.p_num); }

PatternVerdict is_q_polynomial(const IdempotentSystem& phi, const ParameterSet& params) {
    const PatternVerdict direct = pattern_verdict(params.q_num);
    // Independent route: the q-pattern of phi is the p-pattern of its dual.
    const ParameterSet dual_params = compute_parameters(phi.dual());
    const PatternVerdict via_dual = pattern_verdict(dual_params.p_num);
    if (direct.holds != via_dual.holds) {
        throw ConsistencyError("Q-polynomial verdicts disagree between direct and dual routes");
    }
    return direct;
}

bool is_p_polynomial_via_b1(const MatrixTables& tables) {
    if (tables.b.size() < 2) {
        throw DimensionTooSmallError("B_1 criterion requires d >= 1");
    }
    return tables.b[1].is_irreducible_tridiagonal();
}

TridiagonalData tridiagonal_data(const ParameterSet& params) {
    const int d = params.d;
    if (d < 1) throw DimensionTooSmallError("tridiagonal data requires d >= 1");
    if (!is_p_polynomial(params).holds) {
        throw NotPPolynomialError("tridiagonal data requires the P-polynomial property");
    }
    TridiagonalData t;
    const auto pn = [&](int h, int i, int j) {
        return params.p_num[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(j)];
    };
    for (int i = 1; i <= d; ++i) t.c.push_back(pn(i, 1, i - 1));
    for (int i = 0; i <= d; ++i) t.a.push_back(pn(i, 1, i));
    for (int i = 0; i <= d - 1; ++i) t.b.push_back(pn(i, 1, i + 1));
    for (const auto& ci : t.c) {
        if (ci.is_zero()) throw InvariantViolationError("c_i = 0 contradicts irreducibility");
    }
    for (const auto& bi : t.b) {
        if (bi.is_zero()) throw InvariantViolationError("b_i = 0 contradicts irreducibility");
    }
    const Rational k1 = params.k[1];
    for (int i = 0; i <= d; ++i) {
        Rational row = t.a[static_cast<std::size_t>(i)];
        if (i >= 1) row += t.c[static_cast<std::size_t>(i - 1)];
        if (i <= d - 1) row += t.b[static_cast<std::size_t>(i)];
        if (row != k1) throw InvariantViolationError("c_i + a_i + b_i = k_1 fails");
    }
    return t;
}

OrthogonalPolySequence orthogonal_polys(const ParameterSet& params, const TridiagonalData& tri) {
    const int d = params.d;
    if (d < 1) throw DimensionTooSmallError("recurrence requires d >= 1");
    OrthogonalPolySequence seq;
    seq.f.push_back(Polynomial::constant(Rational(1)));
    const Polynomial x = Polynomial::x();
    for (int i = 0; i < d; ++i) {
        // c_{i+1} f_{i+1} = (x - a_i) f_i - b_{i-1} f_{i-1}
        Polynomial next = (x - Polynomial::constant(tri.a[static_cast<std::size_t>(i)])) *
                          seq.f[static_cast<std::size_t>(i)];
        if (i >= 1) {
            next = next - tri.b[static_cast<std::size_t>(i - 1)] * seq.f[static_cast<std::size_t>(i - 1)];
        }
        seq.f.push_back(tri.c[static_cast<std::size_t>(i)].inverse() * next);
    }
    Rational lead(1);
    for (int i = 0; i <= d; ++i) {
        const Polynomial& fi = seq.f[static_cast<std::size_t>(i)];
        if (fi.degree() != i) throw ConsistencyError("deg f_i = i fails");
        if (i >= 1) {
            lead /= tri.c[static_cast<std::size_t>(i - 1)];
            if (fi.leading_coefficient() != lead) {
                throw ConsistencyError("leading coefficient of f_i is not 1/(c_1...c_i)");
            }
        }
        if (fi(params.a[1]) != params.a[static_cast<std::size_t>(i)]) {
            throw NotPPolynomialError("f_i(A_1) = A_i fails at i = " + std::to_string(i));
        }
    }
    return seq;
}

LeonardSystem to_leonard_system(const IdempotentSystem& phi, const ParameterSet& params,
                                const MatrixTables& tables, const BasisBundle& bundle) {
    if (phi.d() < 1) throw DimensionTooSmallError("Leonard extraction requires d >= 1");
    if (!is_p_polynomial(params).holds || !is_q_polynomial(phi, params).holds) {
        throw NotPQPolynomialError("system is not both P- and Q-polynomial");
    }

    LeonardSystem ls{params.a[1],
                     params.astar[1],
                     phi.E(),
                     phi.Estar(),
                     params.p_table[1],
                     params.q_table[1],
                     tridiagonal_data(params),
                     SquareMatrix(phi.order()),
                     SquareMatrix(phi.order()),
                     SquareMatrix(phi.order()),
                     SquareMatrix(phi.order())};

    // Multiplicity-free: the eigenvalue sequences must be pairwise distinct.
    for (std::size_t i = 0; i < ls.eigenvalues.size(); ++i) {
        for (std::size_t j = i + 1; j < ls.eigenvalues.size(); ++j) {
            if (ls.eigenvalues[i] == ls.eigenvalues[j] ||
                ls.dual_eigenvalues[i] == ls.dual_eigenvalues[j]) {
                throw CertificateError("eigenvalues are not pairwise distinct");
            }
        }
    }
    // Eigenvalue check straight against the idempotents.
    for (int j = 0; j <= phi.d(); ++j) {
        if (ls.a * phi.E(j) != ls.eigenvalues[static_cast<std::size_t>(j)] * phi.E(j) ||
            ls.astar * phi.Estar(j) != ls.dual_eigenvalues[static_cast<std::size_t>(j)] * phi.Estar(j)) {
            throw CertificateError("A_1 E_j = p_1(j) E_j fails");
        }
    }

    // Direct change-of-basis certificates. In the standard basis A_1 is
    // irreducible tridiagonal and A*_1 diagonal; roles exchange in the
    // star-standard basis.
    const SquareMatrix v = matrix_with_columns(bundle.bases[0]);
    const SquareMatrix v_inv = inverse(v);
    const SquareMatrix w = matrix_with_columns(bundle.bases[2]);
    const SquareMatrix w_inv = inverse(w);
    ls.cert_std_a = v_inv * ls.a * v;
    ls.cert_std_astar = v_inv * ls.astar * v;
    ls.cert_star_a = w_inv * ls.a * w;
    ls.cert_star_astar = w_inv * ls.astar * w;
    if (!ls.cert_std_a.is_irreducible_tridiagonal() || !ls.cert_std_astar.is_diagonal()) {
        throw CertificateError("standard-basis representation is not tridiagonal/diagonal");
    }
    if (!ls.cert_star_astar.is_irreducible_tridiagonal() || !ls.cert_star_a.is_diagonal()) {
        throw CertificateError("star-standard-basis representation is not tridiagonal/diagonal");
    }
    if (ls.cert_std_a != tables.b[1] || ls.cert_star_astar != tables.bstar[1]) {
        throw CertificateError("certified representation disagrees with B_1 / B*_1");
    }
    return ls;
}

bool affine_membership(const IdempotentSystem& phi, const ParameterSet& params,
                       const SquareMatrix& a, const SquareMatrix& astar) {
    const SquareMatrix id = SquareMatrix::identity(phi.order());
    const auto ca = coefficients_in_span({params.a[1], id}, a);
    if (!ca || (*ca)[0].is_zero()) return false;
    const auto cs = coefficients_in_span({params.astar[1], id}, astar);
    return cs && !(*cs)[0].is_zero();
}

}  // namespace idemsys
