#pragma once

#include <array>
#include <optional>

#include "idemsys/tables.hpp"

namespace idemsys {

// Dense polynomial over Rational, coefficient of x^i at coeffs[i].
class Polynomial {
public:
    Polynomial() : coeffs_{Rational(0)} {}
    explicit Polynomial(Vector coeffs);

    static Polynomial constant(Rational c) { return Polynomial(Vector{std::move(c)}); }
    static Polynomial x() { return Polynomial(Vector{Rational(0), Rational(1)}); }

    int degree() const;  // -1 for the zero polynomial
    const Vector& coefficients() const { return coeffs_; }
    Rational leading_coefficient() const;

    Rational operator()(const Rational& v) const;
    SquareMatrix operator()(const SquareMatrix& m) const;  // Horner

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();
    Vector coeffs_;
};

// First violating triple (h, i, j) of the zero/nonzero pattern, if any.
struct PatternVerdict {
    bool holds = false;
    std::optional<std::array<int, 3>> witness;
};

// Zero/nonzero pattern on p^h_{ij}: zero whenever one of h, i, j exceeds
// the sum of the other two, nonzero whenever one equals the sum.
PatternVerdict is_p_polynomial(const ParameterSet& params);

// Same pattern on q^h_{ij}; also recomputes the parameters of the dual
// system from scratch and requires the two routes to agree
// (ConsistencyError otherwise).
PatternVerdict is_q_polynomial(const IdempotentSystem& phi, const ParameterSet& params);

// Equivalent criterion: B_1 irreducible tridiagonal. Requires d >= 1
// (DimensionTooSmallError).
bool is_p_polynomial_via_b1(const MatrixTables& tables);

// Subdiagonal, diagonal and superdiagonal of B_1:
//   c_i = p^i_{1,i-1} (1 <= i <= d), a_i = p^i_{1,i}, b_i = p^i_{1,i+1}.
// Every c_i, b_i is nonzero and c_i + a_i + b_i = k_1 throughout.
struct TridiagonalData {
    Vector c;  // c_1..c_d
    Vector a;  // a_0..a_d
    Vector b;  // b_0..b_{d-1}
};

TridiagonalData tridiagonal_data(const ParameterSet& params);

// f_0 = 1 and c_{i+1} f_{i+1} = (x - a_i) f_i - b_{i-1} f_{i-1}; each
// f_i has degree i, leading coefficient 1/(c_1 ... c_i), and satisfies
// f_i(A_1) = A_i exactly.
struct OrthogonalPolySequence {
    std::vector<Polynomial> f;
};

OrthogonalPolySequence orthogonal_polys(const ParameterSet& params, const TridiagonalData& tri);

// (A_1; {E_i}; A*_1; {E*_i}) with the two certified basis representations:
// A_1 irreducible tridiagonal and A*_1 diagonal in the standard basis,
// roles exchanged in the star-standard basis.
struct LeonardSystem {
    SquareMatrix a, astar;
    std::vector<SquareMatrix> e, estar;
    Vector eigenvalues;       // p_1(j)
    Vector dual_eigenvalues;  // q_1(j)
    TridiagonalData tridiagonal;
    // Representing matrices: [A_1, A*_1] in the standard basis, then in
    // the star-standard basis.
    SquareMatrix cert_std_a, cert_std_astar, cert_star_a, cert_star_astar;
};

// Requires d >= 1 (DimensionTooSmallError) and both polynomial
// properties (NotPQPolynomialError); any failed certificate throws
// CertificateError.
LeonardSystem to_leonard_system(const IdempotentSystem& phi, const ParameterSet& params,
                                const MatrixTables& tables, const BasisBundle& bundle);

// True iff a = alpha A_1 + beta I and astar = alpha* A*_1 + beta* I with
// alpha, alpha* nonzero.
bool affine_membership(const IdempotentSystem& phi, const ParameterSet& params,
                       const SquareMatrix& a, const SquareMatrix& astar);

}  // namespace idemsys
