#pragma once

#include <array>

#include "idemsys/parameters.hpp"

namespace idemsys {

// Matrix form of the parameter data. P and Q are the eigenvalue matrices
// with (i,j)-entry p_j(i) and q_j(i); K, K* are the diagonal valency
// matrices; U = K^-1 P^t = Q (K*)^-1 and U* = (K*)^-1 Q^t = P K^-1;
// B_i has (h,j)-entry p^h_{ij}; H_i is diagonal with (j,j)-entry p_i(j).
struct MatrixTables {
    SquareMatrix k, kstar, p, q, u, ustar;
    std::vector<SquareMatrix> b, bstar, h, hstar;

    MatrixTables(int order)
        : k(order), kstar(order), p(order), q(order), u(order), ustar(order) {}
};

// Populates every table and asserts the structural invariants
// (P Q = Q P = nu I, both routes to U and U*, U^t = U*, all-ones first
// row and column of U and U*). Throws InvariantViolationError on failure.
MatrixTables build_tables(const ParameterSet& params);

// The four distinguished bases built from seed vectors xi, zeta in E_0 V
// and xi*, zeta* in E*_0 V:
//   standard            {E*_i xi}
//   dual standard       {k_i^-1 E*_i zeta}
//   star standard       {E_i xi*}
//   dual star standard  {(k*_i)^-1 E_i zeta*}
struct BasisBundle {
    Vector xi, zeta, xistar, zetastar;
    std::array<std::vector<Vector>, 4> bases;

    static constexpr const char* names[4] = {"standard", "dual-standard", "star-standard",
                                             "dual-star-standard"};
};

// Spanning vector of E_0 V with first nonzero coordinate 1 (take f = E for
// the E-side seed, f = Estar for the dual seed).
Vector canonical_seed(const SquareMatrix& projector);

// The partner of xi: nu * xi / ||xi||^2, so that <xi, partner> = nu.
Vector partner_of(const SymmetrizingForm& form, const Rational& nu, const Vector& xi);

// {E*_i xi} for nonzero xi in E_0 V; throws NotInE0VError otherwise.
std::vector<Vector> standard_basis(const IdempotentSystem& phi, const Vector& xi);

// True iff u_i lies in E*_i V for all i and the sum of the u_i lies in
// E_0 V; the all-zero sequence is rejected.
bool is_standard(const IdempotentSystem& phi, const std::vector<Vector>& vectors);

// True iff <xi, zeta> = nu; both vectors must be nonzero and in E_0 V.
bool partners(const IdempotentSystem& phi, const SymmetrizingForm& form, const Vector& xi,
              const Vector& zeta);

// Builds all four bases; defaults pick canonical seeds with zeta, zeta*
// the partners of xi, xi*.
BasisBundle make_bundle(const IdempotentSystem& phi, const SymmetrizingForm& form,
                        const ParameterSet& params);
BasisBundle make_bundle(const IdempotentSystem& phi, const ParameterSet& params, Vector xi,
                        Vector zeta, Vector xistar, Vector zetastar);

// Representing matrices of A_r, A*_r, E_r, E*_r with respect to each of
// the four bases, computed by change of basis and checked entry-exact
// against the closed forms (TableMismatchError on any discrepancy).
// Layout: [basis][family][r] with family order A, A*, E, E*.
using RepresentationTable = std::array<std::array<std::vector<SquareMatrix>, 4>, 4>;
RepresentationTable representation_table(const IdempotentSystem& phi, const ParameterSet& params,
                                         const MatrixTables& tables, const BasisBundle& bundle);

// 4x4 grid of inner product matrices between the bases, entry (a,b)
// having (i,j)-entry <basis_a[i], basis_b[j]>; checked against the
// closed forms.
using MatrixGrid = std::array<std::array<SquareMatrix, 4>, 4>;
MatrixGrid inner_product_table(const IdempotentSystem& phi, const SymmetrizingForm& form,
                               const ParameterSet& params, const MatrixTables& tables,
                               const BasisBundle& bundle);

// 4x4 grid of transition matrices, entry (a,b) expressing basis b in
// terms of basis a; checked against the closed forms, against the
// inner-product compatibility rule, and against composition.
MatrixGrid transition_table(const IdempotentSystem& phi, const SymmetrizingForm& form,
                            const ParameterSet& params, const MatrixTables& tables,
                            const BasisBundle& bundle);

}  // namespace idemsys
