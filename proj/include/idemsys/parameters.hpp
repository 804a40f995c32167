#pragma once

#include <utility>
#include <vector>

#include "idemsys/system.hpp"

namespace idemsys {

using Table = std::vector<Vector>;           // [i][j]
using Triple = std::vector<Table>;           // [h][i][j]

// Every derived scalar and operator of a symmetric idempotent system,
// computed in one pass and sealed. Conventions:
//   p_table[i][j] = p_i(j), the eigenvalue of A_i on E_j V;
//   p_num[h][i][j] = p^h_{ij}, the coefficient of A_h in A_i A_j;
// and the starred analogues q_table, q_num.
struct ParameterSet {
    int d = 0;
    Rational nu;
    Vector m, mstar;  // m_i = tr(E*_0 E_i), m*_i = tr(E_0 E*_i)
    Vector k, kstar;  // k_i = nu m*_i, k*_i = nu m_i
    Table p_table, q_table;
    Triple p_num, q_num;
    std::vector<SquareMatrix> a, astar;  // A_i = sum_j p_i(j) E_j, etc.
};

// m_i = tr(E*_0 E_i) and m*_i = tr(E_0 E*_i). Throws ZeroParameterError
// if any vanishes (cannot happen for a validated system).
std::pair<Vector, Vector> scalar_m(const IdempotentSystem& phi);

// nu = 1 / tr(E_0 E*_0); also checks nu E_0 E*_0 E_0 = E_0 and its dual.
Rational scalar_nu(const IdempotentSystem& phi);

std::pair<Vector, Vector> valencies(const IdempotentSystem& phi, const Vector& m,
                                    const Vector& mstar, const Rational& nu);

// The unique Z in span{E*_i} with Y E*_0 E_0 = Z E_0, for Y in span{E_i}.
// Throws NotInAlgebraError when Y is outside span{E_i}.
SquareMatrix rho(const IdempotentSystem& phi, const SquareMatrix& y);

// p_i(j) and q_i(j) via the trace formulas; checks the orthogonality
// sum_h p_i(h) q_h(j) = delta_ij nu and the duality p_i(j) k*_j = q_j(i) k_i.
std::pair<Table, Table> eigenvalue_tables(const IdempotentSystem& phi, const Vector& m,
                                          const Vector& mstar, const Rational& nu);

// A_i = sum_j p_i(j) E_j and A*_i = sum_j q_i(j) E*_j, cross-checked
// against the rho-route nu * rho*(E*_i) and the defining equations
// A_i E*_0 E_0 = E*_i E_0, A_0 = I, sum_i A_i = nu E_0.
std::pair<std::vector<SquareMatrix>, std::vector<SquareMatrix>> a_elements(
    const IdempotentSystem& phi, const Table& p_table, const Table& q_table);

// p^h_{ij} by expanding A_i A_j in the basis {A_h} (exact solve against
// the eigenvalue table), cross-checked against the closed form
// nu^-1 sum_r p_i(r) p_j(r) q_r(h) and against the matrix identity
// A_i A_j = sum_h p^h_{ij} A_h; q^h_{ij} likewise on the dual side.
std::pair<Triple, Triple> structure_constants(const IdempotentSystem& phi,
                                              const ParameterSet& partial);

// Full pipeline; the result satisfies every ParameterSet invariant or a
// ZeroParameterError / ConsistencyError is thrown.
ParameterSet compute_parameters(const IdempotentSystem& phi);

}  // namespace idemsys
