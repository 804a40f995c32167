#pragma once

#include <optional>
#include <vector>

#include "idemsys/matrix.hpp"

namespace idemsys {

// Exact elimination routines. Internally rows are scaled to integers and
// reduced with fraction-free (Bareiss) pivoting; results are normalized
// back to lowest terms.

int rank(const SquareMatrix& a);

Rational determinant(const SquareMatrix& a);

// Exact inverse; throws SingularMatrixError when det(a) = 0.
SquareMatrix inverse(const SquareMatrix& a);

// One exact solution of the (possibly rectangular) system A x = b, or
// nullopt when the system is inconsistent. Free variables are set to 0.
std::optional<Vector> solve(const std::vector<Vector>& a, const Vector& b);

// Basis of the null space {x : A x = 0}; empty when only x = 0 solves.
std::vector<Vector> kernel_basis(const std::vector<Vector>& a, int cols);

// One term c * L * op(X) * R of a linear condition on an unknown square
// matrix X; op is either the identity or the transpose. A missing L or R
// means the identity factor.
struct MatrixTerm {
    Rational coeff{1};
    std::optional<SquareMatrix> left;
    std::optional<SquareMatrix> right;
    bool transposed = false;
};

// A homogeneous condition: the sum of the terms, applied to X, vanishes.
using MatrixConstraint = std::vector<MatrixTerm>;

// Basis of the space of square matrices X of the given order satisfying
// every constraint. Empty result means only X = 0 satisfies them.
std::vector<SquareMatrix> solve_linear_space(int order,
                                             const std::vector<MatrixConstraint>& constraints);

// Coefficients c with target = sum c_i basis_i, or nullopt when target is
// outside the span. Unique when the basis is linearly independent.
std::optional<Vector> coefficients_in_span(const std::vector<SquareMatrix>& basis,
                                           const SquareMatrix& target);

}  // namespace idemsys
