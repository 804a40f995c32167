#pragma once

#include "idemsys/system.hpp"

namespace idemsys {

// Eigenvalue matrix input: P has (i,j)-entry p_j(i), so row 0 lists the
// valencies k_j and column 0 is all ones. nu must equal the row-0 sum.
struct EigenmatrixInput {
    Rational nu;
    SquareMatrix p;

    EigenmatrixInput(Rational nu_, SquareMatrix p_) : nu(std::move(nu_)), p(std::move(p_)) {}
};

// Realizes the system whose operators have the closed-form matrices of
// the working representation: E*_i is the elementary diagonal idempotent
// and E_r = nu^-1 U K* Delta_rr U* K, with K = diag(row 0 of P),
// Q = nu P^-1, K* = diag(row 0 of Q), U = Q (K*)^-1, U* = P K^-1.
//
// Throws EigenmatrixError when the input invariants fail and
// SingularEigenmatrixError when P is not invertible; data that produces
// an invalid system comes back as a ValidationReport. A constructed
// system is confirmed symmetric with Gram matrix K (NotSymmetricError
// otherwise).
IdempotentSystem::Validated from_eigenmatrix(const EigenmatrixInput& input);

// Krawtchouk eigenmatrix of the length-n Hamming scheme over an alphabet
// of size q: nu = q^n and P[i][j] = sum_l (-1)^l (q-1)^(j-l) C(i,l) C(n-i, j-l).
EigenmatrixInput hamming_eigenmatrix(int n, int q);

}  // namespace idemsys
