#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "idemsys/rational.hpp"

namespace idemsys {

using Vector = std::vector<Rational>;

// Dense square matrix over Rational with exact entrywise equality.
// Rows and columns are indexed 0..order()-1.
class SquareMatrix {
public:
    explicit SquareMatrix(int order);
    SquareMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static SquareMatrix identity(int order);
    // Elementary matrix with a single 1 in position (i, j).
    static SquareMatrix unit(int order, int i, int j);
    static SquareMatrix diagonal(const Vector& entries);
    static SquareMatrix from_rows(const std::vector<Vector>& rows);

    int order() const { return n_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    Rational& operator()(int i, int j) { return at(i, j); }
    const Rational& operator()(int i, int j) const { return at(i, j); }

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_tridiagonal() const;
    // Tridiagonal with every entry on the super- and subdiagonal nonzero.
    bool is_irreducible_tridiagonal() const;

    Rational trace() const;
    SquareMatrix transpose() const;

    Vector row(int i) const;
    Vector column(int j) const;

    SquareMatrix& operator+=(const SquareMatrix& o);
    SquareMatrix& operator-=(const SquareMatrix& o);
    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(const Rational& c, const SquareMatrix& a);

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);
    friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

    std::string str() const;  // compact one-line form, for diagnostics

private:
    int n_;
    std::vector<Rational> a_;  // row-major
};

Vector operator*(const SquareMatrix& m, const Vector& v);
Vector operator*(const Rational& c, Vector v);
Vector operator+(Vector a, const Vector& b);
bool is_zero(const Vector& v);

// Plain coordinate product u^t v (no form involved).
Rational dot(const Vector& u, const Vector& v);

// Matrix whose j-th column is vectors[j]; all vectors must have size
// equal to vectors.size().
SquareMatrix matrix_with_columns(const std::vector<Vector>& vectors);

// Largest |numerator| after putting every entry of m over the common
// denominator; "0" exactly when m is zero. Used for identity residuals.
std::string residual_norm(const SquareMatrix& m);

}  // namespace idemsys
