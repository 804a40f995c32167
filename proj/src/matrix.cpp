#include "idemsys/matrix.hpp"

#include <sstream>

namespace idemsys {

namespace {

void require_order(int n) {
    if (n <= 0) throw ShapeError("matrix order must be positive");
}

void require_same_order(const SquareMatrix& a, const SquareMatrix& b, const char* op) {
    if (a.order() != b.order()) {
        throw OrderMismatchError(std::string(op) + ": orders " + std::to_string(a.order()) +
                                 " and " + std::to_string(b.order()) + " differ");
    }
}

}  // namespace

SquareMatrix::SquareMatrix(int order) : n_(order) {
    require_order(order);
    a_.assign(static_cast<std::size_t>(n_) * n_, Rational(0));
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : SquareMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) {
            throw ShapeError("matrix literal is not square");
        }
        int j = 0;
        for (long v : row) at(i, j++) = Rational(v);
        ++i;
    }
}

SquareMatrix SquareMatrix::identity(int order) {
    SquareMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = Rational(1);
    return m;
}

SquareMatrix SquareMatrix::unit(int order, int i, int j) {
    SquareMatrix m(order);
    m.at(i, j) = Rational(1);
    return m;
}

SquareMatrix SquareMatrix::diagonal(const Vector& entries) {
    SquareMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.order(); ++i) m.at(i, i) = entries[static_cast<std::size_t>(i)];
    return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<Vector>& rows) {
    SquareMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.order(); ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.order()) {
            throw ShapeError("rows do not form a square matrix");
        }
        for (int j = 0; j < m.order(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

bool SquareMatrix::is_zero() const {
    for (const auto& x : a_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool SquareMatrix::is_diagonal() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i != j && !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool SquareMatrix::is_tridiagonal() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (std::abs(i - j) > 1 && !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool SquareMatrix::is_irreducible_tridiagonal() const {
    if (!is_tridiagonal()) return false;
    for (int i = 0; i + 1 < n_; ++i) {
        if (at(i, i + 1).is_zero() || at(i + 1, i).is_zero()) return false;
    }
    return true;
}

Rational SquareMatrix::trace() const {
    Rational t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix m(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    }
    return m;
}

Vector SquareMatrix::row(int i) const {
    Vector v(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) v[static_cast<std::size_t>(j)] = at(i, j);
    return v;
}

Vector SquareMatrix::column(int j) const {
    Vector v(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o) {
    require_same_order(*this, o, "matrix addition");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& o) {
    require_same_order(*this, o, "matrix subtraction");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_order(a, b, "matrix product");
    const int n = a.order();
    SquareMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

SquareMatrix operator*(const Rational& c, const SquareMatrix& a) {
    SquareMatrix m = a;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) m.at(i, j) *= c;
    }
    return m;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
}

std::string SquareMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

Vector operator*(const SquareMatrix& m, const Vector& v) {
    if (static_cast<int>(v.size()) != m.order()) {
        throw OrderMismatchError("matrix-vector product: size mismatch");
    }
    Vector r(v.size(), Rational(0));
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            r[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

Vector operator*(const Rational& c, Vector v) {
    for (auto& x : v) x *= c;
    return v;
}

Vector operator+(Vector a, const Vector& b) {
    if (a.size() != b.size()) throw OrderMismatchError("vector addition: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Rational dot(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw OrderMismatchError("dot product: size mismatch");
    Rational r(0);
    for (std::size_t i = 0; i < u.size(); ++i) r += u[i] * v[i];
    return r;
}

SquareMatrix matrix_with_columns(const std::vector<Vector>& vectors) {
    const int n = static_cast<int>(vectors.size());
    SquareMatrix m(n);
    for (int j = 0; j < n; ++j) {
        if (static_cast<int>(vectors[static_cast<std::size_t>(j)].size()) != n) {
            throw ShapeError("column vectors do not form a square matrix");
        }
        for (int i = 0; i < n; ++i) m.at(i, j) = vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return m;
}

std::string residual_norm(const SquareMatrix& m) {
    mpz_class denom(1);
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), denom.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
            denom = l;
        }
    }
    mpz_class best(0);
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            const Rational& e = m.at(i, j);
            mpz_class scaled = e.numerator() * (denom / e.denominator());
            scaled = abs(scaled);
            if (scaled > best) best = scaled;
        }
    }
    return best.get_str();
}

}  // namespace idemsys
