#include "idemsys/linalg.hpp"

#include <utility>

namespace idemsys {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Scale each row by the lcm of its denominators. Row scaling by nonzero
// constants preserves rank, null space, and solution sets of [A | b].
ZMatrix integer_rows(const std::vector<Vector>& a) {
    ZMatrix z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class l(1);
        for (const auto& x : a[i]) {
            mpz_class t;
            mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
            l = t;
        }
        z[i].reserve(a[i].size());
        for (const auto& x : a[i]) z[i].push_back(x.numerator() * (l / x.denominator()));
    }
    return z;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0) throw ConsistencyError("fraction-free elimination: inexact division");
    return q;
}

struct Echelon {
    ZMatrix m;
    std::vector<int> pivot_cols;  // pivot column of row r, for r < rank
    int sign = 1;                 // parity of row swaps
    mpz_class last_pivot{1};      // det of the leading rank x rank block, up to sign
};

// Fraction-free forward elimination (Bareiss). Zero columns are skipped,
// so it handles rectangular and rank-deficient input.
Echelon bareiss(ZMatrix m) {
    Echelon e;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
            e.sign = -e.sign;
        }
        const auto& pivot = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = m[static_cast<std::size_t>(i)];
            const mpz_class head = row[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < cols; ++j) {
                row[static_cast<std::size_t>(j)] =
                    exact_div(pivot * row[static_cast<std::size_t>(j)] -
                                  head * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                              prev);
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.last_pivot = prev;
    e.m = std::move(m);
    return e;
}

// Back-substitution over Rational: express the pivot variables of the
// homogeneous system in terms of one free variable set to 1.
Vector kernel_vector(const Echelon& e, int cols, int free_col) {
    Vector x(static_cast<std::size_t>(cols), Rational(0));
    x[static_cast<std::size_t>(free_col)] = Rational(1);
    for (int r = static_cast<int>(e.pivot_cols.size()) - 1; r >= 0; --r) {
        const int pc = e.pivot_cols[static_cast<std::size_t>(r)];
        Rational acc(0);
        const auto& row = e.m[static_cast<std::size_t>(r)];
        for (int j = pc + 1; j < cols; ++j) {
            if (sgn(row[static_cast<std::size_t>(j)]) == 0 || x[static_cast<std::size_t>(j)].is_zero()) continue;
            acc += Rational(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
        }
        x[static_cast<std::size_t>(pc)] = -acc / Rational(row[static_cast<std::size_t>(pc)]);
    }
    return x;
}

}  // namespace

int rank(const SquareMatrix& a) {
    std::vector<Vector> rows;
    rows.reserve(static_cast<std::size_t>(a.order()));
    for (int i = 0; i < a.order(); ++i) rows.push_back(a.row(i));
    return static_cast<int>(bareiss(integer_rows(rows)).pivot_cols.size());
}

Rational determinant(const SquareMatrix& a) {
    const int n = a.order();
    // Track the row scalings so the integer determinant can be undone.
    std::vector<Vector> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows.push_back(a.row(i));
    Rational scale(1);
    for (const auto& row : rows) {
        mpz_class l(1);
        for (const auto& x : row) {
            mpz_class t;
            mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
            l = t;
        }
        scale *= Rational(l);
    }
    Echelon e = bareiss(integer_rows(rows));
    if (static_cast<int>(e.pivot_cols.size()) < n) return Rational(0);
    Rational det(e.last_pivot);
    if (e.sign < 0) det = -det;
    return det / scale;
}

SquareMatrix inverse(const SquareMatrix& a) {
    const int n = a.order();
    // Montante form of Bareiss: run fraction-free Gauss-Jordan on [L*a | I];
    // the left block ends as p*I and the right block as p*(L*a)^-1.
    mpz_class scale(1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            mpz_class t;
            mpz_lcm(t.get_mpz_t(), scale.get_mpz_t(), a.at(i, j).denominator().get_mpz_t());
            scale = t;
        }
    }
    ZMatrix m(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational& x = a.at(i, j);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                x.numerator() * (scale / x.denominator());
        }
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    mpz_class prev(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i) {
            if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) throw SingularMatrixError("matrix is singular");
        if (p != k) std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(k)]);
        const mpz_class pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            auto& row = m[static_cast<std::size_t>(i)];
            const mpz_class head = row[static_cast<std::size_t>(k)];
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                row[static_cast<std::size_t>(j)] =
                    exact_div(pivot * row[static_cast<std::size_t>(j)] -
                                  head * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
                              prev);
            }
            row[static_cast<std::size_t>(k)] = 0;
        }
        prev = pivot;
    }
    SquareMatrix inv(n);
    const Rational denom = Rational(prev) / Rational(scale);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            inv.at(i, j) = Rational(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)]) / denom;
        }
    }
    return inv;
}

std::optional<Vector> solve(const std::vector<Vector>& a, const Vector& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw ShapeError("solve: rhs size mismatch");
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<Vector> aug(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (static_cast<int>(a[i].size()) != cols) throw ShapeError("solve: ragged matrix");
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    Echelon e = bareiss(integer_rows(aug));
    // A pivot in the rhs column means the system is inconsistent.
    for (int pc : e.pivot_cols) {
        if (pc == cols) return std::nullopt;
    }
    Vector x(static_cast<std::size_t>(cols), Rational(0));
    for (int r = static_cast<int>(e.pivot_cols.size()) - 1; r >= 0; --r) {
        const int pc = e.pivot_cols[static_cast<std::size_t>(r)];
        const auto& row = e.m[static_cast<std::size_t>(r)];
        Rational acc = Rational(row[static_cast<std::size_t>(cols)]);
        for (int j = pc + 1; j < cols; ++j) {
            if (sgn(row[static_cast<std::size_t>(j)]) == 0 || x[static_cast<std::size_t>(j)].is_zero()) continue;
            acc -= Rational(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
        }
        x[static_cast<std::size_t>(pc)] = acc / Rational(row[static_cast<std::size_t>(pc)]);
    }
    return x;
}

std::vector<Vector> kernel_basis(const std::vector<Vector>& a, int cols) {
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != cols) throw ShapeError("kernel_basis: ragged matrix");
    }
    Echelon e = bareiss(integer_rows(a));
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int pc : e.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
    std::vector<Vector> basis;
    for (int c = 0; c < cols; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) basis.push_back(kernel_vector(e, cols, c));
    }
    return basis;
}

std::vector<SquareMatrix> solve_linear_space(int order,
                                             const std::vector<MatrixConstraint>& constraints) {
    const int n = order;
    const int unknowns = n * n;
    std::vector<Vector> rows;
    rows.reserve(constraints.size() * static_cast<std::size_t>(unknowns));
    for (const auto& constraint : constraints) {
        for (const auto& term : constraint) {
            if ((term.left && term.left->order() != n) || (term.right && term.right->order() != n)) {
                throw OrderMismatchError("solve_linear_space: constraint order mismatch");
            }
        }
        // Row (i, j): coefficient of unknown X[a][b] in entry (i, j) of the
        // constraint. For c*L*X*R it is c*L[i][a]*R[b][j]; the transposed
        // variant swaps the roles of a and b.
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Vector row(static_cast<std::size_t>(unknowns), Rational(0));
                for (const auto& term : constraint) {
                    for (int a = 0; a < n; ++a) {
                        for (int b = 0; b < n; ++b) {
                            const Rational lf = term.left ? term.left->at(i, term.transposed ? b : a)
                                                          : Rational((term.transposed ? b : a) == i ? 1 : 0);
                            if (lf.is_zero()) continue;
                            const Rational rf = term.right ? term.right->at(term.transposed ? a : b, j)
                                                           : Rational((term.transposed ? a : b) == j ? 1 : 0);
                            if (rf.is_zero()) continue;
                            row[static_cast<std::size_t>(a * n + b)] += term.coeff * lf * rf;
                        }
                    }
                }
                rows.push_back(std::move(row));
            }
        }
    }
    std::vector<SquareMatrix> result;
    for (const auto& v : kernel_basis(rows, unknowns)) {
        SquareMatrix m(n);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) m.at(a, b) = v[static_cast<std::size_t>(a * n + b)];
        }
        result.push_back(std::move(m));
    }
    return result;
}

std::optional<Vector> coefficients_in_span(const std::vector<SquareMatrix>& basis,
                                           const SquareMatrix& target) {
    if (basis.empty()) return target.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt;
    const int n = basis.front().order();
    std::vector<Vector> a(static_cast<std::size_t>(n) * n,
                          Vector(basis.size(), Rational(0)));
    Vector b(static_cast<std::size_t>(n) * n, Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].order() != n || target.order() != n) {
            throw OrderMismatchError("coefficients_in_span: order mismatch");
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)][k] = basis[k].at(i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i * n + j)] = target.at(i, j);
    }
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    // solve() already rejects inconsistent systems; x is exact.
    return x;
}

}  // namespace idemsys
