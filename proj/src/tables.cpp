#include "idemsys/tables.hpp"

namespace idemsys {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolationError(what);
}

void require_match(const SquareMatrix& computed, const SquareMatrix& closed,
                   const std::string& what) {
    if (computed != closed) {
        throw TableMismatchError(what + ": computed " + computed.str() + " vs closed form " +
                                 closed.str());
    }
}

// Vectors of a basis as the columns of an invertible matrix.
SquareMatrix basis_matrix(const std::vector<Vector>& basis) { return matrix_with_columns(basis); }

bool in_image(const SquareMatrix& projector, const Vector& v) {
    return projector * v == v;
}

}  // namespace

MatrixTables build_tables(const ParameterSet& params) {
    const int n = params.d + 1;
    MatrixTables t(n);
    t.k = SquareMatrix::diagonal(params.k);
    t.kstar = SquareMatrix::diagonal(params.kstar);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            t.p.at(i, j) = params.p_table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            t.q.at(i, j) = params.q_table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
    }
    const SquareMatrix nu_id = params.nu * SquareMatrix::identity(n);
    require(t.p * t.q == nu_id && t.q * t.p == nu_id, "P Q = Q P = nu I fails");

    t.u = inverse(t.k) * t.p.transpose();
    require(t.u == t.q * inverse(t.kstar), "the two routes to U disagree");
    t.ustar = inverse(t.kstar) * t.q.transpose();
    require(t.ustar == t.p * inverse(t.k), "the two routes to U* disagree");
    require(t.u.transpose() == t.ustar, "U^t = U* fails");
    for (int i = 0; i < n; ++i) {
        require(t.u.at(i, 0) == Rational(1) && t.ustar.at(i, 0) == Rational(1) &&
                    t.u.at(0, i) == Rational(1) && t.ustar.at(0, i) == Rational(1),
                "first row/column of U, U* must be all ones");
    }

    for (int i = 0; i < n; ++i) {
        SquareMatrix bi(n), bsi(n);
        for (int h = 0; h < n; ++h) {
            for (int j = 0; j < n; ++j) {
                bi.at(h, j) = params.p_num[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)]
                                          [static_cast<std::size_t>(j)];
                bsi.at(h, j) = params.q_num[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(j)];
            }
        }
        t.b.push_back(std::move(bi));
        t.bstar.push_back(std::move(bsi));
        Vector hd(static_cast<std::size_t>(n)), hsd(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            hd[static_cast<std::size_t>(j)] =
                params.p_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            hsd[static_cast<std::size_t>(j)] =
                params.q_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        t.h.push_back(SquareMatrix::diagonal(hd));
        t.hstar.push_back(SquareMatrix::diagonal(hsd));
    }
    return t;
}

Vector canonical_seed(const SquareMatrix& projector) {
    const int n = projector.order();
    for (int j = 0; j < n; ++j) {
        Vector col = projector.column(j);
        if (is_zero(col)) continue;
        for (int i = 0; i < n; ++i) {
            if (!col[static_cast<std::size_t>(i)].is_zero()) {
                return col[static_cast<std::size_t>(i)].inverse() * col;
            }
        }
    }
    throw InvariantViolationError("projector is zero, no seed vector exists");
}

Vector partner_of(const SymmetrizingForm& form, const Rational& nu, const Vector& xi) {
    const Rational n2 = form.norm_squared(xi);
    if (n2.is_zero()) throw InvariantViolationError("seed vector has zero norm");
    return (nu / n2) * xi;
}

std::vector<Vector> standard_basis(const IdempotentSystem& phi, const Vector& xi) {
    if (is_zero(xi) || !in_image(phi.E(0), xi)) {
        throw NotInE0VError("standard_basis: xi must be a nonzero vector of E_0 V");
    }
    std::vector<Vector> basis;
    for (int i = 0; i <= phi.d(); ++i) {
        Vector v = phi.Estar(i) * xi;
        if (is_zero(v)) {
            throw InvariantViolationError("E*_" + std::to_string(i) + " xi vanished");
        }
        basis.push_back(std::move(v));
    }
    if (rank(basis_matrix(basis)) != phi.order()) {
        throw InvariantViolationError("standard basis is not full rank");
    }
    return basis;
}

bool is_standard(const IdempotentSystem& phi, const std::vector<Vector>& vectors) {
    if (static_cast<int>(vectors.size()) != phi.order()) return false;
    bool all_zero = true;
    for (const auto& v : vectors) {
        if (!is_zero(v)) all_zero = false;
    }
    if (all_zero) return false;
    Vector sum(static_cast<std::size_t>(phi.order()), Rational(0));
    for (int i = 0; i <= phi.d(); ++i) {
        if (!in_image(phi.Estar(i), vectors[static_cast<std::size_t>(i)])) return false;
        sum = sum + vectors[static_cast<std::size_t>(i)];
    }
    return in_image(phi.E(0), sum);
}

bool partners(const IdempotentSystem& phi, const SymmetrizingForm& form, const Vector& xi,
              const Vector& zeta) {
    if (is_zero(xi) || is_zero(zeta) || !in_image(phi.E(0), xi) || !in_image(phi.E(0), zeta)) {
        throw NotInE0VError("partners: both vectors must be nonzero and in E_0 V");
    }
    return form.pair(xi, zeta) == scalar_nu(phi);
}

BasisBundle make_bundle(const IdempotentSystem& phi, const SymmetrizingForm& form,
                        const ParameterSet& params) {
    const Vector xi = canonical_seed(phi.E(0));
    const Vector xistar = canonical_seed(phi.Estar(0));
    return make_bundle(phi, params, xi, partner_of(form, params.nu, xi), xistar,
                       partner_of(form, params.nu, xistar));
}

BasisBundle make_bundle(const IdempotentSystem& phi, const ParameterSet& params, Vector xi,
                        Vector zeta, Vector xistar, Vector zetastar) {
    if (is_zero(xi) || is_zero(zeta) || !in_image(phi.E(0), xi) || !in_image(phi.E(0), zeta)) {
        throw NotInE0VError("bundle seeds xi, zeta must be nonzero vectors of E_0 V");
    }
    if (is_zero(xistar) || is_zero(zetastar) || !in_image(phi.Estar(0), xistar) ||
        !in_image(phi.Estar(0), zetastar)) {
        throw NotInE0VError("bundle seeds xi*, zeta* must be nonzero vectors of E*_0 V");
    }
    BasisBundle b;
    b.xi = std::move(xi);
    b.zeta = std::move(zeta);
    b.xistar = std::move(xistar);
    b.zetastar = std::move(zetastar);
    for (int i = 0; i <= phi.d(); ++i) {
        b.bases[0].push_back(phi.Estar(i) * b.xi);
        b.bases[1].push_back(params.k[static_cast<std::size_t>(i)].inverse() *
                             (phi.Estar(i) * b.zeta));
        b.bases[2].push_back(phi.E(i) * b.xistar);
        b.bases[3].push_back(params.kstar[static_cast<std::size_t>(i)].inverse() *
                             (phi.E(i) * b.zetastar));
    }
    for (const auto& basis : b.bases) {
        if (rank(basis_matrix(basis)) != phi.order()) {
            throw InvariantViolationError("bundle basis is not full rank");
        }
    }
    return b;
}

RepresentationTable representation_table(const IdempotentSystem& phi, const ParameterSet& params,
                                         const MatrixTables& tables, const BasisBundle& bundle) {
    const int n = phi.order();
    const Rational nu_inv = params.nu.inverse();
    const SquareMatrix u_inv = inverse(tables.u);
    const SquareMatrix ustar_inv = inverse(tables.ustar);

    RepresentationTable rep;
    std::array<SquareMatrix, 4> v{SquareMatrix(n), SquareMatrix(n), SquareMatrix(n),
                                  SquareMatrix(n)};
    std::array<SquareMatrix, 4> v_inv = v;
    for (int basis = 0; basis < 4; ++basis) {
        v[static_cast<std::size_t>(basis)] =
            basis_matrix(bundle.bases[static_cast<std::size_t>(basis)]);
        v_inv[static_cast<std::size_t>(basis)] = inverse(v[static_cast<std::size_t>(basis)]);
    }

    for (int basis = 0; basis < 4; ++basis) {
        for (int family = 0; family < 4; ++family) {
            for (int r = 0; r < n; ++r) {
                const SquareMatrix& op = family == 0   ? params.a[static_cast<std::size_t>(r)]
                                         : family == 1 ? params.astar[static_cast<std::size_t>(r)]
                                         : family == 2 ? phi.E(r)
                                                       : phi.Estar(r);
                SquareMatrix computed = v_inv[static_cast<std::size_t>(basis)] * op *
                                        v[static_cast<std::size_t>(basis)];

                const SquareMatrix delta = SquareMatrix::unit(n, r, r);
                SquareMatrix closed(n);
                switch (basis * 4 + family) {
                    case 0: closed = tables.b[static_cast<std::size_t>(r)]; break;
                    case 1: closed = tables.hstar[static_cast<std::size_t>(r)]; break;
                    case 2: closed = nu_inv * (tables.u * tables.kstar * delta * tables.ustar * tables.k); break;
                    case 3: closed = delta; break;
                    case 4: closed = tables.b[static_cast<std::size_t>(r)].transpose(); break;
                    case 5: closed = tables.hstar[static_cast<std::size_t>(r)]; break;
                    case 6: closed = ustar_inv * delta * tables.ustar; break;
                    case 7: closed = delta; break;
                    case 8: closed = tables.h[static_cast<std::size_t>(r)]; break;
                    case 9: closed = tables.bstar[static_cast<std::size_t>(r)]; break;
                    case 10: closed = delta; break;
                    case 11: closed = nu_inv * (tables.ustar * tables.k * delta * tables.u * tables.kstar); break;
                    case 12: closed = tables.h[static_cast<std::size_t>(r)]; break;
                    case 13: closed = tables.bstar[static_cast<std::size_t>(r)].transpose(); break;
                    case 14: closed = delta; break;
                    case 15: closed = u_inv * delta * tables.u; break;
                    default: break;
                }
                require_match(computed, closed,
                              std::string("representation of family ") + std::to_string(family) +
                                  ", index " + std::to_string(r) + ", basis " +
                                  BasisBundle::names[basis]);
                rep[static_cast<std::size_t>(basis)][static_cast<std::size_t>(family)].push_back(
                    std::move(computed));
            }
        }
    }
    return rep;
}

MatrixGrid inner_product_table(const IdempotentSystem& phi, const SymmetrizingForm& form,
                               const ParameterSet& params, const MatrixTables& tables,
                               const BasisBundle& bundle) {
    (void)phi;
    const int n = params.d + 1;
    const Rational nu_inv = params.nu.inverse();
    const SquareMatrix id = SquareMatrix::identity(n);

    // Pairings of the four seed vectors under the form.
    const auto pr = [&](const Vector& a, const Vector& b) { return form.pair(a, b); };
    const Vector &xi = bundle.xi, &zeta = bundle.zeta, &xis = bundle.xistar, &zs = bundle.zetastar;

    std::array<std::array<SquareMatrix, 4>, 4> closed{{
        {nu_inv * pr(xi, xi) * tables.k, nu_inv * pr(xi, zeta) * id,
         nu_inv * pr(xi, xis) * (tables.k * tables.u * tables.kstar),
         nu_inv * pr(xi, zs) * (tables.k * tables.u)},
        {nu_inv * pr(zeta, xi) * id, nu_inv * pr(zeta, zeta) * inverse(tables.k),
         nu_inv * pr(zeta, xis) * (tables.u * tables.kstar), nu_inv * pr(zeta, zs) * tables.u},
        {nu_inv * pr(xis, xi) * (tables.kstar * tables.ustar * tables.k),
         nu_inv * pr(xis, zeta) * (tables.kstar * tables.ustar), nu_inv * pr(xis, xis) * tables.kstar,
         nu_inv * pr(xis, zs) * id},
        {nu_inv * pr(zs, xi) * (tables.ustar * tables.k), nu_inv * pr(zs, zeta) * tables.ustar,
         nu_inv * pr(zs, xis) * id, nu_inv * pr(zs, zs) * inverse(tables.kstar)},
    }};

    MatrixGrid grid{{{SquareMatrix(n), SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)},
                     {SquareMatrix(n), SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)},
                     {SquareMatrix(n), SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)},
                     {SquareMatrix(n), SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)}}};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            SquareMatrix m(n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    m.at(i, j) = form.pair(bundle.bases[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)],
                                           bundle.bases[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]);
                }
            }
            require_match(m, closed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                          std::string("inner products from ") + BasisBundle::names[a] + " to " +
                              BasisBundle::names[b]);
            grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(m);
        }
    }
    return grid;
}

MatrixGrid transition_table(const IdempotentSystem& phi, const SymmetrizingForm& form,
                            const ParameterSet& params, const MatrixTables& tables,
                            const BasisBundle& bundle) {
    const int n = params.d + 1;
    const SquareMatrix id = SquareMatrix::identity(n);
    const auto pr = [&](const Vector& a, const Vector& b) { return form.pair(a, b); };
    const Vector &xi = bundle.xi, &zeta = bundle.zeta, &xis = bundle.xistar, &zs = bundle.zetastar;
    const Rational nxi = pr(xi, xi), nzeta = pr(zeta, zeta), nxis = pr(xis, xis), nzs = pr(zs, zs);

    std::array<std::array<SquareMatrix, 4>, 4> closed{{
        {id, (pr(xi, zeta) / nxi) * inverse(tables.k),
         (pr(xi, xis) / nxi) * (tables.u * tables.kstar), (pr(xi, zs) / nxi) * tables.u},
        {(pr(zeta, xi) / nzeta) * tables.k, id,
         (pr(zeta, xis) / nzeta) * (tables.k * tables.u * tables.kstar),
         (pr(zeta, zs) / nzeta) * (tables.k * tables.u)},
        {(pr(xis, xi) / nxis) * (tables.ustar * tables.k), (pr(xis, zeta) / nxis) * tables.ustar, id,
         (pr(xis, zs) / nxis) * inverse(tables.kstar)},
        {(pr(zs, xi) / nzs) * (tables.kstar * tables.ustar * tables.k),
         (pr(zs, zeta) / nzs) * (tables.kstar * tables.ustar), (pr(zs, xis) / nzs) * tables.kstar,
         id},
    }};

    std::array<SquareMatrix, 4> v{SquareMatrix(n), SquareMatrix(n), SquareMatrix(n),
                                  SquareMatrix(n)};
    std::array<SquareMatrix, 4> v_inv = v;
    for (int basis = 0; basis < 4; ++basis) {
        v[static_cast<std::size_t>(basis)] =
            matrix_with_columns(bundle.bases[static_cast<std::size_t>(basis)]);
        v_inv[static_cast<std::size_t>(basis)] = inverse(v[static_cast<std::size_t>(basis)]);
    }

    MatrixGrid grid{{{SquareMatrix(n), SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)},
                     {SquareMatrix(n), SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)},
                     {SquareMatrix(n), SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)},
                     {SquareMatrix(n), SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)}}};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            // Columns of basis b in the coordinates of basis a.
            SquareMatrix t = v_inv[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
            require_match(t, closed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                          std::string("transition from ") + BasisBundle::names[a] + " to " +
                              BasisBundle::names[b]);
            grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(t);
        }
    }
    // Compatibility with the inner product matrices, and composition.
    const MatrixGrid ip = inner_product_table(phi, form, params, tables, bundle);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            require_match(ip[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                          ip[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] *
                              grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                          "inner-product/transition compatibility");
            for (int c = 0; c < 4; ++c) {
                require_match(grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                                  grid[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)],
                              grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)],
                              "transition composition");
            }
        }
    }
    return grid;
}

}  // namespace idemsys
