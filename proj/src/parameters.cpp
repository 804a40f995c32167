#include "idemsys/parameters.hpp"

namespace idemsys {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ConsistencyError(what);
}

}  // namespace

std::pair<Vector, Vector> scalar_m(const IdempotentSystem& phi) {
    const int n = phi.order();
    Vector m(static_cast<std::size_t>(n)), mstar(static_cast<std::size_t>(n));
    Rational sum_m(0), sum_mstar(0);
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)] = (phi.Estar(0) * phi.E(i)).trace();
        mstar[static_cast<std::size_t>(i)] = (phi.E(0) * phi.Estar(i)).trace();
        if (m[static_cast<std::size_t>(i)].is_zero() || mstar[static_cast<std::size_t>(i)].is_zero()) {
            throw ZeroParameterError("m_" + std::to_string(i) + " or m*_" + std::to_string(i) +
                                     " vanishes; input is not a valid idempotent system");
        }
        sum_m += m[static_cast<std::size_t>(i)];
        sum_mstar += mstar[static_cast<std::size_t>(i)];
    }
    require(sum_m == Rational(1) && sum_mstar == Rational(1), "sum of m_i must be 1");
    return {std::move(m), std::move(mstar)};
}

Rational scalar_nu(const IdempotentSystem& phi) {
    const Rational t = (phi.E(0) * phi.Estar(0)).trace();
    if (t.is_zero()) throw ZeroParameterError("tr(E_0 E*_0) = 0");
    const Rational nu = t.inverse();
    require((nu * (phi.E(0) * phi.Estar(0) * phi.E(0))) == phi.E(0),
            "nu E_0 E*_0 E_0 = E_0 fails");
    require((nu * (phi.Estar(0) * phi.E(0) * phi.Estar(0))) == phi.Estar(0),
            "nu E*_0 E_0 E*_0 = E*_0 fails");
    return nu;
}

std::pair<Vector, Vector> valencies(const IdempotentSystem& phi, const Vector& m,
                                    const Vector& mstar, const Rational& nu) {
    const int n = phi.order();
    Vector k(static_cast<std::size_t>(n)), kstar(static_cast<std::size_t>(n));
    Rational sum_k(0), sum_kstar(0);
    for (int i = 0; i < n; ++i) {
        k[static_cast<std::size_t>(i)] = nu * mstar[static_cast<std::size_t>(i)];
        kstar[static_cast<std::size_t>(i)] = nu * m[static_cast<std::size_t>(i)];
        sum_k += k[static_cast<std::size_t>(i)];
        sum_kstar += kstar[static_cast<std::size_t>(i)];
    }
    require(k[0] == Rational(1) && kstar[0] == Rational(1), "k_0 = k*_0 = 1 fails");
    require(sum_k == nu && sum_kstar == nu, "sum of valencies must be nu");
    return {std::move(k), std::move(kstar)};
}

SquareMatrix rho(const IdempotentSystem& phi, const SquareMatrix& y) {
    if (!coefficients_in_span(phi.E(), y)) {
        throw NotInAlgebraError("rho: argument is outside span{E_i}");
    }
    const SquareMatrix w = y * phi.Estar(0) * phi.E(0);
    std::vector<SquareMatrix> basis;
    basis.reserve(static_cast<std::size_t>(phi.order()));
    for (int i = 0; i <= phi.d(); ++i) basis.push_back(phi.Estar(i) * phi.E(0));
    const auto coeffs = coefficients_in_span(basis, w);
    require(coeffs.has_value(), "rho: Y E*_0 E_0 is outside span{E*_i E_0}");
    SquareMatrix z(phi.order());
    for (int i = 0; i <= phi.d(); ++i) z += (*coeffs)[static_cast<std::size_t>(i)] * phi.Estar(i);
    return z;
}

std::pair<Table, Table> eigenvalue_tables(const IdempotentSystem& phi, const Vector& m,
                                          const Vector& mstar, const Rational& nu) {
    const int n = phi.order();
    Table p(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n))),
        q(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        const SquareMatrix left_p = phi.E(0) * phi.Estar(i);
        const SquareMatrix left_q = phi.Estar(0) * phi.E(i);
        for (int j = 0; j < n; ++j) {
            // p_i(j) = nu m_j^-1 tr(E_0 E*_i E_j E*_0)
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                nu * (left_p * phi.E(j) * phi.Estar(0)).trace() / m[static_cast<std::size_t>(j)];
            // q_i(j) = nu (m*_j)^-1 tr(E*_0 E_i E*_j E_0)
            q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                nu * (left_q * phi.Estar(j) * phi.E(0)).trace() / mstar[static_cast<std::size_t>(j)];
        }
    }
    // Orthogonality: sum_h p_i(h) q_h(j) = delta_ij nu.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational s(0);
            for (int h = 0; h < n; ++h) {
                s += p[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)] *
                     q[static_cast<std::size_t>(h)][static_cast<std::size_t>(j)];
            }
            require(s == (i == j ? nu : Rational(0)), "eigenvalue tables fail orthogonality");
        }
    }
    // Duality: p_i(j) k*_j = q_j(i) k_i, with k_i = nu m*_i, k*_i = nu m_i.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            require(p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * nu *
                            m[static_cast<std::size_t>(j)] ==
                        q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * nu *
                            mstar[static_cast<std::size_t>(i)],
                    "eigenvalue tables fail duality");
        }
    }
    return {std::move(p), std::move(q)};
}

std::pair<std::vector<SquareMatrix>, std::vector<SquareMatrix>> a_elements(
    const IdempotentSystem& phi, const Table& p_table, const Table& q_table) {
    const int n = phi.order();
    const Rational nu = scalar_nu(phi);
    std::vector<SquareMatrix> a, astar;
    for (int i = 0; i < n; ++i) {
        SquareMatrix ai(n), asi(n);
        for (int j = 0; j < n; ++j) {
            ai += p_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * phi.E(j);
            asi += q_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * phi.Estar(j);
        }
        a.push_back(std::move(ai));
        astar.push_back(std::move(asi));
    }
    const SquareMatrix id = SquareMatrix::identity(n);
    require(a[0] == id && astar[0] == id, "A_0 = I fails");
    SquareMatrix sum_a(n), sum_astar(n);
    for (int i = 0; i < n; ++i) {
        sum_a += a[static_cast<std::size_t>(i)];
        sum_astar += astar[static_cast<std::size_t>(i)];
        // Defining property.
        require(a[static_cast<std::size_t>(i)] * phi.Estar(0) * phi.E(0) ==
                    phi.Estar(i) * phi.E(0),
                "A_i E*_0 E_0 = E*_i E_0 fails");
        require(astar[static_cast<std::size_t>(i)] * phi.E(0) * phi.Estar(0) ==
                    phi.E(i) * phi.Estar(0),
                "A*_i E_0 E*_0 = E_i E*_0 fails");
    }
    require(sum_a == nu * phi.E(0), "sum A_i = nu E_0 fails");
    require(sum_astar == nu * phi.Estar(0), "sum A*_i = nu E*_0 fails");
    // Independent route: A_i = nu * rho*(E*_i), rho* being the dual's rho.
    const IdempotentSystem psi = phi.dual();
    for (int i = 0; i < n; ++i) {
        require(nu * rho(psi, phi.Estar(i)) == a[static_cast<std::size_t>(i)],
                "A_i disagrees with the rho-route construction");
        require(nu * rho(phi, phi.E(i)) == astar[static_cast<std::size_t>(i)],
                "A*_i disagrees with the rho-route construction");
    }
    return {std::move(a), std::move(astar)};
}

std::pair<Triple, Triple> structure_constants(const IdempotentSystem& phi,
                                              const ParameterSet& partial) {
    const int n = phi.order();
    const auto& p = partial.p_table;
    const auto& q = partial.q_table;
    // Coefficient extraction against the eigenvalue table: the vector
    // x = (p^h_{ij})_h solves sum_h p_h(r) x_h = p_i(r) p_j(r) for all r.
    std::vector<Vector> pmat(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
    std::vector<Vector> qmat(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        for (int h = 0; h < n; ++h) {
            pmat[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)] =
                p[static_cast<std::size_t>(h)][static_cast<std::size_t>(r)];
            qmat[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)] =
                q[static_cast<std::size_t>(h)][static_cast<std::size_t>(r)];
        }
    }
    Triple pn(static_cast<std::size_t>(n), Table(static_cast<std::size_t>(n),
                                                 Vector(static_cast<std::size_t>(n))));
    Triple qn = pn;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vector rhs_p(static_cast<std::size_t>(n)), rhs_q(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                rhs_p[static_cast<std::size_t>(r)] =
                    p[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                    p[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
                rhs_q[static_cast<std::size_t>(r)] =
                    q[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                    q[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
            }
            const auto xp = solve(pmat, rhs_p);
            const auto xq = solve(qmat, rhs_q);
            require(xp.has_value() && xq.has_value(),
                    "structure constants: eigenvalue table is singular");
            for (int h = 0; h < n; ++h) {
                pn[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (*xp)[static_cast<std::size_t>(h)];
                qn[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (*xq)[static_cast<std::size_t>(h)];
            }
        }
    }
    // Closed-form cross-check: p^h_{ij} = nu^-1 sum_r p_i(r) p_j(r) q_r(h).
    for (int h = 0; h < n; ++h) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Rational sp(0), sq(0);
                for (int r = 0; r < n; ++r) {
                    sp += p[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                          p[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] *
                          q[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)];
                    sq += q[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                          q[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] *
                          p[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)];
                }
                require(sp == partial.nu *
                                  pn[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        "p^h_{ij}: expansion and closed form disagree");
                require(sq == partial.nu *
                                  qn[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        "q^h_{ij}: expansion and closed form disagree");
            }
        }
    }
    // Defining identity as matrices: A_i A_j = sum_h p^h_{ij} A_h.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            SquareMatrix lhs_p = partial.a[static_cast<std::size_t>(i)] *
                                 partial.a[static_cast<std::size_t>(j)];
            SquareMatrix lhs_q = partial.astar[static_cast<std::size_t>(i)] *
                                 partial.astar[static_cast<std::size_t>(j)];
            for (int h = 0; h < n; ++h) {
                lhs_p -= pn[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                         partial.a[static_cast<std::size_t>(h)];
                lhs_q -= qn[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                         partial.astar[static_cast<std::size_t>(h)];
            }
            require(lhs_p.is_zero(), "A_i A_j = sum_h p^h_{ij} A_h fails");
            require(lhs_q.is_zero(), "A*_i A*_j = sum_h q^h_{ij} A*_h fails");
        }
    }
    return {std::move(pn), std::move(qn)};
}

ParameterSet compute_parameters(const IdempotentSystem& phi) {
    ParameterSet ps;
    ps.d = phi.d();
    std::tie(ps.m, ps.mstar) = scalar_m(phi);
    ps.nu = scalar_nu(phi);
    std::tie(ps.k, ps.kstar) = valencies(phi, ps.m, ps.mstar, ps.nu);
    std::tie(ps.p_table, ps.q_table) = eigenvalue_tables(phi, ps.m, ps.mstar, ps.nu);
    std::tie(ps.a, ps.astar) = a_elements(phi, ps.p_table, ps.q_table);
    std::tie(ps.p_num, ps.q_num) = structure_constants(phi, ps);
    return ps;
}

}  // namespace idemsys
