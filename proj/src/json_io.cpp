#include "idemsys/json_io.hpp"

namespace idemsys {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const SquareMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.order(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

SquareMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    const int n = static_cast<int>(j.size());
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ParseError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) +
                             " entries");
        }
        for (int c = 0; c < n; ++c) m.at(i, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

Json system_to_json(const IdempotentSystem& phi) {
    Json out = Json::object();
    out["d"] = phi.d();
    Json e = Json::array(), estar = Json::array();
    for (int i = 0; i <= phi.d(); ++i) {
        e.push_back(to_json(phi.E(i)));
        estar.push_back(to_json(phi.Estar(i)));
    }
    out["E"] = std::move(e);
    out["Estar"] = std::move(estar);
    return out;
}

RawSystem system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("E") || !j.contains("Estar")) {
        throw ParseError("system document must have keys d, E, Estar");
    }
    if (!j["d"].is_number_integer()) throw ParseError("d must be an integer");
    RawSystem raw;
    raw.d = j["d"].get<int>();
    if (raw.d < 0) throw ParseError("d must be nonnegative");
    for (const char* key : {"E", "Estar"}) {
        const Json& list = j[key];
        if (!list.is_array() || static_cast<int>(list.size()) != raw.d + 1) {
            throw ParseError(std::string(key) + " must list d+1 matrices");
        }
        for (const auto& mj : list) {
            SquareMatrix m = matrix_from_json(mj);
            if (m.order() != raw.d + 1) {
                throw ParseError(std::string(key) + " matrices must have order d+1");
            }
            (key[1] == 's' ? raw.estar : raw.e).push_back(std::move(m));
        }
    }
    return raw;
}

Json eigenmatrix_to_json(const EigenmatrixInput& input) {
    Json out = Json::object();
    out["nu"] = input.nu.str();
    out["P"] = to_json(input.p);
    return out;
}

EigenmatrixInput eigenmatrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("nu") || !j.contains("P")) {
        throw ParseError("eigenmatrix document must have keys nu, P");
    }
    return {rational_from_json(j["nu"]), matrix_from_json(j["P"])};
}

bool looks_like_eigenmatrix(const Json& j) {
    return j.is_object() && j.contains("P") && j.contains("nu") && !j.contains("E");
}

Json report_to_json(const ValidationReport& report) {
    Json out = Json::object();
    out["ok"] = report.ok;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json fj = Json::object();
        fj["axiom"] = f.id();
        fj["family"] = f.family;
        fj["indices"] = f.indices;
        fj["detail"] = f.detail;
        failures.push_back(std::move(fj));
    }
    out["failures"] = std::move(failures);
    return out;
}

Json parameters_to_json(const ParameterSet& params) {
    Json out = Json::object();
    out["d"] = params.d;
    out["nu"] = params.nu.str();
    out["m"] = to_json(params.m);
    out["mstar"] = to_json(params.mstar);
    out["k"] = to_json(params.k);
    out["kstar"] = to_json(params.kstar);
    const auto table = [](const Table& t) {
        Json rows = Json::array();
        for (const auto& row : t) rows.push_back(to_json(row));
        return rows;
    };
    out["pTable"] = table(params.p_table);
    out["qTable"] = table(params.q_table);
    const auto triple = [&table](const Triple& t) {
        Json slabs = Json::array();
        for (const auto& slab : t) slabs.push_back(table(slab));
        return slabs;
    };
    out["pNum"] = triple(params.p_num);
    out["qNum"] = triple(params.q_num);
    return out;
}

Json tables_to_json(const MatrixTables& tables, const SymmetrizingForm& form) {
    Json out = Json::object();
    out["K"] = to_json(tables.k);
    out["Kstar"] = to_json(tables.kstar);
    out["P"] = to_json(tables.p);
    out["Q"] = to_json(tables.q);
    out["U"] = to_json(tables.u);
    out["Ustar"] = to_json(tables.ustar);
    const auto list = [](const std::vector<SquareMatrix>& ms) {
        Json arr = Json::array();
        for (const auto& m : ms) arr.push_back(to_json(m));
        return arr;
    };
    out["B"] = list(tables.b);
    out["Bstar"] = list(tables.bstar);
    out["H"] = list(tables.h);
    out["Hstar"] = list(tables.hstar);
    out["gram"] = to_json(form.gram());
    return out;
}

Json identities_to_json(const IdentityReport& report) {
    Json out = Json::array();
    for (const auto& c : report.checks) {
        Json cj = Json::object();
        cj["id"] = c.id;
        cj["pass"] = c.pass;
        cj["residual"] = c.residual;
        out.push_back(std::move(cj));
    }
    return out;
}

Json leonard_to_json(const LeonardSystem& ls) {
    Json out = Json::object();
    out["present"] = true;
    out["eigenvalues"] = to_json(ls.eigenvalues);
    out["dualEigenvalues"] = to_json(ls.dual_eigenvalues);
    Json tri = Json::object();
    tri["c"] = to_json(ls.tridiagonal.c);
    tri["a"] = to_json(ls.tridiagonal.a);
    tri["b"] = to_json(ls.tridiagonal.b);
    out["tridiagonal"] = std::move(tri);
    Json certs = Json::object();
    certs["standardA"] = to_json(ls.cert_std_a);
    certs["standardAstar"] = to_json(ls.cert_std_astar);
    certs["starStandardA"] = to_json(ls.cert_star_a);
    certs["starStandardAstar"] = to_json(ls.cert_star_astar);
    out["certificates"] = std::move(certs);
    return out;
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return j;
}

}  // namespace idemsys
