#include "idemsys/report.hpp"

#include <sstream>

namespace idemsys {

ReportResult report(const IdempotentSystem& phi) {
    ReportResult result;
    Json& doc = result.document;
    doc["system"] = system_to_json(phi);

    std::optional<SymmetrizingForm> form;
    try {
        form.emplace(symmetrizer(phi));
    } catch (const Error& e) {
        doc["symmetric"] = false;
        doc["error"] = std::string(e.what());
        return result;
    }
    doc["symmetric"] = true;

    try {
        const ParameterSet params = compute_parameters(phi);
        const MatrixTables tables = build_tables(params);
        const IdentityReport identities = verify_identities(phi, *form, params, tables);
        doc["parameters"] = parameters_to_json(params);
        doc["tables"] = tables_to_json(tables, *form);
        doc["identities"] = identities_to_json(identities);

        const PatternVerdict pp = is_p_polynomial(params);
        const PatternVerdict qq = is_q_polynomial(phi, params);
        doc["pPolynomial"] = pp.holds;
        doc["qPolynomial"] = qq.holds;

        Json leonard = Json::object();
        if (phi.d() == 0) {
            leonard["present"] = false;
            leonard["note"] = "d=0";
        } else if (pp.holds && qq.holds) {
            const BasisBundle bundle = make_bundle(phi, *form, params);
            leonard = leonard_to_json(to_leonard_system(phi, params, tables, bundle));
        } else {
            leonard["present"] = false;
            leonard["note"] = "not P- and Q-polynomial";
            const auto& witness = pp.holds ? qq.witness : pp.witness;
            if (witness) {
                leonard["witness"] = Json::array({(*witness)[0], (*witness)[1], (*witness)[2]});
            }
        }
        doc["leonard"] = std::move(leonard);
        result.ok = identities.all_pass();
    } catch (const Error& e) {
        doc["error"] = std::string(e.what());
        result.ok = false;
    }
    return result;
}

namespace {

std::string render_matrix(const Json& rows, const std::string& indent) {
    // Column-aligned plain text.
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::size_t w = row[j].get<std::string>().size();
            if (j >= widths.size()) widths.push_back(w);
            else if (w > widths[j]) widths[j] = w;
        }
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        os << indent << "[";
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::string s = row[j].get<std::string>();
            os << (j ? " " : "") << std::string(widths[j] - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    return os.str();
}

std::string render_vector(const Json& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].get<std::string>();
    }
    return out + ")";
}

}  // namespace

std::string render_pretty(const Json& doc) {
    std::ostringstream os;
    if (doc.contains("system")) {
        os << "system: d = " << doc["system"]["d"].get<int>() << "\n";
    }
    if (doc.contains("symmetric")) {
        os << "symmetric: " << (doc["symmetric"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (doc.contains("error")) {
        os << "error: " << doc["error"].get<std::string>() << "\n";
        return os.str();
    }
    if (doc.contains("parameters")) {
        const Json& p = doc["parameters"];
        os << "nu = " << p["nu"].get<std::string>() << "\n";
        os << "k  = " << render_vector(p["k"]) << "\n";
        os << "k* = " << render_vector(p["kstar"]) << "\n";
        os << "m  = " << render_vector(p["m"]) << "\n";
        os << "m* = " << render_vector(p["mstar"]) << "\n";
    }
    if (doc.contains("tables")) {
        os << "P =\n" << render_matrix(doc["tables"]["P"], "  ");
        os << "Q =\n" << render_matrix(doc["tables"]["Q"], "  ");
        if (doc["tables"].contains("B") && doc["tables"]["B"].size() > 1) {
            os << "B_1 =\n" << render_matrix(doc["tables"]["B"][1], "  ");
        }
    }
    if (doc.contains("identities")) {
        int passed = 0, failed = 0;
        for (const auto& c : doc["identities"]) {
            (c["pass"].get<bool>() ? passed : failed)++;
        }
        os << "identities: " << passed << " passed, " << failed << " failed\n";
        for (const auto& c : doc["identities"]) {
            if (!c["pass"].get<bool>()) {
                os << "  FAIL " << c["id"].get<std::string>() << " (residual "
                   << c["residual"].get<std::string>() << ")\n";
            }
        }
    }
    if (doc.contains("pPolynomial")) {
        os << "P-polynomial: " << (doc["pPolynomial"].get<bool>() ? "yes" : "no") << "\n";
        os << "Q-polynomial: " << (doc["qPolynomial"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (doc.contains("leonard")) {
        const Json& l = doc["leonard"];
        if (l.contains("present") && l["present"].get<bool>()) {
            os << "Leonard system: eigenvalues " << render_vector(l["eigenvalues"]) << "\n";
            os << "  c = " << render_vector(l["tridiagonal"]["c"]) << "\n";
            os << "  a = " << render_vector(l["tridiagonal"]["a"]) << "\n";
            os << "  b = " << render_vector(l["tridiagonal"]["b"]) << "\n";
        } else {
            os << "Leonard system: absent";
            if (l.contains("note")) os << " (" << l["note"].get<std::string>() << ")";
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace idemsys
