#pragma once

#include <string>

#include "json.hpp"

#include "idemsys/eigenmatrix.hpp"
#include "idemsys/identities.hpp"
#include "idemsys/leonard.hpp"

namespace idemsys {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("n" or "num/den"); matrices as row-major
// nested arrays of such strings.
Json to_json(const Rational& r);
Json to_json(const SquareMatrix& m);
Json to_json(const Vector& v);

Rational rational_from_json(const Json& j);
SquareMatrix matrix_from_json(const Json& j);

// System document: {"d": int, "E": [matrix...], "Estar": [matrix...]}.
Json system_to_json(const IdempotentSystem& phi);
struct RawSystem {
    int d;
    std::vector<SquareMatrix> e, estar;
};
RawSystem system_from_json(const Json& j);  // ParseError on schema violations

// Eigenmatrix document: {"nu": "8", "P": [[...], ...]}.
Json eigenmatrix_to_json(const EigenmatrixInput& input);
EigenmatrixInput eigenmatrix_from_json(const Json& j);

bool looks_like_eigenmatrix(const Json& j);

Json report_to_json(const ValidationReport& report);
Json parameters_to_json(const ParameterSet& params);
Json tables_to_json(const MatrixTables& tables, const SymmetrizingForm& form);
Json identities_to_json(const IdentityReport& report);
Json leonard_to_json(const LeonardSystem& ls);

Json parse_json_text(const std::string& text);  // ParseError on bad JSON

}  // namespace idemsys
