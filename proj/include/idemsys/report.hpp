#pragma once

#include "idemsys/json_io.hpp"

namespace idemsys {

struct ReportOptions {
    bool pretty = false;  // human tables instead of JSON
};

// Full pipeline over a validated system: symmetrizer, parameters,
// tables, identity suite, polynomial verdicts, Leonard extraction.
// Failures along the way (NotSymmetric etc.) come back as structured
// fields with ok = false rather than exceptions.
struct ReportResult {
    Json document;
    bool ok = false;
};

ReportResult report(const IdempotentSystem& phi);

// Render the report document as human tables.
std::string render_pretty(const Json& document);

}  // namespace idemsys
