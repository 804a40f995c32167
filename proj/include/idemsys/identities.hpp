#pragma once

#include "idemsys/tables.hpp"

namespace idemsys {

struct IdentityCheck {
    std::string id;        // stable catalog identifier, e.g. "lemma-9.2-i"
    bool pass = false;
    std::string residual;  // "0" exactly when pass; see residual_norm()
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    std::vector<std::string> failing_ids() const {
        std::vector<std::string> out;
        for (const auto& c : checks) {
            if (!c.pass) out.push_back(c.id);
        }
        return out;
    }
};

// Evaluates the fixed identity catalog, one entry per lemma part, each
// quantified over all free indices. Exact arithmetic: pass iff the
// residual is exactly zero. Failures are data, never exceptions.
IdentityReport verify_identities(const IdempotentSystem& phi, const SymmetrizingForm& form,
                                 const ParameterSet& params, const MatrixTables& tables);

}  // namespace idemsys
