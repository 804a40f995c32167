// Command-line front end: validate, verify, report, leonard, generate.
// Exit codes: 0 success, 1 validation/verification failure, 2 parse or
// I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "idemsys/report.hpp"

namespace {

using idemsys::Json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitIo = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw idemsys::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw idemsys::ParseError("cannot open '" + path + "' for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string dump(const Json& j, bool pretty_json) { return j.dump(pretty_json ? 2 : -1); }

// A file may hold either a system document or an eigenmatrix document;
// both produce a validated system or a validation report.
idemsys::IdempotentSystem::Validated ingest(const Json& j) {
    if (idemsys::looks_like_eigenmatrix(j)) {
        return idemsys::from_eigenmatrix(idemsys::eigenmatrix_from_json(j));
    }
    idemsys::RawSystem raw = idemsys::system_from_json(j);
    return idemsys::IdempotentSystem::validate(std::move(raw.e), std::move(raw.estar));
}

int cmd_validate(const std::string& file, bool pretty) {
    const auto v = ingest(idemsys::parse_json_text(read_input(file)));
    const Json rj = idemsys::report_to_json(v.report);
    if (pretty) {
        if (v.report.ok) {
            std::cout << "valid\n";
        } else {
            std::cout << "invalid:\n";
            for (const auto& f : v.report.failures) {
                std::cout << "  " << f.id() << " (" << f.detail << ")\n";
            }
        }
    } else {
        std::cout << dump(rj, true) << "\n";
    }
    return v.report.ok ? kExitOk : kExitFail;
}

int cmd_verify(const std::string& file, bool pretty) {
    const auto v = ingest(idemsys::parse_json_text(read_input(file)));
    Json out = Json::object();
    if (!v.system) {
        out["ok"] = false;
        out["failures"] = idemsys::report_to_json(v.report)["failures"];
        if (pretty) {
            std::cout << "invalid system:\n";
            for (const auto& f : v.report.failures) std::cout << "  FAIL " << f.id() << "\n";
        } else {
            std::cout << dump(out, true) << "\n";
        }
        return kExitFail;
    }
    try {
        const idemsys::SymmetrizingForm form = idemsys::symmetrizer(*v.system);
        const idemsys::ParameterSet params = idemsys::compute_parameters(*v.system);
        const idemsys::MatrixTables tables = idemsys::build_tables(params);
        const idemsys::IdentityReport report =
            idemsys::verify_identities(*v.system, form, params, tables);
        out["ok"] = report.all_pass();
        out["identities"] = idemsys::identities_to_json(report);
        if (pretty) {
            for (const auto& c : report.checks) {
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
            }
        } else {
            std::cout << dump(out, true) << "\n";
        }
        return report.all_pass() ? kExitOk : kExitFail;
    } catch (const idemsys::Error& e) {
        out["ok"] = false;
        out["error"] = std::string(e.what());
        std::cout << dump(out, true) << "\n";
        return kExitFail;
    }
}

int cmd_report(const std::string& file, bool have_hamming, int n, int q, const std::string& out_path,
               bool pretty) {
    idemsys::IdempotentSystem::Validated v = [&] {
        if (have_hamming) return idemsys::from_eigenmatrix(idemsys::hamming_eigenmatrix(n, q));
        return ingest(idemsys::parse_json_text(read_input(file)));
    }();
    if (!v.system) {
        write_output(out_path, dump(idemsys::report_to_json(v.report), true));
        return kExitFail;
    }
    const idemsys::ReportResult result = idemsys::report(*v.system);
    write_output(out_path, pretty ? idemsys::render_pretty(result.document)
                                  : dump(result.document, true));
    return result.ok ? kExitOk : kExitFail;
}

int cmd_leonard(const std::string& file, const std::string& out_path, bool pretty) {
    const auto v = ingest(idemsys::parse_json_text(read_input(file)));
    if (!v.system) {
        write_output(out_path, dump(idemsys::report_to_json(v.report), true));
        return kExitFail;
    }
    try {
        const idemsys::SymmetrizingForm form = idemsys::symmetrizer(*v.system);
        const idemsys::ParameterSet params = idemsys::compute_parameters(*v.system);
        const idemsys::MatrixTables tables = idemsys::build_tables(params);
        const idemsys::BasisBundle bundle = idemsys::make_bundle(*v.system, form, params);
        const idemsys::LeonardSystem ls =
            idemsys::to_leonard_system(*v.system, params, tables, bundle);
        const Json j = idemsys::leonard_to_json(ls);
        write_output(out_path, pretty ? idemsys::render_pretty(Json{{"leonard", j}}) : dump(j, true));
        return kExitOk;
    } catch (const idemsys::Error& e) {
        Json out = Json::object();
        out["present"] = false;
        out["error"] = std::string(e.what());
        write_output(out_path, dump(out, true));
        return kExitFail;
    }
}

int cmd_generate(int n, int q, const std::string& out_path, bool as_eigenmatrix) {
    const idemsys::EigenmatrixInput input = idemsys::hamming_eigenmatrix(n, q);
    if (as_eigenmatrix) {
        write_output(out_path, dump(idemsys::eigenmatrix_to_json(input), true));
        return kExitOk;
    }
    const auto v = idemsys::from_eigenmatrix(input);
    if (!v.system) {
        write_output(out_path, dump(idemsys::report_to_json(v.report), true));
        return kExitFail;
    }
    write_output(out_path, dump(idemsys::system_to_json(*v.system), true));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analyzer for symmetric idempotent systems"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    bool json = true;
    app.add_flag("--pretty", pretty, "human-readable tables");
    app.add_flag("--json", json, "machine output (default)");

    std::string file, out_path;
    std::vector<int> hamming;

    auto* validate = app.add_subcommand("validate", "check the axioms of a system file");
    validate->add_option("file", file, "system or eigenmatrix JSON ('-' for stdin)");

    auto* verify = app.add_subcommand("verify", "run the identity suite, exit 0 iff all pass");
    verify->add_option("file", file, "system or eigenmatrix JSON ('-' for stdin)");

    auto* rep = app.add_subcommand("report", "full analysis report");
    rep->add_option("file", file, "system or eigenmatrix JSON ('-' for stdin)");
    rep->add_option("--hamming", hamming, "generate H(n,q) instead of reading a file")
        ->expected(2);
    rep->add_option("-o,--output", out_path, "output path (default stdout)");

    auto* leo = app.add_subcommand("leonard", "extract and certify the Leonard system");
    leo->add_option("file", file, "system or eigenmatrix JSON ('-' for stdin)");
    leo->add_option("-o,--output", out_path, "output path (default stdout)");

    auto* gen = app.add_subcommand("generate", "emit a built-in system");
    gen->add_option("--hamming", hamming, "Hamming scheme parameters n q")->expected(2);
    gen->add_option("-o,--output", out_path, "output path (default stdout)");
    bool as_eigenmatrix = false;
    gen->add_flag("--eigenmatrix", as_eigenmatrix, "emit the eigenmatrix document instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate)) return cmd_validate(file, pretty);
        if (app.got_subcommand(verify)) return cmd_verify(file, pretty);
        if (app.got_subcommand(rep)) {
            if (hamming.empty() && file.empty()) {
                std::cerr << "report: need a file or --hamming n q\n";
                return kExitIo;
            }
            return cmd_report(file, !hamming.empty(), hamming.empty() ? 0 : hamming[0],
                              hamming.empty() ? 0 : hamming[1], out_path, pretty);
        }
        if (app.got_subcommand(leo)) return cmd_leonard(file, out_path, pretty);
        if (app.got_subcommand(gen)) {
            if (hamming.empty()) {
                std::cerr << "generate: need --hamming n q\n";
                return kExitIo;
            }
            return cmd_generate(hamming[0], hamming[1], out_path, as_eigenmatrix);
        }
    } catch (const idemsys::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const idemsys::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitIo;
}
