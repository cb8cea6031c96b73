// Command-line surface over the shared-library C API. Human-readable output
// is rendered from the same JSON reports that --json prints verbatim.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrcoh/arrcoh.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string file;
    std::string pivot;
    bool emit_json = false;
    bool family = false;
    int max_size = 0;
};

int exit_code_for(arrcoh_status status) {
    switch (status) {
        case ARRCOH_OK:
            return kExitOk;
        case ARRCOH_ERROR_CHECK:
            return kExitCheckFailure;
        default:
            return kExitInputError;
    }
}

class Arrangement {
public:
    Arrangement(const std::string& path, bool allow_family) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        const arrcoh_status status =
            arrcoh_arrangement_parse(text.str().c_str(), allow_family ? 1 : 0, &handle_);
        if (status != ARRCOH_OK)
            throw std::runtime_error(arrcoh_last_error());
    }
    ~Arrangement() { arrcoh_arrangement_free(handle_); }
    Arrangement(const Arrangement&) = delete;
    Arrangement& operator=(const Arrangement&) = delete;

    const arrcoh_arrangement* get() const { return handle_; }

private:
    arrcoh_arrangement* handle_ = nullptr;
};

json take_report(arrcoh_status status, char* text) {
    if (text == nullptr) throw std::runtime_error(arrcoh_last_error());
    const std::string body(text);
    arrcoh_string_free(text);
    (void)status;
    return json::parse(body);
}

std::string poly_display(const json& poly) {
    return poly.at("display").get<std::string>();
}

void print_poincare(const json& report) {
    std::cout << "Poin(M(A), t) = " << poly_display(report.at("poincare")) << "\n";
    std::cout << "chi = " << report.at("euler").get<long long>() << "\n";
    std::cout << "betti:\n";
    for (const auto& term : report.at("betti"))
        std::cout << "  b_" << term.at(0).get<int>() << " = " << term.at(1).get<long long>()
                  << "\n";
}

void print_triple(const json& report) {
    std::cout << "pivot: " << report.at("pivot").get<std::string>()
              << "  (deg = " << report.at("pivot_degree").get<int>() << ")\n";
    std::cout << "Poin(M(A), t)   = " << poly_display(report.at("poincare").at("full")) << "\n";
    std::cout << "Poin(M(A'), t)  = " << poly_display(report.at("poincare").at("deleted"))
              << "\n";
    std::cout << "Poin(M(A''), t) = " << poly_display(report.at("poincare").at("restricted"))
              << "\n";
    std::cout << "separator: " << (report.at("separator").get<bool>() ? "yes" : "no") << "\n";
    std::cout << "PP: " << (report.at("pp_holds").get<bool>() ? "yes" : "no") << "\n";
    if (!report.at("pp_holds").get<bool>())
        std::cout << "deficit: " << poly_display(report.at("deficit")) << "\n";
    std::cout << "LES: " << (report.at("les").at("exact").get<bool>() ? "exact" : "NOT EXACT")
              << "\n";
    const auto& ranks = report.at("les").at("connecting_ranks");
    if (ranks.empty()) {
        std::cout << "connecting maps: all zero\n";
    } else {
        std::cout << "connecting ranks (restricted degree -> rank):";
        for (const auto& r : ranks)
            std::cout << " " << r.at(0).get<int>() << "->" << r.at(1).get<long long>();
        std::cout << "\n";
    }
}

void print_lattice(const json& report) {
    const auto& elements = report.at("elements");
    std::cout << elements.size() << " elements\n";
    for (const auto& e : elements) {
        std::cout << "  [" << e.at("index").get<int>() << "] codim " << e.at("codim").get<int>()
                  << ", rank " << e.at("rank").get<int>();
        const std::string name = e.at("name").get<std::string>();
        if (!name.empty()) std::cout << "  " << name;
        std::cout << "\n";
    }
    std::cout << "covers:";
    for (const auto& c : report.at("covers"))
        std::cout << " " << c.at(0).get<int>() << "<" << c.at(1).get<int>();
    std::cout << "\n";
    std::cout << "geometric: " << (report.at("geometric").get<bool>() ? "yes" : "no") << "\n";
    std::cout << "separators:";
    for (const auto& s : report.at("separators")) std::cout << " " << s.get<std::string>();
    std::cout << "\n";
}

void print_verify(const json& report) {
    for (const auto& check : report.at("checks")) {
        std::cout << (check.at("passed").get<bool>() ? "PASS " : "FAIL ")
                  << check.at("name").get<std::string>();
        if (check.contains("detail"))
            std::cout << "  (" << check.at("detail").get<std::string>() << ")";
        std::cout << "\n";
    }
    std::cout << (report.at("all_passed").get<bool>() ? "all checks passed"
                                                      : "CHECK FAILURES PRESENT")
              << "\n";
}

void print_oracle(const json& report) {
    std::cout << "model:  " << poly_display(report.at("model")) << "\n";
    std::cout << "oracle: " << poly_display(report.at("oracle")) << "\n";
    std::cout << (report.at("match").get<bool>() ? "MATCH" : "MISMATCH") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational cohomology of complex subspace arrangement complements"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_pivot) {
        cmd->add_option("file", opt.file, "arrangement JSON file")->required();
        cmd->add_flag("--json", opt.emit_json, "emit the machine-readable report");
        cmd->add_flag("--family", opt.family,
                      "accept general families (skip the no-containment validation)");
        cmd->add_option("--max-size", opt.max_size, "complex size cap (default 16)");
        if (with_pivot)
            cmd->add_option("--pivot", opt.pivot, "pivot subspace name")->required();
    };

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare polynomial and Betti table");
    add_common(poincare, false);
    CLI::App* triple =
        app.add_subcommand("triple", "deletion-restriction triple report at a pivot");
    add_common(triple, true);
    CLI::App* lattice = app.add_subcommand("lattice", "intersection lattice");
    add_common(lattice, false);
    CLI::App* verify = app.add_subcommand("verify", "run every verification suite");
    add_common(verify, false);
    CLI::App* oracle = app.add_subcommand("oracle-compare",
                                          "compare the model against the lattice-homology oracle");
    add_common(oracle, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        const Arrangement arr(opt.file, opt.family);
        arrcoh_status status = ARRCOH_OK;
        char* text = nullptr;
        json report;

        if (app.got_subcommand(poincare)) {
            status = arrcoh_poincare_report(arr.get(), opt.max_size, &text);
            report = take_report(status, text);
            if (opt.emit_json) std::cout << report.dump(2) << "\n";
            else print_poincare(report);
        } else if (app.got_subcommand(triple)) {
            status = arrcoh_triple_report(arr.get(), opt.pivot.c_str(), opt.max_size, &text);
            report = take_report(status, text);
            if (opt.emit_json) std::cout << report.dump(2) << "\n";
            else print_triple(report);
        } else if (app.got_subcommand(lattice)) {
            status = arrcoh_lattice_report(arr.get(), &text);
            report = take_report(status, text);
            if (opt.emit_json) std::cout << report.dump(2) << "\n";
            else print_lattice(report);
        } else if (app.got_subcommand(verify)) {
            status = arrcoh_verify_report(arr.get(), 0, opt.max_size, &text);
            report = take_report(status, text);
            if (opt.emit_json) std::cout << report.dump(2) << "\n";
            else print_verify(report);
        } else if (app.got_subcommand(oracle)) {
            status = arrcoh_oracle_compare_report(arr.get(), 0, opt.max_size, &text);
            report = take_report(status, text);
            if (opt.emit_json) std::cout << report.dump(2) << "\n";
            else print_oracle(report);
        }
        return exit_code_for(status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
