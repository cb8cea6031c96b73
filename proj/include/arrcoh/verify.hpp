#ifndef ARRCOH_VERIFY_HPP
#define ARRCOH_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "arrcoh/io.hpp"
#include "arrcoh/oracle.hpp"

namespace arrcoh {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed = true;

    void record(std::string name, bool passed, std::string detail = "");
};

/// Runs the verification suites on one input: d.d = 0 and degree raising,
/// Euler characteristic, chain-map identities for every pivot (j, projection,
/// phi, phi-bar; k and theta where their hypotheses hold), LES exactness and
/// quasi-isomorphism checks for every pivot, and model-vs-oracle agreement.
VerifyReport run_verify(const ParsedInput& input, std::size_t oracle_gate = kDefaultOracleGate,
                        std::size_t max_size = kDefaultComplexCap);

nlohmann::json verify_report_json(const VerifyReport& report, const SubspaceFamily& family);

} // namespace arrcoh

#endif
