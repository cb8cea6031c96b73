#ifndef ARRCOH_IO_HPP
#define ARRCOH_IO_HPP

#include <string>

#include <json.hpp>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/cohomology.hpp"

namespace arrcoh {

inline constexpr int kReportSchemaVersion = 1;

/// Parsed arrangement file. `is_arrangement` is false only when containment
/// pairs were admitted via allow_family.
struct ParsedInput {
    SubspaceFamily family;
    bool is_arrangement = true;

    Arrangement arrangement() const { return Arrangement(family); }
};

/// Accepts {"ambient_dim": l, "subspaces": [{"name", "equations" | "span"}]}.
/// Rational entries are integers or "p/q" strings; floats are rejected.
/// Containment pairs raise InputError unless allow_family is set.
ParsedInput parse_input(const std::string& json_text, bool allow_family = false);

/// Canonical echo of a family (equations in RREF, entries as strings); feeding
/// it back through parse_input reproduces the same family.
nlohmann::json family_to_json(const SubspaceFamily& family);

nlohmann::json poly_to_json(const PoincarePoly& poly);

/// --json report bodies for the CLI surface.
nlohmann::json poincare_report(const SubspaceFamily& family, std::size_t max_size);
nlohmann::json lattice_report(const ParsedInput& input);
nlohmann::json triple_report_json(const Arrangement& arr, const std::string& pivot_name,
                                  std::size_t max_size);
nlohmann::json oracle_compare_report(const ParsedInput& input, std::size_t gate,
                                     std::size_t max_size, bool* match);

} // namespace arrcoh

#endif
