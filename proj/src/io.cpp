#include "arrcoh/io.hpp"

#include <set>

#include "arrcoh/drmaps.hpp"
#include "arrcoh/errors.hpp"
#include "arrcoh/oracle.hpp"

namespace arrcoh {

namespace {

using nlohmann::json;

Rational entry_to_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_float())
        throw InputError(where + ": floating-point entries are not accepted; use \"p/q\" strings");
    throw InputError(where + ": expected an integer or a \"p/q\" string");
}

QMatrix rows_from_json(const json& rows, std::size_t ambient_dim, const std::string& where) {
    if (!rows.is_array()) throw InputError(where + ": expected an array of vectors");
    std::vector<std::vector<Rational>> parsed;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != ambient_dim)
            throw InputError(where + ", row " + std::to_string(r) + ": expected a vector of length " +
                             std::to_string(ambient_dim));
        std::vector<Rational> out;
        out.reserve(ambient_dim);
        for (std::size_t c = 0; c < ambient_dim; ++c)
            out.push_back(entry_to_rational(row[c], where + ", row " + std::to_string(r)));
        parsed.push_back(std::move(out));
    }
    return QMatrix::from_rows(std::move(parsed));
}

} // namespace

namespace {

ParsedInput parse_input_checked(const std::string& json_text, bool allow_family);

} // namespace

ParsedInput parse_input(const std::string& json_text, bool allow_family) {
    try {
        return parse_input_checked(json_text, allow_family);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid arrangement file: ") + e.what());
    }
}

namespace {

ParsedInput parse_input_checked(const std::string& json_text, bool allow_family) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("top level must be a JSON object");
    if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer())
        throw InputError("missing integer field \"ambient_dim\"");
    const long long l = doc["ambient_dim"].get<long long>();
    if (l < 1 || l > 30) throw InputError("ambient_dim must be between 1 and 30");
    if (!doc.contains("subspaces") || !doc["subspaces"].is_array())
        throw InputError("missing array field \"subspaces\"");

    SubspaceFamily family(static_cast<std::size_t>(l));
    std::set<std::string> names;
    for (std::size_t i = 0; i < doc["subspaces"].size(); ++i) {
        const json& entry = doc["subspaces"][i];
        const std::string where = "subspace " + std::to_string(i);
        if (!entry.is_object()) throw InputError(where + ": expected an object");
        std::string name = entry.contains("name") ? entry["name"].get<std::string>()
                                                  : "s" + std::to_string(i);
        if (!names.insert(name).second)
            throw InputError(where + ": duplicate subspace name '" + name + "'");

        const bool has_equations = entry.contains("equations");
        const bool has_span = entry.contains("span");
        if (has_equations == has_span)
            throw InputError(where + ": provide exactly one of \"equations\" or \"span\"");

        QMatrix equations(0, 0);
        if (has_equations) {
            equations = rows_from_json(entry["equations"], static_cast<std::size_t>(l),
                                       where + " equations");
        } else {
            // a subspace given by spanning vectors; its equations are the
            // annihilator of the span
            const QMatrix span =
                rows_from_json(entry["span"], static_cast<std::size_t>(l), where + " span");
            equations = nullspace(span);
        }
        Subspace s = Subspace::from_equations(equations, static_cast<std::size_t>(l), name);
        try {
            family.add(std::move(s));
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }

    ParsedInput out{std::move(family), true};
    std::size_t big = 0, small = 0;
    if (out.family.has_containment_pair(&big, &small)) {
        if (!allow_family)
            throw InputError("not an arrangement: '" + out.family.member(big).name() +
                             "' contains '" + out.family.member(small).name() +
                             "' (pass --family to accept general families)");
        out.is_arrangement = false;
    }
    return out;
}

} // namespace

nlohmann::json family_to_json(const SubspaceFamily& family) {
    json subs = json::array();
    for (const Subspace& s : family.members()) {
        json eqs = json::array();
        for (std::size_t r = 0; r < s.equations().rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < s.equations().cols(); ++c)
                row.push_back(to_string(s.equations().at(r, c)));
            eqs.push_back(std::move(row));
        }
        subs.push_back(json{{"name", s.name()}, {"equations", std::move(eqs)}});
    }
    return json{{"ambient_dim", family.ambient_dim()}, {"subspaces", std::move(subs)}};
}

nlohmann::json poly_to_json(const PoincarePoly& poly) {
    json terms = json::array();
    for (const auto& [q, c] : poly)
        if (c != 0) terms.push_back(json::array({q, c}));
    return json{{"terms", std::move(terms)}, {"display", to_string(poly)}};
}

nlohmann::json poincare_report(const SubspaceFamily& family, std::size_t max_size) {
    const PoincarePoly poly = poincare(family, max_size);
    json betti = json::array();
    for (const auto& [q, c] : poly) betti.push_back(json::array({q, c}));
    return json{{"schema_version", kReportSchemaVersion},
                {"command", "poincare"},
                {"arrangement", family_to_json(family)},
                {"poincare", poly_to_json(poly)},
                {"betti", std::move(betti)},
                {"euler", euler(poly)}};
}

nlohmann::json lattice_report(const ParsedInput& input) {
    const IntersectionLattice lat = build_lattice(input.family);
    json elements = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const Subspace& s = lat.element(i);
        json atoms_below = json::array();
        for (const std::size_t a : lat.atoms())
            if (lat.leq(a, i)) atoms_below.push_back(a);
        elements.push_back(json{{"index", i},
                                {"name", s.name()},
                                {"codim", s.codim() - input.family.ambient_offset()},
                                {"rank", lat.ranks()[i]},
                                {"atoms_below", std::move(atoms_below)}});
    }
    json covers = json::array();
    for (const auto& [a, b] : lat.covers()) covers.push_back(json::array({a, b}));

    json separators = json::array();
    if (input.is_arrangement && input.family.size() >= 2) {
        const Arrangement arr = input.arrangement();
        for (std::size_t i = 0; i < arr.size(); ++i)
            if (is_separator(arr, i)) separators.push_back(arr.member(i).name());
    }

    return json{{"schema_version", kReportSchemaVersion},
                {"command", "lattice"},
                {"arrangement", family_to_json(input.family)},
                {"elements", std::move(elements)},
                {"covers", std::move(covers)},
                {"graded", lat.is_graded()},
                {"geometric", is_geometric(lat)},
                {"separators", std::move(separators)}};
}

nlohmann::json triple_report_json(const Arrangement& arr, const std::string& pivot_name,
                                  std::size_t max_size) {
    const std::size_t pivot = arr.family().find_name(pivot_name);
    if (pivot == SubspaceFamily::npos)
        throw InputError("unknown pivot '" + pivot_name + "'");
    if (arr.size() < 2) throw InputError("triple needs an arrangement with at least two members");

    const TripleReport r = les_report(arr, pivot, max_size);
    json classes = json::array();
    for (const auto& block : r.classes) {
        json names = json::array();
        for (const std::size_t i : block) names.push_back(arr.member(i).name());
        classes.push_back(std::move(names));
    }
    json order = json::array();
    for (const std::size_t i : r.permutation) order.push_back(arr.member(i).name());
    json ranks = json::array();
    for (const auto& [q, n] : r.connecting_ranks) ranks.push_back(json::array({q, n}));

    return json{{"schema_version", kReportSchemaVersion},
                {"command", "triple"},
                {"arrangement", family_to_json(arr.family())},
                {"pivot", r.pivot_name},
                {"pivot_degree", r.pivot_degree},
                {"order", std::move(order)},
                {"classes", std::move(classes)},
                {"poincare",
                 json{{"full", poly_to_json(r.poincare_full)},
                      {"deleted", poly_to_json(r.poincare_deleted)},
                      {"restricted", poly_to_json(r.poincare_restricted)}}},
                {"separator", r.separator},
                {"pp_holds", r.pp_holds},
                {"deficit", poly_to_json(r.deficit)},
                {"les", json{{"exact", r.les_exact}, {"connecting_ranks", std::move(ranks)}}},
                {"phi_bar_quasi_iso", r.phi_bar_quasi_iso},
                {"restricted_inclusion_quasi_iso", r.tilde_inclusion_quasi_iso}};
}

nlohmann::json oracle_compare_report(const ParsedInput& input, std::size_t gate,
                                     std::size_t max_size, bool* match) {
    const PoincarePoly model = poincare(input.family, max_size);
    const PoincarePoly oracle =
        input.family.empty() ? PoincarePoly{{0, 1}} : gm_poincare(input.family, gate);
    const bool equal = poly_is_zero(poly_sub(model, oracle));
    if (match) *match = equal;
    return json{{"schema_version", kReportSchemaVersion},
                {"command", "oracle-compare"},
                {"arrangement", family_to_json(input.family)},
                {"model", poly_to_json(model)},
                {"oracle", poly_to_json(oracle)},
                {"match", equal}};
}

} // namespace arrcoh
