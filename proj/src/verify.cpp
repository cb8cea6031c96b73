#include "arrcoh/verify.hpp"

#include "arrcoh/drmaps.hpp"
#include "arrcoh/errors.hpp"

namespace arrcoh {

void VerifyReport::record(std::string name, bool passed, std::string detail) {
    if (!passed) all_passed = false;
    checks.push_back({std::move(name), passed, std::move(detail)});
}

namespace {

bool d_squared_is_zero(const CochainComplex& cx) {
    for (const int q : cx.degrees()) {
        if (!cx.has_degree(q + 1)) continue;
        if (!(cx.differential(q + 1) * cx.differential(q)).is_zero()) return false;
    }
    return true;
}

bool differential_raises_degree(const CochainComplex& cx) {
    for (const int q : cx.degrees())
        for (const Generator& g : cx.generators(q))
            for (const SignedSubset& term : differential_of(cx.family(), g.bits))
                if (cx.degree_of_bits(term.bits) != q + 1) return false;
    return true;
}

} // namespace

VerifyReport run_verify(const ParsedInput& input, std::size_t oracle_gate, std::size_t max_size) {
    VerifyReport report;
    const SubspaceFamily& family = input.family;

    const CochainComplex cx = build_complex(family, max_size);
    report.record("d_squared_zero", d_squared_is_zero(cx));
    report.record("differential_raises_degree", differential_raises_degree(cx));

    const PoincarePoly poly = poincare_of(cx);
    const long long chi = euler(poly);
    report.record("euler_characteristic", family.empty() ? chi == 1 : chi == 0,
                  "chi = " + std::to_string(chi));

    if (input.is_arrangement && family.size() >= 2) {
        const Arrangement arr = input.arrangement();
        for (std::size_t pivot = 0; pivot < arr.size(); ++pivot) {
            const std::string at = " @ " + arr.member(pivot).name();
            try {
                const DeletionRestriction dr(arr, pivot, max_size);
                // construction verifies j, projection, phi, phi-bar
                report.record("chain_maps" + at, true);

                if (dr.separator()) {
                    const ChainMap k = dr.k_map();
                    const ChainMap kj = k.composed_with(dr.inclusion());
                    bool is_identity = true;
                    for (const int q : dr.deleted_part()->degrees())
                        if (kj.block(q) != QMatrix::identity(dr.deleted_part()->dim(q)))
                            is_identity = false;
                    report.record("k_section" + at, is_identity);
                }

                const TripleReport triple = les_report(arr, pivot, max_size);
                report.record("les_exact" + at, triple.les_exact);
                report.record("phi_bar_quasi_iso" + at, triple.phi_bar_quasi_iso);
                report.record("restricted_inclusion_quasi_iso" + at,
                              triple.tilde_inclusion_quasi_iso);
                if (triple.separator)
                    report.record("separator_implies_pp" + at, triple.pp_holds);

                if (is_geometric(build_lattice(arr.family())) && dr.separator()) {
                    const ThetaMap th = theta(arr, pivot, max_size);
                    bool drops_even = true;
                    for (const auto& [bits, drop] : th.degree_drops)
                        if (drop % 2 != 0 || drop < 0) drops_even = false;
                    report.record("theta_chain_map" + at, th.commutes);
                    report.record("theta_even_drops" + at, drops_even);
                    report.record("betti_sum_relations" + at,
                                  betti_sum_relations(arr, pivot, max_size).all());
                }
            } catch (const CheckError& e) {
                report.record("chain_maps" + at, false, e.what());
            }
        }
    }

    if (input.is_arrangement && !family.empty() && family.size() <= oracle_gate) {
        const PoincarePoly oracle = gm_poincare(family, oracle_gate);
        report.record("oracle_agreement", poly_is_zero(poly_sub(poly, oracle)),
                      "model " + to_string(poly) + " vs oracle " + to_string(oracle));
    }

    return report;
}

nlohmann::json verify_report_json(const VerifyReport& report, const SubspaceFamily& family) {
    nlohmann::json checks = nlohmann::json::array();
    for (const VerifyCheck& c : report.checks) {
        nlohmann::json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"command", "verify"},
                          {"arrangement", family_to_json(family)},
                          {"checks", std::move(checks)},
                          {"all_passed", report.all_passed}};
}

} // namespace arrcoh
