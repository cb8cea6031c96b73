#include <doctest.h>

#include "arrcoh/errors.hpp"
#include "arrcoh/io.hpp"
#include "arrcoh/verify.hpp"
#include "support.hpp"

using namespace arrcoh;
using nlohmann::json;

namespace {

const char* kExample2 = R"({
  "ambient_dim": 3,
  "subspaces": [
    {"name": "h0", "equations": [[0, 1, 0], [0, 0, 1]]},
    {"name": "h1", "equations": [[1, 0, 0], [0, 0, 1]]},
    {"name": "h2", "equations": [[1, 0, 0], [0, 1, 0]]}
  ]
})";

} // namespace

TEST_CASE("parsing a valid arrangement") {
    const ParsedInput input = parse_input(kExample2);
    CHECK(input.is_arrangement);
    CHECK(input.family.size() == 3);
    CHECK(input.family.ambient_dim() == 3);
    CHECK(input.family.member(0).name() == "h0");
    CHECK(input.family.member(0).codim() == 2);
}

TEST_CASE("rational entries as strings, floats rejected") {
    const char* fractions = R"({"ambient_dim": 2, "subspaces": [
        {"name": "a", "equations": [["1/2", "-3/4"]]}]})";
    const ParsedInput input = parse_input(fractions);
    CHECK(input.family.member(0).codim() == 1);

    const char* floats = R"({"ambient_dim": 2, "subspaces": [
        {"name": "a", "equations": [[0.5, 1]]}]})";
    CHECK_THROWS_WITH_AS(parse_input(floats), doctest::Contains("floating-point"), InputError);
}

TEST_CASE("span input converts through the annihilator") {
    // the z-axis of C^3, spanned by e3
    const char* span = R"({"ambient_dim": 3, "subspaces": [
        {"name": "axis", "span": [[0, 0, 1]]}]})";
    const ParsedInput input = parse_input(span);
    CHECK(input.family.member(0).codim() == 2);
    CHECK(input.family.member(0)
              .same_space(testing::coordinate_subspace(3, {0, 1}, "")));
}

TEST_CASE("validation failures carry context") {
    CHECK_THROWS_AS(parse_input("{"), InputError);
    CHECK_THROWS_AS(parse_input("[]"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"ambient_dim": 3})"), InputError);
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"ambient_dim": 2, "subspaces": [
            {"name": "a", "equations": [[1, 0, 0]]}]})"),
        doctest::Contains("length 2"), InputError);
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"ambient_dim": 2, "subspaces": [
            {"name": "a", "equations": [[1, 0]]},
            {"name": "a", "equations": [[0, 1]]}]})"),
        doctest::Contains("duplicate subspace name"), InputError);
}

TEST_CASE("containment pairs need the family flag") {
    const char* nested = R"({"ambient_dim": 3, "subspaces": [
        {"name": "plane", "equations": [[1, 0, 0]]},
        {"name": "line", "equations": [[1, 0, 0], [0, 1, 0]]}]})";
    CHECK_THROWS_WITH_AS(parse_input(nested), doctest::Contains("contains"), InputError);
    const ParsedInput input = parse_input(nested, true);
    CHECK_FALSE(input.is_arrangement);
    CHECK(input.family.size() == 2);
}

TEST_CASE("family json round-trips through the parser") {
    const ParsedInput input = parse_input(kExample2);
    const std::string echoed = family_to_json(input.family).dump();
    const ParsedInput again = parse_input(echoed);
    REQUIRE(again.family.size() == input.family.size());
    for (std::size_t i = 0; i < input.family.size(); ++i) {
        CHECK(again.family.member(i).same_space(input.family.member(i)));
        CHECK(again.family.member(i).name() == input.family.member(i).name());
    }
}

TEST_CASE("poincare report carries the polynomial and euler characteristic") {
    const ParsedInput input = parse_input(kExample2);
    const json report = poincare_report(input.family, kDefaultComplexCap);
    CHECK(report.at("schema_version").get<int>() == kReportSchemaVersion);
    CHECK(report.at("poincare").at("display").get<std::string>() == "1 + 3t^3 + 2t^4");
    CHECK(report.at("euler").get<long long>() == 0);
    // the embedded arrangement parses back
    CHECK_NOTHROW(parse_input(report.at("arrangement").dump()));
}

TEST_CASE("triple report for example 1 at h0") {
    const json report =
        triple_report_json(testing::example1(), "h0", kDefaultComplexCap);
    CHECK(report.at("separator").get<bool>() == false);
    CHECK(report.at("pp_holds").get<bool>() == false);
    CHECK(report.at("deficit").at("display").get<std::string>() == "t^7 + t^8");
    CHECK(report.at("les").at("exact").get<bool>() == true);
    CHECK(report.at("poincare").at("full").at("display").get<std::string>() ==
          "1 + t^3 + 2t^5 + 2t^6");
    CHECK_THROWS_AS(triple_report_json(testing::example1(), "nope", kDefaultComplexCap),
                    InputError);
}

TEST_CASE("lattice report for the example fixtures") {
    const json e2 = lattice_report(parse_input(kExample2));
    CHECK(e2.at("elements").size() == 5);
    CHECK(e2.at("geometric").get<bool>() == true);
    CHECK(e2.at("separators").empty());

    ParsedInput e1{testing::example1().family(), true};
    const json r1 = lattice_report(e1);
    CHECK(r1.at("elements").size() == 7);
    CHECK(r1.at("geometric").get<bool>() == false);
    const auto seps = r1.at("separators");
    REQUIRE(seps.size() == 2);
    CHECK(seps[0].get<std::string>() == "h1");
    CHECK(seps[1].get<std::string>() == "h2");
}

TEST_CASE("verify passes on the example fixtures") {
    const ParsedInput input = parse_input(kExample2);
    const VerifyReport report = run_verify(input);
    CHECK(report.all_passed);
    const json body = verify_report_json(report, input.family);
    CHECK(body.at("all_passed").get<bool>());
    CHECK(body.at("checks").size() > 5);
}

TEST_CASE("verify runs the family-level suites when containments are admitted") {
    const char* nested = R"({"ambient_dim": 3, "subspaces": [
        {"name": "plane", "equations": [[1, 0, 0]]},
        {"name": "line", "equations": [[1, 0, 0], [0, 1, 0]]}]})";
    const ParsedInput input = parse_input(nested, true);
    const VerifyReport report = run_verify(input);
    CHECK(report.all_passed);
    // pivot suites are skipped for non-arrangements
    for (const VerifyCheck& c : report.checks) CHECK(c.name.find(" @ ") == std::string::npos);
}

TEST_CASE("oracle compare report matches on fixtures") {
    bool match = false;
    const json report =
        oracle_compare_report(parse_input(kExample2), kDefaultOracleGate, kDefaultComplexCap,
                              &match);
    CHECK(match);
    CHECK(report.at("match").get<bool>());
    CHECK(report.at("model").at("display") == report.at("oracle").at("display"));
}
