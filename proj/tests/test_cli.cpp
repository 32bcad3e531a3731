#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end tests for the command line driver: spawns the installed
// binary, checks output text, exit codes, and that every JSON report
// validates against its shipped schema.

#include <fockcalc/criteria.hpp>
#include <fockcalc/scalar.hpp>

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

using namespace fockcalc;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd =
        std::string(FOCKCALC_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(FOCKCALC_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

// Structural validator for the schema subset the shipped files use:
// type, enum, minimum, properties, required, additionalProperties, items.
void validate(const json& v, const json& schema, const std::string& where,
              std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = t.is_array() ? std::any_of(t.begin(), t.end(),
                                             [&](const json& x) {
                                                 return type_matches(v, x.get<std::string>());
                                             })
                               : type_matches(v, t.get<std::string>());
        if (!ok) {
            errors.push_back(where + ": type mismatch");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = std::any_of(schema["enum"].begin(), schema["enum"].end(),
                              [&](const json& c) { return v == c; });
        if (!ok) errors.push_back(where + ": value not in enum");
    }
    if (schema.contains("minimum") && v.is_number()) {
        if (v.get<double>() < schema["minimum"].get<double>())
            errors.push_back(where + ": below minimum");
    }
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!v.contains(key.get<std::string>()))
                    errors.push_back(where + ": missing key " + key.get<std::string>());
        bool closed = schema.contains("additionalProperties") &&
                      schema["additionalProperties"] == json(false);
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (schema.contains("properties") && schema["properties"].contains(it.key()))
                validate(it.value(), schema["properties"][it.key()], where + "." + it.key(),
                         errors);
            else if (closed)
                errors.push_back(where + ": unexpected key " + it.key());
        }
    }
    if (v.is_array() && schema.contains("items"))
        for (size_t i = 0; i < v.size(); ++i)
            validate(v[i], schema["items"], where + "[" + std::to_string(i) + "]", errors);
}

json parse_against_schema(const std::string& text, const std::string& schema_name) {
    json v = json::parse(text);
    std::vector<std::string> errors;
    validate(v, load_schema(schema_name), "$", errors);
    std::string joined;
    for (const auto& e : errors) joined += e + "; ";
    CHECK_MESSAGE(errors.empty(), schema_name, ": ", joined);
    return v;
}

}  // namespace

TEST_CASE("worked invocations print exact canonical values") {
    RunResult r = run_cli("hypo-form --symbol \"z*zb^3+z^2*zb\" --poly \"z - z^4\" --m 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-221580*pi\n");

    r = run_cli("quasi-defect --symbol \"2*z^3+2*z^3*zb+zb^3+3*z*zb^3\" --poly \"z\" --m 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0\n");

    r = run_cli("apply --symbol \"1\" --poly \"z^7\" --m 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "z^7\n");

    r = run_cli("adjoint-apply --symbol \"z*zb^3 + z^2*zb\" --poly \"z - z^4\" --m 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "6 - 25*z^3 - 8*z^6\n");
}

TEST_CASE("usage and parse failures exit 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("apply --symbol \"z\"").exit_code == 1);  // missing --poly
    CHECK(run_cli("apply --symbol \"z\" --poly \"z\" --badflag").exit_code == 1);
    CHECK(run_cli("apply --symbol \"z\" --poly \"z\" --m -1").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("apply --help").exit_code == 0);

    RunResult r = run_cli("apply --symbol \"z^\" --poly \"z\" --m 1", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("parse error at position 3") != std::string::npos);

    r = run_cli("apply --symbol \"z\" --poly \"z*zb\" --m 1", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("conjugate factors are not allowed") != std::string::npos);

    r = run_cli("sweep --symbol \"z^2*zb\" --m 1 --k-range \"4-6\"", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("a..b") != std::string::npos);

    r = run_cli("gram --symbol \"z\" --N 2 --json", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("--json requires an explicit --m") != std::string::npos);
}

TEST_CASE("violated checker hypotheses are quoted on stderr") {
    RunResult r = run_cli("criteria thm21 --symbol \"z^2*zb + z*zb^3\" --m 1 --k 2", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("probe condition k > max(p, t) violated") != std::string::npos);

    r = run_cli("criteria thm31 --symbol \"z*zb + z*zb^3\" --m 1 --k 3", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("probe condition k > max(2p, 2t) violated") != std::string::npos);

    r = run_cli("criteria remark24 --symbol \"z^3*zb + z*zb^3\" --m 1", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("hypothesis p - n = 1 = t - s violated") != std::string::npos);

    r = run_cli("criteria thm21 --symbol \"z^2 + z^3\" --m 1 --k 5", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("does not split") != std::string::npos);
}

TEST_CASE("failed checks exit 2, passing checks exit 0") {
    // A symbol whose commutator Gram matrix is indefinite on z^0..z^4.
    CHECK(run_cli("psd --symbol \"z*zb^3 + z^2*zb\" --N 4 --m 1").exit_code == 2);
    // An analytic symbol is subnormal, so the form is PSD.
    CHECK(run_cli("psd --symbol \"z\" --N 4 --m 1").exit_code == 0);

    CHECK(run_cli("criteria thm21 --symbol \"z^2*zb + z*zb^3\" --m 1 --k 4").exit_code == 2);
    CHECK(run_cli("criteria thm21 --symbol \"z^2*zb\" --m 1 --k 4").exit_code == 0);

    CHECK(run_cli("sweep --symbol \"z^2*zb + z*zb^3\" --m 1 --k-range 4..6").exit_code == 2);
    CHECK(run_cli("sweep --symbol \"z^2*zb\" --m 1 --k-range 3..6").exit_code == 0);

    CHECK(run_cli("quasi-matrix --symbol \"z*zb\" --N 3 --m 1").exit_code == 0);
    CHECK(run_cli("quasi-matrix --symbol \"z\" --N 3 --m 1").exit_code == 2);

    CHECK(run_cli("verify-numeric --symbol \"z^2*zb + z*zb^3\" --poly \"z - z^4\" --m 1")
              .exit_code == 0);
}

TEST_CASE("JSON reports validate against the shipped schemas") {
    auto v = parse_against_schema(
        run_cli("apply --symbol \"z*zb\" --poly \"z - z^4\" --m 1 --json").output,
        "poly.schema.json");
    CHECK(v["poly"] == "3*z - 6*z^4");

    parse_against_schema(
        run_cli("hypo-form --symbol \"z*zb^3+z^2*zb\" --poly \"z - z^4\" --m 1 --json").output,
        "pi_value.schema.json");

    parse_against_schema(run_cli("gram --symbol \"z*zb\" --N 3 --m 2 --json").output,
                         "matrix.schema.json");

    parse_against_schema(
        run_cli("criteria thm21 --symbol \"z^2*zb + z*zb^3\" --m 1 --k 4 --json").output,
        "criterion_report.schema.json");

    parse_against_schema(run_cli("criteria remark24 --symbol \"z^2*zb + z*zb^2\" --m 1 --json").output,
                         "criterion_report.schema.json");

    parse_against_schema(
        run_cli("criteria thm31 --symbol \"z*zb + z*zb^3\" --m 1 --k 7 --json").output,
        "quasi_report.schema.json");

    parse_against_schema(
        run_cli("sweep --symbol \"z^2*zb + z*zb^3\" --m 1 --k-range 4..6 --json").output,
        "sweep_report.schema.json");

    parse_against_schema(run_cli("psd --symbol \"z*zb^3 + z^2*zb\" --N 4 --m 1 --json").output,
                         "psd_report.schema.json");
    parse_against_schema(run_cli("psd --symbol \"z\" --N 3 --m 1 --json").output,
                         "psd_report.schema.json");

    parse_against_schema(run_cli("quasi-matrix --symbol \"z\" --N 2 --m 0 --json").output,
                         "zero_scan.schema.json");
    parse_against_schema(run_cli("quasi-matrix --symbol \"z*zb\" --N 2 --m 1 --json").output,
                         "zero_scan.schema.json");

    parse_against_schema(
        run_cli("verify-numeric --symbol \"z^2*zb + z*zb^3\" --poly \"z - z^4\" --m 1 --json")
            .output,
        "comparison_report.schema.json");

    parse_against_schema(
        run_cli("criteria zn-c --n 1 --s 1 --C 1 --poly \"1 + z\" --m 1 --json").output,
        "zn_c_report.schema.json");
    parse_against_schema(
        run_cli("criteria zn-c --n 0 --s 2 --C \"-3\" --poly \"1 + z\" --m 1 --json").output,
        "zn_c_report.schema.json");

    parse_against_schema(run_cli("criteria remark27 --m 4 --s 1 --json").output,
                         "remark27_report.schema.json");
}

TEST_CASE("exact values survive the JSON round trip bit for bit") {
    json rep = json::parse(
        run_cli("criteria thm21 --symbol \"z^2*zb + z*zb^3\" --m 1 --k 4 --json").output);

    TwoTermSymbolParams params;
    params.a = GaussianRational(1);
    params.b = GaussianRational(1);
    params.p = 2;
    params.n = 1;
    params.s = 1;
    params.t = 3;
    CriterionReport direct = thm21_inequality(params, 1, 4);

    CHECK(parse_rational(rep["lhs"].get<std::string>()) == direct.lhs);
    CHECK(parse_rational(rep["rhs"].get<std::string>()) == direct.rhs);
    CHECK(parse_pi_scalar(rep["cross_check"].get<std::string>()) == direct.cross_check);
    CHECK(rep["holds"].get<bool>() == direct.holds);
    CHECK(rep["case"].get<std::string>() == std::string(to_string(direct.tag)));
}

TEST_CASE("reference suite reports the per-example table and honest failures") {
    RunResult r = run_cli("paper-examples");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("example 2.2: pass") != std::string::npos);
    CHECK(r.output.find("example 2.3: pass") != std::string::npos);
    CHECK(r.output.find("example 2.4: FAIL") != std::string::npos);
    CHECK(r.output.find("example 3.2: FAIL") != std::string::npos);
    CHECK(r.output.find("example 3.4: FAIL") != std::string::npos);
    CHECK(r.output.find("MISMATCH") != std::string::npos);
    // The engine side of every mismatch row is the independently tested
    // exact value, printed so the discrepancy is auditable.
    CHECK(r.output.find("expected 43293696*pi, engine 42084096*pi") != std::string::npos);
    CHECK(r.output.find("expected -39460224*pi, engine -39978624*pi") != std::string::npos);
    CHECK(r.output.find("expected 5529600*pi, engine 0") != std::string::npos);
}
