#include <fockcalc/json_export.hpp>

#include <fockcalc/parse.hpp>

#include <json.hpp>

namespace fockcalc {

namespace {

using nlohmann::json;

json matrix_value(const PiMatrix& m) {
    json entries = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_string(e));
        entries.push_back(std::move(r));
    }
    return json{{"unit", "pi"}, {"dim", m.dim()}, {"entries", std::move(entries)}};
}

}  // namespace

std::string matrix_json(const PiMatrix& m) { return matrix_value(m).dump(); }

std::string criterion_report_json(const CriterionReport& rep) {
    json j{{"theorem", rep.theorem},
           {"case", to_string(rep.tag)},
           {"k", rep.k},
           {"lhs", to_string(rep.lhs)},
           {"rhs", to_string(rep.rhs)},
           {"holds", rep.holds},
           {"cross_check", to_string(rep.cross_check)}};
    return j.dump();
}

std::string quasi_report_json(const QuasiReport& rep) {
    json j{{"theorem", "thm31"},
           {"kind", to_string(rep.kind)},
           {"case", to_string(rep.tag)},
           {"k", rep.k},
           {"lhs", to_string(rep.lhs)},
           {"rhs", to_string(rep.rhs)},
           {"holds", rep.holds},
           {"cross_check", to_string(rep.cross_check)}};
    return j.dump();
}

std::string sweep_json(const SweepResult& sweep) {
    json reports = json::array();
    for (const CriterionReport& rep : sweep.reports)
        reports.push_back(json::parse(criterion_report_json(rep)));
    json j{{"theorem", sweep.reports.empty() ? "thm21" : sweep.reports.front().theorem},
           {"reports", std::move(reports)},
           {"first_failing_k",
            sweep.first_failing_k ? json(*sweep.first_failing_k) : json(nullptr)}};
    return j.dump();
}

std::string psd_json(const PSDVerdict& verdict) {
    json j;
    if (verdict.status == PSDStatus::PSD) {
        j = json{{"status", "psd"}, {"witness", nullptr}, {"witness_value", nullptr}};
    } else {
        json witness = json::array();
        for (const GaussianRational& c : verdict.witness) witness.push_back(to_string(c));
        j = json{{"status", "not-psd"},
                 {"witness", std::move(witness)},
                 {"witness_value", to_string(verdict.witness_value)}};
    }
    return j.dump();
}

std::string zero_scan_json(const ZeroScanResult& scan, const PiMatrix& matrix) {
    json j{{"all_zero", scan.all_zero},
           {"row", scan.all_zero ? json(nullptr) : json(scan.row)},
           {"col", scan.all_zero ? json(nullptr) : json(scan.col)},
           {"value", scan.all_zero ? json(nullptr) : json(to_string(scan.value))},
           {"matrix", matrix_value(matrix)}};
    return j.dump();
}

std::string comparison_json(const ComparisonReport& rep) {
    json j{{"max_rel_err", rep.max_rel_err},
           {"nodes_radial", rep.nodes_radial},
           {"nodes_angular", rep.nodes_angular},
           {"kernel_truncation", rep.kernel_truncation},
           {"pass", rep.pass}};
    return j.dump();
}

std::string zn_c_json(const ZnCFormResult& res, int n, int s, const GaussianRational& C, int m) {
    json j{{"theorem", "zn-c"},
           {"n", n},
           {"s", s},
           {"m", m},
           {"C", to_string(C)},
           {"full_value", to_string(res.full_value)},
           {"full_holds", res.full_holds},
           {"reduced_value",
            res.reduced_value ? json(to_string(*res.reduced_value)) : json(nullptr)},
           {"reduced_holds", res.reduced_value ? json(res.reduced_holds) : json(nullptr)}};
    return j.dump();
}

std::string remark27_json(int m, int s, const Rational& bound) {
    json j{{"theorem", "remark27"},
           {"m", m},
           {"s", s},
           {"bound", to_string(bound)},
           {"holds", bound <= 1},
           {"equality", bound == 1}};
    return j.dump();
}

std::string poly_json(const AnalyticPoly& f) {
    return json{{"poly", print_poly(f)}}.dump();
}

std::string pi_value_json(const PiScalar& v) {
    return json{{"value", to_string(v)}}.dump();
}

}  // namespace fockcalc
