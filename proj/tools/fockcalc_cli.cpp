// Command line driver.  Every subcommand is a thin wrapper over one core
// operation; results print as canonical text or as a JSON report.
//
// Exit codes: 0 success, 1 usage or input error, 2 a requested check
// failed (violated inequality, NotPSD verdict, nonzero defect entry,
// numeric comparison above tolerance, reference-suite mismatch).

#include <fockcalc/criteria.hpp>
#include <fockcalc/fock.hpp>
#include <fockcalc/forms.hpp>
#include <fockcalc/json_export.hpp>
#include <fockcalc/numeric.hpp>
#include <fockcalc/parse.hpp>
#include <fockcalc/scalar.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace fockcalc;

struct CliState {
    std::string symbol;
    std::string poly;
    std::string poly2;
    std::string k_range;
    std::string coeff_C = "1";
    int m = 1;
    int N = 8;
    int k = 1;
    int n = 0;
    int s = 1;
    double tol = 1e-9;
    bool json = false;
    bool as_stated = false;
    int exit_code = 0;
};

void add_symbol(CLI::App* cmd, CliState& st) {
    cmd->add_option("--symbol", st.symbol, "symbol, e.g. \"z*zb^3 + z^2*zb\"")->required();
}

void add_poly(CLI::App* cmd, CliState& st) {
    cmd->add_option("--poly", st.poly, "analytic polynomial, e.g. \"z - z^4\"")->required();
}

void add_m(CLI::App* cmd, CliState& st) {
    cmd->add_option("--m", st.m, "weight order of the space (default 1)")
        ->check(CLI::NonNegativeNumber);
}

void add_N(CLI::App* cmd, CliState& st) {
    cmd->add_option("--N", st.N, "basis truncation degree (default 8)")
        ->check(CLI::NonNegativeNumber);
}

void add_json(CLI::App* cmd, CliState& st) {
    cmd->add_flag("--json", st.json, "emit a JSON report instead of text");
}

// JSON reports are meant for downstream tooling, so the weight order must
// be spelled out rather than inherited from the text-mode default.
void check_json_m(const CLI::App* cmd, const CliState& st) {
    if (st.json && cmd->count("--m") == 0)
        throw std::invalid_argument("--json requires an explicit --m");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Splits a one- or two-term symbol into the checker parameter shape
// a z^p zb^n + b z^s zb^t with p >= n and t >= s, trying both term
// orderings.  Missing terms stay zero with waived exponents.
TwoTermSymbolParams split_two_term(const MixedSymbol& phi) {
    const auto& terms = phi.terms();
    if (terms.size() > 2)
        throw std::invalid_argument("criteria checkers need a symbol with at most two terms");

    TwoTermSymbolParams params;
    auto fits_a = [](const MixedTerm& u) { return u.z_pow >= u.zbar_pow; };
    auto fits_b = [](const MixedTerm& u) { return u.zbar_pow >= u.z_pow; };
    auto fill_a = [&params](const MixedTerm& u) {
        params.a = u.coeff;
        params.p = u.z_pow;
        params.n = u.zbar_pow;
    };
    auto fill_b = [&params](const MixedTerm& u) {
        params.b = u.coeff;
        params.s = u.z_pow;
        params.t = u.zbar_pow;
    };

    if (terms.empty()) return params;
    if (terms.size() == 1) {
        if (fits_a(terms[0]))
            fill_a(terms[0]);
        else
            fill_b(terms[0]);
        return params;
    }
    if (fits_a(terms[0]) && fits_b(terms[1])) {
        fill_a(terms[0]);
        fill_b(terms[1]);
        return params;
    }
    if (fits_a(terms[1]) && fits_b(terms[0])) {
        fill_a(terms[1]);
        fill_b(terms[0]);
        return params;
    }
    throw std::invalid_argument(
        "the symbol does not split as a*z^p*zb^n + b*z^s*zb^t with p >= n and t >= s");
}

std::pair<int, int> parse_k_range(const std::string& text) {
    auto bad = [] { return std::invalid_argument("expected --k-range of the form a..b"); };
    auto pos = text.find("..");
    if (pos == std::string::npos || pos == 0 || pos + 2 >= text.size()) throw bad();
    try {
        size_t used = 0;
        int lo = std::stoi(text.substr(0, pos), &used);
        if (used != pos) throw bad();
        std::string tail = text.substr(pos + 2);
        int hi = std::stoi(tail, &used);
        if (used != tail.size()) throw bad();
        return {lo, hi};
    } catch (const std::out_of_range&) {
        throw bad();
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

void emit(const CliState& st, const std::string& json_text, const std::string& plain_text) {
    std::cout << (st.json ? json_text : plain_text) << "\n";
}

std::string matrix_text(const PiMatrix& mat) {
    std::ostringstream out;
    out << "dim: " << mat.dim() << " (entries carry a factor of pi)";
    for (const auto& row : mat.entries) {
        out << "\n";
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << "  ";
            out << to_string(row[j]);
        }
    }
    return out.str();
}

std::string report_text(const CriterionReport& rep) {
    std::ostringstream out;
    out << "theorem: " << rep.theorem << "\ncase: " << to_string(rep.tag) << "\nk: " << rep.k
        << "\nlhs: " << to_string(rep.lhs) << "\nrhs: " << to_string(rep.rhs)
        << "\nholds: " << yes_no(rep.holds)
        << "\nform value: " << to_string(rep.cross_check);
    return out.str();
}

std::string quasi_text(const QuasiReport& rep) {
    std::ostringstream out;
    out << "theorem: thm31\nkind: " << to_string(rep.kind) << "\ncase: " << to_string(rep.tag)
        << "\nk: " << rep.k << "\nlhs: " << to_string(rep.lhs) << "\nrhs: " << to_string(rep.rhs)
        << "\nholds: " << yes_no(rep.holds)
        << "\ndefect value: " << to_string(rep.cross_check);
    return out.str();
}

std::string sweep_text(const SweepResult& sweep) {
    std::ostringstream out;
    for (const auto& rep : sweep.reports) {
        out << "k=" << rep.k << "  case=" << to_string(rep.tag) << "  lhs=" << to_string(rep.lhs)
            << "  rhs=" << to_string(rep.rhs) << "  holds=" << yes_no(rep.holds)
            << "  form=" << to_string(rep.cross_check) << "\n";
    }
    if (sweep.first_failing_k)
        out << "first failing k: " << *sweep.first_failing_k;
    else
        out << "no failing k in range";
    return out.str();
}

std::string psd_text(const PSDVerdict& verdict) {
    if (verdict.status == PSDStatus::PSD) return "psd";
    std::ostringstream out;
    out << "not-psd\nwitness:";
    for (const auto& c : verdict.witness) out << " " << to_string(c);
    out << "\nwitness value: " << to_string(verdict.witness_value);
    return out.str();
}

std::string scan_text(const ZeroScanResult& scan, const PiMatrix& mat) {
    std::ostringstream out;
    out << matrix_text(mat) << "\n";
    if (scan.all_zero)
        out << "all entries zero";
    else
        out << "first nonzero entry at (" << scan.row << ", " << scan.col
            << "): " << to_string(scan.value);
    return out.str();
}

std::string comparison_text(const ComparisonReport& rep) {
    char err[64];
    std::snprintf(err, sizeof err, "%.6e", rep.max_rel_err);
    std::ostringstream out;
    out << "max relative error: " << err << "\nradial nodes: " << rep.nodes_radial
        << "\nangular nodes: " << rep.nodes_angular
        << "\nkernel truncation: " << rep.kernel_truncation << "\npass: " << yes_no(rep.pass);
    return out.str();
}

std::string zn_c_text(const ZnCFormResult& res, int n, int s, const GaussianRational& C, int m) {
    std::ostringstream out;
    out << "theorem: zn-c\nn: " << n << "\ns: " << s << "\nC: " << to_string(C) << "\nm: " << m
        << "\nfull value: " << to_string(res.full_value)
        << "\nfull holds (>= 0): " << yes_no(res.full_holds);
    if (res.reduced_value)
        out << "\nreduced value: " << to_string(*res.reduced_value)
            << "\nreduced holds (>= 0): " << yes_no(res.reduced_holds);
    else
        out << "\nreduced form: not applicable (n = 0)";
    return out.str();
}

std::string remark27_text(int m, int s, const Rational& bound) {
    std::ostringstream out;
    out << "theorem: remark27\nm: " << m << "\ns: " << s << "\nbound: " << to_string(bound)
        << "\nholds (<= 1): " << yes_no(bound <= Rational(1))
        << "\nequality: " << yes_no(bound == Rational(1));
    return out.str();
}

// ---------------------------------------------------------------------------
// Embedded reference suite.  Expected values are the published worked
// examples, recorded verbatim; the table diffs them against the engine,
// so a discrepancy in the source material shows up as an honest MISMATCH.

struct CheckRow {
    std::string example;
    std::string label;
    bool ok = false;
    std::string expected;
    std::string engine;
};

class ReferenceSuite {
  public:
    void expect_poly(const std::string& example, const std::string& label,
                     const AnalyticPoly& engine, const std::string& expected) {
        rows_.push_back(
            {example, label, engine == parse_poly(expected), expected, print_poly(engine)});
    }

    void expect_value(const std::string& example, const std::string& label,
                      const PiScalar& engine, const std::string& expected) {
        rows_.push_back(
            {example, label, engine == parse_pi_scalar(expected), expected, to_string(engine)});
    }

    int print_and_score() const {
        size_t width = 0;
        for (const auto& row : rows_) width = std::max(width, head_of(row).size());

        std::vector<std::string> order;
        std::vector<int> failures;
        int mismatches = 0;
        for (const auto& row : rows_) {
            std::string head = head_of(row);
            std::cout << head << std::string(width - head.size() + 2, ' ');
            if (row.ok) {
                std::cout << "ok\n";
            } else {
                std::cout << "MISMATCH  expected " << row.expected << ", engine " << row.engine
                          << "\n";
                ++mismatches;
            }
            size_t slot = 0;
            while (slot < order.size() && order[slot] != row.example) ++slot;
            if (slot == order.size()) {
                order.push_back(row.example);
                failures.push_back(0);
            }
            if (!row.ok) ++failures[slot];
        }

        std::cout << "\n";
        for (size_t i = 0; i < order.size(); ++i) {
            std::cout << "example " << order[i] << ": ";
            if (failures[i] == 0)
                std::cout << "pass\n";
            else
                std::cout << "FAIL (" << failures[i]
                          << (failures[i] == 1 ? " mismatch)\n" : " mismatches)\n");
        }
        if (mismatches == 0)
            std::cout << "all examples match\n";
        else
            std::cout << mismatches << " mismatches\n";
        return mismatches == 0 ? 0 : 2;
    }

  private:
    static std::string head_of(const CheckRow& row) { return row.example + "  " + row.label; }

    std::vector<CheckRow> rows_;
};

int run_reference_suite() {
    ReferenceSuite suite;
    FockParams fp{1};
    AnalyticPoly probe = parse_poly("z - z^4");

    {
        MixedSymbol phi = parse_symbol("z*zb^3 + z^2*zb");
        AnalyticPoly tf = toeplitz_apply(phi, probe, fp);
        AnalyticPoly tsf = toeplitz_adjoint_apply(phi, probe, fp);
        suite.expect_poly("2.2", "T(f)", tf, "-116*z^2 - 7*z^5");
        suite.expect_poly("2.2", "T*(f)", tsf, "6 - 25*z^3 - 8*z^6");
        suite.expect_value("2.2", "<T*Tf, f>",
                           inner_product(toeplitz_adjoint_apply(phi, tf, fp), probe, fp),
                           "116016*pi");
        suite.expect_value("2.2", "<TT*f, f>",
                           inner_product(toeplitz_apply(phi, tsf, fp), probe, fp), "337596*pi");
        suite.expect_value("2.2", "hypo form", hyponormality_form(phi, probe, fp), "-221580*pi");
    }
    {
        MixedSymbol phi = parse_symbol("4*z^3*zb + 6*z*zb^4");
        AnalyticPoly tf = toeplitz_apply(phi, probe, fp);
        AnalyticPoly tsf = toeplitz_adjoint_apply(phi, probe, fp);
        suite.expect_poly("2.3", "T(f)", tf, "-2160*z + 20*z^3 - 32*z^6");
        suite.expect_poly("2.3", "T*(f)", tsf, "-480*z^2 + 36*z^4 - 54*z^7");
        suite.expect_value("2.3", "<T*Tf, f>",
                           inner_product(toeplitz_adjoint_apply(phi, tf, fp), probe, fp),
                           "14501760*pi");
        suite.expect_value("2.3", "<TT*f, f>",
                           inner_product(toeplitz_apply(phi, tsf, fp), probe, fp), "119111040*pi");
        suite.expect_value("2.3", "hypo form", hyponormality_form(phi, probe, fp),
                           "-104609280*pi");
    }
    {
        MixedSymbol phi = parse_symbol("4*z^3*zb + 6*z^2*zb^3");
        AnalyticPoly tf = toeplitz_apply(phi, probe, fp);
        AnalyticPoly tsf = toeplitz_adjoint_apply(phi, probe, fp);
        suite.expect_poly("2.4", "T(f)", tf, "144 - 1240*z^3 - 32*z^6");
        suite.expect_poly("2.4", "T*(f)", tsf, "-360*z^2 - 336*z^5");
        suite.expect_value("2.4", "<T*Tf, f>",
                           inner_product(toeplitz_adjoint_apply(phi, tf, fp), probe, fp),
                           "43293696*pi");
        suite.expect_value("2.4", "<TT*f, f>",
                           inner_product(toeplitz_apply(phi, tsf, fp), probe, fp), "82753920*pi");
        suite.expect_value("2.4", "hypo form", hyponormality_form(phi, probe, fp),
                           "-39460224*pi");
    }
    {
        MixedSymbol phi = parse_symbol("4*z^2*zb^3 + 6*z^3*zb");
        AnalyticPoly tf = toeplitz_apply(phi, probe, fp);
        AnalyticPoly tsf = toeplitz_adjoint_apply(phi, probe, fp);
        AnalyticPoly ttf = toeplitz_apply(phi, tf, fp);
        AnalyticPoly tstf = toeplitz_adjoint_apply(phi, tf, fp);
        suite.expect_poly("3.2", "TT(f)", ttf,
                          "3840*z + 417600*z^2 + 576*z^4 - 60228*z^5 - 2880*z^8");
        suite.expect_poly("3.2", "T*T(f)", tstf,
                          "2304 + 303300*z + 1920*z^3 + 49392*z^4 - 17280*z^7");
        suite.expect_value("3.2", "<T*Tf, T*f>", inner_product(tstf, tsf, fp), "0");
        suite.expect_value("3.2", "<TTf, Tf>", inner_product(ttf, tf, fp), "5529600*pi");
        suite.expect_value("3.2", "quasi defect", quasinormality_defect(phi, probe, probe, fp),
                           "5529600*pi");
    }
    {
        MixedSymbol phi = parse_symbol("2*z^3 + 2*z^3*zb + zb^3 + 3*z*zb^3");
        AnalyticPoly z = parse_poly("z");
        AnalyticPoly tz = toeplitz_apply(phi, z, fp);
        AnalyticPoly tsz = toeplitz_adjoint_apply(phi, z, fp);
        AnalyticPoly ttz = toeplitz_apply(phi, tz, fp);
        AnalyticPoly tstz = toeplitz_adjoint_apply(phi, tz, fp);
        suite.expect_poly("3.4", "T(z)", tz, "2*z^4 + 10*z^3");
        suite.expect_poly("3.4", "T*(z)", tsz, "z^4 + 15*z^3");
        suite.expect_poly("3.4", "TT(z)", ttz,
                          "4*z^7 + 52*z^6 + 140*z^5 + 720*z^2 + 1920*z + 240");
        suite.expect_poly("3.4", "T*T(z)", tstz,
                          "2*z^7 + 68*z^6 + 210*z^5 + 360*z^2 + 1440*z + 480");
        suite.expect_value("3.4", "<T*TTz, z>",
                           inner_product(toeplitz_adjoint_apply(phi, ttz, fp), z, fp), "0");
        suite.expect_value("3.4", "<TT*Tz, z>",
                           inner_product(toeplitz_apply(phi, tstz, fp), z, fp), "0");
        suite.expect_value("3.4", "quasi defect", quasinormality_defect(phi, z, z, fp), "0");
        suite.expect_value("3.4", "<T*Tz, z>", inner_product(tstz, z, fp), "2880*pi");
        suite.expect_value("3.4", "<TT*z, z>",
                           inner_product(toeplitz_apply(phi, tsz, fp), z, fp), "5520*pi");
        suite.expect_value("3.4", "hypo form", hyponormality_form(phi, z, fp), "-2640*pi");
    }
    return suite.print_and_score();
}

}  // namespace

int main(int argc, char** argv) {
    CliState st;
    CLI::App app{"exact Toeplitz calculus on weighted Fock spaces"};
    app.footer("exit codes: 0 success, 1 usage or input error, 2 a requested check failed");
    app.require_subcommand(1);

    auto* apply = app.add_subcommand("apply", "apply T_phi to a polynomial");
    add_symbol(apply, st);
    add_poly(apply, st);
    add_m(apply, st);
    add_json(apply, st);
    apply->callback([&st, apply] {
        check_json_m(apply, st);
        AnalyticPoly out =
            toeplitz_apply(parse_symbol(st.symbol), parse_poly(st.poly), FockParams{st.m});
        emit(st, poly_json(out), print_poly(out));
    });

    auto* adjoint = app.add_subcommand("adjoint-apply", "apply the adjoint T_phi* to a polynomial");
    add_symbol(adjoint, st);
    add_poly(adjoint, st);
    add_m(adjoint, st);
    add_json(adjoint, st);
    adjoint->callback([&st, adjoint] {
        check_json_m(adjoint, st);
        AnalyticPoly out =
            toeplitz_adjoint_apply(parse_symbol(st.symbol), parse_poly(st.poly), FockParams{st.m});
        emit(st, poly_json(out), print_poly(out));
    });

    auto* hypo = app.add_subcommand("hypo-form", "evaluate ||Tf||^2 - ||T*f||^2");
    add_symbol(hypo, st);
    add_poly(hypo, st);
    add_m(hypo, st);
    add_json(hypo, st);
    hypo->callback([&st, hypo] {
        check_json_m(hypo, st);
        PiScalar v =
            hyponormality_form(parse_symbol(st.symbol), parse_poly(st.poly), FockParams{st.m});
        emit(st, pi_value_json(v), to_string(v));
    });

    auto* quasi = app.add_subcommand("quasi-defect", "evaluate <(T*T^2 - TT*T)f, g>");
    add_symbol(quasi, st);
    add_poly(quasi, st);
    quasi->add_option("--poly2", st.poly2, "second slot g (defaults to --poly)");
    add_m(quasi, st);
    add_json(quasi, st);
    quasi->callback([&st, quasi] {
        check_json_m(quasi, st);
        AnalyticPoly f = parse_poly(st.poly);
        AnalyticPoly g = quasi->count("--poly2") ? parse_poly(st.poly2) : f;
        PiScalar v = quasinormality_defect(parse_symbol(st.symbol), f, g, FockParams{st.m});
        emit(st, pi_value_json(v), to_string(v));
    });

    auto* gram = app.add_subcommand("gram", "commutator Gram matrix on z^0..z^N");
    add_symbol(gram, st);
    add_N(gram, st);
    add_m(gram, st);
    add_json(gram, st);
    gram->callback([&st, gram] {
        check_json_m(gram, st);
        PiMatrix mat = commutator_gram(parse_symbol(st.symbol), st.N, FockParams{st.m});
        emit(st, matrix_json(mat), matrix_text(mat));
    });

    auto* psd = app.add_subcommand("psd", "decide positive semidefiniteness of the Gram matrix");
    add_symbol(psd, st);
    add_N(psd, st);
    add_m(psd, st);
    add_json(psd, st);
    psd->callback([&st, psd] {
        check_json_m(psd, st);
        PSDVerdict verdict =
            psd_test(commutator_gram(parse_symbol(st.symbol), st.N, FockParams{st.m}));
        emit(st, psd_json(verdict), psd_text(verdict));
        if (verdict.status != PSDStatus::PSD) st.exit_code = 2;
    });

    auto* qmatrix = app.add_subcommand("quasi-matrix", "defect matrix on z^0..z^N with zero scan");
    add_symbol(qmatrix, st);
    add_N(qmatrix, st);
    add_m(qmatrix, st);
    add_json(qmatrix, st);
    qmatrix->callback([&st, qmatrix] {
        check_json_m(qmatrix, st);
        MixedSymbol phi = parse_symbol(st.symbol);
        PiMatrix mat = quasi_defect_matrix(phi, st.N, FockParams{st.m});
        ZeroScanResult scan = quasi_zero_test(phi, st.N, FockParams{st.m});
        emit(st, zero_scan_json(scan, mat), scan_text(scan, mat));
        if (!scan.all_zero) st.exit_code = 2;
    });

    auto* criteria = app.add_subcommand("criteria", "necessary-condition checkers");
    criteria->require_subcommand(1);

    auto* thm21 = criteria->add_subcommand("thm21", "probe inequality for a two-term symbol");
    add_symbol(thm21, st);
    add_m(thm21, st);
    add_json(thm21, st);
    thm21->add_option("--k", st.k, "probe degree")->required()->check(CLI::NonNegativeNumber);
    thm21->callback([&st, thm21] {
        check_json_m(thm21, st);
        CriterionReport rep =
            thm21_inequality(split_two_term(parse_symbol(st.symbol)), st.m, st.k);
        emit(st, criterion_report_json(rep), report_text(rep));
        if (!rep.holds) st.exit_code = 2;
    });

    auto* rem24 = criteria->add_subcommand("remark24", "unit-shift specialization at k = 1");
    add_symbol(rem24, st);
    add_m(rem24, st);
    add_json(rem24, st);
    rem24->callback([&st, rem24] {
        check_json_m(rem24, st);
        CriterionReport rep = remark24_check(split_two_term(parse_symbol(st.symbol)), st.m);
        emit(st, criterion_report_json(rep), report_text(rep));
        if (!rep.holds) st.exit_code = 2;
    });

    auto* znc = criteria->add_subcommand("zn-c", "coefficient form for z^n + C|z|^2s");
    znc->add_option("--n", st.n, "shift power")->required()->check(CLI::NonNegativeNumber);
    znc->add_option("--s", st.s, "radial power")->required()->check(CLI::PositiveNumber);
    znc->add_option("--C", st.coeff_C, "radial coefficient, Gaussian rational (default 1)");
    add_poly(znc, st);
    add_m(znc, st);
    add_json(znc, st);
    znc->callback([&st, znc] {
        check_json_m(znc, st);
        GaussianRational C = parse_gaussian(st.coeff_C);
        ZnCFormResult res = thm_zn_C_form(st.n, st.s, C, st.m, parse_poly(st.poly));
        emit(st, zn_c_json(res, st.n, st.s, C, st.m), zn_c_text(res, st.n, st.s, C, st.m));
        if (!res.full_holds || (res.reduced_value && !res.reduced_holds)) st.exit_code = 2;
    });

    auto* rem27 = criteria->add_subcommand("remark27", "radial coupling bound");
    add_m(rem27, st);
    rem27->add_option("--s", st.s, "radial power")->required()->check(CLI::PositiveNumber);
    add_json(rem27, st);
    rem27->callback([&st, rem27] {
        check_json_m(rem27, st);
        Rational bound = remark27_bound(st.m, st.s);
        emit(st, remark27_json(st.m, st.s, bound), remark27_text(st.m, st.s, bound));
        if (bound > Rational(1)) st.exit_code = 2;
    });

    auto* thm31 = criteria->add_subcommand("thm31", "quasinormality classification at a probe");
    add_symbol(thm31, st);
    add_m(thm31, st);
    add_json(thm31, st);
    thm31->add_option("--k", st.k, "probe degree")->required()->check(CLI::NonNegativeNumber);
    thm31->add_flag("--as-stated", st.as_stated,
                    "use the statement variant of the case identity");
    thm31->callback([&st, thm31] {
        check_json_m(thm31, st);
        QuasiReport rep =
            thm31_classify(split_two_term(parse_symbol(st.symbol)), st.m, st.k, st.as_stated);
        emit(st, quasi_report_json(rep), quasi_text(rep));
        if (!rep.holds) st.exit_code = 2;
    });

    auto* sweep = app.add_subcommand("sweep", "probe inequality across an inclusive k range");
    add_symbol(sweep, st);
    add_m(sweep, st);
    add_json(sweep, st);
    sweep->add_option("--k-range", st.k_range, "inclusive probe range a..b")->required();
    sweep->callback([&st, sweep] {
        check_json_m(sweep, st);
        auto [lo, hi] = parse_k_range(st.k_range);
        SweepResult res = necessary_sweep(split_two_term(parse_symbol(st.symbol)), st.m, lo, hi);
        emit(st, sweep_json(res), sweep_text(res));
        if (res.first_failing_k) st.exit_code = 2;
    });

    auto* verify = app.add_subcommand("verify-numeric",
                                      "cross-check T_phi f against Gaussian quadrature");
    add_symbol(verify, st);
    add_poly(verify, st);
    add_m(verify, st);
    add_json(verify, st);
    verify->add_option("--tol", st.tol, "relative tolerance (default 1e-9)")
        ->check(CLI::PositiveNumber);
    verify->callback([&st, verify] {
        check_json_m(verify, st);
        MixedSymbol phi = parse_symbol(st.symbol);
        AnalyticPoly f = parse_poly(st.poly);
        QuadratureRule rule = rule_for_apply(phi, f, st.m);
        ComparisonReport rep = compare_exact_numeric(phi, f, st.m, rule, st.tol);
        emit(st, comparison_json(rep), comparison_text(rep));
        if (!rep.pass) st.exit_code = 2;
    });

    auto* paper = app.add_subcommand("paper-examples",
                                     "run the embedded reference example suite");
    paper->callback([&st] { st.exit_code = run_reference_suite(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const fockcalc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return st.exit_code;
}
