#include <fockcalc/criteria.hpp>
#include <fockcalc/parallel.hpp>

#include <algorithm>
#include <stdexcept>

namespace fockcalc {

namespace {

void check_shape(const TwoTermSymbolParams& params) {
    if (params.p < 0 || params.n < 0 || params.s < 0 || params.t < 0)
        throw std::domain_error("symbol exponents must be >= 0");
    if (params.p < params.n) throw std::domain_error("first term requires p >= n");
    if (params.t < params.s) throw std::domain_error("second term requires t >= s");
}

void check_m(int m) {
    if (m < 0) throw std::domain_error("weight order m must be >= 0");
}

// (x+k+m)!^2 / (x+k+m-y)! as an exact integer.
BigInt norm_term(int x, int y, int k, int m) {
    return factorial(x + k + m) * falling_ratio(x + k + m, y);
}

Rational quasi_lhs_qb(const TwoTermSymbolParams& params, int m, int k, bool as_stated) {
    // (p+k+m)!(t+k+m)!^2 / ((k+m)!(t+k+m-s)!); the statement variant puts
    // (t+k+m+s)! in the denominator instead.
    Rational head{falling_ratio(params.p + k + m, params.p)};
    if (!as_stated) return head * Rational(norm_term(params.t, params.s, k, m));
    BigInt num = factorial(params.t + k + m);
    return head * Rational(num * num, factorial(params.t + k + m + params.s));
}

Rational quasi_rhs_qb(const TwoTermSymbolParams& params, int m, int k, bool as_stated) {
    // (s+k+m)!^2 (s+k+m+p-t)! / ((s+k+m-t)!^2); the statement variant has
    // (s+k+m-p-t)! in the numerator.
    BigInt fall = falling_ratio(params.s + k + m, params.t);
    int tail = as_stated ? params.s + k + m - params.p - params.t
                         : params.s + k + m + params.p - params.t;
    if (tail < 0) throw std::domain_error("factorial argument out of range for this probe");
    return Rational(fall * fall * factorial(tail));
}

Rational quasi_lhs_qc(const TwoTermSymbolParams& params, int m, int k) {
    // (s+k+m)!(k+m+n)!^2 / ((k+m)!(k+n+m-p)!)
    return Rational(falling_ratio(params.s + k + m, params.s) *
                    norm_term(params.n, params.p, k, m));
}

Rational quasi_rhs_qc(const TwoTermSymbolParams& params, int m, int k) {
    // (p+k+m)!^2 (p+k+m+s-n)! / ((p+k+m-n)!^2)
    BigInt fall = falling_ratio(params.p + k + m, params.n);
    return Rational(fall * fall * factorial(params.p + k + m + params.s - params.n));
}

}  // namespace

MixedSymbol to_symbol(const TwoTermSymbolParams& params) {
    check_shape(params);
    MixedSymbol phi;
    phi.add_term({params.a, params.p, params.n});
    phi.add_term({params.b, params.s, params.t});
    return phi;
}

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::H1: return "H1";
        case CaseTag::H2: return "H2";
        case CaseTag::H3: return "H3";
        case CaseTag::OutOfScope: return "OutOfScope";
        case CaseTag::Qa: return "Qa";
        case CaseTag::Qb: return "Qb";
        case CaseTag::Qc: return "Qc";
        case CaseTag::Qd: return "Qd";
    }
    return "?";
}

const char* to_string(QuasiVerdictKind kind) {
    switch (kind) {
        case QuasiVerdictKind::AutoQuasinormal: return "auto-quasinormal";
        case QuasiVerdictKind::IdentityRequired: return "identity-required";
        case QuasiVerdictKind::Degenerate: return "degenerate";
    }
    return "?";
}

CaseTag hypo_case(const TwoTermSymbolParams& params) {
    check_shape(params);
    bool wide = params.t > params.s + 1;
    bool adjacent = params.t == params.s + 1;
    if (wide && params.p == params.n + 1) return CaseTag::H1;
    if (wide && params.p > params.n + 1) return CaseTag::H2;
    if (adjacent && params.p > params.n + 1) return CaseTag::H3;
    return CaseTag::OutOfScope;
}

CaseTag quasi_case(const TwoTermSymbolParams& params) {
    check_shape(params);
    if (params.p != params.n) return params.s != params.t ? CaseTag::Qa : CaseTag::Qc;
    return params.s != params.t ? CaseTag::Qb : CaseTag::Qd;
}

Rational thm21_master_value(const TwoTermSymbolParams& params, int m, int k) {
    check_shape(params);
    check_m(m);
    if (k <= std::max(params.p, params.t))
        throw std::domain_error("probe condition k > max(p, t) violated");
    Rational a_bracket{norm_term(params.p, params.n, k, m) -
                       norm_term(params.n, params.p, k, m)};
    Rational b_bracket{norm_term(params.s, params.t, k, m) -
                       norm_term(params.t, params.s, k, m)};
    return abs_sq(params.a) * a_bracket + abs_sq(params.b) * b_bracket;
}

CriterionReport thm21_inequality(const TwoTermSymbolParams& params, int m, int k) {
    check_shape(params);
    check_m(m);
    if (k <= std::max(params.p, params.t))
        throw std::domain_error("probe condition k > max(p, t) violated");
    bool both_live = !params.a.is_zero() && !params.b.is_zero();
    int gap_a = params.p - params.n, gap_b = params.t - params.s;
    if (both_live && gap_a == gap_b)
        throw std::domain_error("hypothesis |p - n| != |t - s| violated");

    CriterionReport report;
    report.theorem = "thm21";
    report.tag = hypo_case(params);
    report.k = k;
    if (report.tag == CaseTag::H3) {
        // printed coefficient-free reduction for the adjacent-weight case
        BigInt lf = factorial(params.p + k + m - 1);
        BigInt pk = params.p + k + m;
        report.lhs = Rational(lf * lf * (pk * pk - 1));
        BigInt rf = factorial(params.s + k + m);
        BigInt sk = params.s + k + m;
        BigInt km = k + m;
        report.rhs = Rational(rf * rf * ((sk + 1) * (sk + 1) - (km + 1) * km));
    } else {
        report.lhs = abs_sq(params.a) * Rational(norm_term(params.p, params.n, k, m) -
                                                 norm_term(params.n, params.p, k, m));
        report.rhs = abs_sq(params.b) * Rational(norm_term(params.t, params.s, k, m) -
                                                 norm_term(params.s, params.t, k, m));
    }
    report.holds = report.lhs >= report.rhs;
    report.cross_check =
        hyponormality_form(to_symbol(params), AnalyticPoly::monomial(k), FockParams{m});
    return report;
}

CriterionReport remark24_check(const TwoTermSymbolParams& params, int m) {
    check_shape(params);
    check_m(m);
    if (params.p - params.n != 1 || params.t - params.s != 1)
        throw std::domain_error("hypothesis p - n = 1 = t - s violated");

    auto side = [m](const GaussianRational& c, int x) {
        BigInt f = factorial(x + m);
        BigInt quad = BigInt(1 + x + m) * BigInt(1 + x + m) - BigInt(1 + m) * BigInt(2 + m);
        return abs_sq(c) * Rational(f * f * quad);
    };
    CriterionReport report;
    report.theorem = "remark24";
    report.tag = hypo_case(params);
    report.k = 1;
    report.lhs = side(params.a, params.p);
    report.rhs = side(params.b, params.t);
    report.holds = report.lhs >= report.rhs;
    report.cross_check =
        hyponormality_form(to_symbol(params), AnalyticPoly::monomial(1), FockParams{m});
    return report;
}

ZnCFormResult thm_zn_C_form(int n, int s, const GaussianRational& C, int m,
                            const AnalyticPoly& f) {
    if (n < 0) throw std::domain_error("shift order n must be >= 0");
    if (s < 1) throw std::domain_error("radial order s must be >= 1");
    check_m(m);

    int N = std::max(f.degree(), 0);
    auto coeff = [&f, N](int k) {
        return k <= N ? f.coeff(k) : GaussianRational();
    };

    Rational head, body;
    for (int k = 0; k < n && k <= N; ++k)
        head += abs_sq(coeff(k)) * Rational(factorial(k + n + m));
    for (int k = n; k <= N; ++k) {
        BigInt f1 = factorial(k + m);
        body += abs_sq(coeff(k)) *
                Rational(factorial(k + m + n) - f1 * falling_ratio(k + m, n));
    }
    Rational cross;
    for (int k = 0; k + n <= N; ++k) {
        GaussianRational pair = C * coeff(k + n) * conj(coeff(k));
        if (pair.is_zero()) continue;
        // ((k+m+n+s)!(k+m)! - (k+m+n)!(k+m+s)!) / (k+m)!
        Rational weight =
            Rational(factorial(k + m + n + s)) -
            Rational(factorial(k + m + n) * factorial(k + m + s), factorial(k + m));
        cross += Rational(2) * pair.re * weight;
    }

    ZnCFormResult result;
    result.full_value = PiScalar(GaussianRational(head + body + cross));
    result.full_holds = sign(result.full_value) >= 0;
    if (n > 0) {
        result.reduced_value = PiScalar(GaussianRational(body + cross));
        result.reduced_holds = sign(*result.reduced_value) >= 0;
    }
    return result;
}

Rational remark27_bound(int m, int s) {
    check_m(m);
    if (s < 1) throw std::domain_error("radial order s must be >= 1");
    BigInt num = factorial(1 + m);
    BigInt den = BigInt(s) * factorial(m + s);
    return Rational(num * num, den * den);
}

QuasiReport thm31_case_values(const TwoTermSymbolParams& params, int m, int k,
                              bool as_stated) {
    check_shape(params);
    check_m(m);
    if (k < 1) throw std::domain_error("probe k must be >= 1");

    QuasiReport report;
    report.tag = quasi_case(params);
    report.k = k;
    switch (report.tag) {
        case CaseTag::Qa:
        case CaseTag::Qd:
            report.kind = QuasiVerdictKind::AutoQuasinormal;
            report.holds = true;
            break;
        case CaseTag::Qb:
            report.lhs = quasi_lhs_qb(params, m, k, as_stated);
            report.rhs = quasi_rhs_qb(params, m, k, as_stated);
            if (params.a.is_zero() || params.b.is_zero()) {
                report.kind = QuasiVerdictKind::Degenerate;
                report.holds = true;
            } else {
                report.kind = QuasiVerdictKind::IdentityRequired;
                report.holds = report.lhs == report.rhs;
            }
            break;
        case CaseTag::Qc:
            // the statement and its derivation agree for this case
            report.lhs = quasi_lhs_qc(params, m, k);
            report.rhs = quasi_rhs_qc(params, m, k);
            if (params.a.is_zero() || params.b.is_zero()) {
                report.kind = QuasiVerdictKind::Degenerate;
                report.holds = true;
            } else {
                report.kind = QuasiVerdictKind::IdentityRequired;
                report.holds = report.lhs == report.rhs;
            }
            break;
        default:
            break;
    }
    report.cross_check = quasinormality_defect(to_symbol(params), AnalyticPoly::monomial(k),
                                               AnalyticPoly::monomial(k), FockParams{m});
    return report;
}

QuasiReport thm31_classify(const TwoTermSymbolParams& params, int m, int k, bool as_stated) {
    check_shape(params);
    if (k <= 2 * std::max(params.p, params.t))
        throw std::domain_error("probe condition k > max(2p, 2t) violated");
    return thm31_case_values(params, m, k, as_stated);
}

SweepResult necessary_sweep(const TwoTermSymbolParams& params, int m, int k_lo, int k_hi) {
    if (k_lo > k_hi) throw std::invalid_argument("empty probe range");
    int count = k_hi - k_lo + 1;
    SweepResult result;
    result.reports.resize(count);
    parallel_for(count, [&](int i) {
        result.reports[i] = thm21_inequality(params, m, k_lo + i);
    });
    for (const auto& r : result.reports)
        if (!r.holds) {
            result.first_failing_k = r.k;
            break;
        }
    return result;
}

}  // namespace fockcalc
