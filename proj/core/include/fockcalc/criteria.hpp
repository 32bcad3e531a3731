#pragma once

// Necessary-condition checkers for hyponormality and quasinormality of
// two-term Toeplitz symbols, evaluated exactly at monomial probes, plus the
// shift-plus-radial coefficient form and the radial coupling bound.  Every
// checker reports the engine-computed form or defect value alongside its
// own inequality so the two routes can be reconciled.

#include <fockcalc/fock.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fockcalc {

// phi = a z^p zbar^n + b z^s zbar^t with p >= n and t >= s.
struct TwoTermSymbolParams {
    GaussianRational a, b;
    int p = 0, n = 0;  // first term: z^p zbar^n, analytic-dominant
    int s = 0, t = 0;  // second term: z^s zbar^t, conjugate-dominant
};

MixedSymbol to_symbol(const TwoTermSymbolParams& params);

enum class CaseTag {
    H1,          // t > s+1, p = n+1
    H2,          // t > s+1, p > n+1
    H3,          // t = s+1, p > n+1
    OutOfScope,  // exponent shape not covered by a printed case
    Qa,          // p != n, s != t
    Qb,          // p == n, s != t
    Qc,          // p != n, s == t
    Qd,          // p == n, s == t
};

const char* to_string(CaseTag tag);

CaseTag hypo_case(const TwoTermSymbolParams& params);
CaseTag quasi_case(const TwoTermSymbolParams& params);

struct CriterionReport {
    std::string theorem;  // checker id: "thm21", "remark24", ...
    CaseTag tag = CaseTag::OutOfScope;
    int k = 0;
    Rational lhs, rhs;
    bool holds = false;    // lhs >= rhs
    PiScalar cross_check;  // hyponormality_form(phi, z^k)
};

// Bracket value of the probe form: equals pi^{-1} hyponormality_form(phi, z^k)
// whenever k > max(p, t) and |p - n| != |t - s| (the cross terms vanish and
// no projection branch clips to zero).
Rational thm21_master_value(const TwoTermSymbolParams& params, int m, int k);

// Case-resolved probe inequality.  H1/H2/OutOfScope report the coefficient
// weighted bracket sides; H3 reports the printed coefficient-free reduction,
// whose verdict can differ in sign from the form value in cross_check.
CriterionReport thm21_inequality(const TwoTermSymbolParams& params, int m, int k);

// Specialization p - n = 1 = t - s at probe k = 1.
CriterionReport remark24_check(const TwoTermSymbolParams& params, int m);

// Coefficient form for phi = z^n + C|z|^{2s} against f = sum a_k z^k.
// full_value keeps the k < n head sum; reduced_value is the statement
// variant without it and is absent when n = 0.
struct ZnCFormResult {
    PiScalar full_value;
    bool full_holds = false;
    std::optional<PiScalar> reduced_value;
    bool reduced_holds = false;
};
ZnCFormResult thm_zn_C_form(int n, int s, const GaussianRational& C, int m,
                            const AnalyticPoly& f);

// Discriminant bound on the radial coupling: (1+m)!^2 / (s^2 ((m+s)!)^2),
// always <= 1 with equality exactly at s = 1.
Rational remark27_bound(int m, int s);

enum class QuasiVerdictKind {
    AutoQuasinormal,   // diagonal defect vanishes structurally (Qa/Qd)
    IdentityRequired,  // Qb/Qc: lhs == rhs must hold at every probe
    Degenerate,        // the coefficient weighting the identity is zero
};

const char* to_string(QuasiVerdictKind kind);

struct QuasiReport {
    QuasiVerdictKind kind = QuasiVerdictKind::AutoQuasinormal;
    CaseTag tag = CaseTag::Qd;
    int k = 0;
    Rational lhs, rhs;     // identity sides for IdentityRequired
    bool holds = false;    // lhs == rhs where required, true otherwise
    PiScalar cross_check;  // quasinormality_defect(phi, z^k, z^k)
};

// Case values without the probe gate (factorial domains still enforced).
// as_stated selects the statement variant of the radial-shift identity,
// which drifts from its own derivation; the derivation is the default.
QuasiReport thm31_case_values(const TwoTermSymbolParams& params, int m, int k,
                              bool as_stated = false);

// Same, but enforces the probe condition k > max(2p, 2t).
QuasiReport thm31_classify(const TwoTermSymbolParams& params, int m, int k,
                           bool as_stated = false);

struct SweepResult {
    std::vector<CriterionReport> reports;  // one per k, ascending
    std::optional<int> first_failing_k;
};

// thm21_inequality across k = k_lo..k_hi inclusive.
SweepResult necessary_sweep(const TwoTermSymbolParams& params, int m, int k_lo, int k_hi);

}  // namespace fockcalc
