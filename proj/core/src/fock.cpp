#include <fockcalc/fock.hpp>

#include <stdexcept>

namespace fockcalc {

namespace {

void check_params(FockParams params) {
    if (params.m < 0) throw std::domain_error("fock weight order m must be >= 0");
}

}  // namespace

PiScalar inner_product(const AnalyticPoly& f, const AnalyticPoly& g, FockParams params) {
    check_params(params);
    GaussianRational acc;
    // Only shared degrees contribute; iterate the sparser support.
    for (const auto& [deg, cf] : f.terms()) {
        GaussianRational cg = g.coeff(deg);
        if (cg.is_zero()) continue;
        acc = acc + cf * conj(cg) * GaussianRational(Rational(factorial(deg + params.m)));
    }
    return PiScalar(acc);
}

AnalyticPoly project_mixed(int t_bar, int s, FockParams params) {
    check_params(params);
    if (t_bar < 0 || s < 0) throw std::domain_error("monomial exponents must be >= 0");
    if (s < t_bar) return {};
    GaussianRational c{Rational(falling_ratio(s + params.m, t_bar))};
    return AnalyticPoly::monomial(s - t_bar, c);
}

AnalyticPoly toeplitz_apply(const MixedSymbol& phi, const AnalyticPoly& f, FockParams params) {
    check_params(params);
    AnalyticPoly out;
    for (const auto& term : phi.terms()) {
        for (const auto& [deg, c] : f.terms()) {
            // P(zbar^n z^{p+deg}) scaled by the combined coefficient.
            int s = term.z_pow + deg;
            if (s < term.zbar_pow) continue;
            GaussianRational w =
                term.coeff * c * GaussianRational(Rational(falling_ratio(s + params.m, term.zbar_pow)));
            out.add_term(s - term.zbar_pow, w);
        }
    }
    return out;
}

AnalyticPoly toeplitz_adjoint_apply(const MixedSymbol& phi, const AnalyticPoly& f,
                                    FockParams params) {
    return toeplitz_apply(adjoint_symbol(phi), f, params);
}

PiScalar hyponormality_form(const MixedSymbol& phi, const AnalyticPoly& f, FockParams params) {
    AnalyticPoly tf = toeplitz_apply(phi, f, params);
    AnalyticPoly tsf = toeplitz_adjoint_apply(phi, f, params);
    return inner_product(tf, tf, params) - inner_product(tsf, tsf, params);
}

PiScalar quasinormality_defect(const MixedSymbol& phi, const AnalyticPoly& f,
                               const AnalyticPoly& g, FockParams params) {
    AnalyticPoly tf = toeplitz_apply(phi, f, params);
    AnalyticPoly left = toeplitz_adjoint_apply(phi, toeplitz_apply(phi, tf, params), params);
    AnalyticPoly right = toeplitz_apply(phi, toeplitz_adjoint_apply(phi, tf, params), params);
    return inner_product(left - right, g, params);
}

PiScalar sum_decomposition(const MixedSymbol& t_sym, const MixedSymbol& s_sym,
                           const AnalyticPoly& f, FockParams params) {
    AnalyticPoly tf = toeplitz_apply(t_sym, f, params);
    AnalyticPoly tsf = toeplitz_adjoint_apply(t_sym, f, params);
    AnalyticPoly sf = toeplitz_apply(s_sym, f, params);
    AnalyticPoly ssf = toeplitz_adjoint_apply(s_sym, f, params);

    PiScalar pure_t = inner_product(tf, tf, params) - inner_product(tsf, tsf, params);
    PiScalar pure_s = inner_product(sf, sf, params) - inner_product(ssf, ssf, params);
    PiScalar cross = inner_product(tf, sf, params) - inner_product(tsf, ssf, params);
    GaussianRational two_re_cross{cross.coeff.re * Rational(2)};
    return pure_t + PiScalar(two_re_cross) + pure_s;
}

}  // namespace fockcalc
