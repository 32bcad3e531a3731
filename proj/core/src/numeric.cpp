#include <fockcalc/numeric.hpp>

#include <fockcalc/fock.hpp>
#include <fockcalc/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fockcalc {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

void check_order(int m) {
    if (m < 0) throw std::domain_error("weight order m must be >= 0");
}

void require_radial(const QuadratureRule& rule, int need) {
    if (rule.radial_exactness() < need)
        throw InsufficientExactness("insufficient exactness: radial rule integrates u-degree <= " +
                                    std::to_string(rule.radial_exactness()) + ", need " +
                                    std::to_string(need));
}

void require_angular(const QuadratureRule& rule, int need) {
    if (rule.angular_exactness() < need)
        throw InsufficientExactness("insufficient exactness: angular rule resolves frequency <= " +
                                    std::to_string(rule.angular_exactness()) + ", need " +
                                    std::to_string(need));
}

void require_kernel(const KernelEvaluator& kernel, int need) {
    if (kernel.truncation() < need)
        throw InsufficientExactness("insufficient exactness: kernel truncation " +
                                    std::to_string(kernel.truncation()) + ", need " +
                                    std::to_string(need));
}

double real_pow(double base, int exp) {
    double acc = 1.0;
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

cplx cplx_pow(cplx base, int exp) {
    cplx acc = 1.0;
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

double factorial_d(int n) { return factorial(n).convert_to<double>(); }

// Gaussian elimination with partial pivoting; a is overwritten.
std::vector<cplx> solve_dense(std::vector<std::vector<cplx>> a, std::vector<cplx> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        if (std::abs(a[col][col]) == 0.0)
            throw std::runtime_error("singular least-squares system");
        for (int r = col + 1; r < n; ++r) {
            cplx f = a[r][col] / a[col][col];
            if (f == cplx(0.0)) continue;
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<cplx> x(n);
    for (int r = n - 1; r >= 0; --r) {
        cplx acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

}  // namespace

KernelEvaluator::KernelEvaluator(int m, int truncation) : m_(m), trunc_(truncation) {
    if (m < 0) throw std::domain_error("kernel weight order m must be >= 0");
    if (truncation < 0) throw std::domain_error("kernel truncation must be >= 0");
    coeff_.resize(trunc_ + 1);
    coeff_[0] = 1.0;
    for (int n = 1; n <= trunc_; ++n) coeff_[n] = coeff_[n - 1] / (m_ + n);
}

cplx KernelEvaluator::operator()(cplx z, cplx w) const {
    cplx x = z * std::conj(w);
    cplx acc = coeff_[trunc_];
    for (int n = trunc_ - 1; n >= 0; --n) acc = acc * x + coeff_[n];
    return acc;
}

double KernelEvaluator::tail_bound(double rho) const {
    double first = coeff_[trunc_] / (m_ + trunc_ + 1) * real_pow(rho, trunc_ + 1);
    double ratio = rho / (m_ + trunc_ + 2);
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return first / (1.0 - ratio);
}

QuadratureRule rule_for_pairing(int deg_f, int deg_g, int m) {
    check_order(m);
    deg_f = std::max(deg_f, 0);
    deg_g = std::max(deg_g, 0);
    int R = (deg_f + deg_g + m) / 2 + 1;
    int A = deg_f + deg_g + 1;
    return gauss_laguerre_rule(R, A);
}

QuadratureRule rule_for_apply(const MixedSymbol& phi, const AnalyticPoly& f, int m) {
    check_order(m);
    if (phi.is_zero() || f.is_zero()) return gauss_laguerre_rule(1, 1);
    int truncation = phi.max_z_pow() + f.degree() + 8;
    int R = (phi.max_z_pow() + phi.max_zbar_pow() + f.degree() + m) / 2 + 1;
    int A = truncation + phi.max_zbar_pow() + 1;
    return gauss_laguerre_rule(R, A);
}

cplx numeric_inner_product(const AnalyticPoly& f, const AnalyticPoly& g, int m,
                           const QuadratureRule& rule) {
    check_order(m);
    if (f.is_zero() || g.is_zero()) return 0.0;
    require_radial(rule, f.degree() + g.degree() + m);
    require_angular(rule, f.degree() + g.degree());

    const int A = rule.angular;
    const int R = rule.radial();
    std::vector<cplx> partial(A);
    parallel_for(A, [&](int j) {
        cplx e = std::polar(1.0, 2.0 * kPi * j / A);
        cplx acc = 0.0;
        for (int i = 0; i < R; ++i) {
            double u = rule.nodes[i];
            cplx w = std::sqrt(u) * e;
            acc += rule.weights[i] * f.eval(w) * std::conj(g.eval(w)) * real_pow(u, m);
        }
        partial[j] = acc;
    });
    cplx total = 0.0;
    for (int j = 0; j < A; ++j) total += partial[j];  // fixed-order reduction
    return total * (kPi / A);                         // (1/2) du dtheta substitution
}

cplx numeric_kernel_apply(const MixedSymbol& g, int m, const QuadratureRule& rule,
                          const KernelEvaluator& kernel, cplx z) {
    check_order(m);
    if (kernel.order() != m)
        throw std::invalid_argument("kernel weight order does not match m");
    if (g.is_zero()) return 0.0;

    int need_kernel = 0, need_radial = 0, max_zbar = 0, max_z = 0;
    for (const MixedTerm& t : g.terms()) {
        need_kernel = std::max(need_kernel, t.z_pow - t.zbar_pow);
        need_radial = std::max(need_radial, t.z_pow + t.zbar_pow);
        max_zbar = std::max(max_zbar, t.zbar_pow);
        max_z = std::max(max_z, t.z_pow);
    }
    require_kernel(kernel, need_kernel);
    require_radial(rule, need_radial + m);
    require_angular(rule, std::max(max_z, kernel.truncation() + max_zbar));

    const int A = rule.angular;
    const int R = rule.radial();
    std::vector<cplx> partial(A);
    parallel_for(A, [&](int j) {
        cplx e = std::polar(1.0, 2.0 * kPi * j / A);
        cplx acc = 0.0;
        for (int i = 0; i < R; ++i) {
            double u = rule.nodes[i];
            cplx w = std::sqrt(u) * e;
            cplx gval = 0.0;
            for (const MixedTerm& t : g.terms())
                gval += to_complex(t.coeff) * cplx_pow(w, t.z_pow) *
                        std::conj(cplx_pow(w, t.zbar_pow));
            acc += rule.weights[i] * gval * kernel(z, w) * real_pow(u, m);
        }
        partial[j] = acc;
    });
    cplx total = 0.0;
    for (int j = 0; j < A; ++j) total += partial[j];
    // (pi/A) angular measure against the 1/(pi m!) prefactor
    return total / (A * factorial_d(m));
}

ProjectionEstimate numeric_project(int s, int t_bar, int m, const QuadratureRule& rule,
                                   const KernelEvaluator& kernel,
                                   const std::vector<cplx>& eval_points) {
    if (s < 0 || t_bar < 0) throw std::domain_error("monomial exponents must be >= 0");
    check_order(m);
    require_kernel(kernel, std::max(s - t_bar, 0));

    const int deg = std::max(s - t_bar, 0);
    const int P = static_cast<int>(eval_points.size());
    if (P < deg + 1)
        throw std::invalid_argument("not enough evaluation points for the fit degree");

    MixedSymbol g = MixedSymbol::term(GaussianRational(1), s, t_bar);
    std::vector<cplx> values(P);
    for (int q = 0; q < P; ++q)
        values[q] = numeric_kernel_apply(g, m, rule, kernel, eval_points[q]);

    // least squares through the sampled values via the normal equations
    std::vector<std::vector<cplx>> vand(P, std::vector<cplx>(deg + 1));
    for (int q = 0; q < P; ++q)
        for (int d = 0; d <= deg; ++d) vand[q][d] = cplx_pow(eval_points[q], d);
    std::vector<std::vector<cplx>> normal(deg + 1, std::vector<cplx>(deg + 1));
    std::vector<cplx> rhs(deg + 1);
    for (int a = 0; a <= deg; ++a) {
        for (int b = 0; b <= deg; ++b) {
            cplx acc = 0.0;
            for (int q = 0; q < P; ++q) acc += std::conj(vand[q][a]) * vand[q][b];
            normal[a][b] = acc;
        }
        cplx acc = 0.0;
        for (int q = 0; q < P; ++q) acc += std::conj(vand[q][a]) * values[q];
        rhs[a] = acc;
    }

    ProjectionEstimate est;
    est.coeffs = solve_dense(std::move(normal), std::move(rhs));
    for (int q = 0; q < P; ++q) {
        cplx fit = 0.0;
        for (int d = 0; d <= deg; ++d) fit += est.coeffs[d] * vand[q][d];
        est.residual = std::max(est.residual, std::abs(fit - values[q]));
    }
    return est;
}

ComparisonReport compare_exact_numeric(const MixedSymbol& phi, const AnalyticPoly& f, int m,
                                       const QuadratureRule& rule, double tol) {
    check_order(m);
    ComparisonReport rep;
    rep.nodes_radial = rule.radial();
    rep.nodes_angular = rule.angular;
    if (phi.is_zero() || f.is_zero()) {
        rep.pass = true;
        return rep;
    }

    AnalyticPoly exact = toeplitz_apply(phi, f, FockParams{m});
    const int D = phi.max_z_pow() + f.degree();
    KernelEvaluator kernel(m, D + 8);
    rep.kernel_truncation = kernel.truncation();

    MixedSymbol product;
    for (const MixedTerm& t : phi.terms())
        for (const auto& [k, c] : f.terms())
            product.add_term({t.coeff * c, t.z_pow + k, t.zbar_pow});

    // coefficients of the numeric image off samples on the unit circle
    const int Q = D + 1;
    std::vector<cplx> values(Q);
    for (int q = 0; q < Q; ++q) {
        cplx z = std::polar(1.0, 2.0 * kPi * q / Q);
        values[q] = numeric_kernel_apply(product, m, rule, kernel, z);
    }

    double scale = 0.0;
    for (int d = 0; d <= D; ++d) scale = std::max(scale, std::abs(to_complex(exact.coeff(d))));
    if (scale == 0.0) scale = 1.0;

    for (int d = 0; d <= D; ++d) {
        cplx numeric = 0.0;
        for (int q = 0; q < Q; ++q)
            numeric += values[q] * std::polar(1.0, -2.0 * kPi * q * d / Q);
        numeric /= static_cast<double>(Q);
        cplx want = to_complex(exact.coeff(d));
        double err;
        if (want == cplx(0.0))
            err = std::abs(numeric) <= 1e-12 * scale ? 0.0 : std::abs(numeric) / scale;
        else
            err = std::abs(numeric - want) / std::abs(want);
        rep.max_rel_err = std::max(rep.max_rel_err, err);
    }
    rep.pass = rep.max_rel_err <= tol;
    return rep;
}

}  // namespace fockcalc
