#pragma once

// Floating-point oracle for the exact engine. Every integral here is a
// polynomial times the radial weight u^m e^{-u} in polar coordinates,
// so a large enough product rule evaluates it exactly up to rounding;
// rules that are too small raise InsufficientExactness instead of
// returning a quietly wrong number.

#include <fockcalc/poly.hpp>
#include <fockcalc/quadrature.hpp>
#include <fockcalc/symbol.hpp>

#include <complex>
#include <stdexcept>
#include <vector>

namespace fockcalc {

class InsufficientExactness : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Truncated series sum_{n<=M} m!/(n+m)! (z*conj(w))^n.
class KernelEvaluator {
  public:
    KernelEvaluator(int m, int truncation);

    int order() const { return m_; }
    int truncation() const { return trunc_; }

    std::complex<double> operator()(std::complex<double> z, std::complex<double> w) const;

    // Majorant for the omitted tail at |z*conj(w)| = rho; infinity once
    // rho reaches the next series denominator and the geometric bound
    // no longer applies.
    double tail_bound(double rho) const;

  private:
    int m_ = 0;
    int trunc_ = 0;
    std::vector<double> coeff_;
};

// Smallest rule whose exactness covers a pairing of the given degrees,
// respectively the action of phi on f, at weight order m.
QuadratureRule rule_for_pairing(int deg_f, int deg_g, int m);
QuadratureRule rule_for_apply(const MixedSymbol& phi, const AnalyticPoly& f, int m);

// Quadrature value of integral f(z) conj(g(z)) |z|^{2m} e^{-|z|^2} dA.
std::complex<double> numeric_inner_product(const AnalyticPoly& f, const AnalyticPoly& g, int m,
                                           const QuadratureRule& rule);

// Quadrature value of (1/(pi m!)) integral g(w) K(z, w) |w|^{2m} e^{-|w|^2} dA(w),
// the projection of the mixed polynomial g evaluated at z.
std::complex<double> numeric_kernel_apply(const MixedSymbol& g, int m, const QuadratureRule& rule,
                                          const KernelEvaluator& kernel, std::complex<double> z);

struct ProjectionEstimate {
    std::vector<std::complex<double>> coeffs;  // indexed by degree
    double residual = 0.0;                     // max |fit - sample| over the points
};

// Projects zbar^t_bar z^s by quadrature at the given points and fits a
// polynomial of degree max(s - t_bar, 0) through the values.
ProjectionEstimate numeric_project(int s, int t_bar, int m, const QuadratureRule& rule,
                                   const KernelEvaluator& kernel,
                                   const std::vector<std::complex<double>>& eval_points);

struct ComparisonReport {
    double max_rel_err = 0.0;
    int nodes_radial = 0;
    int nodes_angular = 0;
    int kernel_truncation = 0;
    bool pass = false;
};

// Applies the operator for phi to f both exactly and by quadrature and
// compares coefficientwise. Discrepancies are relative to the exact
// coefficient, or to the largest exact coefficient where the exact
// value is zero; numeric dust below 1e-12 of that scale counts as zero.
ComparisonReport compare_exact_numeric(const MixedSymbol& phi, const AnalyticPoly& f, int m,
                                       const QuadratureRule& rule, double tol = 1e-8);

}  // namespace fockcalc
