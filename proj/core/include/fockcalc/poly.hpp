#pragma once

// Entire polynomials in z with Gaussian-rational coefficients, stored
// sparsely by degree. The zero coefficient is never stored, so two
// equal polynomials always compare equal structurally.

#include <fockcalc/scalar.hpp>

#include <complex>
#include <map>

namespace fockcalc {

class AnalyticPoly {
  public:
    AnalyticPoly() = default;

    static AnalyticPoly monomial(int degree, GaussianRational c = GaussianRational(1));

    // Adds c*z^degree, merging with an existing term. degree must be >= 0.
    void add_term(int degree, const GaussianRational& c);

    GaussianRational coeff(int degree) const;
    // Largest degree present, or -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, GaussianRational>& terms() const { return terms_; }

    std::complex<double> eval(std::complex<double> z) const;

    friend bool operator==(const AnalyticPoly&, const AnalyticPoly&) = default;

  private:
    std::map<int, GaussianRational> terms_;
};

AnalyticPoly operator+(const AnalyticPoly& f, const AnalyticPoly& g);
AnalyticPoly operator-(const AnalyticPoly& f, const AnalyticPoly& g);
AnalyticPoly operator*(const GaussianRational& c, const AnalyticPoly& f);
AnalyticPoly operator*(const AnalyticPoly& f, const AnalyticPoly& g);

}  // namespace fockcalc
