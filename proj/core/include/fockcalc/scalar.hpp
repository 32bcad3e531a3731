#pragma once

// Exact scalar layer: arbitrary-precision integers and rationals
// (boost::multiprecision), Gaussian rationals, and rational multiples
// of pi. Everything here is exact; nothing converts through floating
// point unless explicitly asked to via to_double().

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace fockcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n!, memoized. Safe to call from several threads at once.
BigInt factorial(int n);

// s!/(s-t)! as the falling product s(s-1)...(s-t+1); the two large
// factorials are never formed. Requires 0 <= t <= s.
BigInt falling_ratio(int s, int t);

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int n) : re(n) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
// Throws std::domain_error when b == 0.
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

GaussianRational conj(const GaussianRational& a);
Rational abs_sq(const GaussianRational& a);
std::string to_string(const GaussianRational& a);
GaussianRational parse_gaussian(const std::string& text);
std::complex<double> to_complex(const GaussianRational& a);

// A Gaussian-rational multiple of pi. Pi is kept symbolic so that
// values like -221580*pi compare and print exactly.
struct PiScalar {
    GaussianRational coeff;

    PiScalar() = default;
    explicit PiScalar(GaussianRational c) : coeff(std::move(c)) {}

    bool is_zero() const { return coeff.is_zero(); }
    bool is_real() const { return coeff.is_real(); }

    friend bool operator==(const PiScalar&, const PiScalar&) = default;
};

PiScalar operator+(const PiScalar& a, const PiScalar& b);
PiScalar operator-(const PiScalar& a, const PiScalar& b);
PiScalar operator-(const PiScalar& a);
PiScalar operator*(const PiScalar& a, const GaussianRational& s);
PiScalar operator*(const PiScalar& a, const Rational& s);

// -1 / 0 / +1 by the sign of the (real) coefficient. The comparison is
// exact; a PiScalar with nonzero imaginary part has no sign and the
// call throws std::logic_error.
int sign(const PiScalar& p);

std::string to_string(const PiScalar& p);
PiScalar parse_pi_scalar(const std::string& text);
double to_double(const PiScalar& p);

}  // namespace fockcalc
