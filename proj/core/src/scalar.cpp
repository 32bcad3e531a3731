#include <fockcalc/scalar.hpp>

#include <cctype>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace fockcalc {

namespace {

std::shared_mutex g_fact_mutex;
std::vector<BigInt> g_fact_memo{BigInt(1)};  // g_fact_memo[n] == n!

}  // namespace

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    {
        std::shared_lock lock(g_fact_mutex);
        if (static_cast<size_t>(n) < g_fact_memo.size()) return g_fact_memo[n];
    }
    std::unique_lock lock(g_fact_mutex);
    while (g_fact_memo.size() <= static_cast<size_t>(n)) {
        g_fact_memo.push_back(g_fact_memo.back() * BigInt(g_fact_memo.size()));
    }
    return g_fact_memo[n];
}

BigInt falling_ratio(int s, int t) {
    if (t < 0 || s < 0 || t > s) throw std::domain_error("falling_ratio: requires 0 <= t <= s");
    BigInt r = 1;
    for (int i = 0; i < t; ++i) r *= (s - i);
    return r;
}

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

// Parses [sign] digits [ '/' digits ] starting at pos; advances pos.
Rational parse_rational_at(const std::string& s, size_t& pos) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0)
        throw std::invalid_argument("rational: expected digits at position " +
                                    std::to_string(start));
    BigInt num(s.substr(d0, pos - d0));
    BigInt den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t d1 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d1)
            throw std::invalid_argument("rational: expected denominator digits at position " +
                                        std::to_string(pos));
        den = BigInt(s.substr(d1, pos - d1));
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    size_t pos = 0;
    Rational r = parse_rational_at(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("rational: trailing characters at position " +
                                    std::to_string(pos));
    return r;
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("gaussian rational: division by zero");
    const Rational d = abs_sq(b);
    GaussianRational num = a * conj(b);
    return {num.re / d, num.im / d};
}

GaussianRational conj(const GaussianRational& a) { return {a.re, -a.im}; }

Rational abs_sq(const GaussianRational& a) { return a.re * a.re + a.im * a.im; }

std::complex<double> to_complex(const GaussianRational& a) {
    return {to_double(a.re), to_double(a.im)};
}

std::string to_string(const GaussianRational& a) {
    if (a.is_zero()) return "0";
    if (a.im == 0) return to_string(a.re);
    std::string imag = to_string(a.im) + "*i";
    if (a.re == 0) return imag;
    if (a.im > 0) return to_string(a.re) + "+" + imag;
    return to_string(a.re) + imag;  // the sign rides on the coefficient
}

GaussianRational parse_gaussian(const std::string& text) {
    std::string s = text;
    // Allow one enclosing pair of parentheses.
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw std::invalid_argument("gaussian rational: empty input");

    GaussianRational out;
    bool have_re = false, have_im = false;
    size_t pos = 0;
    int terms = 0;
    while (pos < s.size()) {
        if (++terms > 2)
            throw std::invalid_argument("gaussian rational: too many terms");
        // A term is  [sign] ( 'i' | rational [['*'] 'i'] ).
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
            if (pos >= s.size())
                throw std::invalid_argument("gaussian rational: dangling sign");
        }
        Rational mag;
        bool imag = false;
        if (s[pos] == 'i') {
            mag = 1;
            imag = true;
            ++pos;
        } else {
            mag = parse_rational_at(s, pos);
            if (pos < s.size() && (s[pos] == '*' || s[pos] == 'i')) {
                if (s[pos] == '*') {
                    if (pos + 1 >= s.size() || s[pos + 1] != 'i')
                        throw std::invalid_argument(
                            "gaussian rational: expected 'i' at position " +
                            std::to_string(pos + 1));
                    pos += 2;
                } else {
                    ++pos;
                }
                imag = true;
            }
        }
        if (neg) mag = -mag;
        if (imag) {
            if (have_im)
                throw std::invalid_argument("gaussian rational: duplicate imaginary part");
            out.im = mag;
            have_im = true;
        } else {
            if (have_re)
                throw std::invalid_argument("gaussian rational: duplicate real part");
            out.re = mag;
            have_re = true;
        }
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw std::invalid_argument("gaussian rational: unexpected character at position " +
                                        std::to_string(pos));
    }
    return out;
}

PiScalar operator+(const PiScalar& a, const PiScalar& b) { return PiScalar(a.coeff + b.coeff); }
PiScalar operator-(const PiScalar& a, const PiScalar& b) { return PiScalar(a.coeff - b.coeff); }
PiScalar operator-(const PiScalar& a) { return PiScalar(-a.coeff); }
PiScalar operator*(const PiScalar& a, const GaussianRational& s) { return PiScalar(a.coeff * s); }
PiScalar operator*(const PiScalar& a, const Rational& s) {
    return PiScalar(a.coeff * GaussianRational(s));
}

int sign(const PiScalar& p) {
    if (!p.is_real()) throw std::logic_error("pi scalar: sign of a non-real value");
    if (p.coeff.re > 0) return 1;
    if (p.coeff.re < 0) return -1;
    return 0;
}

std::string to_string(const PiScalar& p) {
    if (p.is_zero()) return "0";
    std::string c = to_string(p.coeff);
    if (!p.coeff.is_real() && p.coeff.re != 0) c = "(" + c + ")";
    return c + "*pi";
}

PiScalar parse_pi_scalar(const std::string& text) {
    if (text == "0") return PiScalar();
    const std::string suffix = "*pi";
    if (text.size() <= suffix.size() ||
        text.compare(text.size() - suffix.size(), suffix.size(), suffix) != 0)
        throw std::invalid_argument("pi scalar: expected '<coeff>*pi' or '0'");
    return PiScalar(parse_gaussian(text.substr(0, text.size() - suffix.size())));
}

double to_double(const PiScalar& p) {
    if (!p.is_real()) throw std::logic_error("pi scalar: to_double of a non-real value");
    return to_double(p.coeff.re) * std::numbers::pi;
}

}  // namespace fockcalc
