#include <fockcalc/poly.hpp>

#include <stdexcept>

namespace fockcalc {

AnalyticPoly AnalyticPoly::monomial(int degree, GaussianRational c) {
    AnalyticPoly p;
    p.add_term(degree, c);
    return p;
}

void AnalyticPoly::add_term(int degree, const GaussianRational& c) {
    if (degree < 0) throw std::domain_error("poly: negative degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(degree, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational AnalyticPoly::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? GaussianRational() : it->second;
}

int AnalyticPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

std::complex<double> AnalyticPoly::eval(std::complex<double> z) const {
    // Horner from the highest degree down, walking the sparse gaps.
    std::complex<double> acc = 0.0;
    int prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0)
            for (int d = prev; d > it->first; --d) acc *= z;
        acc += to_complex(it->second);
        prev = it->first;
    }
    if (prev > 0)
        for (int d = prev; d > 0; --d) acc *= z;
    return acc;
}

AnalyticPoly operator+(const AnalyticPoly& f, const AnalyticPoly& g) {
    AnalyticPoly out = f;
    for (const auto& [d, c] : g.terms()) out.add_term(d, c);
    return out;
}

AnalyticPoly operator-(const AnalyticPoly& f, const AnalyticPoly& g) {
    AnalyticPoly out = f;
    for (const auto& [d, c] : g.terms()) out.add_term(d, -c);
    return out;
}

AnalyticPoly operator*(const GaussianRational& c, const AnalyticPoly& f) {
    AnalyticPoly out;
    for (const auto& [d, fc] : f.terms()) out.add_term(d, c * fc);
    return out;
}

AnalyticPoly operator*(const AnalyticPoly& f, const AnalyticPoly& g) {
    AnalyticPoly out;
    for (const auto& [df, cf] : f.terms())
        for (const auto& [dg, cg] : g.terms()) out.add_term(df + dg, cf * cg);
    return out;
}

}  // namespace fockcalc
