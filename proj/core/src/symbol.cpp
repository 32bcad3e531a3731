#include <fockcalc/symbol.hpp>

#include <algorithm>
#include <stdexcept>

namespace fockcalc {

MixedSymbol::MixedSymbol(std::vector<MixedTerm> terms) {
    for (const auto& t : terms) add_term(t);
}

MixedSymbol MixedSymbol::term(GaussianRational c, int z_pow, int zbar_pow) {
    MixedSymbol s;
    s.add_term({std::move(c), z_pow, zbar_pow});
    return s;
}

void MixedSymbol::add_term(const MixedTerm& t) {
    if (t.z_pow < 0 || t.zbar_pow < 0) throw std::domain_error("symbol: negative exponent");
    if (t.coeff.is_zero()) return;
    auto key = [](const MixedTerm& x) { return std::pair(x.z_pow, x.zbar_pow); };
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [&](const MixedTerm& a, const MixedTerm& b) {
                                   return key(a) < key(b);
                               });
    if (it != terms_.end() && key(*it) == key(t)) {
        it->coeff = it->coeff + t.coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, t);
    }
}

bool MixedSymbol::is_analytic() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const MixedTerm& t) { return t.zbar_pow == 0; });
}

int MixedSymbol::max_z_pow() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.z_pow);
    return m;
}

int MixedSymbol::max_zbar_pow() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.zbar_pow);
    return m;
}

MixedSymbol operator+(const MixedSymbol& a, const MixedSymbol& b) {
    MixedSymbol out = a;
    for (const auto& t : b.terms()) out.add_term(t);
    return out;
}

MixedSymbol adjoint_symbol(const MixedSymbol& s) {
    MixedSymbol out;
    for (const auto& t : s.terms()) out.add_term({conj(t.coeff), t.zbar_pow, t.z_pow});
    return out;
}

}  // namespace fockcalc
