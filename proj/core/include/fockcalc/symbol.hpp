#pragma once

// Non-harmonic polynomial symbols: finite sums  c * z^p * zbar^n.
// Terms are kept merged by (p, n) and sorted, so symbols have one
// canonical representation.

#include <fockcalc/scalar.hpp>

#include <vector>

namespace fockcalc {

struct MixedTerm {
    GaussianRational coeff;
    int z_pow = 0;     // exponent of z
    int zbar_pow = 0;  // exponent of conj(z)

    friend bool operator==(const MixedTerm&, const MixedTerm&) = default;
};

class MixedSymbol {
  public:
    MixedSymbol() = default;
    explicit MixedSymbol(std::vector<MixedTerm> terms);

    static MixedSymbol term(GaussianRational c, int z_pow, int zbar_pow);

    void add_term(const MixedTerm& t);
    const std::vector<MixedTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True when every term has zbar_pow == 0.
    bool is_analytic() const;
    int max_z_pow() const;
    int max_zbar_pow() const;

    friend bool operator==(const MixedSymbol&, const MixedSymbol&) = default;

  private:
    std::vector<MixedTerm> terms_;  // sorted by (z_pow, zbar_pow), no zero coeffs
};

MixedSymbol operator+(const MixedSymbol& a, const MixedSymbol& b);

// Symbol of the adjoint operator: conjugate coefficients, swap powers.
MixedSymbol adjoint_symbol(const MixedSymbol& s);

}  // namespace fockcalc
