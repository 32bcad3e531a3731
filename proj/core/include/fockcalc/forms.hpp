#pragma once

// Finite sections of the commutator and quasinormality defect forms on the
// monomial basis z^0..z^N, plus an exact positive semidefiniteness decision
// for Hermitian matrices over the Gaussian rationals.

#include <fockcalc/fock.hpp>

#include <vector>

namespace fockcalc {

// Square matrix of Gaussian rationals carrying an implicit factor of pi:
// the matrix represented is pi * entries.
struct PiMatrix {
    std::vector<std::vector<GaussianRational>> entries;

    int dim() const { return static_cast<int>(entries.size()); }
    bool operator==(const PiMatrix&) const = default;
};

// Throws std::invalid_argument if m is ragged.
bool is_hermitian(const PiMatrix& m);

// x^* (pi m) x, exactly.
PiScalar quadratic_form_value(const PiMatrix& m, const std::vector<GaussianRational>& x);

// G[j][k] = <T z^k, T z^j> - <T* z^k, T* z^j>, T = T_phi, for j, k = 0..N,
// so that x^* G x = hyponormality_form(phi, sum_k x_k z^k).
PiMatrix commutator_gram(const MixedSymbol& phi, int N, FockParams params);

// Q[j][k] = <(T*T^2 - T T*T) z^k, z^j>.  Not Hermitian in general.
PiMatrix quasi_defect_matrix(const MixedSymbol& phi, int N, FockParams params);

enum class PSDStatus { PSD, NotPSD };

struct PSDVerdict {
    PSDStatus status = PSDStatus::PSD;
    // When NotPSD: a vector with x^* m x < 0, scaled so its first nonzero
    // entry is 1; witness_value is that form value recomputed against the
    // input matrix, not against any intermediate state.
    std::vector<GaussianRational> witness;
    PiScalar witness_value;
};

// Exact decision by pivoted rational elimination.  Requires a Hermitian
// input and throws std::invalid_argument otherwise.
PSDVerdict psd_test(const PiMatrix& m);

struct ZeroScanResult {
    bool all_zero = true;
    int row = -1;
    int col = -1;
    PiScalar value;  // the entry at (row, col) when not all zero
};

// Scans quasi_defect_matrix(phi, N, params) row-major for its first nonzero
// entry.  all_zero over every N is the quasinormality certificate.
ZeroScanResult quasi_zero_test(const MixedSymbol& phi, int N, FockParams params);

}  // namespace fockcalc
