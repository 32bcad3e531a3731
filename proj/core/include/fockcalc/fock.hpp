#pragma once

// Toeplitz calculus on polynomial subspaces of the weighted Fock space.
//
// The ambient inner product is <z^s, z^t> = pi * (s+m)! * delta_{st} for an
// integer weight order m >= 0.  All operations below stay in exact rational
// arithmetic; pi is carried symbolically as a PiScalar unit.

#include <fockcalc/poly.hpp>
#include <fockcalc/scalar.hpp>
#include <fockcalc/symbol.hpp>

namespace fockcalc {

struct FockParams {
    int m = 1;
};

// <f, g> in the weighted space.  Conjugate-linear in g.
PiScalar inner_product(const AnalyticPoly& f, const AnalyticPoly& g, FockParams params);

// Orthogonal projection of the mixed monomial zbar^t_bar * z^s back onto the
// analytic part: ((s+m)!/(s-t_bar+m)!) z^{s-t_bar} when s >= t_bar, else 0.
AnalyticPoly project_mixed(int t_bar, int s, FockParams params);

// T_phi f = P(phi * f) and its adjoint T_phi^* f = P(conj(phi) * f).
AnalyticPoly toeplitz_apply(const MixedSymbol& phi, const AnalyticPoly& f, FockParams params);
AnalyticPoly toeplitz_adjoint_apply(const MixedSymbol& phi, const AnalyticPoly& f,
                                    FockParams params);

// ||T_phi f||^2 - ||T_phi^* f||^2.  Nonnegative for every polynomial f of
// bounded degree exactly when T_phi is hyponormal on that subspace.
PiScalar hyponormality_form(const MixedSymbol& phi, const AnalyticPoly& f, FockParams params);

// <(T_phi^* T_phi^2 - T_phi T_phi^* T_phi) f, g>; identically zero over the
// subspace exactly when T_phi is quasinormal there.
PiScalar quasinormality_defect(const MixedSymbol& phi, const AnalyticPoly& f,
                               const AnalyticPoly& g, FockParams params);

// Expansion of hyponormality_form(t_sym + s_sym, f) into the pure and cross
// contributions of the two summands:
//   (||Tf||^2 - ||T*f||^2) + 2 Re(<Tf,Sf> - <T*f,S*f>) + (||Sf||^2 - ||S*f||^2)
// with T = T_{t_sym}, S = T_{s_sym}.  Computing it this way and comparing
// against the one-shot form is a useful consistency probe.
PiScalar sum_decomposition(const MixedSymbol& t_sym, const MixedSymbol& s_sym,
                           const AnalyticPoly& f, FockParams params);

}  // namespace fockcalc
