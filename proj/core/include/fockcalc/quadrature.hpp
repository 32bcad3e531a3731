#pragma once

// Product quadrature in polar coordinates with u = r^2: Gauss-Laguerre
// nodes on [0, inf) against e^{-u} du, and equally spaced angles. The
// radial rule integrates u-polynomials of degree <= 2R-1 exactly; the
// angular rule resolves trigonometric frequencies up to A-1.

#include <vector>

namespace fockcalc {

struct QuadratureRule {
    std::vector<double> nodes;    // u-values, ascending
    std::vector<double> weights;  // carry the e^{-u} factor
    int angular = 1;              // angles 2*pi*j/angular, j = 0..angular-1

    int radial() const { return static_cast<int>(nodes.size()); }
    int radial_exactness() const { return 2 * radial() - 1; }
    int angular_exactness() const { return angular - 1; }
};

// Nodes by Newton iteration on the Laguerre recurrence. Throws
// std::invalid_argument unless radial >= 1 and angular >= 1.
QuadratureRule gauss_laguerre_rule(int radial, int angular);

}  // namespace fockcalc
