#include <fockcalc/quadrature.hpp>

#include <cmath>
#include <stdexcept>

namespace fockcalc {

namespace {

// Laguerre value at x for orders n and n-1 via the three-term recurrence.
void laguerre_pair(int n, double x, double& ln, double& lnm1) {
    double p1 = 1.0, p2 = 0.0;
    for (int k = 0; k < n; ++k) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * k + 1.0 - x) * p2 - k * p3) / (k + 1.0);
    }
    ln = p1;
    lnm1 = p2;
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int radial, int angular) {
    if (radial < 1 || angular < 1)
        throw std::invalid_argument("quadrature node counts must be >= 1");

    QuadratureRule rule;
    rule.angular = angular;
    rule.nodes.resize(radial);
    rule.weights.resize(radial);

    const int n = radial;
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // stock starting guesses; each root is refined by Newton below
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 2]);
        }
        double ln = 0.0, lnm1 = 0.0, pp = 0.0;
        bool settled = false;
        for (int it = 0; it < 100; ++it) {
            laguerre_pair(n, z, ln, lnm1);
            pp = n * (ln - lnm1) / z;
            double step = ln / pp;
            z -= step;
            if (std::abs(step) <= 1e-14 * std::max(1.0, z)) {
                settled = true;
                break;
            }
        }
        if (!settled) throw std::runtime_error("gauss-laguerre iteration failed to converge");
        laguerre_pair(n, z, ln, lnm1);
        pp = n * (ln - lnm1) / z;
        rule.nodes[i] = z;
        rule.weights[i] = -1.0 / (pp * n * lnm1);
    }
    return rule;
}

}  // namespace fockcalc
