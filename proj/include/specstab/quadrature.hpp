#ifndef SPECSTAB_QUADRATURE_HPP
#define SPECSTAB_QUADRATURE_HPP

#include <complex>
#include <utility>
#include <vector>

#include "specstab/conformal_map.hpp"

namespace specstab {

/// Polar tensor rule over the unit disc: Gauss-Legendre in radius on [0,1]
/// against the measure r dr, uniform trapezoid in angle. Exact (to rounding)
/// for bivariate polynomials of total degree <= 2*level.
struct QuadratureRule {
    struct Node {
        Complex z;
        double w;
    };
    std::vector<Node> nodes;
    int level = 0;

    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (const Node& n : nodes) acc += n.w * f(n.z);
        return acc;
    }
};

QuadratureRule build_rule(int level);

/// Gauss-Legendre nodes/weights on [-1, 1], n points.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

} // namespace specstab

#endif
