#include "specstab/disc_functionals.hpp"
#include "specstab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace specstab {

ExponentBridge exponent_bridge(double p) {
    if (!(p > 2.0)) throw InvalidExponent("exponent_bridge requires p > 2");
    const double s = 2.0 * p / (p + 2.0);
    return {s, 2.0 * s / (s - 1.0)};
}

double lp_norm_deriv(const ConformalMap& map, double alpha, const QuadratureRule& rule) {
    if (alpha < 1.0) throw InvalidExponent("lp_norm_deriv requires alpha >= 1");
    const double acc = rule.integrate(
        [&](Complex z) { return std::pow(std::abs(deriv(map, z)), alpha); });
    return std::pow(acc, 1.0 / alpha);
}

double e_alpha(const ConformalMap& map1, const ConformalMap& map2, double alpha,
               const QuadratureRule& rule) {
    if (!(alpha > 2.0)) throw InvalidExponent("e_alpha requires alpha > 2");
    double acc = 0.0;
    for (const auto& n : rule.nodes) {
        const double a1 = std::abs(deriv(map1, n.z));
        const double a2 = std::abs(deriv(map2, n.z));
        const double v = std::max(std::pow(a1, alpha) / std::pow(a2, alpha - 2.0),
                                  std::pow(a2, alpha) / std::pow(a1, alpha - 2.0));
        acc += n.w * v;
        if (!std::isfinite(acc))
            throw NonFinite("e_alpha integrand degenerate at node (" +
                            std::to_string(n.z.real()) + ", " + std::to_string(n.z.imag()) + ")");
    }
    return std::pow(acc, 1.0 / alpha);
}

double d_s(const ConformalMap& map1, const ConformalMap& map2, double s,
           const QuadratureRule& rule) {
    if (!(s > 1.0 && s <= 2.0)) throw InvalidExponent("d_s requires 1 < s <= 2");
    double acc = 0.0;
    for (const auto& n : rule.nodes) {
        const double h1 = weight(map1, n.z);
        const double h2 = weight(map2, n.z);
        const double diff = std::abs(h1 - h2);
        const double mn = std::min(h1, h2);
        if (mn < 1e-14) {
            if (diff > 1e-14)
                throw NonFinite("d_s: min{h1,h2} vanishes at a node where the weights differ");
            continue; // h1 = h2 = 0 contributes nothing
        }
        acc += n.w * std::pow(diff, s) * std::pow(mn, 1.0 - s);
    }
    return std::pow(acc, 1.0 / s);
}

double l2_deriv_gap(const ConformalMap& map1, const ConformalMap& map2,
                    const QuadratureRule& rule) {
    const double acc = rule.integrate([&](Complex z) {
        const double d = std::abs(deriv(map1, z)) - std::abs(deriv(map2, z));
        return d * d;
    });
    return std::sqrt(acc);
}

double measure_variation(const ConformalMap& map1, const ConformalMap& map2,
                         const QuadratureRule& rule) {
    return rule.integrate(
        [&](Complex z) { return std::abs(weight(map1, z) - weight(map2, z)); });
}

std::pair<double, double> pair_regularity(const ConformalMap& map1, const ConformalMap& map2,
                                          double alpha, const QuadratureRule& rule) {
    if (!(alpha > 2.0)) throw InvalidExponent("pair_regularity requires alpha > 2");
    double fwd = 0.0, bwd = 0.0;
    for (const auto& n : rule.nodes) {
        const double a1 = std::abs(deriv(map1, n.z));
        const double a2 = std::abs(deriv(map2, n.z));
        fwd += n.w * std::pow(a2, alpha) * std::pow(a1, 2.0 - alpha);
        bwd += n.w * std::pow(a1, alpha) * std::pow(a2, 2.0 - alpha);
        if (!std::isfinite(fwd) || !std::isfinite(bwd))
            throw NonFinite("pair_regularity integrand degenerate");
    }
    return {fwd, bwd};
}

double domain_area(const ConformalMap& map, const QuadratureRule& rule) {
    return rule.integrate([&](Complex z) { return weight(map, z); });
}

PairFunctionals compute_pair_functionals(const ConformalMap& map1, const ConformalMap& map2,
                                         double alpha, const QuadratureRule& rule) {
    PairFunctionals f;
    f.alpha = alpha;
    f.p = alpha;
    f.s = exponent_bridge(alpha).s;
    f.lp_norm_1 = lp_norm_deriv(map1, alpha, rule);
    f.lp_norm_2 = lp_norm_deriv(map2, alpha, rule);
    f.e_alpha = e_alpha(map1, map2, alpha, rule);
    f.d_s = d_s(map1, map2, f.s, rule);
    f.l2_gap = l2_deriv_gap(map1, map2, rule);
    f.measure_variation = measure_variation(map1, map2, rule);
    f.area_1 = domain_area(map1, rule);
    f.area_2 = domain_area(map2, rule);
    return f;
}

} // namespace specstab
