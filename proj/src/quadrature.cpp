#include "specstab/quadrature.hpp"
#include "specstab/errors.hpp"

#include <cmath>
#include <numbers>

namespace specstab {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    // Newton iteration on P_n from the Chebyshev-like initial guess
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p0 = 0.0, p1 = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0;
            p1 = t;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) {
                // one extra step to settle the weight
                p0 = 1.0;
                p1 = t;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                break;
            }
        }
        const double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[static_cast<std::size_t>(i)] = t;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return {std::move(x), std::move(w)};
}

QuadratureRule build_rule(int level) {
    if (level < 4) throw Error("build_rule requires level >= 4");
    QuadratureRule rule;
    rule.level = level;

    // radial: GL with level+1 points mapped to [0,1]; r dr absorbed into weights.
    // Exact for radial degree 2*level+1, enough for total degree 2*level monomials.
    const int nr = level + 1;
    auto [gx, gw] = gauss_legendre(nr);
    const int na = 4 * level;
    const double dth = 2.0 * std::numbers::pi / na;
    rule.nodes.reserve(static_cast<std::size_t>(nr) * na);
    for (int i = 0; i < nr; ++i) {
        const double r = 0.5 * (gx[static_cast<std::size_t>(i)] + 1.0);
        const double wr = 0.5 * gw[static_cast<std::size_t>(i)] * r; // dr scale * r
        for (int j = 0; j < na; ++j) {
            const double th = dth * j;
            rule.nodes.push_back({{r * std::cos(th), r * std::sin(th)}, wr * dth});
        }
    }
    return rule;
}

} // namespace specstab
