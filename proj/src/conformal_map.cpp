#include "specstab/conformal_map.hpp"
#include "specstab/errors.hpp"

#include <cmath>
#include <numbers>

namespace specstab {

namespace {

Complex moebius_eval(Complex a, Complex z) {
    if (a == Complex{0.0, 0.0}) return z;
    return (z - a) / (1.0 - std::conj(a) * z);
}

Complex moebius_deriv(Complex a, Complex z) {
    if (a == Complex{0.0, 0.0}) return {1.0, 0.0};
    const Complex d = 1.0 - std::conj(a) * z;
    return (1.0 - std::norm(a)) / (d * d);
}

Complex horner(const std::vector<Complex>& coeffs, Complex u) {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
}

Complex horner_deriv(const std::vector<Complex>& coeffs, Complex u) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = coeffs.size(); j-- > 1;)
        acc = acc * u + static_cast<double>(j) * coeffs[j];
    return acc;
}

} // namespace

ConformalMap identity_map() {
    return {{0.0, 0.0}, {{0.0, 0.0}, {1.0, 0.0}}, "identity"};
}

ConformalMap scale_map(double c) {
    return {{0.0, 0.0}, {{0.0, 0.0}, {c, 0.0}}, "scale:" + std::to_string(c)};
}

ConformalMap moebius_map(Complex a) {
    if (std::abs(a) >= 1.0) throw Error("moebius parameter must satisfy |a| < 1");
    std::string lab = "moebius:" + std::to_string(a.real());
    if (a.imag() != 0.0) lab += "," + std::to_string(a.imag());
    return {a, {{0.0, 0.0}, {1.0, 0.0}}, lab};
}

ConformalMap poly_perturb_map(double eps, int k) {
    if (eps < 0.0 || eps >= 1.0) throw Error("poly_perturb requires 0 <= eps < 1");
    if (k < 2) throw Error("poly_perturb requires k >= 2");
    std::vector<Complex> c(static_cast<std::size_t>(k) + 1, Complex{0.0, 0.0});
    c[1] = {1.0, 0.0};
    c[static_cast<std::size_t>(k)] = {eps / k, 0.0};
    return {{0.0, 0.0}, std::move(c),
            "poly_perturb:" + std::to_string(eps) + "," + std::to_string(k)};
}

Complex eval(const ConformalMap& map, Complex z) {
    return horner(map.poly_coeffs, moebius_eval(map.moebius_param, z));
}

Complex deriv(const ConformalMap& map, Complex z) {
    const Complex u = moebius_eval(map.moebius_param, z);
    return horner_deriv(map.poly_coeffs, u) * moebius_deriv(map.moebius_param, z);
}

double weight(const ConformalMap& map, Complex z) {
    return std::norm(deriv(map, z));
}

UnivalenceReport check_univalent(const ConformalMap& map, int grid_n) {
    if (grid_n < 16) throw Error("check_univalent requires grid_n >= 16");
    UnivalenceReport rep;
    rep.min_abs_deriv = std::numeric_limits<double>::infinity();
    rep.re_deriv_positive = true;

    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < grid_n; ++i) {
        const double r = static_cast<double>(i + 1) / grid_n; // (0, 1]
        for (int j = 0; j < grid_n; ++j) {
            const double th = two_pi * j / grid_n;
            const Complex d = deriv(map, {r * std::cos(th), r * std::sin(th)});
            rep.min_abs_deriv = std::min(rep.min_abs_deriv, std::abs(d));
            if (d.real() <= 0.0) rep.re_deriv_positive = false;
        }
    }

    if (rep.min_abs_deriv <= 1e-12)
        throw UnivalenceSuspect("map '" + map.label + "' fails univalence check: min|phi'| = " +
                                std::to_string(rep.min_abs_deriv));

    // winding of phi(|z| = 1 - 1e-6) about phi(0)
    const Complex w0 = eval(map, {0.0, 0.0});
    const double rho = 1.0 - 1e-6;
    const int nb = 4096;
    double total = 0.0;
    Complex prev = eval(map, {rho, 0.0}) - w0;
    for (int j = 1; j <= nb; ++j) {
        const double th = two_pi * j / nb;
        const Complex cur = eval(map, {rho * std::cos(th), rho * std::sin(th)}) - w0;
        total += std::arg(cur / prev);
        prev = cur;
    }
    rep.boundary_winding = static_cast<int>(std::lround(total / two_pi));

    if (rep.boundary_winding != 1)
        throw UnivalenceSuspect("map '" + map.label + "' fails univalence check: winding = " +
                                std::to_string(rep.boundary_winding));
    return rep;
}

} // namespace specstab
