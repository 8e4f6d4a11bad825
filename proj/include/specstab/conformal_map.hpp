#ifndef SPECSTAB_CONFORMAL_MAP_HPP
#define SPECSTAB_CONFORMAL_MAP_HPP

#include <complex>
#include <string>
#include <vector>

namespace specstab {

using Complex = std::complex<double>;

/// Conformal map of the unit disc of the form phi(z) = P(m(z)), where
/// m(z) = (z - a)/(1 - conj(a) z) is a disc automorphism (|a| < 1, identity
/// for a = 0) and P(u) = c_0 + c_1 u + ... + c_m u^m. Derivatives are exact:
/// phi'(z) = P'(m(z)) m'(z). The family is closed under the operations the
/// weighted eigenproblem needs and contains all built-in test maps.
struct ConformalMap {
    Complex moebius_param{0.0, 0.0};
    std::vector<Complex> poly_coeffs; // c_0 ... c_m
    std::string label;
};

struct UnivalenceReport {
    double min_abs_deriv = 0.0;
    bool re_deriv_positive = false;
    int boundary_winding = 0;
};

// built-in constructors; all pass check_univalent by construction
ConformalMap identity_map();
ConformalMap scale_map(double c);
ConformalMap moebius_map(Complex a);
// z + (eps/k) z^k, 0 <= eps < 1, k >= 2
ConformalMap poly_perturb_map(double eps, int k);

Complex eval(const ConformalMap& map, Complex z);
Complex deriv(const ConformalMap& map, Complex z);

/// Conformal weight h(z) = |phi'(z)|^2, the Jacobian of phi.
double weight(const ConformalMap& map, Complex z);

/// Evaluates phi' on a grid_n x grid_n polar grid of the closed disc.
/// Reports min |phi'|, whether Re phi' > 0 everywhere (Noshiro-Warschawski
/// sufficient condition, informational only), and the winding number of
/// phi restricted to |z| = 1 - 1e-6 about an interior sample point.
/// Throws UnivalenceSuspect if min |phi'| <= 1e-12 or winding != 1.
UnivalenceReport check_univalent(const ConformalMap& map, int grid_n = 64);

} // namespace specstab

#endif
