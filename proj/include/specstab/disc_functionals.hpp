#ifndef SPECSTAB_DISC_FUNCTIONALS_HPP
#define SPECSTAB_DISC_FUNCTIONALS_HPP

#include "specstab/conformal_map.hpp"
#include "specstab/quadrature.hpp"

namespace specstab {

/// Every integral functional a stability bound consumes, for one map pair,
/// evaluated on one shared quadrature rule.
struct PairFunctionals {
    double alpha = 0.0; // integrability exponent used for e_alpha (> 2)
    double s = 0.0;     // weight-distance exponent, s = 2p/(p+2) in (1, 2]
    double p = 0.0;     // exponent behind s (> 2)
    double lp_norm_1 = 0.0;
    double lp_norm_2 = 0.0;
    double e_alpha = 0.0;
    double d_s = 0.0;
    double l2_gap = 0.0;
    double measure_variation = 0.0;
    double area_1 = 0.0;
    double area_2 = 0.0;
};

struct ExponentBridge {
    double s; // 2p/(p+2)
    double q; // 2s/(s-1) = 4p/(p-2)
};

/// s and q induced by an integrability exponent p > 2.
ExponentBridge exponent_bridge(double p);

/// (integral of |phi'|^alpha)^(1/alpha)
double lp_norm_deriv(const ConformalMap& map, double alpha, const QuadratureRule& rule);

/// Pair-regularity functional
/// E_alpha = (integral of max{|phi1'|^a / |phi2'|^(a-2), |phi2'|^a / |phi1'|^(a-2)})^(1/a).
/// Finite iff the pair is alpha-regular at quadrature resolution.
double e_alpha(const ConformalMap& map1, const ConformalMap& map2, double alpha,
               const QuadratureRule& rule);

/// Weight distance d_s = (integral of |h1-h2|^s min{h1,h2}^(1-s))^(1/s), 1 < s <= 2.
/// Throws NonFinite when min{h1,h2} vanishes at a node where the weights differ.
double d_s(const ConformalMap& map1, const ConformalMap& map2, double s,
           const QuadratureRule& rule);

/// (integral of (|phi1'| - |phi2'|)^2)^(1/2)
double l2_deriv_gap(const ConformalMap& map1, const ConformalMap& map2,
                    const QuadratureRule& rule);

/// integral of |J_phi1 - J_phi2| over the disc; equals the image-area
/// variation [meas phi1(D+) - meas phi2(D+)] + [meas phi2(D-) - meas phi1(D-)]
/// by change of variables on D+ = {J1 >= J2} and D- = {J1 < J2}.
double measure_variation(const ConformalMap& map1, const ConformalMap& map2,
                         const QuadratureRule& rule);

/// The two transfer integrals of the composed map psi = phi2 o phi1^{-1}:
/// first  = integral of |phi2'|^alpha |phi1'|^(2-alpha)  ( = int_{Omega1} |psi'|^alpha )
/// second = integral of |phi1'|^alpha |phi2'|^(2-alpha)  ( = int_{Omega2} |(psi^-1)'|^alpha )
std::pair<double, double> pair_regularity(const ConformalMap& map1, const ConformalMap& map2,
                                          double alpha, const QuadratureRule& rule);

/// integral of h = |Omega| (area of the image domain)
double domain_area(const ConformalMap& map, const QuadratureRule& rule);

/// All functionals for one pair at exponent alpha (p = alpha, s = 2p/(p+2)).
PairFunctionals compute_pair_functionals(const ConformalMap& map1, const ConformalMap& map2,
                                         double alpha, const QuadratureRule& rule);

} // namespace specstab

#endif
