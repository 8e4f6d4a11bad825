#ifndef SPECSTAB_ERRORS_HPP
#define SPECSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specstab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// conformal map validation
struct UnivalenceSuspect : Error {
    using Error::Error;
};

// integral functionals
struct NonFinite : Error {
    using Error::Error;
};
struct InvalidExponent : Error {
    using Error::Error;
};

// finite elements / eigensolver
struct DegenerateTriangle : Error {
    using Error::Error;
};
struct NonpositiveWeight : Error {
    using Error::Error;
};
struct ZeroDenominator : Error {
    using Error::Error;
};
struct ConvergenceFailure : Error {
    using Error::Error;
};

// stability checks
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};

struct LemmaViolation : Error {
    int n;
    double gap;
    double bound;
    LemmaViolation(const std::string& msg, int n_, double gap_, double bound_)
        : Error(msg), n(n_), gap(gap_), bound(bound_) {}
};

// quasidisc geometry
struct InvalidK : Error {
    using Error::Error;
};
struct InvalidCurve : Error {
    using Error::Error;
};

// harness
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace specstab

#endif
