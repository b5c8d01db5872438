#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hmap {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside its admissible range (point outside the open disk,
/// invalid grid, radius >= 1, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A closed-form representation does not provide the requested derivative order.
struct UnsupportedOrder : Error {
    using Error::Error;
};

/// A derivative that must be nonzero (h', F', or h' + mu g') vanishes.
struct DegenerateDerivative : Error {
    using Error::Error;
};

/// Constant map passed to an operation that requires a non-constant one.
struct DegenerateMap : Error {
    using Error::Error;
};

/// The affine-transform denominator 1 + mu g'(0) vanishes.
struct SingularAffine : Error {
    using Error::Error;
};

/// 1 - omega vanishes (or |omega| >= 1) on the sampling grid.
struct DegenerateDilatation : Error {
    using Error::Error;
};

/// The dilatation exceeds the bound c assumed by a coefficient check.
struct DilatationBoundViolated : Error {
    using Error::Error;
};

/// Constants requested outside the admissible parameter region.
struct InadmissibleParameters : Error {
    using Error::Error;
};

/// Two image vertices coincide while building a mesh; carries the pair.
struct InjectivityFailure : Error {
    InjectivityFailure(const std::string& what, std::complex<double> a, std::complex<double> b)
        : Error(what), z1(a), z2(b) {}
    std::complex<double> z1{};
    std::complex<double> z2{};
};

/// No path between two mesh vertices.
struct Disconnected : Error {
    using Error::Error;
};

/// Principal-branch argument tracking hit +-pi along a ray.
struct ArgWrap : Error {
    using Error::Error;
};

}  // namespace hmap
