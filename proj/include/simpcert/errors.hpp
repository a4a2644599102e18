#pragma once

#include <stdexcept>

namespace simpcert {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the interval or function domain it must belong to.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A function name is not present in the registry.
class UnknownFunctionError : public Error {
public:
    using Error::Error;
};

/// A finite-difference stencil point would leave the function's domain.
class StencilOutOfDomain : public Error {
public:
    using Error::Error;
};

/// The reference quadrature hit its subdivision cap before stabilizing.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Sampled total-variation sums kept growing at the grid cap; the function
/// is numerically not of bounded variation.
class TVDiverging : public Error {
public:
    using Error::Error;
};

/// Adaptive refinement hit the cell cap before certifying the tolerance.
class ToleranceUnreachable : public Error {
public:
    using Error::Error;
};

/// A bound hypothesis failed and the caller asked for rejection.
class HypothesisFailed : public Error {
public:
    using Error::Error;
};

}  // namespace simpcert
