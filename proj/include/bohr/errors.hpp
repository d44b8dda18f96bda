#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series coefficient became non-finite or exceeded the overflow ceiling.
class SeriesOverflow : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature did not reach its tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double achieved)
        : Error(what), achieved_error(achieved) {}
    double achieved_error;
};

/// No sign change of the target function on the search interval.
class NoRootError : public Error {
public:
    NoRootError(const std::string& what, double g_lo, double g_hi)
        : Error(what), g_lo(g_lo), g_hi(g_hi) {}
    double g_lo;
    double g_hi;
};

}  // namespace bohr
