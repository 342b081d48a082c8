#pragma once

#include <stdexcept>
#include <string>

namespace trimode {

/// Base class for all typed errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter record violates one of its invariants.
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};

/// A denominator vanished or a linear system is (numerically) singular.
class SingularParameters : public Error {
public:
    explicit SingularParameters(const std::string& what) : Error(what) {}
};

/// A stochastic integration blew up; usually means the time step is too large.
class IntegrationDiverged : public Error {
public:
    explicit IntegrationDiverged(const std::string& what) : Error(what) {}
};

/// A curve contained no usable (finite) samples.
class EmptyCurve : public Error {
public:
    explicit EmptyCurve(const std::string& what) : Error(what) {}
};

}  // namespace trimode
