#pragma once

#include <stdexcept>
#include <string>

namespace thzkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnitError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class SingularityError : public Error { using Error::Error; };
class ModeNotBoundError : public Error { using Error::Error; };
class NoResonanceError : public Error { using Error::Error; };
class IntegrationError : public Error { using Error::Error; };
class OutOfRangeError : public Error { using Error::Error; };
class MissingGeometryError : public Error { using Error::Error; };
class GrazingError : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };

/// Bad command line or sweep syntax; the CLI maps it to exit code 2.
class UsageError : public Error { using Error::Error; };

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_residual)
        : Error(what), last_residual_(last_residual) {}

    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

}  // namespace detail

}  // namespace thzkit
