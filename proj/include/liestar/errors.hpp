#pragma once

#include <stdexcept>
#include <string>

namespace liestar {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownNameError : Error {
    explicit UnknownNameError(const std::string& name)
        : Error("unknown catalog name: " + name) {}
};

// Requested a coefficient not divisible by the required nu-power; the input
// was not in the image of the symmetrization map.
struct NonInvertibleCoefficient : Error {
    explicit NonInvertibleCoefficient(const std::string& msg) : Error(msg) {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& msg) : Error(msg) {}
};

struct NotClassicallyIdempotent : Error {
    explicit NotClassicallyIdempotent(const std::string& msg) : Error(msg) {}
};

struct DegreeBudgetExceeded : Error {
    explicit DegreeBudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct ClassViolation : Error {
    explicit ClassViolation(const std::string& msg) : Error(msg) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct CacheIO : Error {
    explicit CacheIO(const std::string& msg) : Error(msg) {}
};

} // namespace liestar
